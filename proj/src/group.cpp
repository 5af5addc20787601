#include "hopfind/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace hopfind {

namespace {

std::string perm_cycle_label(const std::vector<long>& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<long>(i)) continue;
        out += "(";
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            out += std::to_string(j + 1);
            j = static_cast<std::size_t>(p[j]);
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

std::vector<std::vector<long>> permutations_of(long n) {
    std::vector<long> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<long>> all;
    do {
        all.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return all;
}

bool perm_is_even(const std::vector<long>& p) {
    long inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) ++inversions;
        }
    }
    return inversions % 2 == 0;
}

FiniteGroup from_permutations(std::vector<std::vector<long>> perms) {
    std::sort(perms.begin(), perms.end());
    std::map<std::vector<long>, long> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<long>(i);
    long n = static_cast<long>(perms.size());
    std::vector<std::vector<long>> table(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            std::vector<long> prod(perms[0].size());
            for (std::size_t x = 0; x < prod.size(); ++x) {
                prod[x] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][x])];
            }
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index.at(prod);
        }
    }
    std::vector<std::string> labels;
    for (const auto& p : perms) labels.push_back(perm_cycle_label(p));
    return FiniteGroup::from_table(std::move(table), std::move(labels));
}

}  // namespace

void FiniteGroup::finish_and_validate() {
    n_ = static_cast<long>(labels_.size());
    // closure / well-formedness
    for (long a = 0; a < n_; ++a) {
        for (long b = 0; b < n_; ++b) {
            long v = mul(a, b);
            if (v < 0 || v >= n_) throw InvalidGroupTable("entry out of range", a, b, v);
        }
    }
    // identity
    identity_ = -1;
    for (long e = 0; e < n_; ++e) {
        bool ok = true;
        for (long a = 0; a < n_ && ok; ++a) {
            if (mul(e, a) != a || mul(a, e) != a) ok = false;
        }
        if (ok) { identity_ = e; break; }
    }
    if (identity_ < 0) throw InvalidGroupTable("no identity element", -1, -1, -1);
    // inverses
    inv_.assign(static_cast<std::size_t>(n_), -1);
    for (long a = 0; a < n_; ++a) {
        for (long b = 0; b < n_; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) { inv_[static_cast<std::size_t>(a)] = b; break; }
        }
        if (inv_[static_cast<std::size_t>(a)] < 0) throw InvalidGroupTable("missing inverse", a, -1, -1);
    }
    // associativity
    for (long a = 0; a < n_; ++a) {
        for (long b = 0; b < n_; ++b) {
            long ab = mul(a, b);
            for (long c = 0; c < n_; ++c) {
                if (mul(ab, c) != mul(a, mul(b, c))) throw InvalidGroupTable("associativity fails", a, b, c);
            }
        }
    }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<long>> table, std::vector<std::string> labels) {
    FiniteGroup g;
    long n = static_cast<long>(table.size());
    g.mul_.resize(static_cast<std::size_t>(n * n));
    for (long a = 0; a < n; ++a) {
        if (static_cast<long>(table[static_cast<std::size_t>(a)].size()) != n) {
            throw InvalidGroupTable("ragged table", a, -1, -1);
        }
        for (long b = 0; b < n; ++b) {
            g.mul_[static_cast<std::size_t>(a * n + b)] = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        }
    }
    if (labels.empty()) {
        for (long i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    }
    g.labels_ = std::move(labels);
    g.finish_and_validate();
    return g;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(long n) {
    std::vector<std::vector<long>> table(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    }
    std::vector<std::string> labels;
    for (long i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "g^" + std::to_string(i));
    return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(long n) {
    long m = 2 * n;
    auto idx = [n](long s, long r) { return s * n + r; };
    std::vector<std::vector<long>> table(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m)));
    for (long s1 = 0; s1 < 2; ++s1) {
        for (long r1 = 0; r1 < n; ++r1) {
            for (long s2 = 0; s2 < 2; ++s2) {
                for (long r2 = 0; r2 < n; ++r2) {
                    // (s^a r^i)(s^b r^j) = s^{a+b} r^{j + (-1)^b i}
                    long s = (s1 + s2) % 2;
                    long r = ((s2 ? n - r1 : r1) + r2) % n;
                    table[static_cast<std::size_t>(idx(s1, r1))][static_cast<std::size_t>(idx(s2, r2))] = idx(s, r);
                }
            }
        }
    }
    std::vector<std::string> labels;
    for (long s = 0; s < 2; ++s) {
        for (long r = 0; r < n; ++r) {
            std::string l = s ? "s" : "";
            if (r > 0) l += (l.empty() ? "" : "*") + std::string("r^") + std::to_string(r);
            labels.push_back(l.empty() ? "e" : l);
        }
    }
    return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(long n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric(n) supports 1 <= n <= 5");
    return from_permutations(permutations_of(n));
}

FiniteGroup FiniteGroup::alternating(long n) {
    if (n < 1 || n > 5) throw std::invalid_argument("alternating(n) supports 1 <= n <= 5");
    std::vector<std::vector<long>> evens;
    for (auto& p : permutations_of(n)) {
        if (perm_is_even(p)) evens.push_back(std::move(p));
    }
    return from_permutations(std::move(evens));
}

FiniteGroup FiniteGroup::quaternion8() {
    // order: 1, -1, i, -i, j, -j, k, -k
    auto enc = [](long unit, long sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
    // unit multiplication over {1,i,j,k} with sign
    auto unit_mul = [](long a, long b, long& sign) {
        static const long tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const long sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign = sgn[a][b];
        return tbl[a][b];
    };
    std::vector<std::vector<long>> table(8, std::vector<long>(8));
    for (long a = 0; a < 8; ++a) {
        for (long b = 0; b < 8; ++b) {
            long sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
            long s = 0;
            long u = unit_mul(a / 2, b / 2, s);
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = enc(u, sa * sb * s);
        }
    }
    return from_table(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    long n = a.order() * b.order();
    std::vector<std::vector<long>> table(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
    auto idx = [&](long x, long y) { return x * b.order() + y; };
    for (long x1 = 0; x1 < a.order(); ++x1) {
        for (long y1 = 0; y1 < b.order(); ++y1) {
            for (long x2 = 0; x2 < a.order(); ++x2) {
                for (long y2 = 0; y2 < b.order(); ++y2) {
                    table[static_cast<std::size_t>(idx(x1, y1))][static_cast<std::size_t>(idx(x2, y2))] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    std::vector<std::string> labels;
    for (long x = 0; x < a.order(); ++x) {
        for (long y = 0; y < b.order(); ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
    }
    return from_table(std::move(table), std::move(labels));
}

long FiniteGroup::power(long a, long k) const {
    long r = identity_;
    if (k < 0) {
        a = inverse(a);
        k = -k;
    }
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

long FiniteGroup::element_order(long a) const {
    long r = a, o = 1;
    while (r != identity_) {
        r = mul(r, a);
        ++o;
    }
    return o;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (long a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
    return e;
}

std::vector<std::vector<long>> FiniteGroup::conjugacy_classes() const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::vector<std::vector<long>> classes;
    for (long a = 0; a < n_; ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        std::set<long> cls;
        for (long g = 0; g < n_; ++g) cls.insert(mul(mul(g, a), inverse(g)));
        std::vector<long> v(cls.begin(), cls.end());
        for (long x : v) seen[static_cast<std::size_t>(x)] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

std::vector<long> FiniteGroup::subgroup_closure(std::vector<long> gens) const {
    std::set<long> s{identity_};
    std::vector<long> frontier{identity_};
    for (long g : gens) {
        if (s.insert(g).second) frontier.push_back(g);
    }
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long a : frontier) {
            for (long b : s) {
                for (long p : {mul(a, b), mul(b, a), inverse(a)}) {
                    if (s.insert(p).second) next.push_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    return {s.begin(), s.end()};
}

std::vector<std::vector<long>> FiniteGroup::subgroups() const {
    std::set<std::vector<long>> found;
    found.insert({identity_});
    std::vector<std::vector<long>> frontier{{identity_}};
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& h : frontier) {
            for (long g = 0; g < n_; ++g) {
                if (std::binary_search(h.begin(), h.end(), g)) continue;
                std::vector<long> gens = h;
                gens.push_back(g);
                auto closure = subgroup_closure(gens);
                if (found.insert(closure).second) next.push_back(std::move(closure));
            }
        }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

bool GroupHom::is_valid() const {
    if (!source || !target || images.size() != static_cast<std::size_t>(source->order())) return false;
    if (images[static_cast<std::size_t>(source->identity())] != target->identity()) return false;
    for (long a = 0; a < source->order(); ++a) {
        for (long b = 0; b < source->order(); ++b) {
            if (target->mul(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]) !=
                images[static_cast<std::size_t>(source->mul(a, b))]) {
                return false;
            }
        }
    }
    return true;
}

bool GroupHom::is_bijective() const {
    std::set<long> img(images.begin(), images.end());
    return static_cast<long>(img.size()) == source->order() && source->order() == target->order();
}

namespace {

// words expressing every element in terms of the generator list
std::vector<std::vector<long>> generator_words(const FiniteGroup& g, const std::vector<long>& gens) {
    std::vector<std::vector<long>> words(static_cast<std::size_t>(g.order()));
    std::vector<bool> have(static_cast<std::size_t>(g.order()), false);
    have[static_cast<std::size_t>(g.identity())] = true;
    std::vector<long> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long a : frontier) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                long b = g.mul(a, gens[gi]);
                if (!have[static_cast<std::size_t>(b)]) {
                    have[static_cast<std::size_t>(b)] = true;
                    words[static_cast<std::size_t>(b)] = words[static_cast<std::size_t>(a)];
                    words[static_cast<std::size_t>(b)].push_back(static_cast<long>(gi));
                    next.push_back(b);
                }
            }
        }
        frontier = std::move(next);
    }
    return words;
}

std::vector<long> minimal_generators(const FiniteGroup& g) {
    std::vector<long> gens;
    std::vector<long> closure{g.identity()};
    while (static_cast<long>(closure.size()) < g.order()) {
        for (long a = 0; a < g.order(); ++a) {
            if (!std::binary_search(closure.begin(), closure.end(), a)) {
                gens.push_back(a);
                closure = g.subgroup_closure(gens);
                break;
            }
        }
    }
    return gens;
}

}  // namespace

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, long cap) {
    if (a.order() != b.order()) return false;
    if (a.order() > cap || b.order() > cap) {
        throw std::invalid_argument("is_isomorphic: order exceeds cap " + std::to_string(cap));
    }
    std::multiset<long> oa, ob;
    for (long x = 0; x < a.order(); ++x) oa.insert(a.element_order(x));
    for (long x = 0; x < b.order(); ++x) ob.insert(b.element_order(x));
    if (oa != ob) return false;

    std::vector<long> gens = minimal_generators(a);
    auto words = generator_words(a, gens);
    std::vector<std::vector<long>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        long o = a.element_order(gens[i]);
        for (long y = 0; y < b.order(); ++y) {
            if (b.element_order(y) == o) candidates[i].push_back(y);
        }
    }
    std::vector<long> choice(gens.size(), -1);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == gens.size()) {
            GroupHom h{&a, &b, std::vector<long>(static_cast<std::size_t>(a.order()))};
            for (long x = 0; x < a.order(); ++x) {
                long img = b.identity();
                for (long gi : words[static_cast<std::size_t>(x)]) img = b.mul(img, choice[static_cast<std::size_t>(gi)]);
                h.images[static_cast<std::size_t>(x)] = img;
            }
            return h.is_bijective() && h.is_valid();
        }
        for (long y : candidates[i]) {
            choice[i] = y;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

MatchedPair::MatchedPair(FiniteGroup f, FiniteGroup g, std::vector<long> act_left, std::vector<long> act_right)
    : f_(std::move(f)), g_(std::move(g)), actl_(std::move(act_left)), actr_(std::move(act_right)) {
    const long nf = f_.order(), ng = g_.order();
    if (actl_.size() != static_cast<std::size_t>(nf * ng) || actr_.size() != static_cast<std::size_t>(nf * ng)) {
        throw std::invalid_argument("matched pair: action table sizes");
    }
    auto bad = [](const std::string& what) { return std::invalid_argument("matched pair axiom fails: " + what); };
    for (long x = 0; x < ng; ++x) {
        if (left_act(x, f_.identity()) != f_.identity()) throw bad("x |> 1 = 1");
        if (right_act(x, f_.identity()) != x) throw bad("x <| 1 = x");
    }
    for (long b = 0; b < nf; ++b) {
        if (left_act(g_.identity(), b) != b) throw bad("1 |> b = b");
        if (right_act(g_.identity(), b) != g_.identity()) throw bad("1 <| b = 1");
    }
    for (long x = 0; x < ng; ++x) {
        for (long y = 0; y < ng; ++y) {
            for (long b = 0; b < nf; ++b) {
                if (left_act(g_.mul(x, y), b) != left_act(x, left_act(y, b))) throw bad("|> is a left action");
                if (right_act(g_.mul(x, y), b) !=
                    g_.mul(right_act(x, left_act(y, b)), right_act(y, b))) {
                    throw bad("xy <| b = (x <| (y |> b))(y <| b)");
                }
            }
        }
    }
    for (long x = 0; x < ng; ++x) {
        for (long b = 0; b < nf; ++b) {
            for (long c = 0; c < nf; ++c) {
                if (right_act(right_act(x, b), c) != right_act(x, f_.mul(b, c))) throw bad("<| is a right action");
                if (left_act(x, f_.mul(b, c)) !=
                    f_.mul(left_act(x, b), left_act(right_act(x, b), c))) {
                    throw bad("x |> bc = (x |> b)((x <| b) |> c)");
                }
            }
        }
    }
}

MatchedPair MatchedPair::trivial(FiniteGroup f, FiniteGroup g) {
    const long nf = f.order(), ng = g.order();
    std::vector<long> al(static_cast<std::size_t>(nf * ng)), ar(static_cast<std::size_t>(nf * ng));
    for (long x = 0; x < ng; ++x) {
        for (long b = 0; b < nf; ++b) {
            al[static_cast<std::size_t>(x * nf + b)] = b;
            ar[static_cast<std::size_t>(x * nf + b)] = x;
        }
    }
    return MatchedPair(std::move(f), std::move(g), std::move(al), std::move(ar));
}

MatchedPair matched_pair_from_factorization(const FiniteGroup& l, const std::vector<long>& f_sub,
                                            const std::vector<long>& g_sub) {
    const long nf = static_cast<long>(f_sub.size()), ng = static_cast<long>(g_sub.size());
    if (nf * ng != l.order()) {
        throw NotExactFactorization("|F| * |G| = " + std::to_string(nf * ng) + " != " + std::to_string(l.order()));
    }
    for (long x : g_sub) {
        if (x != l.identity() && std::find(f_sub.begin(), f_sub.end(), x) != f_sub.end()) {
            throw NotExactFactorization("F and G intersect beyond the identity");
        }
    }
    // every element must factor uniquely as a * x with a in F, x in G
    std::vector<std::pair<long, long>> decomp(static_cast<std::size_t>(l.order()), {-1, -1});
    for (long ai = 0; ai < nf; ++ai) {
        for (long xi = 0; xi < ng; ++xi) {
            long prod = l.mul(f_sub[static_cast<std::size_t>(ai)], g_sub[static_cast<std::size_t>(xi)]);
            if (decomp[static_cast<std::size_t>(prod)].first >= 0) {
                throw NotExactFactorization("duplicate product " + l.label(prod));
            }
            decomp[static_cast<std::size_t>(prod)] = {ai, xi};
        }
    }
    // build subgroup tables
    auto subgroup_of = [&](const std::vector<long>& elems, const char* name) {
        long n = static_cast<long>(elems.size());
        std::vector<std::vector<long>> table(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
        std::vector<std::string> labels;
        for (long i = 0; i < n; ++i) labels.push_back(l.label(elems[static_cast<std::size_t>(i)]));
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                long p = l.mul(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
                auto it = std::find(elems.begin(), elems.end(), p);
                if (it == elems.end()) throw NotExactFactorization(std::string(name) + " is not a subgroup");
                table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<long>(it - elems.begin());
            }
        }
        return FiniteGroup::from_table(std::move(table), std::move(labels));
    };
    FiniteGroup f = subgroup_of(f_sub, "F");
    FiniteGroup g = subgroup_of(g_sub, "G");
    std::vector<long> al(static_cast<std::size_t>(nf * ng)), ar(static_cast<std::size_t>(nf * ng));
    for (long xi = 0; xi < ng; ++xi) {
        for (long ai = 0; ai < nf; ++ai) {
            long prod = l.mul(g_sub[static_cast<std::size_t>(xi)], f_sub[static_cast<std::size_t>(ai)]);
            auto [fa, gx] = decomp[static_cast<std::size_t>(prod)];
            al[static_cast<std::size_t>(xi * nf + ai)] = fa;
            ar[static_cast<std::size_t>(xi * nf + ai)] = gx;
        }
    }
    return MatchedPair(std::move(f), std::move(g), std::move(al), std::move(ar));
}

FiniteGroup double_group(const MatchedPair& mp) {
    const FiniteGroup& f = mp.F();
    const FiniteGroup& g = mp.G();
    long n = f.order() * g.order();
    auto idx = [&](long a, long x) { return a * g.order() + x; };
    std::vector<std::vector<long>> table(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
    for (long a = 0; a < f.order(); ++a) {
        for (long x = 0; x < g.order(); ++x) {
            for (long b = 0; b < f.order(); ++b) {
                for (long y = 0; y < g.order(); ++y) {
                    table[static_cast<std::size_t>(idx(a, x))][static_cast<std::size_t>(idx(b, y))] =
                        idx(f.mul(a, mp.left_act(x, b)), g.mul(mp.right_act(x, b), y));
                }
            }
        }
    }
    std::vector<std::string> labels;
    for (long a = 0; a < f.order(); ++a) {
        for (long x = 0; x < g.order(); ++x) labels.push_back("(" + f.label(a) + "," + g.label(x) + ")");
    }
    return FiniteGroup::from_table(std::move(table), std::move(labels));
}

long count_power_solutions(const MatchedPair& mp, long a, long n) {
    FiniteGroup d = double_group(mp);
    long count = 0;
    long ng = mp.G().order();
    for (long x = 0; x < ng; ++x) {
        if (d.power(a * ng + x, n) == d.identity()) ++count;
    }
    return count;
}

std::vector<std::pair<std::vector<long>, std::vector<long>>> exact_factorizations(const FiniteGroup& l) {
    auto subs = l.subgroups();
    std::vector<std::pair<std::vector<long>, std::vector<long>>> out;
    for (const auto& f : subs) {
        for (const auto& g : subs) {
            if (static_cast<long>(f.size() * g.size()) != l.order()) continue;
            std::vector<long> inter;
            std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(inter));
            if (inter.size() != 1) continue;
            // |F||G| = |L| and trivial intersection already force F*G = L
            out.emplace_back(f, g);
        }
    }
    return out;
}

}  // namespace hopfind
