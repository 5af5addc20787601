#include "hopfind/rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hopfind {

Matrix HModule::action_of(const Vec& element) const {
    Matrix out(dim, dim);
    for (long i = 0; i < parent->dim; ++i) {
        const CycScalar& c = element[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        out = out + c * actions[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<AxiomViolation> validate_module(const HModule& m) {
    std::vector<AxiomViolation> report;
    const HopfAlgebra& h = *m.parent;
    if (static_cast<long>(m.actions.size()) != h.dim) {
        report.push_back({"action count", {}});
        return report;
    }
    if (!m.action_of(h.unit).is_identity()) report.push_back({"action of unit", {}});
    for (long i = 0; i < h.dim; ++i) {
        for (long j = 0; j < h.dim; ++j) {
            Matrix lhs = m.actions[static_cast<std::size_t>(i)] * m.actions[static_cast<std::size_t>(j)];
            Matrix rhs(m.dim, m.dim);
            for (long k = 0; k < h.dim; ++k) {
                const CycScalar& c = h.mul.at(i, j, k);
                if (!c.is_zero()) rhs = rhs + c * m.actions[static_cast<std::size_t>(k)];
            }
            if (lhs != rhs) report.push_back({"representation property", {i, j}});
        }
    }
    return report;
}

void require_module(const HModule& m, const std::string& context) {
    auto report = validate_module(m);
    if (!report.empty()) throw std::logic_error(context + ": module axioms violated: " + describe(report));
}

HModule module_from_actions(const HopfAlgebra& h, std::vector<Matrix> actions) {
    HModule m;
    m.parent = &h;
    m.dim = actions.empty() ? 0 : actions[0].rows();
    m.actions = std::move(actions);
    require_module(m, "module_from_actions");
    return m;
}

HModule regular_module(const HopfAlgebra& h) {
    std::vector<Matrix> actions;
    for (long i = 0; i < h.dim; ++i) actions.push_back(h.left_mult_matrix(i));
    HModule m;
    m.parent = &h;
    m.dim = h.dim;
    m.actions = std::move(actions);
    return m;
}

HModule one_dim_module(const HopfAlgebra& h, const Vec& phi) {
    if (phi.size() != static_cast<std::size_t>(h.dim)) throw NotAnAlgebraCharacter("length mismatch");
    if (vec_dot(phi, h.unit) != CycScalar(1)) throw NotAnAlgebraCharacter("phi(1) != 1");
    for (long i = 0; i < h.dim; ++i) {
        for (long j = 0; j < h.dim; ++j) {
            CycScalar rhs;
            for (long k = 0; k < h.dim; ++k) {
                const CycScalar& c = h.mul.at(i, j, k);
                if (!c.is_zero()) rhs += c * phi[static_cast<std::size_t>(k)];
            }
            if (phi[static_cast<std::size_t>(i)] * phi[static_cast<std::size_t>(j)] != rhs) {
                throw NotAnAlgebraCharacter("multiplicativity fails at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
        }
    }
    HModule m;
    m.parent = &h;
    m.dim = 1;
    for (long i = 0; i < h.dim; ++i) {
        Matrix a(1, 1);
        a.at(0, 0) = phi[static_cast<std::size_t>(i)];
        m.actions.push_back(std::move(a));
    }
    return m;
}

HModule trivial_module(const HopfAlgebra& h) { return one_dim_module(h, h.counit); }

HModule direct_sum(const HModule& a, const HModule& b) {
    if (a.parent != b.parent) throw ShapeMismatch("direct_sum: different parents");
    HModule m;
    m.parent = a.parent;
    m.dim = a.dim + b.dim;
    for (long i = 0; i < a.parent->dim; ++i) {
        Matrix blk(m.dim, m.dim);
        for (long r = 0; r < a.dim; ++r) {
            for (long c = 0; c < a.dim; ++c) blk.at(r, c) = a.actions[static_cast<std::size_t>(i)].at(r, c);
        }
        for (long r = 0; r < b.dim; ++r) {
            for (long c = 0; c < b.dim; ++c) {
                blk.at(a.dim + r, a.dim + c) = b.actions[static_cast<std::size_t>(i)].at(r, c);
            }
        }
        m.actions.push_back(std::move(blk));
    }
    return m;
}

HModule tensor_module(const HopfAlgebra& tensor_parent, const HModule& a, const HModule& b) {
    const long da = a.parent->dim, db = b.parent->dim;
    if (tensor_parent.dim != da * db) throw ShapeMismatch("tensor_module: parent is not the tensor algebra");
    HModule m;
    m.parent = &tensor_parent;
    m.dim = a.dim * b.dim;
    for (long i = 0; i < da; ++i) {
        for (long j = 0; j < db; ++j) {
            m.actions.push_back(kron(a.actions[static_cast<std::size_t>(i)], b.actions[static_cast<std::size_t>(j)]));
        }
    }
    return m;
}

HModule contragredient_module(const HopfAlgebra& op_parent, const HModule& m) {
    if (op_parent.dim != m.parent->dim) throw ShapeMismatch("contragredient: dim mismatch");
    HModule out;
    out.parent = &op_parent;
    out.dim = m.dim;
    for (const Matrix& a : m.actions) out.actions.push_back(a.transpose());
    return out;
}

Character character_of(const HModule& m) {
    Character chi;
    chi.parent = m.parent;
    for (const Matrix& a : m.actions) chi.values.push_back(a.trace());
    return chi;
}

IndicatorEngine::IndicatorEngine(const HopfAlgebra& h) : eng_(h), lambda_(normalized_integral(h).coords) {}

CycScalar IndicatorEngine::of_character(const Vec& chi, long n) {
    return vec_dot(chi, eng_.power(n).apply(lambda_));
}

CycScalar IndicatorEngine::of_module(const HModule& m, long n) {
    return of_character(character_of(m).values, n);
}

CycScalar indicator(const HModule& m, long n) {
    IndicatorEngine eng(*m.parent);
    return eng.of_module(m, n);
}

long fs_exponent(const HopfAlgebra& h) {
    long e = exponent(h);
    IndicatorEngine eng(h);
    Vec chi = character_of(regular_module(h)).values;
    for (long n = 1; n <= e; ++n) {
        if (eng.of_character(chi, n) == CycScalar(h.dim)) return n;
    }
    throw FsExpExceedsExpBound();
}

namespace {

struct Fp {
    long p;
    long add(long a, long b) const { return (a + b) % p; }
    long sub(long a, long b) const { return ((a - b) % p + p) % p; }
    long mul(long a, long b) const { return static_cast<long>((static_cast<__int128>(a) * b) % p); }
    long pow(long a, long e) const {
        long r = 1 % p;
        a %= p;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    long inv(long a) const { return pow(((a % p) + p) % p, p - 2); }
};

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

using FpMatrix = std::vector<std::vector<long>>;

// kernel basis of (m - lambda I) over F_p, vectors as columns
std::vector<std::vector<long>> fp_eigenspace(const Fp& fp, FpMatrix m, long lambda) {
    const long n = static_cast<long>(m.size());
    for (long i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = fp.sub(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], lambda);
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < n && row < n; ++col) {
        long pr = -1;
        for (long r = row; r < n; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { pr = r; break; }
        }
        if (pr < 0) continue;
        std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(pr)]);
        long inv = fp.inv(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
        for (long c = 0; c < n; ++c) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = fp.mul(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)], inv);
        for (long r = 0; r < n; ++r) {
            if (r == row) continue;
            long f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (long c = 0; c < n; ++c) {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    fp.sub(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], fp.mul(f, m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (long pcol : pivots) is_pivot[static_cast<std::size_t>(pcol)] = true;
    std::vector<std::vector<long>> basis;
    for (long free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<long> v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<std::size_t>(pivots[r])] = fp.sub(0, m[r][static_cast<std::size_t>(free)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

CharTable dixon_char_table(const FiniteGroup& g, long order_cap) {
    if (g.order() > order_cap) {
        throw std::invalid_argument("dixon_char_table: group order " + std::to_string(g.order()) +
                                    " exceeds cap " + std::to_string(order_cap));
    }
    const long n = g.order();
    auto classes = g.conjugacy_classes();
    const long r = static_cast<long>(classes.size());
    std::vector<long> class_of(static_cast<std::size_t>(n));
    std::vector<long> reps(static_cast<std::size_t>(r));
    for (long c = 0; c < r; ++c) {
        reps[static_cast<std::size_t>(c)] = classes[static_cast<std::size_t>(c)][0];
        for (long x : classes[static_cast<std::size_t>(c)]) class_of[static_cast<std::size_t>(x)] = c;
    }
    const long e = g.exponent();

    long p = 0;
    double lower = 2.0 * std::sqrt(static_cast<double>(n));
    for (long cand = e + 1;; cand += e) {
        if (cand > 100000) throw PrimeSearchFailed();
        if (static_cast<double>(cand) > lower && is_prime(cand)) { p = cand; break; }
    }
    Fp fp{p};

    // class multiplication constants: c_i c_j = sum_k a_{ijk} c_k
    std::vector<FpMatrix> cmats(static_cast<std::size_t>(r), FpMatrix(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0)));
    for (long i = 0; i < r; ++i) {
        for (long j = 0; j < r; ++j) {
            std::vector<long> count(static_cast<std::size_t>(r), 0);
            for (long x : classes[static_cast<std::size_t>(i)]) {
                for (long y : classes[static_cast<std::size_t>(j)]) {
                    long z = g.mul(x, y);
                    // count products landing on the representative of their class
                    if (z == reps[static_cast<std::size_t>(class_of[static_cast<std::size_t>(z)])]) {
                        ++count[static_cast<std::size_t>(class_of[static_cast<std::size_t>(z)])];
                    }
                }
            }
            for (long k = 0; k < r; ++k) cmats[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = count[static_cast<std::size_t>(k)] % p;
        }
    }

    // split the common eigenspaces of all class matrices
    std::vector<std::vector<std::vector<long>>> spaces;
    {
        std::vector<std::vector<long>> whole;
        for (long i = 0; i < r; ++i) {
            std::vector<long> v(static_cast<std::size_t>(r), 0);
            v[static_cast<std::size_t>(i)] = 1;
            whole.push_back(std::move(v));
        }
        spaces.push_back(std::move(whole));
    }
    for (long i = 0; i < r; ++i) {
        bool all_one_dim = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
        if (all_one_dim) break;
        std::vector<std::vector<std::vector<long>>> next;
        for (auto& space : spaces) {
            if (space.size() == 1) {
                next.push_back(std::move(space));
                continue;
            }
            const long dimspace = static_cast<long>(space.size());
            // action of cmats[i] on the subspace: solve V B = A V columnwise
            FpMatrix av(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(dimspace), 0));
            for (long c = 0; c < dimspace; ++c) {
                for (long row = 0; row < r; ++row) {
                    long s = 0;
                    for (long k = 0; k < r; ++k) {
                        s = fp.add(s, fp.mul(cmats[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)][static_cast<std::size_t>(k)], space[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)]));
                    }
                    av[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = s;
                }
            }
            // express columns of av in the basis `space`: gaussian solve over F_p
            // build matrix with columns = space vectors, augmented by av columns
            const long cols = dimspace;
            FpMatrix aug(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(cols + dimspace), 0));
            for (long row = 0; row < r; ++row) {
                for (long c = 0; c < cols; ++c) aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = space[static_cast<std::size_t>(c)][static_cast<std::size_t>(row)];
                for (long c = 0; c < dimspace; ++c) aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols + c)] = av[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            }
            long row = 0;
            std::vector<long> pivots;
            for (long col = 0; col < cols && row < r; ++col) {
                long pr = -1;
                for (long rr = row; rr < r; ++rr) {
                    if (aug[static_cast<std::size_t>(rr)][static_cast<std::size_t>(col)] != 0) { pr = rr; break; }
                }
                if (pr < 0) continue;
                std::swap(aug[static_cast<std::size_t>(row)], aug[static_cast<std::size_t>(pr)]);
                long inv = fp.inv(aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
                for (long c = 0; c < cols + dimspace; ++c) aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = fp.mul(aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)], inv);
                for (long rr = 0; rr < r; ++rr) {
                    if (rr == row) continue;
                    long f = aug[static_cast<std::size_t>(rr)][static_cast<std::size_t>(col)];
                    if (f == 0) continue;
                    for (long c = 0; c < cols + dimspace; ++c) {
                        aug[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)] = fp.sub(aug[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)], fp.mul(f, aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]));
                    }
                }
                pivots.push_back(col);
                ++row;
            }
            FpMatrix b(static_cast<std::size_t>(dimspace), std::vector<long>(static_cast<std::size_t>(dimspace), 0));
            for (std::size_t pr2 = 0; pr2 < pivots.size(); ++pr2) {
                for (long c = 0; c < dimspace; ++c) {
                    b[static_cast<std::size_t>(pivots[pr2])][static_cast<std::size_t>(c)] = aug[pr2][static_cast<std::size_t>(cols + c)];
                }
            }
            // eigen-split b by scanning all residues
            std::vector<std::vector<std::vector<long>>> pieces;
            long dims_found = 0;
            for (long lambda = 0; lambda < p && dims_found < dimspace; ++lambda) {
                auto ker = fp_eigenspace(fp, b, lambda);
                if (ker.empty()) continue;
                if (static_cast<long>(ker.size()) == dimspace) { pieces.clear(); dims_found = dimspace; break; }
                dims_found += static_cast<long>(ker.size());
                // map back to ambient coordinates
                std::vector<std::vector<long>> sub;
                for (auto& kv : ker) {
                    std::vector<long> amb(static_cast<std::size_t>(r), 0);
                    for (long c = 0; c < dimspace; ++c) {
                        for (long row2 = 0; row2 < r; ++row2) {
                            amb[static_cast<std::size_t>(row2)] = fp.add(amb[static_cast<std::size_t>(row2)], fp.mul(kv[static_cast<std::size_t>(c)], space[static_cast<std::size_t>(c)][static_cast<std::size_t>(row2)]));
                        }
                    }
                    sub.push_back(std::move(amb));
                }
                pieces.push_back(std::move(sub));
            }
            if (dims_found != dimspace) throw LiftAmbiguous("class matrix is not semisimple over F_p");
            if (pieces.empty()) {
                next.push_back(std::move(space));  // cmats[i] is scalar here
            } else {
                for (auto& piece : pieces) next.push_back(std::move(piece));
            }
        }
        spaces = std::move(next);
    }
    // collect remaining eigenvalues: every space must now be 1-dimensional
    for (auto& s : spaces) {
        if (s.size() != 1) throw LiftAmbiguous("class algebra did not split over F_p");
    }

    const long id_class = class_of[static_cast<std::size_t>(g.identity())];
    // class of inverses
    std::vector<long> inv_class(static_cast<std::size_t>(r));
    for (long c = 0; c < r; ++c) inv_class[static_cast<std::size_t>(c)] = class_of[static_cast<std::size_t>(g.inverse(reps[static_cast<std::size_t>(c)]))];

    long gen = 0;  // generator of F_p^*, by direct order check (p is small)
    for (long cand = 2; cand < p; ++cand) {
        long x = cand, order = 1;
        while (x != 1) {
            x = fp.mul(x, cand);
            ++order;
        }
        if (order == p - 1) { gen = cand; break; }
    }
    if (gen == 0) throw PrimeSearchFailed();
    long z = fp.pow(gen, (p - 1) / e);  // primitive e-th root mod p

    CharTable table;
    for (const auto& s : spaces) {
        std::vector<long> w = s[0];
        if (w[static_cast<std::size_t>(id_class)] == 0) throw LiftAmbiguous("eigenvector vanishes at the identity class");
        long norm = fp.inv(w[static_cast<std::size_t>(id_class)]);
        for (auto& x : w) x = fp.mul(x, norm);
        // degree: d^2 = |G| / sum_j w_j w_{jbar} / |C_j|
        long denom = 0;
        for (long j = 0; j < r; ++j) {
            long term = fp.mul(w[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(inv_class[static_cast<std::size_t>(j)])]);
            term = fp.mul(term, fp.inv(static_cast<long>(classes[static_cast<std::size_t>(j)].size()) % p));
            denom = fp.add(denom, term);
        }
        long d2 = fp.mul(n % p, fp.inv(denom));
        long deg = -1;
        for (long d = 1; d * d <= n; ++d) {
            if (fp.mul(d % p, d % p) == d2) { deg = d; break; }
        }
        if (deg < 0) throw LiftAmbiguous("no integer degree matches");
        // character values mod p
        std::vector<long> chi_p(static_cast<std::size_t>(r));
        for (long j = 0; j < r; ++j) {
            chi_p[static_cast<std::size_t>(j)] =
                fp.mul(fp.mul(deg % p, w[static_cast<std::size_t>(j)]), fp.inv(static_cast<long>(classes[static_cast<std::size_t>(j)].size()) % p));
        }
        // lift each class value to Q(zeta_e) via root-of-unity multiplicities
        Vec values(static_cast<std::size_t>(n));
        std::vector<CycScalar> class_value(static_cast<std::size_t>(r));
        for (long j = 0; j < r; ++j) {
            long rep = reps[static_cast<std::size_t>(j)];
            CycScalar val;
            long mt_sum = 0;
            long einv = fp.inv(e % p);
            for (long t = 0; t < e; ++t) {
                long acc = 0;
                for (long sx = 0; sx < e; ++sx) {
                    long cls = class_of[static_cast<std::size_t>(g.power(rep, sx))];
                    acc = fp.add(acc, fp.mul(chi_p[static_cast<std::size_t>(cls)], fp.pow(fp.inv(z), (t * sx) % (p - 1))));
                }
                long mt = fp.mul(acc, einv);
                if (mt > deg) throw LiftAmbiguous("multiplicity exceeds the degree");
                mt_sum += mt;
                if (mt != 0) val += CycScalar(mt) * CycScalar::root_of_unity(e, t);
            }
            if (mt_sum != deg) throw LiftAmbiguous("multiplicities do not sum to the degree");
            class_value[static_cast<std::size_t>(j)] = std::move(val);
        }
        for (long x = 0; x < n; ++x) values[static_cast<std::size_t>(x)] = class_value[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)])];
        table.rows.push_back(std::move(values));
        table.degrees.push_back(deg);
    }
    // deterministic order: by degree, then lexicographic on values
    std::vector<long> order(table.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        if (table.degrees[static_cast<std::size_t>(a)] != table.degrees[static_cast<std::size_t>(b)]) {
            return table.degrees[static_cast<std::size_t>(a)] < table.degrees[static_cast<std::size_t>(b)];
        }
        const Vec& va = table.rows[static_cast<std::size_t>(a)];
        const Vec& vb = table.rows[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < va.size(); ++i) {
            int c = CycScalar::compare(va[i], vb[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    CharTable sorted;
    for (long idx : order) {
        sorted.rows.push_back(std::move(table.rows[static_cast<std::size_t>(idx)]));
        sorted.degrees.push_back(table.degrees[static_cast<std::size_t>(idx)]);
    }
    long sumsq = 0;
    for (long d : sorted.degrees) sumsq += d * d;
    if (sumsq != n) throw LiftAmbiguous("degrees do not satisfy sum of squares");
    return sorted;
}

CharTable irr_characters(const HopfAlgebra& h, long order_cap) {
    switch (h.prov.kind) {
        case Provenance::Kind::GroupAlgebra:
            return dixon_char_table(*h.prov.group, order_cap);
        case Provenance::Kind::DualGroupAlgebra: {
            const FiniteGroup& g = *h.prov.group;
            CharTable t;
            for (long x = 0; x < g.order(); ++x) {
                Vec row(static_cast<std::size_t>(g.order()));
                row[static_cast<std::size_t>(x)] = CycScalar(1);
                t.rows.push_back(std::move(row));
                t.degrees.push_back(1);
            }
            return t;
        }
        case Provenance::Kind::Tensor: {
            CharTable a = irr_characters(*h.prov.left, order_cap);
            CharTable b = irr_characters(*h.prov.right, order_cap);
            CharTable t;
            const long db = h.prov.right->dim;
            for (std::size_t i = 0; i < a.rows.size(); ++i) {
                for (std::size_t j = 0; j < b.rows.size(); ++j) {
                    Vec row(static_cast<std::size_t>(h.dim));
                    for (long x = 0; x < h.prov.left->dim; ++x) {
                        for (long y = 0; y < db; ++y) {
                            row[static_cast<std::size_t>(x * db + y)] = a.rows[i][static_cast<std::size_t>(x)] * b.rows[j][static_cast<std::size_t>(y)];
                        }
                    }
                    t.rows.push_back(std::move(row));
                    t.degrees.push_back(a.degrees[i] * b.degrees[j]);
                }
            }
            return t;
        }
        case Provenance::Kind::Op:
        case Provenance::Kind::Cop:
        case Provenance::Kind::Biop:
            // character values transport unchanged across op/cop flips
            return irr_characters(*h.prov.left, order_cap);
        default:
            throw UnsupportedProvenance();
    }
}

Vec twisted_tensor_character(const HopfAlgebra& h, const Vec& chi_v, const HopfAlgebra& k, const Vec& chi_w,
                             const Matrix& sigma_r) {
    if (sigma_r.rows() != k.dim || sigma_r.cols() != h.dim) throw ShapeMismatch("twisted_tensor_character sigma_r");
    // sigma_r must be an algebra map H -> K
    if (sigma_r.apply(h.unit) != k.unit) throw NotAlgebraMap("sigma_r(1) != 1");
    for (long i = 0; i < h.dim; ++i) {
        for (long j = 0; j < h.dim; ++j) {
            Vec lhs(static_cast<std::size_t>(k.dim));
            for (long m = 0; m < h.dim; ++m) {
                const CycScalar& c = h.mul.at(i, j, m);
                if (c.is_zero()) continue;
                Vec im = sigma_r.column(m);
                for (long t = 0; t < k.dim; ++t) lhs[static_cast<std::size_t>(t)] += c * im[static_cast<std::size_t>(t)];
            }
            Vec rhs = k.multiply(sigma_r.column(i), sigma_r.column(j));
            if (lhs != rhs) throw NotAlgebraMap("sigma_r at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    // chi(e_i) = sum over Delta(e_i) of chi_v(e_j) * chi_w(sigma_r(e_k))
    Vec w = sigma_r.transpose().apply(chi_w);
    Vec chi(static_cast<std::size_t>(h.dim));
    for (long i = 0; i < h.dim; ++i) {
        CycScalar s;
        for (long j = 0; j < h.dim; ++j) {
            if (chi_v[static_cast<std::size_t>(j)].is_zero()) continue;
            for (long kk = 0; kk < h.dim; ++kk) {
                const CycScalar& c = h.comul.at(i, j, kk);
                if (!c.is_zero()) s += c * chi_v[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(kk)];
            }
        }
        chi[static_cast<std::size_t>(i)] = std::move(s);
    }
    return chi;
}

}  // namespace hopfind
