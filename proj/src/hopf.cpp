#include "hopfind/hopf.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace hopfind {

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != static_cast<std::size_t>(dim) || b.size() != static_cast<std::size_t>(dim)) {
        throw ShapeMismatch("HopfAlgebra::multiply");
    }
    Vec out(static_cast<std::size_t>(dim));
    for (long i = 0; i < dim; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (long j = 0; j < dim; ++j) {
            if (b[static_cast<std::size_t>(j)].is_zero()) continue;
            CycScalar c = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            for (long k = 0; k < dim; ++k) {
                const CycScalar& m = mul.at(i, j, k);
                if (!m.is_zero()) out[static_cast<std::size_t>(k)] += c * m;
            }
        }
    }
    return out;
}

CycScalar HopfAlgebra::counit_of(const Vec& a) const { return vec_dot(counit, a); }

Matrix HopfAlgebra::left_mult_matrix(long basis_index) const {
    Matrix m(dim, dim);
    for (long j = 0; j < dim; ++j) {
        for (long k = 0; k < dim; ++k) m.at(k, j) = mul.at(basis_index, j, k);
    }
    return m;
}

Matrix HopfAlgebra::left_mult_matrix(const Vec& a) const {
    Matrix m(dim, dim);
    for (long i = 0; i < dim; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (long j = 0; j < dim; ++j) {
            for (long k = 0; k < dim; ++k) {
                const CycScalar& c = mul.at(i, j, k);
                if (!c.is_zero()) m.at(k, j) += a[static_cast<std::size_t>(i)] * c;
            }
        }
    }
    return m;
}

bool HopfAlgebra::structure_equal(const HopfAlgebra& o) const {
    return dim == o.dim && mul == o.mul && unit == o.unit && comul == o.comul && counit == o.counit &&
           antipode == o.antipode;
}

std::string describe(const std::vector<AxiomViolation>& report) {
    std::ostringstream out;
    for (const auto& v : report) {
        out << v.axiom << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) out << ",";
            out << v.witness[i];
        }
        out << "); ";
    }
    return out.str();
}

namespace {

using SparseVec = std::map<long, CycScalar>;
using Sparse2 = std::map<std::pair<long, long>, CycScalar>;
using Sparse3 = std::map<std::tuple<long, long, long>, CycScalar>;

template <typename M>
void prune(M& m) {
    for (auto it = m.begin(); it != m.end();) {
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
    }
}

Sparse2 comul_of(const HopfAlgebra& h, long i) {
    Sparse2 out;
    for (long j = 0; j < h.dim; ++j) {
        for (long k = 0; k < h.dim; ++k) {
            const CycScalar& c = h.comul.at(i, j, k);
            if (!c.is_zero()) out[{j, k}] = c;
        }
    }
    return out;
}

}  // namespace

std::vector<AxiomViolation> validate_bialgebra(const HopfAlgebra& h) {
    std::vector<AxiomViolation> report;
    const long d = h.dim;

    // unitality
    for (long i = 0; i < d; ++i) {
        Vec e(static_cast<std::size_t>(d));
        e[static_cast<std::size_t>(i)] = CycScalar(1);
        if (h.multiply(h.unit, e) != e || h.multiply(e, h.unit) != e) {
            report.push_back({"unitality", {i}});
        }
    }
    // associativity: (e_i e_j) e_k = e_i (e_j e_k)
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) {
            for (long k = 0; k < d; ++k) {
                Vec lhs(static_cast<std::size_t>(d)), rhs(static_cast<std::size_t>(d));
                for (long m = 0; m < d; ++m) {
                    const CycScalar& c = h.mul.at(i, j, m);
                    if (c.is_zero()) continue;
                    for (long l = 0; l < d; ++l) {
                        const CycScalar& t = h.mul.at(m, k, l);
                        if (!t.is_zero()) lhs[static_cast<std::size_t>(l)] += c * t;
                    }
                }
                for (long m = 0; m < d; ++m) {
                    const CycScalar& c = h.mul.at(j, k, m);
                    if (c.is_zero()) continue;
                    for (long l = 0; l < d; ++l) {
                        const CycScalar& t = h.mul.at(i, m, l);
                        if (!t.is_zero()) rhs[static_cast<std::size_t>(l)] += c * t;
                    }
                }
                if (lhs != rhs) report.push_back({"associativity", {i, j, k}});
            }
        }
    }
    // counitality: (eps (x) id) Delta = id = (id (x) eps) Delta
    for (long i = 0; i < d; ++i) {
        Vec left(static_cast<std::size_t>(d)), right(static_cast<std::size_t>(d));
        for (long j = 0; j < d; ++j) {
            for (long k = 0; k < d; ++k) {
                const CycScalar& c = h.comul.at(i, j, k);
                if (c.is_zero()) continue;
                left[static_cast<std::size_t>(k)] += c * h.counit[static_cast<std::size_t>(j)];
                right[static_cast<std::size_t>(j)] += c * h.counit[static_cast<std::size_t>(k)];
            }
        }
        Vec e(static_cast<std::size_t>(d));
        e[static_cast<std::size_t>(i)] = CycScalar(1);
        if (left != e || right != e) report.push_back({"counitality", {i}});
    }
    // coassociativity
    for (long i = 0; i < d; ++i) {
        Sparse3 lhs, rhs;
        Sparse2 di = comul_of(h, i);
        for (const auto& [jk, c] : di) {
            auto [a, b] = jk;
            Sparse2 da = comul_of(h, a);
            for (const auto& [cd, t] : da) {
                lhs[{cd.first, cd.second, b}] += c * t;
            }
            Sparse2 db = comul_of(h, b);
            for (const auto& [cd, t] : db) {
                rhs[{a, cd.first, cd.second}] += c * t;
            }
        }
        prune(lhs);
        prune(rhs);
        if (lhs != rhs) report.push_back({"coassociativity", {i}});
    }
    // Delta is an algebra map
    {
        Sparse2 d1;
        for (long j = 0; j < d; ++j) {
            if (h.unit[static_cast<std::size_t>(j)].is_zero()) continue;
            Sparse2 dj = comul_of(h, j);
            for (const auto& [ab, c] : dj) d1[ab] += h.unit[static_cast<std::size_t>(j)] * c;
        }
        Sparse2 expect;
        for (long a = 0; a < d; ++a) {
            for (long b = 0; b < d; ++b) {
                CycScalar c = h.unit[static_cast<std::size_t>(a)] * h.unit[static_cast<std::size_t>(b)];
                if (!c.is_zero()) expect[{a, b}] = c;
            }
        }
        prune(d1);
        prune(expect);
        if (d1 != expect) report.push_back({"comultiplication of unit", {}});
    }
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) {
            Sparse2 lhs;
            for (long m = 0; m < d; ++m) {
                const CycScalar& c = h.mul.at(i, j, m);
                if (c.is_zero()) continue;
                Sparse2 dm = comul_of(h, m);
                for (const auto& [ab, t] : dm) lhs[ab] += c * t;
            }
            Sparse2 rhs;
            Sparse2 di = comul_of(h, i), dj = comul_of(h, j);
            for (const auto& [ab, c] : di) {
                for (const auto& [cd, t] : dj) {
                    CycScalar f = c * t;
                    // (e_a e_c) (x) (e_b e_d)
                    for (long x = 0; x < d; ++x) {
                        const CycScalar& m1 = h.mul.at(ab.first, cd.first, x);
                        if (m1.is_zero()) continue;
                        for (long y = 0; y < d; ++y) {
                            const CycScalar& m2 = h.mul.at(ab.second, cd.second, y);
                            if (!m2.is_zero()) rhs[{x, y}] += f * m1 * m2;
                        }
                    }
                }
            }
            prune(lhs);
            prune(rhs);
            if (lhs != rhs) report.push_back({"comultiplication is an algebra map", {i, j}});
        }
    }
    // eps is an algebra map
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) {
            CycScalar lhs;
            for (long m = 0; m < d; ++m) {
                const CycScalar& c = h.mul.at(i, j, m);
                if (!c.is_zero()) lhs += c * h.counit[static_cast<std::size_t>(m)];
            }
            if (lhs != h.counit[static_cast<std::size_t>(i)] * h.counit[static_cast<std::size_t>(j)]) {
                report.push_back({"counit is an algebra map", {i, j}});
            }
        }
    }
    if (h.counit_of(h.unit) != CycScalar(1)) report.push_back({"counit of unit", {}});
    return report;
}

std::vector<AxiomViolation> validate_hopf(const HopfAlgebra& h) {
    std::vector<AxiomViolation> report = validate_bialgebra(h);
    const long d = h.dim;
    if (h.antipode.rows() != d || h.antipode.cols() != d) {
        report.push_back({"antipode shape", {}});
        return report;
    }
    for (long i = 0; i < d; ++i) {
        Vec lhs(static_cast<std::size_t>(d)), rhs(static_cast<std::size_t>(d));
        Sparse2 di = comul_of(h, i);
        for (const auto& [jk, c] : di) {
            auto [j, k] = jk;
            // S(e_j) e_k and e_j S(e_k)
            for (long m = 0; m < d; ++m) {
                const CycScalar& s = h.antipode.at(m, j);
                if (s.is_zero()) continue;
                for (long l = 0; l < d; ++l) {
                    const CycScalar& t = h.mul.at(m, k, l);
                    if (!t.is_zero()) lhs[static_cast<std::size_t>(l)] += c * s * t;
                }
            }
            for (long m = 0; m < d; ++m) {
                const CycScalar& s = h.antipode.at(m, k);
                if (s.is_zero()) continue;
                for (long l = 0; l < d; ++l) {
                    const CycScalar& t = h.mul.at(j, m, l);
                    if (!t.is_zero()) rhs[static_cast<std::size_t>(l)] += c * s * t;
                }
            }
        }
        Vec expect = vec_scale(h.counit[static_cast<std::size_t>(i)], h.unit);
        if (lhs != expect) report.push_back({"left antipode axiom", {i}});
        if (rhs != expect) report.push_back({"right antipode axiom", {i}});
    }
    return report;
}

void require_hopf(const HopfAlgebra& h, const std::string& context) {
    auto report = validate_hopf(h);
    if (!report.empty()) {
        throw std::logic_error(context + ": Hopf axioms violated: " + describe(report));
    }
}

HopfAlgebra group_algebra(const FiniteGroup& g) {
    HopfAlgebra h;
    const long n = g.order();
    h.dim = n;
    h.mul = Tensor3(n, n, n);
    h.comul = Tensor3(n, n, n);
    h.unit.assign(static_cast<std::size_t>(n), CycScalar(0));
    h.counit.assign(static_cast<std::size_t>(n), CycScalar(1));
    h.antipode = Matrix(n, n);
    for (long i = 0; i < n; ++i) {
        h.labels.push_back(g.label(i));
        for (long j = 0; j < n; ++j) h.mul.at(i, j, g.mul(i, j)) = CycScalar(1);
        h.comul.at(i, i, i) = CycScalar(1);
        h.antipode.at(g.inverse(i), i) = CycScalar(1);
    }
    h.unit[static_cast<std::size_t>(g.identity())] = CycScalar(1);
    h.prov.kind = Provenance::Kind::GroupAlgebra;
    h.prov.group = std::make_shared<FiniteGroup>(g);
    return h;
}

HopfAlgebra dual_group_algebra(const FiniteGroup& g) {
    HopfAlgebra h;
    const long n = g.order();
    h.dim = n;
    h.mul = Tensor3(n, n, n);
    h.comul = Tensor3(n, n, n);
    h.unit.assign(static_cast<std::size_t>(n), CycScalar(1));
    h.counit.assign(static_cast<std::size_t>(n), CycScalar(0));
    h.antipode = Matrix(n, n);
    for (long i = 0; i < n; ++i) {
        h.labels.push_back("p_" + g.label(i));
        h.mul.at(i, i, i) = CycScalar(1);
        h.antipode.at(g.inverse(i), i) = CycScalar(1);
    }
    // Delta(p_g) = sum_{xy = g} p_x (x) p_y
    for (long x = 0; x < n; ++x) {
        for (long y = 0; y < n; ++y) h.comul.at(g.mul(x, y), x, y) = CycScalar(1);
    }
    h.counit[static_cast<std::size_t>(g.identity())] = CycScalar(1);
    h.prov.kind = Provenance::Kind::DualGroupAlgebra;
    h.prov.group = std::make_shared<FiniteGroup>(g);
    return h;
}

namespace {

Provenance dual_provenance(const Provenance& p) {
    Provenance out;
    switch (p.kind) {
        case Provenance::Kind::GroupAlgebra:
            out.kind = Provenance::Kind::DualGroupAlgebra;
            out.group = p.group;
            break;
        case Provenance::Kind::DualGroupAlgebra:
            out.kind = Provenance::Kind::GroupAlgebra;
            out.group = p.group;
            break;
        default:
            out.kind = Provenance::Kind::Generic;
            break;
    }
    return out;
}

}  // namespace

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
    HopfAlgebra d;
    const long n = h.dim;
    d.dim = n;
    for (long i = 0; i < n; ++i) d.labels.push_back(h.labels[static_cast<std::size_t>(i)] + "*");
    d.mul = Tensor3(n, n, n);
    d.comul = Tensor3(n, n, n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            for (long k = 0; k < n; ++k) {
                d.mul.at(i, j, k) = h.comul.at(k, i, j);
                d.comul.at(i, j, k) = h.mul.at(j, k, i);
            }
        }
    }
    d.unit = h.counit;
    d.counit = h.unit;
    d.antipode = h.antipode.transpose();
    d.prov = dual_provenance(h.prov);
    return d;
}

HopfAlgebra op_cop_variants(const HopfAlgebra& h, bool flip_mul, bool flip_comul) {
    HopfAlgebra v = h;
    const long n = h.dim;
    if (flip_mul) {
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                for (long k = 0; k < n; ++k) v.mul.at(i, j, k) = h.mul.at(j, i, k);
            }
        }
    }
    if (flip_comul) {
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                for (long k = 0; k < n; ++k) v.comul.at(i, j, k) = h.comul.at(i, k, j);
            }
        }
    }
    if (flip_mul != flip_comul) {
        v.antipode = inverse(h.antipode);  // S is bijective for any Hopf algebra
    }
    Provenance p;
    p.kind = flip_mul && flip_comul ? Provenance::Kind::Biop
             : flip_mul             ? Provenance::Kind::Op
             : flip_comul           ? Provenance::Kind::Cop
                                    : h.prov.kind;
    if (flip_mul || flip_comul) {
        p.left = std::make_shared<HopfAlgebra>(h);
        v.prov = p;
    }
    return v;
}

HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
    HopfAlgebra t;
    const long da = a.dim, db = b.dim, n = da * db;
    auto idx = [db](long i, long j) { return i * db + j; };
    t.dim = n;
    t.mul = Tensor3(n, n, n);
    t.comul = Tensor3(n, n, n);
    t.unit.assign(static_cast<std::size_t>(n), CycScalar(0));
    t.counit.assign(static_cast<std::size_t>(n), CycScalar(0));
    for (long i = 0; i < da; ++i) {
        for (long j = 0; j < db; ++j) {
            t.labels.push_back("(" + a.labels[static_cast<std::size_t>(i)] + "," + b.labels[static_cast<std::size_t>(j)] + ")");
            t.unit[static_cast<std::size_t>(idx(i, j))] = a.unit[static_cast<std::size_t>(i)] * b.unit[static_cast<std::size_t>(j)];
            t.counit[static_cast<std::size_t>(idx(i, j))] =
                a.counit[static_cast<std::size_t>(i)] * b.counit[static_cast<std::size_t>(j)];
        }
    }
    for (long i1 = 0; i1 < da; ++i1) {
        for (long i2 = 0; i2 < db; ++i2) {
            for (long j1 = 0; j1 < da; ++j1) {
                for (long j2 = 0; j2 < db; ++j2) {
                    for (long k1 = 0; k1 < da; ++k1) {
                        const CycScalar& ma = a.mul.at(i1, j1, k1);
                        const CycScalar& ca = a.comul.at(i1, j1, k1);
                        for (long k2 = 0; k2 < db; ++k2) {
                            if (!ma.is_zero()) {
                                const CycScalar& mb = b.mul.at(i2, j2, k2);
                                if (!mb.is_zero()) t.mul.at(idx(i1, i2), idx(j1, j2), idx(k1, k2)) = ma * mb;
                            }
                            if (!ca.is_zero()) {
                                const CycScalar& cb = b.comul.at(i2, j2, k2);
                                if (!cb.is_zero()) t.comul.at(idx(i1, i2), idx(j1, j2), idx(k1, k2)) = ca * cb;
                            }
                        }
                    }
                }
            }
        }
    }
    t.antipode = kron(a.antipode, b.antipode);
    t.prov.kind = Provenance::Kind::Tensor;
    t.prov.left = std::make_shared<HopfAlgebra>(a);
    t.prov.right = std::make_shared<HopfAlgebra>(b);
    return t;
}

HElement normalized_integral(const HopfAlgebra& h) {
    const long d = h.dim;
    Matrix stacked(d * d, d);
    for (long i = 0; i < d; ++i) {
        Matrix li = h.left_mult_matrix(i);
        for (long r = 0; r < d; ++r) {
            for (long c = 0; c < d; ++c) {
                CycScalar v = li.at(r, c);
                if (r == c) v -= h.counit[static_cast<std::size_t>(i)];
                stacked.at(i * d + r, c) = std::move(v);
            }
        }
    }
    auto basis = kernel_basis(stacked);
    if (basis.size() != 1) {
        throw NotUnimodularOrNotSemisimple("left integral space has dimension " + std::to_string(basis.size()));
    }
    CycScalar eps = h.counit_of(basis[0]);
    if (eps.is_zero()) {
        throw NotUnimodularOrNotSemisimple("counit vanishes on the left integral");
    }
    Vec lambda = vec_scale(eps.inverse(), basis[0]);
    // two-sidedness, automatic in the semisimple case
    for (long i = 0; i < d; ++i) {
        Vec e(static_cast<std::size_t>(d));
        e[static_cast<std::size_t>(i)] = CycScalar(1);
        if (h.multiply(lambda, e) != vec_scale(h.counit[static_cast<std::size_t>(i)], lambda)) {
            throw NotUnimodularOrNotSemisimple("integral is not two-sided at basis index " + std::to_string(i));
        }
    }
    return HElement{&h, std::move(lambda)};
}

PowerMapEngine::PowerMapEngine(const HopfAlgebra& h) : h_(&h) {
    powers_.push_back(Matrix::identity(h.dim));
}

const Matrix& PowerMapEngine::power(long n) {
    if (n < 1) throw std::invalid_argument("power map index must be >= 1");
    const long d = h_->dim;
    while (static_cast<long>(powers_.size()) < n) {
        const Matrix& prev = powers_.back();
        Matrix next(d, d);
        for (long i = 0; i < d; ++i) {
            // column i: sum over Delta(e_i) legs (j, k) of P_prev(e_j) * e_k
            for (long j = 0; j < d; ++j) {
                for (long k = 0; k < d; ++k) {
                    const CycScalar& c = h_->comul.at(i, j, k);
                    if (c.is_zero()) continue;
                    for (long m = 0; m < d; ++m) {
                        const CycScalar& p = prev.at(m, j);
                        if (p.is_zero()) continue;
                        for (long l = 0; l < d; ++l) {
                            const CycScalar& t = h_->mul.at(m, k, l);
                            if (!t.is_zero()) next.at(l, i) += c * p * t;
                        }
                    }
                }
            }
        }
        powers_.push_back(std::move(next));
    }
    return powers_[static_cast<std::size_t>(n - 1)];
}

Vec sweedler_power(const HopfAlgebra& h, const Vec& x, long n) {
    PowerMapEngine eng(h);
    return eng.power(n).apply(x);
}

Matrix hopf_power_map(const HopfAlgebra& h, long n) {
    PowerMapEngine eng(h);
    return eng.power(n);
}

Matrix unit_counit_matrix(const HopfAlgebra& h) {
    Matrix m(h.dim, h.dim);
    for (long r = 0; r < h.dim; ++r) {
        for (long c = 0; c < h.dim; ++c) {
            m.at(r, c) = h.unit[static_cast<std::size_t>(r)] * h.counit[static_cast<std::size_t>(c)];
        }
    }
    return m;
}

long exponent(const HopfAlgebra& h) {
    const long bound = h.dim * h.dim * h.dim;
    Matrix target = unit_counit_matrix(h);
    PowerMapEngine eng(h);
    for (long n = 1; n <= bound; ++n) {
        if (eng.power(n) == target) return n;
    }
    throw ExponentBoundExceeded(bound);
}

}  // namespace hopfind
