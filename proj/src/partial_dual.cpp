#include "hopfind/partial_dual.hpp"

#include <algorithm>

namespace hopfind {

Vec AssocAlgebra::multiply(const Vec& a, const Vec& b) const {
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

Matrix AssocAlgebra::left_mult_matrix(long basis_index) const {
    Matrix m(dim, dim);
    for (long j = 0; j < dim; ++j) {
        for (long k = 0; k < dim; ++k) m.at(k, j) = mul.at(basis_index, j, k);
    }
    return m;
}

std::vector<AxiomViolation> validate_algebra(const AssocAlgebra& h) {
    std::vector<AxiomViolation> report;
    const long d = h.dim;
    for (long i = 0; i < d; ++i) {
        Vec e(static_cast<std::size_t>(d));
        e[static_cast<std::size_t>(i)] = CycScalar(1);
        if (h.multiply(h.unit, e) != e || h.multiply(e, h.unit) != e) report.push_back({"unitality", {i}});
    }
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
    return report;
}

std::vector<AxiomViolation> validate_alg_module(const AlgModule& m) {
    std::vector<AxiomViolation> report;
    const AssocAlgebra& a = *m.parent;
    Matrix unit_action(m.dim, m.dim);
    for (long i = 0; i < a.dim; ++i) {
        if (!a.unit[static_cast<std::size_t>(i)].is_zero()) {
            unit_action = unit_action + a.unit[static_cast<std::size_t>(i)] * m.actions[static_cast<std::size_t>(i)];
        }
    }
    if (!unit_action.is_identity()) report.push_back({"action of unit", {}});
    for (long i = 0; i < a.dim; ++i) {
        for (long j = 0; j < a.dim; ++j) {
            Matrix lhs = m.actions[static_cast<std::size_t>(i)] * m.actions[static_cast<std::size_t>(j)];
            Matrix rhs(m.dim, m.dim);
            for (long k = 0; k < a.dim; ++k) {
                const CycScalar& c = a.mul.at(i, j, k);
                if (!c.is_zero()) rhs = rhs + c * m.actions[static_cast<std::size_t>(k)];
            }
            if (lhs != rhs) report.push_back({"representation property", {i, j}});
        }
    }
    return report;
}

AlgModule alg_regular_module(const AssocAlgebra& a) {
    AlgModule m;
    m.parent = &a;
    m.dim = a.dim;
    for (long i = 0; i < a.dim; ++i) m.actions.push_back(a.left_mult_matrix(i));
    return m;
}

AlgModule alg_one_dim_module(const AssocAlgebra& a, const Vec& phi) {
    if (phi.size() != static_cast<std::size_t>(a.dim)) throw NotAnAlgebraCharacter("length mismatch");
    if (vec_dot(phi, a.unit) != CycScalar(1)) throw NotAnAlgebraCharacter("phi(1) != 1");
    for (long i = 0; i < a.dim; ++i) {
        for (long j = 0; j < a.dim; ++j) {
            CycScalar rhs;
            for (long k = 0; k < a.dim; ++k) {
                const CycScalar& c = a.mul.at(i, j, k);
                if (!c.is_zero()) rhs += c * phi[static_cast<std::size_t>(k)];
            }
            if (phi[static_cast<std::size_t>(i)] * phi[static_cast<std::size_t>(j)] != rhs) {
                throw NotAnAlgebraCharacter("multiplicativity fails");
            }
        }
    }
    AlgModule m;
    m.parent = &a;
    m.dim = 1;
    for (long i = 0; i < a.dim; ++i) {
        Matrix x(1, 1);
        x.at(0, 0) = phi[static_cast<std::size_t>(i)];
        m.actions.push_back(std::move(x));
    }
    return m;
}

CoidealSubalgebra coideal_subalgebra(const HopfAlgebra& h, const std::vector<Vec>& spanning) {
    const long d = h.dim;
    const long db = static_cast<long>(spanning.size());
    Matrix inc = Matrix::from_columns(spanning);
    if (rank(inc) != db) throw NotSubalgebra("spanning vectors are dependent", -1, -1);
    auto unit_coords = solve_linear(inc, h.unit);
    if (!unit_coords) throw NotSubalgebra("1_H is not in the span", -1, -1);

    CoidealSubalgebra b;
    b.parent = &h;
    b.inclusion = inc;
    b.algebra.dim = db;
    b.algebra.mul = Tensor3(db, db, db);
    b.algebra.unit = *unit_coords;
    for (long j = 0; j < db; ++j) b.algebra.labels.push_back("b" + std::to_string(j));
    // induced multiplication: solve iota(b_i) iota(b_j) back into the span
    for (long i = 0; i < db; ++i) {
        for (long j = 0; j < db; ++j) {
            Vec prod = h.multiply(inc.column(i), inc.column(j));
            auto coords = solve_linear(inc, prod);
            if (!coords) throw NotSubalgebra("product escapes the span", i, j);
            for (long k = 0; k < db; ++k) b.algebra.mul.at(i, j, k) = (*coords)[static_cast<std::size_t>(k)];
        }
    }
    b.counit.resize(static_cast<std::size_t>(db));
    for (long j = 0; j < db; ++j) b.counit[static_cast<std::size_t>(j)] = h.counit_of(inc.column(j));
    // left coideal: Delta(iota(b_j)) = sum_k coaction[j] col k (x) b_k
    for (long j = 0; j < db; ++j) {
        // legs matrix M with M.at(a, b2) = coefficient of e_a (x) e_b2 in Delta(iota(b_j))
        Matrix legs(d, d);
        Vec bj = inc.column(j);
        for (long i = 0; i < d; ++i) {
            if (bj[static_cast<std::size_t>(i)].is_zero()) continue;
            for (long a = 0; a < d; ++a) {
                for (long b2 = 0; b2 < d; ++b2) {
                    const CycScalar& c = h.comul.at(i, a, b2);
                    if (!c.is_zero()) legs.at(a, b2) += bj[static_cast<std::size_t>(i)] * c;
                }
            }
        }
        // solve legs^T = inc * Y, i.e. each row of legs (fixed a) lies in the span
        auto y = solve_matrix(inc, legs.transpose());
        if (!y) throw NotLeftCoideal(j);
        b.coaction.push_back(y->transpose());  // d x db
    }
    return b;
}

CoidealSubalgebra coideal_from_basis_indices(const HopfAlgebra& h, const std::vector<long>& indices) {
    std::vector<Vec> spanning;
    for (long idx : indices) {
        Vec v(static_cast<std::size_t>(h.dim));
        v[static_cast<std::size_t>(idx)] = CycScalar(1);
        spanning.push_back(std::move(v));
    }
    auto b = coideal_subalgebra(h, spanning);
    for (long j = 0; j < b.algebra.dim; ++j) {
        b.algebra.labels[static_cast<std::size_t>(j)] = h.labels[static_cast<std::size_t>(indices[static_cast<std::size_t>(j)])];
    }
    return b;
}

QuotientCoalgebra quotient_coalgebra(const CoidealSubalgebra& b) {
    const HopfAlgebra& h = *b.parent;
    const long d = h.dim, db = b.algebra.dim;
    // B+ = ker(eps_B), spanned by b_j - eps(b_j) 1_B after dropping one slot;
    // use kernel of the 1 x db counit matrix.
    Matrix eps_row(1, db);
    for (long j = 0; j < db; ++j) eps_row.at(0, j) = b.counit[static_cast<std::size_t>(j)];
    auto bplus = kernel_basis(eps_row);
    // spanning vectors of B+H in H coordinates
    std::vector<Vec> bph;
    for (const auto& v : bplus) {
        Vec iv = b.inclusion.apply(v);
        for (long j = 0; j < d; ++j) {
            Vec ej(static_cast<std::size_t>(d));
            ej[static_cast<std::size_t>(j)] = CycScalar(1);
            bph.push_back(h.multiply(iv, ej));
        }
    }
    Matrix w = Matrix::from_columns(bph.empty() ? std::vector<Vec>{Vec(static_cast<std::size_t>(d))} : bph);
    Echelon we = echelonize(w);
    // independent spanning columns of w
    std::vector<Vec> wbasis;
    {
        // pivot columns of the original matrix form a column-space basis
        for (long p : we.pivots) wbasis.push_back(w.column(p));
    }
    const long rank_w = static_cast<long>(wbasis.size());
    const long dc = d - rank_w;
    if (dc * db != d) {
        throw DimensionMismatch("dim(C) * dim(B) = " + std::to_string(dc) + " * " + std::to_string(db) +
                                " != dim(H) = " + std::to_string(d));
    }
    // greedy standard-vector complement
    std::vector<long> reps;
    std::vector<Vec> current = wbasis;
    for (long j = 0; j < d && static_cast<long>(reps.size()) < dc; ++j) {
        Vec ej(static_cast<std::size_t>(d));
        ej[static_cast<std::size_t>(j)] = CycScalar(1);
        std::vector<Vec> trial = current;
        trial.push_back(ej);
        if (rank(Matrix::from_columns(trial)) > static_cast<long>(current.size())) {
            current.push_back(ej);
            reps.push_back(j);
        }
    }
    if (static_cast<long>(reps.size()) != dc) throw DimensionMismatch("complement search failed");

    QuotientCoalgebra c;
    c.parent = &h;
    c.dim = dc;
    c.rep_indices = reps;
    // projection: coordinates on the rep block of the decomposition H = B+H (+) span(reps)
    Matrix m = Matrix::from_columns(current);  // d x (rank_w + dc)
    auto sol = solve_matrix(m, Matrix::identity(d));
    if (!sol) throw DimensionMismatch("projection solve failed");
    c.projection = Matrix(dc, d);
    for (long r = 0; r < dc; ++r) {
        for (long j = 0; j < d; ++j) c.projection.at(r, j) = sol->at(rank_w + r, j);
    }
    for (long r = 0; r < dc; ++r) {
        c.labels.push_back("[" + h.labels[static_cast<std::size_t>(reps[static_cast<std::size_t>(r)])] + "]");
    }
    // induced coalgebra on classes
    c.comul = Tensor3(dc, dc, dc);
    c.counit.resize(static_cast<std::size_t>(dc));
    for (long r = 0; r < dc; ++r) {
        long i = reps[static_cast<std::size_t>(r)];
        for (long a = 0; a < d; ++a) {
            for (long b2 = 0; b2 < d; ++b2) {
                const CycScalar& t = h.comul.at(i, a, b2);
                if (t.is_zero()) continue;
                for (long x = 0; x < dc; ++x) {
                    const CycScalar& pa = c.projection.at(x, a);
                    if (pa.is_zero()) continue;
                    for (long y = 0; y < dc; ++y) {
                        const CycScalar& pb = c.projection.at(y, b2);
                        if (!pb.is_zero()) c.comul.at(r, x, y) += t * pa * pb;
                    }
                }
            }
        }
        c.counit[static_cast<std::size_t>(r)] = h.counit[static_cast<std::size_t>(i)];
    }
    // right H-action on classes
    c.raction = Tensor3(dc, d, dc);
    for (long r = 0; r < dc; ++r) {
        long i = reps[static_cast<std::size_t>(r)];
        for (long j = 0; j < d; ++j) {
            // [e_i] . e_j = P(e_i e_j)
            for (long k = 0; k < d; ++k) {
                const CycScalar& t = h.mul.at(i, j, k);
                if (t.is_zero()) continue;
                for (long x = 0; x < dc; ++x) {
                    const CycScalar& pk = c.projection.at(x, k);
                    if (!pk.is_zero()) c.raction.at(r, j, x) += t * pk;
                }
            }
        }
    }
    return c;
}

namespace {

// f * g in C*, multiplication dual to the quotient comultiplication
Vec cstar_mul(const QuotientCoalgebra& c, const Vec& f, const Vec& g) {
    Vec out(static_cast<std::size_t>(c.dim));
    for (long x = 0; x < c.dim; ++x) {
        CycScalar s;
        for (long a = 0; a < c.dim; ++a) {
            if (f[static_cast<std::size_t>(a)].is_zero()) continue;
            for (long b = 0; b < c.dim; ++b) {
                const CycScalar& t = c.comul.at(x, a, b);
                if (!t.is_zero()) s += t * f[static_cast<std::size_t>(a)] * g[static_cast<std::size_t>(b)];
            }
        }
        out[static_cast<std::size_t>(x)] = std::move(s);
    }
    return out;
}

// u -> (u -> g) for u in H (coords) acting on g in C* by the hit action
Vec hit_on_cstar(const QuotientCoalgebra& c, const Vec& u, const Vec& g) {
    Vec out(static_cast<std::size_t>(c.dim));
    for (long s = 0; s < c.dim; ++s) {
        CycScalar acc;
        for (long t = 0; t < c.parent->dim; ++t) {
            if (u[static_cast<std::size_t>(t)].is_zero()) continue;
            for (long k = 0; k < c.dim; ++k) {
                if (g[static_cast<std::size_t>(k)].is_zero()) continue;
                const CycScalar& r = c.raction.at(s, t, k);
                if (!r.is_zero()) acc += u[static_cast<std::size_t>(t)] * g[static_cast<std::size_t>(k)] * r;
            }
        }
        out[static_cast<std::size_t>(s)] = std::move(acc);
    }
    return out;
}

}  // namespace

SmashAlgebra smash_algebra(const CoidealSubalgebra& b, const QuotientCoalgebra& c) {
    if (b.parent != c.parent) throw ShapeMismatch("smash_algebra: different parents");
    const long db = b.algebra.dim, dc = c.dim, n = dc * db;
    SmashAlgebra s;
    s.dim_cstar = dc;
    s.dim_b = db;
    s.algebra.dim = n;
    s.algebra.mul = Tensor3(n, n, n);
    auto idx = [db](long i, long j) { return i * db + j; };
    for (long i = 0; i < dc; ++i) {
        for (long j = 0; j < db; ++j) {
            s.algebra.labels.push_back(c.labels[static_cast<std::size_t>(i)] + "*#" +
                                       b.algebra.labels[static_cast<std::size_t>(j)]);
        }
    }
    // unit = eps_C # 1_B
    s.algebra.unit.assign(static_cast<std::size_t>(n), CycScalar(0));
    for (long i = 0; i < dc; ++i) {
        for (long j = 0; j < db; ++j) {
            s.algebra.unit[static_cast<std::size_t>(idx(i, j))] =
                c.counit[static_cast<std::size_t>(i)] * b.algebra.unit[static_cast<std::size_t>(j)];
        }
    }
    // (f_i # b_j)(f_k # b_l) = sum_m [f_i (X^j_m -> f_k)] # b_m b_l
    for (long i = 0; i < dc; ++i) {
        Vec fi(static_cast<std::size_t>(dc));
        fi[static_cast<std::size_t>(i)] = CycScalar(1);
        for (long j = 0; j < db; ++j) {
            for (long k = 0; k < dc; ++k) {
                Vec fk(static_cast<std::size_t>(dc));
                fk[static_cast<std::size_t>(k)] = CycScalar(1);
                for (long m = 0; m < db; ++m) {
                    Vec x = b.coaction[static_cast<std::size_t>(j)].column(m);
                    if (vec_is_zero(x)) continue;
                    Vec cpart = cstar_mul(c, fi, hit_on_cstar(c, x, fk));
                    if (vec_is_zero(cpart)) continue;
                    for (long l = 0; l < db; ++l) {
                        for (long t = 0; t < db; ++t) {
                            const CycScalar& bm = b.algebra.mul.at(m, l, t);
                            if (bm.is_zero()) continue;
                            for (long sidx = 0; sidx < dc; ++sidx) {
                                const CycScalar& cv = cpart[static_cast<std::size_t>(sidx)];
                                if (!cv.is_zero()) {
                                    s.algebra.mul.at(idx(i, j), idx(k, l), idx(sidx, t)) += cv * bm;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    auto report = validate_algebra(s.algebra);
    if (!report.empty()) throw std::logic_error("smash_algebra is not associative/unital: " + describe(report));
    return s;
}

AlgModule smash_module(const SmashAlgebra& s, const CoidealSubalgebra& b, const QuotientCoalgebra& c,
                       const AlgModule& l) {
    const long db = b.algebra.dim, dc = c.dim, dl = l.dim;
    if (l.parent != &b.algebra) throw ShapeMismatch("smash_module: module is not over B");
    AlgModule m;
    m.parent = &s.algebra;
    m.dim = dc * dl;
    auto midx = [dl](long k, long t) { return k * dl + t; };
    auto aidx = [db](long i, long j) { return i * db + j; };
    for (long i = 0; i < dc; ++i) {
        Vec fi(static_cast<std::size_t>(dc));
        fi[static_cast<std::size_t>(i)] = CycScalar(1);
        for (long j = 0; j < db; ++j) {
            Matrix act(m.dim, m.dim);
            for (long k = 0; k < dc; ++k) {
                Vec fk(static_cast<std::size_t>(dc));
                fk[static_cast<std::size_t>(k)] = CycScalar(1);
                for (long mm = 0; mm < db; ++mm) {
                    Vec x = b.coaction[static_cast<std::size_t>(j)].column(mm);
                    if (vec_is_zero(x)) continue;
                    Vec cpart = cstar_mul(c, fi, hit_on_cstar(c, x, fk));
                    if (vec_is_zero(cpart)) continue;
                    const Matrix& al = l.actions[static_cast<std::size_t>(mm)];
                    for (long sidx = 0; sidx < dc; ++sidx) {
                        const CycScalar& cv = cpart[static_cast<std::size_t>(sidx)];
                        if (cv.is_zero()) continue;
                        for (long t = 0; t < dl; ++t) {
                            for (long t2 = 0; t2 < dl; ++t2) {
                                const CycScalar& av = al.at(t2, t);
                                if (!av.is_zero()) act.at(midx(sidx, t2), midx(k, t)) += cv * av;
                            }
                        }
                    }
                }
            }
            m.actions.push_back(std::move(act));
        }
    }
    (void)aidx;
    auto report = validate_alg_module(m);
    if (!report.empty()) throw std::logic_error("smash_module is not a representation: " + describe(report));
    return m;
}

HModule cotensor_module(const CoidealSubalgebra& b, const AlgModule& l, const HopfAlgebra& h) {
    if (b.parent != &h) throw ShapeMismatch("cotensor_module: B is not a coideal of H");
    if (l.parent != &b.algebra) throw ShapeMismatch("cotensor_module: module is not over B");
    const long d = h.dim, db = b.algebra.dim, dl = l.dim;
    // right hit matrices on H*: (h* <- e_j)_{k'} = sum_k h*_k mul(j, k', k)
    std::vector<Matrix> rhit;
    for (long j = 0; j < d; ++j) {
        Matrix r(d, d);
        for (long kp = 0; kp < d; ++kp) {
            for (long k = 0; k < d; ++k) r.at(kp, k) = h.mul.at(j, kp, k);
        }
        rhit.push_back(std::move(r));
    }
    const long amb = dl * d;
    Matrix stacked(db * amb, amb);
    for (long t = 0; t < db; ++t) {
        // act_L(b_t) (x) I  -  I (x) (<- iota(b_t))
        Matrix rh(d, d);
        Vec ib = b.inclusion.column(t);
        for (long j = 0; j < d; ++j) {
            if (!ib[static_cast<std::size_t>(j)].is_zero()) rh = rh + ib[static_cast<std::size_t>(j)] * rhit[static_cast<std::size_t>(j)];
        }
        const Matrix& al = l.actions[static_cast<std::size_t>(t)];
        for (long r1 = 0; r1 < dl; ++r1) {
            for (long r2 = 0; r2 < d; ++r2) {
                long row = t * amb + r1 * d + r2;
                for (long c1 = 0; c1 < dl; ++c1) {
                    const CycScalar& av = al.at(r1, c1);
                    if (!av.is_zero()) stacked.at(row, c1 * d + r2) += av;
                }
                for (long c2 = 0; c2 < d; ++c2) {
                    const CycScalar& rv = rh.at(r2, c2);
                    if (!rv.is_zero()) stacked.at(row, r1 * d + c2) -= rv;
                }
            }
        }
    }
    auto basis = kernel_basis(stacked);
    const long m = static_cast<long>(basis.size());
    Matrix k = Matrix::from_columns(basis.empty() ? std::vector<Vec>{Vec(static_cast<std::size_t>(amb))} : basis);
    // expected dimension dl * dC with dC = d / db
    if (db > 0 && d % db == 0 && m != dl * (d / db)) {
        throw DimensionMismatch("cotensor dimension " + std::to_string(m) + " != " + std::to_string(dl * (d / db)));
    }
    // left hit matrices: (e_j -> h*)_{k'} = sum_k h*_k mul(k', j, k)
    HModule out;
    out.parent = &h;
    out.dim = m;
    for (long j = 0; j < d; ++j) {
        Matrix lh(d, d);
        for (long kp = 0; kp < d; ++kp) {
            for (long kk = 0; kk < d; ++kk) lh.at(kp, kk) = h.mul.at(kp, j, kk);
        }
        // ambient action I_L (x) lh restricted to the kernel
        Matrix amb_act(amb, amb);
        for (long r1 = 0; r1 < dl; ++r1) {
            for (long r2 = 0; r2 < d; ++r2) {
                for (long c2 = 0; c2 < d; ++c2) {
                    const CycScalar& v = lh.at(r2, c2);
                    if (!v.is_zero()) amb_act.at(r1 * d + r2, r1 * d + c2) = v;
                }
            }
        }
        auto y = solve_matrix(k, amb_act * k);
        if (!y) throw DimensionMismatch("cotensor space is not H-stable");
        out.actions.push_back(*y);
    }
    require_module(out, "cotensor_module");
    return out;
}

bool smash_matches_hopf(const SmashAlgebra& s, const HopfAlgebra& witness) {
    return s.algebra.dim == witness.dim && s.algebra.mul == witness.mul && s.algebra.unit == witness.unit;
}

CycScalar smash_module_indicator(IndicatorEngine& witness_engine, const AlgModule& m, long n) {
    Vec chi;
    for (const Matrix& a : m.actions) chi.push_back(a.trace());
    return witness_engine.of_character(chi, n);
}

std::pair<HopfAlgebra, HopfAlgebra> bismash_hopf(const MatchedPair& mp) {
    const FiniteGroup& f = mp.F();
    const FiniteGroup& g = mp.G();
    const long nf = f.order(), ng = g.order(), n = nf * ng;
    auto idx = [nf](long x, long a) { return x * nf + a; };

    HopfAlgebra h1;  // C^G # CF on p_x # a
    h1.dim = n;
    h1.mul = Tensor3(n, n, n);
    h1.comul = Tensor3(n, n, n);
    h1.unit.assign(static_cast<std::size_t>(n), CycScalar(0));
    h1.counit.assign(static_cast<std::size_t>(n), CycScalar(0));
    h1.antipode = Matrix(n, n);
    for (long x = 0; x < ng; ++x) {
        for (long a = 0; a < nf; ++a) {
            h1.labels.push_back("p_" + g.label(x) + "#" + f.label(a));
            h1.unit[static_cast<std::size_t>(idx(x, f.identity()))] = CycScalar(1);
            h1.counit[static_cast<std::size_t>(idx(x, a))] = CycScalar(x == g.identity() ? 1 : 0);
        }
    }
    for (long x = 0; x < ng; ++x) {
        for (long a = 0; a < nf; ++a) {
            // (p_x # a)(p_y # b) = [x <| a = y] p_x # ab
            long y = mp.right_act(x, a);
            for (long b = 0; b < nf; ++b) {
                h1.mul.at(idx(x, a), idx(y, b), idx(x, f.mul(a, b))) = CycScalar(1);
            }
            // Delta(p_x # a) = sum_{yz = x} (p_y # (z |> a)) (x) (p_z # a)
            for (long y2 = 0; y2 < ng; ++y2) {
                for (long z = 0; z < ng; ++z) {
                    if (g.mul(y2, z) != x) continue;
                    h1.comul.at(idx(x, a), idx(y2, mp.left_act(z, a)), idx(z, a)) = CycScalar(1);
                }
            }
            // S(p_x # a) = p_{(x <| a)^-1} # (x |> a)^-1
            h1.antipode.at(idx(g.inverse(mp.right_act(x, a)), f.inverse(mp.left_act(x, a))), idx(x, a)) = CycScalar(1);
        }
    }
    h1.prov.kind = Provenance::Kind::Bismash;
    require_hopf(h1, "bismash C^G#CF");

    HopfAlgebra h2;  // CG # C^F on x # p_a
    h2.dim = n;
    h2.mul = Tensor3(n, n, n);
    h2.comul = Tensor3(n, n, n);
    h2.unit.assign(static_cast<std::size_t>(n), CycScalar(0));
    h2.counit.assign(static_cast<std::size_t>(n), CycScalar(0));
    for (long x = 0; x < ng; ++x) {
        for (long a = 0; a < nf; ++a) {
            h2.labels.push_back(g.label(x) + "#p_" + f.label(a));
            h2.unit[static_cast<std::size_t>(idx(g.identity(), a))] = CycScalar(1);
            h2.counit[static_cast<std::size_t>(idx(x, a))] = CycScalar(a == f.identity() ? 1 : 0);
        }
    }
    for (long x = 0; x < ng; ++x) {
        for (long a = 0; a < nf; ++a) {
            // (x # p_a)(y # p_b) = [a = y |> b] (xy # p_b)
            for (long y = 0; y < ng; ++y) {
                for (long b = 0; b < nf; ++b) {
                    if (mp.left_act(y, b) != a) continue;
                    h2.mul.at(idx(x, a), idx(y, b), idx(g.mul(x, y), b)) = CycScalar(1);
                }
            }
            // Delta(x # p_a) = sum_{cd = a} (x # p_c) (x) ((x <| c) # p_d)
            for (long c = 0; c < nf; ++c) {
                for (long dd = 0; dd < nf; ++dd) {
                    if (f.mul(c, dd) != a) continue;
                    h2.comul.at(idx(x, a), idx(x, c), idx(mp.right_act(x, c), dd)) = CycScalar(1);
                }
            }
        }
    }
    h2.antipode = h1.antipode.transpose();
    h2.prov.kind = Provenance::Kind::Bismash;
    require_hopf(h2, "bismash CG#C^F");

    if (!dual_hopf(h1).structure_equal(h2)) {
        throw std::logic_error("bismash duality contract violated: dual(C^G#CF) != CG#C^F");
    }
    return {std::move(h1), std::move(h2)};
}

PamsData bismash_pams(const MatchedPair& mp, const HopfAlgebra& h_dual_double) {
    const FiniteGroup& f = mp.F();
    const FiniteGroup& g = mp.G();
    const long nf = f.order(), ng = g.order(), d = nf * ng;
    if (h_dual_double.dim != d) throw ShapeMismatch("bismash_pams: parent must be C^(F><G)");
    auto lidx = [ng](long a, long x) { return a * ng + x; };  // double_group ordering

    PamsData p;
    p.parent = &h_dual_double;
    p.iota = Matrix(d, nf);
    p.zeta = Matrix(nf, d);
    p.pi = Matrix(ng, d);
    p.gamma = Matrix(d, ng);
    for (long a = 0; a < nf; ++a) {
        for (long x = 0; x < ng; ++x) {
            p.iota.at(lidx(a, x), a) = CycScalar(1);   // pi_F^*(p_a) = sum_x p_(a,x)
            p.gamma.at(lidx(a, x), x) = CycScalar(1);  // pi_G^*(p_x) = sum_a p_(a,x)
        }
        p.zeta.at(a, lidx(a, g.identity())) = CycScalar(1);  // iota_F^*
    }
    for (long x = 0; x < ng; ++x) p.pi.at(x, lidx(f.identity(), x)) = CycScalar(1);  // iota_G^*
    // B = C^F
    p.b_mul = Tensor3(nf, nf, nf);
    for (long a = 0; a < nf; ++a) p.b_mul.at(a, a, a) = CycScalar(1);
    p.b_unit.assign(static_cast<std::size_t>(nf), CycScalar(1));
    // C = C^G as a coalgebra
    p.c_comul = Tensor3(ng, ng, ng);
    for (long y = 0; y < ng; ++y) {
        for (long z = 0; z < ng; ++z) p.c_comul.at(g.mul(y, z), y, z) = CycScalar(1);
    }
    p.c_counit.assign(static_cast<std::size_t>(ng), CycScalar(0));
    p.c_counit[static_cast<std::size_t>(g.identity())] = CycScalar(1);
    // right H-action: [p_x] <- p_(a,y) = [a = 1][x = y] p_x
    p.c_raction = Tensor3(ng, d, ng);
    for (long x = 0; x < ng; ++x) {
        p.c_raction.at(x, lidx(f.identity(), x), x) = CycScalar(1);
    }
    return p;
}

PamsData double_pams(const HopfPairing& sigma, const HopfAlgebra& kop_tensor_h) {
    const HopfAlgebra& k = *sigma.k;
    const HopfAlgebra& h = *sigma.h;
    const long dk = k.dim, dh = h.dim, d = dk * dh;
    if (kop_tensor_h.dim != d) throw ShapeMismatch("double_pams: parent must be K^op (x) H");
    auto idx = [dh](long kk, long hh) { return kk * dh + hh; };
    Matrix s_inv = inverse(h.antipode);
    Matrix sr = sigma.sigma_r();

    PamsData p;
    p.parent = &kop_tensor_h;
    p.iota = Matrix(d, dh);
    // iota(e_b) = sum sigma_r(S^{-1}(e_b(2))) (x) e_b(1)
    for (long b = 0; b < dh; ++b) {
        for (long a = 0; a < dh; ++a) {
            for (long b2 = 0; b2 < dh; ++b2) {
                const CycScalar& c = h.comul.at(b, a, b2);
                if (c.is_zero()) continue;
                // w = sigma_r(S^{-1}(e_b2))
                for (long kk = 0; kk < dk; ++kk) {
                    CycScalar w;
                    for (long u = 0; u < dh; ++u) {
                        const CycScalar& si = s_inv.at(u, b2);
                        if (!si.is_zero()) w += si * sr.at(kk, u);
                    }
                    if (!w.is_zero()) p.iota.at(idx(kk, a), b) += c * w;
                }
            }
        }
    }
    // zeta = eps_K (x) id_H
    p.zeta = Matrix(dh, d);
    for (long kk = 0; kk < dk; ++kk) {
        for (long hh = 0; hh < dh; ++hh) {
            p.zeta.at(hh, idx(kk, hh)) = k.counit[static_cast<std::size_t>(kk)];
        }
    }
    // pi(e_k (x) e_h) = e_k sigma_r(e_h) in K
    p.pi = Matrix(dk, d);
    for (long kk = 0; kk < dk; ++kk) {
        for (long hh = 0; hh < dh; ++hh) {
            for (long u = 0; u < dk; ++u) {
                const CycScalar& sv = sr.at(u, hh);
                if (sv.is_zero()) continue;
                for (long w = 0; w < dk; ++w) {
                    const CycScalar& mv = k.mul.at(kk, u, w);
                    if (!mv.is_zero()) p.pi.at(w, idx(kk, hh)) += sv * mv;
                }
            }
        }
    }
    // gamma(e_k) = e_k (x) 1_H
    p.gamma = Matrix(d, dk);
    for (long kk = 0; kk < dk; ++kk) {
        for (long hh = 0; hh < dh; ++hh) {
            const CycScalar& u = h.unit[static_cast<std::size_t>(hh)];
            if (!u.is_zero()) p.gamma.at(idx(kk, hh), kk) = u;
        }
    }
    p.b_mul = h.mul;
    p.b_unit = h.unit;
    p.c_comul = k.comul;
    p.c_counit = k.counit;
    // right action of K^op (x) H on C = K^op: x <- (k' (x) h') = k' x sigma_r(h') in K
    p.c_raction = Tensor3(dk, d, dk);
    for (long x = 0; x < dk; ++x) {
        for (long kk = 0; kk < dk; ++kk) {
            for (long hh = 0; hh < dh; ++hh) {
                for (long u = 0; u < dk; ++u) {
                    const CycScalar& m1 = k.mul.at(kk, x, u);
                    if (m1.is_zero()) continue;
                    for (long v = 0; v < dk; ++v) {
                        const CycScalar& sv = sr.at(v, hh);
                        if (sv.is_zero()) continue;
                        for (long w = 0; w < dk; ++w) {
                            const CycScalar& m2 = k.mul.at(u, v, w);
                            if (!m2.is_zero()) p.c_raction.at(x, idx(kk, hh), w) += m1 * sv * m2;
                        }
                    }
                }
            }
        }
    }
    return p;
}

PamsData group_extension_pams(const HopfAlgebra& hl, const FiniteGroup& l, const std::vector<long>& normal_sub,
                              const std::vector<long>& complement_sub) {
    const long d = l.order();
    const long dbn = static_cast<long>(normal_sub.size());
    const long dct = static_cast<long>(complement_sub.size());
    if (hl.dim != d) throw ShapeMismatch("group_extension_pams: parent must be the group algebra of L");
    if (dbn * dct != d) throw NotExactFactorization("|K| |T| != |L|");
    // normality check of K
    for (long g = 0; g < d; ++g) {
        for (long kk : normal_sub) {
            long conj = l.mul(l.mul(g, kk), l.inverse(g));
            if (std::find(normal_sub.begin(), normal_sub.end(), conj) == normal_sub.end()) {
                throw NotExactFactorization("K is not normal in L");
            }
        }
    }
    // unique decomposition g = k t
    std::vector<long> kpart(static_cast<std::size_t>(d), -1), tpart(static_cast<std::size_t>(d), -1);
    for (long ki = 0; ki < dbn; ++ki) {
        for (long ti = 0; ti < dct; ++ti) {
            long gidx = l.mul(normal_sub[static_cast<std::size_t>(ki)], complement_sub[static_cast<std::size_t>(ti)]);
            if (kpart[static_cast<std::size_t>(gidx)] >= 0) throw NotExactFactorization("duplicate decomposition");
            kpart[static_cast<std::size_t>(gidx)] = ki;
            tpart[static_cast<std::size_t>(gidx)] = ti;
        }
    }
    PamsData p;
    p.parent = &hl;
    p.iota = Matrix(d, dbn);
    p.zeta = Matrix(dbn, d);
    p.pi = Matrix(dct, d);
    p.gamma = Matrix(d, dct);
    for (long ki = 0; ki < dbn; ++ki) p.iota.at(normal_sub[static_cast<std::size_t>(ki)], ki) = CycScalar(1);
    for (long g = 0; g < d; ++g) {
        p.zeta.at(kpart[static_cast<std::size_t>(g)], g) = CycScalar(1);
        p.pi.at(tpart[static_cast<std::size_t>(g)], g) = CycScalar(1);
    }
    for (long ti = 0; ti < dct; ++ti) p.gamma.at(complement_sub[static_cast<std::size_t>(ti)], ti) = CycScalar(1);
    // B = CK
    p.b_mul = Tensor3(dbn, dbn, dbn);
    p.b_unit.assign(static_cast<std::size_t>(dbn), CycScalar(0));
    for (long i = 0; i < dbn; ++i) {
        for (long j = 0; j < dbn; ++j) {
            long prod = l.mul(normal_sub[static_cast<std::size_t>(i)], normal_sub[static_cast<std::size_t>(j)]);
            p.b_mul.at(i, j, kpart[static_cast<std::size_t>(prod)]) = CycScalar(1);
        }
        if (normal_sub[static_cast<std::size_t>(i)] == l.identity()) p.b_unit[static_cast<std::size_t>(i)] = CycScalar(1);
    }
    // C = C(L/K), grouplike classes
    p.c_comul = Tensor3(dct, dct, dct);
    p.c_counit.assign(static_cast<std::size_t>(dct), CycScalar(1));
    for (long c = 0; c < dct; ++c) p.c_comul.at(c, c, c) = CycScalar(1);
    p.c_raction = Tensor3(dct, d, dct);
    for (long c = 0; c < dct; ++c) {
        for (long g = 0; g < d; ++g) {
            long prod = l.mul(complement_sub[static_cast<std::size_t>(c)], g);
            p.c_raction.at(c, g, tpart[static_cast<std::size_t>(prod)]) = CycScalar(1);
        }
    }
    return p;
}

namespace {

// B-coordinates of zeta applied to an H-coordinate vector
Vec apply_map(const Matrix& m, const Vec& v) { return m.apply(v); }

}  // namespace

std::vector<AxiomViolation> pams_validate(const PamsData& p) {
    std::vector<AxiomViolation> report;
    const HopfAlgebra& h = *p.parent;
    const long d = h.dim, db = p.dim_b(), dc = p.dim_c();
    AssocAlgebra balg{db, {}, p.b_mul, p.b_unit};

    // iota is an injective algebra map
    if (rank(p.iota) != db) report.push_back({"iota injective", {}});
    if (p.iota.apply(p.b_unit) != h.unit) report.push_back({"iota preserves unit", {}});
    for (long i = 0; i < db; ++i) {
        for (long j = 0; j < db; ++j) {
            Vec lhs = h.multiply(p.iota.column(i), p.iota.column(j));
            Vec rhs(static_cast<std::size_t>(d));
            for (long k = 0; k < db; ++k) {
                const CycScalar& c = p.b_mul.at(i, j, k);
                if (!c.is_zero()) rhs = vec_add(rhs, vec_scale(c, p.iota.column(k)));
            }
            if (lhs != rhs) report.push_back({"iota is an algebra map", {i, j}});
        }
    }
    // left coideal: Delta(iota(b)) in H (x) iota(B)
    for (long j = 0; j < db; ++j) {
        Matrix legs(d, d);
        Vec bj = p.iota.column(j);
        for (long i = 0; i < d; ++i) {
            if (bj[static_cast<std::size_t>(i)].is_zero()) continue;
            for (long a = 0; a < d; ++a) {
                for (long b2 = 0; b2 < d; ++b2) {
                    const CycScalar& c = h.comul.at(i, a, b2);
                    if (!c.is_zero()) legs.at(a, b2) += bj[static_cast<std::size_t>(i)] * c;
                }
            }
        }
        if (!solve_matrix(p.iota, legs.transpose())) report.push_back({"image of iota is a left coideal", {j}});
    }
    // pi is a coalgebra map
    for (long j = 0; j < d; ++j) {
        // Delta_C(pi(e_j)) vs (pi (x) pi) Delta_H(e_j)
        Matrix lhs(dc, dc), rhs(dc, dc);
        for (long c = 0; c < dc; ++c) {
            const CycScalar& pj = p.pi.at(c, j);
            if (pj.is_zero()) continue;
            for (long a = 0; a < dc; ++a) {
                for (long b2 = 0; b2 < dc; ++b2) {
                    const CycScalar& t = p.c_comul.at(c, a, b2);
                    if (!t.is_zero()) lhs.at(a, b2) += pj * t;
                }
            }
        }
        for (long a = 0; a < d; ++a) {
            for (long b2 = 0; b2 < d; ++b2) {
                const CycScalar& t = h.comul.at(j, a, b2);
                if (t.is_zero()) continue;
                for (long x = 0; x < dc; ++x) {
                    const CycScalar& pa = p.pi.at(x, a);
                    if (pa.is_zero()) continue;
                    for (long y = 0; y < dc; ++y) {
                        const CycScalar& pb = p.pi.at(y, b2);
                        if (!pb.is_zero()) rhs.at(x, y) += t * pa * pb;
                    }
                }
            }
        }
        if (lhs != rhs) report.push_back({"pi is a coalgebra map", {j}});
        if (vec_dot(p.c_counit, p.pi.column(j)) != h.counit[static_cast<std::size_t>(j)]) {
            report.push_back({"pi preserves counit", {j}});
        }
    }
    // pi is a right H-module map: pi(x e_j) = pi(x) <- e_j
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) {
            Vec xe(static_cast<std::size_t>(d));
            for (long k = 0; k < d; ++k) xe[static_cast<std::size_t>(k)] = h.mul.at(i, j, k);
            Vec lhs = p.pi.apply(xe);
            Vec rhs(static_cast<std::size_t>(dc));
            for (long c = 0; c < dc; ++c) {
                const CycScalar& pc = p.pi.at(c, i);
                if (pc.is_zero()) continue;
                for (long c2 = 0; c2 < dc; ++c2) {
                    const CycScalar& r = p.c_raction.at(c, j, c2);
                    if (!r.is_zero()) rhs[static_cast<std::size_t>(c2)] += pc * r;
                }
            }
            if (lhs != rhs) report.push_back({"pi preserves right H-actions", {i, j}});
        }
    }
    // coinvariants of (id (x) pi) Delta equal the image of iota
    {
        Matrix coin(d * dc, d);
        Vec pi1 = p.pi.apply(h.unit);
        for (long j = 0; j < d; ++j) {
            for (long a = 0; a < d; ++a) {
                for (long b2 = 0; b2 < d; ++b2) {
                    const CycScalar& t = h.comul.at(j, a, b2);
                    if (t.is_zero()) continue;
                    for (long c = 0; c < dc; ++c) {
                        const CycScalar& pc = p.pi.at(c, b2);
                        if (!pc.is_zero()) coin.at(a * dc + c, j) += t * pc;
                    }
                }
            }
            // subtract e_j (x) pi(1)
            for (long c = 0; c < dc; ++c) {
                coin.at(j * dc + c, j) -= pi1[static_cast<std::size_t>(c)];
            }
        }
        auto ker = kernel_basis(coin);
        if (static_cast<long>(ker.size()) != db) {
            report.push_back({"coinvariants have dim(B)", {static_cast<long>(ker.size())}});
        } else {
            for (long j = 0; j < db; ++j) {
                if (vec_is_zero(coin.apply(p.iota.column(j)))) continue;
                report.push_back({"iota lands in the coinvariants", {j}});
            }
        }
    }
    // zeta iota = id_B, pi gamma = id_C
    if (p.zeta * p.iota != Matrix::identity(db)) report.push_back({"zeta iota = id_B", {}});
    if (p.pi * p.gamma != Matrix::identity(dc)) report.push_back({"pi gamma = id_C", {}});
    // pi(iota(b)) = eps(iota(b)) pi(1), zeta(gamma(x)) = eps_C(x) 1_B
    {
        Vec pi1 = p.pi.apply(h.unit);
        for (long j = 0; j < db; ++j) {
            Vec lhs = p.pi.apply(p.iota.column(j));
            CycScalar e = h.counit_of(p.iota.column(j));
            if (lhs != vec_scale(e, pi1)) report.push_back({"pi iota collapses to the counit", {j}});
        }
        for (long x = 0; x < dc; ++x) {
            Vec lhs = p.zeta.apply(p.gamma.column(x));
            if (lhs != vec_scale(p.c_counit[static_cast<std::size_t>(x)], p.b_unit)) {
                report.push_back({"zeta gamma collapses to the counit", {x}});
            }
        }
    }
    // unit/counit preservation of zeta and gamma
    if (p.zeta.apply(h.unit) != p.b_unit) report.push_back({"zeta preserves unit", {}});
    for (long j = 0; j < d; ++j) {
        // eps_B(zeta(e_j)) = eps_H(e_j) with eps_B = eps_H . iota
        CycScalar lhs = h.counit_of(p.iota.apply(p.zeta.column(j)));
        if (lhs != h.counit[static_cast<std::size_t>(j)]) report.push_back({"zeta preserves counit", {j}});
    }
    if (p.gamma.apply(p.pi.apply(h.unit)) != h.unit) report.push_back({"gamma of pi(1) is 1", {}});
    for (long x = 0; x < dc; ++x) {
        if (h.counit_of(p.gamma.column(x)) != p.c_counit[static_cast<std::size_t>(x)]) {
            report.push_back({"gamma preserves counit", {x}});
        }
    }
    // zeta preserves left B-actions: zeta(iota(b) u) = b zeta(u)
    for (long j = 0; j < db; ++j) {
        for (long u = 0; u < d; ++u) {
            Vec eu(static_cast<std::size_t>(d));
            eu[static_cast<std::size_t>(u)] = CycScalar(1);
            Vec lhs = p.zeta.apply(h.multiply(p.iota.column(j), eu));
            Vec ej(static_cast<std::size_t>(db));
            ej[static_cast<std::size_t>(j)] = CycScalar(1);
            Vec rhs = balg.multiply(ej, p.zeta.column(u));
            if (lhs != rhs) report.push_back({"zeta preserves left B-actions", {j, u}});
        }
    }
    // gamma preserves right C-coactions: (gamma (x) id) Delta_C = (id (x) pi) Delta_H gamma
    for (long x = 0; x < dc; ++x) {
        Matrix lhs(d, dc), rhs(d, dc);
        for (long a = 0; a < dc; ++a) {
            for (long b2 = 0; b2 < dc; ++b2) {
                const CycScalar& t = p.c_comul.at(x, a, b2);
                if (t.is_zero()) continue;
                for (long r = 0; r < d; ++r) {
                    const CycScalar& gv = p.gamma.at(r, a);
                    if (!gv.is_zero()) lhs.at(r, b2) += t * gv;
                }
            }
        }
        Vec gx = p.gamma.column(x);
        for (long i = 0; i < d; ++i) {
            if (gx[static_cast<std::size_t>(i)].is_zero()) continue;
            for (long a = 0; a < d; ++a) {
                for (long b2 = 0; b2 < d; ++b2) {
                    const CycScalar& t = h.comul.at(i, a, b2);
                    if (t.is_zero()) continue;
                    for (long c = 0; c < dc; ++c) {
                        const CycScalar& pc = p.pi.at(c, b2);
                        if (!pc.is_zero()) rhs.at(a, c) += gx[static_cast<std::size_t>(i)] * t * pc;
                    }
                }
            }
        }
        if (lhs != rhs) report.push_back({"gamma preserves right C-coactions", {x}});
    }
    // (iota zeta) * (gamma pi) = id_H
    for (long j = 0; j < d; ++j) {
        Vec acc(static_cast<std::size_t>(d));
        for (long a = 0; a < d; ++a) {
            for (long b2 = 0; b2 < d; ++b2) {
                const CycScalar& t = h.comul.at(j, a, b2);
                if (t.is_zero()) continue;
                Vec left = p.iota.apply(p.zeta.column(a));
                Vec right = p.gamma.apply(p.pi.column(b2));
                acc = vec_add(acc, vec_scale(t, h.multiply(left, right)));
            }
        }
        Vec ej(static_cast<std::size_t>(d));
        ej[static_cast<std::size_t>(j)] = CycScalar(1);
        if (acc != ej) report.push_back({"(iota zeta) * (gamma pi) = id", {j}});
    }
    // convolution invertibility of zeta and gamma
    {
        // zeta bar in Hom(H, B): sum zeta(h1) zetabar(h2) = eps(h) 1_B
        const long unknowns = d * db;
        Matrix sys(d * db, unknowns);
        Vec rhs_sys(static_cast<std::size_t>(d * db));
        for (long j = 0; j < d; ++j) {
            for (long a = 0; a < d; ++a) {
                for (long b2 = 0; b2 < d; ++b2) {
                    const CycScalar& t = h.comul.at(j, a, b2);
                    if (t.is_zero()) continue;
                    // L_B(zeta(e_a)) applied to the unknown column b2
                    Vec za = p.zeta.column(a);
                    for (long u = 0; u < db; ++u) {
                        if (za[static_cast<std::size_t>(u)].is_zero()) continue;
                        for (long v = 0; v < db; ++v) {
                            for (long w = 0; w < db; ++w) {
                                const CycScalar& bm = p.b_mul.at(u, v, w);
                                if (!bm.is_zero()) {
                                    sys.at(j * db + w, b2 * db + v) += t * za[static_cast<std::size_t>(u)] * bm;
                                }
                            }
                        }
                    }
                }
            }
            for (long w = 0; w < db; ++w) {
                rhs_sys[static_cast<std::size_t>(j * db + w)] =
                    h.counit[static_cast<std::size_t>(j)] * p.b_unit[static_cast<std::size_t>(w)];
            }
        }
        auto zbar = solve_linear(sys, rhs_sys);
        if (!zbar) {
            report.push_back({"zeta has a right convolution inverse", {}});
        } else {
            // verify the other side: sum zetabar(h1) zeta(h2) = eps(h) 1_B
            Matrix zb(db, d);
            for (long col = 0; col < d; ++col) {
                for (long row = 0; row < db; ++row) zb.at(row, col) = (*zbar)[static_cast<std::size_t>(col * db + row)];
            }
            for (long j = 0; j < d; ++j) {
                Vec acc(static_cast<std::size_t>(db));
                for (long a = 0; a < d; ++a) {
                    for (long b2 = 0; b2 < d; ++b2) {
                        const CycScalar& t = h.comul.at(j, a, b2);
                        if (t.is_zero()) continue;
                        acc = vec_add(acc, vec_scale(t, balg.multiply(zb.column(a), p.zeta.column(b2))));
                    }
                }
                if (acc != vec_scale(h.counit[static_cast<std::size_t>(j)], p.b_unit)) {
                    report.push_back({"zeta convolution inverse is two-sided", {j}});
                    break;
                }
            }
        }
    }
    {
        // gamma bar in Hom(C, H): sum gamma(x1) gammabar(x2) = eps_C(x) 1_H
        const long unknowns = dc * d;
        Matrix sys(dc * d, unknowns);
        Vec rhs_sys(static_cast<std::size_t>(dc * d));
        for (long x = 0; x < dc; ++x) {
            for (long a = 0; a < dc; ++a) {
                for (long b2 = 0; b2 < dc; ++b2) {
                    const CycScalar& t = p.c_comul.at(x, a, b2);
                    if (t.is_zero()) continue;
                    Matrix lg = h.left_mult_matrix(p.gamma.column(a));
                    for (long r = 0; r < d; ++r) {
                        for (long ccol = 0; ccol < d; ++ccol) {
                            const CycScalar& lv = lg.at(r, ccol);
                            if (!lv.is_zero()) sys.at(x * d + r, b2 * d + ccol) += t * lv;
                        }
                    }
                }
            }
            for (long r = 0; r < d; ++r) {
                rhs_sys[static_cast<std::size_t>(x * d + r)] =
                    p.c_counit[static_cast<std::size_t>(x)] * h.unit[static_cast<std::size_t>(r)];
            }
        }
        auto gbar = solve_linear(sys, rhs_sys);
        if (!gbar) {
            report.push_back({"gamma has a right convolution inverse", {}});
        } else {
            Matrix gb(d, dc);
            for (long col = 0; col < dc; ++col) {
                for (long row = 0; row < d; ++row) gb.at(row, col) = (*gbar)[static_cast<std::size_t>(col * d + row)];
            }
            for (long x = 0; x < dc; ++x) {
                Vec acc(static_cast<std::size_t>(d));
                for (long a = 0; a < dc; ++a) {
                    for (long b2 = 0; b2 < dc; ++b2) {
                        const CycScalar& t = p.c_comul.at(x, a, b2);
                        if (t.is_zero()) continue;
                        acc = vec_add(acc, vec_scale(t, h.multiply(gb.column(a), p.gamma.column(b2))));
                    }
                }
                if (acc != vec_scale(p.c_counit[static_cast<std::size_t>(x)], h.unit)) {
                    report.push_back({"gamma convolution inverse is two-sided", {x}});
                    break;
                }
            }
        }
    }
    return report;
}

AssociatorResult associator_inverse(const PamsData& p) {
    const HopfAlgebra& h = *p.parent;
    const long d = h.dim, db = p.dim_b(), dc = p.dim_c();
    const long n = dc * db;
    auto sidx = [db](long i, long j) { return i * db + j; };
    AssociatorResult res;
    res.dim = n;
    res.phi_inverse.assign(static_cast<std::size_t>(n * n * n), CycScalar(0));
    // eps element of C* in dual coordinates
    const Vec& eps = p.c_counit;

    // Delta_H(gamma(x_j)) legs
    for (long j = 0; j < dc; ++j) {
        Vec gj = p.gamma.column(j);
        for (long i = 0; i < dc; ++i) {
            Vec gi = p.gamma.column(i);
            for (long a = 0; a < d; ++a) {
                for (long b2 = 0; b2 < d; ++b2) {
                    CycScalar legcoef;
                    for (long t = 0; t < d; ++t) {
                        if (gj[static_cast<std::size_t>(t)].is_zero()) continue;
                        const CycScalar& c = h.comul.at(t, a, b2);
                        if (!c.is_zero()) legcoef += gj[static_cast<std::size_t>(t)] * c;
                    }
                    if (legcoef.is_zero()) continue;
                    // slot 1: eps # zeta(gamma(x_i) e_a), slot 2: x_i* # zeta(e_b2), slot 3: x_j* # 1
                    Vec ea(static_cast<std::size_t>(d));
                    ea[static_cast<std::size_t>(a)] = CycScalar(1);
                    Vec z1 = p.zeta.apply(h.multiply(gi, ea));
                    Vec z2 = p.zeta.column(b2);
                    for (long c1 = 0; c1 < dc; ++c1) {
                        if (eps[static_cast<std::size_t>(c1)].is_zero()) continue;
                        for (long u1 = 0; u1 < db; ++u1) {
                            if (z1[static_cast<std::size_t>(u1)].is_zero()) continue;
                            CycScalar f1 = eps[static_cast<std::size_t>(c1)] * z1[static_cast<std::size_t>(u1)];
                            for (long u2 = 0; u2 < db; ++u2) {
                                if (z2[static_cast<std::size_t>(u2)].is_zero()) continue;
                                CycScalar f2 = f1 * z2[static_cast<std::size_t>(u2)];
                                for (long u3 = 0; u3 < db; ++u3) {
                                    const CycScalar& bu = p.b_unit[static_cast<std::size_t>(u3)];
                                    if (bu.is_zero()) continue;
                                    long index = (sidx(c1, u1) * n + sidx(i, u2)) * n + sidx(j, u3);
                                    res.phi_inverse[static_cast<std::size_t>(index)] += legcoef * f2 * bu;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // trivial associator = (eps # 1)^{(x)3}
    Vec unit_elt(static_cast<std::size_t>(n));
    for (long c1 = 0; c1 < dc; ++c1) {
        for (long u1 = 0; u1 < db; ++u1) {
            unit_elt[static_cast<std::size_t>(sidx(c1, u1))] =
                eps[static_cast<std::size_t>(c1)] * p.b_unit[static_cast<std::size_t>(u1)];
        }
    }
    res.is_trivial = true;
    for (long x = 0; x < n && res.is_trivial; ++x) {
        for (long y = 0; y < n && res.is_trivial; ++y) {
            for (long z = 0; z < n; ++z) {
                CycScalar expect = unit_elt[static_cast<std::size_t>(x)] * unit_elt[static_cast<std::size_t>(y)] *
                                   unit_elt[static_cast<std::size_t>(z)];
                if (res.phi_inverse[static_cast<std::size_t>((x * n + y) * n + z)] != expect) {
                    res.is_trivial = false;
                    break;
                }
            }
        }
    }
    return res;
}

std::vector<AxiomViolation> hopf_map_violations(const HopfAlgebra& src, const HopfAlgebra& dst, const Matrix& f) {
    std::vector<AxiomViolation> report;
    if (f.rows() != dst.dim || f.cols() != src.dim) {
        report.push_back({"map shape", {}});
        return report;
    }
    if (f.apply(src.unit) != dst.unit) report.push_back({"preserves unit", {}});
    for (long i = 0; i < src.dim; ++i) {
        for (long j = 0; j < src.dim; ++j) {
            Vec lhs(static_cast<std::size_t>(dst.dim));
            for (long k = 0; k < src.dim; ++k) {
                const CycScalar& c = src.mul.at(i, j, k);
                if (!c.is_zero()) lhs = vec_add(lhs, vec_scale(c, f.column(k)));
            }
            if (lhs != dst.multiply(f.column(i), f.column(j))) report.push_back({"preserves multiplication", {i, j}});
        }
    }
    for (long i = 0; i < src.dim; ++i) {
        // (f (x) f) Delta_src(e_i) vs Delta_dst(f(e_i))
        Matrix lhs(dst.dim, dst.dim), rhs(dst.dim, dst.dim);
        for (long a = 0; a < src.dim; ++a) {
            for (long b = 0; b < src.dim; ++b) {
                const CycScalar& c = src.comul.at(i, a, b);
                if (c.is_zero()) continue;
                for (long x = 0; x < dst.dim; ++x) {
                    const CycScalar& fa = f.at(x, a);
                    if (fa.is_zero()) continue;
                    for (long y = 0; y < dst.dim; ++y) {
                        const CycScalar& fb = f.at(y, b);
                        if (!fb.is_zero()) lhs.at(x, y) += c * fa * fb;
                    }
                }
            }
        }
        Vec fi = f.column(i);
        for (long t = 0; t < dst.dim; ++t) {
            if (fi[static_cast<std::size_t>(t)].is_zero()) continue;
            for (long x = 0; x < dst.dim; ++x) {
                for (long y = 0; y < dst.dim; ++y) {
                    const CycScalar& c = dst.comul.at(t, x, y);
                    if (!c.is_zero()) rhs.at(x, y) += fi[static_cast<std::size_t>(t)] * c;
                }
            }
        }
        if (lhs != rhs) report.push_back({"preserves comultiplication", {i}});
        if (dst.counit_of(fi) != src.counit[static_cast<std::size_t>(i)]) report.push_back({"preserves counit", {i}});
    }
    if (!(f * src.antipode == dst.antipode * f)) report.push_back({"commutes with the antipode", {}});
    return report;
}

std::vector<AxiomViolation> validate_pairing(const HopfPairing& p) {
    std::vector<AxiomViolation> report = hopf_map_violations(*p.h, *p.k, p.sigma_r());
    for (auto& v : report) v.axiom = "sigma_r " + v.axiom;
    auto dual_report = hopf_map_violations(dual_hopf(*p.k), dual_hopf(*p.h), p.sigma_l());
    for (auto& v : dual_report) {
        v.axiom = "sigma_l " + v.axiom;
        report.push_back(v);
    }
    return report;
}

HopfPairing evaluation_pairing(const HopfAlgebra& h) {
    return HopfPairing{&h, &h, Matrix::identity(h.dim)};
}

HopfPairing trivial_pairing(const HopfAlgebra& k, const HopfAlgebra& h) {
    Matrix v(k.dim, h.dim);
    for (long i = 0; i < k.dim; ++i) {
        for (long j = 0; j < h.dim; ++j) {
            v.at(i, j) = k.unit[static_cast<std::size_t>(i)] * h.counit[static_cast<std::size_t>(j)];
        }
    }
    return HopfPairing{&k, &h, std::move(v)};
}

Matrix antipode_from_bialgebra(const HopfAlgebra& bialgebra) {
    const long bound = bialgebra.dim * bialgebra.dim * bialgebra.dim;
    Matrix target = unit_counit_matrix(bialgebra);
    PowerMapEngine eng(bialgebra);
    for (long n = 1; n <= bound; ++n) {
        if (eng.power(n) == target) {
            // id has convolution order n, so its inverse is the (n-1)-st power
            return n == 1 ? Matrix::identity(bialgebra.dim) : eng.power(n - 1);
        }
    }
    throw ExponentBoundExceeded(bound);
}

namespace {

// sparse triple lists for Delta^2 legs
struct Triple {
    long a, b, c;
    CycScalar coef;
};

std::vector<Triple> dual_delta2(const HopfAlgebra& k, long beta) {
    // Delta^2 of k*_beta in K*: legs via mul_K transposed twice
    std::vector<Triple> out;
    for (long m = 0; m < k.dim; ++m) {
        for (long c = 0; c < k.dim; ++c) {
            const CycScalar& t1 = k.mul.at(m, c, beta);
            if (t1.is_zero()) continue;
            for (long a = 0; a < k.dim; ++a) {
                for (long b = 0; b < k.dim; ++b) {
                    const CycScalar& t2 = k.mul.at(a, b, m);
                    if (!t2.is_zero()) out.push_back({a, b, c, t1 * t2});
                }
            }
        }
    }
    return out;
}

std::vector<Triple> delta2(const HopfAlgebra& h, long g) {
    std::vector<Triple> out;
    for (long m = 0; m < h.dim; ++m) {
        for (long z = 0; z < h.dim; ++z) {
            const CycScalar& t1 = h.comul.at(g, m, z);
            if (t1.is_zero()) continue;
            for (long x = 0; x < h.dim; ++x) {
                for (long y = 0; y < h.dim; ++y) {
                    const CycScalar& t2 = h.comul.at(m, x, y);
                    if (!t2.is_zero()) out.push_back({x, y, z, t1 * t2});
                }
            }
        }
    }
    return out;
}

}  // namespace

HopfAlgebra quantum_double(const HopfPairing& sigma) {
    const HopfAlgebra& k = *sigma.k;
    const HopfAlgebra& h = *sigma.h;
    {
        auto rep = validate_pairing(sigma);
        if (!rep.empty()) throw std::logic_error("quantum_double: invalid Hopf pairing: " + describe(rep));
    }
    const long dk = k.dim, dh = h.dim, n = dk * dh;
    auto idx = [dh](long i, long g) { return i * dh + g; };
    Matrix sk_inv = inverse(k.antipode);
    // SV.at(a, z) = sigma(S^{-1}(k*_a), e_z)
    Matrix sv = sk_inv * sigma.values;

    HopfAlgebra d;
    d.dim = n;
    d.mul = Tensor3(n, n, n);
    d.comul = Tensor3(n, n, n);
    d.unit.assign(static_cast<std::size_t>(n), CycScalar(0));
    d.counit.assign(static_cast<std::size_t>(n), CycScalar(0));
    for (long i = 0; i < dk; ++i) {
        for (long g = 0; g < dh; ++g) {
            d.labels.push_back(k.labels[static_cast<std::size_t>(i)] + "*><" + h.labels[static_cast<std::size_t>(g)]);
            d.unit[static_cast<std::size_t>(idx(i, g))] =
                k.counit[static_cast<std::size_t>(i)] * h.unit[static_cast<std::size_t>(g)];
            d.counit[static_cast<std::size_t>(idx(i, g))] =
                k.unit[static_cast<std::size_t>(i)] * h.counit[static_cast<std::size_t>(g)];
        }
    }
    // comultiplication: K*^cop (x) H as a coalgebra
    for (long i = 0; i < dk; ++i) {
        for (long a = 0; a < dk; ++a) {
            for (long b = 0; b < dk; ++b) {
                const CycScalar& t = k.mul.at(a, b, i);  // Delta_{K*}(k*_i) legs (a, b)
                if (t.is_zero()) continue;
                for (long g = 0; g < dh; ++g) {
                    for (long c = 0; c < dh; ++c) {
                        for (long e = 0; e < dh; ++e) {
                            const CycScalar& u = h.comul.at(g, c, e);
                            if (!u.is_zero()) d.comul.at(idx(i, g), idx(b, c), idx(a, e)) += t * u;
                        }
                    }
                }
            }
        }
    }
    // multiplication from the displayed formula
    for (long beta = 0; beta < dk; ++beta) {
        auto kst = dual_delta2(k, beta);
        for (long g = 0; g < dh; ++g) {
            auto hst = delta2(h, g);
            for (const auto& kt : kst) {
                for (const auto& ht : hst) {
                    // sigma(k*_c, e_x) sigma(S^-1(k*_a), e_z)
                    CycScalar scal = sigma.values.at(kt.c, ht.a) * sv.at(kt.a, ht.c);
                    if (scal.is_zero()) continue;
                    scal *= kt.coef * ht.coef;
                    for (long alpha = 0; alpha < dk; ++alpha) {
                        for (long w = 0; w < dk; ++w) {
                            const CycScalar& km = k.comul.at(w, alpha, kt.b);  // k*_alpha k*_b in K*
                            if (km.is_zero()) continue;
                            for (long hh = 0; hh < dh; ++hh) {
                                for (long t2 = 0; t2 < dh; ++t2) {
                                    const CycScalar& hm = h.mul.at(ht.b, hh, t2);
                                    if (!hm.is_zero()) {
                                        d.mul.at(idx(alpha, g), idx(beta, hh), idx(w, t2)) += scal * km * hm;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    {
        auto rep = validate_bialgebra(d);
        if (!rep.empty()) throw std::logic_error("quantum_double bialgebra axioms fail: " + describe(rep));
    }
    d.antipode = antipode_from_bialgebra(d);
    d.prov.kind = Provenance::Kind::QuantumDouble;
    require_hopf(d, "quantum_double");
    return d;
}

HopfAlgebra drinfeld_double(const HopfAlgebra& h) {
    HopfPairing ev = evaluation_pairing(h);
    return quantum_double(ev);
}

HModule double_module(const HopfPairing& sigma, const HopfAlgebra& dbl, const HModule& v) {
    const HopfAlgebra& k = *sigma.k;
    const HopfAlgebra& h = *sigma.h;
    if (v.parent != &h) throw ShapeMismatch("double_module: V must be an H-module");
    const long dk = k.dim, dh = h.dim, dv = v.dim;
    if (dbl.dim != dk * dh) throw ShapeMismatch("double_module: double dimension");
    Matrix sk_inv = inverse(k.antipode);
    Matrix sv = sk_inv * sigma.values;
    auto aidx = [dh](long i, long g) { return i * dh + g; };
    auto midx = [dv](long i, long m) { return i * dv + m; };

    HModule out;
    out.parent = &dbl;
    out.dim = dk * dv;
    out.actions.assign(static_cast<std::size_t>(dk * dh), Matrix(dk * dv, dk * dv));
    for (long beta = 0; beta < dk; ++beta) {
        auto kst = dual_delta2(k, beta);
        for (long g = 0; g < dh; ++g) {
            auto hst = delta2(h, g);
            for (const auto& kt : kst) {
                for (const auto& ht : hst) {
                    CycScalar scal = sigma.values.at(kt.c, ht.a) * sv.at(kt.a, ht.c);
                    if (scal.is_zero()) continue;
                    scal *= kt.coef * ht.coef;
                    const Matrix& av = v.actions[static_cast<std::size_t>(ht.b)];
                    for (long alpha = 0; alpha < dk; ++alpha) {
                        Matrix& act = out.actions[static_cast<std::size_t>(aidx(alpha, g))];
                        for (long w = 0; w < dk; ++w) {
                            const CycScalar& km = k.comul.at(w, alpha, kt.b);
                            if (km.is_zero()) continue;
                            for (long m = 0; m < dv; ++m) {
                                for (long m2 = 0; m2 < dv; ++m2) {
                                    const CycScalar& vv = av.at(m2, m);
                                    if (!vv.is_zero()) {
                                        act.at(midx(w, m2), midx(beta, m)) += scal * km * vv;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    require_module(out, "double_module");
    return out;
}

}  // namespace hopfind
