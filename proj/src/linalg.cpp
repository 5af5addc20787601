#include "hopfind/linalg.hpp"

#include <algorithm>

namespace hopfind {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vec_add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_scale(const CycScalar& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

CycScalar vec_dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vec_dot");
    CycScalar r;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
    }
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const CycScalar& x) { return x.is_zero(); });
}

Matrix Matrix::identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = CycScalar(1);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Matrix(0, 0);
    Matrix m(static_cast<long>(cols[0].size()), static_cast<long>(cols.size()));
    for (long c = 0; c < m.cols(); ++c) {
        if (cols[c].size() != static_cast<std::size_t>(m.rows())) throw ShapeMismatch("from_columns");
        for (long r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (long r = 0; r < rows_; ++r) {
        for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

CycScalar Matrix::trace() const {
    if (rows_ != cols_) throw ShapeMismatch("trace of non-square matrix");
    CycScalar s;
    for (long i = 0; i < rows_; ++i) s += at(i, i);
    return s;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const CycScalar& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (long r = 0; r < rows_; ++r) {
        for (long c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    }
    return true;
}

Vec Matrix::column(long c) const {
    Vec v(static_cast<std::size_t>(rows_));
    for (long r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Vec Matrix::row(long r) const {
    Vec v(static_cast<std::size_t>(cols_));
    for (long c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != static_cast<std::size_t>(cols_)) throw ShapeMismatch("matrix apply");
    Vec out(static_cast<std::size_t>(rows_));
    for (long r = 0; r < rows_; ++r) {
        CycScalar s;
        for (long c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !v[c].is_zero()) s += at(r, c) * v[c];
        }
        out[r] = std::move(s);
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix add");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sub");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix mul");
    Matrix r(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i) {
        for (long k = 0; k < a.cols_; ++k) {
            const CycScalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return r;
}

Matrix operator*(const CycScalar& s, Matrix a) {
    for (auto& x : a.e_) x *= s;
    return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] != b.e_[i]) return false;
    }
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (long k = 0; k < b.rows(); ++k) {
                for (long l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return r;
}

namespace {

// Scale each row to clear rational denominators; kernel and row space are
// unchanged and the fraction-free pass then stays in the cyclotomic integers.
void clear_denominators(Matrix& m) {
    for (long r = 0; r < m.rows(); ++r) {
        Integer l(1);
        for (long c = 0; c < m.cols(); ++c) {
            for (const Rational& q : m.at(r, c).coeffs()) {
                l = lcm(l, q.get_den());
            }
        }
        if (l != 1) {
            CycScalar f{Rational(l)};
            for (long c = 0; c < m.cols(); ++c) m.at(r, c) *= f;
        }
    }
}

}  // namespace

Echelon echelonize(const Matrix& input) {
    Echelon out;
    Matrix m = input;
    clear_denominators(m);
    const long rows = m.rows(), cols = m.cols();
    long row = 0;
    CycScalar prev(1);
    std::vector<long> pivots;
    for (long col = 0; col < cols && row < rows; ++col) {
        long pr = -1;
        for (long r = row; r < rows; ++r) {
            if (!m.at(r, col).is_zero()) { pr = r; break; }
        }
        if (pr < 0) continue;
        if (pr != row) {
            for (long c = 0; c < cols; ++c) std::swap(m.at(row, c), m.at(pr, c));
        }
        CycScalar piv = m.at(row, col);
        for (long r = row + 1; r < rows; ++r) {
            CycScalar f = m.at(r, col);
            for (long c = col; c < cols; ++c) {
                CycScalar v = piv * m.at(r, c) - f * m.at(row, c);
                m.at(r, c) = v / prev;  // exact per Bareiss
            }
        }
        prev = piv;
        pivots.push_back(col);
        ++row;
    }
    // Normalize pivots to 1 and back-substitute to reduced form.
    for (long r = static_cast<long>(pivots.size()) - 1; r >= 0; --r) {
        long pc = pivots[r];
        CycScalar inv = m.at(r, pc).inverse();
        for (long c = pc; c < cols; ++c) m.at(r, c) *= inv;
        for (long r2 = 0; r2 < r; ++r2) {
            CycScalar f = m.at(r2, pc);
            if (f.is_zero()) continue;
            for (long c = pc; c < cols; ++c) m.at(r2, c) -= f * m.at(r, c);
        }
    }
    out.rank = static_cast<long>(pivots.size());
    out.pivots = std::move(pivots);
    out.rref = std::move(m);
    return out;
}

long rank(const Matrix& m) { return echelonize(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
    Echelon ech = echelonize(m);
    const long cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (long p : ech.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (long free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(static_cast<std::size_t>(cols));
        v[free] = CycScalar(1);
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            v[ech.pivots[r]] = -ech.rref.at(static_cast<long>(r), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != static_cast<std::size_t>(m.rows())) throw ShapeMismatch("solve_linear rhs");
    Matrix aug(m.rows(), m.cols() + 1);
    for (long r = 0; r < m.rows(); ++r) {
        for (long c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    Echelon ech = echelonize(aug);
    for (long p : ech.pivots) {
        if (p == m.cols()) return std::nullopt;
    }
    Vec x(static_cast<std::size_t>(m.cols()));
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        x[ech.pivots[r]] = ech.rref.at(static_cast<long>(r), m.cols());
    }
    return x;
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& rhs) {
    if (rhs.rows() != m.rows()) throw ShapeMismatch("solve_matrix rhs");
    Matrix aug(m.rows(), m.cols() + rhs.cols());
    for (long r = 0; r < m.rows(); ++r) {
        for (long c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        for (long c = 0; c < rhs.cols(); ++c) aug.at(r, m.cols() + c) = rhs.at(r, c);
    }
    Echelon ech = echelonize(aug);
    for (long p : ech.pivots) {
        if (p >= m.cols()) return std::nullopt;
    }
    Matrix x(m.cols(), rhs.cols());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        for (long c = 0; c < rhs.cols(); ++c) {
            x.at(ech.pivots[r], c) = ech.rref.at(static_cast<long>(r), m.cols() + c);
        }
    }
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
    auto x = solve_matrix(m, Matrix::identity(m.rows()));
    if (!x) throw SingularMatrix();
    return *x;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
    if (a.d1_ != b.d1_ || a.d2_ != b.d2_ || a.d3_ != b.d3_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] != b.e_[i]) return false;
    }
    return true;
}

}  // namespace hopfind
