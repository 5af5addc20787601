#pragma once

#include "hopfind/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace hopfind {

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error("shape mismatch: " + what) {}
};

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("matrix is singular") {}
};

using Vec = std::vector<CycScalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const CycScalar& s, const Vec& a);
CycScalar vec_dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);

/// Dense row-major matrix over Q(zeta).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(long rows, long cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {}

    static Matrix identity(long n);
    static Matrix from_columns(const std::vector<Vec>& cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    CycScalar& at(long r, long c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
    const CycScalar& at(long r, long c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }

    Matrix transpose() const;
    CycScalar trace() const;
    bool is_zero() const;
    bool is_identity() const;

    Vec column(long c) const;
    Vec row(long r) const;
    /// Matrix-vector product.
    Vec apply(const Vec& v) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const CycScalar& s, Matrix a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    long rows_, cols_;
    std::vector<CycScalar> e_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& m);

struct Echelon {
    Matrix rref;               // reduced row echelon form
    std::vector<long> pivots;  // pivot column of each pivot row
    long rank = 0;
};

/// Deterministic reduced echelon form: leftmost pivot column, topmost row,
/// fraction-free (Bareiss) forward elimination on denominator-cleared rows,
/// divisions deferred to the final normalization.
Echelon echelonize(const Matrix& m);

long rank(const Matrix& m);

/// Canonical exact basis of the right null space; empty iff m is injective
/// on columns.
std::vector<Vec> kernel_basis(const Matrix& m);

/// One exact solution of m x = rhs with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& rhs);

/// Solve m X = rhs columnwise; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& rhs);

/// Dense rank-3 tensor of scalars; entry order is row-major in (i, j, k).
class Tensor3 {
public:
    Tensor3() : d1_(0), d2_(0), d3_(0) {}
    Tensor3(long d1, long d2, long d3)
        : d1_(d1), d2_(d2), d3_(d3), e_(static_cast<std::size_t>(d1 * d2 * d3)) {}

    long dim1() const { return d1_; }
    long dim2() const { return d2_; }
    long dim3() const { return d3_; }

    CycScalar& at(long i, long j, long k) {
        return e_[static_cast<std::size_t>((i * d2_ + j) * d3_ + k)];
    }
    const CycScalar& at(long i, long j, long k) const {
        return e_[static_cast<std::size_t>((i * d2_ + j) * d3_ + k)];
    }

    friend bool operator==(const Tensor3& a, const Tensor3& b);
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

private:
    long d1_, d2_, d3_;
    std::vector<CycScalar> e_;
};

}  // namespace hopfind
