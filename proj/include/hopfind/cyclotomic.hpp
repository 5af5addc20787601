#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfind {

using Rational = mpq_class;
using Integer = mpz_class;

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

struct ConductorOverflow : std::runtime_error {
    explicit ConductorOverflow(long n)
        : std::runtime_error("conductor " + std::to_string(n) + " exceeds the configured bound") {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), offset(pos) {}
    std::size_t offset;
};

long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first,
/// including the leading 1. Memoized.
const std::vector<Integer>& cyclotomic_polynomial(long n);

long conductor_bound();
void set_conductor_bound(long bound);

/// Element of the cyclotomic field Q(zeta_N), stored as coefficients in the
/// power basis 1, zeta, ..., zeta^{phi(N)-1} modulo Phi_N. All arithmetic is
/// exact; values are immutable in the sense that every operation returns a
/// fresh scalar. Two scalars with different conductors combine in the lcm.
class CycScalar {
public:
    CycScalar();  // zero
    CycScalar(long value);
    CycScalar(const Rational& value);
    CycScalar(long conductor, std::vector<Rational> coeffs);

    /// zeta_n^k in reduced form; root_of_unity(n, 0) == 1.
    static CycScalar root_of_unity(long n, long k);
    static CycScalar from_string(const std::string& text);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True iff the value lies in Q.
    bool is_rational() const;
    bool is_integer() const;
    /// Value as a rational; requires is_rational().
    Rational rational_value() const;

    /// Reduce to the minimal conductor representing the same value.
    CycScalar canonical() const;
    /// Canonical textual form, e.g. "3/2 + 2*z6^5"; parses back exactly.
    std::string str() const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o);

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }

    /// Exact field equality (independent of representation conductor).
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Total order on canonical forms; used only for deterministic sorting.
    static int compare(const CycScalar& a, const CycScalar& b);

    CycScalar inverse() const;
    /// Galois conjugate zeta -> zeta^k, gcd(k, conductor) = 1.
    CycScalar galois(long k) const;

    /// Representation in Q(zeta_m); requires conductor() | m.
    CycScalar promoted(long m) const;

private:
    long n_;                   // conductor
    std::vector<Rational> c_;  // length phi(n_)

    void reduce_trivial();
};

inline CycScalar operator*(const Rational& a, CycScalar b) { return CycScalar(a) * b; }

}  // namespace hopfind
