#include "hopfind/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfind {

namespace {

std::atomic<long> g_conductor_bound{1000000};

using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

void strip(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial phi, in place.
void reduce_mod(QPoly& p, const ZPoly& phi) {
    const std::size_t deg = phi.size() - 1;
    while (p.size() > deg) {
        Rational lead = p.back();
        std::size_t shift = p.size() - 1 - deg;
        if (lead != 0) {
            for (std::size_t i = 0; i < deg; ++i) {
                p[shift + i] -= lead * Rational(phi[i]);
            }
        }
        p.pop_back();
    }
}

// Exact division of integer polynomials, divisor monic.
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
    ZPoly quot(num.size() - den.size() + 1, Integer(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer c = num[k + den.size() - 1];
        quot[k] = c;
        if (c != 0) {
            for (std::size_t i = 0; i < den.size(); ++i) {
                num[k + i] -= c * den[i];
            }
        }
    }
    return quot;
}

long lcm_checked(long a, long b) {
    long l = (a / std::gcd(a, b)) * b;
    if (l > conductor_bound()) throw ConductorOverflow(l);
    return l;
}

}  // namespace

long conductor_bound() { return g_conductor_bound.load(); }
void set_conductor_bound(long bound) { g_conductor_bound.store(bound); }

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    static std::map<long, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    ZPoly num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    std::function<const ZPoly&(long)> get = [&](long m) -> const ZPoly& {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        ZPoly acc(m + 1, Integer(0));
        acc[0] = -1;
        acc[m] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d == 0) acc = divide_exact(std::move(acc), get(d));
        }
        return cache.emplace(m, std::move(acc)).first->second;
    };
    return get(n);
}

void CycScalar::reduce_trivial() {
    if (n_ == 1) return;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) return;
    }
    Rational v = c_.empty() ? Rational(0) : c_[0];
    n_ = 1;
    c_.assign(1, v);
}

CycScalar::CycScalar() : n_(1), c_(1, Rational(0)) {}

CycScalar::CycScalar(long value) : n_(1), c_(1, Rational(value)) {}

CycScalar::CycScalar(const Rational& value) : n_(1), c_(1, value) {
    c_[0].canonicalize();
}

CycScalar::CycScalar(long conductor, std::vector<Rational> coeffs) : n_(conductor), c_(std::move(coeffs)) {
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    if (conductor > conductor_bound()) throw ConductorOverflow(conductor);
    c_.resize(static_cast<std::size_t>(euler_phi(conductor)), Rational(0));
    reduce_trivial();
}

CycScalar CycScalar::root_of_unity(long n, long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: order must be positive");
    if (n > conductor_bound()) throw ConductorOverflow(n);
    k %= n;
    if (k < 0) k += n;
    long g = std::gcd(k, n);
    long m = n / g;   // zeta_n^k is a primitive m-th root
    long e = k / g;
    if (m == 1) return CycScalar(1);
    if (m == 2) return CycScalar(-1);
    const ZPoly& phi = cyclotomic_polynomial(m);
    QPoly p(e + 1, Rational(0));
    p[e] = 1;
    reduce_mod(p, phi);
    p.resize(static_cast<std::size_t>(euler_phi(m)), Rational(0));
    return CycScalar(m, std::move(p));
}

bool CycScalar::is_zero() const {
    for (const auto& x : c_) {
        if (x != 0) return false;
    }
    return true;
}

bool CycScalar::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) return false;
    }
    return true;
}

bool CycScalar::is_rational() const {
    if (n_ == 1) return true;
    return canonical().conductor() == 1;
}

bool CycScalar::is_integer() const {
    CycScalar c = canonical();
    return c.conductor() == 1 && c.c_[0].get_den() == 1;
}

Rational CycScalar::rational_value() const {
    CycScalar c = canonical();
    if (c.conductor() != 1) throw std::logic_error("rational_value: not a rational");
    return c.c_[0];
}

CycScalar CycScalar::promoted(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("promoted: conductor must divide target");
    if (m > conductor_bound()) throw ConductorOverflow(m);
    long q = m / n_;
    const ZPoly& phi = cyclotomic_polynomial(m);
    QPoly p;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::size_t e = i * static_cast<std::size_t>(q);
        if (p.size() <= e) p.resize(e + 1, Rational(0));
        p[e] += c_[i];
    }
    reduce_mod(p, phi);
    p.resize(static_cast<std::size_t>(euler_phi(m)), Rational(0));
    CycScalar out;
    out.n_ = m;
    out.c_ = std::move(p);
    return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    if (n_ == 1 && o.n_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    long m = lcm_checked(n_, o.n_);
    CycScalar a = promoted(m), b = o.promoted(m);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.reduce_trivial();
    *this = std::move(a);
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    return *this += -o;
}

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    if (n_ == 1 && o.n_ == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    if (is_zero() || o.is_zero()) {
        *this = CycScalar();
        return *this;
    }
    if (n_ == 1) {  // rational scaling
        CycScalar r = o;
        for (auto& x : r.c_) x *= c_[0];
        r.reduce_trivial();
        *this = std::move(r);
        return *this;
    }
    if (o.n_ == 1) {
        for (auto& x : c_) x *= o.c_[0];
        reduce_trivial();
        return *this;
    }
    long m = lcm_checked(n_, o.n_);
    CycScalar a = promoted(m), b = o.promoted(m);
    QPoly prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    reduce_mod(prod, cyclotomic_polynomial(m));
    prod.resize(static_cast<std::size_t>(euler_phi(m)), Rational(0));
    CycScalar out;
    out.n_ = m;
    out.c_ = std::move(prod);
    out.reduce_trivial();
    *this = std::move(out);
    return *this;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (n_ == 1) return CycScalar(Rational(1) / c_[0]);
    // Extended Euclid against Phi_n over Q: u*a + v*Phi = 1.
    const ZPoly& phiz = cyclotomic_polynomial(n_);
    QPoly r0(phiz.begin(), phiz.end());
    QPoly r1 = c_;
    strip(r1);
    QPoly s0(1, Rational(0)), s1(1, Rational(1));  // coefficients of a
    strip(s0);
    while (true) {
        // divide r0 by r1
        QPoly q;
        QPoly rem = r0;
        strip(rem);
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational coef = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
            q[shift] += coef;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                rem[shift + i] -= coef * r1[i];
            }
            strip(rem);
        }
        // s_new = s0 - q*s1
        QPoly snew = s0;
        if (snew.size() < q.size() + s1.size()) snew.resize(q.size() + s1.size(), Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) {
                snew[i + j] -= q[i] * s1[j];
            }
        }
        strip(snew);
        if (rem.empty()) {
            // r1 is the gcd: a nonzero constant since Phi_n is irreducible.
            if (r1.size() != 1) throw std::logic_error("cyclotomic inverse: nonconstant gcd");
            QPoly u = s1;
            for (auto& x : u) x /= r1[0];
            reduce_mod(u, phiz);
            u.resize(static_cast<std::size_t>(euler_phi(n_)), Rational(0));
            CycScalar out;
            out.n_ = n_;
            out.c_ = std::move(u);
            out.reduce_trivial();
            return out;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
    return *this *= o.inverse();
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    return (a - b).is_zero();
}

CycScalar CycScalar::galois(long k) const {
    if (std::gcd(((k % n_) + n_) % n_, n_) != 1) throw std::invalid_argument("galois: k not coprime to conductor");
    if (n_ == 1) return *this;
    k = ((k % n_) + n_) % n_;
    QPoly p;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::size_t e = (i * static_cast<std::size_t>(k)) % static_cast<std::size_t>(n_);
        if (p.size() <= e) p.resize(e + 1, Rational(0));
        p[e] += c_[i];
    }
    reduce_mod(p, cyclotomic_polynomial(n_));
    p.resize(static_cast<std::size_t>(euler_phi(n_)), Rational(0));
    CycScalar out;
    out.n_ = n_;
    out.c_ = std::move(p);
    out.reduce_trivial();
    return out;
}

CycScalar CycScalar::canonical() const {
    CycScalar cur = *this;
    cur.reduce_trivial();
    bool changed = true;
    while (changed && cur.n_ > 1) {
        changed = false;
        long n = cur.n_;
        for (long p = 2; p <= n; ++p) {
            if (n % p != 0) continue;
            long m = n / p;
            // Solve promotion(m -> n) * y = cur.c_ by Gaussian elimination.
            long pm = euler_phi(m), pn = euler_phi(n);
            std::vector<QPoly> cols;
            cols.reserve(pm);
            for (long i = 0; i < pm; ++i) {
                CycScalar basis;
                basis.n_ = m;
                basis.c_.assign(pm, Rational(0));
                basis.c_[i] = 1;
                cols.push_back(basis.promoted(n).c_);
            }
            // Augmented system [cols | cur.c_].
            std::vector<QPoly> aug(pn, QPoly(pm + 1, Rational(0)));
            for (long r = 0; r < pn; ++r) {
                for (long ci = 0; ci < pm; ++ci) aug[r][ci] = cols[ci][r];
                aug[r][pm] = cur.c_[r];
            }
            std::vector<long> pivot_of_col(pm, -1);
            long row = 0;
            for (long col = 0; col < pm && row < pn; ++col) {
                long pr = -1;
                for (long r = row; r < pn; ++r) {
                    if (aug[r][col] != 0) { pr = r; break; }
                }
                if (pr < 0) continue;
                std::swap(aug[row], aug[pr]);
                Rational inv = 1 / aug[row][col];
                for (long cc = col; cc <= pm; ++cc) aug[row][cc] *= inv;
                for (long r = 0; r < pn; ++r) {
                    if (r == row || aug[r][col] == 0) continue;
                    Rational f = aug[r][col];
                    for (long cc = col; cc <= pm; ++cc) aug[r][cc] -= f * aug[row][cc];
                }
                pivot_of_col[col] = row;
                ++row;
            }
            bool consistent = true;
            for (long r = row; r < pn; ++r) {
                if (aug[r][pm] != 0) { consistent = false; break; }
            }
            if (!consistent) continue;
            std::vector<Rational> y(pm, Rational(0));
            for (long col = 0; col < pm; ++col) {
                if (pivot_of_col[col] >= 0) y[col] = aug[pivot_of_col[col]][pm];
            }
            CycScalar down;
            down.n_ = m;
            down.c_ = std::move(y);
            down.reduce_trivial();
            cur = std::move(down);
            changed = true;
            break;
        }
    }
    return cur;
}

int CycScalar::compare(const CycScalar& a, const CycScalar& b) {
    CycScalar ca = a.canonical(), cb = b.canonical();
    if (ca.n_ != cb.n_) return ca.n_ < cb.n_ ? -1 : 1;
    for (std::size_t i = 0; i < ca.c_.size(); ++i) {
        int c = cmp(ca.c_[i], cb.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string CycScalar::str() const {
    CycScalar c = canonical();
    if (c.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c.c_.size(); ++i) {
        const Rational& q = c.c_[i];
        if (q == 0) continue;
        Rational mag = q < 0 ? Rational(-q) : q;
        if (first) {
            if (q < 0) out << "-";
            first = false;
        } else {
            out << (q < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "z" << c.n_;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

CycScalar CycScalar::from_string(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_uint = [&]() -> Integer {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", pos);
        return Integer(text.substr(start, pos - start));
    };
    auto parse_long = [&]() -> long {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        Integer v = parse_uint();
        if (!v.fits_slong_p()) throw ParseError("number out of range", pos);
        return neg ? -v.get_si() : v.get_si();
    };

    CycScalar total;
    skip_ws();
    bool expect_term = true;
    int sign = 1;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        char ch = text[pos];
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-') {
                sign = -sign;
                ++pos;
                continue;
            }
            if (expect_term) { ++pos; continue; }
            sign = ch == '-' ? -1 : 1;
            ++pos;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw ParseError("expected '+' or '-'", pos);
        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Integer num = parse_uint();
            Integer den(1);
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                den = parse_uint();
                if (den == 0) throw ParseError("zero denominator", pos);
            }
            coef = Rational(num, den);
            coef.canonicalize();
            have_coef = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        CycScalar term(coef);
        if (pos < text.size() && (text[pos] == 'z' || text[pos] == 'Z')) {
            ++pos;
            long n = parse_long();
            if (n < 1) throw ParseError("root order must be positive", pos);
            long k = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                k = parse_long();
            }
            term *= root_of_unity(n, k);
        } else if (!have_coef) {
            throw ParseError("expected term", pos);
        }
        if (sign < 0) term = -term;
        total += term;
        sign = 1;
        expect_term = false;
        skip_ws();
    }
    if (expect_term) throw ParseError("dangling sign or empty input", pos);
    return total;
}

}  // namespace hopfind
