#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfind {

struct InvalidGroupTable : std::runtime_error {
    InvalidGroupTable(const std::string& what, long a, long b, long c)
        : std::runtime_error("invalid group table: " + what + " at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")"),
          witness{a, b, c} {}
    long witness[3];
};

struct NotExactFactorization : std::runtime_error {
    explicit NotExactFactorization(const std::string& what)
        : std::runtime_error("not an exact factorization: " + what) {}
};

/// Finite group given by its multiplication table. Elements are 0-based
/// indices; the table is validated on construction.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<long>> table,
                                  std::vector<std::string> labels = {});
    static FiniteGroup trivial();
    static FiniteGroup cyclic(long n);
    static FiniteGroup dihedral(long n);    // order 2n
    static FiniteGroup symmetric(long n);   // n <= 5
    static FiniteGroup alternating(long n); // n <= 5
    static FiniteGroup quaternion8();
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    long order() const { return n_; }
    long mul(long a, long b) const { return mul_[static_cast<std::size_t>(a * n_ + b)]; }
    long identity() const { return identity_; }
    long inverse(long a) const { return inv_[static_cast<std::size_t>(a)]; }
    const std::string& label(long a) const { return labels_[static_cast<std::size_t>(a)]; }

    long power(long a, long k) const;
    long element_order(long a) const;
    long exponent() const;

    /// Conjugacy classes, each sorted, ordered by least member.
    std::vector<std::vector<long>> conjugacy_classes() const;

    /// Closure of a generating set, sorted.
    std::vector<long> subgroup_closure(std::vector<long> gens) const;
    /// All subgroups as sorted element lists, deterministic order.
    std::vector<std::vector<long>> subgroups() const;

    const std::vector<long>& table() const { return mul_; }

private:
    FiniteGroup() = default;
    void finish_and_validate();

    long n_ = 0;
    std::vector<long> mul_;
    long identity_ = 0;
    std::vector<long> inv_;
    std::vector<std::string> labels_;
};

/// Brute-force isomorphism test with order-statistics pruning; both orders
/// must be at most `cap`.
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b, long cap = 48);

struct GroupHom {
    const FiniteGroup* source = nullptr;
    const FiniteGroup* target = nullptr;
    std::vector<long> images;

    bool is_valid() const;
    bool is_bijective() const;
};

/// Matched pair (F, G, |>, <|): a left action of G on the set F and a right
/// action of F on the set G satisfying the Takeuchi compatibilities
/// x |> bc = (x |> b)((x <| b) |> c) and xy <| b = (x <| (y |> b))(y <| b).
class MatchedPair {
public:
    MatchedPair(FiniteGroup f, FiniteGroup g, std::vector<long> act_left, std::vector<long> act_right);

    static MatchedPair trivial(FiniteGroup f, FiniteGroup g);

    const FiniteGroup& F() const { return f_; }
    const FiniteGroup& G() const { return g_; }

    /// x |> b for x in G, b in F.
    long left_act(long x, long b) const { return actl_[static_cast<std::size_t>(x * f_.order() + b)]; }
    /// x <| b for x in G, b in F.
    long right_act(long x, long b) const { return actr_[static_cast<std::size_t>(x * f_.order() + b)]; }

private:
    FiniteGroup f_, g_;
    std::vector<long> actl_, actr_;
};

/// Actions defined by unique decomposition x a = (x |> a)(x <| a) inside L.
MatchedPair matched_pair_from_factorization(const FiniteGroup& l, const std::vector<long>& f_sub,
                                            const std::vector<long>& g_sub);

/// The group F><G on F x G with (a,x)(b,y) = (a(x |> b), (x <| b)y).
FiniteGroup double_group(const MatchedPair& mp);

/// |{x in G : (a,x)^n = (1,1) in F><G}| by brute force.
long count_power_solutions(const MatchedPair& mp, long a, long n);

/// All exact factorizations (F, G) of l as pairs of sorted subgroups,
/// F * G = l elementwise-uniquely; deterministic order.
std::vector<std::pair<std::vector<long>, std::vector<long>>> exact_factorizations(const FiniteGroup& l);

}  // namespace hopfind
