#pragma once

#include "hopfind/hopf.hpp"

namespace hopfind {

struct NotAnAlgebraCharacter : std::runtime_error {
    explicit NotAnAlgebraCharacter(const std::string& what)
        : std::runtime_error("not an algebra character: " + what) {}
};

struct NotAlgebraMap : std::runtime_error {
    explicit NotAlgebraMap(const std::string& what) : std::runtime_error("not an algebra map: " + what) {}
};

struct PrimeSearchFailed : std::runtime_error {
    PrimeSearchFailed() : std::runtime_error("no usable prime found for the character lift") {}
};

struct LiftAmbiguous : std::runtime_error {
    explicit LiftAmbiguous(const std::string& what) : std::runtime_error("character lift failed: " + what) {}
};

struct UnsupportedProvenance : std::runtime_error {
    UnsupportedProvenance() : std::runtime_error("no irreducible character transport for this construction") {}
};

struct FsExpExceedsExpBound : std::runtime_error {
    FsExpExceedsExpBound() : std::runtime_error("regular indicator never reached dim within the exponent bound") {}
};

/// Left module over a HopfAlgebra: one action matrix per basis element.
struct HModule {
    const HopfAlgebra* parent = nullptr;
    long dim = 0;
    std::vector<Matrix> actions;

    Matrix action_of(const Vec& element) const;
};

std::vector<AxiomViolation> validate_module(const HModule& m);
void require_module(const HModule& m, const std::string& context);

HModule module_from_actions(const HopfAlgebra& h, std::vector<Matrix> actions);
HModule regular_module(const HopfAlgebra& h);
HModule trivial_module(const HopfAlgebra& h);
/// 1-dimensional module from an algebra character phi (values on the basis).
HModule one_dim_module(const HopfAlgebra& h, const Vec& phi);
HModule direct_sum(const HModule& a, const HModule& b);
/// Outer tensor product over tensor_hopf(parents); pass the tensor algebra.
HModule tensor_module(const HopfAlgebra& tensor_parent, const HModule& a, const HModule& b);
/// Contragredient M* as a module over op_cop_variants(parent, true, false).
HModule contragredient_module(const HopfAlgebra& op_parent, const HModule& m);

struct Character {
    const HopfAlgebra* parent = nullptr;
    Vec values;
};

Character character_of(const HModule& m);

/// nu_n(M) = <chi_M, Lambda^[n]> for semisimple parents.
CycScalar indicator(const HModule& m, long n);

/// Shared power-map cache for indicator sequences over one algebra.
class IndicatorEngine {
public:
    explicit IndicatorEngine(const HopfAlgebra& h);
    CycScalar of_character(const Vec& chi, long n);
    CycScalar of_module(const HModule& m, long n);
    const Vec& integral() const { return lambda_; }
    const HopfAlgebra& algebra() const { return eng_.algebra(); }

private:
    PowerMapEngine eng_;
    Vec lambda_;
};

/// Least n with nu_n(regular) = dim(h); bounded by exponent(h).
long fs_exponent(const HopfAlgebra& h);

/// Irreducible character table; row r holds chi_r on each basis element of
/// the underlying algebra (for groups: on each group element).
struct CharTable {
    std::vector<Vec> rows;
    std::vector<long> degrees;  // chi(1), parallel to rows
};

/// Burnside-Dixon: exact irreducible characters of a finite group with
/// values in Q(zeta_exp(G)), computed over a prime field and lifted.
CharTable dixon_char_table(const FiniteGroup& g, long order_cap = 48);

/// Character table transported along the algebra's construction history.
CharTable irr_characters(const HopfAlgebra& h, long order_cap = 48);

/// Character of the twisted diagonal module: chi(h) = sum chi_V(h_(1)) chi_W(sigma_r(h_(2))),
/// where sigma_r : H -> K must be an algebra map.
Vec twisted_tensor_character(const HopfAlgebra& h, const Vec& chi_v, const HopfAlgebra& k, const Vec& chi_w,
                             const Matrix& sigma_r);

}  // namespace hopfind
