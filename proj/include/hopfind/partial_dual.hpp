#pragma once

#include "hopfind/rep.hpp"

namespace hopfind {

struct NotSubalgebra : std::runtime_error {
    NotSubalgebra(const std::string& what, long i, long j)
        : std::runtime_error("not a subalgebra: " + what + " at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")") {}
};

struct NotLeftCoideal : std::runtime_error {
    explicit NotLeftCoideal(long j)
        : std::runtime_error("not a left coideal: Delta escapes H (x) B at basis index " + std::to_string(j)) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error("dimension mismatch: " + what) {}
};

/// Plain associative unital algebra in structure-constant form.
struct AssocAlgebra {
    long dim = 0;
    std::vector<std::string> labels;
    Tensor3 mul;
    Vec unit;

    Vec multiply(const Vec& a, const Vec& b) const;
    Matrix left_mult_matrix(long basis_index) const;
};

std::vector<AxiomViolation> validate_algebra(const AssocAlgebra& a);

/// Module over an AssocAlgebra.
struct AlgModule {
    const AssocAlgebra* parent = nullptr;
    long dim = 0;
    std::vector<Matrix> actions;
};

std::vector<AxiomViolation> validate_alg_module(const AlgModule& m);
AlgModule alg_regular_module(const AssocAlgebra& a);
AlgModule alg_one_dim_module(const AssocAlgebra& a, const Vec& phi);

/// Left coideal subalgebra B of H: inclusion, induced algebra, and the left
/// coaction Delta(iota(b_j)) = sum_k coaction[j] column k (x) b_k in H (x) B.
struct CoidealSubalgebra {
    const HopfAlgebra* parent = nullptr;
    Matrix inclusion;  // dim(H) x dim(B)
    AssocAlgebra algebra;
    Vec counit;  // eps_H restricted along the inclusion
    std::vector<Matrix> coaction;
};

CoidealSubalgebra coideal_subalgebra(const HopfAlgebra& h, const std::vector<Vec>& spanning);
/// Convenience: B spanned by images of the listed standard basis indices.
CoidealSubalgebra coideal_from_basis_indices(const HopfAlgebra& h, const std::vector<long>& indices);

/// Quotient coalgebra C = H / B+H as a right H-module coalgebra, with a
/// canonical basis of standard-vector representatives.
struct QuotientCoalgebra {
    const HopfAlgebra* parent = nullptr;
    long dim = 0;
    Matrix projection;  // dim(C) x dim(H)
    std::vector<long> rep_indices;
    std::vector<std::string> labels;
    Tensor3 comul;
    Vec counit;
    Tensor3 raction;  // raction.at(c, j, c') = coefficient of [x_c'] in [x_c] . e_j
};

QuotientCoalgebra quotient_coalgebra(const CoidealSubalgebra& b);

/// Smash product algebra on C* (x) B with (f#b)(g#c) = sum f (b_(1) -> g) # b_(2) c,
/// basis f_i # b_j at index i * dim(B) + j.
struct SmashAlgebra {
    AssocAlgebra algebra;
    long dim_cstar = 0;
    long dim_b = 0;
};

SmashAlgebra smash_algebra(const CoidealSubalgebra& b, const QuotientCoalgebra& c);

/// Module C* (x) L over the smash algebra, (f#b)(g (x) l) = sum f(b_(1) -> g) (x) b_(2) l.
AlgModule smash_module(const SmashAlgebra& s, const CoidealSubalgebra& b, const QuotientCoalgebra& c,
                       const AlgModule& l);

/// Cotensor module L square_{B*} H* as a left H-module via the hit action on
/// the H* leg; dimension dim(L) * dim(C).
HModule cotensor_module(const CoidealSubalgebra& b, const AlgModule& l, const HopfAlgebra& h);

/// True iff the smash algebra's structure constants coincide entrywise with
/// the witness Hopf algebra's multiplication and unit.
bool smash_matches_hopf(const SmashAlgebra& s, const HopfAlgebra& witness);

/// nu_n of a smash module computed through a Hopf algebra carrying the same
/// multiplication (a "witness" for the partial dual's Hopf structure).
CycScalar smash_module_indicator(IndicatorEngine& witness_engine, const AlgModule& m, long n);

/// Partially admissible mapping system (iota, zeta, pi, gamma) with the B and
/// C structure data needed to state its axioms.
struct PamsData {
    const HopfAlgebra* parent = nullptr;
    Matrix iota;   // d x dB
    Matrix zeta;   // dB x d
    Tensor3 b_mul;
    Vec b_unit;
    Matrix pi;     // dC x d
    Matrix gamma;  // d x dC
    Tensor3 c_comul;
    Vec c_counit;
    Tensor3 c_raction;

    long dim_b() const { return iota.cols(); }
    long dim_c() const { return pi.rows(); }
};

std::vector<AxiomViolation> pams_validate(const PamsData& p);

struct AssociatorResult {
    long dim = 0;  // dimension of C* (x) B
    Vec phi_inverse;  // element of (C* (x) B)^{(x)3}, index ((i1*dB+j1)*dim + ...)
    bool is_trivial = false;
};

AssociatorResult associator_inverse(const PamsData& p);

/// Both bismash products of a matched pair: first the Hopf algebra C^G # CF
/// on basis p_x # a, then CG # C^F on basis x # p_a; the second equals the
/// dual of the first under the canonical pairing.
std::pair<HopfAlgebra, HopfAlgebra> bismash_hopf(const MatchedPair& mp);

/// PAMS realizing CG # C^F as a left partial dual of C^(F><G).
/// The returned PamsData::parent is owned by the caller (pass dual group algebra of F><G).
PamsData bismash_pams(const MatchedPair& mp, const HopfAlgebra& h_dual_double);

/// PAMS realizing the quantum double as a left partial dual of K^op (x) H.
PamsData double_pams(const struct HopfPairing& sigma, const HopfAlgebra& kop_tensor_h);

/// PAMS for a split extension of group algebras: K normal in L with a
/// complement subgroup; parent must be group_algebra(L).
PamsData group_extension_pams(const HopfAlgebra& hl, const FiniteGroup& l, const std::vector<long>& normal_sub,
                              const std::vector<long>& complement_sub);

/// Hopf pairing sigma : K* (x) H -> Q(zeta); values.at(i, j) = sigma(k*_i, e_j).
struct HopfPairing {
    const HopfAlgebra* k = nullptr;
    const HopfAlgebra* h = nullptr;
    Matrix values;

    Matrix sigma_r() const { return values; }              // H -> K
    Matrix sigma_l() const { return values.transpose(); }  // K* -> H*, dual coordinates
};

/// sigma_r and sigma_l must both be Hopf algebra maps.
std::vector<AxiomViolation> validate_pairing(const HopfPairing& p);
HopfPairing evaluation_pairing(const HopfAlgebra& h);
HopfPairing trivial_pairing(const HopfAlgebra& k, const HopfAlgebra& h);

/// f : src -> dst as a matrix; empty report iff f is a Hopf algebra map.
std::vector<AxiomViolation> hopf_map_violations(const HopfAlgebra& src, const HopfAlgebra& dst, const Matrix& f);

/// Generalized quantum double K*^cop bowtie_sigma H; Drinfeld double for
/// K = H with the evaluation pairing.
HopfAlgebra quantum_double(const HopfPairing& sigma);
HopfAlgebra drinfeld_double(const HopfAlgebra& h);

/// K* (x) V as a module over quantum_double(sigma).
HModule double_module(const HopfPairing& sigma, const HopfAlgebra& dbl, const HModule& v);

/// Antipode of a bialgebra as the convolution inverse of the identity,
/// obtained from the finite convolution order of id (valid in the semisimple
/// setting); throws ExponentBoundExceeded if no order is found.
Matrix antipode_from_bialgebra(const HopfAlgebra& bialgebra);

}  // namespace hopfind
