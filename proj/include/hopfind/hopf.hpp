#pragma once

#include "hopfind/group.hpp"
#include "hopfind/linalg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hopfind {

struct HopfAlgebra;

/// Construction history, used to transport irreducible character tables.
struct Provenance {
    enum class Kind { Generic, GroupAlgebra, DualGroupAlgebra, Tensor, Op, Cop, Biop, Bismash, QuantumDouble };
    Kind kind = Kind::Generic;
    std::shared_ptr<const FiniteGroup> group;        // GroupAlgebra / DualGroupAlgebra
    std::shared_ptr<const HopfAlgebra> left, right;  // Tensor factors; Op/Cop/Biop base in `left`
};

/// Finite-dimensional Hopf algebra in structure-constant form over Q(zeta).
///
/// mul.at(i, j, k)   is the coefficient of e_k in e_i e_j,
/// comul.at(i, j, k) is the coefficient of e_j (x) e_k in Delta(e_i),
/// antipode column j holds the coordinates of S(e_j).
struct HopfAlgebra {
    long dim = 0;
    std::vector<std::string> labels;
    Tensor3 mul;
    Vec unit;
    Tensor3 comul;
    Vec counit;
    Matrix antipode;
    Provenance prov;

    Vec multiply(const Vec& a, const Vec& b) const;
    CycScalar counit_of(const Vec& a) const;
    Matrix left_mult_matrix(long basis_index) const;
    Matrix left_mult_matrix(const Vec& a) const;
    bool structure_equal(const HopfAlgebra& o) const;  // tensors only, labels ignored
};

struct HElement {
    const HopfAlgebra* parent = nullptr;
    Vec coords;
};

struct AxiomViolation {
    std::string axiom;
    std::vector<long> witness;
};

std::string describe(const std::vector<AxiomViolation>& report);

/// All bialgebra axioms (associativity, unitality, coassociativity,
/// counitality, Delta and epsilon algebra maps), with witnesses.
std::vector<AxiomViolation> validate_bialgebra(const HopfAlgebra& h);
/// Bialgebra axioms plus the antipode axioms.
std::vector<AxiomViolation> validate_hopf(const HopfAlgebra& h);
/// Throws std::logic_error when validate_hopf is nonempty.
void require_hopf(const HopfAlgebra& h, const std::string& context);

HopfAlgebra group_algebra(const FiniteGroup& g);
HopfAlgebra dual_group_algebra(const FiniteGroup& g);
HopfAlgebra dual_hopf(const HopfAlgebra& h);
HopfAlgebra op_cop_variants(const HopfAlgebra& h, bool flip_mul, bool flip_comul);
HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

struct NotUnimodularOrNotSemisimple : std::runtime_error {
    explicit NotUnimodularOrNotSemisimple(const std::string& what)
        : std::runtime_error("integral failure: " + what) {}
};

/// The unique two-sided integral with counit value 1.
HElement normalized_integral(const HopfAlgebra& h);

struct ExponentBoundExceeded : std::runtime_error {
    explicit ExponentBoundExceeded(long bound)
        : std::runtime_error("Hopf power map did not reach unit*counit within dim^3 = " + std::to_string(bound)) {}
};

/// Incrementally extended family of Sweedler power maps P_n : h -> h^{[n]},
/// P_1 = id, P_{n+1} = mul (P_n (x) id) Delta.
class PowerMapEngine {
public:
    explicit PowerMapEngine(const HopfAlgebra& h);
    const Matrix& power(long n);
    const HopfAlgebra& algebra() const { return *h_; }

private:
    const HopfAlgebra* h_;
    std::vector<Matrix> powers_;
};

Vec sweedler_power(const HopfAlgebra& h, const Vec& x, long n);
Matrix hopf_power_map(const HopfAlgebra& h, long n);
/// Least n >= 1 with the n-th power map equal to unit * counit.
long exponent(const HopfAlgebra& h);

/// Matrix of unit * counit (the rank-one map h -> eps(h) 1).
Matrix unit_counit_matrix(const HopfAlgebra& h);

}  // namespace hopfind
