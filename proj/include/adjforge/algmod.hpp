#pragma once

// Finite-dimensional algebras over F_p given by structure constants, left
// modules and bimodules as representation matrices, Hom/End/tensor
// constructions, and bounded isomorphism testing.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adjforge/ffla.hpp"
#include "adjforge/fincat.hpp"  // Validation, BudgetExceeded

namespace adjforge::algmod {

using ffla::Matrix;
using fincat::Validation;

struct FqAlgebra {
    uint32_t p = 2;
    int dim = 0;
    // constants[i][j] is the coordinate vector of b_i * b_j.
    std::vector<std::vector<std::vector<uint32_t>>> constants;
    std::vector<uint32_t> unit;
    std::string name;

    // Matrix of left multiplication by the element with coordinates a.
    Matrix left_mult(const std::vector<uint32_t>& a) const;
    Matrix left_mult_basis(int i) const;
    // Right multiplication p |-> p * b_j, as a matrix on coordinates.
    Matrix right_mult_basis(int j) const;
    std::vector<uint32_t> multiply(const std::vector<uint32_t>& a,
                                   const std::vector<uint32_t>& b) const;
};

struct LeftModule {
    std::shared_ptr<const FqAlgebra> algebra;
    int dim = 0;
    std::vector<Matrix> action;  // one per algebra basis element
    std::string name;

    Matrix act(const std::vector<uint32_t>& a) const;  // sum a_i * action[i]
};

struct Bimodule {
    std::shared_ptr<const FqAlgebra> left_algebra;   // R
    std::shared_ptr<const FqAlgebra> right_algebra;  // S
    int dim = 0;
    std::vector<Matrix> left_action;   // per R basis element
    std::vector<Matrix> right_action;  // per S basis element, p |-> p*s_j
    std::string name;

    LeftModule as_left_module() const;
};

struct ModuleMap {
    Matrix matrix;  // target.dim x source.dim
};

Validation validate_algebra(const FqAlgebra& r);
Validation validate_module(const LeftModule& m);
Validation validate_bimodule(const Bimodule& b);
bool is_module_map(const LeftModule& src, const LeftModule& dst, const Matrix& f);

// Basis of Hom_R(src, dst) = solutions of the intertwining equations.
std::vector<Matrix> hom_space(const LeftModule& src, const LeftModule& dst);
int hom_dim(const LeftModule& src, const LeftModule& dst);

// Coordinates of a matrix in a matrix basis (row-major), if representable.
std::optional<std::vector<uint32_t>> coordinates_in_matrix_basis(
    const std::vector<Matrix>& basis, const Matrix& m);

// S = End_R(P) with right-operator composition ((p)(fg) = ((p)f)g), and the
// (R,S)-bimodule structure it induces on P.
struct EndResult {
    std::shared_ptr<const FqAlgebra> endo;  // S
    std::vector<Matrix> basis;              // matrices of the basis endomorphisms
    Bimodule bimodule;                      // P as (R,S)-bimodule
};
EndResult endomorphism_algebra(const LeftModule& p);

// P tensor_S X as a left R-module, with the projection from the ambient
// p-major tensor space F^(dim P * dim X) and its section.
struct TensorResult {
    LeftModule module;
    Matrix projection;  // dim(T) x (dimP*dimX)
    Matrix section;     // (dimP*dimX) x dim(T)
};
TensorResult tensor_over(const Bimodule& p, const LeftModule& x);

// Hom_R(P, N) as a left S-module via (p)(s.f) = (p*s)f. Carries the hom basis
// so elements can be interpreted as matrices P -> N.
struct HomModule {
    LeftModule module;          // over S
    std::vector<Matrix> basis;  // hom basis, dim N x dim P each
};
HomModule hom_as_left_S_module(const Bimodule& p, const LeftModule& n);

LeftModule direct_sum(const std::vector<LeftModule>& ms);
LeftModule zero_module(const std::shared_ptr<const FqAlgebra>& r);

struct SubmoduleResult {
    LeftModule module;
    Matrix inclusion;  // dim(M) x dim(sub)
};
// Smallest submodule containing the given generator columns.
SubmoduleResult submodule(const LeftModule& m, const Matrix& generators);

struct QuotientResult {
    LeftModule module;
    Matrix projection;  // dim(Q) x dim(M)
    Matrix section;
};
QuotientResult quotient(const LeftModule& m, const Matrix& sub_basis);

enum class IsoStatus { Isomorphic, NotIsomorphic, Undecided };
struct IsoResult {
    IsoStatus status;
    std::optional<Matrix> witness;
};
IsoResult are_isomorphic(const LeftModule& m, const LeftModule& n,
                         long search_budget = 1 << 20);

// All modules of dimension <= max_dim up to isomorphism, deduped by cheap
// Hom-dimension invariants before pairwise witness search.
struct EnumerationResult {
    std::vector<LeftModule> modules;
    bool complete = true;  // false when a budget was hit
};
EnumerationResult enumerate_modules(const std::shared_ptr<const FqAlgebra>& r, int max_dim,
                                    long budget = 100'000'000);

// Standard small algebras used across tests and fixtures.
std::shared_ptr<const FqAlgebra> field_algebra(uint32_t p);
std::shared_ptr<const FqAlgebra> dual_numbers(uint32_t p);           // F_p[x]/(x^2)
std::shared_ptr<const FqAlgebra> upper_triangular_2x2(uint32_t p);   // basis E11,E22,E12
LeftModule regular_module(const std::shared_ptr<const FqAlgebra>& r);
// Field-linear dual of the right regular module, as a left module.
LeftModule coregular_module(const std::shared_ptr<const FqAlgebra>& r);

}  // namespace adjforge::algmod
