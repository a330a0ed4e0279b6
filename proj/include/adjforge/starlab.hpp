#pragma once

// The concrete Hom/tensor adjunction of a bimodule P: unit/counit matrices,
// static/adstatic classification, presented/copresented tests, the window
// idempotence battery, and the star-module verdict with certificates.

#include "adjforge/algmod.hpp"
#include "adjforge/fincat.hpp"

namespace adjforge::starlab {

using algmod::Bimodule;
using algmod::FqAlgebra;
using algmod::HomModule;
using algmod::LeftModule;
using algmod::Matrix;
using algmod::TensorResult;

struct StarContext {
    std::shared_ptr<const FqAlgebra> ring;  // R
    Bimodule p;                             // (R,S)-bimodule
    std::shared_ptr<const FqAlgebra> endo;  // S
    bool endo_auto_computed = false;
    LeftModule cogenerator;                 // Q = D(R)
    LeftModule p_star;                      // Hom_R(P, Q) over S
    std::vector<LeftModule> r_window;
    std::vector<LeftModule> s_window;
    int window_dim = 0;
    bool windows_complete = true;
};

// S = End_R(P) unless a full bimodule is supplied; windows enumerated up to
// max_dim on both sides.
StarContext make_context(const LeftModule& p, int max_dim,
                         long enum_budget = 100'000'000);
StarContext make_context(const Bimodule& p, int max_dim,
                         long enum_budget = 100'000'000);

// eta_X : X -> H_P T_P(X), an S-module map.
struct UnitResult {
    Matrix matrix;
    LeftModule target;  // H_P T_P(X) over S
};
UnitResult unit_matrix(const StarContext& ctx, const LeftModule& x);

// eps_N : T_P H_P(N) -> N, an R-module map.
struct CounitResult {
    Matrix matrix;
    LeftModule source;  // T_P H_P(N) over R
};
CounitResult counit_matrix(const StarContext& ctx, const LeftModule& n);

bool is_static(const StarContext& ctx, const LeftModule& n);
bool is_adstatic(const StarContext& ctx, const LeftModule& x);

struct GeneratedResult {
    bool generated = false;
    Matrix canonical_cover;  // P^(hom basis) -> N, stacked hom matrices
};
GeneratedResult is_p_generated(const StarContext& ctx, const LeftModule& n);
bool is_p_presented(const StarContext& ctx, const LeftModule& n);
bool is_pstar_copresented(const StarContext& ctx, const LeftModule& x);

// Window forms of the four equivalent idempotence conditions; a and c are the
// natural-transformation forms, reported as window-bounded conjunctions.
struct ConcreteBattery {
    bool a = false, b = false, c = false, d = false, e = false, f = false;
    bool window_bounded = true;
    std::vector<std::string> witnesses;
    bool coherent() const { return b == d && d == e && e == f && a == b && c == d; }
    bool verdict() const { return a && b && c && d && e && f; }
};
ConcreteBattery idempotence_battery_concrete(const StarContext& ctx);

struct SelfSmallReport {
    bool holds = false;
    int lambda_bound = 0;
    // finite-dimensional P forces self-smallness for every finite index set
    bool forced_by_finite_dimension = true;
};
SelfSmallReport self_small_check(const StarContext& ctx, int lambda_bound);

struct WSigmaQpReport {
    bool holds = false;
    int k_bound = 0;
    long sequences_checked = 0;
    std::string witness;  // offending kernel description when it fails
};
WSigmaQpReport w_sigma_qp_check(const StarContext& ctx, int k_bound);

enum class StarStatus { StarOnWindow, Refuted, Undecided };

struct Certificate {
    enum class Kind { UnitNotSurjective, CounitNotInjective } kind;
    LeftModule module;  // the witnessing window module (serializable)
    Matrix map;         // the offending unit/counit matrix
};

struct StarVerdict {
    StarStatus status = StarStatus::Undecided;
    ConcreteBattery battery;
    std::vector<Certificate> certificates;
    int window_dim = 0;
    // extra checks performed on success
    bool static_closed_under_quotients = false;
    bool adstatic_closed_under_submodules = false;
    bool mutually_inverse_on_fixed = false;
    bool coproduct_psi_epi = false;
    bool product_phi_mono = false;
    std::vector<std::string> notes;
};
StarVerdict star_verdict(const StarContext& ctx);

// Re-run the failing map from the certificate data alone.
bool revalidate_certificate(const StarContext& ctx, const Certificate& cert);

// Finite category whose objects are the window modules and whose morphisms
// are all module maps between them; the cross-layer oracle.
struct WindowCategory {
    fincat::CatPtr category;
    std::vector<int> object_of_module;        // window index -> object id
    std::vector<Matrix> morphism_matrices;    // per morphism id
    std::optional<fincat::Mor> find_morphism(int src_obj, int dst_obj,
                                             const Matrix& m) const;
};
enum class WindowSide { R, S };
WindowCategory build_window_category(const StarContext& ctx, WindowSide side,
                                     long hom_budget = 4096);

// Functor action of T_P and H_P on module maps, relative to precomputed
// object images.
Matrix tensor_on_map(const StarContext& ctx, const LeftModule& x, const Matrix& g,
                     const TensorResult& tx, const TensorResult& tx2);
Matrix hom_on_map(const HomModule& h_src, const HomModule& h_dst, const Matrix& f);

}  // namespace adjforge::starlab
