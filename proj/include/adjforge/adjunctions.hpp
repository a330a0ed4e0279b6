#pragma once

// Adjoint pairs between finite categories: induced (co)monads, comparison and
// related functors, the eight-condition idempotent-pair battery, Fix
// subcategories, equivalence verification and star-pair checks.

#include "adjforge/monadics.hpp"

namespace adjforge::adjunctions {

using fincat::CatPtr;
using fincat::FinFunctor;
using fincat::Mor;
using fincat::NatTrans;
using fincat::Obj;
using fincat::Validation;
using monadics::CoEmAdjunction;
using monadics::EmAdjunction;
using monadics::FinComonad;
using monadics::FinMonad;

struct FinAdjunction {
    FinFunctor f;  // A -> B, left adjoint
    FinFunctor g;  // B -> A, right adjoint
    NatTrans eta;  // Id_A => GF
    NatTrans eps;  // FG => Id_B
};

Validation validate_adjunction(const FinAdjunction& a);

// The natural bijection Mor(F(A),B) ~ Mor(A,G(B)) realized as explicit maps,
// verified mutually inverse.
struct HomBijection {
    std::vector<Mor> fa_to_b;     // hom(F(A),B) in iteration order
    std::vector<Mor> a_to_gb;     // forward images, same order
    bool mutually_inverse = false;
};
HomBijection hom_bijection(const FinAdjunction& a, Obj obj_a, Obj obj_b);
Mor transpose_forward(const FinAdjunction& a, Obj obj_a, Mor f);   // phi(f) = G(f).eta
Mor transpose_backward(const FinAdjunction& a, Obj obj_b, Mor g);  // eps.F(g)

FinMonad induced_monad(const FinAdjunction& a);
FinComonad induced_comonad(const FinAdjunction& a);

// Comparison functors into the materialized EM and co-EM categories, plus the
// related functors between them.
struct RelatedFunctors {
    FinMonad monad;         // GF
    FinComonad comonad;     // FG
    EmAdjunction em;        // of GF
    CoEmAdjunction coem;    // of FG
    FinFunctor g_bar;       // B -> EM(GF),   B |-> (G(B), G(eps_B))
    FinFunctor f_bar;       // A -> coEM(FG), A |-> (F(A), F(eta_A))
    FinFunctor f_tilde;     // EM(GF) -> coEM(FG)
    FinFunctor g_tilde;     // coEM(FG) -> EM(GF)
};
RelatedFunctors related_functors(const FinAdjunction& a,
                                 int morphism_budget = fincat::kDefaultMorphismBudget);

// Per-module equivalence report for the unit (dually counit) proposition:
// eta_A module morphism <=> eta_A epi <=> action iso.
struct ModuleMorphismRow {
    Obj carrier;
    Mor action;
    bool unit_is_module_morphism = false;
    bool unit_is_epi = false;
    bool unit_is_iso = false;
    bool action_is_iso = false;
};
struct UnitModuleAnalysis {
    std::vector<ModuleMorphismRow> module_rows;    // GF-modules vs eta
    std::vector<ModuleMorphismRow> comodule_rows;  // FG-comodules vs eps (dual reading)
    bool equivalences_hold = true;  // module-morphism == epi(iso reading) == action iso
    std::string witness;
};
UnitModuleAnalysis unit_module_morphism_analysis(
    const FinAdjunction& a, int morphism_budget = fincat::kDefaultMorphismBudget);

// Eight conditions of the idempotent-pair theorem, evaluated independently.
struct PairBatteryReport {
    bool a = false;  // U_GF full and faithful
    bool b = false;  // EM counit iso
    bool c = false;  // G(eps)F iso
    bool d = false;  // eps(F) iso
    bool e = false;  // U^FG full and faithful
    bool f = false;  // co-EM unit iso
    bool g = false;  // F(eta)G iso
    bool h = false;  // eta(G) iso
    std::vector<std::string> witnesses;
    bool verdict() const { return a && b && c && d && e && f && g && h; }
    bool coherent() const {
        return a == b && b == c && c == d && d == e && e == f && f == g && g == h;
    }
    std::array<bool, 8> as_array() const { return {a, b, c, d, e, f, g, h}; }
};
PairBatteryReport idempotent_pair_battery(
    const FinAdjunction& a, int morphism_budget = fincat::kDefaultMorphismBudget);

enum class FixSide { GF, FG };

struct FixSubcategory {
    FixSide side;
    std::vector<Obj> members;        // unit (resp. counit) component is iso
    std::vector<Obj> image_closure;  // iso closure of the image of GF (resp. FG)
    bool matches_image_closure = false;
};
FixSubcategory fix(const FinAdjunction& a, FixSide side);

struct EquivalenceReport {
    bool ran = false;  // false when the pair is not idempotent
    bool reflective = false;
    bool coreflective = false;
    bool mutually_inverse = false;
    std::vector<std::string> witnesses;
    bool ok() const { return ran && reflective && coreflective && mutually_inverse; }
};
EquivalenceReport verify_equivalence(const FinAdjunction& a,
                                     int morphism_budget = fincat::kDefaultMorphismBudget);

struct StarPairReport {
    bool unit_extremal_epi = false;
    bool counit_extremal_mono = false;
    bool is_star_pair() const { return unit_extremal_epi && counit_extremal_mono; }
    // Only evaluated when the pair is a star pair:
    bool fix_gf_closed_under_subobjects = false;
    bool fix_fg_closed_under_factors = false;
    bool gf_preserves_epis = false;
    bool fg_preserves_monos = false;
    std::vector<std::string> witnesses;
};
StarPairReport star_pair_check(const FinAdjunction& a);

FinAdjunction identity_adjunction(const CatPtr& c);

}  // namespace adjforge::adjunctions
