#pragma once

// Monads and comonads on finite categories: (co)module enumeration,
// Eilenberg-Moore constructions, and the seven-condition idempotence
// batteries.

#include <array>
#include <optional>

#include "adjforge/fincat.hpp"

namespace adjforge::monadics {

using fincat::CatPtr;
using fincat::FinFunctor;
using fincat::Mor;
using fincat::NatTrans;
using fincat::Obj;
using fincat::Validation;

struct FinMonad {
    CatPtr cat;
    FinFunctor t;   // endofunctor
    NatTrans mu;    // TT => T
    NatTrans eta;   // Id => T
};

struct FinComonad {
    CatPtr cat;
    FinFunctor s;     // endofunctor
    NatTrans delta;   // S => SS
    NatTrans eps;     // S => Id
};

struct TModule {
    Obj carrier;
    Mor action;  // rho : T(carrier) -> carrier
};

struct SComodule {
    Obj carrier;
    Mor coaction;  // rho : carrier -> S(carrier)
};

Validation validate_monad(const FinMonad& m);
Validation validate_comonad(const FinComonad& s);

std::vector<TModule> enumerate_modules(const FinMonad& m);
std::vector<SComodule> enumerate_comodules(const FinComonad& s);

// Eilenberg-Moore category with its free/forgetful adjunction. Object i of
// `em` is modules[i]; em morphism ids map to base morphisms via `underlying`.
struct EmAdjunction {
    CatPtr em;
    std::vector<TModule> modules;
    std::vector<Mor> underlying;  // em morphism -> base morphism
    FinFunctor forgetful;         // em -> base
    FinFunctor free;              // base -> em
    NatTrans unit;                // Id_base => forgetful.free (in base)
    NatTrans counit;              // free.forgetful => Id_em (in em)
    std::optional<int> module_index(Obj carrier, Mor action) const;
    std::optional<Mor> em_mor(int from_module, int to_module, Mor base) const;
};

EmAdjunction build_em_adjunction(const FinMonad& m,
                                 int morphism_budget = fincat::kDefaultMorphismBudget);

// Dual: co-Eilenberg-Moore category of a comonad with forgetful (left
// adjoint) and cofree (right adjoint) functors.
struct CoEmAdjunction {
    CatPtr coem;
    std::vector<SComodule> comodules;
    std::vector<Mor> underlying;
    FinFunctor forgetful;  // coem -> base
    FinFunctor cofree;     // base -> coem
    NatTrans unit;         // Id_coem => cofree.forgetful (in coem)
    NatTrans counit;       // forgetful.cofree => Id_base (in base)
    std::optional<int> comodule_index(Obj carrier, Mor coaction) const;
    std::optional<Mor> coem_mor(int from, int to, Mor base) const;
};

CoEmAdjunction build_coem_adjunction(const FinComonad& s,
                                     int morphism_budget = fincat::kDefaultMorphismBudget);

// One entry per condition of the idempotence theorem. For a monad:
//   a: forgetful functor full and faithful      b: EM counit iso
//   c: mu iso componentwise                     d: every module action iso
//   e1/e2: T(eta) iso / eta(T) iso              f: T(eta) = eta(T)
//   g: T(mu) = mu(T)
// The comonad battery reports the dual conditions in the same slots.
struct BatteryReport {
    bool a = false, b = false, c = false, d = false;
    bool e1 = false, e2 = false, f = false, g = false;
    std::vector<std::string> witnesses;  // one line per failing condition
    bool verdict() const { return a && b && c && d && e1 && e2 && f && g; }
    bool coherent() const {
        return a == b && b == c && c == d && d == e1 && e1 == e2 && e2 == f && f == g;
    }
    std::array<bool, 8> as_array() const { return {a, b, c, d, e1, e2, f, g}; }
};

BatteryReport idempotence_battery(const FinMonad& m,
                                  int morphism_budget = fincat::kDefaultMorphismBudget);
BatteryReport idempotence_battery_comonad(const FinComonad& s,
                                          int morphism_budget = fincat::kDefaultMorphismBudget);

FinMonad identity_monad(const CatPtr& c);
FinComonad identity_comonad(const CatPtr& c);

// Formal dual of a monad: comonad on the op category with the same ids.
FinComonad op_dual(const FinMonad& m);
FinMonad op_dual(const FinComonad& s);

}  // namespace adjforge::monadics
