#pragma once

// Finite categories as explicit composition tables, plus functors and natural
// transformations between them. Everything is checked by exhaustive search.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adjforge::fincat {

using Obj = int;
using Mor = int;
inline constexpr Mor kNone = -1;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMorphismBudget = 512;

struct FinCategory {
    int n_objects = 0;
    std::vector<Obj> mor_src;
    std::vector<Obj> mor_dst;
    std::vector<Mor> identity;                // per object
    std::vector<std::vector<Mor>> table;      // table[g][f] = g after f, kNone if undefined
    std::vector<std::string> object_names;    // optional, empty = numeric
    std::vector<std::string> morphism_names;  // optional

    int mor_count() const { return int(mor_src.size()); }
    Mor compose(Mor g, Mor f) const { return table[g][f]; }
    std::string obj_name(Obj a) const;
    std::string mor_name(Mor m) const;
    // Morphisms with given source/target.
    std::vector<Mor> hom(Obj a, Obj b) const;
};

using CatPtr = std::shared_ptr<const FinCategory>;

struct FinFunctor {
    CatPtr src;
    CatPtr dst;
    std::vector<Obj> obj_map;
    std::vector<Mor> mor_map;

    Obj on_obj(Obj a) const { return obj_map[a]; }
    Mor on_mor(Mor m) const { return mor_map[m]; }
};

struct NatTrans {
    FinFunctor from;  // F
    FinFunctor to;    // G, parallel to F
    std::vector<Mor> component;  // per object of src category, in dst category
};

// Validation results carry witnesses. Malformed input (dangling ids, table
// entries on non-composable pairs) is reported distinctly from law failures.
enum class FailureKind { Malformed, LawViolation };

struct Failure {
    FailureKind kind;
    std::string law;
    std::string witness;
};

struct Validation {
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
    bool malformed() const;
    std::string describe() const;
};

Validation validate_category(const FinCategory& c,
                             int morphism_budget = kDefaultMorphismBudget);
Validation validate_functor(const FinFunctor& f);
Validation validate_nattrans(const NatTrans& a);

struct MorphismFlags {
    bool mono = false;
    bool epi = false;
    bool extremal_mono = false;
    bool extremal_epi = false;
    bool iso = false;
    bool retraction = false;    // split epi
    bool coretraction = false;  // split mono
};

MorphismFlags classify_morphism(const FinCategory& c, Mor m);

bool is_mono(const FinCategory& c, Mor m);
bool is_epi(const FinCategory& c, Mor m);
bool is_iso(const FinCategory& c, Mor m);
// Two-sided inverse when it exists; a witness, never an inference.
std::optional<Mor> inverse_of(const FinCategory& c, Mor m);

// Objects a, b with a mutually inverse pair between them.
std::optional<std::pair<Mor, Mor>> iso_witness(const FinCategory& c, Obj a, Obj b);

FinFunctor identity_functor(const CatPtr& c);
FinFunctor compose_functors(const FinFunctor& outer, const FinFunctor& inner);

NatTrans identity_nattrans(const FinFunctor& f);
// H * alpha : H.F => H.G  (apply H to every component)
NatTrans whisker_left(const FinFunctor& h, const NatTrans& alpha);
// alpha * H : F.H => G.H  (restrict components along H)
NatTrans whisker_right(const NatTrans& alpha, const FinFunctor& h);
NatTrans vertical_compose(const NatTrans& beta, const NatTrans& alpha);  // beta after alpha

bool nattrans_equal(const NatTrans& a, const NatTrans& b);

// Formal dual: all arrows reversed, same ids.
CatPtr op_category(const CatPtr& c);
FinFunctor op_functor(const FinFunctor& f, const CatPtr& op_src, const CatPtr& op_dst);

}  // namespace adjforge::fincat
