#include "adjforge/monadics.hpp"

#include <algorithm>
#include <set>

namespace adjforge::monadics {

using fincat::compose_functors;
using fincat::Failure;
using fincat::FailureKind;
using fincat::FinCategory;
using fincat::identity_functor;
using fincat::kNone;

namespace {

bool same_functor(const FinFunctor& a, const FinFunctor& b) {
    return a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

void add(Validation& v, FailureKind k, std::string law, std::string wit) {
    v.failures.push_back({k, std::move(law), std::move(wit)});
}

}  // namespace

Validation validate_monad(const FinMonad& m) {
    Validation v;
    const FinCategory& c = *m.cat;
    if (m.t.src != m.cat || m.t.dst != m.cat) {
        add(v, FailureKind::Malformed, "shape", "T is not an endofunctor on the base category");
        return v;
    }
    Validation fv = validate_functor(m.t);
    if (!fv.ok()) return fv;

    FinFunctor tt = compose_functors(m.t, m.t);
    FinFunctor id = identity_functor(m.cat);
    if (!same_functor(m.mu.from, tt) || !same_functor(m.mu.to, m.t))
        add(v, FailureKind::Malformed, "shape", "mu is not of shape TT => T");
    if (!same_functor(m.eta.from, id) || !same_functor(m.eta.to, m.t))
        add(v, FailureKind::Malformed, "shape", "eta is not of shape Id => T");
    if (!v.ok()) return v;
    Validation mv = validate_nattrans(m.mu);
    Validation ev = validate_nattrans(m.eta);
    for (auto& f : mv.failures) add(v, f.kind, "mu-" + f.law, f.witness);
    for (auto& f : ev.failures) add(v, f.kind, "eta-" + f.law, f.witness);
    if (!v.ok()) return v;

    for (Obj a = 0; a < c.n_objects; ++a) {
        Mor mu_a = m.mu.component[a];
        // associativity: mu . T(mu) = mu . mu(T)
        if (c.table[mu_a][m.t.mor_map[m.mu.component[a]]] !=
            c.table[mu_a][m.mu.component[m.t.obj_map[a]]])
            add(v, FailureKind::LawViolation, "monad-associativity", c.obj_name(a));
        Mor id_ta = c.identity[m.t.obj_map[a]];
        if (c.table[mu_a][m.t.mor_map[m.eta.component[a]]] != id_ta)
            add(v, FailureKind::LawViolation, "monad-unit-Teta", c.obj_name(a));
        if (c.table[mu_a][m.eta.component[m.t.obj_map[a]]] != id_ta)
            add(v, FailureKind::LawViolation, "monad-unit-etaT", c.obj_name(a));
    }
    return v;
}

Validation validate_comonad(const FinComonad& s) {
    Validation v;
    const FinCategory& c = *s.cat;
    if (s.s.src != s.cat || s.s.dst != s.cat) {
        add(v, FailureKind::Malformed, "shape", "S is not an endofunctor on the base category");
        return v;
    }
    Validation fv = validate_functor(s.s);
    if (!fv.ok()) return fv;

    FinFunctor ss = compose_functors(s.s, s.s);
    FinFunctor id = identity_functor(s.cat);
    if (!same_functor(s.delta.from, s.s) || !same_functor(s.delta.to, ss))
        add(v, FailureKind::Malformed, "shape", "delta is not of shape S => SS");
    if (!same_functor(s.eps.from, s.s) || !same_functor(s.eps.to, id))
        add(v, FailureKind::Malformed, "shape", "eps is not of shape S => Id");
    if (!v.ok()) return v;
    Validation dv = validate_nattrans(s.delta);
    Validation ev = validate_nattrans(s.eps);
    for (auto& f : dv.failures) add(v, f.kind, "delta-" + f.law, f.witness);
    for (auto& f : ev.failures) add(v, f.kind, "eps-" + f.law, f.witness);
    if (!v.ok()) return v;

    for (Obj a = 0; a < c.n_objects; ++a) {
        Mor d_a = s.delta.component[a];
        // coassociativity: delta(S) . delta = S(delta) . delta
        if (c.table[s.delta.component[s.s.obj_map[a]]][d_a] !=
            c.table[s.s.mor_map[d_a]][d_a])
            add(v, FailureKind::LawViolation, "comonad-coassociativity", c.obj_name(a));
        Mor id_sa = c.identity[s.s.obj_map[a]];
        if (c.table[s.s.mor_map[s.eps.component[a]]][d_a] != id_sa)
            add(v, FailureKind::LawViolation, "comonad-counit-Seps", c.obj_name(a));
        if (c.table[s.eps.component[s.s.obj_map[a]]][d_a] != id_sa)
            add(v, FailureKind::LawViolation, "comonad-counit-epsS", c.obj_name(a));
    }
    return v;
}

std::vector<TModule> enumerate_modules(const FinMonad& m) {
    const FinCategory& c = *m.cat;
    std::vector<TModule> out;
    for (Obj a = 0; a < c.n_objects; ++a) {
        Obj ta = m.t.obj_map[a];
        for (Mor rho : c.hom(ta, a)) {
            if (c.table[rho][m.eta.component[a]] != c.identity[a]) continue;
            if (c.table[rho][m.t.mor_map[rho]] != c.table[rho][m.mu.component[a]]) continue;
            out.push_back({a, rho});
        }
    }
    return out;
}

std::vector<SComodule> enumerate_comodules(const FinComonad& s) {
    const FinCategory& c = *s.cat;
    std::vector<SComodule> out;
    for (Obj a = 0; a < c.n_objects; ++a) {
        Obj sa = s.s.obj_map[a];
        for (Mor rho : c.hom(a, sa)) {
            if (c.table[s.eps.component[a]][rho] != c.identity[a]) continue;
            if (c.table[s.delta.component[a]][rho] != c.table[s.s.mor_map[rho]][rho]) continue;
            out.push_back({a, rho});
        }
    }
    return out;
}

std::optional<int> EmAdjunction::module_index(Obj carrier, Mor action) const {
    for (int i = 0; i < int(modules.size()); ++i)
        if (modules[i].carrier == carrier && modules[i].action == action) return i;
    return std::nullopt;
}

std::optional<Mor> EmAdjunction::em_mor(int from_module, int to_module, Mor base) const {
    for (Mor m = 0; m < em->mor_count(); ++m)
        if (em->mor_src[m] == from_module && em->mor_dst[m] == to_module &&
            underlying[m] == base)
            return m;
    return std::nullopt;
}

EmAdjunction build_em_adjunction(const FinMonad& m, int morphism_budget) {
    const FinCategory& c = *m.cat;
    if (c.mor_count() > morphism_budget)
        throw fincat::BudgetExceeded("base category exceeds morphism budget");
    EmAdjunction out;
    out.modules = enumerate_modules(m);
    const int k = int(out.modules.size());

    auto cat = std::make_shared<FinCategory>();
    cat->n_objects = k;
    for (int i = 0; i < k; ++i)
        cat->object_names.push_back("(" + c.obj_name(out.modules[i].carrier) + "," +
                                    c.mor_name(out.modules[i].action) + ")");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const TModule& mi = out.modules[i];
            const TModule& mj = out.modules[j];
            for (Mor f : c.hom(mi.carrier, mj.carrier)) {
                if (c.table[f][mi.action] != c.table[mj.action][m.t.mor_map[f]]) continue;
                cat->mor_src.push_back(i);
                cat->mor_dst.push_back(j);
                out.underlying.push_back(f);
                if (int(cat->mor_src.size()) > morphism_budget)
                    throw fincat::BudgetExceeded("EM category exceeds morphism budget");
            }
        }
    const int nm = int(cat->mor_src.size());
    auto find_mor = [&](int i, int j, Mor base) -> Mor {
        for (Mor e = 0; e < nm; ++e)
            if (cat->mor_src[e] == i && cat->mor_dst[e] == j && out.underlying[e] == base)
                return e;
        return kNone;
    };
    cat->identity.resize(k);
    for (int i = 0; i < k; ++i)
        cat->identity[i] = find_mor(i, i, c.identity[out.modules[i].carrier]);
    cat->table.assign(nm, std::vector<Mor>(nm, kNone));
    for (Mor g = 0; g < nm; ++g)
        for (Mor f = 0; f < nm; ++f) {
            if (cat->mor_dst[f] != cat->mor_src[g]) continue;
            cat->table[g][f] = find_mor(cat->mor_src[f], cat->mor_dst[g],
                                        c.table[out.underlying[g]][out.underlying[f]]);
        }
    out.em = cat;

    out.forgetful.src = out.em;
    out.forgetful.dst = m.cat;
    for (int i = 0; i < k; ++i) out.forgetful.obj_map.push_back(out.modules[i].carrier);
    out.forgetful.mor_map = out.underlying;

    out.free.src = m.cat;
    out.free.dst = out.em;
    for (Obj a = 0; a < c.n_objects; ++a) {
        auto idx = out.module_index(m.t.obj_map[a], m.mu.component[a]);
        if (!idx) throw std::logic_error("free module missing from EM enumeration");
        out.free.obj_map.push_back(*idx);
    }
    for (Mor f = 0; f < c.mor_count(); ++f) {
        Mor e = find_mor(out.free.obj_map[c.mor_src[f]], out.free.obj_map[c.mor_dst[f]],
                         m.t.mor_map[f]);
        if (e == kNone) throw std::logic_error("T(f) is not a module morphism");
        out.free.mor_map.push_back(e);
    }

    out.unit.from = identity_functor(m.cat);
    out.unit.to = compose_functors(out.forgetful, out.free);
    out.unit.component = m.eta.component;

    out.counit.from = compose_functors(out.free, out.forgetful);
    out.counit.to = identity_functor(out.em);
    for (int i = 0; i < k; ++i) {
        Mor e = find_mor(out.free.obj_map[out.modules[i].carrier], i, out.modules[i].action);
        if (e == kNone) throw std::logic_error("counit action is not a module morphism");
        out.counit.component.push_back(e);
    }
    return out;
}

std::optional<int> CoEmAdjunction::comodule_index(Obj carrier, Mor coaction) const {
    for (int i = 0; i < int(comodules.size()); ++i)
        if (comodules[i].carrier == carrier && comodules[i].coaction == coaction) return i;
    return std::nullopt;
}

std::optional<Mor> CoEmAdjunction::coem_mor(int from, int to, Mor base) const {
    for (Mor m = 0; m < coem->mor_count(); ++m)
        if (coem->mor_src[m] == from && coem->mor_dst[m] == to && underlying[m] == base)
            return m;
    return std::nullopt;
}

CoEmAdjunction build_coem_adjunction(const FinComonad& s, int morphism_budget) {
    const FinCategory& c = *s.cat;
    if (c.mor_count() > morphism_budget)
        throw fincat::BudgetExceeded("base category exceeds morphism budget");
    CoEmAdjunction out;
    out.comodules = enumerate_comodules(s);
    const int k = int(out.comodules.size());

    auto cat = std::make_shared<FinCategory>();
    cat->n_objects = k;
    for (int i = 0; i < k; ++i)
        cat->object_names.push_back("(" + c.obj_name(out.comodules[i].carrier) + "," +
                                    c.mor_name(out.comodules[i].coaction) + ")");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const SComodule& mi = out.comodules[i];
            const SComodule& mj = out.comodules[j];
            for (Mor f : c.hom(mi.carrier, mj.carrier)) {
                if (c.table[mj.coaction][f] != c.table[s.s.mor_map[f]][mi.coaction]) continue;
                cat->mor_src.push_back(i);
                cat->mor_dst.push_back(j);
                out.underlying.push_back(f);
                if (int(cat->mor_src.size()) > morphism_budget)
                    throw fincat::BudgetExceeded("co-EM category exceeds morphism budget");
            }
        }
    const int nm = int(cat->mor_src.size());
    auto find_mor = [&](int i, int j, Mor base) -> Mor {
        for (Mor e = 0; e < nm; ++e)
            if (cat->mor_src[e] == i && cat->mor_dst[e] == j && out.underlying[e] == base)
                return e;
        return kNone;
    };
    cat->identity.resize(k);
    for (int i = 0; i < k; ++i)
        cat->identity[i] = find_mor(i, i, c.identity[out.comodules[i].carrier]);
    cat->table.assign(nm, std::vector<Mor>(nm, kNone));
    for (Mor g = 0; g < nm; ++g)
        for (Mor f = 0; f < nm; ++f) {
            if (cat->mor_dst[f] != cat->mor_src[g]) continue;
            cat->table[g][f] = find_mor(cat->mor_src[f], cat->mor_dst[g],
                                        c.table[out.underlying[g]][out.underlying[f]]);
        }
    out.coem = cat;

    out.forgetful.src = out.coem;
    out.forgetful.dst = s.cat;
    for (int i = 0; i < k; ++i) out.forgetful.obj_map.push_back(out.comodules[i].carrier);
    out.forgetful.mor_map = out.underlying;

    out.cofree.src = s.cat;
    out.cofree.dst = out.coem;
    for (Obj a = 0; a < c.n_objects; ++a) {
        auto idx = out.comodule_index(s.s.obj_map[a], s.delta.component[a]);
        if (!idx) throw std::logic_error("cofree comodule missing from enumeration");
        out.cofree.obj_map.push_back(*idx);
    }
    for (Mor f = 0; f < c.mor_count(); ++f) {
        Mor e = find_mor(out.cofree.obj_map[c.mor_src[f]], out.cofree.obj_map[c.mor_dst[f]],
                         s.s.mor_map[f]);
        if (e == kNone) throw std::logic_error("S(f) is not a comodule morphism");
        out.cofree.mor_map.push_back(e);
    }

    out.unit.from = identity_functor(out.coem);
    out.unit.to = compose_functors(out.cofree, out.forgetful);
    for (int i = 0; i < k; ++i) {
        Mor e = find_mor(i, out.cofree.obj_map[out.comodules[i].carrier],
                         out.comodules[i].coaction);
        if (e == kNone) throw std::logic_error("unit coaction is not a comodule morphism");
        out.unit.component.push_back(e);
    }

    out.counit.from = compose_functors(out.forgetful, out.cofree);
    out.counit.to = identity_functor(s.cat);
    out.counit.component = s.eps.component;
    return out;
}

namespace {

// Forgetful functor full and faithful == every base hom between carriers is a
// (co)module morphism; faithfulness is automatic since em morphisms are
// distinguished by their underlying morphism per hom-set.
bool forgetful_full_faithful(const FinCategory& base, const FinCategory& upstairs,
                             const std::vector<Obj>& carriers,
                             const std::vector<Mor>& underlying, std::string* witness) {
    for (Obj i = 0; i < upstairs.n_objects; ++i)
        for (Obj j = 0; j < upstairs.n_objects; ++j) {
            std::set<Mor> lifted;
            for (Mor e = 0; e < upstairs.mor_count(); ++e)
                if (upstairs.mor_src[e] == i && upstairs.mor_dst[e] == j)
                    lifted.insert(underlying[e]);
            for (Mor f : base.hom(carriers[i], carriers[j]))
                if (!lifted.count(f)) {
                    if (witness)
                        *witness = "hom(" + upstairs.obj_name(i) + "," + upstairs.obj_name(j) +
                                   "): " + base.mor_name(f) + " does not lift";
                    return false;
                }
        }
    return true;
}

}  // namespace

BatteryReport idempotence_battery(const FinMonad& m, int morphism_budget) {
    const FinCategory& c = *m.cat;
    BatteryReport r;
    EmAdjunction em = build_em_adjunction(m, morphism_budget);

    std::string w;
    r.a = forgetful_full_faithful(c, *em.em, em.forgetful.obj_map, em.underlying, &w);
    if (!r.a) r.witnesses.push_back("a: forgetful not full: " + w);

    r.b = true;
    for (int i = 0; i < int(em.modules.size()); ++i)
        if (!fincat::is_iso(*em.em, em.counit.component[i])) {
            r.b = false;
            r.witnesses.push_back("b: EM counit not iso at " + em.em->obj_name(i));
            break;
        }

    r.c = true;
    for (Obj a = 0; a < c.n_objects; ++a)
        if (!fincat::is_iso(c, m.mu.component[a])) {
            r.c = false;
            r.witnesses.push_back("c: mu not iso at " + c.obj_name(a));
            break;
        }

    r.d = true;
    for (const TModule& mod : em.modules)
        if (!fincat::is_iso(c, mod.action)) {
            r.d = false;
            r.witnesses.push_back("d: module action not iso at (" + c.obj_name(mod.carrier) +
                                  "," + c.mor_name(mod.action) + ")");
            break;
        }

    r.e1 = r.e2 = true;
    for (Obj a = 0; a < c.n_objects; ++a) {
        if (r.e1 && !fincat::is_iso(c, m.t.mor_map[m.eta.component[a]])) {
            r.e1 = false;
            r.witnesses.push_back("e1: T(eta) not iso at " + c.obj_name(a));
        }
        if (r.e2 && !fincat::is_iso(c, m.eta.component[m.t.obj_map[a]])) {
            r.e2 = false;
            r.witnesses.push_back("e2: eta(T) not iso at " + c.obj_name(a));
        }
    }

    r.f = true;
    for (Obj a = 0; a < c.n_objects; ++a)
        if (m.t.mor_map[m.eta.component[a]] != m.eta.component[m.t.obj_map[a]]) {
            r.f = false;
            r.witnesses.push_back("f: T(eta) != eta(T) at " + c.obj_name(a));
            break;
        }

    r.g = true;
    for (Obj a = 0; a < c.n_objects; ++a)
        if (m.t.mor_map[m.mu.component[a]] != m.mu.component[m.t.obj_map[a]]) {
            r.g = false;
            r.witnesses.push_back("g: T(mu) != mu(T) at " + c.obj_name(a));
            break;
        }
    return r;
}

BatteryReport idempotence_battery_comonad(const FinComonad& s, int morphism_budget) {
    const FinCategory& c = *s.cat;
    BatteryReport r;
    CoEmAdjunction co = build_coem_adjunction(s, morphism_budget);

    std::string w;
    r.a = forgetful_full_faithful(c, *co.coem, co.forgetful.obj_map, co.underlying, &w);
    if (!r.a) r.witnesses.push_back("a: forgetful not full: " + w);

    r.b = true;
    for (int i = 0; i < int(co.comodules.size()); ++i)
        if (!fincat::is_iso(*co.coem, co.unit.component[i])) {
            r.b = false;
            r.witnesses.push_back("b: co-EM unit not iso at " + co.coem->obj_name(i));
            break;
        }

    r.c = true;
    for (Obj a = 0; a < c.n_objects; ++a)
        if (!fincat::is_iso(c, s.delta.component[a])) {
            r.c = false;
            r.witnesses.push_back("c: delta not iso at " + c.obj_name(a));
            break;
        }

    r.d = true;
    for (const SComodule& mod : co.comodules)
        if (!fincat::is_iso(c, mod.coaction)) {
            r.d = false;
            r.witnesses.push_back("d: comodule coaction not iso at (" +
                                  c.obj_name(mod.carrier) + "," + c.mor_name(mod.coaction) +
                                  ")");
            break;
        }

    r.e1 = r.e2 = true;
    for (Obj a = 0; a < c.n_objects; ++a) {
        if (r.e1 && !fincat::is_iso(c, s.s.mor_map[s.eps.component[a]])) {
            r.e1 = false;
            r.witnesses.push_back("e1: S(eps) not iso at " + c.obj_name(a));
        }
        if (r.e2 && !fincat::is_iso(c, s.eps.component[s.s.obj_map[a]])) {
            r.e2 = false;
            r.witnesses.push_back("e2: eps(S) not iso at " + c.obj_name(a));
        }
    }

    r.f = true;
    for (Obj a = 0; a < c.n_objects; ++a)
        if (s.s.mor_map[s.eps.component[a]] != s.eps.component[s.s.obj_map[a]]) {
            r.f = false;
            r.witnesses.push_back("f: S(eps) != eps(S) at " + c.obj_name(a));
            break;
        }

    r.g = true;
    for (Obj a = 0; a < c.n_objects; ++a)
        if (s.s.mor_map[s.delta.component[a]] != s.delta.component[s.s.obj_map[a]]) {
            r.g = false;
            r.witnesses.push_back("g: S(delta) != delta(S) at " + c.obj_name(a));
            break;
        }
    return r;
}

FinMonad identity_monad(const CatPtr& c) {
    FinMonad m;
    m.cat = c;
    m.t = identity_functor(c);
    m.mu = identity_nattrans(m.t);
    m.mu.from = compose_functors(m.t, m.t);
    m.mu.to = m.t;
    m.eta = identity_nattrans(m.t);
    return m;
}

FinComonad identity_comonad(const CatPtr& c) {
    FinComonad s;
    s.cat = c;
    s.s = identity_functor(c);
    s.delta = identity_nattrans(s.s);
    s.delta.from = s.s;
    s.delta.to = compose_functors(s.s, s.s);
    s.eps = identity_nattrans(s.s);
    return s;
}

FinComonad op_dual(const FinMonad& m) {
    CatPtr op = fincat::op_category(m.cat);
    FinComonad s;
    s.cat = op;
    s.s = fincat::op_functor(m.t, op, op);
    s.delta.from = s.s;
    s.delta.to = compose_functors(s.s, s.s);
    s.delta.component = m.mu.component;
    s.eps.from = s.s;
    s.eps.to = identity_functor(op);
    s.eps.component = m.eta.component;
    return s;
}

FinMonad op_dual(const FinComonad& s) {
    CatPtr op = fincat::op_category(s.cat);
    FinMonad m;
    m.cat = op;
    m.t = fincat::op_functor(s.s, op, op);
    m.mu.from = compose_functors(m.t, m.t);
    m.mu.to = m.t;
    m.mu.component = s.delta.component;
    m.eta.from = identity_functor(op);
    m.eta.to = m.t;
    m.eta.component = s.eps.component;
    return m;
}

}  // namespace adjforge::monadics
