#include "adjforge/adjunctions.hpp"

#include <algorithm>
#include <set>

namespace adjforge::adjunctions {

using fincat::compose_functors;
using fincat::FailureKind;
using fincat::FinCategory;
using fincat::identity_functor;
using fincat::is_epi;
using fincat::is_iso;
using fincat::is_mono;

namespace {

void add(Validation& v, FailureKind k, std::string law, std::string wit) {
    v.failures.push_back({k, std::move(law), std::move(wit)});
}

bool same_functor(const FinFunctor& a, const FinFunctor& b) {
    return a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

}  // namespace

Validation validate_adjunction(const FinAdjunction& adj) {
    Validation v;
    if (adj.f.src != adj.g.dst || adj.f.dst != adj.g.src) {
        add(v, FailureKind::Malformed, "shape", "F and G are not opposed");
        return v;
    }
    Validation fv = validate_functor(adj.f);
    Validation gv = validate_functor(adj.g);
    for (auto& x : fv.failures) add(v, x.kind, "F-" + x.law, x.witness);
    for (auto& x : gv.failures) add(v, x.kind, "G-" + x.law, x.witness);
    if (!v.ok()) return v;

    FinFunctor gf = compose_functors(adj.g, adj.f);
    FinFunctor fg = compose_functors(adj.f, adj.g);
    if (!same_functor(adj.eta.from, identity_functor(adj.f.src)) ||
        !same_functor(adj.eta.to, gf))
        add(v, FailureKind::Malformed, "shape", "eta is not of shape Id => GF");
    if (!same_functor(adj.eps.from, fg) ||
        !same_functor(adj.eps.to, identity_functor(adj.g.src)))
        add(v, FailureKind::Malformed, "shape", "eps is not of shape FG => Id");
    if (!v.ok()) return v;

    Validation ev = validate_nattrans(adj.eta);
    Validation cv = validate_nattrans(adj.eps);
    for (auto& x : ev.failures) add(v, x.kind, "eta-" + x.law, x.witness);
    for (auto& x : cv.failures) add(v, x.kind, "eps-" + x.law, x.witness);
    if (!v.ok()) return v;

    const FinCategory& a = *adj.f.src;
    const FinCategory& b = *adj.f.dst;
    for (Obj x = 0; x < a.n_objects; ++x) {
        Obj fx = adj.f.obj_map[x];
        if (b.table[adj.eps.component[fx]][adj.f.mor_map[adj.eta.component[x]]] !=
            b.identity[fx])
            add(v, FailureKind::LawViolation, "triangle-epsF.Feta", a.obj_name(x));
    }
    for (Obj y = 0; y < b.n_objects; ++y) {
        Obj gy = adj.g.obj_map[y];
        if (a.table[adj.g.mor_map[adj.eps.component[y]]][adj.eta.component[gy]] !=
            a.identity[gy])
            add(v, FailureKind::LawViolation, "triangle-Geps.etaG", b.obj_name(y));
    }
    return v;
}

Mor transpose_forward(const FinAdjunction& a, Obj obj_a, Mor f) {
    const FinCategory& ca = *a.f.src;
    return ca.table[a.g.mor_map[f]][a.eta.component[obj_a]];
}

Mor transpose_backward(const FinAdjunction& a, Obj obj_b, Mor g) {
    const FinCategory& cb = *a.f.dst;
    return cb.table[a.eps.component[obj_b]][a.f.mor_map[g]];
}

HomBijection hom_bijection(const FinAdjunction& a, Obj obj_a, Obj obj_b) {
    const FinCategory& ca = *a.f.src;
    const FinCategory& cb = *a.f.dst;
    HomBijection hb;
    hb.fa_to_b = cb.hom(a.f.obj_map[obj_a], obj_b);
    hb.mutually_inverse = true;
    std::set<Mor> images;
    for (Mor f : hb.fa_to_b) {
        Mor g = transpose_forward(a, obj_a, f);
        hb.a_to_gb.push_back(g);
        images.insert(g);
        if (transpose_backward(a, obj_b, g) != f) hb.mutually_inverse = false;
    }
    auto target = ca.hom(obj_a, a.g.obj_map[obj_b]);
    if (images.size() != hb.fa_to_b.size() || images.size() != target.size())
        hb.mutually_inverse = false;
    for (Mor g : target) {
        if (!images.count(g)) hb.mutually_inverse = false;
        if (!images.count(g)) continue;
        if (transpose_forward(a, obj_a, transpose_backward(a, obj_b, g)) != g)
            hb.mutually_inverse = false;
    }
    return hb;
}

FinMonad induced_monad(const FinAdjunction& a) {
    FinMonad m;
    m.cat = a.f.src;
    m.t = compose_functors(a.g, a.f);
    m.mu.from = compose_functors(m.t, m.t);
    m.mu.to = m.t;
    m.mu.component.resize(m.cat->n_objects);
    for (Obj x = 0; x < m.cat->n_objects; ++x)
        m.mu.component[x] = a.g.mor_map[a.eps.component[a.f.obj_map[x]]];
    m.eta.from = identity_functor(m.cat);
    m.eta.to = m.t;
    m.eta.component = a.eta.component;
    return m;
}

FinComonad induced_comonad(const FinAdjunction& a) {
    FinComonad s;
    s.cat = a.f.dst;
    s.s = compose_functors(a.f, a.g);
    s.delta.from = s.s;
    s.delta.to = compose_functors(s.s, s.s);
    s.delta.component.resize(s.cat->n_objects);
    for (Obj y = 0; y < s.cat->n_objects; ++y)
        s.delta.component[y] = a.f.mor_map[a.eta.component[a.g.obj_map[y]]];
    s.eps.from = s.s;
    s.eps.to = identity_functor(s.cat);
    s.eps.component = a.eps.component;
    return s;
}

RelatedFunctors related_functors(const FinAdjunction& a, int morphism_budget) {
    RelatedFunctors r;
    r.monad = induced_monad(a);
    r.comonad = induced_comonad(a);
    r.em = monadics::build_em_adjunction(r.monad, morphism_budget);
    r.coem = monadics::build_coem_adjunction(r.comonad, morphism_budget);

    const FinCategory& cb = *a.f.dst;
    r.g_bar.src = a.f.dst;
    r.g_bar.dst = r.em.em;
    for (Obj y = 0; y < cb.n_objects; ++y) {
        auto idx = r.em.module_index(a.g.obj_map[y], a.g.mor_map[a.eps.component[y]]);
        if (!idx) throw std::logic_error("(G(B), G(eps_B)) is not a GF-module");
        r.g_bar.obj_map.push_back(*idx);
    }
    for (Mor h = 0; h < cb.mor_count(); ++h) {
        auto e = r.em.em_mor(r.g_bar.obj_map[cb.mor_src[h]], r.g_bar.obj_map[cb.mor_dst[h]],
                             a.g.mor_map[h]);
        if (!e) throw std::logic_error("G(h) is not a GF-module morphism");
        r.g_bar.mor_map.push_back(*e);
    }

    const FinCategory& ca = *a.f.src;
    r.f_bar.src = a.f.src;
    r.f_bar.dst = r.coem.coem;
    for (Obj x = 0; x < ca.n_objects; ++x) {
        auto idx = r.coem.comodule_index(a.f.obj_map[x], a.f.mor_map[a.eta.component[x]]);
        if (!idx) throw std::logic_error("(F(A), F(eta_A)) is not an FG-comodule");
        r.f_bar.obj_map.push_back(*idx);
    }
    for (Mor h = 0; h < ca.mor_count(); ++h) {
        auto e = r.coem.coem_mor(r.f_bar.obj_map[ca.mor_src[h]],
                                 r.f_bar.obj_map[ca.mor_dst[h]], a.f.mor_map[h]);
        if (!e) throw std::logic_error("F(h) is not an FG-comodule morphism");
        r.f_bar.mor_map.push_back(*e);
    }

    r.f_tilde = compose_functors(r.f_bar, r.em.forgetful);
    r.g_tilde = compose_functors(r.g_bar, r.coem.forgetful);
    return r;
}

UnitModuleAnalysis unit_module_morphism_analysis(const FinAdjunction& adj,
                                                 int morphism_budget) {
    UnitModuleAnalysis out;
    FinMonad mon = induced_monad(adj);
    FinComonad com = induced_comonad(adj);
    const FinCategory& ca = *adj.f.src;
    const FinCategory& cb = *adj.f.dst;

    for (const monadics::TModule& mod : monadics::enumerate_modules(mon)) {
        ModuleMorphismRow row;
        row.carrier = mod.carrier;
        row.action = mod.action;
        Mor eta_a = adj.eta.component[mod.carrier];
        // eta_A : (A, rho) -> (GF(A), mu_A) as a module morphism
        Mor mu_a = mon.mu.component[mod.carrier];
        row.unit_is_module_morphism =
            ca.table[eta_a][mod.action] == ca.table[mu_a][mon.t.mor_map[eta_a]];
        row.unit_is_epi = is_epi(ca, eta_a);
        row.unit_is_iso = is_iso(ca, eta_a);
        row.action_is_iso = is_iso(ca, mod.action);
        if (!(row.unit_is_module_morphism == row.unit_is_epi &&
              row.unit_is_epi == row.unit_is_iso && row.unit_is_iso == row.action_is_iso)) {
            out.equivalences_hold = false;
            if (out.witness.empty())
                out.witness = "module (" + ca.obj_name(mod.carrier) + "," +
                              ca.mor_name(mod.action) + ")";
        }
        out.module_rows.push_back(row);
    }

    for (const monadics::SComodule& mod : monadics::enumerate_comodules(com)) {
        ModuleMorphismRow row;
        row.carrier = mod.carrier;
        row.action = mod.coaction;
        Mor eps_b = adj.eps.component[mod.carrier];
        // eps_B : (FG(B), delta_B) -> (B, rho) as a comodule morphism
        Mor delta_b = com.delta.component[mod.carrier];
        row.unit_is_module_morphism =
            cb.table[mod.coaction][eps_b] == cb.table[com.s.mor_map[eps_b]][delta_b];
        row.unit_is_epi = is_mono(cb, eps_b);  // dual reading: counit mono
        row.unit_is_iso = is_iso(cb, eps_b);
        row.action_is_iso = is_iso(cb, mod.coaction);
        if (!(row.unit_is_module_morphism == row.unit_is_epi &&
              row.unit_is_epi == row.unit_is_iso && row.unit_is_iso == row.action_is_iso)) {
            out.equivalences_hold = false;
            if (out.witness.empty())
                out.witness = "comodule (" + cb.obj_name(mod.carrier) + "," +
                              cb.mor_name(mod.coaction) + ")";
        }
        out.comodule_rows.push_back(row);
    }
    (void)morphism_budget;
    return out;
}

PairBatteryReport idempotent_pair_battery(const FinAdjunction& adj, int morphism_budget) {
    PairBatteryReport r;
    const FinCategory& ca = *adj.f.src;
    const FinCategory& cb = *adj.f.dst;

    FinMonad mon = induced_monad(adj);
    FinComonad com = induced_comonad(adj);
    monadics::BatteryReport mb = monadics::idempotence_battery(mon, morphism_budget);
    monadics::BatteryReport cb_rep =
        monadics::idempotence_battery_comonad(com, morphism_budget);
    r.a = mb.a;
    r.b = mb.b;
    r.e = cb_rep.a;
    r.f = cb_rep.b;
    for (const auto& w : mb.witnesses)
        if (w.rfind("a:", 0) == 0 || w.rfind("b:", 0) == 0)
            r.witnesses.push_back("GF-" + w);
    for (const auto& w : cb_rep.witnesses)
        if (w.rfind("a:", 0) == 0 || w.rfind("b:", 0) == 0)
            r.witnesses.push_back("FG-" + w);

    r.c = r.d = true;
    for (Obj x = 0; x < ca.n_objects; ++x) {
        Obj fx = adj.f.obj_map[x];
        if (r.c && !is_iso(ca, adj.g.mor_map[adj.eps.component[fx]])) {
            r.c = false;
            r.witnesses.push_back("c: G(eps)F not iso at " + ca.obj_name(x));
        }
        if (r.d && !is_iso(cb, adj.eps.component[fx])) {
            r.d = false;
            r.witnesses.push_back("d: eps(F) not iso at " + ca.obj_name(x));
        }
    }
    r.g = r.h = true;
    for (Obj y = 0; y < cb.n_objects; ++y) {
        Obj gy = adj.g.obj_map[y];
        if (r.g && !is_iso(cb, adj.f.mor_map[adj.eta.component[gy]])) {
            r.g = false;
            r.witnesses.push_back("g: F(eta)G not iso at " + cb.obj_name(y));
        }
        if (r.h && !is_iso(ca, adj.eta.component[gy])) {
            r.h = false;
            r.witnesses.push_back("h: eta(G) not iso at " + cb.obj_name(y));
        }
    }
    return r;
}

FixSubcategory fix(const FinAdjunction& adj, FixSide side) {
    FixSubcategory out;
    out.side = side;
    const FinCategory& ca = *adj.f.src;
    const FinCategory& cb = *adj.f.dst;
    const FinCategory& c = (side == FixSide::GF) ? ca : cb;
    for (Obj x = 0; x < c.n_objects; ++x) {
        Mor comp = (side == FixSide::GF) ? adj.eta.component[x] : adj.eps.component[x];
        if (is_iso(c, comp)) out.members.push_back(x);
    }
    std::set<Obj> image;
    if (side == FixSide::GF) {
        for (Obj x = 0; x < ca.n_objects; ++x) image.insert(adj.g.obj_map[adj.f.obj_map[x]]);
    } else {
        for (Obj y = 0; y < cb.n_objects; ++y) image.insert(adj.f.obj_map[adj.g.obj_map[y]]);
    }
    for (Obj x = 0; x < c.n_objects; ++x)
        for (Obj im : image)
            if (fincat::iso_witness(c, x, im)) {
                out.image_closure.push_back(x);
                break;
            }
    out.matches_image_closure = out.members == out.image_closure;
    return out;
}

EquivalenceReport verify_equivalence(const FinAdjunction& adj, int morphism_budget) {
    EquivalenceReport r;
    PairBatteryReport battery = idempotent_pair_battery(adj, morphism_budget);
    if (!battery.verdict()) {
        r.witnesses.push_back("pair is not idempotent; equivalence check refused");
        return r;
    }
    r.ran = true;
    const FinCategory& ca = *adj.f.src;
    const FinCategory& cb = *adj.f.dst;
    FixSubcategory fgf = fix(adj, FixSide::GF);
    FixSubcategory ffg = fix(adj, FixSide::FG);
    std::set<Obj> fix_a(fgf.members.begin(), fgf.members.end());
    std::set<Obj> fix_b(ffg.members.begin(), ffg.members.end());

    // Reflectivity: eta_A : A -> GF(A) is initial among morphisms into Fix.
    r.reflective = true;
    for (Obj x = 0; x < ca.n_objects && r.reflective; ++x) {
        Obj gfx = adj.g.obj_map[adj.f.obj_map[x]];
        if (!fix_a.count(gfx)) {
            r.reflective = false;
            r.witnesses.push_back("GF(" + ca.obj_name(x) + ") is not fixed");
            break;
        }
        for (Obj tgt : fgf.members) {
            for (Mor m : ca.hom(x, tgt)) {
                int count = 0;
                for (Mor u : ca.hom(gfx, tgt))
                    if (ca.table[u][adj.eta.component[x]] == m) ++count;
                if (count != 1) {
                    r.reflective = false;
                    r.witnesses.push_back("reflection fails at " + ca.obj_name(x) + " -> " +
                                          ca.obj_name(tgt));
                    break;
                }
            }
            if (!r.reflective) break;
        }
    }

    // Coreflectivity: eps_B : FG(B) -> B is terminal among morphisms from Fix.
    r.coreflective = true;
    for (Obj y = 0; y < cb.n_objects && r.coreflective; ++y) {
        Obj fgy = adj.f.obj_map[adj.g.obj_map[y]];
        if (!fix_b.count(fgy)) {
            r.coreflective = false;
            r.witnesses.push_back("FG(" + cb.obj_name(y) + ") is not fixed");
            break;
        }
        for (Obj src : ffg.members) {
            for (Mor m : cb.hom(src, y)) {
                int count = 0;
                for (Mor u : cb.hom(src, fgy))
                    if (cb.table[adj.eps.component[y]][u] == m) ++count;
                if (count != 1) {
                    r.coreflective = false;
                    r.witnesses.push_back("coreflection fails at " + cb.obj_name(src) +
                                          " -> " + cb.obj_name(y));
                    break;
                }
            }
            if (!r.coreflective) break;
        }
    }

    // Restricted F and G are mutually inverse: fixed objects map to fixed
    // objects and both restrictions are bijective on hom-sets.
    r.mutually_inverse = true;
    auto fail = [&](const std::string& w) {
        r.mutually_inverse = false;
        r.witnesses.push_back(w);
    };
    for (Obj x : fgf.members)
        if (!fix_b.count(adj.f.obj_map[x])) {
            fail("F(" + ca.obj_name(x) + ") leaves the fixed class");
            break;
        }
    for (Obj y : ffg.members)
        if (!fix_a.count(adj.g.obj_map[y])) {
            fail("G(" + cb.obj_name(y) + ") leaves the fixed class");
            break;
        }
    for (Obj x : fgf.members) {
        for (Obj x2 : fgf.members) {
            auto src_hom = ca.hom(x, x2);
            auto dst_hom = cb.hom(adj.f.obj_map[x], adj.f.obj_map[x2]);
            std::set<Mor> images;
            for (Mor m : src_hom) images.insert(adj.f.mor_map[m]);
            if (images.size() != src_hom.size() || images.size() != dst_hom.size()) {
                fail("F not bijective on hom(" + ca.obj_name(x) + "," + ca.obj_name(x2) + ")");
                break;
            }
        }
        if (!r.mutually_inverse) break;
    }
    for (Obj y : ffg.members) {
        for (Obj y2 : ffg.members) {
            auto src_hom = cb.hom(y, y2);
            auto dst_hom = ca.hom(adj.g.obj_map[y], adj.g.obj_map[y2]);
            std::set<Mor> images;
            for (Mor m : src_hom) images.insert(adj.g.mor_map[m]);
            if (images.size() != src_hom.size() || images.size() != dst_hom.size()) {
                fail("G not bijective on hom(" + cb.obj_name(y) + "," + cb.obj_name(y2) + ")");
                break;
            }
        }
        if (!r.mutually_inverse) break;
    }
    return r;
}

StarPairReport star_pair_check(const FinAdjunction& adj) {
    StarPairReport r;
    const FinCategory& ca = *adj.f.src;
    const FinCategory& cb = *adj.f.dst;

    r.unit_extremal_epi = true;
    for (Obj x = 0; x < ca.n_objects; ++x)
        if (!fincat::classify_morphism(ca, adj.eta.component[x]).extremal_epi) {
            r.unit_extremal_epi = false;
            r.witnesses.push_back("eta not extremal epi at " + ca.obj_name(x));
            break;
        }
    r.counit_extremal_mono = true;
    for (Obj y = 0; y < cb.n_objects; ++y)
        if (!fincat::classify_morphism(cb, adj.eps.component[y]).extremal_mono) {
            r.counit_extremal_mono = false;
            r.witnesses.push_back("eps not extremal mono at " + cb.obj_name(y));
            break;
        }
    if (!r.is_star_pair()) return r;

    FixSubcategory fgf = fix(adj, FixSide::GF);
    FixSubcategory ffg = fix(adj, FixSide::FG);
    std::set<Obj> fix_a(fgf.members.begin(), fgf.members.end());
    std::set<Obj> fix_b(ffg.members.begin(), ffg.members.end());

    r.fix_gf_closed_under_subobjects = true;
    for (Mor m = 0; m < ca.mor_count(); ++m) {
        if (!fix_a.count(ca.mor_dst[m]) || !is_mono(ca, m)) continue;
        if (!fix_a.count(ca.mor_src[m])) {
            r.fix_gf_closed_under_subobjects = false;
            r.witnesses.push_back("subobject " + ca.mor_name(m) + " escapes Fix(GF)");
            break;
        }
    }
    r.fix_fg_closed_under_factors = true;
    for (Mor m = 0; m < cb.mor_count(); ++m) {
        if (!fix_b.count(cb.mor_src[m]) || !is_epi(cb, m)) continue;
        if (!fix_b.count(cb.mor_dst[m])) {
            r.fix_fg_closed_under_factors = false;
            r.witnesses.push_back("factor object " + cb.mor_name(m) + " escapes Fix(FG)");
            break;
        }
    }

    FinFunctor gf = compose_functors(adj.g, adj.f);
    FinFunctor fg = compose_functors(adj.f, adj.g);
    r.gf_preserves_epis = true;
    for (Mor m = 0; m < ca.mor_count(); ++m)
        if (is_epi(ca, m) && !is_epi(ca, gf.mor_map[m])) {
            r.gf_preserves_epis = false;
            r.witnesses.push_back("GF does not preserve epi " + ca.mor_name(m));
            break;
        }
    r.fg_preserves_monos = true;
    for (Mor m = 0; m < cb.mor_count(); ++m)
        if (is_mono(cb, m) && !is_mono(cb, fg.mor_map[m])) {
            r.fg_preserves_monos = false;
            r.witnesses.push_back("FG does not preserve mono " + cb.mor_name(m));
            break;
        }
    return r;
}

FinAdjunction identity_adjunction(const CatPtr& c) {
    FinAdjunction a;
    a.f = identity_functor(c);
    a.g = identity_functor(c);
    a.eta = fincat::identity_nattrans(a.f);
    a.eps = fincat::identity_nattrans(a.f);
    return a;
}

}  // namespace adjforge::adjunctions
