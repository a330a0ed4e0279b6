#include "adjforge/fincat.hpp"

#include <sstream>

namespace adjforge::fincat {

std::string FinCategory::obj_name(Obj a) const {
    if (a >= 0 && a < int(object_names.size()) && !object_names[a].empty())
        return object_names[a];
    return "#" + std::to_string(a);
}

std::string FinCategory::mor_name(Mor m) const {
    if (m >= 0 && m < int(morphism_names.size()) && !morphism_names[m].empty())
        return morphism_names[m];
    return "m" + std::to_string(m);
}

std::vector<Mor> FinCategory::hom(Obj a, Obj b) const {
    std::vector<Mor> out;
    for (Mor m = 0; m < mor_count(); ++m)
        if (mor_src[m] == a && mor_dst[m] == b) out.push_back(m);
    return out;
}

bool Validation::malformed() const {
    for (const auto& f : failures)
        if (f.kind == FailureKind::Malformed) return true;
    return false;
}

std::string Validation::describe() const {
    std::ostringstream os;
    for (const auto& f : failures) {
        os << (f.kind == FailureKind::Malformed ? "[malformed] " : "[law] ")
           << f.law << ": " << f.witness << "\n";
    }
    return os.str();
}

Validation validate_category(const FinCategory& c, int morphism_budget) {
    Validation v;
    auto mal = [&](const std::string& law, const std::string& wit) {
        v.failures.push_back({FailureKind::Malformed, law, wit});
    };
    auto law = [&](const std::string& name, const std::string& wit) {
        v.failures.push_back({FailureKind::LawViolation, name, wit});
    };

    const int nm = c.mor_count();
    if (nm > morphism_budget)
        throw BudgetExceeded("morphism count " + std::to_string(nm) +
                             " exceeds budget " + std::to_string(morphism_budget));
    if (int(c.mor_dst.size()) != nm) {
        mal("shape", "mor_src/mor_dst size mismatch");
        return v;
    }
    for (Mor m = 0; m < nm; ++m) {
        if (c.mor_src[m] < 0 || c.mor_src[m] >= c.n_objects ||
            c.mor_dst[m] < 0 || c.mor_dst[m] >= c.n_objects)
            mal("dangling-object", c.mor_name(m));
    }
    if (int(c.identity.size()) != c.n_objects) {
        mal("shape", "identity map size != object count");
        return v;
    }
    for (Obj a = 0; a < c.n_objects; ++a) {
        Mor id = c.identity[a];
        if (id < 0 || id >= nm) {
            mal("dangling-identity", c.obj_name(a));
            continue;
        }
        if (c.mor_src[id] != a || c.mor_dst[id] != a)
            mal("identity-endpoints", c.obj_name(a));
    }
    if (int(c.table.size()) != nm) {
        mal("shape", "table row count != morphism count");
        return v;
    }
    for (Mor g = 0; g < nm; ++g)
        if (int(c.table[g].size()) != nm) {
            mal("shape", "table row " + c.mor_name(g) + " has wrong length");
            return v;
        }
    if (v.malformed()) return v;

    for (Mor g = 0; g < nm; ++g)
        for (Mor f = 0; f < nm; ++f) {
            Mor gf = c.table[g][f];
            bool composable = c.mor_dst[f] == c.mor_src[g];
            if (!composable) {
                if (gf != kNone)
                    mal("non-composable-entry", "(" + c.mor_name(g) + "," + c.mor_name(f) + ")");
                continue;
            }
            if (gf == kNone) {
                mal("missing-composite", "(" + c.mor_name(g) + "," + c.mor_name(f) + ")");
                continue;
            }
            if (gf < 0 || gf >= nm) {
                mal("dangling-composite", "(" + c.mor_name(g) + "," + c.mor_name(f) + ")");
                continue;
            }
            if (c.mor_src[gf] != c.mor_src[f] || c.mor_dst[gf] != c.mor_dst[g])
                law("composite-endpoints",
                    "(" + c.mor_name(g) + "," + c.mor_name(f) + ") -> " + c.mor_name(gf));
        }
    if (v.malformed()) return v;

    for (Mor f = 0; f < nm; ++f) {
        Mor idt = c.identity[c.mor_dst[f]];
        Mor ids = c.identity[c.mor_src[f]];
        if (c.table[idt][f] != f) law("left-identity", c.mor_name(f));
        if (c.table[f][ids] != f) law("right-identity", c.mor_name(f));
    }

    for (Mor h = 0; h < nm; ++h)
        for (Mor g = 0; g < nm; ++g) {
            if (c.mor_dst[g] != c.mor_src[h]) continue;
            Mor hg = c.table[h][g];
            for (Mor f = 0; f < nm; ++f) {
                if (c.mor_dst[f] != c.mor_src[g]) continue;
                Mor gf = c.table[g][f];
                if (c.table[h][gf] != c.table[hg][f])
                    law("associativity",
                        "(" + c.mor_name(h) + "," + c.mor_name(g) + "," + c.mor_name(f) + ")");
            }
        }
    return v;
}

Validation validate_functor(const FinFunctor& fn) {
    Validation v;
    auto mal = [&](const std::string& l, const std::string& w) {
        v.failures.push_back({FailureKind::Malformed, l, w});
    };
    auto law = [&](const std::string& l, const std::string& w) {
        v.failures.push_back({FailureKind::LawViolation, l, w});
    };
    const FinCategory& a = *fn.src;
    const FinCategory& b = *fn.dst;
    if (int(fn.obj_map.size()) != a.n_objects || int(fn.mor_map.size()) != a.mor_count()) {
        mal("shape", "map sizes do not match source category");
        return v;
    }
    for (Obj o : fn.obj_map)
        if (o < 0 || o >= b.n_objects) mal("dangling-object", std::to_string(o));
    for (Mor m : fn.mor_map)
        if (m < 0 || m >= b.mor_count()) mal("dangling-morphism", std::to_string(m));
    if (v.malformed()) return v;

    for (Mor m = 0; m < a.mor_count(); ++m) {
        Mor fm = fn.mor_map[m];
        if (b.mor_src[fm] != fn.obj_map[a.mor_src[m]] ||
            b.mor_dst[fm] != fn.obj_map[a.mor_dst[m]])
            law("endpoint-preservation", a.mor_name(m));
    }
    for (Obj o = 0; o < a.n_objects; ++o)
        if (fn.mor_map[a.identity[o]] != b.identity[fn.obj_map[o]])
            law("identity-preservation", a.obj_name(o));
    for (Mor g = 0; g < a.mor_count(); ++g)
        for (Mor f = 0; f < a.mor_count(); ++f) {
            if (a.mor_dst[f] != a.mor_src[g]) continue;
            Mor gf = a.table[g][f];
            if (gf == kNone) continue;
            if (fn.mor_map[gf] != b.table[fn.mor_map[g]][fn.mor_map[f]])
                law("composition-preservation",
                    "(" + a.mor_name(g) + "," + a.mor_name(f) + ")");
        }
    return v;
}

Validation validate_nattrans(const NatTrans& nt) {
    Validation v;
    auto mal = [&](const std::string& l, const std::string& w) {
        v.failures.push_back({FailureKind::Malformed, l, w});
    };
    auto law = [&](const std::string& l, const std::string& w) {
        v.failures.push_back({FailureKind::LawViolation, l, w});
    };
    const FinCategory& a = *nt.from.src;
    const FinCategory& b = *nt.from.dst;
    if (nt.from.src != nt.to.src || nt.from.dst != nt.to.dst) {
        mal("shape", "functors are not parallel");
        return v;
    }
    if (int(nt.component.size()) != a.n_objects) {
        mal("shape", "component count != object count");
        return v;
    }
    for (Mor m : nt.component)
        if (m < 0 || m >= b.mor_count()) mal("dangling-component", std::to_string(m));
    if (v.malformed()) return v;

    for (Obj o = 0; o < a.n_objects; ++o) {
        Mor c = nt.component[o];
        if (b.mor_src[c] != nt.from.obj_map[o] || b.mor_dst[c] != nt.to.obj_map[o])
            law("component-endpoints", a.obj_name(o));
    }
    if (!v.ok()) return v;
    for (Mor m = 0; m < a.mor_count(); ++m) {
        Obj s = a.mor_src[m], t = a.mor_dst[m];
        Mor lhs = b.table[nt.component[t]][nt.from.mor_map[m]];
        Mor rhs = b.table[nt.to.mor_map[m]][nt.component[s]];
        if (lhs != rhs) law("naturality", a.mor_name(m));
    }
    return v;
}

bool is_mono(const FinCategory& c, Mor m) {
    Obj a = c.mor_src[m];
    for (Obj x = 0; x < c.n_objects; ++x) {
        auto par = c.hom(x, a);
        for (size_t i = 0; i < par.size(); ++i)
            for (size_t j = i + 1; j < par.size(); ++j)
                if (c.table[m][par[i]] == c.table[m][par[j]]) return false;
    }
    return true;
}

bool is_epi(const FinCategory& c, Mor m) {
    Obj b = c.mor_dst[m];
    for (Obj x = 0; x < c.n_objects; ++x) {
        auto par = c.hom(b, x);
        for (size_t i = 0; i < par.size(); ++i)
            for (size_t j = i + 1; j < par.size(); ++j)
                if (c.table[par[i]][m] == c.table[par[j]][m]) return false;
    }
    return true;
}

std::optional<Mor> inverse_of(const FinCategory& c, Mor m) {
    Obj a = c.mor_src[m], b = c.mor_dst[m];
    for (Mor n : c.hom(b, a))
        if (c.table[n][m] == c.identity[a] && c.table[m][n] == c.identity[b]) return n;
    return std::nullopt;
}

bool is_iso(const FinCategory& c, Mor m) { return inverse_of(c, m).has_value(); }

std::optional<std::pair<Mor, Mor>> iso_witness(const FinCategory& c, Obj a, Obj b) {
    for (Mor m : c.hom(a, b)) {
        auto inv = inverse_of(c, m);
        if (inv) return std::make_pair(m, *inv);
    }
    return std::nullopt;
}

MorphismFlags classify_morphism(const FinCategory& c, Mor m) {
    MorphismFlags fl;
    fl.mono = is_mono(c, m);
    fl.epi = is_epi(c, m);
    fl.iso = is_iso(c, m);
    Obj a = c.mor_src[m], b = c.mor_dst[m];
    for (Mor s : c.hom(b, a))
        if (c.table[m][s] == c.identity[b]) { fl.retraction = true; break; }
    for (Mor r : c.hom(b, a))
        if (c.table[r][m] == c.identity[a]) { fl.coretraction = true; break; }

    // Extremal epi: epi, and in every factorization m = mm . f with mm mono,
    // mm is iso. All factorizations found by scanning intermediate objects.
    if (fl.epi) {
        fl.extremal_epi = true;
        for (Obj x = 0; x < c.n_objects && fl.extremal_epi; ++x)
            for (Mor mm : c.hom(x, b)) {
                if (!is_mono(c, mm) || is_iso(c, mm)) continue;
                bool factors = false;
                for (Mor f : c.hom(a, x))
                    if (c.table[mm][f] == m) { factors = true; break; }
                if (factors) { fl.extremal_epi = false; break; }
            }
    }
    if (fl.mono) {
        fl.extremal_mono = true;
        for (Obj x = 0; x < c.n_objects && fl.extremal_mono; ++x)
            for (Mor e : c.hom(a, x)) {
                if (!is_epi(c, e) || is_iso(c, e)) continue;
                bool factors = false;
                for (Mor f : c.hom(x, b))
                    if (c.table[f][e] == m) { factors = true; break; }
                if (factors) { fl.extremal_mono = false; break; }
            }
    }
    return fl;
}

FinFunctor identity_functor(const CatPtr& c) {
    FinFunctor f;
    f.src = c;
    f.dst = c;
    f.obj_map.resize(c->n_objects);
    f.mor_map.resize(c->mor_count());
    for (Obj o = 0; o < c->n_objects; ++o) f.obj_map[o] = o;
    for (Mor m = 0; m < c->mor_count(); ++m) f.mor_map[m] = m;
    return f;
}

FinFunctor compose_functors(const FinFunctor& outer, const FinFunctor& inner) {
    if (inner.dst != outer.src)
        throw std::invalid_argument("compose_functors: shape mismatch");
    FinFunctor r;
    r.src = inner.src;
    r.dst = outer.dst;
    r.obj_map.resize(inner.obj_map.size());
    r.mor_map.resize(inner.mor_map.size());
    for (size_t i = 0; i < inner.obj_map.size(); ++i)
        r.obj_map[i] = outer.obj_map[inner.obj_map[i]];
    for (size_t i = 0; i < inner.mor_map.size(); ++i)
        r.mor_map[i] = outer.mor_map[inner.mor_map[i]];
    return r;
}

NatTrans identity_nattrans(const FinFunctor& f) {
    NatTrans nt;
    nt.from = f;
    nt.to = f;
    nt.component.resize(f.src->n_objects);
    for (Obj o = 0; o < f.src->n_objects; ++o)
        nt.component[o] = f.dst->identity[f.obj_map[o]];
    return nt;
}

NatTrans whisker_left(const FinFunctor& h, const NatTrans& alpha) {
    if (alpha.from.dst != h.src)
        throw std::invalid_argument("whisker_left: shape mismatch");
    NatTrans r;
    r.from = compose_functors(h, alpha.from);
    r.to = compose_functors(h, alpha.to);
    r.component.resize(alpha.component.size());
    for (size_t o = 0; o < alpha.component.size(); ++o)
        r.component[o] = h.mor_map[alpha.component[o]];
    return r;
}

NatTrans whisker_right(const NatTrans& alpha, const FinFunctor& h) {
    if (h.dst != alpha.from.src)
        throw std::invalid_argument("whisker_right: shape mismatch");
    NatTrans r;
    r.from = compose_functors(alpha.from, h);
    r.to = compose_functors(alpha.to, h);
    r.component.resize(h.src->n_objects);
    for (Obj o = 0; o < h.src->n_objects; ++o)
        r.component[o] = alpha.component[h.obj_map[o]];
    return r;
}

NatTrans vertical_compose(const NatTrans& beta, const NatTrans& alpha) {
    if (alpha.from.src != beta.from.src || alpha.from.dst != beta.from.dst)
        throw std::invalid_argument("vertical_compose: shape mismatch");
    NatTrans r;
    r.from = alpha.from;
    r.to = beta.to;
    const FinCategory& d = *alpha.from.dst;
    r.component.resize(alpha.component.size());
    for (size_t o = 0; o < alpha.component.size(); ++o)
        r.component[o] = d.table[beta.component[o]][alpha.component[o]];
    return r;
}

bool nattrans_equal(const NatTrans& a, const NatTrans& b) {
    return a.component == b.component;
}

CatPtr op_category(const CatPtr& c) {
    auto op = std::make_shared<FinCategory>();
    op->n_objects = c->n_objects;
    op->mor_src = c->mor_dst;
    op->mor_dst = c->mor_src;
    op->identity = c->identity;
    op->object_names = c->object_names;
    op->morphism_names = c->morphism_names;
    const int nm = c->mor_count();
    op->table.assign(nm, std::vector<Mor>(nm, kNone));
    for (Mor g = 0; g < nm; ++g)
        for (Mor f = 0; f < nm; ++f) op->table[g][f] = c->table[f][g];
    return op;
}

FinFunctor op_functor(const FinFunctor& f, const CatPtr& op_src, const CatPtr& op_dst) {
    FinFunctor r;
    r.src = op_src;
    r.dst = op_dst;
    r.obj_map = f.obj_map;
    r.mor_map = f.mor_map;
    return r;
}

}  // namespace adjforge::fincat
