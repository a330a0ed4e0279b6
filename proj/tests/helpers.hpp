#pragma once

// Shared test generators: posets as categories, closure operators as monads,
// Galois connections as adjunctions, and brute-force oracles.

#include <cstdint>
#include <functional>
#include <vector>

#include "adjforge/adjunctions.hpp"
#include "adjforge/fincat.hpp"
#include "adjforge/monadics.hpp"

namespace testhelpers {

using adjforge::fincat::CatPtr;
using adjforge::fincat::FinCategory;
using adjforge::fincat::FinFunctor;
using adjforge::fincat::Mor;
using adjforge::fincat::NatTrans;

struct Poset {
    int n = 0;
    std::vector<std::vector<bool>> leq;  // leq[a][b] means a <= b
};

// All labeled posets on n elements (reflexive, antisymmetric, transitive).
inline std::vector<Poset> all_posets(int n) {
    std::vector<std::pair<int, int>> off_diag;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) off_diag.push_back({a, b});
    std::vector<Poset> out;
    const uint64_t total = 1ull << off_diag.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        Poset p;
        p.n = n;
        p.leq.assign(n, std::vector<bool>(n, false));
        for (int a = 0; a < n; ++a) p.leq[a][a] = true;
        for (size_t i = 0; i < off_diag.size(); ++i)
            if (mask >> i & 1) p.leq[off_diag[i].first][off_diag[i].second] = true;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                if (a != b && p.leq[a][b] && p.leq[b][a]) ok = false;
                for (int c = 0; c < n && ok; ++c)
                    if (p.leq[a][b] && p.leq[b][c] && !p.leq[a][c]) ok = false;
            }
        if (ok) out.push_back(p);
    }
    return out;
}

// Thin category of a poset: one morphism per related pair.
struct PosetCategory {
    CatPtr cat;
    std::vector<std::vector<Mor>> arrow;  // arrow[a][b], kNone if unrelated
};

inline PosetCategory poset_category(const Poset& p) {
    auto c = std::make_shared<FinCategory>();
    c->n_objects = p.n;
    PosetCategory out;
    out.arrow.assign(p.n, std::vector<Mor>(p.n, adjforge::fincat::kNone));
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b)
            if (p.leq[a][b]) {
                out.arrow[a][b] = c->mor_count();
                c->mor_src.push_back(a);
                c->mor_dst.push_back(b);
            }
    c->identity.resize(p.n);
    for (int a = 0; a < p.n; ++a) c->identity[a] = out.arrow[a][a];
    const int nm = c->mor_count();
    c->table.assign(nm, std::vector<Mor>(nm, adjforge::fincat::kNone));
    for (Mor g = 0; g < nm; ++g)
        for (Mor f = 0; f < nm; ++f)
            if (c->mor_dst[f] == c->mor_src[g])
                c->table[g][f] = out.arrow[c->mor_src[f]][c->mor_dst[g]];
    out.cat = c;
    return out;
}

// All closure operators on a poset: inflationary, monotone, idempotent maps.
inline std::vector<std::vector<int>> closure_operators(const Poset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(p.n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == p.n) {
            for (int a = 0; a < p.n; ++a) {
                if (!p.leq[a][c[a]]) return;
                if (c[c[a]] != c[a]) return;
                for (int b = 0; b < p.n; ++b)
                    if (p.leq[a][b] && !p.leq[c[a]][c[b]]) return;
            }
            out.push_back(c);
            return;
        }
        for (c[i] = 0; c[i] < p.n; ++c[i]) rec(i + 1);
        c[i] = 0;
    };
    rec(0);
    return out;
}

inline adjforge::monadics::FinMonad closure_monad(const PosetCategory& pc,
                                                  const std::vector<int>& c) {
    using namespace adjforge::fincat;
    const auto& cat = pc.cat;
    FinFunctor t{cat, cat, {}, {}};
    for (int a = 0; a < cat->n_objects; ++a) t.obj_map.push_back(c[a]);
    for (Mor m = 0; m < cat->mor_count(); ++m)
        t.mor_map.push_back(pc.arrow[c[cat->mor_src[m]]][c[cat->mor_dst[m]]]);
    adjforge::monadics::FinMonad monad;
    monad.cat = cat;
    monad.t = t;
    auto tt = compose_functors(t, t);
    monad.mu = {tt, t, {}};
    monad.eta = {identity_functor(cat), t, {}};
    for (int a = 0; a < cat->n_objects; ++a) {
        monad.mu.component.push_back(pc.arrow[c[c[a]]][c[a]]);
        monad.eta.component.push_back(pc.arrow[a][c[a]]);
    }
    return monad;
}

// All Galois connections (f left adjoint to g) between two posets.
struct GaloisConnection {
    std::vector<int> f;  // P -> Q, monotone
    std::vector<int> g;  // Q -> P, monotone
};

inline std::vector<GaloisConnection> galois_connections(const Poset& p, const Poset& q) {
    std::vector<std::vector<int>> fs;
    std::vector<int> f(p.n, 0);
    std::function<void(int)> recf = [&](int i) {
        if (i == p.n) {
            for (int a = 0; a < p.n; ++a)
                for (int b = 0; b < p.n; ++b)
                    if (p.leq[a][b] && !q.leq[f[a]][f[b]]) return;
            fs.push_back(f);
            return;
        }
        for (f[i] = 0; f[i] < q.n; ++f[i]) recf(i + 1);
        f[i] = 0;
    };
    if (p.n > 0 && q.n > 0) recf(0);
    std::vector<GaloisConnection> out;
    for (const auto& fc : fs) {
        std::vector<int> g(q.n, 0);
        std::function<void(int)> recg = [&](int i) {
            if (i == q.n) {
                for (int a = 0; a < q.n; ++a)
                    for (int b = 0; b < q.n; ++b)
                        if (q.leq[a][b] && !p.leq[g[a]][g[b]]) return;
                for (int a = 0; a < p.n; ++a)
                    for (int b = 0; b < q.n; ++b)
                        if (q.leq[fc[a]][b] != p.leq[a][g[b]]) return;
                out.push_back({fc, g});
                return;
            }
            for (g[i] = 0; g[i] < p.n; ++g[i]) recg(i + 1);
            g[i] = 0;
        };
        if (q.n > 0) recg(0);
    }
    return out;
}

inline adjforge::adjunctions::FinAdjunction galois_adjunction(const PosetCategory& pa,
                                                              const PosetCategory& pb,
                                                              const GaloisConnection& gc) {
    using namespace adjforge::fincat;
    const auto& a = pa.cat;
    const auto& b = pb.cat;
    FinFunctor f{a, b, {}, {}};
    for (int x = 0; x < a->n_objects; ++x) f.obj_map.push_back(gc.f[x]);
    for (Mor m = 0; m < a->mor_count(); ++m)
        f.mor_map.push_back(pb.arrow[gc.f[a->mor_src[m]]][gc.f[a->mor_dst[m]]]);
    FinFunctor g{b, a, {}, {}};
    for (int y = 0; y < b->n_objects; ++y) g.obj_map.push_back(gc.g[y]);
    for (Mor m = 0; m < b->mor_count(); ++m)
        g.mor_map.push_back(pa.arrow[gc.g[b->mor_src[m]]][gc.g[b->mor_dst[m]]]);
    adjforge::adjunctions::FinAdjunction adj;
    adj.f = f;
    adj.g = g;
    adj.eta = {identity_functor(a), compose_functors(g, f), {}};
    for (int x = 0; x < a->n_objects; ++x)
        adj.eta.component.push_back(pa.arrow[x][gc.g[gc.f[x]]]);
    adj.eps = {compose_functors(f, g), identity_functor(b), {}};
    for (int y = 0; y < b->n_objects; ++y)
        adj.eps.component.push_back(pb.arrow[gc.f[gc.g[y]]][y]);
    return adj;
}

// Brute-force mono/epi oracle directly from the definitions.
inline bool oracle_mono(const FinCategory& c, Mor m) {
    for (Mor u = 0; u < c.mor_count(); ++u)
        for (Mor v = 0; v < c.mor_count(); ++v)
            if (c.mor_dst[u] == c.mor_src[m] && c.mor_src[u] == c.mor_src[v] &&
                c.mor_dst[v] == c.mor_src[m] && c.table[m][u] == c.table[m][v] && u != v)
                return false;
    return true;
}

inline bool oracle_epi(const FinCategory& c, Mor m) {
    for (Mor u = 0; u < c.mor_count(); ++u)
        for (Mor v = 0; v < c.mor_count(); ++v)
            if (c.mor_src[u] == c.mor_dst[m] && c.mor_dst[u] == c.mor_dst[v] &&
                c.mor_src[v] == c.mor_dst[m] && c.table[u][m] == c.table[v][m] && u != v)
                return false;
    return true;
}

// Exhaustive monad search on a small category: every endofunctor with every
// unit/multiplication candidate, filtered by validate_monad.
inline std::vector<adjforge::monadics::FinMonad> all_monads(const CatPtr& cat,
                                                            long budget = 5'000'000) {
    using namespace adjforge::fincat;
    std::vector<adjforge::monadics::FinMonad> found;
    const int no = cat->n_objects;
    const int nm = cat->mor_count();
    long work = 0;
    std::vector<int> obj(no, 0);
    std::function<void(int)> rec_obj = [&](int oi) {
        if (++work > budget) throw BudgetExceeded("monad search budget");
        if (oi < no) {
            for (obj[oi] = 0; obj[oi] < no; ++obj[oi]) rec_obj(oi + 1);
            obj[oi] = 0;
            return;
        }
        // fill mor_map respecting sources/targets and composition, then ids
        std::vector<Mor> mm(nm, kNone);
        std::function<void(Mor)> rec_mor = [&](Mor mi) {
            if (++work > budget) throw BudgetExceeded("monad search budget");
            if (mi < nm) {
                for (Mor img = 0; img < nm; ++img) {
                    if (cat->mor_src[img] != obj[cat->mor_src[mi]] ||
                        cat->mor_dst[img] != obj[cat->mor_dst[mi]])
                        continue;
                    mm[mi] = img;
                    // partial functoriality: reject early when both factors set
                    bool ok = true;
                    for (Mor g = 0; g <= mi && ok; ++g)
                        for (Mor f = 0; f <= mi && ok; ++f) {
                            Mor gf = cat->table[g][f];
                            if (gf == kNone || gf > mi) continue;
                            if (cat->table[mm[g]][mm[f]] != mm[gf]) ok = false;
                        }
                    for (int o = 0; o < no && ok; ++o)
                        if (cat->identity[o] <= mi &&
                            mm[cat->identity[o]] != cat->identity[obj[o]])
                            ok = false;
                    if (ok) rec_mor(mi + 1);
                }
                mm[mi] = kNone;
                return;
            }
            FinFunctor t{cat, cat, {}, mm};
            for (int o = 0; o < no; ++o) t.obj_map.push_back(obj[o]);
            auto tt = compose_functors(t, t);
            auto id = identity_functor(cat);
            // all unit/mult component choices
            std::vector<Mor> eta(no), mu(no);
            std::function<void(int)> rec_eta = [&](int ei) {
                if (++work > budget) throw BudgetExceeded("monad search budget");
                if (ei < no) {
                    for (Mor e : cat->hom(ei, obj[ei])) {
                        eta[ei] = e;
                        rec_eta(ei + 1);
                    }
                    return;
                }
                std::function<void(int)> rec_mu = [&](int ui) {
                    if (++work > budget) throw BudgetExceeded("monad search budget");
                    if (ui < no) {
                        for (Mor u : cat->hom(tt.obj_map[ui], obj[ui])) {
                            mu[ui] = u;
                            rec_mu(ui + 1);
                        }
                        return;
                    }
                    adjforge::monadics::FinMonad m{cat, t, {tt, t, mu}, {id, t, eta}};
                    if (adjforge::monadics::validate_monad(m).ok()) found.push_back(m);
                };
                rec_mu(0);
            };
            rec_eta(0);
        };
        rec_mor(0);
    };
    if (no > 0) rec_obj(0);
    return found;
}

}  // namespace testhelpers
