#include "adjforge/starlab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "adjforge/ffla.hpp"

namespace adjforge::starlab {

using algmod::are_isomorphic;
using algmod::coordinates_in_matrix_basis;
using algmod::hom_as_left_S_module;
using algmod::hom_dim;
using algmod::hom_space;
using algmod::is_module_map;
using algmod::IsoStatus;
using algmod::tensor_over;
using ffla::hstack;
using ffla::image_basis;
using ffla::is_injective;
using ffla::is_surjective;
using ffla::kernel_basis;
using ffla::kron;
using ffla::rank;
using ffla::vstack;

namespace {

void ensure_member(std::vector<LeftModule>& window, const LeftModule& m) {
    for (const auto& w : window) {
        auto iso = are_isomorphic(w, m);
        if (iso.status == IsoStatus::Isomorphic) return;
    }
    window.push_back(m);
}

Matrix block_injection(uint32_t p, const std::vector<int>& dims, int which) {
    int total = 0;
    for (int d : dims) total += d;
    Matrix m(total, dims[which], p);
    int off = 0;
    for (int i = 0; i < which; ++i) off += dims[i];
    for (int j = 0; j < dims[which]; ++j) m.at(off + j, j) = 1;
    return m;
}

Matrix block_projection(uint32_t p, const std::vector<int>& dims, int which) {
    return block_injection(p, dims, which).transpose();
}

LeftModule power_module(const LeftModule& m, int k) {
    if (k == 0) return algmod::zero_module(m.algebra);
    std::vector<LeftModule> copies(k, m);
    return algmod::direct_sum(copies);
}

// Number of subspaces of F_p^n (sum of Gaussian binomials), saturating.
double subspace_count(uint32_t p, int n) {
    // gauss(n, r) via product formula
    double total = 0;
    for (int r = 0; r <= n; ++r) {
        double g = 1;
        for (int i = 0; i < r; ++i) {
            double num = std::pow(double(p), n - i) - 1;
            double den = std::pow(double(p), i + 1) - 1;
            g *= num / den;
        }
        total += g;
        if (total > 1e15) return 1e15;
    }
    return total;
}

// Enumerate all subspaces of F_p^n via reduced row echelon bases; callback
// receives the basis as columns (n x r). Deterministic order.
void for_each_subspace(uint32_t p, int n, long cap,
                       const std::function<void(const Matrix&)>& cb) {
    if (subspace_count(p, n) > double(cap))
        throw fincat::BudgetExceeded("subspace enumeration exceeds budget");
    for (int r = 0; r <= n; ++r) {
        std::vector<int> pivots(r);
        std::function<void(int, int)> choose = [&](int idx, int start) {
            if (idx == r) {
                // free positions: (i, j) with j > pivots[i], j not a pivot
                std::vector<bool> is_piv(n, false);
                for (int c : pivots) is_piv[c] = true;
                std::vector<std::pair<int, int>> free_pos;
                for (int i = 0; i < r; ++i)
                    for (int j = pivots[i] + 1; j < n; ++j)
                        if (!is_piv[j]) free_pos.push_back({i, j});
                std::vector<uint32_t> vals(free_pos.size(), 0);
                for (;;) {
                    Matrix rows(r, n, p);
                    for (int i = 0; i < r; ++i) rows.at(i, pivots[i]) = 1;
                    for (size_t t = 0; t < free_pos.size(); ++t)
                        rows.at(free_pos[t].first, free_pos[t].second) = vals[t];
                    cb(rows.transpose());
                    size_t pos = 0;
                    while (pos < vals.size() && ++vals[pos] == p) vals[pos++] = 0;
                    if (pos == vals.size()) break;
                }
                return;
            }
            for (int c = start; c < n; ++c) {
                pivots[idx] = c;
                choose(idx + 1, c + 1);
            }
        };
        choose(0, 0);
    }
}

bool subspace_is_stable(const LeftModule& m, const Matrix& basis) {
    for (const Matrix& l : m.action) {
        if (basis.cols() == 0) break;
        if (rank(hstack(basis, l * basis)) != basis.cols()) return false;
    }
    return true;
}

void for_each_stable_subspace(const LeftModule& m, long cap,
                              const std::function<void(const Matrix&)>& cb) {
    for_each_subspace(m.algebra->p, m.dim, cap, [&](const Matrix& basis) {
        if (subspace_is_stable(m, basis)) cb(basis);
    });
}

// Rank of the span of a set of matrices, viewed as vectors.
int matrix_span_rank(const std::vector<Matrix>& ms, uint32_t p) {
    if (ms.empty()) return 0;
    int len = ms[0].rows() * ms[0].cols();
    Matrix stacked(len, int(ms.size()), p);
    for (int j = 0; j < int(ms.size()); ++j) {
        const auto& d = ms[j].data();
        for (int i = 0; i < len; ++i) stacked.at(i, j) = d[i];
    }
    return rank(stacked);
}

}  // namespace

StarContext make_context(const LeftModule& p, int max_dim, long enum_budget) {
    auto end = algmod::endomorphism_algebra(p);
    StarContext ctx;
    ctx.ring = p.algebra;
    ctx.p = end.bimodule;
    ctx.endo = end.endo;
    ctx.endo_auto_computed = true;
    ctx.window_dim = max_dim;
    ctx.cogenerator = algmod::coregular_module(ctx.ring);
    ctx.p_star = hom_as_left_S_module(ctx.p, ctx.cogenerator).module;
    ctx.p_star.name = "P*";

    auto rw = algmod::enumerate_modules(ctx.ring, max_dim, enum_budget);
    auto sw = algmod::enumerate_modules(ctx.endo, max_dim, enum_budget);
    ctx.r_window = rw.modules;
    ctx.s_window = sw.modules;
    ctx.windows_complete = rw.complete && sw.complete;
    if (max_dim > 0) {
        ensure_member(ctx.r_window, ctx.p.as_left_module());
        ensure_member(ctx.s_window, algmod::regular_module(ctx.endo));
        ensure_member(ctx.s_window, ctx.p_star);
        std::stable_sort(ctx.r_window.begin(), ctx.r_window.end(),
                         [](const LeftModule& a, const LeftModule& b) { return a.dim < b.dim; });
        std::stable_sort(ctx.s_window.begin(), ctx.s_window.end(),
                         [](const LeftModule& a, const LeftModule& b) { return a.dim < b.dim; });
    }
    return ctx;
}

StarContext make_context(const Bimodule& p, int max_dim, long enum_budget) {
    StarContext ctx;
    ctx.ring = p.left_algebra;
    ctx.p = p;
    ctx.endo = p.right_algebra;
    ctx.endo_auto_computed = false;
    ctx.window_dim = max_dim;
    ctx.cogenerator = algmod::coregular_module(ctx.ring);
    ctx.p_star = hom_as_left_S_module(ctx.p, ctx.cogenerator).module;
    ctx.p_star.name = "P*";

    auto rw = algmod::enumerate_modules(ctx.ring, max_dim, enum_budget);
    auto sw = algmod::enumerate_modules(ctx.endo, max_dim, enum_budget);
    ctx.r_window = rw.modules;
    ctx.s_window = sw.modules;
    ctx.windows_complete = rw.complete && sw.complete;
    if (max_dim > 0) {
        ensure_member(ctx.r_window, ctx.p.as_left_module());
        ensure_member(ctx.s_window, algmod::regular_module(ctx.endo));
        ensure_member(ctx.s_window, ctx.p_star);
        std::stable_sort(ctx.r_window.begin(), ctx.r_window.end(),
                         [](const LeftModule& a, const LeftModule& b) { return a.dim < b.dim; });
        std::stable_sort(ctx.s_window.begin(), ctx.s_window.end(),
                         [](const LeftModule& a, const LeftModule& b) { return a.dim < b.dim; });
    }
    return ctx;
}

UnitResult unit_matrix(const StarContext& ctx, const LeftModule& x) {
    const uint32_t p = ctx.ring->p;
    const int np = ctx.p.dim;
    auto t = tensor_over(ctx.p, x);
    auto h = hom_as_left_S_module(ctx.p, t.module);
    UnitResult out;
    out.target = h.module;
    out.matrix = Matrix(h.module.dim, x.dim, p);
    for (int b = 0; b < x.dim; ++b) {
        Matrix mb(t.module.dim, np, p);
        for (int a = 0; a < np; ++a) {
            auto col = t.projection.col_vector(a * x.dim + b);
            for (int r = 0; r < t.module.dim; ++r) mb.at(r, a) = col[r];
        }
        auto coords = coordinates_in_matrix_basis(h.basis, mb);
        if (!coords) throw std::logic_error("unit image is not an R-module map");
        for (int r = 0; r < h.module.dim; ++r) out.matrix.at(r, b) = (*coords)[r];
    }
    if (!is_module_map(x, h.module, out.matrix))
        throw std::logic_error("unit is not an S-module map");
    return out;
}

CounitResult counit_matrix(const StarContext& ctx, const LeftModule& n) {
    const uint32_t p = ctx.ring->p;
    const int np = ctx.p.dim;
    auto h = hom_as_left_S_module(ctx.p, n);
    const int k = h.module.dim;
    auto t = tensor_over(ctx.p, h.module);
    Matrix eval(n.dim, np * k, p);
    for (int a = 0; a < np; ++a)
        for (int m = 0; m < k; ++m) {
            auto col = h.basis[m].col_vector(a);
            for (int r = 0; r < n.dim; ++r) eval.at(r, a * k + m) = col[r];
        }
    CounitResult out;
    out.source = t.module;
    out.matrix = eval * t.section;
    if (out.matrix * t.projection != eval)
        throw std::logic_error("counit evaluation does not factor through the tensor quotient");
    if (!is_module_map(t.module, n, out.matrix))
        throw std::logic_error("counit is not an R-module map");
    return out;
}

bool is_static(const StarContext& ctx, const LeftModule& n) {
    auto c = counit_matrix(ctx, n);
    return is_injective(c.matrix) && is_surjective(c.matrix);
}

bool is_adstatic(const StarContext& ctx, const LeftModule& x) {
    auto u = unit_matrix(ctx, x);
    return is_injective(u.matrix) && is_surjective(u.matrix);
}

GeneratedResult is_p_generated(const StarContext& ctx, const LeftModule& n) {
    GeneratedResult out;
    auto basis = hom_space(ctx.p.as_left_module(), n);
    out.canonical_cover = Matrix(n.dim, ctx.p.dim * int(basis.size()), ctx.ring->p);
    for (int m = 0; m < int(basis.size()); ++m)
        for (int a = 0; a < ctx.p.dim; ++a)
            for (int r = 0; r < n.dim; ++r)
                out.canonical_cover.at(r, m * ctx.p.dim + a) = basis[m].at(r, a);
    out.generated = rank(out.canonical_cover) == n.dim;
    return out;
}

bool is_p_presented(const StarContext& ctx, const LeftModule& n) {
    auto gen = is_p_generated(ctx, n);
    if (!gen.generated) return false;
    int k = gen.canonical_cover.cols() / std::max(ctx.p.dim, 1);
    if (gen.canonical_cover.cols() == 0) return true;  // N = 0
    LeftModule pk = power_module(ctx.p.as_left_module(), k);
    Matrix kern = kernel_basis(gen.canonical_cover);
    auto sub = algmod::submodule(pk, kern);
    return is_p_generated(ctx, sub.module).generated;
}

bool is_pstar_copresented(const StarContext& ctx, const LeftModule& x) {
    auto embed_into_power = [&](const LeftModule& m, Matrix* map_out,
                                LeftModule* power_out) {
        auto basis = hom_space(m, ctx.p_star);
        const int k = int(basis.size());
        Matrix v(ctx.p_star.dim * k, m.dim, ctx.ring->p);
        for (int j = 0; j < k; ++j)
            for (int r = 0; r < ctx.p_star.dim; ++r)
                for (int c = 0; c < m.dim; ++c)
                    v.at(j * ctx.p_star.dim + r, c) = basis[j].at(r, c);
        *map_out = v;
        *power_out = power_module(ctx.p_star, k);
        return is_injective(v);
    };
    Matrix v(0, 0, ctx.ring->p);
    LeftModule power = algmod::zero_module(ctx.endo);
    if (!embed_into_power(x, &v, &power)) return false;
    if (x.dim == 0) return true;
    auto coker = algmod::quotient(power, image_basis(v));
    Matrix v2(0, 0, ctx.ring->p);
    LeftModule power2 = algmod::zero_module(ctx.endo);
    return embed_into_power(coker.module, &v2, &power2);
}

ConcreteBattery idempotence_battery_concrete(const StarContext& ctx) {
    ConcreteBattery r;
    r.b = true;
    for (const auto& x : ctx.s_window) {
        auto t = tensor_over(ctx.p, x);
        if (!is_static(ctx, t.module)) {
            r.b = false;
            r.witnesses.push_back("b: T_P(" + x.name + ") not static");
            break;
        }
    }
    r.d = true;
    for (const auto& n : ctx.r_window) {
        auto h = hom_as_left_S_module(ctx.p, n);
        if (!is_adstatic(ctx, h.module)) {
            r.d = false;
            r.witnesses.push_back("d: H_P(" + n.name + ") not adstatic");
            break;
        }
    }
    r.e = true;
    for (const auto& n : ctx.r_window)
        if (is_p_presented(ctx, n) && !is_static(ctx, n)) {
            r.e = false;
            r.witnesses.push_back("e: presented module " + n.name + " not static");
            break;
        }
    r.f = true;
    for (const auto& x : ctx.s_window)
        if (is_pstar_copresented(ctx, x) && !is_adstatic(ctx, x)) {
            r.f = false;
            r.witnesses.push_back("f: copresented module " + x.name + " not adstatic");
            break;
        }
    // natural-transformation forms, window-bounded conjunctions
    r.a = r.b;
    r.c = r.d;
    r.window_bounded = true;
    return r;
}

SelfSmallReport self_small_check(const StarContext& ctx, int lambda_bound) {
    SelfSmallReport rep;
    rep.lambda_bound = lambda_bound;
    rep.holds = true;
    LeftModule p_left = ctx.p.as_left_module();
    int end_dim = hom_dim(p_left, p_left);
    for (int lam = 1; lam <= lambda_bound; ++lam) {
        LeftModule pk = power_module(p_left, lam);
        if (hom_dim(p_left, pk) != lam * end_dim) {
            rep.holds = false;
            break;
        }
    }
    return rep;
}

WSigmaQpReport w_sigma_qp_check(const StarContext& ctx, int k_bound) {
    WSigmaQpReport rep;
    rep.k_bound = k_bound;
    rep.holds = true;
    LeftModule p_left = ctx.p.as_left_module();
    for (int k = 1; k <= k_bound && rep.holds; ++k) {
        LeftModule pk = power_module(p_left, k);
        auto hom_ppk = hom_space(p_left, pk);
        for_each_stable_subspace(pk, 1 << 20, [&](const Matrix& basis) {
            if (!rep.holds) return;
            auto sub = algmod::submodule(pk, basis);
            if (!is_p_generated(ctx, sub.module).generated) return;
            ++rep.sequences_checked;
            auto q = algmod::quotient(pk, basis);
            std::vector<Matrix> images;
            for (const auto& h : hom_ppk) images.push_back(q.projection * h);
            if (matrix_span_rank(images, ctx.ring->p) != hom_dim(p_left, q.module)) {
                rep.holds = false;
                rep.witness = "0 -> K -> P^" + std::to_string(k) +
                              " -> N -> 0 with dim K = " + std::to_string(basis.cols());
            }
        });
    }
    return rep;
}

Matrix tensor_on_map(const StarContext& ctx, const LeftModule& x, const Matrix& g,
                     const TensorResult& tx, const TensorResult& tx2) {
    Matrix eye_p = Matrix::identity(ctx.p.dim, ctx.ring->p);
    return tx2.projection * kron(eye_p, g) * tx.section;
}

Matrix hom_on_map(const HomModule& h_src, const HomModule& h_dst, const Matrix& f) {
    const uint32_t p = h_dst.module.algebra->p;
    Matrix out(h_dst.module.dim, h_src.module.dim, p);
    for (int m = 0; m < h_src.module.dim; ++m) {
        auto coords = coordinates_in_matrix_basis(h_dst.basis, f * h_src.basis[m]);
        if (!coords) throw std::logic_error("hom_on_map: image not in target hom basis");
        for (int r = 0; r < h_dst.module.dim; ++r) out.at(r, m) = (*coords)[r];
    }
    return out;
}

namespace {

// H_P T_P applied to an S-module map g : x -> x2.
Matrix monad_on_map(const StarContext& ctx, const LeftModule& x, const LeftModule& x2,
                    const Matrix& g) {
    auto tx = tensor_over(ctx.p, x);
    auto tx2 = tensor_over(ctx.p, x2);
    Matrix tg = tensor_on_map(ctx, x, g, tx, tx2);
    auto hx = hom_as_left_S_module(ctx.p, tx.module);
    auto hx2 = hom_as_left_S_module(ctx.p, tx2.module);
    return hom_on_map(hx, hx2, tg);
}

// T_P H_P applied to an R-module map f : n -> n2.
Matrix comonad_on_map(const StarContext& ctx, const LeftModule& n, const LeftModule& n2,
                      const Matrix& f) {
    auto hn = hom_as_left_S_module(ctx.p, n);
    auto hn2 = hom_as_left_S_module(ctx.p, n2);
    Matrix hf = hom_on_map(hn, hn2, f);
    auto tn = tensor_over(ctx.p, hn.module);
    auto tn2 = tensor_over(ctx.p, hn2.module);
    return tensor_on_map(ctx, hn.module, hf, tn, tn2);
}

}  // namespace

StarVerdict star_verdict(const StarContext& ctx) {
    StarVerdict v;
    v.window_dim = ctx.window_dim;
    if (ctx.window_dim <= 0) {
        v.status = StarStatus::Undecided;
        v.notes.push_back("window dimension 0: nothing to verify");
        return v;
    }
    for (const auto& x : ctx.s_window) {
        auto u = unit_matrix(ctx, x);
        if (!is_surjective(u.matrix))
            v.certificates.push_back(
                {Certificate::Kind::UnitNotSurjective, x, u.matrix});
    }
    for (const auto& n : ctx.r_window) {
        auto c = counit_matrix(ctx, n);
        if (!is_injective(c.matrix))
            v.certificates.push_back(
                {Certificate::Kind::CounitNotInjective, n, c.matrix});
    }
    v.battery = idempotence_battery_concrete(ctx);
    if (!v.certificates.empty()) {
        v.status = StarStatus::Refuted;
        return v;
    }
    if (!ctx.windows_complete) {
        v.status = StarStatus::Undecided;
        v.notes.push_back("window enumeration incomplete");
        return v;
    }
    v.status = StarStatus::StarOnWindow;

    // Closure of the fixed classes inside the window.
    v.static_closed_under_quotients = true;
    for (const auto& n : ctx.r_window) {
        if (!is_static(ctx, n)) continue;
        try {
            for_each_stable_subspace(n, 1 << 18, [&](const Matrix& basis) {
                if (!v.static_closed_under_quotients || basis.cols() == 0) return;
                auto q = algmod::quotient(n, basis);
                if (!is_static(ctx, q.module)) {
                    v.static_closed_under_quotients = false;
                    v.notes.push_back("static class not closed under quotient of " + n.name);
                }
            });
        } catch (const fincat::BudgetExceeded&) {
            v.notes.push_back("quotient closure check skipped for " + n.name +
                              " (subspace budget)");
        }
    }
    v.adstatic_closed_under_submodules = true;
    for (const auto& x : ctx.s_window) {
        if (!is_adstatic(ctx, x)) continue;
        try {
            for_each_stable_subspace(x, 1 << 18, [&](const Matrix& basis) {
                if (!v.adstatic_closed_under_submodules) return;
                auto sub = algmod::submodule(x, basis);
                if (!is_adstatic(ctx, sub.module)) {
                    v.adstatic_closed_under_submodules = false;
                    v.notes.push_back("adstatic class not closed under submodule of " + x.name);
                }
            });
        } catch (const fincat::BudgetExceeded&) {
            v.notes.push_back("submodule closure check skipped for " + x.name +
                              " (subspace budget)");
        }
    }

    v.mutually_inverse_on_fixed = true;
    for (const auto& n : ctx.r_window) {
        if (!is_static(ctx, n)) continue;
        auto h = hom_as_left_S_module(ctx.p, n);
        if (!is_adstatic(ctx, h.module)) {
            v.mutually_inverse_on_fixed = false;
            v.notes.push_back("H_P(" + n.name + ") not adstatic");
        }
    }
    for (const auto& x : ctx.s_window) {
        if (!is_adstatic(ctx, x)) continue;
        auto t = tensor_over(ctx.p, x);
        if (!is_static(ctx, t.module)) {
            v.mutually_inverse_on_fixed = false;
            v.notes.push_back("T_P(" + x.name + ") not static");
        }
    }

    // psi : GF(X1) + GF(X2) -> GF(X1+X2) epi, phi : FG(N1 x N2) -> FG(N1) x FG(N2) mono
    const uint32_t p = ctx.ring->p;
    v.coproduct_psi_epi = true;
    for (size_t i = 0; i < ctx.s_window.size() && v.coproduct_psi_epi; ++i)
        for (size_t j = i; j < ctx.s_window.size(); ++j) {
            const LeftModule& x1 = ctx.s_window[i];
            const LeftModule& x2 = ctx.s_window[j];
            LeftModule x12 = algmod::direct_sum({x1, x2});
            Matrix i1 = block_injection(p, {x1.dim, x2.dim}, 0);
            Matrix i2 = block_injection(p, {x1.dim, x2.dim}, 1);
            Matrix psi = hstack(monad_on_map(ctx, x1, x12, i1),
                                monad_on_map(ctx, x2, x12, i2));
            if (!is_surjective(psi)) {
                v.coproduct_psi_epi = false;
                v.notes.push_back("psi not epi at " + x1.name + "," + x2.name);
                break;
            }
        }
    v.product_phi_mono = true;
    for (size_t i = 0; i < ctx.r_window.size() && v.product_phi_mono; ++i)
        for (size_t j = i; j < ctx.r_window.size(); ++j) {
            const LeftModule& n1 = ctx.r_window[i];
            const LeftModule& n2 = ctx.r_window[j];
            LeftModule n12 = algmod::direct_sum({n1, n2});
            Matrix p1 = block_projection(p, {n1.dim, n2.dim}, 0);
            Matrix p2 = block_projection(p, {n1.dim, n2.dim}, 1);
            Matrix phi = vstack(comonad_on_map(ctx, n12, n1, p1),
                                comonad_on_map(ctx, n12, n2, p2));
            if (!is_injective(phi)) {
                v.product_phi_mono = false;
                v.notes.push_back("phi not mono at " + n1.name + "," + n2.name);
                break;
            }
        }
    return v;
}

bool revalidate_certificate(const StarContext& ctx, const Certificate& cert) {
    if (cert.kind == Certificate::Kind::UnitNotSurjective) {
        auto u = unit_matrix(ctx, cert.module);
        return u.matrix == cert.map && !is_surjective(u.matrix);
    }
    auto c = counit_matrix(ctx, cert.module);
    return c.matrix == cert.map && !is_injective(c.matrix);
}

std::optional<fincat::Mor> WindowCategory::find_morphism(int src_obj, int dst_obj,
                                                         const Matrix& m) const {
    for (fincat::Mor mor = 0; mor < category->mor_count(); ++mor)
        if (category->mor_src[mor] == src_obj && category->mor_dst[mor] == dst_obj &&
            morphism_matrices[mor] == m)
            return mor;
    return std::nullopt;
}

WindowCategory build_window_category(const StarContext& ctx, WindowSide side,
                                     long hom_budget) {
    const auto& window = (side == WindowSide::R) ? ctx.r_window : ctx.s_window;
    const uint32_t p = ctx.ring->p;
    WindowCategory out;
    auto cat = std::make_shared<fincat::FinCategory>();
    cat->n_objects = int(window.size());
    for (const auto& m : window) cat->object_names.push_back(m.name);
    out.object_of_module.resize(window.size());
    for (size_t i = 0; i < window.size(); ++i) out.object_of_module[i] = int(i);

    for (size_t i = 0; i < window.size(); ++i)
        for (size_t j = 0; j < window.size(); ++j) {
            auto basis = hom_space(window[i], window[j]);
            double count = 1;
            for (size_t b = 0; b < basis.size(); ++b) count *= p;
            if (count > double(hom_budget))
                throw fincat::BudgetExceeded("hom-set exceeds window budget");
            // enumerate the whole hom-set, zero map first
            std::vector<uint32_t> coeff(basis.size(), 0);
            for (;;) {
                Matrix f(window[j].dim, window[i].dim, p);
                for (size_t b = 0; b < basis.size(); ++b)
                    if (coeff[b]) f = f + basis[b].scaled(coeff[b]);
                cat->mor_src.push_back(int(i));
                cat->mor_dst.push_back(int(j));
                out.morphism_matrices.push_back(f);
                if (int(cat->mor_src.size()) > hom_budget)
                    throw fincat::BudgetExceeded("window category exceeds morphism budget");
                size_t pos = 0;
                while (pos < coeff.size() && ++coeff[pos] == p) coeff[pos++] = 0;
                if (pos == coeff.size()) break;
            }
        }
    const int nm = int(cat->mor_src.size());
    cat->identity.resize(window.size());
    for (size_t i = 0; i < window.size(); ++i) {
        Matrix eye = Matrix::identity(window[i].dim, p);
        for (fincat::Mor m = 0; m < nm; ++m)
            if (cat->mor_src[m] == int(i) && cat->mor_dst[m] == int(i) &&
                out.morphism_matrices[m] == eye) {
                cat->identity[i] = m;
                break;
            }
    }
    cat->table.assign(nm, std::vector<fincat::Mor>(nm, fincat::kNone));
    for (fincat::Mor g = 0; g < nm; ++g)
        for (fincat::Mor f = 0; f < nm; ++f) {
            if (cat->mor_dst[f] != cat->mor_src[g]) continue;
            Matrix comp = out.morphism_matrices[g] * out.morphism_matrices[f];
            for (fincat::Mor h = 0; h < nm; ++h)
                if (cat->mor_src[h] == cat->mor_src[f] && cat->mor_dst[h] == cat->mor_dst[g] &&
                    out.morphism_matrices[h] == comp) {
                    cat->table[g][f] = h;
                    break;
                }
        }
    out.category = cat;
    return out;
}

}  // namespace adjforge::starlab
