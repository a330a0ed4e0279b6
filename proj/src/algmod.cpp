#include "adjforge/algmod.hpp"

#include <algorithm>
#include <map>

namespace adjforge::algmod {

using ffla::hstack;
using ffla::image_basis;
using ffla::inverse;
using ffla::kernel_basis;
using ffla::kron;
using ffla::quotient_basis;
using ffla::rank;
using ffla::solve;
using fincat::FailureKind;

namespace {

void add(Validation& v, FailureKind k, std::string law, std::string wit) {
    v.failures.push_back({k, std::move(law), std::move(wit)});
}

std::vector<uint32_t> vec_rowmajor(const Matrix& m) { return m.data(); }

Matrix unvec_rowmajor(const std::vector<uint32_t>& v, int rows, int cols, uint32_t p) {
    Matrix m(rows, cols, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = v[size_t(i) * cols + j] % p;
    return m;
}

std::vector<uint32_t> scaled_sum(const std::vector<std::vector<uint32_t>>& vs,
                                 const std::vector<uint32_t>& coeffs, size_t len,
                                 uint32_t p) {
    std::vector<uint32_t> out(len, 0);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (!coeffs[i]) continue;
        for (size_t j = 0; j < len; ++j)
            out[j] = uint32_t((out[j] + uint64_t(coeffs[i]) * vs[i][j]) % p);
    }
    return out;
}

}  // namespace

// Coordinates of a matrix in a given matrix basis, if representable.
std::optional<std::vector<uint32_t>> coordinates_in_matrix_basis(
    const std::vector<Matrix>& basis, const Matrix& m) {
    if (basis.empty()) return m.is_zero() ? std::make_optional(std::vector<uint32_t>{})
                                          : std::nullopt;
    int len = basis[0].rows() * basis[0].cols();
    Matrix b(len, int(basis.size()), m.p());
    for (int j = 0; j < int(basis.size()); ++j) {
        auto v = vec_rowmajor(basis[j]);
        for (int i = 0; i < len; ++i) b.at(i, j) = v[i];
    }
    return solve(b, vec_rowmajor(m));
}

Matrix FqAlgebra::left_mult(const std::vector<uint32_t>& a) const {
    Matrix m(dim, dim, p);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) {
            if (!a[i]) continue;
            for (int k = 0; k < dim; ++k)
                m.at(k, j) = uint32_t((m.at(k, j) + uint64_t(a[i]) * constants[i][j][k]) % p);
        }
    return m;
}

Matrix FqAlgebra::left_mult_basis(int i) const {
    Matrix m(dim, dim, p);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m.at(k, j) = constants[i][j][k];
    return m;
}

Matrix FqAlgebra::right_mult_basis(int j) const {
    Matrix m(dim, dim, p);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) m.at(k, i) = constants[i][j][k];
    return m;
}

std::vector<uint32_t> FqAlgebra::multiply(const std::vector<uint32_t>& a,
                                          const std::vector<uint32_t>& b) const {
    std::vector<uint32_t> out(dim, 0);
    for (int i = 0; i < dim; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < dim; ++j) {
            if (!b[j]) continue;
            uint64_t f = uint64_t(a[i]) * b[j] % p;
            for (int k = 0; k < dim; ++k)
                out[k] = uint32_t((out[k] + f * constants[i][j][k]) % p);
        }
    }
    return out;
}

Matrix LeftModule::act(const std::vector<uint32_t>& a) const {
    Matrix m(dim, dim, algebra->p);
    for (int i = 0; i < algebra->dim; ++i)
        if (a[i]) m = m + action[i].scaled(a[i]);
    return m;
}

LeftModule Bimodule::as_left_module() const {
    LeftModule m;
    m.algebra = left_algebra;
    m.dim = dim;
    m.action = left_action;
    m.name = name;
    return m;
}

Validation validate_algebra(const FqAlgebra& r) {
    Validation v;
    if (!ffla::is_prime(r.p)) {
        add(v, FailureKind::Malformed, "field", "p is not prime");
        return v;
    }
    if (int(r.constants.size()) != r.dim || int(r.unit.size()) != r.dim) {
        add(v, FailureKind::Malformed, "shape", "constants/unit size != dim");
        return v;
    }
    for (int i = 0; i < r.dim; ++i) {
        if (int(r.constants[i].size()) != r.dim) {
            add(v, FailureKind::Malformed, "shape", "constants row " + std::to_string(i));
            return v;
        }
        for (int j = 0; j < r.dim; ++j)
            if (int(r.constants[i][j].size()) != r.dim) {
                add(v, FailureKind::Malformed, "shape",
                    "constants[" + std::to_string(i) + "][" + std::to_string(j) + "]");
                return v;
            }
    }
    auto basis_vec = [&](int i) {
        std::vector<uint32_t> e(r.dim, 0);
        e[i] = 1;
        return e;
    };
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j)
            for (int k = 0; k < r.dim; ++k) {
                auto lhs = r.multiply(r.constants[i][j], basis_vec(k));
                auto rhs = r.multiply(basis_vec(i), r.constants[j][k]);
                if (lhs != rhs) {
                    add(v, FailureKind::LawViolation, "associativity",
                        "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")");
                    return v;
                }
            }
    for (int j = 0; j < r.dim; ++j) {
        if (r.multiply(r.unit, basis_vec(j)) != basis_vec(j))
            add(v, FailureKind::LawViolation, "left-unit", std::to_string(j));
        if (r.multiply(basis_vec(j), r.unit) != basis_vec(j))
            add(v, FailureKind::LawViolation, "right-unit", std::to_string(j));
    }
    return v;
}

Validation validate_module(const LeftModule& m) {
    Validation v;
    const FqAlgebra& r = *m.algebra;
    if (int(m.action.size()) != r.dim) {
        add(v, FailureKind::Malformed, "shape", "action count != algebra dim");
        return v;
    }
    for (int i = 0; i < r.dim; ++i)
        if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim ||
            m.action[i].p() != r.p) {
            add(v, FailureKind::Malformed, "shape", "action matrix " + std::to_string(i));
            return v;
        }
    if (!m.act(r.unit).is_identity())
        add(v, FailureKind::LawViolation, "unit-action", "L(unit) != I");
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j) {
            Matrix expect(m.dim, m.dim, r.p);
            for (int k = 0; k < r.dim; ++k)
                if (r.constants[i][j][k])
                    expect = expect + m.action[k].scaled(r.constants[i][j][k]);
            if (m.action[i] * m.action[j] != expect) {
                add(v, FailureKind::LawViolation, "multiplicativity",
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")");
                return v;
            }
        }
    return v;
}

Validation validate_bimodule(const Bimodule& b) {
    Validation v = validate_module(b.as_left_module());
    if (!v.ok()) return v;
    const FqAlgebra& s = *b.right_algebra;
    if (int(b.right_action.size()) != s.dim) {
        add(v, FailureKind::Malformed, "shape", "right action count != S dim");
        return v;
    }
    for (int j = 0; j < s.dim; ++j)
        if (b.right_action[j].rows() != b.dim || b.right_action[j].cols() != b.dim) {
            add(v, FailureKind::Malformed, "shape", "right action matrix " + std::to_string(j));
            return v;
        }
    // right action: N(unit)=I and N(s_i s_j) = N_j N_i
    Matrix nu(b.dim, b.dim, s.p);
    for (int j = 0; j < s.dim; ++j)
        if (s.unit[j]) nu = nu + b.right_action[j].scaled(s.unit[j]);
    if (!nu.is_identity()) add(v, FailureKind::LawViolation, "right-unit-action", "N(unit) != I");
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j) {
            Matrix expect(b.dim, b.dim, s.p);
            for (int k = 0; k < s.dim; ++k)
                if (s.constants[i][j][k])
                    expect = expect + b.right_action[k].scaled(s.constants[i][j][k]);
            if (b.right_action[j] * b.right_action[i] != expect) {
                add(v, FailureKind::LawViolation, "right-multiplicativity",
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")");
                return v;
            }
        }
    for (int i = 0; i < b.left_algebra->dim; ++i)
        for (int j = 0; j < s.dim; ++j)
            if (b.left_action[i] * b.right_action[j] != b.right_action[j] * b.left_action[i]) {
                add(v, FailureKind::LawViolation, "actions-commute",
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")");
                return v;
            }
    return v;
}

bool is_module_map(const LeftModule& src, const LeftModule& dst, const Matrix& f) {
    if (f.rows() != dst.dim || f.cols() != src.dim) return false;
    for (int i = 0; i < src.algebra->dim; ++i)
        if (f * src.action[i] != dst.action[i] * f) return false;
    return true;
}

std::vector<Matrix> hom_space(const LeftModule& src, const LeftModule& dst) {
    const uint32_t p = src.algebra->p;
    const int ns = src.dim, nd = dst.dim;
    const int d = src.algebra->dim;
    const int unknowns = nd * ns;
    if (unknowns == 0) return {};
    Matrix sys(d * unknowns, unknowns, p);
    Matrix eye_s = Matrix::identity(ns, p);
    Matrix eye_d = Matrix::identity(nd, p);
    for (int i = 0; i < d; ++i) {
        // row-major vec: f * L_src -> kron(I, L_src^T); L_dst * f -> kron(L_dst, I)
        Matrix block = kron(eye_d, src.action[i].transpose()) - kron(dst.action[i], eye_s);
        for (int r = 0; r < unknowns; ++r)
            for (int c = 0; c < unknowns; ++c) sys.at(i * unknowns + r, c) = block.at(r, c);
    }
    Matrix k = kernel_basis(sys);
    std::vector<Matrix> basis;
    for (int j = 0; j < k.cols(); ++j)
        basis.push_back(unvec_rowmajor(k.col_vector(j), nd, ns, p));
    return basis;
}

int hom_dim(const LeftModule& src, const LeftModule& dst) {
    if (src.dim == 0 || dst.dim == 0) return 0;
    return int(hom_space(src, dst).size());
}

EndResult endomorphism_algebra(const LeftModule& p) {
    EndResult out;
    out.basis = hom_space(p, p);
    const int d = int(out.basis.size());
    auto s = std::make_shared<FqAlgebra>();
    s->p = p.algebra->p;
    s->dim = d;
    s->name = "End(" + (p.name.empty() ? std::string("P") : p.name) + ")";
    s->constants.assign(d, std::vector<std::vector<uint32_t>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // right-operator composition: f_i then f_j, matrix F_j * F_i
            auto coords = coordinates_in_matrix_basis(out.basis, out.basis[j] * out.basis[i]);
            if (!coords) throw std::logic_error("End basis not closed under composition");
            s->constants[i][j] = *coords;
        }
    auto unit = coordinates_in_matrix_basis(out.basis, Matrix::identity(p.dim, s->p));
    if (!unit) throw std::logic_error("identity not in End basis span");
    s->unit = *unit;
    out.endo = s;

    out.bimodule.left_algebra = p.algebra;
    out.bimodule.right_algebra = s;
    out.bimodule.dim = p.dim;
    out.bimodule.left_action = p.action;
    out.bimodule.right_action = out.basis;
    out.bimodule.name = p.name;
    return out;
}

static bool same_algebra(const FqAlgebra& a, const FqAlgebra& b) {
    return a.p == b.p && a.dim == b.dim && a.constants == b.constants && a.unit == b.unit;
}

TensorResult tensor_over(const Bimodule& p, const LeftModule& x) {
    if (!same_algebra(*p.right_algebra, *x.algebra))
        throw std::invalid_argument("tensor_over: right algebra of P != algebra of X");
    const uint32_t q = p.left_algebra->p;
    const int np = p.dim, nx = x.dim;
    const int n = np * nx;
    const int ds = p.right_algebra->dim;

    Matrix relations(n, 0, q);
    Matrix eye_x = Matrix::identity(nx, q);
    Matrix eye_p = Matrix::identity(np, q);
    for (int j = 0; j < ds; ++j) {
        // (p*s_j) ox x  -  p ox (s_j*x), p-major indexing
        Matrix dj = kron(p.right_action[j], eye_x) - kron(eye_p, x.action[j]);
        relations = hstack(relations, dj);
    }
    auto maps = quotient_basis(n, relations);

    TensorResult out;
    out.projection = maps.projection;
    out.section = maps.section;
    out.module.algebra = p.left_algebra;
    out.module.dim = maps.projection.rows();
    for (int i = 0; i < p.left_algebra->dim; ++i) {
        Matrix amb = kron(p.left_action[i], eye_x);
        // R-stability of the relation span, i.e. the induced action is defined
        if (!(out.projection * (amb * relations)).is_zero())
            throw std::logic_error("tensor relations not stable under the left action");
        out.module.action.push_back(out.projection * amb * out.section);
    }
    out.module.name = (p.name.empty() ? "P" : p.name) + "(x)" +
                      (x.name.empty() ? "X" : x.name);
    return out;
}

HomModule hom_as_left_S_module(const Bimodule& p, const LeftModule& n) {
    if (!same_algebra(*p.left_algebra, *n.algebra))
        throw std::invalid_argument("hom_as_left_S_module: N is not over the left algebra");
    HomModule out;
    out.basis = hom_space(p.as_left_module(), n);
    const int k = int(out.basis.size());
    out.module.algebra = p.right_algebra;
    out.module.dim = k;
    const int ds = p.right_algebra->dim;
    for (int j = 0; j < ds; ++j) {
        Matrix a(k, k, p.left_algebra->p);
        for (int m = 0; m < k; ++m) {
            // (q)(s_j . f_m) = (q * s_j) f_m, matrix F_m N_j
            auto coords = coordinates_in_matrix_basis(out.basis, out.basis[m] * p.right_action[j]);
            if (!coords) throw std::logic_error("hom space not closed under the S-action");
            for (int r = 0; r < k; ++r) a.at(r, m) = (*coords)[r];
        }
        out.module.action.push_back(a);
    }
    out.module.name = "Hom(" + (p.name.empty() ? "P" : p.name) + "," +
                      (n.name.empty() ? "N" : n.name) + ")";
    return out;
}

LeftModule zero_module(const std::shared_ptr<const FqAlgebra>& r) {
    LeftModule m;
    m.algebra = r;
    m.dim = 0;
    m.action.assign(r->dim, Matrix(0, 0, r->p));
    m.name = "0";
    return m;
}

LeftModule direct_sum(const std::vector<LeftModule>& ms) {
    if (ms.empty()) throw std::invalid_argument("direct_sum: empty list");
    LeftModule out = ms[0];
    for (size_t i = 1; i < ms.size(); ++i) {
        if (!same_algebra(*out.algebra, *ms[i].algebra))
            throw std::invalid_argument("direct_sum: algebra mismatch");
        out.dim += ms[i].dim;
        for (int j = 0; j < int(out.action.size()); ++j)
            out.action[j] = ffla::direct_sum(out.action[j], ms[i].action[j]);
        out.name += "+" + ms[i].name;
    }
    return out;
}

SubmoduleResult submodule(const LeftModule& m, const Matrix& generators) {
    const uint32_t p = m.algebra->p;
    Matrix span = image_basis(generators);
    for (;;) {
        Matrix grown = span;
        for (const Matrix& l : m.action) grown = hstack(grown, l * span);
        Matrix next = image_basis(grown);
        if (next.cols() == span.cols()) break;
        span = next;
    }
    SubmoduleResult out;
    out.inclusion = span;
    out.module.algebra = m.algebra;
    out.module.dim = span.cols();
    for (const Matrix& l : m.action) {
        Matrix ls = l * span;
        Matrix a(span.cols(), span.cols(), p);
        for (int c = 0; c < ls.cols(); ++c) {
            auto sol = solve(span, ls.col_vector(c));
            if (!sol) throw std::logic_error("submodule closure failed");
            for (int r = 0; r < span.cols(); ++r) a.at(r, c) = (*sol)[r];
        }
        out.module.action.push_back(a);
    }
    out.module.name = "sub(" + m.name + ")";
    return out;
}

QuotientResult quotient(const LeftModule& m, const Matrix& sub_basis) {
    auto maps = quotient_basis(m.dim, sub_basis);
    QuotientResult out;
    out.projection = maps.projection;
    out.section = maps.section;
    out.module.algebra = m.algebra;
    out.module.dim = maps.projection.rows();
    for (const Matrix& l : m.action) {
        if (!(maps.projection * (l * sub_basis)).is_zero())
            throw std::invalid_argument("quotient: subspace is not action-stable");
        out.module.action.push_back(maps.projection * l * maps.section);
    }
    out.module.name = m.name + "/sub";
    return out;
}

IsoResult are_isomorphic(const LeftModule& m, const LeftModule& n, long search_budget) {
    if (!same_algebra(*m.algebra, *n.algebra))
        throw std::invalid_argument("are_isomorphic: algebra mismatch");
    if (m.dim != n.dim) return {IsoStatus::NotIsomorphic, std::nullopt};
    if (m.dim == 0) return {IsoStatus::Isomorphic, Matrix(0, 0, m.algebra->p)};
    auto basis = hom_space(m, n);
    if (basis.empty()) return {IsoStatus::NotIsomorphic, std::nullopt};
    const uint32_t p = m.algebra->p;
    const int k = int(basis.size());
    double total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    if (total > double(search_budget)) return {IsoStatus::Undecided, std::nullopt};

    std::vector<uint32_t> coeff(k, 0);
    for (;;) {
        // odometer increment
        int pos = 0;
        while (pos < k && ++coeff[pos] == p) coeff[pos++] = 0;
        if (pos == k) break;
        Matrix f(n.dim, m.dim, p);
        for (int i = 0; i < k; ++i)
            if (coeff[i]) f = f + basis[i].scaled(coeff[i]);
        if (rank(f) == m.dim) return {IsoStatus::Isomorphic, f};
    }
    return {IsoStatus::NotIsomorphic, std::nullopt};
}

namespace {

// DFS enumeration of action-matrix tuples with linear-constraint propagation.
class ModuleEnumerator {
public:
    ModuleEnumerator(const FqAlgebra& r, int n, long budget)
        : r_(r), n_(n), budget_(budget), chosen_(r.dim) {}

    bool run(std::vector<LeftModule>& out,
             const std::shared_ptr<const FqAlgebra>& alg_ref) {
        alg_ref_ = alg_ref;
        out_ = &out;
        ok_ = true;
        dfs(0);
        return ok_;
    }

private:
    const FqAlgebra& r_;
    int n_;
    long budget_;
    long steps_ = 0;
    bool ok_ = true;
    std::vector<Matrix> chosen_;
    std::vector<LeftModule>* out_ = nullptr;
    std::shared_ptr<const FqAlgebra> alg_ref_;

    bool charge() {
        if (++steps_ > budget_) ok_ = false;
        return ok_;
    }

    bool full_check() const {
        std::vector<uint32_t> u = r_.unit;
        Matrix acc(n_, n_, r_.p);
        for (int i = 0; i < r_.dim; ++i)
            if (u[i]) acc = acc + chosen_[i].scaled(u[i]);
        if (!acc.is_identity()) return false;
        for (int i = 0; i < r_.dim; ++i)
            for (int j = 0; j < r_.dim; ++j) {
                Matrix expect(n_, n_, r_.p);
                for (int k = 0; k < r_.dim; ++k)
                    if (r_.constants[i][j][k])
                        expect = expect + chosen_[k].scaled(r_.constants[i][j][k]);
                if (chosen_[i] * chosen_[j] != expect) return false;
            }
        return true;
    }

    void dfs(int t) {
        if (!ok_) return;
        if (t == r_.dim) {
            if (!charge()) return;
            if (!full_check()) return;
            LeftModule m;
            m.algebra = alg_ref_;
            m.dim = n_;
            m.action = chosen_;
            out_->push_back(std::move(m));
            return;
        }
        const uint32_t p = r_.p;
        const int nn = n_ * n_;
        Matrix eye = Matrix::identity(n_, p);

        // Collect linear constraints on vec(L_t): products with already-chosen
        // matrices whose structure constants reference only indices <= t, plus
        // the unit constraint once every later unit coordinate is zero.
        Matrix sys(0, nn, p);
        std::vector<uint32_t> rhs;
        auto append = [&](const Matrix& block, const std::vector<uint32_t>& b) {
            sys = ffla::vstack(sys, block);
            rhs.insert(rhs.end(), b.begin(), b.end());
        };
        for (int i = 0; i < t; ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                const auto& c = dir == 0 ? r_.constants[i][t] : r_.constants[t][i];
                bool applicable = true;
                for (int k = t + 1; k < r_.dim; ++k)
                    if (c[k]) applicable = false;
                if (!applicable) continue;
                Matrix block = dir == 0 ? kron(chosen_[i], eye)
                                        : kron(eye, chosen_[i].transpose());
                if (c[t]) block = block - Matrix::identity(nn, p).scaled(c[t]);
                std::vector<uint32_t> b(nn, 0);
                for (int k = 0; k < t; ++k) {
                    if (!c[k]) continue;
                    auto v = chosen_[k].data();
                    for (int z = 0; z < nn; ++z)
                        b[z] = uint32_t((b[z] + uint64_t(c[k]) * v[z]) % p);
                }
                append(block, b);
            }
        }
        bool unit_now = r_.unit[t] != 0;
        for (int k = t + 1; k < r_.dim && unit_now; ++k)
            if (r_.unit[k]) unit_now = false;
        if (unit_now) {
            Matrix block = Matrix::identity(nn, p).scaled(r_.unit[t]);
            std::vector<uint32_t> b = eye.data();
            for (int i = 0; i < t; ++i) {
                if (!r_.unit[i]) continue;
                auto v = chosen_[i].data();
                for (int z = 0; z < nn; ++z)
                    b[z] = uint32_t((b[z] + uint64_t(p - r_.unit[i] % p) * v[z]) % p);
            }
            append(block, b);
        }

        // Solution set = particular + kernel span.
        std::vector<std::vector<uint32_t>> candidates_basis;
        std::vector<uint32_t> particular(nn, 0);
        int free_dim = nn;
        if (sys.rows() > 0) {
            auto part = solve(sys, rhs);
            if (!part) return;  // no consistent choice at this level
            particular = *part;
            Matrix k = kernel_basis(sys);
            free_dim = k.cols();
            for (int j = 0; j < k.cols(); ++j) candidates_basis.push_back(k.col_vector(j));
        } else {
            for (int j = 0; j < nn; ++j) {
                std::vector<uint32_t> e(nn, 0);
                e[j] = 1;
                candidates_basis.push_back(e);
            }
        }
        double count = 1;
        for (int i = 0; i < free_dim; ++i) count *= p;
        if (count > double(budget_ - steps_)) {
            ok_ = false;
            return;
        }

        std::vector<uint32_t> coeff(free_dim, 0);
        for (;;) {
            if (!charge()) return;
            std::vector<uint32_t> v =
                scaled_sum(candidates_basis, coeff, nn, p);
            for (int z = 0; z < nn; ++z) v[z] = (v[z] + particular[z]) % p;
            chosen_[t] = unvec_rowmajor(v, n_, n_, p);
            // quadratic self-constraint when it only references <= t
            bool self_ok = true;
            const auto& cs = r_.constants[t][t];
            bool self_applicable = true;
            for (int k = t + 1; k < r_.dim; ++k)
                if (cs[k]) self_applicable = false;
            if (self_applicable) {
                Matrix expect(n_, n_, p);
                for (int k = 0; k <= t; ++k)
                    if (cs[k]) expect = expect + chosen_[k].scaled(cs[k]);
                self_ok = chosen_[t] * chosen_[t] == expect;
            }
            if (self_ok) dfs(t + 1);
            if (!ok_) return;
            int pos = 0;
            while (pos < free_dim && ++coeff[pos] == p) coeff[pos++] = 0;
            if (pos == free_dim) break;
        }
    }
};

}  // namespace

EnumerationResult enumerate_modules(const std::shared_ptr<const FqAlgebra>& r, int max_dim,
                                    long budget) {
    EnumerationResult out;
    LeftModule reg = regular_module(r);
    std::vector<LeftModule> raw;
    raw.push_back(zero_module(r));
    for (int n = 1; n <= max_dim; ++n) {
        ModuleEnumerator en(*r, n, budget);
        if (!en.run(raw, r)) out.complete = false;
    }
    // dedup: cheap Hom-dimension profile first, then witness search
    struct Entry {
        LeftModule m;
        std::tuple<int, int, int, int> profile;
    };
    std::vector<Entry> kept;
    for (auto& m : raw) {
        std::tuple<int, int, int, int> prof{m.dim, hom_dim(m, m), hom_dim(m, reg),
                                            hom_dim(reg, m)};
        bool dup = false;
        for (auto& e : kept) {
            if (e.profile != prof) continue;
            auto iso = are_isomorphic(e.m, m);
            if (iso.status == IsoStatus::Isomorphic) {
                dup = true;
                break;
            }
            if (iso.status == IsoStatus::Undecided) out.complete = false;
        }
        if (!dup) kept.push_back({std::move(m), prof});
    }
    for (auto& e : kept) out.modules.push_back(std::move(e.m));
    std::stable_sort(out.modules.begin(), out.modules.end(),
                     [](const LeftModule& a, const LeftModule& b) { return a.dim < b.dim; });
    for (size_t i = 0; i < out.modules.size(); ++i)
        if (out.modules[i].name.empty()) out.modules[i].name = "M" + std::to_string(i);
    return out;
}

std::shared_ptr<const FqAlgebra> field_algebra(uint32_t p) {
    auto r = std::make_shared<FqAlgebra>();
    r->p = p;
    r->dim = 1;
    r->constants = {{{1}}};
    r->unit = {1};
    r->name = "F" + std::to_string(p);
    return r;
}

std::shared_ptr<const FqAlgebra> dual_numbers(uint32_t p) {
    auto r = std::make_shared<FqAlgebra>();
    r->p = p;
    r->dim = 2;
    // basis {1, x}, x^2 = 0
    r->constants = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    r->unit = {1, 0};
    r->name = "F" + std::to_string(p) + "[x]/(x^2)";
    return r;
}

std::shared_ptr<const FqAlgebra> upper_triangular_2x2(uint32_t p) {
    auto r = std::make_shared<FqAlgebra>();
    r->p = p;
    r->dim = 3;
    // basis e11, e22, e12
    auto z = std::vector<uint32_t>{0, 0, 0};
    auto e11 = std::vector<uint32_t>{1, 0, 0};
    auto e22 = std::vector<uint32_t>{0, 1, 0};
    auto e12 = std::vector<uint32_t>{0, 0, 1};
    r->constants = {
        {e11, z, e12},  // e11*e11, e11*e22, e11*e12
        {z, e22, z},    // e22*...
        {z, e12, z},    // e12*e11=0, e12*e22=e12, e12*e12=0
    };
    r->unit = {1, 1, 0};
    r->name = "UT2(F" + std::to_string(p) + ")";
    return r;
}

LeftModule regular_module(const std::shared_ptr<const FqAlgebra>& r) {
    LeftModule m;
    m.algebra = r;
    m.dim = r->dim;
    for (int i = 0; i < r->dim; ++i) m.action.push_back(r->left_mult_basis(i));
    m.name = "R";
    return m;
}

LeftModule coregular_module(const std::shared_ptr<const FqAlgebra>& r) {
    LeftModule m;
    m.algebra = r;
    m.dim = r->dim;
    // (b_i . phi)(x) = phi(x * b_i): transpose of right multiplication
    for (int i = 0; i < r->dim; ++i) m.action.push_back(r->right_mult_basis(i).transpose());
    m.name = "D(R)";
    return m;
}

}  // namespace adjforge::algmod
