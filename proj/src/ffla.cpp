#include "adjforge/ffla.hpp"

namespace adjforge::ffla {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(uint32_t modulus) : p(modulus) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
    // Fermat: a^(p-2) mod p
    uint64_t base = a, acc = 1;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return uint32_t(acc);
}

Matrix::Matrix(int rows, int cols, uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(size_t(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    if (!is_prime(p)) throw std::invalid_argument("Matrix: modulus is not prime");
}

Matrix Matrix::identity(int n, uint32_t p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<uint32_t>>& rows, uint32_t p) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Matrix m(r, c, p);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j] % p;
    }
    return m;
}

Matrix Matrix::column(const std::vector<uint32_t>& v, uint32_t p) {
    Matrix m(int(v.size()), 1, p);
    for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = v[i] % p;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
}

static void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.p() != b.p()) throw std::invalid_argument("matrix ops: field mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add: shape mismatch");
    Matrix r(rows_, cols_, p_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % p_;
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sub: shape mismatch");
    Matrix r(rows_, cols_, p_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + p_ - o.data_[i]) % p_;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(*this, o);
    if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
    Matrix r(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint64_t a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) = uint32_t((r.at(i, j) + a * o.at(k, j)) % p_);
        }
    return r;
}

Matrix Matrix::scaled(uint32_t c) const {
    Matrix r(rows_, cols_, p_);
    c %= p_;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = uint32_t(uint64_t(data_[i]) * c % p_);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<uint32_t> Matrix::col_vector(int j) const {
    std::vector<uint32_t> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<uint32_t> Matrix::apply(const std::vector<uint32_t>& x) const {
    if (int(x.size()) != cols_) throw std::invalid_argument("apply: shape mismatch");
    std::vector<uint32_t> y(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (int j = 0; j < cols_; ++j) acc += uint64_t(at(i, j)) * x[j];
        y[i] = uint32_t(acc % p_);
    }
    return y;
}

bool Matrix::is_zero() const {
    for (uint32_t v : data_)
        if (v) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, p_);
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, 0, {}};
    Matrix& a = res.reduced;
    const uint32_t p = m.p();
    int lead = 0;
    for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < a.rows(); ++i)
            if (a.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
        uint32_t inv = inv_mod(a.at(lead, col), p);
        for (int j = 0; j < a.cols(); ++j)
            a.at(lead, j) = uint32_t(uint64_t(a.at(lead, j)) * inv % p);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == lead || !a.at(i, col)) continue;
            uint64_t f = a.at(i, col);
            for (int j = 0; j < a.cols(); ++j)
                a.at(i, j) = uint32_t((a.at(i, j) + (p - 1) * f % p * a.at(lead, j)) % p);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = int(res.pivot_cols.size());
    return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

std::optional<std::vector<uint32_t>> solve(const Matrix& m, const std::vector<uint32_t>& b) {
    if (int(b.size()) != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1, m.p());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i] % m.p();
    }
    RrefResult r = rref(aug);
    for (int c : r.pivot_cols)
        if (c == m.cols()) return std::nullopt;  // inconsistent
    std::vector<uint32_t> x(m.cols(), 0);
    for (int i = 0; i < int(r.pivot_cols.size()); ++i)
        x[r.pivot_cols[i]] = r.reduced.at(i, m.cols());
    return x;
}

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const uint32_t p = m.p();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix k(m.cols(), int(free_cols.size()), p);
    for (int idx = 0; idx < int(free_cols.size()); ++idx) {
        int fc = free_cols[idx];
        k.at(fc, idx) = 1;
        for (int i = 0; i < int(r.pivot_cols.size()); ++i) {
            uint32_t v = r.reduced.at(i, fc);
            if (v) k.at(r.pivot_cols[i], idx) = p - v;
        }
    }
    return k;
}

Matrix image_basis(const Matrix& m) {
    RrefResult r = rref(m);
    Matrix img(m.rows(), r.rank, m.p());
    for (int i = 0; i < r.rank; ++i)
        for (int row = 0; row < m.rows(); ++row) img.at(row, i) = m.at(row, r.pivot_cols[i]);
    return img;
}

QuotientMaps quotient_basis(int n, const Matrix& w) {
    if (w.rows() != n) throw std::invalid_argument("quotient_basis: shape mismatch");
    const uint32_t p = w.p();
    RrefResult r = rref(w.transpose());  // rows of reduced = basis of span(W)
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<int> complement;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) complement.push_back(j);
    int q = int(complement.size());
    // Basis of F^n: the r span rows then e_c for complement coordinates c.
    Matrix basis(n, n, p);
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < n; ++j) basis.at(j, i) = r.reduced.at(i, j);
    for (int i = 0; i < q; ++i) basis.at(complement[i], r.rank + i) = 1;
    auto inv = inverse(basis);
    if (!inv) throw std::logic_error("quotient_basis: internal basis not invertible");
    QuotientMaps out;
    out.projection = Matrix(q, n, p);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < n; ++j) out.projection.at(i, j) = inv->at(r.rank + i, j);
    out.section = Matrix(n, q, p);
    for (int i = 0; i < q; ++i) out.section.at(complement[i], i) = 1;
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            uint64_t v = a.at(i, j);
            if (!v) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) =
                        uint32_t(v * b.at(k, l) % a.p());
        }
    return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), a.p());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }
bool is_surjective(const Matrix& m) { return rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    int n = m.rows();
    Matrix aug = hstack(m, Matrix::identity(n, m.p()));
    RrefResult r = rref(aug);
    for (int i = 0; i < n; ++i)
        if (i >= int(r.pivot_cols.size()) || r.pivot_cols[i] != i) return std::nullopt;
    Matrix inv(n, n, m.p());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

}  // namespace adjforge::ffla
