#pragma once

// Exact linear algebra over prime fields F_p. Dense matrices, deterministic
// pivoting (first nonzero), value semantics throughout.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace adjforge::ffla {

struct PrimeField {
    uint32_t p;
    explicit PrimeField(uint32_t modulus);
};

bool is_prime(uint32_t n);

class Matrix {
public:
    Matrix() : rows_(0), cols_(0), p_(2) {}
    Matrix(int rows, int cols, uint32_t p);

    static Matrix identity(int n, uint32_t p);
    static Matrix from_rows(const std::vector<std::vector<uint32_t>>& rows, uint32_t p);
    static Matrix column(const std::vector<uint32_t>& v, uint32_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t p() const { return p_; }

    uint32_t& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    uint32_t at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }
    void set(int i, int j, uint32_t v) { at(i, j) = v % p_; }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(uint32_t c) const;
    Matrix transpose() const;

    std::vector<uint32_t> col_vector(int j) const;
    std::vector<uint32_t> apply(const std::vector<uint32_t>& x) const;

    bool is_zero() const;
    bool is_identity() const;

    const std::vector<uint32_t>& data() const { return data_; }

private:
    int rows_, cols_;
    uint32_t p_;
    std::vector<uint32_t> data_;
};

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

// One solution of Mx = b, or nullopt when b is outside the image.
std::optional<std::vector<uint32_t>> solve(const Matrix& m, const std::vector<uint32_t>& b);

// Columns form a basis of {x : Mx = 0}; shape cols(M) x nullity.
Matrix kernel_basis(const Matrix& m);
// Columns form a basis of the column space; shape rows(M) x rank.
Matrix image_basis(const Matrix& m);

// All solutions of Mx = b as particular + kernel span (empty when unsolvable).
struct QuotientMaps {
    Matrix projection;  // q x n, kernel = span(W)
    Matrix section;     // n x q, projection * section = identity(q)
};
// Quotient of F_p^n by the column span of w (n x k).
QuotientMaps quotient_basis(int n, const Matrix& w);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

uint32_t inv_mod(uint32_t a, uint32_t p);

}  // namespace adjforge::ffla
