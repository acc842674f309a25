#ifndef HOMHOPF_MATRIX_HPP
#define HOMHOPF_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "homhopf/field.hpp"

namespace homhopf {

using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& a, const Vec& b);
// "0", "e0", "2*e1 - 1/2*e3", or with names when provided
std::string vec_str(const Vec& v, const std::vector<std::string>* names = nullptr);

// Dense row-major exact matrix. Columns index the source basis, rows the
// target basis, so `apply` is the usual matrix-times-coordinate-vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix zero(const FieldSpec& f, std::size_t rows, std::size_t cols);
    static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows);
    static Matrix col_vector(const Vec& v);
    static Matrix row_vector(const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Vec col(std::size_t j) const;
    Vec row(std::size_t i) const;
    bool is_zero() const;

    std::string str() const;

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

// Tensor product of linear maps with row-major leg flattening: the pair
// (i, j) with j running over the second factor maps to index i*dim2 + j.
// Every multi-leg index in this library uses the same flattening.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c);

// Permutation matrix reordering tensor legs: output leg t is input leg
// perm[t]. dims are the input leg dimensions.
Matrix leg_permutation(const FieldSpec& f, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& perm);

// leg_permutation(dims, perm) * m and m * leg_permutation(dims, perm)
// without materializing the permutation matrix.
Matrix permuted_rows(const Matrix& m, const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& perm);
Matrix permuted_cols(const Matrix& m, const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& perm);

// Decode a flat row-major multi-index into per-leg indices.
std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<std::size_t>& dims);

} // namespace homhopf

#endif
