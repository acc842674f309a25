#include "homhopf/matrix.hpp"

#include <numeric>
#include <sstream>

#include "homhopf/errors.hpp"

namespace homhopf {

Vec vec_zero(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector size mismatch");
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector size mismatch");
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec out(v);
    for (auto& x : out) x = c * x;
    return out;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string vec_str(const Vec& v, const std::vector<std::string>* names) {
    std::string out;
    const bool named = names && names->size() == v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string term = named ? (*names)[i] : "e" + std::to_string(i);
        if (!v[i].is_one()) term = v[i].str() + "*" + term;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::zero(const FieldSpec& f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows) {
    std::size_t rc = rows.size();
    std::size_t cc = rc == 0 ? 0 : rows[0].size();
    Matrix m(f, rc, cc);
    for (std::size_t i = 0; i < rc; ++i) {
        if (rows[i].size() != cc) throw InputError("ragged row list");
        for (std::size_t j = 0; j < cc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::col_vector(const Vec& v) {
    if (v.empty()) throw InputError("empty vector");
    Matrix m(v[0].field(), v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

Matrix Matrix::row_vector(const Vec& v) {
    if (v.empty()) throw InputError("empty vector");
    Matrix m(v[0].field(), 1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m.at(0, i) = v[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw InputError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                         std::to_string(o.cols_));
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += aik * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw InputError("matrix apply shape mismatch");
    Vec out = vec_zero(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = at(i, j);
            if (!a.is_zero()) out[i] += a * v[j];
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Vec Matrix::col(std::size_t j) const {
    Vec out = vec_zero(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

Vec Matrix::row(std::size_t i) const {
    Vec out = vec_zero(field_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw InputError("kron over mixed fields");
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& av = a.at(i, k);
            if (av.is_zero()) continue;
            for (std::size_t j = 0; j < b.rows(); ++j)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& bv = b.at(j, l);
                    if (!bv.is_zero())
                        out.at(i * b.rows() + j, k * b.cols() + l) = av * bv;
                }
        }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c) { return kron(kron(a, b), c); }

std::vector<std::size_t> unflatten(std::size_t flat, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> out(dims.size());
    for (std::size_t t = dims.size(); t-- > 0;) {
        out[t] = flat % dims[t];
        flat /= dims[t];
    }
    return out;
}

namespace {

std::size_t permuted_index(std::size_t src, const std::vector<std::size_t>& dims,
                           const std::vector<std::size_t>& perm) {
    auto idx = unflatten(src, dims);
    std::size_t dst = 0;
    for (std::size_t t = 0; t < perm.size(); ++t) dst = dst * dims[perm[t]] + idx[perm[t]];
    return dst;
}

std::size_t dims_total(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
    if (dims.size() != perm.size()) throw InputError("leg permutation arity mismatch");
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    return total;
}

} // namespace

Matrix leg_permutation(const FieldSpec& f, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& perm) {
    std::size_t total = dims_total(dims, perm);
    Matrix out(f, total, total);
    for (std::size_t src = 0; src < total; ++src)
        out.at(permuted_index(src, dims, perm), src) = Scalar::one(f);
    return out;
}

Matrix permuted_rows(const Matrix& m, const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& perm) {
    if (dims_total(dims, perm) != m.rows()) throw InputError("permuted_rows: dimension mismatch");
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t src = 0; src < m.rows(); ++src) {
        std::size_t dst = permuted_index(src, dims, perm);
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(dst, c) = m.at(src, c);
    }
    return out;
}

Matrix permuted_cols(const Matrix& m, const std::vector<std::size_t>& dims,
                     const std::vector<std::size_t>& perm) {
    if (dims_total(dims, perm) != m.cols()) throw InputError("permuted_cols: dimension mismatch");
    Matrix out(m.field(), m.rows(), m.cols());
    // column src of the product reads column dst of m
    for (std::size_t src = 0; src < m.cols(); ++src) {
        std::size_t dst = permuted_index(src, dims, perm);
        for (std::size_t r = 0; r < m.rows(); ++r) out.at(r, src) = m.at(r, dst);
    }
    return out;
}

} // namespace homhopf
