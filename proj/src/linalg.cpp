#include "homhopf/linalg.hpp"

#include "homhopf/errors.hpp"

namespace homhopf {

namespace {

struct Echelon {
    Matrix m;                       // reduced row echelon form
    std::vector<std::size_t> pivot; // pivot column per pivot row
};

Echelon rref(Matrix m) {
    const FieldSpec f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

} // namespace

AffineSolutionSet solve_affine_system(const Matrix& A, const Vec& b) {
    if (A.rows() != b.size())
        throw InputError("affine system: matrix has " + std::to_string(A.rows()) +
                         " rows but right-hand side has " + std::to_string(b.size()));
    const FieldSpec f = A.field();
    Matrix aug(f, A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));

    AffineSolutionSet out;
    bool inconsistent = false;
    for (std::size_t r = 0; r < e.pivot.size(); ++r)
        if (e.pivot[r] == A.cols()) inconsistent = true;

    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : e.pivot)
        if (c < A.cols()) is_pivot[c] = true;

    for (std::size_t c = 0; c < A.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = vec_zero(f, A.cols());
        v[c] = Scalar::one(f);
        for (std::size_t r = 0; r < e.pivot.size(); ++r)
            if (e.pivot[r] < A.cols()) v[e.pivot[r]] = -e.m.at(r, c);
        out.nullspace.push_back(std::move(v));
    }

    if (!inconsistent) {
        Vec x = vec_zero(f, A.cols());
        for (std::size_t r = 0; r < e.pivot.size(); ++r)
            if (e.pivot[r] < A.cols()) x[e.pivot[r]] = e.m.at(r, A.cols());
        out.particular = std::move(x);
    }
    return out;
}

std::vector<Vec> kernel_basis(const Matrix& A) {
    return solve_affine_system(A, vec_zero(A.field(), A.rows())).nullspace;
}

std::size_t rank(const Matrix& A) { return rref(A).pivot.size(); }

Matrix invert_matrix(const Matrix& A) {
    if (A.rows() != A.cols()) throw InputError("inverse of a non-square matrix");
    const FieldSpec f = A.field();
    const std::size_t n = A.rows();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = Scalar::one(f);
    }
    Echelon e = rref(std::move(aug));
    for (std::size_t i = 0; i < n; ++i)
        if (i >= e.pivot.size() || e.pivot[i] != i)
            throw NotInvertible("singular " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix");
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.m.at(i, n + j);
    return inv;
}

} // namespace homhopf
