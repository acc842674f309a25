#ifndef HOMHOPF_LINALG_HPP
#define HOMHOPF_LINALG_HPP

#include <optional>

#include "homhopf/matrix.hpp"

namespace homhopf {

// Exact description of { x : Ax = b }: a particular solution (absent iff the
// system is inconsistent) plus a basis of the homogeneous solution space.
struct AffineSolutionSet {
    std::optional<Vec> particular;
    std::vector<Vec> nullspace;
    bool consistent() const { return particular.has_value(); }
};

// Gauss-Jordan with first-nonzero pivoting; output is canonical (free
// variables zero in the particular solution, one basis vector per free
// column). Byte-for-byte reproducible.
AffineSolutionSet solve_affine_system(const Matrix& A, const Vec& b);

std::vector<Vec> kernel_basis(const Matrix& A);
std::size_t rank(const Matrix& A);
Matrix invert_matrix(const Matrix& A); // throws NotInvertible

} // namespace homhopf

#endif
