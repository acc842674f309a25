#include "homhopf/tensor.hpp"

#include "homhopf/errors.hpp"

namespace homhopf {

Tensor3 Tensor3::from_map_in2(const Matrix& m, std::size_t d0, std::size_t d1) {
    if (m.cols() != d0 * d1) throw InputError("tensor reshape: column count mismatch");
    Tensor3 t(m.field(), d0, d1, m.rows());
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = 0; j < d1; ++j)
            for (std::size_t k = 0; k < m.rows(); ++k) t.at(i, j, k) = m.at(k, i * d1 + j);
    return t;
}

Tensor3 Tensor3::from_map_out2(const Matrix& m, std::size_t d1, std::size_t d2) {
    if (m.rows() != d1 * d2) throw InputError("tensor reshape: row count mismatch");
    Tensor3 t(m.field(), m.cols(), d1, d2);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < d1; ++j)
            for (std::size_t k = 0; k < d2; ++k) t.at(i, j, k) = m.at(j * d2 + k, i);
    return t;
}

} // namespace homhopf
