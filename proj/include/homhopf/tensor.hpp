#ifndef HOMHOPF_TENSOR_HPP
#define HOMHOPF_TENSOR_HPP

#include "homhopf/matrix.hpp"

namespace homhopf {

// Order-3 structure-constant tensor. The meaning of the legs is fixed by the
// owner:
//   multiplication  m(i,j,k):  e_i e_j   = sum_k m(i,j,k) e_k
//   comultiplication d(k,i,j): Delta(e_k) = sum   d(k,i,j) e_i (x) e_j
//   action   a(m,i,k): e_m . e_i = sum_k a(m,i,k) e_k
//   coaction r(m,n,i): rho(e_m)  = sum   r(m,n,i) e_n (x) e_i
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(const FieldSpec& f, std::size_t d0, std::size_t d1, std::size_t d2)
        : field_(f), d0_(d0), d1_(d1), d2_(d2), a_(d0 * d1 * d2, Scalar::zero(f)) {}

    std::size_t dim0() const { return d0_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return a_[(i * d1_ + j) * d2_ + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * d1_ + j) * d2_ + k];
    }

    bool operator==(const Tensor3& o) const {
        if (d0_ != o.d0_ || d1_ != o.d1_ || d2_ != o.d2_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return false;
        return true;
    }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    // A two-in-one-out tensor (mult, action) as a matrix V0 (x) V1 -> V2.
    Matrix as_map_in2() const {
        Matrix m(field_, d2_, d0_ * d1_);
        for (std::size_t i = 0; i < d0_; ++i)
            for (std::size_t j = 0; j < d1_; ++j)
                for (std::size_t k = 0; k < d2_; ++k) m.at(k, i * d1_ + j) = at(i, j, k);
        return m;
    }

    // A one-in-two-out tensor (comult, coaction) as a matrix V0 -> V1 (x) V2.
    Matrix as_map_out2() const {
        Matrix m(field_, d1_ * d2_, d0_);
        for (std::size_t i = 0; i < d0_; ++i)
            for (std::size_t j = 0; j < d1_; ++j)
                for (std::size_t k = 0; k < d2_; ++k) m.at(j * d2_ + k, i) = at(i, j, k);
        return m;
    }

    static Tensor3 from_map_in2(const Matrix& m, std::size_t d0, std::size_t d1);
    static Tensor3 from_map_out2(const Matrix& m, std::size_t d1, std::size_t d2);

private:
    FieldSpec field_ = FieldSpec::rationals();
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Scalar> a_;
};

} // namespace homhopf

#endif
