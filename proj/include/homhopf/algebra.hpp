#ifndef HOMHOPF_ALGEBRA_HPP
#define HOMHOPF_ALGEBRA_HPP

#include <string>
#include <vector>

#include "homhopf/report.hpp"
#include "homhopf/tensor.hpp"

namespace homhopf {

// Which form of Hom-coassociativity to enforce. `categorical` puts the
// inverse structure map on the outer right leg and is the normative default;
// it is the form compatible with the comodule axioms and the only one
// admitting nontrivial twists. `printed` puts the structure map itself there
// and is kept for documentation of the discrepancy.
enum class Convention { categorical, printed };

// Monoidal Hom-algebra (A, m, 1, alpha) by structure constants.
struct HomAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Tensor3 mult;          // mult(i,j,k): e_i e_j = sum_k mult(i,j,k) e_k
    Vec unit;              // coordinates of 1_A
    Matrix alpha, alpha_inv;

    const FieldSpec& field() const { return mult.field(); }
    Vec mul(const Vec& x, const Vec& y) const;
    Matrix mult_map() const { return mult.as_map_in2(); } // A(x)A -> A
};

// Monoidal Hom-coalgebra (C, Delta, eps, gamma).
struct HomCoalgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Tensor3 comult;        // comult(k,i,j): Delta(e_k) = sum comult(k,i,j) e_i(x)e_j
    Vec counit;            // row vector
    Matrix gamma, gamma_inv;

    const FieldSpec& field() const { return comult.field(); }
    Matrix comult_map() const { return comult.as_map_out2(); } // C -> C(x)C
};

// Monoidal Hom-Hopf algebra: algebra and coalgebra on one carrier with the
// same structure automorphism, plus the antipode.
struct HomHopfAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Tensor3 mult;
    Vec unit;
    Tensor3 comult;
    Vec counit;
    Matrix alpha, alpha_inv;
    Matrix antipode;

    const FieldSpec& field() const { return mult.field(); }
    HomAlgebra algebra() const;
    HomCoalgebra coalgebra() const;
    Matrix unit_counit_map() const; // eta o eps as a dim x dim matrix
};

AxiomReport check_hom_algebra(const HomAlgebra& a);
AxiomReport check_hom_coalgebra(const HomCoalgebra& c,
                                Convention convention = Convention::categorical);
AxiomReport check_hom_bialgebra(const HomHopfAlgebra& b,
                                Convention convention = Convention::categorical);
AxiomReport check_hom_hopf(const HomHopfAlgebra& h,
                           Convention convention = Convention::categorical);

// (f * g)(c) = m(f(c_(1)), g(c_(2))), for f, g : C -> A.
Matrix convolution_product(const Matrix& f, const Matrix& g, const HomCoalgebra& from,
                           const HomAlgebra& to);

// Exact inverse of the antipode matrix; throws NotInvertible.
Matrix antipode_inverse(const HomHopfAlgebra& h);

} // namespace homhopf

#endif
