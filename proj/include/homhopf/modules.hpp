#ifndef HOMHOPF_MODULES_HPP
#define HOMHOPF_MODULES_HPP

#include "homhopf/algebra.hpp"

namespace homhopf {

// Right (A,beta)-Hom-module: carrier with automorphism mu and action tensor.
struct HomModule {
    std::size_t dim = 0;
    Matrix mu, mu_inv;
    Tensor3 action; // action(m,i,k): e_m . e_i = sum_k action(m,i,k) e_k

    Matrix action_map() const { return action.as_map_in2(); } // M(x)A -> M
};

// Right (H,alpha)-Hom-comodule.
struct HomComodule {
    std::size_t dim = 0;
    Matrix mu, mu_inv;
    Tensor3 coaction; // coaction(m,n,i): rho(e_m) = sum coaction(m,n,i) e_n(x)e_i

    Matrix coaction_map() const { return coaction.as_map_out2(); } // M -> M(x)H
};

// Hom-algebra carrying a multiplicative, unital coaction of (H,alpha); the
// comodule structure map is the algebra's own beta.
struct ComoduleAlgebra {
    HomAlgebra alg;   // (A, beta); beta stored as alg.alpha
    Tensor3 coaction; // rho_A

    std::size_t dim() const { return alg.dim; }
    const FieldSpec& field() const { return alg.field(); }
    const Matrix& beta() const { return alg.alpha; }
    const Matrix& beta_inv() const { return alg.alpha_inv; }
    Matrix coaction_map() const { return coaction.as_map_out2(); }
    HomComodule comodule_part() const { return {alg.dim, alg.alpha, alg.alpha_inv, coaction}; }
};

// Simultaneous right (A,beta)-Hom-module and right (H,alpha)-Hom-comodule
// with compatible structures.
struct RelativeHopfModule {
    std::size_t dim = 0;
    Matrix mu, mu_inv;
    Tensor3 action;
    Tensor3 coaction;

    Matrix action_map() const { return action.as_map_in2(); }
    Matrix coaction_map() const { return coaction.as_map_out2(); }
    HomModule module_part() const { return {dim, mu, mu_inv, action}; }
    HomComodule comodule_part() const { return {dim, mu, mu_inv, coaction}; }
};

AxiomReport check_hom_module(const HomModule& m, const HomAlgebra& a);
AxiomReport check_hom_comodule(const HomComodule& m, const HomCoalgebra& h);
AxiomReport check_comodule_algebra(const ComoduleAlgebra& a, const HomHopfAlgebra& h,
                                   Convention convention = Convention::categorical);
AxiomReport check_relative_hopf_module(const RelativeHopfModule& m, const ComoduleAlgebra& a,
                                       const HomHopfAlgebra& h);

enum class MorphismKind { module, comodule, relative };

// Checks f : source -> target for structure-map intertwining plus action
// and/or coaction preservation depending on the kind.
AxiomReport is_morphism(const Matrix& f, const RelativeHopfModule& source,
                        const RelativeHopfModule& target, MorphismKind kind,
                        const ComoduleAlgebra& a, const HomHopfAlgebra& h);
AxiomReport is_comodule_morphism(const Matrix& f, const HomComodule& source,
                                 const HomComodule& target, const HomHopfAlgebra& h);

// A acting on itself by multiplication and coacting by rho_A; mu = beta.
RelativeHopfModule regular_relative_module(const ComoduleAlgebra& a);

// Componentwise structures, block-diagonal structure maps.
RelativeHopfModule direct_sum(const RelativeHopfModule& x, const RelativeHopfModule& y);

} // namespace homhopf

#endif
