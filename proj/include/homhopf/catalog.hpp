#ifndef HOMHOPF_CATALOG_HPP
#define HOMHOPF_CATALOG_HPP

#include <optional>

#include "homhopf/integrals.hpp"
#include "homhopf/modules.hpp"

namespace homhopf {

// An ordinary Hopf algebra (structure map = identity), the raw material for
// twisting. Construction re-checks every axiom.
struct ClassicalHopfSpec {
    std::string name;
    HomHopfAlgebra data;
};

// Compose multiplication with a Hopf automorphism (and comultiplication with
// its inverse) to produce a monoidal Hom-Hopf algebra with that automorphism
// as structure map. The automorphism is verified first and the result is
// re-checked before being returned.
HomHopfAlgebra yau_twist(const ClassicalHopfSpec& h, const Matrix& aut);

// A certified ready-to-use instance: H, its regular comodule algebra
// (coaction = comultiplication), the regular relative module, and the
// canonical total integral phi = id.
struct Bundle {
    std::string name;
    HomHopfAlgebra hopf;
    ComoduleAlgebra algebra;
    RelativeHopfModule regular;
    TotalIntegral integral;
};

Bundle builtin(const std::string& name, const FieldSpec& field = FieldSpec::rationals());
std::vector<std::string> builtin_names();

// Building blocks, exposed for tests and the oracle suites.
ClassicalHopfSpec cyclic_group_algebra(std::size_t n, const FieldSpec& f);
ClassicalHopfSpec sweedler_h4(const FieldSpec& f); // requires characteristic != 2
HomHopfAlgebra trivial_hopf(const FieldSpec& f);   // one-dimensional k

ComoduleAlgebra regular_comodule_algebra(const HomHopfAlgebra& h);
// rho(a) = beta^{-1}(a) (x) 1_H on the carrier of H.
ComoduleAlgebra trivial_comodule_algebra(const HomHopfAlgebra& h);

} // namespace homhopf

#endif
