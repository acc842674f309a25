#ifndef HOMHOPF_MASCHKE_HPP
#define HOMHOPF_MASCHKE_HPP

#include <optional>

#include "homhopf/separability.hpp"

namespace homhopf {

// 0 -> M -f-> N -g-> P -> 0 of relative Hopf modules, together with an
// optional A-linear splitting on either side.
struct ShortExactSequence {
    RelativeHopfModule m, n, p;
    Matrix f; // M -> N, injective
    Matrix g; // N -> P, surjective, Im f = Ker g
    std::optional<Matrix> a_section;    // P -> N, A-linear, g o s = id
    std::optional<Matrix> a_retraction; // N -> M, A-linear, r o f = id
};

AxiomReport check_short_exact(const ShortExactSequence& seq, const ComoduleAlgebra& a,
                              const HomHopfAlgebra& h);

// The averaging operator: h_phi = lambda_M o (h (x) id) o rho_N for a
// structure-map-intertwining h : N -> M. Always colinear; A-linear when h is
// A-linear and Im(phi) is central; fixes relative-Hopf-module morphisms.
Matrix phi_average(const Matrix& hmap, const RelativeHopfModule& source,
                   const RelativeHopfModule& target, const TotalIntegral& phi,
                   const ComoduleAlgebra& a, const HomHopfAlgebra& hopf);

// Averages the supplied A-linear splitting(s) into relative-Hopf-module
// splittings, deriving the complementary one when only one side is given.
// Every returned map is re-certified; g o section = id and retraction o f =
// id are asserted exactly.
struct MaschkeSplitting {
    Matrix section;    // P -> N
    Matrix retraction; // N -> M
};
MaschkeSplitting maschke_split(const ShortExactSequence& seq, const TotalIntegral& phi,
                               const ComoduleAlgebra& a, const HomHopfAlgebra& hopf);

} // namespace homhopf

#endif
