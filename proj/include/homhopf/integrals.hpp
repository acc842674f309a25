#ifndef HOMHOPF_INTEGRALS_HPP
#define HOMHOPF_INTEGRALS_HPP

#include "homhopf/linalg.hpp"
#include "homhopf/modules.hpp"

namespace homhopf {

// A total integral: phi : H -> A with
//   rho_A o phi = (phi (x) id) o Delta_H,   phi o alpha = beta o phi,
//   phi(1_H) = 1_A.
struct TotalIntegral {
    Matrix phi;
    bool certified = false;

    // Runs the checker; throws HypothesesNotMet if it fails.
    static TotalIntegral make(const Matrix& phi, const ComoduleAlgebra& a,
                              const HomHopfAlgebra& h);
};

AxiomReport check_total_integral(const Matrix& phi, const ComoduleAlgebra& a,
                                 const HomHopfAlgebra& h);

// The three defining conditions stacked as one exact affine system over the
// dim(A)*dim(H) entries of phi. Unknown ordering: phi(a,h) at index
// a*dim(H)+h. Absent particular solution means no total integral exists.
AffineSolutionSet solve_total_integral(const ComoduleAlgebra& a, const HomHopfAlgebra& h);

// lambda_M : M (x) H -> M, m (x) h -> mu^{-1}(m0) . phi(S(m1) alpha(h)).
// Retracts the coaction (lambda o rho = id) and is colinear for the induced
// coaction on M (x) H; additionally A-linear when Im(phi) is central.
Matrix lambda_map(const RelativeHopfModule& m, const TotalIntegral& phi,
                  const ComoduleAlgebra& a, const HomHopfAlgebra& h);

// Same formula for an arbitrary matrix in place of phi; used by solvers and
// linearity arguments. No certification is implied.
Matrix lambda_map_raw(const RelativeHopfModule& m, const Matrix& phi, const ComoduleAlgebra& a,
                      const HomHopfAlgebra& h);

// Basis of M0 = { m : rho(m) = mu^{-1}(m) (x) 1_H } plus the inclusion.
struct CoinvariantData {
    std::vector<Vec> basis;
    Matrix inclusion; // dim(M) x |basis|
};

CoinvariantData coinvariants(const HomComodule& x, const HomHopfAlgebra& h);

// tau_M : m -> m0 . phi(S(m1)), the averaging projection onto coinvariants.
Matrix trace_map(const RelativeHopfModule& m, const TotalIntegral& phi,
                 const ComoduleAlgebra& a, const HomHopfAlgebra& h);

// Constructive comodule-injectivity: extends a colinear f : V -> M along a
// subcomodule inclusion V -> W to a colinear E : W -> M with E o incl = f,
// via a structure-map-intertwining linear retraction of the inclusion.
// Throws NoEquivariantRetraction when no such retraction exists.
Matrix extend_comodule_map(const Matrix& f, const Matrix& incl, const HomComodule& v,
                           const HomComodule& w, const RelativeHopfModule& m,
                           const TotalIntegral& phi, const ComoduleAlgebra& a,
                           const HomHopfAlgebra& h);

} // namespace homhopf

#endif
