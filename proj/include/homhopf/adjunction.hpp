#ifndef HOMHOPF_ADJUNCTION_HPP
#define HOMHOPF_ADJUNCTION_HPP

#include "homhopf/modules.hpp"

namespace homhopf {

// The induced relative Hopf module G(M) = M (x) H. Basis ordering is m-index
// major, h-index minor; every tensor-product carrier in this library follows
// the same convention.
struct InducedModule {
    RelativeHopfModule data;
    std::size_t source_dim = 0;
};

// (m (x) h).a = m.a0 (x) h a1,  rho(m (x) h) = (mu^{-1}(m) (x) h1) (x) alpha(h2),
// structure map mu (x) alpha. Re-verified against the relative-module checker.
InducedModule induce(const HomModule& m, const ComoduleAlgebra& a, const HomHopfAlgebra& h);

// The adjunction unit: the coaction of M read as a map M -> G(F(M)).
Matrix unit_map(const RelativeHopfModule& m);

// The adjunction counit N (x) H -> N, n (x) h -> eps(h) mu(n). The structure
// map factor is what makes this A-linear and the triangles exact.
Matrix counit_map(const HomModule& n, const HomHopfAlgebra& h);

// Both composites G(counit) o unit_{G(N)} and counit_{F(M)} o F(unit_M),
// compared exactly against identities.
AxiomReport check_adjunction_triangles(const RelativeHopfModule& m, const HomModule& n,
                                       const ComoduleAlgebra& a, const HomHopfAlgebra& h);

} // namespace homhopf

#endif
