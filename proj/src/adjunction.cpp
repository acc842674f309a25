#include "homhopf/adjunction.hpp"

#include "homhopf/errors.hpp"

namespace homhopf {

InducedModule induce(const HomModule& m, const ComoduleAlgebra& a, const HomHopfAlgebra& h) {
    {
        AxiomReport pre = check_hom_module(m, a.alg);
        if (!pre.pass())
            throw HypothesesNotMet("hom-module", "induce: source module fails its axioms: " + pre.str());
    }
    const FieldSpec f = h.field();
    const std::size_t dm = m.dim, da = a.dim(), dh = h.dim;

    const Matrix act = m.action_map();
    const Matrix mult_h = h.mult.as_map_in2();
    const Matrix rho_a = a.coaction_map();
    const Matrix d_h = h.comult.as_map_out2();
    const Matrix id_mh = Matrix::identity(f, dm * dh);
    const Matrix id_h = Matrix::identity(f, dh);

    // (m (x) h).a = m.a0 (x) h a1
    const Matrix act_g =
        kron(act, mult_h) * permuted_rows(kron(id_mh, rho_a), {dm, dh, da, dh}, {0, 2, 1, 3});
    // rho(m (x) h) = (mu^{-1}(m) (x) h1) (x) alpha(h2)
    const Matrix rho_g = kron(m.mu_inv, kron(id_h, h.alpha) * d_h);

    RelativeHopfModule g;
    g.dim = dm * dh;
    g.mu = kron(m.mu, h.alpha);
    g.mu_inv = kron(m.mu_inv, h.alpha_inv);
    g.action = Tensor3::from_map_in2(act_g, dm * dh, da);
    g.coaction = Tensor3::from_map_out2(rho_g, dm * dh, dh);

    AxiomReport post = check_relative_hopf_module(g, a, h);
    if (!post.pass())
        throw InternalInconsistency("induced module fails the relative-module axioms: " + post.str());
    return InducedModule{std::move(g), dm};
}

Matrix unit_map(const RelativeHopfModule& m) { return m.coaction_map(); }

Matrix counit_map(const HomModule& n, const HomHopfAlgebra& h) {
    return kron(n.mu, Matrix::row_vector(h.counit));
}

AxiomReport check_adjunction_triangles(const RelativeHopfModule& m, const HomModule& n,
                                       const ComoduleAlgebra& a, const HomHopfAlgebra& h) {
    AxiomReport report;
    const FieldSpec f = h.field();

    InducedModule gn = induce(n, a, h);
    const Matrix id_h = Matrix::identity(f, h.dim);
    compare_maps(report, "triangle-counit", kron(counit_map(n, h), id_h) * unit_map(gn.data),
                 Matrix::identity(f, n.dim * h.dim), {n.dim, h.dim});

    compare_maps(report, "triangle-unit", counit_map(m.module_part(), h) * unit_map(m),
                 Matrix::identity(f, m.dim), {m.dim});
    return report;
}

} // namespace homhopf
