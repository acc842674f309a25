#include "homhopf/modules.hpp"

#include "homhopf/errors.hpp"
#include "homhopf/linalg.hpp"

namespace homhopf {

namespace {

void require_dims(bool ok, const char* what) {
    if (!ok) throw InputError(std::string("dimension mismatch: ") + what);
}

bool try_invert(const Matrix& m, Matrix& out, AxiomReport& report, const std::string& axiom) {
    try {
        out = invert_matrix(m);
        return true;
    } catch (const NotInvertible&) {
        report.add(axiom, {}, "det = 0", "invertible");
        return false;
    }
}

} // namespace

AxiomReport check_hom_module(const HomModule& m, const HomAlgebra& a) {
    require_dims(m.action.dim0() == m.dim && m.action.dim1() == a.dim &&
                     m.action.dim2() == m.dim,
                 "action tensor vs carrier/algebra");
    require_dims(m.mu.rows() == m.dim && m.mu.cols() == m.dim, "mu vs carrier");

    AxiomReport report;
    Matrix mu_inv;
    if (!try_invert(m.mu, mu_inv, report, "mu-invertible")) return report;

    const FieldSpec f = a.field();
    const Matrix act = m.action_map();
    const Matrix mult = a.mult_map();
    const Matrix id_m = Matrix::identity(f, m.dim);
    const Matrix u = Matrix::col_vector(a.unit);

    // (m.a).beta(b) = mu(m).(ab)
    compare_maps(report, "hom-action-associativity", act * kron(act, a.alpha),
                 act * kron(m.mu, mult), {m.dim, a.dim, a.dim});
    // m.1 = mu(m)
    compare_maps(report, "unit-action", act * kron(id_m, u), m.mu, {m.dim});
    // mu(m.a) = mu(m).beta(a)
    compare_maps(report, "mu-action-compatible", m.mu * act, act * kron(m.mu, a.alpha),
                 {m.dim, a.dim});
    return report;
}

AxiomReport check_hom_comodule(const HomComodule& m, const HomCoalgebra& h) {
    require_dims(m.coaction.dim0() == m.dim && m.coaction.dim1() == m.dim &&
                     m.coaction.dim2() == h.dim,
                 "coaction tensor vs carrier/coalgebra");
    require_dims(m.mu.rows() == m.dim && m.mu.cols() == m.dim, "mu vs carrier");

    AxiomReport report;
    Matrix mu_inv;
    if (!try_invert(m.mu, mu_inv, report, "mu-invertible")) return report;
    Matrix gamma_inv;
    if (!try_invert(h.gamma, gamma_inv, report, "gamma-invertible")) return report;

    const FieldSpec f = h.field();
    const Matrix rho = m.coaction_map();
    const Matrix d = h.comult_map();
    const Matrix id_m = Matrix::identity(f, m.dim);
    const Matrix eps = Matrix::row_vector(h.counit);

    // m00 (x) m01 (x) gamma^{-1}(m1) = mu^{-1}(m0) (x) Delta(m1)
    compare_maps(report, "coaction-coassociativity", kron(rho, gamma_inv) * rho,
                 kron(mu_inv, d) * rho, {m.dim});
    // m0 eps(m1) = mu^{-1}(m)
    compare_maps(report, "coaction-counit", kron(id_m, eps) * rho, mu_inv, {m.dim});
    // rho(mu(m)) = mu(m0) (x) gamma(m1)
    compare_maps(report, "coaction-mu-compatible", rho * m.mu, kron(m.mu, h.gamma) * rho,
                 {m.dim});
    return report;
}

AxiomReport check_comodule_algebra(const ComoduleAlgebra& a, const HomHopfAlgebra& h,
                                   Convention convention) {
    AxiomReport report;
    report.merge(check_hom_algebra(a.alg));
    report.merge(check_hom_coalgebra(h.coalgebra(), convention));
    report.merge(check_hom_comodule(a.comodule_part(), h.coalgebra()));

    const FieldSpec f = a.field();
    const Matrix rho = a.coaction_map();
    const Matrix mult = a.alg.mult_map();
    const Matrix mult_h = h.mult.as_map_in2();
    const Matrix u_a = Matrix::col_vector(a.alg.unit);
    const Matrix u_h = Matrix::col_vector(h.unit);

    // rho(ab) = a0 b0 (x) a1 b1
    compare_maps(report, "coaction-multiplicative", rho * mult,
                 kron(mult, mult_h) * permuted_rows(kron(rho, rho),
                                                    {a.dim(), h.dim, a.dim(), h.dim},
                                                    {0, 2, 1, 3}),
                 {a.dim(), a.dim()}, &a.alg.basis);
    // rho(1) = 1 (x) 1
    compare_maps(report, "coaction-unital", rho * u_a, kron(u_a, u_h), {1});
    return report;
}

AxiomReport check_relative_hopf_module(const RelativeHopfModule& m, const ComoduleAlgebra& a,
                                       const HomHopfAlgebra& h) {
    AxiomReport report;
    report.merge(check_hom_module(m.module_part(), a.alg));
    report.merge(check_hom_comodule(m.comodule_part(), h.coalgebra()));

    const Matrix rho_m = m.coaction_map();
    const Matrix rho_a = a.coaction_map();
    const Matrix act = m.action_map();
    const Matrix mult_h = h.mult.as_map_in2();

    // rho(m.a) = m0.a0 (x) m1 a1
    compare_maps(report, "action-coaction-compatibility", rho_m * act,
                 kron(act, mult_h) * permuted_rows(kron(rho_m, rho_a),
                                                   {m.dim, h.dim, a.dim(), h.dim},
                                                   {0, 2, 1, 3}),
                 {m.dim, a.dim()});
    return report;
}

AxiomReport is_morphism(const Matrix& f, const RelativeHopfModule& source,
                        const RelativeHopfModule& target, MorphismKind kind,
                        const ComoduleAlgebra& a, const HomHopfAlgebra& h) {
    require_dims(f.cols() == source.dim && f.rows() == target.dim, "map vs carriers");

    AxiomReport report;
    compare_maps(report, "structure-intertwine", f * source.mu, target.mu * f, {source.dim});
    if (kind == MorphismKind::module || kind == MorphismKind::relative) {
        const Matrix id_a = Matrix::identity(a.field(), a.dim());
        compare_maps(report, "action-preserved", f * source.action_map(),
                     target.action_map() * kron(f, id_a), {source.dim, a.dim()});
    }
    if (kind == MorphismKind::comodule || kind == MorphismKind::relative) {
        const Matrix id_h = Matrix::identity(h.field(), h.dim);
        compare_maps(report, "coaction-preserved", target.coaction_map() * f,
                     kron(f, id_h) * source.coaction_map(), {source.dim});
    }
    return report;
}

AxiomReport is_comodule_morphism(const Matrix& f, const HomComodule& source,
                                 const HomComodule& target, const HomHopfAlgebra& h) {
    require_dims(f.cols() == source.dim && f.rows() == target.dim, "map vs carriers");
    AxiomReport report;
    compare_maps(report, "structure-intertwine", f * source.mu, target.mu * f, {source.dim});
    const Matrix id_h = Matrix::identity(h.field(), h.dim);
    compare_maps(report, "coaction-preserved", target.coaction_map() * f,
                 kron(f, id_h) * source.coaction_map(), {source.dim});
    return report;
}

RelativeHopfModule regular_relative_module(const ComoduleAlgebra& a) {
    return RelativeHopfModule{a.dim(), a.beta(), a.beta_inv(), a.alg.mult, a.coaction};
}

RelativeHopfModule direct_sum(const RelativeHopfModule& x, const RelativeHopfModule& y) {
    if (x.action.dim1() != y.action.dim1() || x.coaction.dim2() != y.coaction.dim2())
        throw InputError("direct sum of modules over different algebras");
    const FieldSpec f = x.mu.field();
    const std::size_t n = x.dim + y.dim;
    const std::size_t da = x.action.dim1();
    const std::size_t dh = x.coaction.dim2();

    RelativeHopfModule s;
    s.dim = n;
    s.mu = Matrix::zero(f, n, n);
    s.mu_inv = Matrix::zero(f, n, n);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j) {
            s.mu.at(i, j) = x.mu.at(i, j);
            s.mu_inv.at(i, j) = x.mu_inv.at(i, j);
        }
    for (std::size_t i = 0; i < y.dim; ++i)
        for (std::size_t j = 0; j < y.dim; ++j) {
            s.mu.at(x.dim + i, x.dim + j) = y.mu.at(i, j);
            s.mu_inv.at(x.dim + i, x.dim + j) = y.mu_inv.at(i, j);
        }
    s.action = Tensor3(f, n, da, n);
    s.coaction = Tensor3(f, n, n, dh);
    for (std::size_t m = 0; m < x.dim; ++m) {
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t k = 0; k < x.dim; ++k) s.action.at(m, i, k) = x.action.at(m, i, k);
        for (std::size_t nn = 0; nn < x.dim; ++nn)
            for (std::size_t i = 0; i < dh; ++i) s.coaction.at(m, nn, i) = x.coaction.at(m, nn, i);
    }
    for (std::size_t m = 0; m < y.dim; ++m) {
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t k = 0; k < y.dim; ++k)
                s.action.at(x.dim + m, i, x.dim + k) = y.action.at(m, i, k);
        for (std::size_t nn = 0; nn < y.dim; ++nn)
            for (std::size_t i = 0; i < dh; ++i)
                s.coaction.at(x.dim + m, x.dim + nn, i) = y.coaction.at(m, nn, i);
    }
    return s;
}

} // namespace homhopf
