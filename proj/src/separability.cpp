#include "homhopf/separability.hpp"

#include "homhopf/errors.hpp"

namespace homhopf {

namespace {

Vec flatten(const Matrix& m) {
    Vec out = vec_zero(m.field(), m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m.at(i, j);
    return out;
}

void append(Vec& dst, const Vec& src) { dst.insert(dst.end(), src.begin(), src.end()); }

struct Nz3 {
    std::size_t i, j, k;
    Scalar c;
};

std::vector<Nz3> nonzeros(const Tensor3& t) {
    std::vector<Nz3> out;
    for (std::size_t i = 0; i < t.dim0(); ++i)
        for (std::size_t j = 0; j < t.dim1(); ++j)
            for (std::size_t k = 0; k < t.dim2(); ++k)
                if (!t.at(i, j, k).is_zero()) out.push_back({i, j, k, t.at(i, j, k)});
    return out;
}

struct Nz2 {
    std::size_t r, c;
    Scalar v;
};

std::vector<Nz2> nonzeros(const Matrix& m) {
    std::vector<Nz2> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) out.push_back({r, c, m.at(r, c)});
    return out;
}

struct ThetaConditions {
    // Differences (lhs - rhs) of the linear conditions and the value of the
    // affine one, all as matrices, for a given theta.
    Matrix equivariance;  // H(x)H -> A
    Matrix colinearity;   // H(x)H -> A(x)H
    Matrix action_compat; // A(x)H(x)H -> A
    Matrix normalization; // H -> A (affine: must equal unit o counit)
};

// Direct sparse contractions; structure constants are mostly zero and the
// solver probes with single-entry tensors, so everything is driven off the
// nonzero list of theta.
ThetaConditions evaluate_theta(const Tensor3& theta, const ComoduleAlgebra& a,
                               const HomHopfAlgebra& h) {
    const FieldSpec f = h.field();
    const std::size_t da = a.dim(), dh = h.dim;
    const Matrix t = theta.as_map_in2();
    const Matrix beta2 = a.beta() * a.beta();

    const auto tnz = nonzeros(theta);
    const auto dnz = nonzeros(h.comult);
    const auto mhnz = nonzeros(h.mult);
    const auto manz = nonzeros(a.alg.mult);
    const auto rnz = nonzeros(a.coaction);
    const auto alnz = nonzeros(h.alpha);
    const auto ainz = nonzeros(h.alpha_inv);
    const auto bnz = nonzeros(a.beta());
    const auto b2nz = nonzeros(beta2);

    ThetaConditions out;
    out.equivariance = t * kron(h.alpha, h.alpha) - a.beta() * t;
    out.normalization = t * h.comult.as_map_out2();

    // theta(alpha^{-1}(g) (x) h1) (x) alpha(h2)
    //   = beta(theta(g2 (x) alpha^{-1}(h))_[0]) (x) g1 theta(g2 (x) alpha^{-1}(h))_[1]
    Matrix colin(f, da * dh, dh * dh);
    for (const auto& te : tnz) { // theta(gp (x) u) -> a
        const std::size_t gp = te.i, u = te.j, av = te.k;
        for (const auto& ai : ainz) { // alpha^{-1}(g) at gp
            if (ai.r != gp) continue;
            const std::size_t g = ai.c;
            const Scalar c0 = te.c * ai.v;
            for (const auto& de : dnz) { // Delta(h) at (u, v)
                if (de.j != u) continue;
                const std::size_t hh = de.i, v = de.k;
                const Scalar c1 = c0 * de.c;
                for (const auto& al : alnz) { // alpha(v) -> w
                    if (al.c != v) continue;
                    colin.at(av * dh + al.r, g * dh + hh) += c1 * al.v;
                }
            }
        }
    }
    for (const auto& te : tnz) { // theta(g2 (x) hp) -> b
        const std::size_t g2 = te.i, hp = te.j, b = te.k;
        for (const auto& de : dnz) { // Delta(g) with second leg g2
            if (de.k != g2) continue;
            const std::size_t g = de.i, g1 = de.j;
            for (const auto& ai : ainz) { // alpha^{-1}(h) at hp
                if (ai.r != hp) continue;
                const std::size_t hh = ai.c;
                const Scalar c0 = te.c * de.c * ai.v;
                for (const auto& re : rnz) { // rho(b) = c (x) w'
                    if (re.i != b) continue;
                    const std::size_t cc = re.j, wp = re.k;
                    const Scalar c1 = c0 * re.c;
                    for (const auto& be : bnz) { // beta(c)
                        if (be.c != cc) continue;
                        for (const auto& me : mhnz) { // g1 w' -> w
                            if (me.i != g1 || me.j != wp) continue;
                            colin.at(be.r * dh + me.k, g * dh + hh) -= c1 * be.v * me.c;
                        }
                    }
                }
            }
        }
    }
    out.colinearity = std::move(colin);

    // beta^2(a00) theta(alpha^{-1}(g) a01 (x) alpha^{-1}(h) alpha^{-1}(a1))
    //   = theta(g (x) h) a
    Matrix compat(f, da, da * dh * dh);
    for (const auto& te : tnz) { // theta(s (x) r) -> b
        const std::size_t s = te.i, r = te.j, b = te.k;
        for (const auto& m1 : mhnz) { // g' a01 -> s, with g' = alpha^{-1}(g), a01 = v
            if (m1.k != s) continue;
            const std::size_t gp = m1.i, v = m1.j;
            for (const auto& ag : ainz) {
                if (ag.r != gp) continue;
                const std::size_t g = ag.c;
                const Scalar c0 = te.c * m1.c * ag.v;
                for (const auto& m2 : mhnz) { // h' u' -> r
                    if (m2.k != r) continue;
                    const std::size_t hp = m2.i, up = m2.j;
                    for (const auto& ah : ainz) {
                        if (ah.r != hp) continue;
                        const std::size_t hh = ah.c;
                        for (const auto& au : ainz) { // u' = alpha^{-1}(a1 = u)
                            if (au.r != up) continue;
                            const std::size_t u = au.c;
                            const Scalar c1 = c0 * m2.c * ah.v * au.v;
                            for (const auto& r2 : rnz) { // rho(p) = q (x) v
                                if (r2.k != v) continue;
                                const std::size_t p = r2.i, q = r2.j;
                                for (const auto& r1 : rnz) { // rho(i) = p (x) u
                                    if (r1.j != p || r1.k != u) continue;
                                    const std::size_t ii = r1.i;
                                    const Scalar c2 = c1 * r2.c * r1.c;
                                    for (const auto& b2 : b2nz) { // beta^2(q) -> c
                                        if (b2.c != q) continue;
                                        for (const auto& ma : manz) { // c b -> z
                                            if (ma.i != b2.r || ma.j != b) continue;
                                            compat.at(ma.k, (ii * dh + g) * dh + hh) +=
                                                c2 * b2.v * ma.c;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for (const auto& te : tnz) { // theta(g (x) h) -> b, times a = e_i
        for (const auto& ma : manz) {
            if (ma.i != te.k) continue;
            compat.at(ma.k, (ma.j * dh + te.i) * dh + te.j) -= te.c * ma.c;
        }
    }
    out.action_compat = std::move(compat);
    return out;
}

void require_theta_dims(const Tensor3& theta, const ComoduleAlgebra& a,
                        const HomHopfAlgebra& h) {
    if (theta.dim0() != h.dim || theta.dim1() != h.dim || theta.dim2() != a.dim())
        throw InputError("normalized integral candidate must map H (x) H to A");
}

} // namespace

AxiomReport check_normalized_integral(const Tensor3& theta, const ComoduleAlgebra& a,
                                      const HomHopfAlgebra& h) {
    require_theta_dims(theta, a, h);
    const std::size_t da = a.dim(), dh = h.dim;
    ThetaConditions c = evaluate_theta(theta, a, h);

    AxiomReport report;
    const Matrix zero_hh_a = Matrix::zero(h.field(), da, dh * dh);
    const Matrix zero_hh_ah = Matrix::zero(h.field(), da * dh, dh * dh);
    const Matrix zero_ahh_a = Matrix::zero(h.field(), da, da * dh * dh);
    compare_maps(report, "theta-equivariance", c.equivariance, zero_hh_a, {dh, dh}, &a.alg.basis);
    compare_maps(report, "theta-colinearity", c.colinearity, zero_hh_ah, {dh, dh});
    compare_maps(report, "theta-normalization", c.normalization,
                 Matrix::col_vector(a.alg.unit) * Matrix::row_vector(h.counit), {dh},
                 &a.alg.basis);
    compare_maps(report, "theta-action-compatibility", c.action_compat, zero_ahh_a,
                 {da, dh, dh}, &a.alg.basis);
    return report;
}

NormalizedIntegral NormalizedIntegral::make(const Tensor3& theta, const ComoduleAlgebra& a,
                                            const HomHopfAlgebra& h) {
    AxiomReport report = check_normalized_integral(theta, a, h);
    if (!report.pass())
        throw HypothesesNotMet("normalized-integral",
                               "tensor is not a normalized integral: " + report.str());
    return NormalizedIntegral{theta, true};
}

AffineSolutionSet solve_normalized_integral(const ComoduleAlgebra& a, const HomHopfAlgebra& h) {
    const FieldSpec f = h.field();
    const std::size_t da = a.dim(), dh = h.dim;
    const std::size_t unknowns = dh * dh * da;

    auto values = [&](const Tensor3& theta) {
        ThetaConditions c = evaluate_theta(theta, a, h);
        Vec out;
        append(out, flatten(c.equivariance));
        append(out, flatten(c.colinearity));
        append(out, flatten(c.action_compat));
        append(out, flatten(c.normalization));
        return out;
    };

    Vec rhs;
    append(rhs, vec_zero(f, da * dh * dh));
    append(rhs, vec_zero(f, da * dh * dh * dh));
    append(rhs, vec_zero(f, da * da * dh * dh));
    append(rhs, flatten(Matrix::col_vector(a.alg.unit) * Matrix::row_vector(h.counit)));

    Matrix system(f, rhs.size(), unknowns);
    for (std::size_t j = 0; j < unknowns; ++j) {
        Tensor3 probe(f, dh, dh, da);
        probe.at(j / (dh * da), (j / da) % dh, j % da) = Scalar::one(f);
        Vec col = values(probe);
        for (std::size_t i = 0; i < col.size(); ++i) system.at(i, j) = col[i];
    }
    return solve_affine_system(system, rhs);
}

Matrix nu_map_raw(const RelativeHopfModule& m, const Tensor3& theta, const ComoduleAlgebra& a,
                  const HomHopfAlgebra& h) {
    require_theta_dims(theta, a, h);
    const FieldSpec f = h.field();
    const Matrix id_h = Matrix::identity(f, h.dim);
    const Matrix t = theta.as_map_in2();
    return m.action_map() * kron(m.mu, t * kron(id_h, h.alpha_inv)) *
           kron(m.coaction_map(), id_h);
}

Matrix nu_map(const RelativeHopfModule& m, const NormalizedIntegral& theta,
              const ComoduleAlgebra& a, const HomHopfAlgebra& h) {
    if (!theta.certified)
        throw HypothesesNotMet("normalized-integral", "nu requires a certified normalized integral");
    return nu_map_raw(m, theta.theta, a, h);
}

ConversionResult integral_from_normalized(const NormalizedIntegral& theta,
                                          const ComoduleAlgebra& a, const HomHopfAlgebra& h) {
    if (!theta.certified)
        throw HypothesesNotMet("normalized-integral", "conversion requires a certified input");
    const Matrix id_h = Matrix::identity(h.field(), h.dim);
    const Matrix phi = theta.as_map() * kron(Matrix::col_vector(h.unit), id_h);
    ConversionResult out;
    out.report = check_total_integral(phi, a, h);
    out.integral = TotalIntegral{phi, out.report.pass()};
    return out;
}

AxiomReport check_centrality(const Matrix& phi, const ComoduleAlgebra& a,
                             const HomHopfAlgebra& h) {
    if (phi.rows() != a.dim() || phi.cols() != h.dim)
        throw InputError("centrality check: integral shape mismatch");
    const FieldSpec f = h.field();
    const std::size_t da = a.dim(), dh = h.dim;
    const Matrix m_a = a.alg.mult_map();
    const Matrix id_a = Matrix::identity(f, da);
    const Matrix id_h = Matrix::identity(f, dh);

    AxiomReport report;
    // phi(g) b = b phi(g), inputs (g, b)
    compare_maps(report, "integral-central-image", m_a * kron(phi, id_a),
                 permuted_cols(m_a * kron(id_a, phi), {dh, da}, {1, 0}), {dh, da},
                 &a.alg.basis);

    // g phi(h)_[1] (x) phi(h)_[0] = phi(h)_[1] g (x) phi(h)_[0], inputs (g, h);
    // compared in the (H, A) leg order.
    const Matrix m_h = h.mult.as_map_in2();
    const Matrix spread = kron(id_h, a.coaction_map() * phi); // (g,h) -> (g, c, w)
    const Matrix lhs = kron(m_h, id_a) * permuted_rows(spread, {dh, da, dh}, {0, 2, 1});
    const Matrix rhs = kron(m_h, id_a) * permuted_rows(spread, {dh, da, dh}, {2, 0, 1});
    compare_maps(report, "integral-coaction-commutation", lhs, rhs, {dh, dh}, nullptr);
    return report;
}

NormalizedIntegral normalized_from_integral(const TotalIntegral& phi, const ComoduleAlgebra& a,
                                            const HomHopfAlgebra& h) {
    if (!phi.certified)
        throw HypothesesNotMet("total-integral", "conversion requires a certified total integral");
    AxiomReport central = check_centrality(phi.phi, a, h);
    if (!central.pass()) {
        std::string witnesses;
        for (const auto& v : central.violations) {
            std::string pair;
            for (std::size_t i = 0; i < v.indices.size(); ++i) {
                std::size_t ix = v.indices[i];
                pair += (i ? ", " : "");
                pair += (ix < h.basis.size() ? h.basis[ix] : std::to_string(ix));
            }
            witnesses += (witnesses.empty() ? "" : "; ") + ("(" + pair + ")");
        }
        throw HypothesesNotMet(central.violations.front().axiom,
                               "integral image is not central: witnesses " + witnesses);
    }

    const FieldSpec f = h.field();
    const std::size_t dh = h.dim;
    const Matrix s_inv = antipode_inverse(h);
    const Matrix id_h = Matrix::identity(f, dh);
    // theta(g (x) h) = phi(h S^{-1}(g))
    const Matrix t = permuted_cols(phi.phi * h.mult.as_map_in2() * kron(id_h, s_inv), {dh, dh},
                                   {1, 0});
    Tensor3 theta = Tensor3::from_map_in2(t, dh, dh);
    AxiomReport report = check_normalized_integral(theta, a, h);
    if (!report.pass())
        throw InternalInconsistency(
            "conversion from a central total integral failed certification: " + report.str());
    return NormalizedIntegral{theta, true};
}

InducedModule separability_probe_object(const ComoduleAlgebra& a, const HomHopfAlgebra& h) {
    HomModule regular{a.dim(), a.beta(), a.beta_inv(), a.alg.mult};
    return induce(regular, a, h);
}

ExtractionResult extract_normalized_integral(const Matrix& nu, const ComoduleAlgebra& a,
                                             const HomHopfAlgebra& h) {
    const FieldSpec f = h.field();
    const std::size_t da = a.dim(), dh = h.dim;
    InducedModule probe = separability_probe_object(a, h);
    const RelativeHopfModule& g = probe.data;
    if (nu.rows() != g.dim || nu.cols() != g.dim * dh)
        throw InputError("extraction: nu must map (A (x) H) (x) H to A (x) H");

    InducedModule source = induce(g.module_part(), a, h);
    AxiomReport morph = is_morphism(nu, source.data, g, MorphismKind::relative, a, h);
    if (!morph.pass())
        throw HypothesesNotMet(morph.violations.front().axiom,
                               "nu is not a relative-module morphism: " + morph.str());
    if (nu * unit_map(g) != Matrix::identity(f, g.dim))
        throw HypothesesNotMet("retraction-of-unit", "nu does not retract the adjunction unit");

    // theta(h (x) g) = beta((id (x) eps) nu((1_A (x) alpha^{-1}(h)) (x) g)).
    // The alpha^{-1} feed compensates the structure map the unit carries on
    // its right output leg; without it normalization fails on twists.
    const Matrix id_h = Matrix::identity(f, dh);
    const Matrix id_a = Matrix::identity(f, da);
    const Matrix embed = kron(kron(Matrix::col_vector(a.alg.unit), h.alpha_inv), id_h);
    const Matrix t = a.beta() * kron(id_a, Matrix::row_vector(h.counit)) * nu * embed;

    ExtractionResult out;
    out.theta.theta = Tensor3::from_map_in2(t, dh, dh);
    out.report = check_normalized_integral(out.theta.theta, a, h);
    out.theta.certified = out.report.pass();
    return out;
}

} // namespace homhopf
