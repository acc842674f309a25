#include "homhopf/algebra.hpp"

#include "homhopf/errors.hpp"
#include "homhopf/linalg.hpp"

namespace homhopf {

namespace {

void require_square(const Matrix& m, std::size_t dim, const char* what) {
    if (m.rows() != dim || m.cols() != dim)
        throw InputError(std::string(what) + ": expected " + std::to_string(dim) + "x" +
                         std::to_string(dim) + " matrix");
}

void require_tensor(const Tensor3& t, std::size_t d0, std::size_t d1, std::size_t d2,
                    const char* what) {
    if (t.dim0() != d0 || t.dim1() != d1 || t.dim2() != d2)
        throw InputError(std::string(what) + ": tensor dimensions inconsistent");
}

// Reports the singularity instead of throwing: a non-invertible structure
// map is an axiom failure of the candidate, not a malformed input.
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

Vec HomAlgebra::mul(const Vec& x, const Vec& y) const {
    if (x.size() != dim || y.size() != dim) throw InputError("product of wrong-sized vectors");
    Vec out = vec_zero(field(), dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& m = mult.at(i, j, k);
                if (!m.is_zero()) out[k] += c * m;
            }
        }
    }
    return out;
}

HomAlgebra HomHopfAlgebra::algebra() const {
    return HomAlgebra{dim, basis, mult, unit, alpha, alpha_inv};
}

HomCoalgebra HomHopfAlgebra::coalgebra() const {
    return HomCoalgebra{dim, basis, comult, counit, alpha, alpha_inv};
}

Matrix HomHopfAlgebra::unit_counit_map() const {
    return Matrix::col_vector(unit) * Matrix::row_vector(counit);
}

AxiomReport check_hom_algebra(const HomAlgebra& a) {
    require_tensor(a.mult, a.dim, a.dim, a.dim, "multiplication");
    require_square(a.alpha, a.dim, "alpha");
    if (a.unit.size() != a.dim) throw InputError("unit vector has wrong length");

    AxiomReport report;
    Matrix alpha_inv;
    if (!try_invert(a.alpha, alpha_inv, report, "alpha-invertible")) return report;

    const FieldSpec f = a.field();
    const Matrix m = a.mult_map();
    const Matrix id = Matrix::identity(f, a.dim);
    const Matrix u = Matrix::col_vector(a.unit);

    // alpha(ab) = alpha(a)alpha(b)
    compare_maps(report, "alpha-multiplicative", a.alpha * m, m * kron(a.alpha, a.alpha),
                 {a.dim, a.dim}, &a.basis);
    // alpha(1) = 1
    compare_maps(report, "alpha-unit", a.alpha * u, u, {1}, &a.basis);
    // alpha(a)(bc) = (ab)alpha(c)
    compare_maps(report, "hom-associativity", m * kron(a.alpha, m), m * kron(m, a.alpha),
                 {a.dim, a.dim, a.dim}, &a.basis);
    // a1 = 1a = alpha(a)
    compare_maps(report, "hom-unitality-right", m * kron(id, u), a.alpha, {a.dim}, &a.basis);
    compare_maps(report, "hom-unitality-left", m * kron(u, id), a.alpha, {a.dim}, &a.basis);
    return report;
}

AxiomReport check_hom_coalgebra(const HomCoalgebra& c, Convention convention) {
    require_tensor(c.comult, c.dim, c.dim, c.dim, "comultiplication");
    require_square(c.gamma, c.dim, "gamma");
    if (c.counit.size() != c.dim) throw InputError("counit vector has wrong length");

    AxiomReport report;
    Matrix gamma_inv;
    if (!try_invert(c.gamma, gamma_inv, report, "gamma-invertible")) return report;

    const FieldSpec f = c.field();
    const Matrix d = c.comult_map();
    const Matrix id = Matrix::identity(f, c.dim);
    const Matrix eps = Matrix::row_vector(c.counit);

    // Delta(gamma(x)) = (gamma (x) gamma) Delta(x)
    compare_maps(report, "gamma-comultiplicative", d * c.gamma, kron(c.gamma, c.gamma) * d,
                 {c.dim}, &c.basis);
    // eps o gamma = eps
    compare_maps(report, "gamma-counit", eps * c.gamma, eps, {c.dim});
    // gamma^{-1}(c1) (x) Delta(c2)  =  Delta(c1) (x) gamma^{±1}(c2)
    const Matrix& right_leg = convention == Convention::categorical ? gamma_inv : c.gamma;
    compare_maps(report, "hom-coassociativity", kron(gamma_inv, d) * d, kron(d, right_leg) * d,
                 {c.dim}, &c.basis);
    // eps(c1)c2 = eps(c2)c1 = gamma^{-1}(c)
    compare_maps(report, "hom-counitality-left", kron(eps, id) * d, gamma_inv, {c.dim}, &c.basis);
    compare_maps(report, "hom-counitality-right", kron(id, eps) * d, gamma_inv, {c.dim}, &c.basis);
    return report;
}

AxiomReport check_hom_bialgebra(const HomHopfAlgebra& b, Convention convention) {
    AxiomReport report;
    report.merge(check_hom_algebra(b.algebra()));
    report.merge(check_hom_coalgebra(b.coalgebra(), convention));

    const FieldSpec f = b.field();
    const Matrix m = b.mult.as_map_in2();
    const Matrix d = b.comult.as_map_out2();
    const Matrix u = Matrix::col_vector(b.unit);
    const Matrix eps = Matrix::row_vector(b.counit);

    // Delta(ab) = a1 b1 (x) a2 b2
    compare_maps(report, "comult-multiplicative", d * m,
                 kron(m, m) *
                     permuted_rows(kron(d, d), {b.dim, b.dim, b.dim, b.dim}, {0, 2, 1, 3}),
                 {b.dim, b.dim}, &b.basis);
    // Delta(1) = 1 (x) 1
    compare_maps(report, "comult-unital", d * u, kron(u, u), {1}, &b.basis);
    // eps(ab) = eps(a)eps(b), eps(1) = 1
    compare_maps(report, "counit-multiplicative", eps * m, kron(eps, eps), {b.dim, b.dim});
    compare_maps(report, "counit-unital", eps * u, Matrix::identity(f, 1), {1});
    return report;
}

AxiomReport check_hom_hopf(const HomHopfAlgebra& h, Convention convention) {
    require_square(h.antipode, h.dim, "antipode");
    AxiomReport report = check_hom_bialgebra(h, convention);

    const Matrix m = h.mult.as_map_in2();
    const Matrix d = h.comult.as_map_out2();
    const Matrix id = Matrix::identity(h.field(), h.dim);
    const Matrix eta_eps = h.unit_counit_map();

    compare_maps(report, "antipode-left", m * kron(h.antipode, id) * d, eta_eps, {h.dim},
                 &h.basis);
    compare_maps(report, "antipode-right", m * kron(id, h.antipode) * d, eta_eps, {h.dim},
                 &h.basis);
    compare_maps(report, "antipode-alpha-commute", h.antipode * h.alpha, h.alpha * h.antipode,
                 {h.dim}, &h.basis);
    return report;
}

Matrix convolution_product(const Matrix& f, const Matrix& g, const HomCoalgebra& from,
                           const HomAlgebra& to) {
    if (f.cols() != from.dim || g.cols() != from.dim || f.rows() != to.dim || g.rows() != to.dim)
        throw InputError("convolution: maps must go from the coalgebra carrier to the algebra carrier");
    return to.mult_map() * kron(f, g) * from.comult_map();
}

Matrix antipode_inverse(const HomHopfAlgebra& h) { return invert_matrix(h.antipode); }

} // namespace homhopf
