#include "homhopf/catalog.hpp"

#include "homhopf/errors.hpp"

namespace homhopf {

namespace {

void self_check_classical(ClassicalHopfSpec& spec) {
    AxiomReport r = check_hom_hopf(spec.data, Convention::categorical);
    if (!r.pass())
        throw InternalInconsistency("catalog instance \"" + spec.name +
                                    "\" fails its own axioms: " + r.str());
}

Matrix permutation_matrix(const FieldSpec& f, const std::vector<std::size_t>& image) {
    Matrix m(f, image.size(), image.size());
    for (std::size_t j = 0; j < image.size(); ++j) m.at(image[j], j) = Scalar::one(f);
    return m;
}

} // namespace

ClassicalHopfSpec cyclic_group_algebra(std::size_t n, const FieldSpec& f) {
    if (n == 0) throw InputError("cyclic group of order 0");
    HomHopfAlgebra h;
    h.dim = n;
    h.basis.push_back("e");
    for (std::size_t k = 1; k < n; ++k)
        h.basis.push_back(k == 1 ? "g" : "g" + std::to_string(k));
    h.mult = Tensor3(f, n, n, n);
    h.comult = Tensor3(f, n, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) h.mult.at(i, j, (i + j) % n) = Scalar::one(f);
        h.comult.at(i, i, i) = Scalar::one(f);
    }
    h.unit = vec_zero(f, n);
    h.unit[0] = Scalar::one(f);
    h.counit = Vec(n, Scalar::one(f));
    h.alpha = Matrix::identity(f, n);
    h.alpha_inv = h.alpha;
    h.antipode = Matrix(f, n, n);
    for (std::size_t k = 0; k < n; ++k) h.antipode.at((n - k) % n, k) = Scalar::one(f);

    ClassicalHopfSpec spec{"C" + std::to_string(n), std::move(h)};
    self_check_classical(spec);
    return spec;
}

ClassicalHopfSpec sweedler_h4(const FieldSpec& f) {
    if (f.characteristic() == 2)
        throw InputError("the four-dimensional Sweedler algebra needs characteristic != 2");
    const Scalar one = Scalar::one(f);
    const Scalar neg = -one;

    HomHopfAlgebra h;
    h.dim = 4;
    h.basis = {"1", "g", "x", "gx"};
    h.mult = Tensor3(f, 4, 4, 4);
    // rows/cols: 1, g, x, gx; relations g^2 = 1, x^2 = 0, xg = -gx
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
        h.mult.at(i, j, k) = c;
    };
    for (std::size_t j = 0; j < 4; ++j) set(0, j, j, one); // 1 a = a
    set(1, 0, 1, one); set(1, 1, 0, one); set(1, 2, 3, one); set(1, 3, 2, one);
    set(2, 0, 2, one); set(2, 1, 3, neg);                  // x g = -gx, x x = x gx = 0
    set(3, 0, 3, one); set(3, 1, 2, neg);                  // gx g = -x

    h.comult = Tensor3(f, 4, 4, 4);
    h.comult.at(0, 0, 0) = one;                      // 1 -> 1 (x) 1
    h.comult.at(1, 1, 1) = one;                      // g -> g (x) g
    h.comult.at(2, 2, 0) = one; h.comult.at(2, 1, 2) = one; // x -> x(x)1 + g(x)x
    h.comult.at(3, 3, 1) = one; h.comult.at(3, 0, 3) = one; // gx -> gx(x)g + 1(x)gx

    h.unit = {one, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    h.counit = {one, one, Scalar::zero(f), Scalar::zero(f)};
    h.alpha = Matrix::identity(f, 4);
    h.alpha_inv = h.alpha;
    h.antipode = Matrix(f, 4, 4);
    h.antipode.at(0, 0) = one;
    h.antipode.at(1, 1) = one;
    h.antipode.at(3, 2) = neg; // S(x) = -gx
    h.antipode.at(2, 3) = one; // S(gx) = x

    ClassicalHopfSpec spec{"H4", std::move(h)};
    self_check_classical(spec);
    return spec;
}

HomHopfAlgebra trivial_hopf(const FieldSpec& f) {
    HomHopfAlgebra h;
    h.dim = 1;
    h.basis = {"1"};
    h.mult = Tensor3(f, 1, 1, 1);
    h.mult.at(0, 0, 0) = Scalar::one(f);
    h.comult = Tensor3(f, 1, 1, 1);
    h.comult.at(0, 0, 0) = Scalar::one(f);
    h.unit = {Scalar::one(f)};
    h.counit = {Scalar::one(f)};
    h.alpha = Matrix::identity(f, 1);
    h.alpha_inv = h.alpha;
    h.antipode = Matrix::identity(f, 1);
    return h;
}

HomHopfAlgebra yau_twist(const ClassicalHopfSpec& spec, const Matrix& aut) {
    const HomHopfAlgebra& h = spec.data;
    const FieldSpec f = h.field();
    if (h.alpha != Matrix::identity(f, h.dim))
        throw InputError("twist input must be classical (identity structure map)");
    if (aut.rows() != h.dim || aut.cols() != h.dim)
        throw InputError("automorphism has the wrong shape");

    AxiomReport report;
    Matrix aut_inv;
    try {
        aut_inv = invert_matrix(aut);
    } catch (const NotInvertible&) {
        report.add("aut-invertible", {}, "det = 0", "invertible");
    }
    if (report.pass()) {
        const Matrix m = h.mult.as_map_in2();
        const Matrix d = h.comult.as_map_out2();
        const Matrix u = Matrix::col_vector(h.unit);
        const Matrix eps = Matrix::row_vector(h.counit);
        compare_maps(report, "aut-multiplicative", aut * m, m * kron(aut, aut), {h.dim, h.dim},
                     &h.basis);
        compare_maps(report, "aut-unit", aut * u, u, {1}, &h.basis);
        compare_maps(report, "aut-comultiplicative", d * aut, kron(aut, aut) * d, {h.dim},
                     &h.basis);
        compare_maps(report, "aut-counit", eps * aut, eps, {h.dim});
        compare_maps(report, "aut-antipode-commute", aut * h.antipode, h.antipode * aut, {h.dim},
                     &h.basis);
    }
    if (!report.pass())
        throw HypothesesNotMet(report.violations.front().axiom,
                               "matrix is not a Hopf automorphism: " + report.str());

    HomHopfAlgebra t;
    t.dim = h.dim;
    t.basis = h.basis;
    t.mult = Tensor3::from_map_in2(aut * h.mult.as_map_in2(), h.dim, h.dim);
    t.comult = Tensor3::from_map_out2(h.comult.as_map_out2() * aut_inv, h.dim, h.dim);
    t.unit = h.unit;
    t.counit = h.counit;
    t.alpha = aut;
    t.alpha_inv = aut_inv;
    t.antipode = h.antipode;

    AxiomReport post = check_hom_hopf(t, Convention::categorical);
    if (!post.pass())
        throw InternalInconsistency("twist of \"" + spec.name +
                                    "\" fails the Hom-Hopf axioms: " + post.str());
    return t;
}

ComoduleAlgebra regular_comodule_algebra(const HomHopfAlgebra& h) {
    return ComoduleAlgebra{h.algebra(), h.comult};
}

ComoduleAlgebra trivial_comodule_algebra(const HomHopfAlgebra& h) {
    const Matrix map = kron(h.alpha_inv, Matrix::col_vector(h.unit));
    return ComoduleAlgebra{h.algebra(), Tensor3::from_map_out2(map, h.dim, h.dim)};
}

std::vector<std::string> builtin_names() {
    return {"C2", "C3-F7", "C4", "C4-twisted", "C5-twisted", "H4", "H4-twisted"};
}

Bundle builtin(const std::string& name, const FieldSpec& field) {
    HomHopfAlgebra hopf;
    if (name == "C2") {
        hopf = cyclic_group_algebra(2, field).data;
    } else if (name == "C4") {
        hopf = cyclic_group_algebra(4, field).data;
    } else if (name == "C4-twisted") {
        ClassicalHopfSpec base = cyclic_group_algebra(4, field);
        hopf = yau_twist(base, permutation_matrix(field, {0, 3, 2, 1})); // g -> g^3
    } else if (name == "C5-twisted") {
        ClassicalHopfSpec base = cyclic_group_algebra(5, field);
        hopf = yau_twist(base, permutation_matrix(field, {0, 2, 4, 1, 3})); // g -> g^2
    } else if (name == "H4") {
        hopf = sweedler_h4(field).data;
    } else if (name == "H4-twisted") {
        ClassicalHopfSpec base = sweedler_h4(field);
        Matrix aut = Matrix::identity(field, 4);
        aut.at(2, 2) = -Scalar::one(field); // x -> -x
        aut.at(3, 3) = -Scalar::one(field);
        hopf = yau_twist(base, aut);
    } else if (name == "C3-F7") {
        if (!field.is_rationals() && field != FieldSpec::gf(7))
            throw InputError("C3-F7 is fixed over GF(7)");
        hopf = cyclic_group_algebra(3, FieldSpec::gf(7)).data;
    } else {
        std::string names;
        for (const auto& n : builtin_names()) names += (names.empty() ? "" : ", ") + n;
        throw InputError("unknown builtin \"" + name + "\"; available: " + names);
    }

    Bundle b;
    b.name = name;
    b.hopf = std::move(hopf);
    b.algebra = regular_comodule_algebra(b.hopf);
    {
        AxiomReport r = check_comodule_algebra(b.algebra, b.hopf);
        if (!r.pass())
            throw InternalInconsistency("builtin \"" + name +
                                        "\": regular comodule algebra fails: " + r.str());
    }
    b.regular = regular_relative_module(b.algebra);
    {
        AxiomReport r = check_relative_hopf_module(b.regular, b.algebra, b.hopf);
        if (!r.pass())
            throw InternalInconsistency("builtin \"" + name +
                                        "\": regular relative module fails: " + r.str());
    }
    b.integral = TotalIntegral::make(Matrix::identity(b.hopf.field(), b.hopf.dim), b.algebra,
                                     b.hopf);
    return b;
}

} // namespace homhopf
