#include "homhopf/maschke.hpp"

#include "homhopf/errors.hpp"

namespace homhopf {

namespace {

void merge_prefixed(AxiomReport& dst, const std::string& prefix, const AxiomReport& src) {
    for (const auto& v : src.violations)
        dst.add(prefix + "/" + v.axiom, v.indices, v.lhs, v.rhs);
}

// Column-wise exact solve of F X = B; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix_equation(const Matrix& f, const Matrix& b) {
    Matrix x(f.field(), f.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        AffineSolutionSet s = solve_affine_system(f, b.col(j));
        if (!s.consistent()) return std::nullopt;
        for (std::size_t i = 0; i < f.cols(); ++i) x.at(i, j) = (*s.particular)[i];
    }
    return x;
}

} // namespace

AxiomReport check_short_exact(const ShortExactSequence& seq, const ComoduleAlgebra& a,
                              const HomHopfAlgebra& h) {
    if (seq.f.rows() != seq.n.dim || seq.f.cols() != seq.m.dim || seq.g.rows() != seq.p.dim ||
        seq.g.cols() != seq.n.dim)
        throw InputError("short exact sequence: map shapes inconsistent with carriers");

    AxiomReport report;
    const FieldSpec fld = h.field();

    if (!kernel_basis(seq.f).empty())
        report.add("f-injective", {}, "nontrivial kernel", "kernel 0");
    if (rank(seq.g) != seq.p.dim)
        report.add("g-surjective", {}, "rank " + std::to_string(rank(seq.g)),
                   "rank " + std::to_string(seq.p.dim));
    if (!(seq.g * seq.f).is_zero())
        report.add("exactness", {}, "g o f != 0", "g o f = 0");
    else if (rank(seq.f) + rank(seq.g) != seq.n.dim)
        report.add("exactness", {},
                   "rank f + rank g = " + std::to_string(rank(seq.f) + rank(seq.g)),
                   "dim N = " + std::to_string(seq.n.dim));

    merge_prefixed(report, "f", is_morphism(seq.f, seq.m, seq.n, MorphismKind::relative, a, h));
    merge_prefixed(report, "g", is_morphism(seq.g, seq.n, seq.p, MorphismKind::relative, a, h));

    if (seq.a_section) {
        merge_prefixed(report, "section",
                       is_morphism(*seq.a_section, seq.p, seq.n, MorphismKind::module, a, h));
        if (seq.g * *seq.a_section != Matrix::identity(fld, seq.p.dim))
            report.add("section-identity", {}, "g o section != id", "id");
    }
    if (seq.a_retraction) {
        merge_prefixed(report, "retraction",
                       is_morphism(*seq.a_retraction, seq.n, seq.m, MorphismKind::module, a, h));
        if (*seq.a_retraction * seq.f != Matrix::identity(fld, seq.m.dim))
            report.add("retraction-identity", {}, "retraction o f != id", "id");
    }
    return report;
}

Matrix phi_average(const Matrix& hmap, const RelativeHopfModule& source,
                   const RelativeHopfModule& target, const TotalIntegral& phi,
                   const ComoduleAlgebra& a, const HomHopfAlgebra& hopf) {
    if (hmap.rows() != target.dim || hmap.cols() != source.dim)
        throw InputError("average: map shape mismatch");
    if (!phi.certified)
        throw HypothesesNotMet("total-integral", "averaging requires a certified total integral");
    if (hmap * source.mu != target.mu * hmap)
        throw HypothesesNotMet("structure-intertwine",
                               "averaging requires a structure-map-intertwining map");
    const Matrix id_h = Matrix::identity(hopf.field(), hopf.dim);
    return lambda_map(target, phi, a, hopf) * kron(hmap, id_h) * source.coaction_map();
}

MaschkeSplitting maschke_split(const ShortExactSequence& seq, const TotalIntegral& phi,
                               const ComoduleAlgebra& a, const HomHopfAlgebra& hopf) {
    if (!seq.a_section && !seq.a_retraction)
        throw InputError("splitting requires an A-linear section or retraction");
    AxiomReport seq_report = check_short_exact(seq, a, hopf);
    if (!seq_report.pass())
        throw HypothesesNotMet("short-exact-sequence",
                               "sequence fails certification: " + seq_report.str());
    AxiomReport central = check_centrality(phi.phi, a, hopf);
    if (!central.pass()) {
        const Violation& v = central.violations.front();
        throw HypothesesNotMet(v.axiom, "integral image is not central: lhs = " + v.lhs +
                                            ", rhs = " + v.rhs);
    }

    const FieldSpec fld = hopf.field();
    const Matrix id_n = Matrix::identity(fld, seq.n.dim);
    std::optional<Matrix> section, retraction;

    auto certify_section = [&](const Matrix& s) {
        AxiomReport r = is_morphism(s, seq.p, seq.n, MorphismKind::relative, a, hopf);
        if (!r.pass())
            throw InternalInconsistency("averaged section is not a relative morphism: " + r.str());
        if (seq.g * s != Matrix::identity(fld, seq.p.dim))
            throw InternalInconsistency("averaged section does not split g");
    };
    auto certify_retraction = [&](const Matrix& r) {
        AxiomReport rep = is_morphism(r, seq.n, seq.m, MorphismKind::relative, a, hopf);
        if (!rep.pass())
            throw InternalInconsistency("averaged retraction is not a relative morphism: " +
                                        rep.str());
        if (r * seq.f != Matrix::identity(fld, seq.m.dim))
            throw InternalInconsistency("averaged retraction does not split f");
    };

    if (seq.a_section) {
        Matrix s = phi_average(*seq.a_section, seq.p, seq.n, phi, a, hopf);
        certify_section(s);
        section = s;
    }
    if (seq.a_retraction) {
        Matrix r = phi_average(*seq.a_retraction, seq.n, seq.m, phi, a, hopf);
        certify_retraction(r);
        retraction = r;
    }

    if (!retraction) {
        // id - section o g lands in Im f; pull back through the injective f.
        auto x = solve_matrix_equation(seq.f, id_n - *section * seq.g);
        if (!x) throw InternalInconsistency("complementary retraction is not solvable");
        Matrix r = phi_average(*x, seq.n, seq.m, phi, a, hopf);
        certify_retraction(r);
        retraction = r;
    }
    if (!section) {
        // Any linear right inverse of g works: id - f o retraction kills Im f,
        // so the composite is independent of the choice.
        auto y = solve_matrix_equation(seq.g, Matrix::identity(fld, seq.p.dim));
        if (!y) throw InternalInconsistency("surjection admits no linear right inverse");
        Matrix s = phi_average((id_n - seq.f * *retraction) * *y, seq.p, seq.n, phi, a, hopf);
        certify_section(s);
        section = s;
    }
    return MaschkeSplitting{*section, *retraction};
}

} // namespace homhopf
