#ifndef HOMHOPF_TEST_HELPERS_HPP
#define HOMHOPF_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "homhopf/catalog.hpp"
#include "homhopf/errors.hpp"
#include "homhopf/linalg.hpp"

namespace hh_test {

using namespace homhopf;

inline FieldSpec Q() { return FieldSpec::rationals(); }

inline Scalar q(long long n, long long d = 1) { return Scalar::of_fraction(Q(), n, d); }

inline Matrix mat(const FieldSpec& f, std::vector<std::vector<long long>> rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = Scalar::of_int(f, rows[i][j]);
    return m;
}

inline Vec vec(const FieldSpec& f, std::vector<long long> entries) {
    Vec v;
    for (long long e : entries) v.push_back(Scalar::of_int(f, e));
    return v;
}

inline Vec basis_vec(const FieldSpec& f, std::size_t dim, std::size_t i) {
    Vec v = vec_zero(f, dim);
    v[i] = Scalar::one(f);
    return v;
}

inline std::string key_of(const Vec& v) {
    std::string k;
    for (const auto& x : v) k += x.str() + ",";
    return k;
}

// All vectors of length n over GF(p), in lexicographic order.
inline std::vector<Vec> all_vectors(const FieldSpec& f, std::size_t n) {
    std::vector<Vec> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(f.p);
    for (std::size_t code = 0; code < total; ++code) {
        Vec v = vec_zero(f, n);
        std::size_t c = code;
        for (std::size_t i = n; i-- > 0;) {
            v[i] = Scalar::of_int(f, static_cast<long long>(c % f.p));
            c /= f.p;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Enumerates the whole affine set particular + span(nullspace) over GF(p).
inline std::set<std::string> enumerate_affine_set(const AffineSolutionSet& s,
                                                  const FieldSpec& f) {
    std::set<std::string> out;
    if (!s.consistent()) return out;
    for (const Vec& coeffs : all_vectors(f, s.nullspace.size())) {
        Vec x = *s.particular;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            x = vec_add(x, vec_scale(coeffs[i], s.nullspace[i]));
        out.insert(key_of(x));
    }
    return out;
}

// Structure-map-intertwining A-linear endomorphisms of the regular relative
// module, as an exact basis. Powers the randomized section tests.
inline std::vector<Matrix> a_linear_endos(const ComoduleAlgebra& a) {
    const FieldSpec f = a.field();
    const std::size_t d = a.dim();
    RelativeHopfModule reg = regular_relative_module(a);
    const Matrix act = reg.action_map();
    const Matrix id_a = Matrix::identity(f, d);

    Matrix system(f, 2 * d * d * d, d * d);
    for (std::size_t u = 0; u < d * d; ++u) {
        Matrix e(f, d, d);
        e.at(u / d, u % d) = Scalar::one(f);
        Matrix alin = e * act - act * kron(e, id_a);
        Matrix intert = e * reg.mu - reg.mu * e;
        std::size_t r = 0;
        for (std::size_t i = 0; i < alin.rows(); ++i)
            for (std::size_t j = 0; j < alin.cols(); ++j) system.at(r++, u) = alin.at(i, j);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) system.at(r++, u) = intert.at(i, j);
    }
    std::vector<Matrix> out;
    for (const Vec& v : kernel_basis(system)) {
        Matrix e(f, d, d);
        for (std::size_t u = 0; u < d * d; ++u) e.at(u / d, u % d) = v[u];
        out.push_back(std::move(e));
    }
    return out;
}

inline Matrix random_combination(const std::vector<Matrix>& basis, std::mt19937& rng) {
    if (basis.empty()) throw InputError("empty basis");
    const FieldSpec f = basis[0].field();
    std::uniform_int_distribution<int> coeff(-3, 3);
    Matrix out = Matrix::zero(f, basis[0].rows(), basis[0].cols());
    for (const Matrix& b : basis) {
        Scalar c = Scalar::of_int(f, coeff(rng));
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j)
                out.at(i, j) = out.at(i, j) + c * b.at(i, j);
    }
    return out;
}

// Direct sum split exact sequence 0 -> M -> M (+) P -> P -> 0 with the
// canonical injection and projection.
struct SplitSequenceFixture {
    ShortExactSequence seq;
};

inline SplitSequenceFixture split_sequence(const RelativeHopfModule& m,
                                           const RelativeHopfModule& p) {
    const FieldSpec f = m.mu.field();
    SplitSequenceFixture fix;
    fix.seq.m = m;
    fix.seq.p = p;
    fix.seq.n = direct_sum(m, p);
    fix.seq.f = Matrix::zero(f, m.dim + p.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) fix.seq.f.at(i, i) = Scalar::one(f);
    fix.seq.g = Matrix::zero(f, p.dim, m.dim + p.dim);
    for (std::size_t i = 0; i < p.dim; ++i) fix.seq.g.at(i, m.dim + i) = Scalar::one(f);
    return fix;
}

// Section of the canonical projection built from an endomorphism of P placed
// in the M block: p -> (e(p), p).
inline Matrix block_section(const Matrix& e) {
    const FieldSpec f = e.field();
    const std::size_t d = e.rows();
    Matrix s(f, 2 * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) s.at(i, j) = e.at(i, j);
        s.at(d + i, i) = Scalar::one(f);
    }
    return s;
}

} // namespace hh_test

#endif
