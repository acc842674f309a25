#ifndef HOMHOPF_FIELD_HPP
#define HOMHOPF_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homhopf {

enum class FieldKind : std::uint8_t { rationals, prime_field };

// The coefficient field: Q, or GF(p) with p prime (checked by trial
// division at construction).
struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    long long p = 0; // modulus, prime_field only

    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
    static FieldSpec gf(long long p); // throws InputError unless p prime

    bool is_rationals() const { return kind == FieldKind::rationals; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const; // "Q" or "GF(p)"
    static FieldSpec parse(std::string_view s);

    long long characteristic() const { return is_rationals() ? 0 : p; }
};

// An exact field element. Rationals are kept reduced with positive
// denominator; prime-field residues canonical in [0, p).
class Scalar {
public:
    Scalar() = default; // rational zero
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(const FieldSpec& f, long long n);
    static Scalar of_fraction(const FieldSpec& f, long long num, long long den);
    // Strict canonical forms only: "n" or "n/d" with d>1, gcd(n,d)=1 over Q;
    // decimal residue in [0,p) over GF(p).
    static Scalar parse(const FieldSpec& f, std::string_view s);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // throws on division by zero
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical decimal / fraction rendering; doubles as the on-disk format.
    std::string str() const;

private:
    FieldSpec field_ = FieldSpec::rationals();
    mpq_class q_ = 0;      // rationals only
    long long r_ = 0;      // prime-field residue

    void check_same_field(const Scalar& o) const;
};

} // namespace homhopf

#endif
