#include "homhopf/field.hpp"

#include <cctype>
#include <numeric>

#include "homhopf/errors.hpp"

namespace homhopf {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long mod_reduce(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

long long mod_mul(long long a, long long b, long long p) {
    return static_cast<long long>((static_cast<__int128>(a) * b) % p);
}

// extended Euclid
long long mod_inv(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw InputError("element not invertible mod " + std::to_string(p));
    return mod_reduce(t, p);
}

} // namespace

FieldSpec FieldSpec::gf(long long p) {
    if (!is_prime(p)) throw InputError("GF(" + std::to_string(p) + "): modulus is not prime");
    return FieldSpec{FieldKind::prime_field, p};
}

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(p) + ")";
}

FieldSpec FieldSpec::parse(std::string_view s) {
    if (s == "Q") return rationals();
    if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
        std::string_view body = s.substr(3, s.size() - 4);
        if (body.empty() || body.size() > 18) throw InputError("bad field spec: " + std::string(s));
        long long p = 0;
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InputError("bad field spec: " + std::string(s));
            p = p * 10 + (c - '0');
        }
        return gf(p);
    }
    throw InputError("bad field spec: " + std::string(s) + " (expected \"Q\" or \"GF(p)\")");
}

Scalar Scalar::zero(const FieldSpec& f) { return of_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long long n) {
    Scalar s;
    s.field_ = f;
    if (f.is_rationals())
        s.q_ = mpq_class(mpz_class(std::to_string(n)));
    else
        s.r_ = mod_reduce(n, f.p);
    return s;
}

Scalar Scalar::of_fraction(const FieldSpec& f, long long num, long long den) {
    if (den == 0) throw InputError("fraction with zero denominator");
    Scalar s;
    s.field_ = f;
    if (f.is_rationals()) {
        s.q_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
        s.q_.canonicalize();
    } else {
        s.r_ = mod_mul(mod_reduce(num, f.p), mod_inv(mod_reduce(den, f.p), f.p), f.p);
    }
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view s) {
    auto bad = [&](const char* why) -> InputError {
        return InputError("bad scalar \"" + std::string(s) + "\" over " + f.str() + ": " + why);
    };
    if (s.empty()) throw bad("empty");
    if (f.is_rationals()) {
        size_t slash = s.find('/');
        std::string_view ns = slash == std::string_view::npos ? s : s.substr(0, slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
        auto digits = [](std::string_view v) {
            if (v.empty()) return false;
            for (char c : v)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        bool neg = !ns.empty() && ns.front() == '-';
        std::string_view mag = neg ? ns.substr(1) : ns;
        if (!digits(mag)) throw bad("malformed numerator");
        if (mag.size() > 1 && mag.front() == '0') throw bad("leading zero");
        if (neg && mag == "0") throw bad("negative zero");
        mpz_class num(std::string(ns), 10);
        mpz_class den = 1;
        if (slash != std::string_view::npos) {
            if (!digits(ds)) throw bad("malformed denominator");
            if (ds.front() == '0') throw bad("denominator with leading zero");
            den = mpz_class(std::string(ds), 10);
            if (den == 1) throw bad("denominator 1 must be written as \"n\"");
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1) throw bad("not in lowest terms");
        }
        Scalar out;
        out.field_ = f;
        out.q_ = mpq_class(num, den);
        out.q_.canonicalize();
        return out;
    }
    long long v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw bad("expected a decimal residue");
        v = v * 10 + (c - '0');
        if (v >= f.p) throw bad("residue out of range");
    }
    if (s.size() > 1 && s.front() == '0') throw bad("leading zero");
    Scalar out;
    out.field_ = f;
    out.r_ = v;
    return out;
}

bool Scalar::is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw InputError("mixed-field arithmetic: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.q_ = q_ + o.q_;
        s.q_.canonicalize();
    } else {
        s.r_ = mod_reduce(r_ + o.r_, field_.p);
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.q_ = q_ - o.q_;
        s.q_.canonicalize();
    } else {
        s.r_ = mod_reduce(r_ - o.r_, field_.p);
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.q_ = q_ * o.q_;
        s.q_.canonicalize();
    } else {
        s.r_ = mod_mul(r_, o.r_, field_.p);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals())
        s.q_ = -q_;
    else
        s.r_ = mod_reduce(-r_, field_.p);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InputError("division by zero in " + field_.str());
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals())
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inv(r_, field_.p);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (!field_.is_rationals()) return std::to_string(r_);
    return q_.get_str();
}

} // namespace homhopf
