#ifndef PENCIL5_RATIONAL_HPP
#define PENCIL5_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "pencil5/errors.hpp"

namespace pencil5 {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP's canonical form). Arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "a" or "a/b" with optional leading '-', arbitrary precision.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    Rational inverse() const;

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    /// True when the value is an integer; then *out = value as mpz.
    bool to_integer(mpz_class& out) const;

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// Field-object interface over the rationals; characteristic 0.
/// Mirrors PrimeField so exact linear algebra and polynomial code can be
/// written once against either coefficient field.
struct RationalField {
    using Elem = Rational;

    Elem zero() const { return Rational(); }
    Elem one() const { return Rational(1); }
    Elem from_long(long long v) const { return Rational(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inverse(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_one(const Elem& a) const { return a.is_one(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::uint64_t characteristic() const { return 0; }
    std::string to_string(const Elem& a) const { return a.to_string(); }
    Elem parse(std::string_view text) const { return Rational::parse(text); }
    std::string describe() const { return "rational"; }
    bool same_field(const RationalField&) const { return true; }
};

} // namespace pencil5

#endif
