#include "pencil5/rational.hpp"

namespace pencil5 {

Rational::Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw UsageError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw UsageError("empty rational literal");
    try {
        mpq_class v(std::string(text), 10);
        if (sgn(v.get_den()) == 0) throw UsageError("rational literal with zero denominator: " + std::string(text));
        v.canonicalize();
        return Rational(v);
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational literal: " + std::string(text));
    }
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw UsageError("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw UsageError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

bool Rational::to_integer(mpz_class& out) const {
    if (v_.get_den() != 1) return false;
    out = v_.get_num();
    return true;
}

} // namespace pencil5
