#ifndef PENCIL5_MODRED_HPP
#define PENCIL5_MODRED_HPP

#include <optional>

#include "pencil5/bipoly.hpp"
#include "pencil5/primefield.hpp"
#include "pencil5/rational.hpp"

namespace pencil5 {

/// a/b mod p, or nullopt when b vanishes mod p.
inline std::optional<PrimeField::Elem> reduce_mod(const Rational& a, const PrimeField& K) {
    const mpz_class d = a.denominator() % static_cast<unsigned long>(K.modulus());
    if (d == 0) return std::nullopt;
    const mpz_class n = a.numerator() % static_cast<unsigned long>(K.modulus());
    auto num = K.from_long(n.get_si());
    auto den = K.from_long(d.get_si());
    return K.div(num, den);
}

/// Coefficientwise reduction of a rational polynomial mod p.
inline std::optional<BiPoly<PrimeField>> reduce_mod(const BiPoly<RationalField>& f, const PrimeField& K) {
    BiPoly<PrimeField> out(K, f.ring());
    std::map<Monomial, PrimeField::Elem, GrevlexLess> acc;
    for (const auto& t : f.terms()) {
        auto c = reduce_mod(t.coeff, K);
        if (!c) return std::nullopt;
        if (*c != 0) acc.emplace(t.mono, *c);
    }
    return BiPoly<PrimeField>::from_map(K, f.ring(), acc);
}

} // namespace pencil5

#endif
