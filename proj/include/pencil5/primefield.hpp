#ifndef PENCIL5_PRIMEFIELD_HPP
#define PENCIL5_PRIMEFIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "pencil5/errors.hpp"

namespace pencil5 {

/// Z/pZ for an odd prime p < 2^31, residues stored in [0, p).
/// Primality is validated at construction; arithmetic never overflows
/// because products of residues fit in 64 bits.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 3 || p >= (1ULL << 31) || !is_prime(p))
            throw UsageError("prime-field modulus must be an odd prime in (2, 2^31): " + std::to_string(p));
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem from_long(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

    Elem inv(Elem a) const {
        if (a == 0) throw UsageError("inverse of zero in prime field");
        // extended Euclid on (a, p)
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(p_), nr = static_cast<long long>(a);
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<long long>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::uint64_t characteristic() const { return p_; }

    std::string to_string(Elem a) const { return std::to_string(a); }

    /// Parses "a", "-a" or "a/b" (decimal digits of any length), reduced mod p.
    Elem parse(std::string_view text) const {
        if (text.empty()) throw UsageError("empty coefficient literal");
        bool negative = false;
        std::size_t i = 0;
        if (text[0] == '-') { negative = true; i = 1; }
        else if (text[0] == '+') { i = 1; }
        auto slash = text.find('/', i);
        Elem num = parse_decimal(text.substr(i, slash == std::string_view::npos ? std::string_view::npos : slash - i));
        Elem result = num;
        if (slash != std::string_view::npos) {
            Elem den = parse_decimal(text.substr(slash + 1));
            if (den == 0) throw UsageError("coefficient denominator is zero mod p: " + std::string(text));
            result = div(num, den);
        }
        return negative ? neg(result) : result;
    }

    std::string describe() const { return "prime:" + std::to_string(p_); }
    bool same_field(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    Elem parse_decimal(std::string_view digits) const {
        if (digits.empty()) throw UsageError("empty integer literal");
        Elem acc = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw UsageError("malformed integer literal: " + std::string(digits));
            acc = (acc * 10 + static_cast<Elem>(c - '0')) % p_;
        }
        return acc;
    }

    std::uint64_t p_;
};

} // namespace pencil5

#endif
