#ifndef PENCIL5_UNIPOLY_HPP
#define PENCIL5_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "pencil5/errors.hpp"

namespace pencil5 {

/// Dense univariate polynomial over a coefficient field F, in the affine
/// base-chart coordinate s. Zero polynomial = empty coefficient vector;
/// otherwise the leading coefficient is nonzero.
template <class F>
class UniPoly {
public:
    using Elem = typename F::Elem;

    explicit UniPoly(const F& field) : field_(field) {}
    UniPoly(const F& field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

    static UniPoly zero(const F& field) { return UniPoly(field); }
    static UniPoly constant(const F& field, const Elem& v) {
        UniPoly p(field);
        if (!field.is_zero(v)) p.c_.push_back(v);
        return p;
    }
    /// c * s^k
    static UniPoly monomial(const F& field, const Elem& c, int k) {
        UniPoly p(field);
        if (!field.is_zero(c)) {
            p.c_.assign(static_cast<std::size_t>(k) + 1, field.zero());
            p.c_.back() = c;
        }
        return p;
    }

    const F& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : field_.zero();
    }
    Elem leading() const {
        if (is_zero()) throw UsageError("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const UniPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!field_.eq(c_[i], o.c_[i])) return false;
        return true;
    }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff_at(i), o.coeff_at(i));
        return UniPoly(field_, std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const {
        std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff_at(i), o.coeff_at(i));
        return UniPoly(field_, std::move(r));
    }
    UniPoly operator-() const {
        std::vector<Elem> r(c_);
        for (auto& v : r) v = field_.neg(v);
        return UniPoly(field_, std::move(r));
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return zero(field_);
        std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (field_.is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
        }
        return UniPoly(field_, std::move(r));
    }
    UniPoly scaled(const Elem& v) const {
        if (field_.is_zero(v)) return zero(field_);
        std::vector<Elem> r(c_);
        for (auto& x : r) x = field_.mul(x, v);
        return UniPoly(field_, std::move(r));
    }

    /// c * s^k * *this.
    UniPoly times_monomial(const Elem& c, int k) const {
        if (is_zero() || field_.is_zero(c)) return zero(field_);
        std::vector<Elem> r(c_.size() + static_cast<std::size_t>(k), field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i + static_cast<std::size_t>(k)] = field_.mul(c_[i], c);
        return UniPoly(field_, std::move(r));
    }

    struct PseudoDivRem {
        Elem factor; // lead(d)^steps
        UniPoly q, r; // factor * dividend = q*d + r
    };

    /// Fraction-free division: factor * (*this) = q*d + r with deg r < deg d
    /// and no coefficient division, so integral inputs stay integral.
    PseudoDivRem pseudo_divrem(const UniPoly& d) const {
        if (d.is_zero()) throw UsageError("polynomial division by zero");
        PseudoDivRem out{field_.one(), zero(field_), *this};
        const Elem lead = d.c_.back();
        while (!out.r.is_zero() && out.r.degree() >= d.degree()) {
            const int shift = out.r.degree() - d.degree();
            const Elem c = out.r.c_.back();
            out.r = out.r.scaled(lead) - d.times_monomial(c, shift);
            out.q = out.q.scaled(lead) + monomial(field_, c, shift);
            out.factor = field_.mul(out.factor, lead);
        }
        return out;
    }

    /// Division with remainder by a nonzero divisor: *this = q*d + r, deg r < deg d.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        if (d.is_zero()) throw UsageError("polynomial division by zero");
        UniPoly r = *this;
        std::vector<Elem> q;
        if (degree() >= d.degree()) q.assign(static_cast<std::size_t>(degree() - d.degree()) + 1, field_.zero());
        const Elem lead_inv = field_.inv(d.c_.back());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const int shift = r.degree() - d.degree();
            const Elem factor = field_.mul(r.c_.back(), lead_inv);
            q[static_cast<std::size_t>(shift)] = factor;
            for (std::size_t i = 0; i < d.c_.size(); ++i) {
                auto& slot = r.c_[static_cast<std::size_t>(shift) + i];
                slot = field_.sub(slot, field_.mul(factor, d.c_[i]));
            }
            r.trim();
        }
        return {UniPoly(field_, std::move(q)), std::move(r)};
    }

    bool divides(const UniPoly& other) const { return other.divrem(*this).second.is_zero(); }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(c_.back()));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return zero(field_);
        std::vector<Elem> r(c_.size() - 1, field_.zero());
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = field_.mul(c_[i], field_.from_long(static_cast<long long>(i)));
        return UniPoly(field_, std::move(r));
    }

    Elem eval(const Elem& x) const {
        Elem acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = field_.add(field_.mul(acc, x), c_[i]);
        return acc;
    }

    std::string to_string(const std::string& var = "s") const;

private:
    Elem coeff_at(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<Elem> c_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        auto r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic f / gcd(f, f'): same root set as f, all roots simple, so the number
/// of distinct roots over the algebraic closure equals the result's degree.
/// In characteristic p the guard deg f < p keeps f' faithful.
template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& f) {
    if (f.is_zero()) throw UsageError("squarefree_part of zero polynomial");
    const auto p = f.field().characteristic();
    if (p != 0 && static_cast<std::uint64_t>(f.degree()) >= p)
        throw UsageError("squarefree_part: degree >= characteristic (inseparability guard)");
    auto g = gcd(f, f.derivative());
    if (g.degree() <= 0) return f.monic();
    auto [q, r] = f.divrem(g);
    if (!r.is_zero()) throw InternalError("squarefree_part: gcd does not divide input");
    return q.monic();
}

template <class F>
std::string UniPoly<F>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (field_.is_zero(c_[i])) continue;
        std::string cs = field_.to_string(c_[i]);
        bool negative = !cs.empty() && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        if (first) {
            out += negative ? "-" : "";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace pencil5

#endif
