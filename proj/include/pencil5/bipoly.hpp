#ifndef PENCIL5_BIPOLY_HPP
#define PENCIL5_BIPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "pencil5/errors.hpp"
#include "pencil5/grading.hpp"
#include "pencil5/monomial.hpp"
#include "pencil5/unipoly.hpp"

namespace pencil5 {

/// Outcome of a bidegree query: either the common bidegree of all terms or a
/// witness pair of terms with different bidegrees.
struct BidegreeResult {
    bool homogeneous = false;
    BiDegree degree;
    Monomial witness_a, witness_b; // set when not homogeneous

    explicit operator bool() const { return homogeneous; }
};

/// Sparse multivariate polynomial over an exact field, on a Z^2-graded
/// variable list. Terms are kept in canonical form: grevlex descending,
/// no zero coefficients. Values are immutable in spirit; every operation
/// returns a fresh polynomial.
template <class F>
class BiPoly {
public:
    using Elem = typename F::Elem;
    struct Term {
        Monomial mono;
        Elem coeff;
    };

    BiPoly(const F& field, GradingPtr ring) : field_(field), ring_(std::move(ring)) {
        if (!ring_) throw UsageError("polynomial needs a grading");
    }

    static BiPoly zero(const F& field, const GradingPtr& ring) { return BiPoly(field, ring); }
    static BiPoly constant(const F& field, const GradingPtr& ring, const Elem& c) {
        BiPoly p(field, ring);
        if (!field.is_zero(c)) p.terms_.push_back({Monomial(ring->var_count()), c});
        return p;
    }
    static BiPoly variable(const F& field, const GradingPtr& ring, int index, int power = 1) {
        BiPoly p(field, ring);
        p.terms_.push_back({Monomial::variable(ring->var_count(), index, power), field.one()});
        return p;
    }
    static BiPoly term(const F& field, const GradingPtr& ring, const Monomial& m, const Elem& c) {
        BiPoly p(field, ring);
        if (!field.is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    const F& field() const { return field_; }
    const GradingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw UsageError("leading term of zero polynomial");
        return terms_.front().mono;
    }
    const Elem& leading_coeff() const {
        if (is_zero()) throw UsageError("leading term of zero polynomial");
        return terms_.front().coeff;
    }

    bool operator==(const BiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || !field_.eq(terms_[i].coeff, o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
        return r;
    }

    BiPoly operator+(const BiPoly& o) const { return merged(o, false); }
    BiPoly operator-(const BiPoly& o) const { return merged(o, true); }

    BiPoly operator*(const BiPoly& o) const {
        check_ring(o);
        if (is_zero() || o.is_zero()) return zero(field_, ring_);
        std::map<Monomial, Elem, GrevlexLess> acc;
        for (const auto& a : terms_) {
            for (const auto& b : o.terms_) {
                const Monomial m = a.mono * b.mono;
                const Elem c = field_.mul(a.coeff, b.coeff);
                auto it = acc.find(m);
                if (it == acc.end()) {
                    if (!field_.is_zero(c)) acc.emplace(m, c);
                } else {
                    it->second = field_.add(it->second, c);
                    if (field_.is_zero(it->second)) acc.erase(it);
                }
            }
        }
        return from_map(field_, ring_, acc);
    }

    BiPoly scaled(const Elem& c) const {
        if (field_.is_zero(c)) return zero(field_, ring_);
        BiPoly r = *this;
        for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
        return r;
    }

    /// (c * m) * *this — single-term product, keeps sortedness for free.
    BiPoly times_term(const Monomial& m, const Elem& c) const {
        if (field_.is_zero(c)) return zero(field_, ring_);
        BiPoly r = *this;
        for (auto& t : r.terms_) {
            t.mono = t.mono * m;
            t.coeff = field_.mul(t.coeff, c);
        }
        return r;
    }

    BiPoly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(terms_.front().coeff));
    }

    /// Formal partial derivative with respect to one variable.
    BiPoly derivative(int var) const {
        if (var < 0 || var >= ring_->var_count()) throw UsageError("derivative: variable index out of range");
        std::map<Monomial, Elem, GrevlexLess> acc;
        for (const auto& t : terms_) {
            const int e = t.mono.exp(var);
            if (e == 0) continue;
            const Elem c = field_.mul(t.coeff, field_.from_long(e));
            if (field_.is_zero(c)) continue;
            Monomial m = t.mono;
            m.set(var, e - 1);
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(m, c);
            else it->second = field_.add(it->second, c);
        }
        return from_map(field_, ring_, acc);
    }

    /// Common bidegree of all terms, or a witness pair when inhomogeneous.
    BidegreeResult bidegree() const {
        if (is_zero()) throw UsageError("bidegree of zero polynomial");
        BidegreeResult r;
        r.degree = terms_.front().mono.bidegree(*ring_);
        for (const auto& t : terms_) {
            const BiDegree d = t.mono.bidegree(*ring_);
            if (d != r.degree) {
                r.homogeneous = false;
                r.witness_a = terms_.front().mono;
                r.witness_b = t.mono;
                return r;
            }
        }
        r.homogeneous = true;
        return r;
    }

    /// Substitutes the base coordinates (t0, t1) := (b0, b1) and returns a
    /// polynomial on the fibre ring. (0,0) is not a point of P^1.
    BiPoly specialize_fibre(const Elem& b0, const Elem& b1) const {
        if (ring_->base_count() != 2) throw UsageError("specialize_fibre needs a two-variable base");
        if (field_.is_zero(b0) && field_.is_zero(b1))
            throw UsageError("specialize_fibre: (0,0) is not a point of the base");
        const GradingPtr fr = ring_->fibre_ring();
        std::map<Monomial, Elem, GrevlexLess> acc;
        for (const auto& t : terms_) {
            Elem c = t.coeff;
            c = field_.mul(c, power(b0, t.mono.exp(0)));
            c = field_.mul(c, power(b1, t.mono.exp(1)));
            if (field_.is_zero(c)) continue;
            Monomial m(fr->var_count());
            for (int i = 2; i < ring_->var_count(); ++i) m.set(i - 2, t.mono.exp(i));
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(m, c);
            else {
                it->second = field_.add(it->second, c);
                if (field_.is_zero(it->second)) acc.erase(it);
            }
        }
        return from_map(field_, fr, acc);
    }

    /// Dehomogenizes the base on the chart t0 = 1, renaming t1 to s.
    BiPoly specialize_chart() const {
        if (ring_->base_count() != 2) throw UsageError("specialize_chart needs a two-variable base");
        const GradingPtr cr = ring_->chart_ring();
        std::map<Monomial, Elem, GrevlexLess> acc;
        for (const auto& t : terms_) {
            Monomial m(cr->var_count());
            m.set(0, t.mono.exp(1));
            for (int i = 2; i < ring_->var_count(); ++i) m.set(i - 1, t.mono.exp(i));
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(m, t.coeff);
            else {
                it->second = field_.add(it->second, t.coeff);
                if (field_.is_zero(it->second)) acc.erase(it);
            }
        }
        return from_map(field_, cr, acc);
    }

    /// Splits a chart polynomial (base_count 1, first variable s) into
    /// fibre-monomial components with univariate coefficients in s.
    std::map<Monomial, UniPoly<F>, GrevlexLess> collect_by_fibre_monomial() const {
        if (ring_->base_count() != 1) throw UsageError("collect_by_fibre_monomial expects a chart polynomial");
        const GradingPtr fr = ring_->fibre_ring();
        std::map<Monomial, UniPoly<F>, GrevlexLess> out;
        for (const auto& t : terms_) {
            Monomial m(fr->var_count());
            for (int i = 1; i < ring_->var_count(); ++i) m.set(i - 1, t.mono.exp(i));
            auto it = out.find(m);
            const UniPoly<F> piece = UniPoly<F>::monomial(field_, t.coeff, t.mono.exp(0));
            if (it == out.end()) out.emplace(m, piece);
            else it->second = it->second + piece;
        }
        return out;
    }

    static BiPoly from_map(const F& field, const GradingPtr& ring,
                           const std::map<Monomial, Elem, GrevlexLess>& acc) {
        BiPoly p(field, ring);
        p.terms_.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            p.terms_.push_back({it->first, it->second});
        return p;
    }

    void check_ring(const BiPoly& o) const {
        if (!(*ring_ == *o.ring_)) throw UsageError("polynomial ring mismatch");
    }

private:
    Elem power(const Elem& b, int e) const {
        Elem r = field_.one();
        for (int i = 0; i < e; ++i) r = field_.mul(r, b);
        return r;
    }

    BiPoly merged(const BiPoly& o, bool subtract) const {
        check_ring(o);
        const MonomialOrder ord = MonomialOrder::grevlex();
        BiPoly r(field_, ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            bool take_left;
            if (i >= terms_.size()) take_left = false;
            else if (j >= o.terms_.size()) take_left = true;
            else if (terms_[i].mono == o.terms_[j].mono) {
                const Elem c = subtract ? field_.sub(terms_[i].coeff, o.terms_[j].coeff)
                                        : field_.add(terms_[i].coeff, o.terms_[j].coeff);
                if (!field_.is_zero(c)) r.terms_.push_back({terms_[i].mono, c});
                ++i; ++j;
                continue;
            } else {
                take_left = ord.greater(terms_[i].mono, o.terms_[j].mono);
            }
            if (take_left) {
                r.terms_.push_back(terms_[i]);
                ++i;
            } else {
                r.terms_.push_back({o.terms_[j].mono, subtract ? field_.neg(o.terms_[j].coeff) : o.terms_[j].coeff});
                ++j;
            }
        }
        return r;
    }

    F field_;
    GradingPtr ring_;
    std::vector<Term> terms_;
};

} // namespace pencil5

#endif
