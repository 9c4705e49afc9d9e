#ifndef PENCIL5_MONOMIAL_HPP
#define PENCIL5_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "pencil5/errors.hpp"
#include "pencil5/grading.hpp"

namespace pencil5 {

/// Power product with dense small-integer exponents. Capacity covers the
/// largest ring in play (7 ambient variables + 3 placeholders).
class Monomial {
public:
    static constexpr int kMaxVars = 10;

    Monomial() = default;
    explicit Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars)) {
        if (nvars < 0 || nvars > kMaxVars) throw UsageError("monomial: unsupported variable count");
    }

    static Monomial variable(int nvars, int index, int power = 1) {
        Monomial m(nvars);
        m.set(index, power);
        return m;
    }

    int nvars() const { return n_; }
    int exp(int i) const { return e_[static_cast<std::size_t>(i)]; }
    void set(int i, int v) {
        if (i < 0 || i >= n_) throw UsageError("monomial: variable index out of range");
        if (v < 0) throw UsageError("monomial: negative exponent");
        e_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(v);
    }

    int total_degree() const {
        int d = 0;
        for (int i = 0; i < n_; ++i) d += e_[static_cast<std::size_t>(i)];
        return d;
    }

    BiDegree bidegree(const Grading& g) const {
        BiDegree d;
        for (int i = 0; i < n_; ++i) {
            const int e = e_[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            d.base += e * g.weight(i).base;
            d.fibre += e * g.weight(i).fibre;
        }
        return d;
    }

    bool is_one() const { return total_degree() == 0; }

    bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    Monomial operator*(const Monomial& o) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i)
            r.e_[static_cast<std::size_t>(i)] =
                static_cast<std::int16_t>(e_[static_cast<std::size_t>(i)] + o.e_[static_cast<std::size_t>(i)]);
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<std::size_t>(i)] > o.e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    /// o / *this, assuming divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i)
            r.e_[static_cast<std::size_t>(i)] =
                static_cast<std::int16_t>(o.e_[static_cast<std::size_t>(i)] - e_[static_cast<std::size_t>(i)]);
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(n_);
        for (int i = 0; i < n_; ++i)
            r.e_[static_cast<std::size_t>(i)] = std::max(e_[static_cast<std::size_t>(i)], o.e_[static_cast<std::size_t>(i)]);
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[static_cast<std::size_t>(i)] > 0 && o.e_[static_cast<std::size_t>(i)] > 0) return false;
        return true;
    }

private:
    std::array<std::int16_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
};

/// Monomial orders. The variable list order (index 0 largest) is fixed per
/// ring: t0 > t1 > x0 > ... grevlex is the default for every Groebner
/// computation; lex and block elimination exist for diagnostics.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, Block };

    Kind kind = Kind::Grevlex;
    int block = 0; // leading-block size for Kind::Block

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block_elimination(int first_k) { return {Kind::Block, first_k}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }

    /// Strict "a < b" in the order.
    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::Grevlex: return grevlex_less(a, b, 0, a.nvars());
            case Kind::Lex: return lex_less(a, b, 0, a.nvars());
            case Kind::Block: {
                const int k = block;
                if (grevlex_less(a, b, 0, k)) return true;
                if (grevlex_less(b, a, 0, k)) return false;
                return grevlex_less(a, b, k, a.nvars());
            }
        }
        return false;
    }
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    std::string to_string() const {
        switch (kind) {
            case Kind::Grevlex: return "grevlex";
            case Kind::Lex: return "lex";
            case Kind::Block: return "block(" + std::to_string(block) + ")";
        }
        return "?";
    }

private:
    static bool grevlex_less(const Monomial& a, const Monomial& b, int from, int to) {
        int da = 0, db = 0;
        for (int i = from; i < to; ++i) { da += a.exp(i); db += b.exp(i); }
        if (da != db) return da < db;
        for (int i = to - 1; i >= from; --i) {
            const int d = a.exp(i) - b.exp(i);
            if (d != 0) return d > 0; // larger power of a later variable is smaller
        }
        return false;
    }
    static bool lex_less(const Monomial& a, const Monomial& b, int from, int to) {
        for (int i = from; i < to; ++i) {
            const int d = a.exp(i) - b.exp(i);
            if (d != 0) return d < 0;
        }
        return false;
    }
};

/// Canonical comparator (grevlex ascending) for associative containers.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return MonomialOrder::grevlex().less(a, b);
    }
};

namespace monodetail {

template <class Fn>
void enumerate_rec(const Grading& g, int var, BiDegree remaining, Monomial& acc, Fn&& emit) {
    const int n = g.var_count();
    if (var == n) {
        if (remaining.fibre != 0) return;
        const long d = remaining.base;
        if (d < 0) return;
        const int nb = g.base_count();
        if (nb == 0) {
            if (d == 0) emit(static_cast<const Monomial&>(acc));
        } else if (nb == 1) {
            acc.set(0, static_cast<int>(d));
            emit(static_cast<const Monomial&>(acc));
            acc.set(0, 0);
        } else { // two base variables of bidegree (1,0)
            for (long c = 0; c <= d; ++c) {
                acc.set(0, static_cast<int>(c));
                acc.set(1, static_cast<int>(d - c));
                emit(static_cast<const Monomial&>(acc));
            }
            acc.set(0, 0);
            acc.set(1, 0);
        }
        return;
    }
    const BiDegree w = g.weight(var);
    if (w.fibre <= 0) throw UsageError("monomial enumeration: non-base variable with fibre degree <= 0");
    const long emax = remaining.fibre / w.fibre;
    for (long e = 0; e <= emax; ++e) {
        acc.set(var, static_cast<int>(e));
        enumerate_rec(g, var + 1, {remaining.base - e * w.base, remaining.fibre - e * w.fibre}, acc, emit);
    }
    acc.set(var, 0);
}

} // namespace monodetail

/// Visits every monomial of the given bidegree, in a fixed deterministic
/// order. The fibre degree bounds the exponent ranges; the base degree is
/// distributed over the (1,0)-weighted base variables at the end.
template <class Fn>
void for_each_monomial(const Grading& g, BiDegree target, Fn&& emit) {
    if (target.fibre < 0) return;
    Monomial acc(g.var_count());
    monodetail::enumerate_rec(g, g.base_count(), target, acc, emit);
}

/// Monomials of a bidegree, materialized.
inline std::vector<Monomial> monomials_of_bidegree(const Grading& g, BiDegree target) {
    std::vector<Monomial> out;
    for_each_monomial(g, target, [&](const Monomial& m) { out.push_back(m); });
    return out;
}

} // namespace pencil5

#endif
