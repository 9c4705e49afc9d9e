#ifndef PENCIL5_GROEBNER_HPP
#define PENCIL5_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "pencil5/bipoly.hpp"
#include "pencil5/errors.hpp"

namespace pencil5 {

inline constexpr std::size_t kDefaultPairBudget = 1'000'000;

/// Reduced Groebner basis: monic generators, no leading term divides another,
/// all tails reduced, sorted by ascending leading monomial. Unique for a
/// fixed ideal and order, so runs with permuted inputs agree exactly.
template <class F>
struct GroebnerBasis {
    F field;
    GradingPtr ring;
    MonomialOrder order;
    std::vector<BiPoly<F>> gens;
    std::vector<Monomial> lead; // leading monomials under `order`

    bool is_unit_ideal() const {
        return gens.size() == 1 && gens.front().term_count() == 1 && lead.front().is_one();
    }
};

namespace gbdetail {

/// Term list sorted descending under the computation's order (which need not
/// be the canonical grevlex used by BiPoly storage).
template <class F>
struct OPoly {
    std::vector<typename BiPoly<F>::Term> t;
    bool is_zero() const { return t.empty(); }
};

template <class F>
OPoly<F> to_opoly(const BiPoly<F>& p, const MonomialOrder& ord) {
    OPoly<F> r{p.terms()};
    std::sort(r.t.begin(), r.t.end(),
              [&](const auto& a, const auto& b) { return ord.greater(a.mono, b.mono); });
    return r;
}

template <class F>
BiPoly<F> to_bipoly(const F& field, const GradingPtr& ring, const OPoly<F>& p) {
    std::map<Monomial, typename F::Elem, GrevlexLess> acc;
    for (const auto& t : p.t) acc.emplace(t.mono, t.coeff);
    return BiPoly<F>::from_map(field, ring, acc);
}

/// a - (c * m) * b, both sorted under ord.
template <class F>
OPoly<F> axpy(const F& K, const OPoly<F>& a, std::size_t a_from, const typename F::Elem& c,
              const Monomial& m, const OPoly<F>& b, const MonomialOrder& ord) {
    OPoly<F> r;
    r.t.reserve(a.t.size() - a_from + b.t.size());
    std::size_t i = a_from, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j >= b.t.size()) {
            r.t.push_back(a.t[i++]);
            continue;
        }
        const Monomial bm = b.t[j].mono * m;
        if (i >= a.t.size()) {
            const auto v = K.neg(K.mul(c, b.t[j].coeff));
            if (!K.is_zero(v)) r.t.push_back({bm, v});
            ++j;
            continue;
        }
        if (a.t[i].mono == bm) {
            const auto v = K.sub(a.t[i].coeff, K.mul(c, b.t[j].coeff));
            if (!K.is_zero(v)) r.t.push_back({bm, v});
            ++i;
            ++j;
        } else if (ord.greater(a.t[i].mono, bm)) {
            r.t.push_back(a.t[i++]);
        } else {
            const auto v = K.neg(K.mul(c, b.t[j].coeff));
            if (!K.is_zero(v)) r.t.push_back({bm, v});
            ++j;
        }
    }
    return r;
}

/// Full normal form of f against basis elements (all monic). Divisor choice:
/// first basis element (ascending insertion scan) whose lead divides the
/// current term, which is deterministic for a fixed basis sequence.
template <class F>
OPoly<F> reduce_full(const F& K, OPoly<F> f, const std::vector<OPoly<F>>& basis,
                     const std::vector<Monomial>& lm, const MonomialOrder& ord) {
    OPoly<F> out;
    std::size_t head = 0;
    while (head < f.t.size()) {
        const Monomial& cur = f.t[head].mono;
        int div = -1;
        for (std::size_t k = 0; k < lm.size(); ++k) {
            if (!basis[k].is_zero() && lm[k].divides(cur)) {
                div = static_cast<int>(k);
                break;
            }
        }
        if (div < 0) {
            out.t.push_back(f.t[head]);
            ++head;
        } else {
            const Monomial q = lm[static_cast<std::size_t>(div)].divide_into(cur);
            f = axpy(K, f, head, f.t[head].coeff, q, basis[static_cast<std::size_t>(div)], ord);
            head = 0;
        }
    }
    return out;
}

} // namespace gbdetail

/// Buchberger's algorithm with the coprime and chain criteria and
/// normal-strategy pair selection (smallest lcm in the order). The pair
/// budget aborts pathological inputs with a diagnostic instead of looping.
template <class F>
GroebnerBasis<F> buchberger(const F& K, const std::vector<BiPoly<F>>& input,
                            MonomialOrder order = MonomialOrder::grevlex(),
                            std::size_t pair_budget = kDefaultPairBudget) {
    using gbdetail::OPoly;
    GradingPtr ring;
    for (const auto& g : input)
        if (!g.is_zero()) { ring = g.ring(); break; }
    if (!ring) {
        if (input.empty()) throw UsageError("buchberger: empty generator list");
        // all generators zero: the zero ideal
        GroebnerBasis<F> gb{K, input.front().ring(), order, {}, {}};
        return gb;
    }

    std::vector<OPoly<F>> basis;
    std::vector<Monomial> lm;

    struct Pair {
        Monomial lcm;
        int i, j;
    };
    auto pair_less = [order](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return order.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> pending(pair_less);
    std::set<std::pair<int, int>> pending_idx;

    auto push_generator = [&](OPoly<F> g) {
        const auto inv = K.inv(g.t.front().coeff);
        for (auto& t : g.t) t.coeff = K.mul(t.coeff, inv);
        const int idx = static_cast<int>(basis.size());
        lm.push_back(g.t.front().mono);
        basis.push_back(std::move(g));
        for (int i = 0; i < idx; ++i) {
            if (basis[static_cast<std::size_t>(i)].is_zero()) continue;
            pending.insert({lm[static_cast<std::size_t>(i)].lcm(lm[static_cast<std::size_t>(idx)]), i, idx});
            pending_idx.insert({i, idx});
        }
    };

    for (const auto& g : input) {
        if (g.is_zero()) continue;
        g.check_ring(BiPoly<F>(K, ring));
        push_generator(gbdetail::to_opoly(g, order));
    }

    std::size_t steps = 0;
    while (!pending.empty()) {
        const Pair pr = *pending.begin();
        pending.erase(pending.begin());
        pending_idx.erase({pr.i, pr.j});

        const Monomial &li = lm[static_cast<std::size_t>(pr.i)], &lj = lm[static_cast<std::size_t>(pr.j)];
        if (li.coprime_with(lj)) continue;
        bool chained = false;
        for (std::size_t k = 0; k < lm.size() && !chained; ++k) {
            const int ki = static_cast<int>(k);
            if (ki == pr.i || ki == pr.j || basis[k].is_zero()) continue;
            if (!lm[k].divides(pr.lcm)) continue;
            const auto a = std::minmax(pr.i, ki);
            const auto b = std::minmax(pr.j, ki);
            if (!pending_idx.count({a.first, a.second}) && !pending_idx.count({b.first, b.second}))
                chained = true;
        }
        if (chained) continue;

        if (++steps > pair_budget)
            throw BudgetExceeded("buchberger: pair-reduction budget (" + std::to_string(pair_budget) + ") exceeded");

        // S-polynomial of two monic polynomials
        const Monomial qi = li.divide_into(pr.lcm);
        const Monomial qj = lj.divide_into(pr.lcm);
        OPoly<F> s = gbdetail::axpy(K, OPoly<F>{}, 0, K.neg(K.one()), qi, basis[static_cast<std::size_t>(pr.i)], order);
        s = gbdetail::axpy(K, s, 0, K.one(), qj, basis[static_cast<std::size_t>(pr.j)], order);
        OPoly<F> h = gbdetail::reduce_full(K, std::move(s), basis, lm, order);
        if (!h.is_zero()) push_generator(std::move(h));
    }

    // Minimalize: drop elements whose lead is divisible by another's.
    std::vector<int> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < basis.size() && minimal; ++j) {
            if (i == j) continue;
            if (lm[j].divides(lm[i]) && !(lm[i] == lm[j] && j > i)) minimal = false;
        }
        if (minimal) keep.push_back(static_cast<int>(i));
    }
    std::vector<gbdetail::OPoly<F>> red;
    std::vector<Monomial> redlm;
    for (int i : keep) {
        red.push_back(basis[static_cast<std::size_t>(i)]);
        redlm.push_back(lm[static_cast<std::size_t>(i)]);
    }

    // Tail-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < red.size(); ++i) {
            auto self = std::move(red[i]);
            red[i] = OPoly<F>{}; // mask self during reduction
            OPoly<F> nf = gbdetail::reduce_full(K, self, red, redlm, order);
            if (nf.t.size() != self.t.size()) changed = true;
            else {
                for (std::size_t k = 0; k < nf.t.size(); ++k) {
                    if (nf.t[k].mono != self.t[k].mono || !K.eq(nf.t[k].coeff, self.t[k].coeff)) {
                        changed = true;
                        break;
                    }
                }
            }
            red[i] = std::move(nf);
            redlm[i] = red[i].t.front().mono; // lead survives tail reduction
        }
    }

    std::vector<int> idx(red.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return order.less(redlm[static_cast<std::size_t>(a)], redlm[static_cast<std::size_t>(b)]);
    });

    GroebnerBasis<F> gb{K, ring, order, {}, {}};
    for (int i : idx) {
        gb.gens.push_back(gbdetail::to_bipoly(K, ring, red[static_cast<std::size_t>(i)]));
        gb.lead.push_back(redlm[static_cast<std::size_t>(i)]);
    }
    return gb;
}

/// Remainder of f on division by the basis: no term of the result is
/// divisible by any basis leading term, and f - result lies in the ideal.
template <class F>
BiPoly<F> normal_form(const BiPoly<F>& f, const GroebnerBasis<F>& gb) {
    if (f.is_zero() || gb.gens.empty()) return f;
    f.check_ring(gb.gens.front());
    std::vector<gbdetail::OPoly<F>> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens) basis.push_back(gbdetail::to_opoly(g, gb.order));
    auto nf = gbdetail::reduce_full(gb.field, gbdetail::to_opoly(f, gb.order), basis, gb.lead, gb.order);
    return gbdetail::to_bipoly(gb.field, f.ring(), nf);
}

/// Number of monomials of the given bidegree outside the leading-term ideal:
/// the dimension of that bigraded piece of the quotient ring. Enumerates the
/// (small) monomial set directly.
template <class F>
long standard_monomial_count(const GroebnerBasis<F>& gb, BiDegree target) {
    long count = 0;
    for_each_monomial(*gb.ring, target, [&](const Monomial& m) {
        for (const auto& lt : gb.lead)
            if (lt.divides(m)) return;
        ++count;
    });
    return count;
}

/// Dimension of the degree-m piece of a fibre coordinate ring.
template <class F>
long fibre_hilbert_function(const GroebnerBasis<F>& gb, int m) {
    if (m < 0) throw UsageError("fibre_hilbert_function: negative degree");
    if (gb.ring->base_count() != 0) throw UsageError("fibre_hilbert_function expects a fibre-ring basis");
    return standard_monomial_count(gb, BiDegree(0, m));
}

/// True iff the projective vanishing set in the fibre ring is empty,
/// via the pure-power criterion on the reduced basis.
template <class F>
bool projective_empty(const GroebnerBasis<F>& gb) {
    if (gb.ring->base_count() != 0) throw UsageError("projective_empty expects a fibre-ring basis");
    if (gb.is_unit_ideal()) return true;
    const int n = gb.ring->var_count();
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& lt : gb.lead) {
            bool pure = lt.exp(v) > 0;
            for (int i = 0; i < n && pure; ++i)
                if (i != v && lt.exp(i) != 0) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

} // namespace pencil5

#endif
