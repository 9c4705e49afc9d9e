#ifndef PENCIL5_PFAFFIAN_HPP
#define PENCIL5_PFAFFIAN_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pencil5/bipoly.hpp"
#include "pencil5/errors.hpp"
#include "pencil5/linalg.hpp"
#include "pencil5/rational.hpp"

namespace pencil5 {

/// 5x5 skew-symmetric matrix of polynomials. Only the ten entries m_ij with
/// 1 <= i < j <= 5 are stored; m_ji = -m_ij and m_ii = 0 are structural.
template <class F>
class SkewMatrix {
public:
    SkewMatrix(const F& field, GradingPtr ring)
        : field_(field), ring_(std::move(ring)),
          entries_(10, BiPoly<F>::zero(field_, ring_)) {}

    const F& field() const { return field_; }
    const GradingPtr& ring() const { return ring_; }

    /// 1-based upper-triangle access, i < j.
    const BiPoly<F>& upper(int i, int j) const { return entries_[static_cast<std::size_t>(index(i, j))]; }
    void set_upper(int i, int j, BiPoly<F> v) {
        v.check_ring(entries_.front());
        entries_[static_cast<std::size_t>(index(i, j))] = std::move(v);
    }

    /// Signed entry m_ij for any i, j in 1..5.
    BiPoly<F> entry(int i, int j) const {
        if (i == j) return BiPoly<F>::zero(field_, ring_);
        if (i < j) return upper(i, j);
        return -upper(j, i);
    }

    static int index(int i, int j) {
        if (i < 1 || j > 5 || i >= j) throw UsageError("skew matrix index out of range");
        static constexpr int base[5] = {0, 4, 7, 9, 10};
        return base[i - 1] + (j - i - 1);
    }

private:
    F field_;
    GradingPtr ring_;
    std::vector<BiPoly<F>> entries_;
};

/// Pfaffian of the 4x4 skew submatrix omitting row/column k (1-based):
/// for the remaining indices i < j < l < m it is
/// m_ij*m_lm - m_il*m_jm + m_im*m_jl. No extra global sign.
template <class F>
BiPoly<F> sub_pfaffian(const SkewMatrix<F>& M, int k) {
    if (k < 1 || k > 5) throw UsageError("sub_pfaffian: index out of range");
    int idx[4];
    int n = 0;
    for (int v = 1; v <= 5; ++v)
        if (v != k) idx[n++] = v;
    const int i = idx[0], j = idx[1], l = idx[2], m = idx[3];
    return M.upper(i, j) * M.upper(l, m) - M.upper(i, l) * M.upper(j, m) + M.upper(i, m) * M.upper(j, l);
}

/// The five sub-Pfaffians (Pf_1, ..., Pf_5); they generate the Pfaffian ideal.
template <class F>
std::vector<BiPoly<F>> pfaffian_ideal(const SkewMatrix<F>& M) {
    std::vector<BiPoly<F>> out;
    out.reserve(5);
    for (int k = 1; k <= 5; ++k) out.push_back(sub_pfaffian(M, k));
    return out;
}

/// Row twists and total twist of a skew matrix: deg m_ij = T - r_i - r_j for
/// every nonzero entry, normalized by r_3 = (0,0). Underdetermined systems
/// resolve remaining freedom to zero.
struct TwistData {
    std::array<BiDegree, 5> rows{};
    BiDegree total;

    /// Predicted bidegree of entry (i, j), 1-based.
    BiDegree entry_degree(int i, int j) const {
        return total - rows[static_cast<std::size_t>(i - 1)] - rows[static_cast<std::size_t>(j - 1)];
    }
    /// Predicted bidegree of sub-Pfaffian k (1-based): 2T - sum_{i != k} r_i.
    BiDegree pfaffian_degree(int k) const {
        BiDegree s = total + total;
        for (int i = 1; i <= 5; ++i)
            if (i != k) s = s - rows[static_cast<std::size_t>(i - 1)];
        return s;
    }
};

struct TwistResult {
    bool consistent = false;
    TwistData data;
    int bad_i = 0, bad_j = 0; // a violating entry when inconsistent

    explicit operator bool() const { return consistent; }
};

/// Solves the twist constraints over the integers. Throws UsageError when a
/// nonzero entry is not bihomogeneous; returns an inconsistency witness when
/// no twist assignment exists.
template <class F>
TwistResult infer_twists(const SkewMatrix<F>& M) {
    struct Eq {
        int i, j;
        BiDegree d;
    };
    std::vector<Eq> eqs;
    for (int i = 1; i <= 5; ++i) {
        for (int j = i + 1; j <= 5; ++j) {
            const auto& e = M.upper(i, j);
            if (e.is_zero()) continue;
            const auto bd = e.bidegree();
            if (!bd)
                throw UsageError("infer_twists: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is not bihomogeneous");
            eqs.push_back({i, j, bd.degree});
        }
    }

    // Unknowns per component: r1, r2, r4, r5, T (r3 = 0). Solve each Z
    // component as an exact rational system; a fractional or inconsistent
    // solution means no twist assignment exists.
    const RationalField Q;
    auto unknown_of = [](int row) { // row index 1..5 -> column, or -1 for r3
        switch (row) {
            case 1: return 0;
            case 2: return 1;
            case 4: return 2;
            case 5: return 3;
            default: return -1;
        }
    };
    auto solve_prefix = [&](int comp, std::size_t count) {
        DenseMat<RationalField> A(Q, static_cast<int>(count), 5);
        std::vector<Rational> b;
        for (std::size_t r = 0; r < count; ++r) {
            const auto& eq = eqs[r];
            A.at(static_cast<int>(r), 4) = Q.one(); // T
            const int ui = unknown_of(eq.i), uj = unknown_of(eq.j);
            if (ui >= 0) A.at(static_cast<int>(r), ui) = A.at(static_cast<int>(r), ui) - Q.one();
            if (uj >= 0) A.at(static_cast<int>(r), uj) = A.at(static_cast<int>(r), uj) - Q.one();
            b.emplace_back(comp == 0 ? eq.d.base : eq.d.fibre);
        }
        return solve(A, b);
    };

    long sol[2][5] = {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
    for (int comp = 0; comp < 2; ++comp) {
        auto x = solve_prefix(comp, eqs.size());
        TwistResult fail;
        fail.consistent = false;
        if (!x) {
            // identify the first equation that breaks consistency
            for (std::size_t k = 1; k <= eqs.size(); ++k) {
                if (!solve_prefix(comp, k)) {
                    fail.bad_i = eqs[k - 1].i;
                    fail.bad_j = eqs[k - 1].j;
                    break;
                }
            }
            return fail;
        }
        for (int u = 0; u < 5; ++u) {
            mpz_class z;
            if (!(*x)[static_cast<std::size_t>(u)].to_integer(z)) return fail;
            sol[comp][u] = z.get_si();
        }
    }

    TwistResult out;
    out.consistent = true;
    out.data.rows[0] = {sol[0][0], sol[1][0]};
    out.data.rows[1] = {sol[0][1], sol[1][1]};
    out.data.rows[2] = {0, 0};
    out.data.rows[3] = {sol[0][2], sol[1][2]};
    out.data.rows[4] = {sol[0][3], sol[1][3]};
    out.data.total = {sol[0][4], sol[1][4]};

    for (const auto& eq : eqs) {
        if (out.data.entry_degree(eq.i, eq.j) != eq.d) {
            TwistResult fail;
            fail.consistent = false;
            fail.bad_i = eq.i;
            fail.bad_j = eq.j;
            return fail;
        }
    }
    return out;
}

/// Searches for an exact expression cubic = sum_i l_i * quadric_i with l_i
/// bihomogeneous of the prescribed degrees (one per quadric). Returns the
/// reduced-echelon particular solution (free coefficients zero) or nullopt.
template <class F>
std::optional<std::vector<BiPoly<F>>> relation_search(const BiPoly<F>& cubic,
                                                      const std::vector<BiPoly<F>>& quadrics,
                                                      const std::vector<BiDegree>& multiplier_degrees) {
    if (quadrics.empty() || quadrics.size() != multiplier_degrees.size())
        throw UsageError("relation_search: multiplier degree list must match quadrics");
    const F& K = cubic.field();
    const GradingPtr ring = cubic.ring();
    if (cubic.is_zero()) throw UsageError("relation_search: zero target");
    const auto target_deg = cubic.bidegree();
    if (!target_deg) throw UsageError("relation_search: target not bihomogeneous");

    // Column layout: one unknown per (quadric, multiplier monomial) pair.
    struct Column {
        int quadric;
        Monomial mono;
    };
    std::vector<Column> columns;
    for (std::size_t qi = 0; qi < quadrics.size(); ++qi) {
        if (quadrics[qi].is_zero()) continue;
        const auto qd = quadrics[qi].bidegree();
        if (!qd) throw UsageError("relation_search: quadric not bihomogeneous");
        if (qd.degree + multiplier_degrees[qi] != target_deg.degree) continue;
        for (const auto& m : monomials_of_bidegree(*ring, multiplier_degrees[qi]))
            columns.push_back({static_cast<int>(qi), m});
    }
    if (columns.empty()) return std::nullopt;

    // Row index: every monomial appearing in any product or in the target.
    std::map<Monomial, int, GrevlexLess> row_of;
    auto row_index = [&](const Monomial& m) {
        auto it = row_of.find(m);
        if (it != row_of.end()) return it->second;
        const int idx = static_cast<int>(row_of.size());
        row_of.emplace(m, idx);
        return idx;
    };
    std::vector<std::vector<std::pair<int, typename F::Elem>>> col_entries;
    for (const auto& col : columns) {
        std::vector<std::pair<int, typename F::Elem>> entries;
        for (const auto& t : quadrics[static_cast<std::size_t>(col.quadric)].terms())
            entries.emplace_back(row_index(t.mono * col.mono), t.coeff);
        col_entries.push_back(std::move(entries));
    }
    for (const auto& t : cubic.terms()) row_index(t.mono);

    DenseMat<F> A(K, static_cast<int>(row_of.size()), static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < col_entries.size(); ++c)
        for (const auto& [r, v] : col_entries[c])
            A.at(r, static_cast<int>(c)) = K.add(A.at(r, static_cast<int>(c)), v);
    std::vector<typename F::Elem> rhs(row_of.size(), K.zero());
    for (const auto& t : cubic.terms()) rhs[static_cast<std::size_t>(row_of.at(t.mono))] = t.coeff;

    auto x = solve(A, rhs);
    if (!x) return std::nullopt;

    std::vector<BiPoly<F>> out(quadrics.size(), BiPoly<F>::zero(K, ring));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& v = (*x)[c];
        if (K.is_zero(v)) continue;
        out[static_cast<std::size_t>(columns[c].quadric)] =
            out[static_cast<std::size_t>(columns[c].quadric)] + BiPoly<F>::term(K, ring, columns[c].mono, v);
    }
    return out;
}

/// Single multiplier degree applied to every quadric.
template <class F>
std::optional<std::vector<BiPoly<F>>> relation_search(const BiPoly<F>& cubic,
                                                      const std::vector<BiPoly<F>>& quadrics,
                                                      BiDegree multiplier_degree) {
    return relation_search(cubic, quadrics,
                           std::vector<BiDegree>(quadrics.size(), multiplier_degree));
}

} // namespace pencil5

#endif
