#ifndef PENCIL5_SMITH_HPP
#define PENCIL5_SMITH_HPP

#include <utility>
#include <vector>

#include "pencil5/errors.hpp"
#include "pencil5/rational.hpp"
#include "pencil5/unipoly.hpp"

namespace pencil5 {

/// Dense matrix of univariate polynomials over F.
template <class F>
class PolyMat {
public:
    PolyMat(const F& field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), UniPoly<F>::zero(field)) {
        if (rows < 0 || cols < 0) throw UsageError("matrix dimensions must be nonnegative");
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    UniPoly<F>& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const UniPoly<F>& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

private:
    F field_;
    int rows_, cols_;
    std::vector<UniPoly<F>> a_;
};

/// Invariant factors d_1 | d_2 | ... | d_r of a polynomial matrix, monic,
/// with r the rank over the fraction field. torsion_length = sum of degrees,
/// i.e. the length of the torsion part of the cokernel.
template <class F>
struct SmithForm {
    std::vector<UniPoly<F>> invariant_factors;
    int rank = 0;
    long torsion_length = 0;
};

namespace smithdetail {

/// Content extraction over Q: scales a row by the unit that makes every
/// coefficient an integer and their gcd 1. Without this, Euclidean
/// elimination over Q[s] blows up its coefficients. No-op for prime fields.
template <class F>
inline void make_row_primitive(PolyMat<F>&, int) {}

inline void make_row_primitive(PolyMat<RationalField>& A, int row) {
    mpz_class den_lcm(1), num_gcd(0);
    for (int j = 0; j < A.cols(); ++j) {
        for (const auto& c : A.at(row, j).coeffs()) {
            if (c.is_zero()) continue;
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
            den_lcm = l;
        }
    }
    for (int j = 0; j < A.cols(); ++j) {
        for (const auto& c : A.at(row, j).coeffs()) {
            if (c.is_zero()) continue;
            mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
            num_gcd = g;
        }
    }
    if (num_gcd == 0 || (den_lcm == 1 && num_gcd == 1)) return;
    const Rational unit(mpq_class(den_lcm) / mpq_class(num_gcd));
    for (int j = 0; j < A.cols(); ++j) A.at(row, j) = A.at(row, j).scaled(unit);
}

/// Unit-normalizes a polynomial within its associate class: monic over a
/// general field, primitive integer with positive lead over Q (so that
/// pseudo-division by it keeps coefficients integral).
template <class F>
inline UniPoly<F> normalize_assoc(const UniPoly<F>& f) {
    return f.monic();
}

inline UniPoly<RationalField> normalize_assoc(const UniPoly<RationalField>& f) {
    if (f.is_zero()) return f;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        den_lcm = l;
    }
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        num_gcd = g;
    }
    Rational unit(mpq_class(den_lcm) / mpq_class(num_gcd));
    if (f.leading().sign() * unit.sign() < 0) unit = -unit;
    return f.scaled(unit);
}

template <class F>
inline void make_col_primitive(PolyMat<F>&, int) {}

inline void make_col_primitive(PolyMat<RationalField>& A, int col) {
    mpz_class den_lcm(1), num_gcd(0);
    for (int i = 0; i < A.rows(); ++i) {
        for (const auto& c : A.at(i, col).coeffs()) {
            if (c.is_zero()) continue;
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
            den_lcm = l;
        }
    }
    for (int i = 0; i < A.rows(); ++i) {
        for (const auto& c : A.at(i, col).coeffs()) {
            if (c.is_zero()) continue;
            mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
            num_gcd = g;
        }
    }
    if (num_gcd == 0 || (den_lcm == 1 && num_gcd == 1)) return;
    const Rational unit(mpq_class(den_lcm) / mpq_class(num_gcd));
    for (int i = 0; i < A.rows(); ++i) A.at(i, col) = A.at(i, col).scaled(unit);
}

} // namespace smithdetail

namespace smithdetail {

/// Fraction-free (Bareiss) elimination: rank over the fraction field and a
/// nonzero rank-size minor (monic). Entry degrees stay bounded by minors of
/// the input, unlike naive elimination.
template <class F>
std::pair<int, UniPoly<F>> bareiss_rank_minor(PolyMat<F> A) {
    const F& K = A.field();
    const int m = A.rows(), n = A.cols();
    UniPoly<F> prev = UniPoly<F>::constant(K, K.one());
    int k = 0;
    while (k < m && k < n) {
        make_row_primitive(A, k);
        int pi = -1, pj = -1, pdeg = -1;
        for (int i = k; i < m; ++i) {
            for (int j = k; j < n; ++j) {
                if (A.at(i, j).is_zero()) continue;
                const int d = A.at(i, j).degree();
                if (pi < 0 || d < pdeg) { pi = i; pj = j; pdeg = d; }
            }
        }
        if (pi < 0) break;
        if (pi != k)
            for (int j = 0; j < n; ++j) std::swap(A.at(pi, j), A.at(k, j));
        if (pj != k)
            for (int i = 0; i < m; ++i) std::swap(A.at(i, pj), A.at(i, k));
        const UniPoly<F> pivot = A.at(k, k);
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < n; ++j) {
                auto num = pivot * A.at(i, j) - A.at(i, k) * A.at(k, j);
                if (num.is_zero()) {
                    A.at(i, j) = num;
                    continue;
                }
                auto [q, r] = num.divrem(prev);
                if (!r.is_zero()) throw InternalError("bareiss: inexact division");
                A.at(i, j) = std::move(q);
            }
            A.at(i, k) = UniPoly<F>::zero(K);
        }
        prev = pivot;
        ++k;
    }
    return {k, normalize_assoc(prev)};
}

} // namespace smithdetail

/// Smith normal form, computed modulo a maximal minor to control degree and
/// coefficient growth (naive Euclidean elimination over Q[s] explodes).
///
/// A fraction-free pass yields the rank r and a nonzero r x r minor delta;
/// every invariant factor divides delta. Elimination then runs on the matrix
/// augmented with delta * I. Row/column operations and entrywise reduction
/// mod delta all preserve the module V = (row span) + delta * R^n, whose
/// quotient has invariant factors (d_1, ..., d_r, delta, ..., delta). After
/// diagonalization, the cyclic factors gcd(pivot, delta) are normalized into
/// a divisibility chain by pairwise gcd/lcm exchanges; its first r entries
/// are the invariant factors of the input. Deterministic throughout
/// (min-degree pivot, ties to the smallest position).
template <class F>
SmithForm<F> smith_form(const PolyMat<F>& input) {
    const F& K = input.field();
    const auto [rank, delta] = smithdetail::bareiss_rank_minor(input);
    SmithForm<F> out;
    out.rank = rank;
    if (rank == 0) return out;
    if (delta.degree() == 0) {
        // a maximal minor is a unit, so every invariant factor is 1
        out.invariant_factors.assign(static_cast<std::size_t>(rank), UniPoly<F>::constant(K, K.one()));
        return out;
    }

    const int m = input.rows() + input.cols(), n = input.cols();
    PolyMat<F> A(K, m, n);
    for (int i = 0; i < input.rows(); ++i)
        for (int j = 0; j < n; ++j) A.at(i, j) = input.at(i, j);
    for (int j = 0; j < n; ++j) A.at(input.rows() + j, j) = delta;

    // caps the degree of every entry of row i below deg delta; changing an
    // entry by a delta-multiple and scaling the row are both legal here
    auto reduce_row_mod_delta = [&](int i, int from) {
        for (int j = from; j < n; ++j) {
            if (A.at(i, j).is_zero() || A.at(i, j).degree() < delta.degree()) continue;
            auto pdr = A.at(i, j).pseudo_divrem(delta);
            if (!K.is_one(pdr.factor))
                for (int c = from; c < n; ++c)
                    if (c != j) A.at(i, c) = A.at(i, c).scaled(pdr.factor);
            A.at(i, j) = std::move(pdr.r);
        }
    };

    std::vector<UniPoly<F>> diag(static_cast<std::size_t>(n), UniPoly<F>::zero(K));
    int k = 0;
    while (k < n) {
        for (int i = k; i < m; ++i) {
            reduce_row_mod_delta(i, k);
            smithdetail::make_row_primitive(A, i);
        }
        int pi = -1, pj = -1, pdeg = -1;
        for (int i = k; i < m; ++i) {
            for (int j = k; j < n; ++j) {
                if (A.at(i, j).is_zero()) continue;
                const int d = A.at(i, j).degree();
                if (pi < 0 || d < pdeg) { pi = i; pj = j; pdeg = d; }
            }
        }
        if (pi < 0) break; // all remaining diagonal values are 0, i.e. delta
        if (pi != k)
            for (int j = 0; j < n; ++j) std::swap(A.at(pi, j), A.at(k, j));
        if (pj != k)
            for (int i = 0; i < m; ++i) std::swap(A.at(i, pj), A.at(i, k));

        // constant pivots clear by plain scaling (a single unit denominator);
        // pseudo-division is reserved for genuine polynomial pivots, where a
        // power-of-lead row scaling is the price of staying fraction-free
        const bool unit_pivot = (A.at(k, k).degree() == 0);
        bool restart = false;
        for (int i = k + 1; i < m && !restart; ++i) {
            if (A.at(i, k).is_zero()) continue;
            if (unit_pivot) {
                const auto q = A.at(i, k).scaled(K.inv(A.at(k, k).coeff(0)));
                for (int j = k; j < n; ++j)
                    A.at(i, j) = A.at(i, j) - q * A.at(k, j);
            } else {
                auto pdr = A.at(i, k).pseudo_divrem(A.at(k, k));
                for (int j = k; j < n; ++j)
                    A.at(i, j) = A.at(i, j).scaled(pdr.factor) - pdr.q * A.at(k, j);
                if (!pdr.r.is_zero()) restart = true; // remainder degree dropped
            }
            reduce_row_mod_delta(i, k);
            smithdetail::make_row_primitive(A, i);
        }
        if (restart) continue;
        for (int j = k + 1; j < n && !restart; ++j) {
            if (A.at(k, j).is_zero()) continue;
            if (unit_pivot) {
                const auto q = A.at(k, j).scaled(K.inv(A.at(k, k).coeff(0)));
                for (int i = k; i < m; ++i)
                    A.at(i, j) = A.at(i, j) - q * A.at(i, k);
            } else {
                auto pdr = A.at(k, j).pseudo_divrem(A.at(k, k));
                for (int i = k; i < m; ++i)
                    A.at(i, j) = A.at(i, j).scaled(pdr.factor) - pdr.q * A.at(i, k);
                if (!pdr.r.is_zero()) restart = true;
            }
            smithdetail::make_col_primitive(A, j);
        }
        if (restart) continue;

        diag[static_cast<std::size_t>(k)] = A.at(k, k);
        ++k;
    }

    // cyclic factors gcd(diagonal, delta), normalized into the canonical chain
    std::vector<UniPoly<F>> u;
    u.reserve(static_cast<std::size_t>(n));
    for (const auto& v : diag) u.push_back(v.is_zero() ? delta.monic() : gcd(v, delta));
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            if (u[i].divides(u[j])) continue;
            auto g = gcd(u[i], u[j]);
            auto [l, lr] = (u[i] * u[j]).divrem(g);
            if (!lr.is_zero()) throw InternalError("smith_form: inexact lcm");
            u[i] = std::move(g);
            u[j] = l.monic();
        }
    }

    out.invariant_factors.assign(u.begin(), u.begin() + rank);
    for (const auto& d : out.invariant_factors) out.torsion_length += d.degree();
    for (std::size_t i = 0; i < out.invariant_factors.size(); ++i) {
        if (i + 1 < out.invariant_factors.size() &&
            !out.invariant_factors[i].divides(out.invariant_factors[i + 1]))
            throw InternalError("smith_form: divisibility chain violated");
        if (!K.is_one(out.invariant_factors[i].leading()))
            throw InternalError("smith_form: non-monic invariant factor");
    }
    return out;
}

/// Evaluates every entry at a point, turning the polynomial matrix into a
/// scalar matrix (used to cross-check Smith rank against plain rank).
template <class F, class Mat>
Mat specialize_matrix(const PolyMat<F>& a, const typename F::Elem& x, Mat prototype) {
    Mat out = std::move(prototype);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j).eval(x);
    return out;
}

} // namespace pencil5

#endif
