#ifndef PENCIL5_LINALG_HPP
#define PENCIL5_LINALG_HPP

#include <optional>
#include <vector>

#include "pencil5/errors.hpp"

namespace pencil5 {

/// Dense matrix over an exact field. Row-major storage.
template <class F>
class DenseMat {
public:
    using Elem = typename F::Elem;

    DenseMat(const F& field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field.zero()) {
        if (rows < 0 || cols < 0) throw UsageError("matrix dimensions must be nonnegative");
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
struct RankKernel {
    int rank = 0;
    std::vector<int> pivot_cols;
    /// Kernel basis vectors, one per free column, in reduced echelon form:
    /// basis k has a 1 in its free column and zeros in every other free column.
    std::vector<std::vector<typename F::Elem>> kernel;
};

/// In-place reduced row echelon form. Deterministic: pivots scan columns left
/// to right and take the first nonzero row. Returns the pivot columns.
template <class F>
std::vector<int> rref(DenseMat<F>& m) {
    const F& K = m.field();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!K.is_zero(m.at(i, col))) { sel = i; break; }
        }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = col; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        const auto inv = K.inv(m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = K.mul(m.at(row, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || K.is_zero(m.at(i, col))) continue;
            const auto f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Exact rank and reduced-echelon kernel basis. rank + dim kernel = cols.
template <class F>
RankKernel<F> rank_kernel(const DenseMat<F>& m) {
    const F& K = m.field();
    DenseMat<F> r = m;
    RankKernel<F> out;
    out.pivot_cols = rref(r);
    out.rank = static_cast<int>(out.pivot_cols.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : out.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<typename F::Elem> v(static_cast<std::size_t>(m.cols()), K.zero());
        v[static_cast<std::size_t>(free)] = K.one();
        for (int i = 0; i < out.rank; ++i)
            v[static_cast<std::size_t>(out.pivot_cols[static_cast<std::size_t>(i)])] = K.neg(r.at(i, free));
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class F>
int rank_of(const DenseMat<F>& m) {
    DenseMat<F> r = m;
    return static_cast<int>(rref(r).size());
}

/// Solves A x = b exactly. Returns the particular solution with all free
/// variables set to zero (the reduced-echelon parametrization), or nullopt
/// when the system is inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const DenseMat<F>& a,
                                                   const std::vector<typename F::Elem>& b) {
    const F& K = a.field();
    if (static_cast<int>(b.size()) != a.rows()) throw UsageError("solve: rhs length mismatch");
    DenseMat<F> aug(K, a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<typename F::Elem> x(static_cast<std::size_t>(a.cols()), K.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<std::size_t>(pivots[i])] = aug.at(static_cast<int>(i), a.cols());
    return x;
}

} // namespace pencil5

#endif
