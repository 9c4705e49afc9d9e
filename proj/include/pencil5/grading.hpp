#ifndef PENCIL5_GRADING_HPP
#define PENCIL5_GRADING_HPP

#include <memory>
#include <string>
#include <vector>

namespace pencil5 {

/// Z^2 degree: (base degree, fibre degree). Base degrees may be negative on
/// scroll ambients, so everything is over Z.
struct BiDegree {
    long base = 0;
    long fibre = 0;

    BiDegree() = default;
    BiDegree(long b, long f) : base(b), fibre(f) {}

    BiDegree operator+(const BiDegree& o) const { return {base + o.base, fibre + o.fibre}; }
    BiDegree operator-(const BiDegree& o) const { return {base - o.base, fibre - o.fibre}; }
    bool operator==(const BiDegree& o) const { return base == o.base && fibre == o.fibre; }
    bool operator!=(const BiDegree& o) const { return !(*this == o); }

    std::string to_string() const {
        return "(" + std::to_string(base) + "," + std::to_string(fibre) + ")";
    }
};

/// Variable list with one Z^2 weight per variable. The first `base_count`
/// variables are the base coordinates (t0, t1 on the ambient; s on a chart).
class Grading {
public:
    Grading(std::vector<std::string> names, std::vector<BiDegree> weights, int base_count);

    /// P^1 x P^4: t0, t1 of bidegree (1,0); x0..x4 of bidegree (0,1).
    static std::shared_ptr<const Grading> product_p1_p4();
    /// Scroll ambient: t0, t1 of bidegree (1,0); x_i of bidegree (w_i, 1).
    static std::shared_ptr<const Grading> scroll(const std::vector<long>& fibre_weights);
    /// Product ambient extended by placeholder quadric variables q1..q3 of
    /// bidegree (0,2), for symbolic identities.
    static std::shared_ptr<const Grading> product_with_placeholders();

    int var_count() const { return static_cast<int>(names_.size()); }
    int base_count() const { return base_count_; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const BiDegree& weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<BiDegree>& weights() const { return weights_; }

    /// Index of a variable by name, or -1.
    int index_of(const std::string& name) const;

    bool operator==(const Grading& o) const {
        return base_count_ == o.base_count_ && names_ == o.names_ && weights_ == o.weights_;
    }

    /// Grading of the fibre ring: the non-base variables, reweighted to (0, f).
    std::shared_ptr<const Grading> fibre_ring() const;
    /// Grading of the affine chart t0 = 1: variable s of bidegree (1,0)
    /// followed by the fibre variables with their original weights.
    std::shared_ptr<const Grading> chart_ring() const;

private:
    std::vector<std::string> names_;
    std::vector<BiDegree> weights_;
    int base_count_;
};

using GradingPtr = std::shared_ptr<const Grading>;

} // namespace pencil5

#endif
