#include "pencil5/grading.hpp"

#include <set>

#include "pencil5/errors.hpp"

namespace pencil5 {

Grading::Grading(std::vector<std::string> names, std::vector<BiDegree> weights, int base_count)
    : names_(std::move(names)), weights_(std::move(weights)), base_count_(base_count) {
    if (names_.size() != weights_.size()) throw UsageError("grading: names/weights size mismatch");
    if (base_count_ < 0 || base_count_ > static_cast<int>(names_.size()))
        throw UsageError("grading: invalid base variable count");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw UsageError("grading: duplicate variable name");
    for (int i = 0; i < base_count_; ++i)
        if (weights_[static_cast<std::size_t>(i)].fibre != 0)
            throw UsageError("grading: base variable with nonzero fibre degree");
}

std::shared_ptr<const Grading> Grading::product_p1_p4() {
    return scroll({0, 0, 0, 0, 0});
}

std::shared_ptr<const Grading> Grading::scroll(const std::vector<long>& fibre_weights) {
    if (fibre_weights.size() != 5) throw UsageError("scroll grading needs 5 fibre weights");
    std::vector<std::string> names{"t0", "t1"};
    std::vector<BiDegree> weights{{1, 0}, {1, 0}};
    for (int i = 0; i < 5; ++i) {
        names.push_back("x" + std::to_string(i));
        weights.emplace_back(fibre_weights[static_cast<std::size_t>(i)], 1);
    }
    return std::make_shared<Grading>(std::move(names), std::move(weights), 2);
}

std::shared_ptr<const Grading> Grading::product_with_placeholders() {
    std::vector<std::string> names{"t0", "t1"};
    std::vector<BiDegree> weights{{1, 0}, {1, 0}};
    for (int i = 0; i < 5; ++i) {
        names.push_back("x" + std::to_string(i));
        weights.emplace_back(0, 1);
    }
    for (int i = 1; i <= 3; ++i) {
        names.push_back("q" + std::to_string(i));
        weights.emplace_back(0, 2);
    }
    return std::make_shared<Grading>(std::move(names), std::move(weights), 2);
}

int Grading::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

std::shared_ptr<const Grading> Grading::fibre_ring() const {
    std::vector<std::string> names(names_.begin() + base_count_, names_.end());
    std::vector<BiDegree> weights;
    for (std::size_t i = static_cast<std::size_t>(base_count_); i < weights_.size(); ++i)
        weights.emplace_back(0, weights_[i].fibre);
    return std::make_shared<Grading>(std::move(names), std::move(weights), 0);
}

std::shared_ptr<const Grading> Grading::chart_ring() const {
    if (base_count_ != 2) throw UsageError("chart ring requires a two-variable base");
    std::vector<std::string> names{"s"};
    std::vector<BiDegree> weights{{1, 0}};
    for (std::size_t i = static_cast<std::size_t>(base_count_); i < names_.size(); ++i) {
        names.push_back(names_[i]);
        weights.push_back(weights_[i]);
    }
    return std::make_shared<Grading>(std::move(names), std::move(weights), 1);
}

} // namespace pencil5
