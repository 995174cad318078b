#include "polydist/piecewise_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace polydist {

PiecewiseLinear::PiecewiseLinear(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
    if (knots_.size() < 2 || knots_.size() != values_.size())
        throw std::invalid_argument("piecewise linear: need matching knots/values, >= 2");
    if (knots_.front() != 0.0 || knots_.back() != 1.0)
        throw std::invalid_argument("piecewise linear: knots must start at 0 and end at 1");
    for (std::size_t k = 1; k < knots_.size(); ++k)
        if (!(knots_[k] > knots_[k - 1]))
            throw std::invalid_argument("piecewise linear: knots must be strictly increasing");
}

double PiecewiseLinear::operator()(double x) const {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("piecewise linear: evaluation outside [0,1]");
    if (x <= 0.0) return values_.front();
    if (x >= 1.0) return values_.back();
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - knots_.begin()) - 1;
    const double t = (x - knots_[k]) / (knots_[k + 1] - knots_[k]);
    return values_[k] + t * (values_[k + 1] - values_[k]);
}

double PiecewiseLinear::slope(std::size_t k) const {
    return (values_[k + 1] - values_[k]) / (knots_[k + 1] - knots_[k]);
}

PiecewiseLinear PiecewiseLinear::scaled(double c) const {
    std::vector<double> v(values_);
    for (auto& x : v) x *= c;
    return PiecewiseLinear(knots_, std::move(v));
}

double exact_integral(const PiecewiseLinear& f) {
    const auto& k = f.knots();
    const auto& v = f.values();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i)
        total += 0.5 * (k[i + 1] - k[i]) * (v[i] + v[i + 1]);
    return total;
}

bool is_concave(const PiecewiseLinear& f, double slope_tol) {
    for (std::size_t k = 0; k + 1 < f.panel_count(); ++k)
        if (f.slope(k + 1) > f.slope(k) + slope_tol) return false;
    return true;
}

}  // namespace polydist
