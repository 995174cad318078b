#ifndef POLYDIST_PIECEWISE_LINEAR_HPP
#define POLYDIST_PIECEWISE_LINEAR_HPP

#include <cstddef>
#include <vector>

namespace polydist {

// A continuous piecewise-linear function on [0,1]: values at strictly
// increasing knots (first 0, last 1), chords in between.
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<double> knots, std::vector<double> values);

    double operator()(double x) const;

    const std::vector<double>& knots() const noexcept { return knots_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t panel_count() const noexcept { return knots_.size() - 1; }

    // Slope of panel k, between knots k and k+1.
    double slope(std::size_t k) const;

    // Returns a copy with all values multiplied by c.
    PiecewiseLinear scaled(double c) const;

private:
    std::vector<double> knots_;
    std::vector<double> values_;
};

// Integral over [0,1]. The trapezoid sum over panels is exact here.
double exact_integral(const PiecewiseLinear& f);

// True iff panel slopes are non-increasing left to right, allowing slope
// increases up to slope_tol as roundoff.
bool is_concave(const PiecewiseLinear& f, double slope_tol = 1e-10);

}  // namespace polydist

#endif
