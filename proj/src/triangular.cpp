#include "polydist/triangular.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polydist {

namespace {

void check_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::domain_error(std::string(what) + " outside [0,1]: " +
                                std::to_string(v));
}

}  // namespace

TriangularMode::TriangularMode(double theta_) : theta(theta_) {
    check_unit_interval(theta_, "mode");
}

double tri_pdf(double x, TriangularMode comp) {
    check_unit_interval(x, "x");
    const double theta = comp.theta;
    if (theta <= 0.0) return 2.0 * (1.0 - x);
    if (theta >= 1.0) return 2.0 * x;
    // Both branches equal 2 at x == theta; the upper branch takes the tie.
    if (x < theta) return 2.0 * x / theta;
    return 2.0 * (1.0 - x) / (1.0 - theta);
}

double tri_cdf(double x, TriangularMode comp) {
    check_unit_interval(x, "x");
    const double theta = comp.theta;
    if (theta >= 1.0) return x * x;
    if (x <= theta) return x * x / theta;  // theta > 0 here since x >= 0
    const double r = 1.0 - x;
    return 1.0 - r * r / (1.0 - theta);
}

double tri_quantile(double u, TriangularMode comp) {
    check_unit_interval(u, "u");
    const double theta = comp.theta;
    if (u <= theta) return std::sqrt(u * theta);
    return 1.0 - std::sqrt((1.0 - u) * (1.0 - theta));
}

double tri_mean(TriangularMode comp) { return (1.0 + comp.theta) / 3.0; }

}  // namespace polydist
