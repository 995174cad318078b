#include "polydist/polygonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "polydist/rng.hpp"

namespace polydist {

namespace {

constexpr double kNormalizationTol = 1e-12;

}  // namespace

PolygonalParams::PolygonalParams(std::vector<double> weights,
                                 std::vector<TriangularMode> modes, bool normalized)
    : weights_(std::move(weights)), modes_(std::move(modes)), normalized_(normalized) {
    if (weights_.empty() || weights_.size() != modes_.size())
        throw std::invalid_argument("polygonal params: need g >= 1 weights and modes");
    for (double w : weights_)
        if (!(w >= 0.0))
            throw std::invalid_argument("polygonal params: negative weight " +
                                        std::to_string(w));
    if (normalized_) {
        const double s = weight_sum();
        if (std::abs(s - 1.0) > kNormalizationTol)
            throw std::invalid_argument(
                "polygonal params: weights sum to " + std::to_string(s) +
                ", expected 1 within 1e-12 (use normalized=false for cone members)");
    }
}

PolygonalParams PolygonalParams::from_values(std::vector<double> weights,
                                             const std::vector<double>& mode_values,
                                             bool normalized) {
    std::vector<TriangularMode> modes;
    modes.reserve(mode_values.size());
    for (double t : mode_values) modes.emplace_back(t);
    return PolygonalParams(std::move(weights), std::move(modes), normalized);
}

PolygonalParams PolygonalParams::uniform_mixture() {
    return from_values({0.5, 0.5}, {0.0, 1.0}, true);
}

double PolygonalParams::weight_sum() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
}

PolygonalParams PolygonalParams::renormalized() const {
    const double s = weight_sum();
    if (!(s > 0.0))
        throw std::invalid_argument("polygonal params: cannot normalize zero mass");
    std::vector<double> w(weights_);
    for (auto& wi : w) wi /= s;
    // Guard against residual roundoff in the sum.
    double s2 = 0.0;
    for (double wi : w) s2 += wi;
    w.back() += 1.0 - s2;
    if (w.back() < 0.0) w.back() = 0.0;
    return PolygonalParams(std::move(w), modes_, true);
}

double poly_pdf(double x, const PolygonalParams& params) {
    double total = 0.0;
    for (std::size_t i = 0; i < params.g(); ++i)
        total += params.weights()[i] * tri_pdf(x, params.modes()[i]);
    return total;
}

double poly_cdf(double x, const PolygonalParams& params) {
    if (!params.normalized())
        throw std::invalid_argument("poly_cdf: params must be normalized");
    double total = 0.0;
    for (std::size_t i = 0; i < params.g(); ++i)
        total += params.weights()[i] * tri_cdf(x, params.modes()[i]);
    return total;
}

double poly_quantile(double u, const PolygonalParams& params) {
    if (!params.normalized())
        throw std::invalid_argument("poly_quantile: params must be normalized");
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("poly_quantile: u outside [0,1]");
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    double mid = 0.5;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double c = poly_cdf(mid, params);
        if (std::abs(c - u) <= 1e-12) return mid;
        if (c < u)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= std::numeric_limits<double>::epsilon() * 0.5) break;
    }
    return mid;
}

PiecewiseLinear to_piecewise_linear(const PolygonalParams& params) {
    std::vector<double> knots{0.0, 1.0};
    for (const auto& m : params.modes()) knots.push_back(m.theta);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    std::vector<double> values;
    values.reserve(knots.size());
    for (double k : knots) values.push_back(poly_pdf(k, params));
    return PiecewiseLinear(std::move(knots), std::move(values));
}

Sample poly_sample(const PolygonalParams& params, std::size_t n, std::uint64_t seed) {
    if (!params.normalized())
        throw std::invalid_argument("poly_sample: params must be normalized");
    if (n == 0) throw std::invalid_argument("poly_sample: n must be >= 1");
    Rng rng(seed);
    std::vector<double> pts;
    pts.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t i = rng.categorical(params.weights());
        pts.push_back(tri_quantile(rng.uniform(), params.modes()[i]));
    }
    return Sample::from_raw(std::move(pts));
}

double log_likelihood(const PolygonalParams& params, const Sample& sample) {
    if (!params.normalized())
        throw std::invalid_argument("log_likelihood: params must be normalized");
    double total = 0.0;
    for (double x : sample.points()) {
        const double d = poly_pdf(x, params);
        if (!(d > 0.0)) return -std::numeric_limits<double>::infinity();
        total += std::log(d);
    }
    return total;
}

}  // namespace polydist
