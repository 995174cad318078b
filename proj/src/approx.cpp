#include "polydist/approx.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "polydist/errors.hpp"
#include "polydist/rng.hpp"

namespace polydist {

namespace {

constexpr double kWeightNoiseTol = 1e-12;

}  // namespace

void ConcaveTarget::spot_check() const {
    for (int i = 0; i <= 1000; ++i) {
        const double x = i / 1000.0;
        if (!(eval(x) >= -1e-12))
            throw std::invalid_argument("concave target: negative value at x = " +
                                        std::to_string(x));
    }
    Rng rng(0x5eedc0ffee);  // fixed stream: the check must be deterministic
    for (int t = 0; t < 1000; ++t) {
        const double a = rng.uniform();
        const double b = rng.uniform();
        const double mid = 0.5 * (a + b);
        if (!(eval(mid) >= 0.5 * (eval(a) + eval(b)) - 1e-10))
            throw std::invalid_argument(
                "concave target: midpoint concavity fails between x = " +
                std::to_string(a) + " and x = " + std::to_string(b));
    }
}

PiecewiseLinear linear_interpolant(const ConcaveTarget& h, std::size_t g) {
    if (g < 1) throw std::invalid_argument("linear_interpolant: g must be >= 1");
    std::vector<double> knots(g + 1), values(g + 1);
    for (std::size_t i = 0; i <= g; ++i) {
        knots[i] = static_cast<double>(i) / static_cast<double>(g);
        values[i] = h(knots[i]);
    }
    knots.front() = 0.0;
    knots.back() = 1.0;
    return PiecewiseLinear(std::move(knots), std::move(values));
}

double approx_error_bound(double sup_h2, std::size_t g) {
    if (g < 1) throw std::invalid_argument("approx_error_bound: g must be >= 1");
    if (!(sup_h2 >= 0.0))
        throw std::invalid_argument("approx_error_bound: negative curvature bound");
    return sup_h2 / (8.0 * static_cast<double>(g) * static_cast<double>(g));
}

ApproxResult polygonal_from_concave(const ConcaveTarget& h, std::size_t g) {
    if (g < 2) throw std::invalid_argument("polygonal_from_concave: g must be >= 2");
    h.spot_check();

    const double gd = static_cast<double>(g);
    std::vector<double> weights(g + 1);
    std::vector<double> modes(g + 1);
    for (std::size_t i = 1; i <= g + 1; ++i) {
        modes[i - 1] = static_cast<double>(i - 1) / gd;
    }
    modes.back() = 1.0;

    weights.front() = 0.5 * h(0.0);
    weights.back() = 0.5 * h(1.0);
    // Interior weight i is the negated second difference of h at node (i-1)/g,
    // scaled by (g-i+1)(i-1)/(2g); concavity makes the difference nonnegative.
    for (std::size_t i = 2; i <= g; ++i) {
        const double id = static_cast<double>(i);
        const double scale = (gd - id + 1.0) * (id - 1.0) / (2.0 * gd);
        const double second_diff =
            2.0 * h((id - 1.0) / gd) - h(id / gd) - h((id - 2.0) / gd);
        weights[i - 1] = scale * second_diff;
    }
    for (std::size_t i = 0; i <= g; ++i) {
        if (weights[i] < -kWeightNoiseTol)
            throw std::invalid_argument(
                "polygonal_from_concave: weight " + std::to_string(i) + " is " +
                std::to_string(weights[i]) + "; the target is not concave");
        if (weights[i] < 0.0) weights[i] = 0.0;
    }

    ApproxResult result{
        PolygonalParams::from_values(std::move(weights), modes, false),
        linear_interpolant(h, g),
        std::nullopt,
        0.0,
    };

    // The mixture must reproduce the interpolant; verify at nodes and
    // midpoints before handing it out.
    auto check_match = [&](double x) {
        if (std::abs(poly_pdf(x, result.params) - result.interpolant(x)) > 1e-10)
            throw NumericError(
                "polygonal_from_concave: mixture deviates from the interpolant at x = " +
                std::to_string(x));
    };
    for (std::size_t i = 0; i < result.interpolant.knots().size(); ++i) {
        check_match(result.interpolant.knots()[i]);
        if (i + 1 < result.interpolant.knots().size())
            check_match(0.5 * (result.interpolant.knots()[i] +
                               result.interpolant.knots()[i + 1]));
    }

    if (h.sup_second_derivative)
        result.bound = approx_error_bound(*h.sup_second_derivative, g);
    result.sup_error = measured_sup_error(h, result);
    return result;
}

double measured_sup_error(const ConcaveTarget& h, const ApproxResult& result) {
    DensityFn target{h.eval, {}};
    DensityFn mixture = DensityFn::from_params(result.params);
    return sup_distance(target, mixture);
}

DensityFn squared_polygonal(const ConcaveTarget& h, std::size_t g,
                            const QuadratureConfig& cfg) {
    const double mass = integrate(h.eval, {}, cfg);
    if (std::abs(mass - 1.0) > 1e-6)
        throw std::invalid_argument("squared_polygonal: target integrates to " +
                                    std::to_string(mass) + ", expected a density");
    ConcaveTarget root{
        [f = h.eval](double x) { return std::sqrt(std::max(f(x), 0.0)); },
        std::nullopt};
    const ApproxResult approx = polygonal_from_concave(root, g);
    const double norm = l2_norm_piecewise_linear(approx.interpolant);
    if (!(norm > 1e-14))
        throw std::invalid_argument("squared_polygonal: approximation is identically zero");
    const PiecewiseLinear unit = approx.interpolant.scaled(1.0 / norm);
    std::vector<double> brk(unit.knots().begin() + 1, unit.knots().end() - 1);
    return DensityFn{[u = unit](double x) {
                         const double v = u(x);
                         return v * v;
                     },
                     std::move(brk)};
}

}  // namespace polydist
