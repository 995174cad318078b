#include "polydist/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace polydist {

namespace {

constexpr double kMassTol = 1e-6;

void check_normalized(const DensityFn& d, const char* name,
                      const QuadratureConfig& cfg) {
    const double mass = integrate(d.eval, d.breakpoints, cfg);
    if (std::abs(mass - 1.0) > kMassTol)
        throw std::invalid_argument(std::string(name) + " integrates to " +
                                    std::to_string(mass) + ", expected 1 within 1e-6");
}

}  // namespace

DensityFn DensityFn::from_params(const PolygonalParams& params) {
    std::vector<double> brk;
    brk.reserve(params.g());
    for (const auto& m : params.modes()) brk.push_back(m.theta);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
    return DensityFn{[p = params](double x) { return poly_pdf(x, p); }, std::move(brk)};
}

DensityFn DensityFn::from_piecewise_linear(PiecewiseLinear f) {
    std::vector<double> brk(f.knots().begin() + 1, f.knots().end() - 1);
    return DensityFn{[pl = std::move(f)](double x) { return pl(x); }, std::move(brk)};
}

DensityFn DensityFn::uniform() {
    return DensityFn{[](double) { return 1.0; }, {}};
}

double kl_divergence(const DensityFn& h, const DensityFn& f,
                     const QuadratureConfig& cfg) {
    check_normalized(h, "kl: h", cfg);
    check_normalized(f, "kl: f", cfg);
    bool infinite = false;
    auto integrand = [&](double x) {
        const double hx = h(x);
        if (hx <= 0.0) return 0.0;  // limit convention: 0 log 0 = 0
        const double fx = f(x);
        if (fx <= 0.0) {
            infinite = true;
            return 0.0;
        }
        return hx * std::log(hx / fx);
    };
    const auto grid = merge_breakpoints(h.breakpoints, f.breakpoints);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        total += integrate_adaptive(integrand, grid[k], grid[k + 1], cfg);
    if (infinite) return std::numeric_limits<double>::infinity();
    return total;
}

double hellinger_sq(const DensityFn& f, const DensityFn& h,
                    const QuadratureConfig& cfg) {
    check_normalized(f, "hellinger: f", cfg);
    check_normalized(h, "hellinger: h", cfg);
    auto integrand = [&](double x) {
        const double fx = std::max(f(x), 0.0);
        const double hx = std::max(h(x), 0.0);
        return std::sqrt(fx * hx);
    };
    const auto grid = merge_breakpoints(f.breakpoints, h.breakpoints);
    double affinity = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        affinity += integrate_adaptive(integrand, grid[k], grid[k + 1], cfg);
    return std::clamp(2.0 - 2.0 * affinity, 0.0, 2.0);
}

double sup_distance(const DensityFn& f, const DensityFn& h, int grid_per_panel) {
    if (grid_per_panel < 2)
        throw std::invalid_argument("sup_distance: grid must have >= 2 points");
    const auto grid = merge_breakpoints(f.breakpoints, h.breakpoints);
    auto gap = [&](double x) { return std::abs(f(x) - h(x)); };

    double best = 0.0, best_x = 0.0;
    auto scan = [&](double a, double b, int m) {
        for (int i = 0; i <= m; ++i) {
            const double x = a + (b - a) * i / m;
            const double v = gap(x);
            if (v > best) {
                best = v;
                best_x = x;
            }
        }
    };
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        scan(grid[k], grid[k + 1], grid_per_panel);

    // One refinement pass: re-grid the neighborhood of the argmax one cell
    // wide on each side.
    double panel_lo = 0.0, panel_hi = 1.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        if (best_x >= grid[k] && best_x <= grid[k + 1]) {
            panel_lo = grid[k];
            panel_hi = grid[k + 1];
            break;
        }
    const double cell = (panel_hi - panel_lo) / grid_per_panel;
    scan(std::max(panel_lo, best_x - cell), std::min(panel_hi, best_x + cell),
         grid_per_panel);
    return best;
}

double l2_norm_piecewise_linear(const PiecewiseLinear& f) {
    const auto& k = f.knots();
    const auto& v = f.values();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        const double w = k[i + 1] - k[i];
        const double a = v[i], b = v[i + 1];
        total += w * (a * a + a * b + b * b) / 3.0;
    }
    return std::sqrt(total);
}

}  // namespace polydist
