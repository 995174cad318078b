#include "polydist/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace polydist {

namespace {

// Newton iteration on the Legendre recurrence (nodes seeded by the Chebyshev
// approximation), symmetric pairs filled in from one half.
std::vector<GaussLegendreNode> compute_rule(int n) {
    std::vector<GaussLegendreNode> rule(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule[i] = {-x, w};
        rule[n - 1 - i] = {x, w};
    }
    return rule;
}

}  // namespace

const std::vector<GaussLegendreNode>& gauss_legendre_rule(int order) {
    if (order < 1 || order > 512)
        throw std::invalid_argument("gauss_legendre_rule: order out of range");
    static std::mutex mtx;
    static std::map<int, std::vector<GaussLegendreNode>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int order) {
    const auto& rule = gauss_legendre_rule(order);
    const double mid = 0.5 * (a + b);
    const double halfw = 0.5 * (b - a);
    double total = 0.0;
    for (const auto& node : rule) total += node.w * f(mid + halfw * node.x);
    return total * halfw;
}

namespace {

double refine(const std::function<double(double)>& f, double a, double b,
              double coarse, const QuadratureConfig& cfg, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl_integrate(f, a, mid, cfg.nodes_per_panel);
    const double right = gl_integrate(f, mid, b, cfg.nodes_per_panel);
    const double fine = left + right;
    if (std::abs(fine - coarse) <= cfg.refinement_tolerance * (b - a) ||
        depth >= cfg.max_panel_splits)
        return fine;
    return refine(f, a, mid, left, cfg, depth + 1) +
           refine(f, mid, b, right, cfg, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureConfig& cfg) {
    if (!(b > a)) return 0.0;
    if (cfg.nodes_per_panel < 1 || cfg.refinement_tolerance <= 0.0 ||
        cfg.max_panel_splits < 0)
        throw std::invalid_argument("quadrature: invalid configuration");
    const double coarse = gl_integrate(f, a, b, cfg.nodes_per_panel);
    return refine(f, a, b, coarse, cfg, 0);
}

std::vector<double> merge_breakpoints(const std::vector<double>& a,
                                      const std::vector<double>& b) {
    std::vector<double> grid{0.0, 1.0};
    for (double x : a)
        if (x > 0.0 && x < 1.0) grid.push_back(x);
    for (double x : b)
        if (x > 0.0 && x < 1.0) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

double integrate(const std::function<double(double)>& f,
                 const std::vector<double>& breakpoints, const QuadratureConfig& cfg) {
    const auto grid = merge_breakpoints(breakpoints, {});
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        total += integrate_adaptive(f, grid[k], grid[k + 1], cfg);
    return total;
}

}  // namespace polydist
