#ifndef POLYDIST_QUADRATURE_HPP
#define POLYDIST_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace polydist {

struct QuadratureConfig {
    int nodes_per_panel = 32;
    double refinement_tolerance = 1e-10;
    int max_panel_splits = 20;
};

struct GaussLegendreNode {
    double x;  // abscissa on [-1,1]
    double w;  // weight
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1].
// Results are cached per order; safe for concurrent use.
const std::vector<GaussLegendreNode>& gauss_legendre_rule(int order);

// Fixed-order Gauss-Legendre estimate on [a,b].
double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int order);

// Integral of f over [a,b] by Gauss-Legendre with dyadic panel refinement:
// a panel is accepted once splitting it changes the estimate by less than
// tolerance * panel_length, with recursion depth capped at max_panel_splits.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureConfig& cfg);

// Integral of f over [0,1] with panels split at the given breakpoints
// (integrands here lose smoothness only at density knots).
double integrate(const std::function<double(double)>& f,
                 const std::vector<double>& breakpoints, const QuadratureConfig& cfg);

// Breakpoint lists merged into a strictly increasing panel grid for [0,1],
// always containing 0 and 1.
std::vector<double> merge_breakpoints(const std::vector<double>& a,
                                      const std::vector<double>& b);

}  // namespace polydist

#endif
