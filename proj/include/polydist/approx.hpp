#ifndef POLYDIST_APPROX_HPP
#define POLYDIST_APPROX_HPP

#include <functional>
#include <optional>

#include "polydist/divergence.hpp"
#include "polydist/piecewise_linear.hpp"
#include "polydist/polygonal.hpp"

namespace polydist {

// A nonnegative concave function on [0,1] to be approximated. Concavity and
// nonnegativity are caller-asserted and spot-checked (callers may pass
// arbitrary closures), not proven.
struct ConcaveTarget {
    std::function<double(double)> eval;

    // sup |h''| when known; enables the interpolation error bound.
    std::optional<double> sup_second_derivative;

    double operator()(double x) const { return eval(x); }

    // Deterministic spot check: nonnegativity on a 1001-point grid and
    // midpoint concavity on 1000 seeded random pairs. Throws on failure.
    void spot_check() const;
};

// A mixture on equispaced modes reproducing the chord interpolant of a
// concave target. Weights need not sum to one; the total mass equals the
// trapezoid-rule integral of the target at the nodes.
struct ApproxResult {
    PolygonalParams params;       // g+1 components, modes (i-1)/g, not normalized
    PiecewiseLinear interpolant;  // the chord interpolant it reproduces
    std::optional<double> bound;  // sup|h''| / (8 g^2), when sup|h''| is known
    double sup_error = 0.0;       // measured sup |h - mixture|
};

// Chord interpolant of h on g equal panels: knots (i-1)/g, values h there.
PiecewiseLinear linear_interpolant(const ConcaveTarget& h, std::size_t g);

// Bound on the interpolation error of a twice continuously differentiable
// function on g equal panels: sup|h''| / (8 g^2).
double approx_error_bound(double sup_h2, std::size_t g);

// Builds the mixture on modes (i-1)/g whose density matches h at every node:
// endpoint weights h(0)/2 and h(1)/2, interior weights proportional to the
// negated second difference of h at the node (nonnegative when h is concave).
// Requires g >= 2; weights below -1e-12 indicate a non-concave input and
// throw, noise above that clamps to zero.
ApproxResult polygonal_from_concave(const ConcaveTarget& h, std::size_t g);

// sup |h - mixture| over a knot-refined grid.
double measured_sup_error(const ConcaveTarget& h, const ApproxResult& result);

// Density obtained by squaring the L2-normalized mixture approximation of
// sqrt(h). The result integrates to one exactly by construction (the
// normalization uses the closed-form L2 norm, not quadrature). Requires h to
// be a normalized density with concave square root.
DensityFn squared_polygonal(const ConcaveTarget& h, std::size_t g,
                            const QuadratureConfig& cfg = {});

}  // namespace polydist

#endif
