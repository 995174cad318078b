#ifndef POLYDIST_DIVERGENCE_HPP
#define POLYDIST_DIVERGENCE_HPP

#include <functional>
#include <vector>

#include "polydist/piecewise_linear.hpp"
#include "polydist/polygonal.hpp"
#include "polydist/quadrature.hpp"

namespace polydist {

// An evaluable nonnegative function on [0,1] together with the points where
// smoothness may fail; quadrature panels are always split there.
struct DensityFn {
    std::function<double(double)> eval;
    std::vector<double> breakpoints;  // sorted, within [0,1]

    double operator()(double x) const { return eval(x); }

    static DensityFn from_params(const PolygonalParams& params);
    static DensityFn from_piecewise_linear(PiecewiseLinear f);
    static DensityFn uniform();
};

// Kullback-Leibler divergence of h from f in the standard orientation
// integral of h * log(h/f). Points with h = 0 contribute nothing; a region of
// positive h-mass where f vanishes yields +infinity. Both inputs must
// integrate to 1 within 1e-6.
double kl_divergence(const DensityFn& h, const DensityFn& f,
                     const QuadratureConfig& cfg = {});

// Squared Hellinger divergence, computed as 2 - 2 * integral of sqrt(f*h).
// Symmetric, in [0,2], zero iff the densities agree a.e.
double hellinger_sq(const DensityFn& f, const DensityFn& h,
                    const QuadratureConfig& cfg = {});

// Supremum of |f-h| over [0,1]: the max over all breakpoints and a dense grid
// per panel, refined once around the argmax. Exact for piecewise-linear pairs
// since a linear difference attains its panel max at an endpoint.
double sup_distance(const DensityFn& f, const DensityFn& h,
                    int grid_per_panel = 10000);

// L2 norm of a piecewise-linear function, by the closed-form panel integral
// of the squared chord.
double l2_norm_piecewise_linear(const PiecewiseLinear& f);

}  // namespace polydist

#endif
