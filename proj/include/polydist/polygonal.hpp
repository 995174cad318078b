#ifndef POLYDIST_POLYGONAL_HPP
#define POLYDIST_POLYGONAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polydist/piecewise_linear.hpp"
#include "polydist/sample.hpp"
#include "polydist/triangular.hpp"

namespace polydist {

// Parameters of a mixture of triangular densities: nonnegative weights and
// the component modes. In the normalized case the weights sum to one and the
// mixture is a probability density; the non-normalized variant (nonnegative
// weights with arbitrary sum) is the cone used by the approximation routines.
class PolygonalParams {
public:
    PolygonalParams(std::vector<double> weights, std::vector<TriangularMode> modes,
                    bool normalized = true);

    static PolygonalParams from_values(std::vector<double> weights,
                                       const std::vector<double>& mode_values,
                                       bool normalized = true);

    // The two-component representation of the uniform density:
    // weights (1/2, 1/2) on modes 0 and 1.
    static PolygonalParams uniform_mixture();

    std::size_t g() const noexcept { return weights_.size(); }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const std::vector<TriangularMode>& modes() const noexcept { return modes_; }
    double mode_value(std::size_t i) const { return modes_[i].theta; }
    bool normalized() const noexcept { return normalized_; }
    double weight_sum() const;

    // Copy with weights rescaled to sum to one exactly.
    PolygonalParams renormalized() const;

private:
    std::vector<double> weights_;
    std::vector<TriangularMode> modes_;
    bool normalized_;
};

// Mixture density at x: sum of weight_i * tri_pdf(x, mode_i).
double poly_pdf(double x, const PolygonalParams& params);

// Mixture distribution function (normalized params only).
double poly_cdf(double x, const PolygonalParams& params);

// Solves poly_cdf(x) = u by bisection. Mixture quantiles have no closed form;
// bisection is unconditionally robust on the piecewise-smooth CDF.
double poly_quantile(double u, const PolygonalParams& params);

// Canonical representation: knots at {0,1} and the distinct modes, density
// values at the knots, chords in between. Reproduces poly_pdf everywhere.
PiecewiseLinear to_piecewise_linear(const PolygonalParams& params);

// Composition sampler: draw the component index from the weights, then invert
// the component CDF at an independent uniform. Deterministic given the seed.
Sample poly_sample(const PolygonalParams& params, std::size_t n, std::uint64_t seed);

// Sum of log densities; -infinity if any point has zero density.
double log_likelihood(const PolygonalParams& params, const Sample& sample);

}  // namespace polydist

#endif
