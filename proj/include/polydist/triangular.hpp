#ifndef POLYDIST_TRIANGULAR_HPP
#define POLYDIST_TRIANGULAR_HPP

namespace polydist {

// A triangular density on [0,1] parameterized by its mode. The density rises
// linearly from (0,0) to (theta,2) and falls linearly to (1,0); the boundary
// cases theta=0 and theta=1 are the one-sided limits 2(1-x) and 2x.
struct TriangularMode {
    double theta;

    explicit TriangularMode(double theta_);
};

// Density at x. Value lies in [0,2]; at x == theta both branches equal 2.
double tri_pdf(double x, TriangularMode comp);

// Distribution function: x^2/theta below the mode, 1-(1-x)^2/(1-theta) above.
double tri_cdf(double x, TriangularMode comp);

// Inverse of tri_cdf in closed form: sqrt(u*theta) for u <= theta,
// 1 - sqrt((1-u)(1-theta)) above.
double tri_quantile(double u, TriangularMode comp);

// Mean of the triangular density, (1 + theta) / 3.
double tri_mean(TriangularMode comp);

}  // namespace polydist

#endif
