#ifndef POLYDIST_MODEL_SELECT_HPP
#define POLYDIST_MODEL_SELECT_HPP

#include <cstddef>
#include <vector>

#include "polydist/em.hpp"

namespace polydist {

// The universal constants of the entropy and penalty bounds are unknown;
// they default to 1 and stay configurable so that every downstream formula
// treats them symbolically.
struct PenaltyConstants {
    double c1 = 1.0;     // exponential-inequality constant
    double c2 = 1.0;     // concave-class entropy constant
    double c3 = 1.0;     // triangular-class entropy constant
    double kappa = 1.0;  // penalty multiplier lower bound

    // Derived leading constant of the closed-form root:
    // (4/3^{4/3}) * sqrt(2^{1/4} c3 + 1).
    double c5() const;
};

// log(g) + g*log(2*pi*e)/2, the g-dependent additive entropy term.
double c4(std::size_t g);

// Entropy bound for bounded concave classes: 2^{1/4} * c2 * eps^{-1/2}.
double entropy_bound_concave(double epsilon, const PenaltyConstants& consts = {});

// Entropy bound for the g-component mixture class:
// g*(2^{1/4} c3 + 1)*(3/eps)^{1/2} + c4(g).
double entropy_bound_mixture(std::size_t g, double epsilon,
                             const PenaltyConstants& consts = {});

// max{delta, (2^{17/8} sqrt(c2) / 3) * delta^{3/4}} for delta in (0,1].
double j_concave(double delta, const PenaltyConstants& consts = {});

// (4/3^{4/3}) * sqrt(g*(2^{1/4} c3 + 1)) * delta^{3/4} + delta*sqrt(c4(g)).
// The leading constant is kept exactly as 4/3^{4/3}; direct integration of
// the entropy bound gives a larger coefficient (see solve_delta_g users and
// the quadrature cross-check in the tests, which logs the ratio).
double j_mixture(double delta, std::size_t g, const PenaltyConstants& consts = {});

// Unique positive root of sqrt(n) * delta^2 = j_mixture(delta, g), found by
// bisection on (1e-12, 1e3] to 1e-12 relative tolerance. Uniqueness holds
// because j_mixture(delta)/delta^2 decreases strictly from +inf to 0.
double solve_delta_g(std::size_t n, std::size_t g,
                     const PenaltyConstants& consts = {});

// The closed form (c5*sqrt(g) / [sqrt(n) - sqrt(c4(g))]^3)^{4/3}, exposed for
// comparison only: it does not satisfy the defining equation of solve_delta_g
// on substitution, so the numerical root is authoritative. Requires
// sqrt(n) > sqrt(c4(g)).
double paper_delta_g(std::size_t n, std::size_t g,
                     const PenaltyConstants& consts = {});

enum class PenaltyShapeMode {
    solved_delta,  // delta_g^2 from the numerical root (default)
    closed_form,   // (sqrt(g)/[sqrt(n)-sqrt(c4(g))]^3)^{8/3}
};

// Penalty shape without the multiplicative constant: first term plus g/n.
// Requires sqrt(n) > sqrt(c4(g)).
double pen_shape(std::size_t g, std::size_t n, const PenaltyConstants& consts = {},
                 PenaltyShapeMode mode = PenaltyShapeMode::solved_delta);

// (exp(-1) - exp(-gamma-1)) / (1 - exp(-1)), the geometric weight sum
// over model sizes 1..gamma.
double sigma_gamma(std::size_t gamma);

struct SelectionResult {
    std::vector<FitResult> fits;     // per g = 1..gamma
    std::vector<double> penalties;   // pen_shape per g (NaN where excluded)
    std::vector<double> criterion;   // crit per g (+inf where excluded)
    double kappa_prime = 0.0;
    std::size_t chosen_g = 0;
};

// Penalized selection: minimizes crit(g) = -loglik(g)/n + kappa_prime *
// pen_shape(g, n) over the fitted models, smallest g on ties. Models whose
// penalty precondition fails are excluded with a note in `penalties`.
SelectionResult select_g(const std::vector<FitResult>& fits, std::size_t n,
                         double kappa_prime, const PenaltyConstants& consts = {},
                         PenaltyShapeMode mode = PenaltyShapeMode::solved_delta);

// The path kappa -> selected g on a log grid, for calibration and plotting.
struct SelectionPath {
    std::vector<double> kappa;
    std::vector<std::size_t> g_hat;
};

SelectionPath selection_path(const std::vector<FitResult>& fits, std::size_t n,
                             const PenaltyConstants& consts = {},
                             PenaltyShapeMode mode = PenaltyShapeMode::solved_delta,
                             double kappa_lo = 1e-6, double kappa_hi = 1e6,
                             std::size_t grid_size = 1000);

// Dimension-jump calibration of the penalty constant: sweep kappa over a log
// grid, locate the kappa where the selected g drops by the largest amount
// (ties to the smallest kappa), and return twice that value. Throws
// NumericError when the path never drops (advising a larger gamma or more
// data).
double calibrate_kappa(const std::vector<FitResult>& fits, std::size_t n,
                       const PenaltyConstants& consts = {},
                       PenaltyShapeMode mode = PenaltyShapeMode::solved_delta);

}  // namespace polydist

#endif
