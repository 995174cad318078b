#ifndef POLYDIST_EM_HPP
#define POLYDIST_EM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polydist/polygonal.hpp"
#include "polydist/sample.hpp"

namespace polydist {

enum class InitStrategy { quantile, random };

struct FitConfig {
    std::size_t g = 1;
    int max_iterations = 500;
    double rel_tolerance = 1e-8;  // relative log-likelihood change
    int restarts = 10;
    InitStrategy init = InitStrategy::quantile;
    std::uint64_t seed = 0;
};

struct FitResult {
    PolygonalParams params;
    double loglik = 0.0;
    std::vector<double> loglik_trace;
    int iterations = 0;
    bool converged = false;
    int winning_restart = 0;
    int component_resets = 0;
};

// Posterior component membership probabilities, one row per observation.
class Responsibilities {
public:
    Responsibilities(std::size_t n, std::size_t g)
        : n_(n), g_(g), data_(n * g, 0.0) {}

    double& at(std::size_t j, std::size_t i) { return data_[j * g_ + i]; }
    double at(std::size_t j, std::size_t i) const { return data_[j * g_ + i]; }
    std::size_t rows() const noexcept { return n_; }
    std::size_t cols() const noexcept { return g_; }

    // Total responsibility of component i across observations.
    double column_sum(std::size_t i) const;

private:
    std::size_t n_, g_;
    std::vector<double> data_;
};

// Posterior membership of each observation. Requires positive mixture
// density at every point; offending observations are reported by index.
Responsibilities e_step(const PolygonalParams& params, const Sample& sample);

// Exact weighted maximum-likelihood mode of a single triangular density.
// On each open interval between data points the objective's only stationary
// point is a minimum, so the maximum lies at a data point or an endpoint;
// the candidate set {0,1} plus the positively weighted points is evaluated
// via prefix sums in O(n log n). Ties go to the smallest candidate.
double m_step_mode(const std::vector<double>& points,
                   const std::vector<double>& weights);

// One EM run from an explicit starting point (no restarts). Exposed for
// tests and for callers that manage their own initialization.
FitResult em_run(const Sample& sample, const PolygonalParams& init,
                 const FitConfig& cfg);

// Maximum-likelihood fit: the best of cfg.restarts EM runs. The first run
// uses cfg.init (quantile-spaced modes by default), the remaining runs use
// random initializations derived from cfg.seed.
FitResult em_fit(const Sample& sample, const FitConfig& cfg);

// Distance between parameter vectors modulo component relabeling: the
// minimum over permutations of the Euclidean norm of the stacked weight and
// mode differences. Exhaustive for g <= 7, optimal assignment above that
// (exact, because the squared norm separates over matched pairs).
double permutation_distance(const PolygonalParams& a, const PolygonalParams& b);

}  // namespace polydist

#endif
