#include "polydist/model_select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "polydist/errors.hpp"

namespace polydist {

namespace {

const double kFourthRootOf2 = std::pow(2.0, 0.25);

void check_consts(const PenaltyConstants& consts) {
    if (!(consts.c1 > 0.0 && consts.c2 > 0.0 && consts.c3 > 0.0 && consts.kappa > 0.0))
        throw std::invalid_argument("penalty constants must be positive");
}

}  // namespace

double PenaltyConstants::c5() const {
    return 4.0 / std::pow(3.0, 4.0 / 3.0) * std::sqrt(kFourthRootOf2 * c3 + 1.0);
}

double c4(std::size_t g) {
    if (g < 1) throw std::invalid_argument("c4: g must be >= 1");
    const double gd = static_cast<double>(g);
    return std::log(gd) + gd * std::log(2.0 * M_PI * std::exp(1.0)) / 2.0;
}

double entropy_bound_concave(double epsilon, const PenaltyConstants& consts) {
    check_consts(consts);
    if (!(epsilon > 0.0))
        throw std::invalid_argument("entropy_bound_concave: epsilon must be positive");
    return kFourthRootOf2 * consts.c2 / std::sqrt(epsilon);
}

double entropy_bound_mixture(std::size_t g, double epsilon,
                             const PenaltyConstants& consts) {
    check_consts(consts);
    if (g < 1) throw std::invalid_argument("entropy_bound_mixture: g must be >= 1");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("entropy_bound_mixture: epsilon must be positive");
    const double gd = static_cast<double>(g);
    return gd * (kFourthRootOf2 * consts.c3 + 1.0) * std::sqrt(3.0 / epsilon) + c4(g);
}

double j_concave(double delta, const PenaltyConstants& consts) {
    check_consts(consts);
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("j_concave: delta must lie in (0,1]");
    const double integral_term =
        std::pow(2.0, 17.0 / 8.0) * std::sqrt(consts.c2) / 3.0 * std::pow(delta, 0.75);
    return std::max(delta, integral_term);
}

double j_mixture(double delta, std::size_t g, const PenaltyConstants& consts) {
    check_consts(consts);
    if (g < 1) throw std::invalid_argument("j_mixture: g must be >= 1");
    if (!(delta > 0.0)) throw std::invalid_argument("j_mixture: delta must be positive");
    const double gd = static_cast<double>(g);
    return 4.0 / std::pow(3.0, 4.0 / 3.0) *
               std::sqrt(gd * (kFourthRootOf2 * consts.c3 + 1.0)) *
               std::pow(delta, 0.75) +
           delta * std::sqrt(c4(g));
}

double solve_delta_g(std::size_t n, std::size_t g, const PenaltyConstants& consts) {
    check_consts(consts);
    if (n < 1 || g < 1) throw std::invalid_argument("solve_delta_g: need n, g >= 1");
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    auto residual = [&](double d) { return sqrt_n * d * d - j_mixture(d, g, consts); };
    double lo = 1e-12, hi = 1e3;
    if (!(residual(lo) < 0.0 && residual(hi) > 0.0))
        throw NumericError("solve_delta_g: bracket failure (n = " + std::to_string(n) +
                           ", g = " + std::to_string(g) + ", residuals " +
                           std::to_string(residual(lo)) + " / " +
                           std::to_string(residual(hi)) + ")");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) <= 1e-12 * hi) break;
    }
    return 0.5 * (lo + hi);
}

double paper_delta_g(std::size_t n, std::size_t g, const PenaltyConstants& consts) {
    check_consts(consts);
    if (n < 1 || g < 1) throw std::invalid_argument("paper_delta_g: need n, g >= 1");
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double root_c4 = std::sqrt(c4(g));
    if (!(sqrt_n > root_c4))
        throw std::invalid_argument("paper_delta_g: sqrt(n) = " + std::to_string(sqrt_n) +
                                    " must exceed sqrt(c4(g)) = " +
                                    std::to_string(root_c4));
    const double denom = std::pow(sqrt_n - root_c4, 3.0);
    return std::pow(consts.c5() * std::sqrt(static_cast<double>(g)) / denom, 4.0 / 3.0);
}

double pen_shape(std::size_t g, std::size_t n, const PenaltyConstants& consts,
                 PenaltyShapeMode mode) {
    check_consts(consts);
    if (n < 1 || g < 1) throw std::invalid_argument("pen_shape: need n, g >= 1");
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double root_c4 = std::sqrt(c4(g));
    if (!(sqrt_n > root_c4))
        throw std::invalid_argument("pen_shape: sqrt(n) must exceed sqrt(c4(g))");
    const double gd = static_cast<double>(g);
    double first;
    if (mode == PenaltyShapeMode::solved_delta) {
        const double d = solve_delta_g(n, g, consts);
        first = d * d;
    } else {
        first = std::pow(std::sqrt(gd) / std::pow(sqrt_n - root_c4, 3.0), 8.0 / 3.0);
    }
    return first + gd / static_cast<double>(n);
}

double sigma_gamma(std::size_t gamma) {
    if (gamma < 1) throw std::invalid_argument("sigma_gamma: gamma must be >= 1");
    const double gd = static_cast<double>(gamma);
    return (std::exp(-1.0) - std::exp(-gd - 1.0)) / (1.0 - std::exp(-1.0));
}

namespace {

// Criterion values for a fixed penalty vector; +inf marks excluded models.
std::size_t argmin_criterion(const std::vector<double>& neg_avg_loglik,
                             const std::vector<double>& shapes, double kappa) {
    std::size_t best_g = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (std::isnan(shapes[i])) continue;
        const double crit = neg_avg_loglik[i] + kappa * shapes[i];
        if (crit < best) {
            best = crit;
            best_g = i + 1;
        }
    }
    if (best_g == 0) throw NumericError("model selection: no admissible model");
    return best_g;
}

struct CriterionInputs {
    std::vector<double> neg_avg_loglik;
    std::vector<double> shapes;  // NaN where the penalty precondition fails
};

CriterionInputs criterion_inputs(const std::vector<FitResult>& fits, std::size_t n,
                                 const PenaltyConstants& consts, PenaltyShapeMode mode) {
    if (fits.empty()) throw std::invalid_argument("model selection: no fits");
    CriterionInputs in;
    in.neg_avg_loglik.reserve(fits.size());
    in.shapes.reserve(fits.size());
    for (std::size_t i = 0; i < fits.size(); ++i) {
        if (fits[i].params.g() != i + 1)
            throw std::invalid_argument(
                "model selection: fits must be ordered g = 1..gamma");
        in.neg_avg_loglik.push_back(-fits[i].loglik / static_cast<double>(n));
        double shape;
        try {
            shape = pen_shape(i + 1, n, consts, mode);
        } catch (const std::invalid_argument&) {
            shape = std::numeric_limits<double>::quiet_NaN();
        }
        in.shapes.push_back(shape);
    }
    return in;
}

}  // namespace

SelectionResult select_g(const std::vector<FitResult>& fits, std::size_t n,
                         double kappa_prime, const PenaltyConstants& consts,
                         PenaltyShapeMode mode) {
    if (!(kappa_prime >= 0.0))
        throw std::invalid_argument("select_g: kappa_prime must be nonnegative");
    const auto in = criterion_inputs(fits, n, consts, mode);
    SelectionResult sel;
    sel.fits = fits;
    sel.penalties = in.shapes;
    sel.kappa_prime = kappa_prime;
    sel.criterion.resize(fits.size());
    for (std::size_t i = 0; i < fits.size(); ++i)
        sel.criterion[i] = std::isnan(in.shapes[i])
                               ? std::numeric_limits<double>::infinity()
                               : in.neg_avg_loglik[i] + kappa_prime * in.shapes[i];
    sel.chosen_g = argmin_criterion(in.neg_avg_loglik, in.shapes, kappa_prime);
    return sel;
}

SelectionPath selection_path(const std::vector<FitResult>& fits, std::size_t n,
                             const PenaltyConstants& consts, PenaltyShapeMode mode,
                             double kappa_lo, double kappa_hi, std::size_t grid_size) {
    if (!(kappa_lo > 0.0 && kappa_hi > kappa_lo && grid_size >= 2))
        throw std::invalid_argument("selection_path: bad kappa grid");
    const auto in = criterion_inputs(fits, n, consts, mode);
    SelectionPath path;
    path.kappa.reserve(grid_size);
    path.g_hat.reserve(grid_size);
    const double log_lo = std::log(kappa_lo);
    const double log_hi = std::log(kappa_hi);
    for (std::size_t j = 0; j < grid_size; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(grid_size - 1);
        const double kappa = std::exp(log_lo + t * (log_hi - log_lo));
        path.kappa.push_back(kappa);
        path.g_hat.push_back(argmin_criterion(in.neg_avg_loglik, in.shapes, kappa));
    }
    return path;
}

double calibrate_kappa(const std::vector<FitResult>& fits, std::size_t n,
                       const PenaltyConstants& consts, PenaltyShapeMode mode) {
    const SelectionPath path = selection_path(fits, n, consts, mode);
    std::size_t best_drop = 0;
    double kappa_at_drop = 0.0;
    for (std::size_t j = 0; j + 1 < path.kappa.size(); ++j) {
        const std::size_t before = path.g_hat[j];
        const std::size_t after = path.g_hat[j + 1];
        if (after < before && before - after > best_drop) {
            best_drop = before - after;
            kappa_at_drop = path.kappa[j + 1];
        }
    }
    if (best_drop == 0)
        throw NumericError(
            "calibrate_kappa: selected size never drops over the kappa grid; "
            "increase gamma or the sample size");
    return 2.0 * kappa_at_drop;
}

}  // namespace polydist
