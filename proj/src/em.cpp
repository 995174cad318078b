#include "polydist/em.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "polydist/errors.hpp"
#include "polydist/rng.hpp"

namespace polydist {

namespace {

constexpr double kWeightFloor = 1e-6;
constexpr double kDeadComponentTol = 1e-12;
constexpr double kTieTol = 1e-12;

void normalize_exact(std::vector<double>& w) {
    double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& wi : w) wi /= s;
    s = std::accumulate(w.begin(), w.end(), 0.0);
    w.back() += 1.0 - s;
    if (w.back() < 0.0) w.back() = 0.0;
}

// Maximizer of sum(c_i log w_i) over the simplex restricted to w_i >= floor:
// clamp the small coordinates and rescale the rest (water filling). Keeping
// every iterate inside the restricted simplex preserves EM monotonicity.
std::vector<double> floor_simplex(std::vector<double> w, double floor,
                                  bool* any_clamped) {
    const std::size_t g = w.size();
    if (floor * static_cast<double>(g) >= 1.0)
        throw std::invalid_argument("floor_simplex: floor too large for dimension");
    normalize_exact(w);
    std::vector<char> clamped(g, 0);
    for (;;) {
        double free_mass = 1.0, free_sum = 0.0;
        for (std::size_t i = 0; i < g; ++i) {
            if (clamped[i])
                free_mass -= floor;
            else
                free_sum += w[i];
        }
        bool changed = false;
        for (std::size_t i = 0; i < g; ++i) {
            if (clamped[i]) continue;
            const double scaled = free_sum > 0.0 ? w[i] * free_mass / free_sum : 0.0;
            if (scaled < floor) {
                clamped[i] = 1;
                changed = true;
            }
        }
        if (!changed) {
            std::vector<double> out(g);
            bool any = false;
            for (std::size_t i = 0; i < g; ++i) {
                if (clamped[i]) {
                    out[i] = floor;
                    any = true;
                } else {
                    out[i] = w[i] * free_mass / free_sum;
                }
            }
            if (any_clamped) *any_clamped = any;
            normalize_exact(out);
            return out;
        }
    }
}

// Responsibilities plus the log-likelihood of the generating parameters,
// sharing one pass over the component densities.
double e_step_with_loglik(const PolygonalParams& params, const Sample& sample,
                          Responsibilities& resp) {
    const auto& pts = sample.points();
    const std::size_t n = pts.size(), g = params.g();
    double loglik = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double denom = 0.0;
        for (std::size_t i = 0; i < g; ++i) {
            const double v = params.weights()[i] * tri_pdf(pts[j], params.modes()[i]);
            resp.at(j, i) = v;
            denom += v;
        }
        if (!(denom > 0.0))
            throw NumericError("e_step: zero mixture density at observation " +
                               std::to_string(j) + " (x = " + std::to_string(pts[j]) +
                               ")");
        for (std::size_t i = 0; i < g; ++i) resp.at(j, i) /= denom;
        loglik += std::log(denom);
    }
    return loglik;
}

// Exact weighted-ML triangular mode over pre-sorted points. Prefix sums give
// each candidate's objective in O(1); endpoints use the one-sided densities.
// The log(2) * total_weight constant common to all candidates is dropped.
double m_step_mode_sorted(const std::vector<double>& xs, const std::vector<double>& ws) {
    const std::size_t m = xs.size();
    std::vector<double> pw(m + 1, 0.0), plx(m + 1, 0.0), pl1(m + 1, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        pw[j + 1] = pw[j] + ws[j];
        plx[j + 1] = plx[j] + ws[j] * std::log(xs[j]);
        pl1[j + 1] = pl1[j] + ws[j] * std::log1p(-xs[j]);
    }
    const double total = pw[m];
    if (!(total > 0.0)) throw std::invalid_argument("m_step_mode: empty effective sample");

    double best_theta = 0.0;
    double best_q = pl1[m];  // theta = 0: density 2(1-x) for every point
    auto consider = [&](double theta, double q) {
        if (q > best_q + kTieTol) {
            best_q = q;
            best_theta = theta;
        }
    };
    for (std::size_t k = 0; k < m; ++k) {
        if (ws[k] <= 0.0) continue;
        if (k > 0 && xs[k] == xs[k - 1]) continue;  // ties: evaluate once
        const double theta = xs[k];
        const double below = pw[k];
        const double above = total - below;
        const double q = plx[k] - below * std::log(theta) + (pl1[m] - pl1[k]) -
                         above * std::log1p(-theta);
        consider(theta, q);
    }
    consider(1.0, plx[m]);  // theta = 1: density 2x for every point
    return best_theta;
}

PolygonalParams quantile_init(const Sample& sample, std::size_t g) {
    std::vector<double> sorted(sample.points());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    std::vector<double> modes(g);
    for (std::size_t i = 1; i <= g; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(g + 1);
        const auto idx = static_cast<std::size_t>(
            std::llround(p * static_cast<double>(n - 1)));
        modes[i - 1] = sorted[std::min(idx, n - 1)];
    }
    std::vector<double> weights(g, 1.0 / static_cast<double>(g));
    normalize_exact(weights);
    return PolygonalParams::from_values(std::move(weights), modes, true);
}

PolygonalParams random_init(std::size_t g, Rng& rng) {
    std::vector<double> modes(g);
    for (auto& t : modes) t = rng.uniform();
    auto weights = floor_simplex(rng.simplex_flat(g), kWeightFloor, nullptr);
    return PolygonalParams::from_values(std::move(weights), modes, true);
}

}  // namespace

double Responsibilities::column_sum(std::size_t i) const {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += data_[j * g_ + i];
    return s;
}

Responsibilities e_step(const PolygonalParams& params, const Sample& sample) {
    if (!params.normalized())
        throw std::invalid_argument("e_step: params must be normalized");
    Responsibilities resp(sample.size(), params.g());
    e_step_with_loglik(params, sample, resp);
    return resp;
}

double m_step_mode(const std::vector<double>& points, const std::vector<double>& weights) {
    if (points.size() != weights.size())
        throw std::invalid_argument("m_step_mode: points/weights size mismatch");
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    std::vector<double> xs(points.size()), ws(points.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        xs[k] = points[order[k]];
        ws[k] = weights[order[k]];
        if (!(xs[k] > 0.0 && xs[k] < 1.0))
            throw std::domain_error("m_step_mode: points must lie strictly in (0,1)");
        if (!(ws[k] >= 0.0))
            throw std::invalid_argument("m_step_mode: negative weight");
    }
    return m_step_mode_sorted(xs, ws);
}

FitResult em_run(const Sample& sample, const PolygonalParams& init, const FitConfig& cfg) {
    const std::size_t g = init.g();
    const std::size_t n = sample.size();
    if (n < g) throw std::invalid_argument("em_run: need at least g observations");
    if (!(cfg.rel_tolerance > 0.0))
        throw std::invalid_argument("em_run: tolerance must be positive");

    // Sort once; M-steps read responsibilities through the permutation.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& pts = sample.points();
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    std::vector<double> xs(n);
    for (std::size_t k = 0; k < n; ++k) xs[k] = pts[order[k]];

    Rng reset_rng(derive_seed(cfg.seed, {0xE5E7u}));

    FitResult result{init, 0.0, {}, 0, false, 0, 0};
    PolygonalParams params = init;
    Responsibilities resp(n, g);
    double loglik = e_step_with_loglik(params, sample, resp);
    result.loglik_trace.push_back(loglik);

    std::vector<double> col_weights(n);
    bool floored = false;
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        // M-step: closed-form simplex weights (floored against component
        // death) and the exact per-component mode update.
        std::vector<double> raw(g);
        std::vector<double> modes(g);
        for (std::size_t i = 0; i < g; ++i) {
            const double mass = resp.column_sum(i);
            if (mass < kDeadComponentTol) {
                modes[i] = reset_rng.uniform();
                raw[i] = kWeightFloor;
                ++result.component_resets;
                continue;
            }
            raw[i] = mass / static_cast<double>(n);
            for (std::size_t k = 0; k < n; ++k) col_weights[k] = resp.at(order[k], i);
            modes[i] = m_step_mode_sorted(xs, col_weights);
        }
        auto weights = floor_simplex(std::move(raw), kWeightFloor, &floored);
        params = PolygonalParams::from_values(std::move(weights), modes, true);

        const double prev = loglik;
        loglik = e_step_with_loglik(params, sample, resp);
        result.loglik_trace.push_back(loglik);
        result.iterations = iter;
        if (std::abs(loglik - prev) <= cfg.rel_tolerance * (1.0 + std::abs(loglik))) {
            result.converged = true;
            break;
        }
    }

    // Report unfloored weights when the floor was active at the end: a plain
    // weight update from the final responsibilities, still an ascent step.
    if (floored) {
        std::vector<double> raw(g);
        for (std::size_t i = 0; i < g; ++i)
            raw[i] = resp.column_sum(i) / static_cast<double>(n);
        normalize_exact(raw);
        std::vector<double> modes(g);
        for (std::size_t i = 0; i < g; ++i) modes[i] = params.mode_value(i);
        params = PolygonalParams::from_values(std::move(raw), modes, true);
        loglik = e_step_with_loglik(params, sample, resp);
        result.loglik_trace.push_back(loglik);
    }

    result.params = params;
    result.loglik = loglik;
    return result;
}

FitResult em_fit(const Sample& sample, const FitConfig& cfg) {
    if (cfg.g < 1) throw std::invalid_argument("em_fit: g must be >= 1");
    if (sample.size() < cfg.g)
        throw std::invalid_argument("em_fit: need at least g observations");
    if (cfg.restarts < 1) throw std::invalid_argument("em_fit: restarts must be >= 1");

    FitResult best;
    bool have_best = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        FitConfig run_cfg = cfg;
        run_cfg.seed = derive_seed(cfg.seed, {static_cast<std::uint64_t>(r)});
        Rng init_rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(r), 7u}));
        const bool use_quantile = (r == 0 && cfg.init == InitStrategy::quantile);
        PolygonalParams init =
            use_quantile ? quantile_init(sample, cfg.g) : random_init(cfg.g, init_rng);
        FitResult fit = em_run(sample, init, run_cfg);
        fit.winning_restart = r;
        if (!have_best || fit.loglik > best.loglik) {
            best = std::move(fit);
            have_best = true;
        }
    }
    return best;
}

namespace {

// Hungarian algorithm with potentials, O(g^3); exact minimum-cost matching.
double assignment_min_cost(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = match[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }
    double total = 0.0;
    for (int j = 1; j <= n; ++j) total += cost[match[j] - 1][j - 1];
    return total;
}

}  // namespace

double permutation_distance(const PolygonalParams& a, const PolygonalParams& b) {
    const std::size_t g = a.g();
    if (b.g() != g)
        throw std::invalid_argument("permutation_distance: component counts differ");
    std::vector<std::vector<double>> cost(g, std::vector<double>(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            const double dw = a.weights()[i] - b.weights()[j];
            const double dt = a.mode_value(i) - b.mode_value(j);
            cost[i][j] = dw * dw + dt * dt;
        }
    double best;
    if (g <= 7) {
        std::vector<std::size_t> perm(g);
        std::iota(perm.begin(), perm.end(), 0);
        best = std::numeric_limits<double>::infinity();
        do {
            double total = 0.0;
            for (std::size_t i = 0; i < g; ++i) total += cost[i][perm[i]];
            best = std::min(best, total);
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        best = assignment_min_cost(cost);
    }
    return std::sqrt(best);
}

}  // namespace polydist
