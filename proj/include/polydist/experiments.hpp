#ifndef POLYDIST_EXPERIMENTS_HPP
#define POLYDIST_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polydist/polygonal.hpp"

namespace polydist {

enum class ExperimentKind { consistency, hellinger, selection, approx_report };
enum class TableFormat { csv, json };

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::consistency;
    std::optional<PolygonalParams> truth;  // generating density, where needed
    std::vector<std::size_t> n_grid = {200, 2000, 20000};
    std::size_t replicates = 50;
    std::size_t gamma = 5;                        // selection only
    std::vector<std::size_t> g_grid = {2, 4, 8, 16};  // approx-report only
    std::uint64_t master_seed = 20170117;
    std::string output_path;
    TableFormat format = TableFormat::csv;

    // Fit knobs shared by the fitting experiments.
    int restarts = 10;
    int max_iterations = 500;
    double rel_tolerance = 1e-8;

    // Record wall times; off by default so equal (config, seed) pairs
    // produce byte-identical output.
    bool timings = false;
};

// One metric observation. Summary rows use replicate = -1; rows that do not
// depend on n (or whose n column carries another index, as in approx-report
// where it holds g) document that in the metric name.
struct ReplicateRecord {
    std::string experiment;
    long long replicate = 0;
    long long n = 0;
    std::string metric;
    double value = 0.0;
    double ms = 0.0;
};

using Table = std::vector<ReplicateRecord>;

// Repeated-sampling check of estimator consistency: per (n, replicate),
// sample from the truth, fit with the true g, and record the permutation
// distance to the truth plus the fit log-likelihood. Summary rows carry the
// median and 90th percentile distance per n.
Table run_consistency(const ExperimentConfig& cfg);

// Hellinger concentration: per (n, replicate) record H(truth, fit); summary
// rows carry exceedance fractions at thresholds {0.05, 0.1, 0.2} and the
// mean per n, plus the least-squares slope of log exceedance against n for
// thresholds with nonzero exceedance everywhere.
Table run_hellinger(const ExperimentConfig& cfg);

// Penalized order selection: per (n, replicate) fit g = 1..gamma, calibrate
// the penalty constant by dimension jump, and record the selected g and the
// squared Hellinger distance of the selected fit. Summaries: selection
// frequencies per g and mean squared Hellinger per n. Calibration failures
// skip the replicate with a recorded reason.
Table run_selection(const ExperimentConfig& cfg);

// Approximation quality report over the builtin concave targets
// (6x(1-x), the flat density, and (pi/2)sin(pi x)): per g, the measured sup
// error, its bound, the mass defect |sum(weights) - 1|, and the KL divergence
// to the squared-polygonal density. Verifies that the error respects the
// bound and that both shrink as g grows. The n column carries g.
Table run_approx_report(const ExperimentConfig& cfg);

Table run_experiment(const ExperimentConfig& cfg);

// Fixed schema "experiment,replicate,n,metric,value,ms", one metric per row,
// rows in canonical (n, replicate, metric) order.
void write_table_csv(const Table& table, std::ostream& out);
void write_table_json(const Table& table, std::ostream& out);

}  // namespace polydist

#endif
