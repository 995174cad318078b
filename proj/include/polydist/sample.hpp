#ifndef POLYDIST_SAMPLE_HPP
#define POLYDIST_SAMPLE_HPP

#include <cstddef>
#include <vector>

namespace polydist {

// Observations on the open unit interval. Triangular densities vanish at one
// endpoint whenever the mode is interior, so measurement-rounded 0s and 1s
// would produce -infinity log-likelihoods; ingestion nudges such values
// inward by a small epsilon and keeps count.
class Sample {
public:
    // Validates/nudges raw observations. Values outside [0,1] are rejected,
    // values equal to 0 or 1 are moved to eps / 1-eps.
    static Sample from_raw(std::vector<double> points, double nudge_eps = 1e-12);

    const std::vector<double>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

    // How many observations were moved off the boundary during ingestion.
    std::size_t nudged_count() const noexcept { return nudged_; }

private:
    Sample(std::vector<double> pts, std::size_t nudged)
        : points_(std::move(pts)), nudged_(nudged) {}

    std::vector<double> points_;
    std::size_t nudged_ = 0;
};

}  // namespace polydist

#endif
