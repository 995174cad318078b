#include "polydist/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace polydist {

double Rng::exponential() { return -std::log1p(-uniform()); }

std::size_t Rng::categorical(const std::vector<double>& weights) {
    if (weights.empty()) throw std::invalid_argument("categorical: empty weights");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("categorical: negative weight");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("categorical: zero total weight");
    const double u = uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

std::vector<double> Rng::simplex_flat(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("simplex_flat: zero dimension");
    std::vector<double> w(dim);
    double total = 0.0;
    for (auto& wi : w) {
        wi = exponential();
        total += wi;
    }
    for (auto& wi : w) wi /= total;
    return w;
}

}  // namespace polydist
