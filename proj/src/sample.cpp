#include "polydist/sample.hpp"

#include <stdexcept>
#include <string>

namespace polydist {

Sample Sample::from_raw(std::vector<double> points, double nudge_eps) {
    if (points.empty()) throw std::invalid_argument("sample: no observations");
    if (!(nudge_eps > 0.0 && nudge_eps < 0.5))
        throw std::invalid_argument("sample: nudge epsilon must be in (0, 0.5)");
    std::size_t nudged = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        double& x = points[j];
        if (!(x >= 0.0 && x <= 1.0))
            throw std::invalid_argument("sample: observation " + std::to_string(j) +
                                        " outside [0,1]: " + std::to_string(x));
        if (x == 0.0) {
            x = nudge_eps;
            ++nudged;
        } else if (x == 1.0) {
            x = 1.0 - nudge_eps;
            ++nudged;
        }
    }
    return Sample(std::move(points), nudged);
}

}  // namespace polydist
