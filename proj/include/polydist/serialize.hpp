#ifndef POLYDIST_SERIALIZE_HPP
#define POLYDIST_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "polydist/approx.hpp"
#include "polydist/divergence.hpp"
#include "polydist/em.hpp"
#include "polydist/model_select.hpp"
#include "polydist/polygonal.hpp"
#include "polydist/sample.hpp"

namespace polydist {

nlohmann::json params_to_json(const PolygonalParams& params);
PolygonalParams params_from_json(const nlohmann::json& j);

nlohmann::json fit_result_to_json(const FitResult& fit);

// {"g":..., "weights":[...], "mass":..., "bound":..., "sup_error":...}
// where g is the number of interpolation panels (the mixture has g+1
// components) and bound is null when sup|h''| is unknown.
nlohmann::json approx_result_to_json(const ApproxResult& result);

nlohmann::json selection_result_to_json(const SelectionResult& sel);

// Samples are stored either as a JSON array of reals or as single-column CSV
// with header "x". Readers apply the standard boundary nudge.
Sample sample_from_json(const nlohmann::json& j, double nudge_eps = 1e-12);
nlohmann::json sample_to_json(const Sample& sample);
Sample sample_from_csv(std::istream& in, double nudge_eps = 1e-12);
void sample_to_csv(const Sample& sample, std::ostream& out);

// Reads a sample from a path, dispatching on the ".csv" extension (anything
// else is parsed as JSON).
Sample load_sample(const std::string& path, double nudge_eps = 1e-12);

// Named density builtins: "uniform", "tri:<theta>", "quad6" (6x(1-x)),
// "sine" ((pi/2) sin(pi x)).
bool is_builtin_density(const std::string& name);
DensityFn builtin_density(const std::string& name);

// A density argument is either a builtin name or a path to PolygonalParams
// JSON.
DensityFn parse_density_spec(const std::string& spec);

// A concave approximation target: a builtin name, a PolygonalParams JSON
// path, or a tabulated function {"x":[...],"y":[...]} interpolated linearly.
// Builtins carry their known sup|h''|.
ConcaveTarget parse_concave_target(const std::string& spec);

// ghat-vs-kappa path as CSV with header "kappa,g_hat".
void selection_path_to_csv(const SelectionPath& path, std::ostream& out);

}  // namespace polydist

#endif
