#include "polydist/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polydist {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace

nlohmann::json params_to_json(const PolygonalParams& params) {
    nlohmann::json j;
    j["weights"] = params.weights();
    std::vector<double> modes;
    modes.reserve(params.g());
    for (const auto& m : params.modes()) modes.push_back(m.theta);
    j["modes"] = modes;
    j["normalized"] = params.normalized();
    return j;
}

PolygonalParams params_from_json(const nlohmann::json& j) {
    if (!j.contains("weights") || !j.contains("modes"))
        throw std::invalid_argument("params JSON needs \"weights\" and \"modes\"");
    auto weights = j.at("weights").get<std::vector<double>>();
    auto modes = j.at("modes").get<std::vector<double>>();
    const bool normalized = j.value("normalized", true);
    return PolygonalParams::from_values(std::move(weights), modes, normalized);
}

nlohmann::json fit_result_to_json(const FitResult& fit) {
    nlohmann::json j;
    j["params"] = params_to_json(fit.params);
    j["loglik"] = fit.loglik;
    j["loglik_trace"] = fit.loglik_trace;
    j["iterations"] = fit.iterations;
    j["converged"] = fit.converged;
    j["winning_restart"] = fit.winning_restart;
    j["component_resets"] = fit.component_resets;
    return j;
}

nlohmann::json approx_result_to_json(const ApproxResult& result) {
    nlohmann::json j;
    j["g"] = result.interpolant.panel_count();
    j["weights"] = result.params.weights();
    j["mass"] = result.params.weight_sum();
    if (result.bound)
        j["bound"] = *result.bound;
    else
        j["bound"] = nullptr;
    j["sup_error"] = result.sup_error;
    return j;
}

nlohmann::json selection_result_to_json(const SelectionResult& sel) {
    nlohmann::json per_g = nlohmann::json::array();
    for (std::size_t i = 0; i < sel.fits.size(); ++i) {
        nlohmann::json row;
        row["g"] = i + 1;
        row["loglik"] = sel.fits[i].loglik;
        row["pen_shape"] = std::isnan(sel.penalties[i])
                               ? nlohmann::json(nullptr)
                               : nlohmann::json(sel.penalties[i]);
        row["crit"] = std::isinf(sel.criterion[i]) ? nlohmann::json(nullptr)
                                                   : nlohmann::json(sel.criterion[i]);
        per_g.push_back(row);
    }
    nlohmann::json j;
    j["per_g"] = per_g;
    j["kappa_prime"] = sel.kappa_prime;
    j["chosen_g"] = sel.chosen_g;
    return j;
}

Sample sample_from_json(const nlohmann::json& j, double nudge_eps) {
    if (!j.is_array()) throw std::invalid_argument("sample JSON must be an array");
    return Sample::from_raw(j.get<std::vector<double>>(), nudge_eps);
}

nlohmann::json sample_to_json(const Sample& sample) {
    return nlohmann::json(sample.points());
}

Sample sample_from_csv(std::istream& in, double nudge_eps) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("sample CSV is empty");
    // Tolerate trailing carriage returns from foreign line endings.
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line != "x")
        throw std::invalid_argument("sample CSV must have header \"x\", got \"" + line +
                                    "\"");
    std::vector<double> pts;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(line, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("sample CSV line " + std::to_string(line_no) +
                                        ": not a number: " + line);
        }
        if (pos != line.size())
            throw std::invalid_argument("sample CSV line " + std::to_string(line_no) +
                                        ": trailing characters: " + line);
        pts.push_back(v);
    }
    return Sample::from_raw(std::move(pts), nudge_eps);
}

void sample_to_csv(const Sample& sample, std::ostream& out) {
    out << "x\n";
    for (double x : sample.points()) out << format_double(x) << "\n";
}

Sample load_sample(const std::string& path, double nudge_eps) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open file: " + path);
        return sample_from_csv(in, nudge_eps);
    }
    return sample_from_json(load_json_file(path), nudge_eps);
}

bool is_builtin_density(const std::string& name) {
    return name == "uniform" || name == "quad6" || name == "sine" ||
           name.rfind("tri:", 0) == 0;
}

DensityFn builtin_density(const std::string& name) {
    if (name == "uniform") return DensityFn::uniform();
    if (name == "quad6")
        return DensityFn{[](double x) { return 6.0 * x * (1.0 - x); }, {}};
    if (name == "sine")
        return DensityFn{[](double x) { return 0.5 * M_PI * std::sin(M_PI * x); }, {}};
    if (name.rfind("tri:", 0) == 0) {
        const double theta = std::stod(name.substr(4));
        return DensityFn::from_params(
            PolygonalParams::from_values({1.0}, {theta}, true));
    }
    throw std::invalid_argument("unknown builtin density: " + name);
}

DensityFn parse_density_spec(const std::string& spec) {
    if (is_builtin_density(spec)) return builtin_density(spec);
    return DensityFn::from_params(params_from_json(load_json_file(spec)));
}

ConcaveTarget parse_concave_target(const std::string& spec) {
    if (spec == "uniform")
        return ConcaveTarget{[](double) { return 1.0; }, 0.0};
    if (spec == "quad6")
        return ConcaveTarget{[](double x) { return 6.0 * x * (1.0 - x); }, 12.0};
    if (spec == "sine")
        return ConcaveTarget{[](double x) { return 0.5 * M_PI * std::sin(M_PI * x); },
                             0.5 * M_PI * M_PI * M_PI};
    if (spec.rfind("tri:", 0) == 0) {
        // Piecewise linear, concave, but with a kink: no curvature bound.
        const double theta = std::stod(spec.substr(4));
        auto params = PolygonalParams::from_values({1.0}, {theta}, true);
        return ConcaveTarget{[p = params](double x) { return poly_pdf(x, p); },
                             std::nullopt};
    }
    const nlohmann::json j = load_json_file(spec);
    if (j.contains("x") && j.contains("y")) {
        auto xs = j.at("x").get<std::vector<double>>();
        auto ys = j.at("y").get<std::vector<double>>();
        PiecewiseLinear tab(std::move(xs), std::move(ys));
        return ConcaveTarget{[t = std::move(tab)](double x) { return t(x); },
                             std::nullopt};
    }
    auto params = params_from_json(j);
    return ConcaveTarget{[p = std::move(params)](double x) { return poly_pdf(x, p); },
                         std::nullopt};
}

void selection_path_to_csv(const SelectionPath& path, std::ostream& out) {
    out << "kappa,g_hat\n";
    for (std::size_t j = 0; j < path.kappa.size(); ++j)
        out << format_double(path.kappa[j]) << "," << path.g_hat[j] << "\n";
}

}  // namespace polydist
