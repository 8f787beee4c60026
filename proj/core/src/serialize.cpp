#include "nlse/serialize.hpp"

#include <cmath>

namespace nlse {

namespace {

double require_number(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ConfigError(where + ": missing numeric field '" + key + "'");
    return j.at(key).get<double>();
}

std::vector<double> require_number_array(const json& j, const char* key,
                                         const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ConfigError(where + ": missing array field '" + key + "'");
    std::vector<double> v;
    for (const auto& e : j.at(key)) {
        if (!e.is_number()) throw ConfigError(where + ": non-numeric entry in '" + key + "'");
        v.push_back(e.get<double>());
    }
    return v;
}

} // namespace

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok) throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
}

json timefn_to_json(const TimeFn& f, const SampleWindow& window) {
    switch (f.kind()) {
        case TimeFnKind::constant:
            return {{"kind", "constant"}, {"value", f.constant_value()}};
        case TimeFnKind::linear:
            return {{"kind", "linear"},
                    {"slope", f.linear_slope()},
                    {"intercept", f.linear_intercept()}};
        case TimeFnKind::exponential:
            return {{"kind", "exponential"},
                    {"amplitude", f.exp_amplitude()},
                    {"rate", f.exp_rate()}};
        case TimeFnKind::tabulated:
            return {{"kind", "tabulated"},
                    {"t0", f.table_t0()},
                    {"dt", f.table_dt()},
                    {"values", f.table_values()}};
        case TimeFnKind::composite: {
            const int n = std::max(3, window.samples);
            const double dt = (window.t1 - window.t0) / (n - 1);
            std::vector<double> values(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                values[static_cast<size_t>(i)] = f.value(window.t0 + dt * i);
            return {{"kind", "tabulated"}, {"t0", window.t0}, {"dt", dt}, {"values", values}};
        }
    }
    throw InvalidInputError("unhandled TimeFn kind");
}

TimeFn timefn_from_json(const json& j) {
    if (j.is_number()) return TimeFn::constant(j.get<double>());
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError("TimeFn: expected an object with a 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") {
        reject_unknown_keys(j, {"kind", "value"}, "TimeFn(constant)");
        return TimeFn::constant(require_number(j, "value", "TimeFn(constant)"));
    }
    if (kind == "linear") {
        reject_unknown_keys(j, {"kind", "slope", "intercept"}, "TimeFn(linear)");
        return TimeFn::linear(require_number(j, "slope", "TimeFn(linear)"),
                              require_number(j, "intercept", "TimeFn(linear)"));
    }
    if (kind == "exponential") {
        reject_unknown_keys(j, {"kind", "amplitude", "rate"}, "TimeFn(exponential)");
        return TimeFn::exponential(require_number(j, "amplitude", "TimeFn(exponential)"),
                                   require_number(j, "rate", "TimeFn(exponential)"));
    }
    if (kind == "tabulated") {
        reject_unknown_keys(j, {"kind", "t0", "dt", "values"}, "TimeFn(tabulated)");
        return TimeFn::tabulated(require_number(j, "t0", "TimeFn(tabulated)"),
                                 require_number(j, "dt", "TimeFn(tabulated)"),
                                 require_number_array(j, "values", "TimeFn(tabulated)"));
    }
    throw ConfigError("TimeFn: unknown kind '" + kind + "'");
}

json theta_to_json(const SpaceTimeField& theta) {
    if (theta.is_zero()) return {{"kind", "zero"}};
    if (!theta.descriptor().empty()) return json::parse(theta.descriptor());
    throw InvalidInputError("theta field has no serializable descriptor");
}

SpaceTimeField theta_from_json(const json& j) {
    if (j.is_null()) return SpaceTimeField::zero();
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("theta: expected an object with a 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zero") {
        reject_unknown_keys(j, {"kind"}, "theta(zero)");
        return SpaceTimeField::zero();
    }
    if (kind == "separable") {
        reject_unknown_keys(j, {"kind", "time", "space"}, "theta(separable)");
        if (!j.contains("time") || !j.contains("space"))
            throw ConfigError("theta(separable): requires 'time' and 'space'");
        TimeFn time = timefn_from_json(j.at("time"));
        const json& sp = j.at("space");
        if (!sp.contains("kind")) throw ConfigError("theta space profile: missing 'kind'");
        const std::string sk = sp.at("kind").get<std::string>();
        std::function<double(double)> space;
        if (sk == "cosine") {
            reject_unknown_keys(sp, {"kind", "amplitude", "wavenumber", "phase"},
                                "theta space(cosine)");
            const double a = require_number(sp, "amplitude", "theta space(cosine)");
            const double k = require_number(sp, "wavenumber", "theta space(cosine)");
            const double p = sp.contains("phase")
                                 ? require_number(sp, "phase", "theta space(cosine)")
                                 : 0.0;
            space = [a, k, p](double x) { return a * std::cos(k * x + p); };
        } else if (sk == "polynomial") {
            reject_unknown_keys(sp, {"kind", "coeffs"}, "theta space(polynomial)");
            const std::vector<double> coeffs =
                require_number_array(sp, "coeffs", "theta space(polynomial)");
            space = [coeffs](double x) {
                double acc = 0.0;
                for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
                return acc;
            };
        } else {
            throw ConfigError("theta space profile: unknown kind '" + sk + "'");
        }
        return SpaceTimeField::separable(std::move(space), std::move(time))
            .with_descriptor(j.dump());
    }
    throw ConfigError("theta: unknown kind '" + kind + "'");
}

json gauge_to_json(const GaugeElement& g, const SampleWindow& window) {
    return {{"gamma", timefn_to_json(g.gamma(), window)},
            {"lambda", timefn_to_json(g.lambda(), window)},
            {"theta", theta_to_json(g.theta())}};
}

GaugeElement gauge_from_json(const json& j) {
    reject_unknown_keys(j, {"gamma", "lambda", "theta"}, "gauge element");
    if (!j.contains("gamma") || !j.contains("lambda"))
        throw ConfigError("gauge element: requires 'gamma' and 'lambda'");
    return GaugeElement(timefn_from_json(j.at("gamma")), timefn_from_json(j.at("lambda")),
                        j.contains("theta") ? theta_from_json(j.at("theta"))
                                            : SpaceTimeField::zero());
}

namespace {
constexpr std::array<const char*, 10> kCoeffKeys = {
    "nu1", "nu2", "mu0", "mu1", "mu2", "mu3", "mu4", "mu5", "alpha1", "alpha2"};

std::array<TimeFn CoefficientVector::*, 10> coeff_members() {
    return {&CoefficientVector::nu1,  &CoefficientVector::nu2,  &CoefficientVector::mu0,
            &CoefficientVector::mu1,  &CoefficientVector::mu2,  &CoefficientVector::mu3,
            &CoefficientVector::mu4,  &CoefficientVector::mu5,  &CoefficientVector::alpha1,
            &CoefficientVector::alpha2};
}
} // namespace

json coefficients_to_json(const CoefficientVector& c, const SampleWindow& window) {
    json j;
    const auto members = coeff_members();
    for (size_t i = 0; i < kCoeffKeys.size(); ++i)
        j[kCoeffKeys[i]] = timefn_to_json(c.*(members[i]), window);
    if (!c.warnings.empty()) j["warnings"] = c.warnings;
    return j;
}

CoefficientVector coefficients_from_json(const json& j) {
    reject_unknown_keys(j,
                        {"nu1", "nu2", "mu0", "mu1", "mu2", "mu3", "mu4", "mu5", "alpha1",
                         "alpha2", "warnings"},
                        "coefficient vector");
    CoefficientVector c;
    const auto members = coeff_members();
    for (size_t i = 0; i < kCoeffKeys.size(); ++i) {
        if (!j.contains(kCoeffKeys[i]))
            throw ConfigError(std::string("coefficient vector: missing '") + kCoeffKeys[i] + "'");
        c.*(members[i]) = timefn_from_json(j.at(kCoeffKeys[i]));
    }
    if (j.contains("warnings"))
        for (const auto& w : j.at("warnings")) c.warnings.push_back(w.get<std::string>());
    return c;
}

json invariants_to_json(const InvariantVector& iv, const SampleWindow& window) {
    json j;
    for (size_t k = 0; k < 8; ++k)
        j["iota" + std::to_string(k)] = timefn_to_json(iv.iota[k], window);
    return j;
}

InvariantVector invariants_from_json(const json& j) {
    InvariantVector iv;
    for (size_t k = 0; k < 8; ++k) {
        const std::string key = "iota" + std::to_string(k);
        if (!j.contains(key))
            throw ConfigError("invariant report: missing '" + key + "'");
        iv.iota[k] = timefn_from_json(j.at(key));
    }
    return iv;
}

std::string to_artifact_text(const json& j) { return j.dump(2) + "\n"; }

} // namespace nlse
