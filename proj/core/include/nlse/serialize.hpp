#pragma once

#include <json.hpp>

#include "nlse/coefficients.hpp"
#include "nlse/gauge.hpp"
#include "nlse/invariants.hpp"

namespace nlse {

using json = nlohmann::json;

/// Sampling grid used when a composite TimeFn (expression result) has to be
/// written out; it is emitted as a tabulated function on this grid.
struct SampleWindow {
    double t0 = 0.0;
    double t1 = 1.0;
    int samples = 65;
};

json timefn_to_json(const TimeFn& f, const SampleWindow& window = {});
TimeFn timefn_from_json(const json& j);

json theta_to_json(const SpaceTimeField& theta);
SpaceTimeField theta_from_json(const json& j);

json gauge_to_json(const GaugeElement& g, const SampleWindow& window = {});
GaugeElement gauge_from_json(const json& j);

json coefficients_to_json(const CoefficientVector& c, const SampleWindow& window = {});
CoefficientVector coefficients_from_json(const json& j);

json invariants_to_json(const InvariantVector& iv, const SampleWindow& window = {});
InvariantVector invariants_from_json(const json& j);

/// Rejects keys outside `allowed`; `where` names the object in error messages.
void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where);

/// Canonical compact text form used for every emitted artifact: stable key
/// order, %.17g doubles, newline-terminated. Byte-identical for equal values.
std::string to_artifact_text(const json& j);

} // namespace nlse
