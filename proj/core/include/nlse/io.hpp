#pragma once

#include <string>

#include "nlse/evolution.hpp"
#include "nlse/serialize.hpp"

namespace nlse {

/// CSV snapshot, columns x,re,im; the grid is reconstructed from the x
/// column on import.
std::string wavefunction_to_csv(const WaveFunction& psi);
WaveFunction wavefunction_from_csv(const std::string& text);

/// JSON snapshot with explicit grid header:
/// {"grid":{"n":..,"length":..},"time":..,"values":[[re,im],...]}.
json wavefunction_to_json(const WaveFunction& psi);
WaveFunction wavefunction_from_json(const json& j);

/// Fixed column order: t, norm, mean_x, mean_p, continuity_resid,
/// ehrenfest1_resid.
std::string trajectory_to_csv(const TrajectoryRecord& record);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// %.17g, the round-trip-exact text form used in CSV artifacts.
std::string format_double(double v);

} // namespace nlse
