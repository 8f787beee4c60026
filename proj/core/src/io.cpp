#include "nlse/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nlse {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string wavefunction_to_csv(const WaveFunction& psi) {
    std::string out = "x,re,im\n";
    for (int i = 0; i < psi.grid().n; ++i) {
        const cplx v = psi.values()[static_cast<size_t>(i)];
        out += format_double(psi.grid().x(i));
        out += ',';
        out += format_double(v.real());
        out += ',';
        out += format_double(v.imag());
        out += '\n';
    }
    return out;
}

WaveFunction wavefunction_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty wavefunction CSV");
    std::vector<double> xs;
    std::vector<cplx> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double x, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &re, &im) != 3)
            throw ConfigError("malformed wavefunction CSV row: " + line);
        xs.push_back(x);
        values.emplace_back(re, im);
    }
    if (xs.size() < 2) throw ConfigError("wavefunction CSV needs at least 2 rows");
    const double dx = xs[1] - xs[0];
    const GridSpec grid(static_cast<int>(xs.size()), dx * static_cast<double>(xs.size()));
    return WaveFunction(grid, std::move(values));
}

json wavefunction_to_json(const WaveFunction& psi) {
    json values = json::array();
    for (const cplx& v : psi.values()) values.push_back({v.real(), v.imag()});
    return {{"grid", {{"n", psi.grid().n}, {"length", psi.grid().length}}},
            {"time", psi.time_tag()},
            {"values", values}};
}

WaveFunction wavefunction_from_json(const json& j) {
    reject_unknown_keys(j, {"grid", "time", "values"}, "wavefunction");
    if (!j.contains("grid") || !j.contains("values"))
        throw ConfigError("wavefunction: requires 'grid' and 'values'");
    const json& g = j.at("grid");
    reject_unknown_keys(g, {"n", "length"}, "wavefunction grid");
    const GridSpec grid(g.at("n").get<int>(), g.at("length").get<double>());
    std::vector<cplx> values;
    for (const auto& e : j.at("values")) {
        if (!e.is_array() || e.size() != 2)
            throw ConfigError("wavefunction values must be [re, im] pairs");
        values.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
    const double t = j.contains("time") ? j.at("time").get<double>() : 0.0;
    return WaveFunction(grid, std::move(values), t);
}

std::string trajectory_to_csv(const TrajectoryRecord& record) {
    std::string out = "t,norm,mean_x,mean_p,continuity_resid,ehrenfest1_resid\n";
    for (const TrajectorySample& s : record.samples) {
        out += format_double(s.t);
        out += ',';
        out += format_double(s.norm);
        out += ',';
        out += format_double(s.mean_x);
        out += ',';
        out += format_double(s.mean_p);
        out += ',';
        out += format_double(s.continuity_resid);
        out += ',';
        out += format_double(s.ehrenfest1_resid);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << content;
    if (!out) throw ConfigError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace nlse
