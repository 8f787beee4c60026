#include <doctest.h>

#include <sstream>

#include "nlse/io.hpp"

using nlse::GridSpec;
using nlse::WaveFunction;

TEST_CASE("wavefunction CSV round trip") {
    const GridSpec g(64, 16.0);
    const WaveFunction psi = nlse::gaussian_packet(g, 0.4, 1.1, -0.6).normalized();
    const std::string csv = nlse::wavefunction_to_csv(psi);
    CHECK(csv.rfind("x,re,im\n", 0) == 0);
    const WaveFunction back = nlse::wavefunction_from_csv(csv);
    CHECK(back.grid() == psi.grid());
    for (int i = 0; i < g.n; ++i)
        CHECK(std::abs(back.values()[static_cast<size_t>(i)] -
                       psi.values()[static_cast<size_t>(i)]) == 0.0);
}

TEST_CASE("wavefunction JSON round trip with grid header") {
    const GridSpec g(32, 10.0);
    const WaveFunction psi = nlse::plane_wave(g, 2);
    const nlse::json j = nlse::wavefunction_to_json(psi);
    CHECK(j.at("grid").at("n") == 32);
    CHECK(j.at("grid").at("length") == 10.0);
    const WaveFunction back = nlse::wavefunction_from_json(j);
    for (int i = 0; i < g.n; ++i)
        CHECK(back.values()[static_cast<size_t>(i)] == psi.values()[static_cast<size_t>(i)]);
    // emitted text re-parses to the same artifact
    CHECK(nlse::wavefunction_to_json(back) == j);
}

TEST_CASE("trajectory CSV has the documented column order") {
    nlse::TrajectoryRecord rec;
    nlse::TrajectorySample s{};
    s.t = 0.5;
    s.norm = 1.0;
    s.mean_x = -0.25;
    s.mean_p = 2.0;
    s.continuity_resid = 1e-4;
    s.ehrenfest1_resid = 2e-7;
    rec.samples.push_back(s);
    const std::string csv = nlse::trajectory_to_csv(rec);
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "t,norm,mean_x,mean_p,continuity_resid,ehrenfest1_resid");
    CHECK(row == "0.5,1,-0.25,2,0.0001,1.9999999999999999e-07");
}

TEST_CASE("malformed CSV is a config error") {
    CHECK_THROWS_AS((void)nlse::wavefunction_from_csv("x,re,im\n1.0,2.0\n"),
                    nlse::ConfigError);
    CHECK_THROWS_AS((void)nlse::wavefunction_from_csv(""), nlse::ConfigError);
}
