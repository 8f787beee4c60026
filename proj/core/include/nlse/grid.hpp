#pragma once

#include <vector>

#include "nlse/errors.hpp"

namespace nlse {

/// Uniform periodic 1-D grid, box-centered: x_i = -L/2 + i*dx, dx = L/n.
/// n must be a power of two, n >= 16.
struct GridSpec {
    int n = 256;
    double length = 20.0;

    GridSpec() = default;
    GridSpec(int n_, double length_);

    double dx() const { return length / n; }
    double x(int i) const { return -0.5 * length + dx() * i; }
    std::vector<double> xs() const;
    /// FFT wavenumber layout: 2π/L * {0,1,…,n/2-1,-n/2,…,-1}.
    std::vector<double> wavenumbers() const;

    bool operator==(const GridSpec& other) const {
        return n == other.n && length == other.length;
    }
};

} // namespace nlse
