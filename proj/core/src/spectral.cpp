#include "nlse/spectral.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <unordered_map>

namespace nlse {

GridSpec::GridSpec(int n_, double length_) : n(n_), length(length_) {
    if (n < 16 || (n & (n - 1)) != 0)
        throw InvalidInputError("grid size must be a power of two >= 16");
    if (!(length > 0.0)) throw InvalidInputError("grid length must be positive");
}

std::vector<double> GridSpec::xs() const {
    std::vector<double> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = x(i);
    return v;
}

std::vector<double> GridSpec::wavenumbers() const {
    std::vector<double> k(static_cast<size_t>(n));
    const double dk = 2.0 * std::numbers::pi / length;
    for (int i = 0; i < n; ++i)
        k[static_cast<size_t>(i)] = dk * (i < n / 2 ? i : i - n);
    return k;
}

namespace spectral {

namespace {

// Twiddle factors and bit-reversal permutation for one transform size.
struct Plan {
    std::vector<cplx> twiddle; // e^{-2πi j / n}, j = 0..n/2-1
    std::vector<int> reversed;

    explicit Plan(int n) : twiddle(static_cast<size_t>(n / 2)), reversed(static_cast<size_t>(n)) {
        for (int j = 0; j < n / 2; ++j) {
            const double a = -2.0 * std::numbers::pi * j / n;
            twiddle[static_cast<size_t>(j)] = {std::cos(a), std::sin(a)};
        }
        int bits = 0;
        while ((1 << bits) < n) ++bits;
        for (int i = 0; i < n; ++i) {
            int r = 0;
            for (int b = 0; b < bits; ++b)
                if (i & (1 << b)) r |= 1 << (bits - 1 - b);
            reversed[static_cast<size_t>(i)] = r;
        }
    }
};

const Plan& plan_for(int n) {
    thread_local std::unordered_map<int, std::unique_ptr<Plan>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Plan>(n);
    return *slot;
}

} // namespace

void fft(std::span<cplx> data, bool inverse) {
    const int n = static_cast<int>(data.size());
    if (n == 0 || (n & (n - 1)) != 0)
        throw InvalidInputError("fft size must be a power of two");
    const Plan& plan = plan_for(n);

    for (int i = 0; i < n; ++i) {
        const int r = plan.reversed[static_cast<size_t>(i)];
        if (i < r) std::swap(data[static_cast<size_t>(i)], data[static_cast<size_t>(r)]);
    }

    for (int len = 2; len <= n; len <<= 1) {
        const int half = len >> 1;
        const int stride = n / len;
        for (int start = 0; start < n; start += len) {
            for (int j = 0; j < half; ++j) {
                cplx w = plan.twiddle[static_cast<size_t>(j * stride)];
                if (inverse) w = std::conj(w);
                cplx& a = data[static_cast<size_t>(start + j)];
                cplx& b = data[static_cast<size_t>(start + j + half)];
                const cplx t = w * b;
                b = a - t;
                a += t;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / n;
        for (auto& v : data) v *= scale;
    }
}

std::vector<cplx> derivative(const GridSpec& grid, std::span<const cplx> f, int order) {
    std::vector<cplx> hat(f.begin(), f.end());
    fft(hat, false);
    const std::vector<double> ks = grid.wavenumbers();
    for (int i = 0; i < grid.n; ++i) {
        const cplx ik(0.0, ks[static_cast<size_t>(i)]);
        cplx factor(1.0, 0.0);
        for (int o = 0; o < order; ++o) factor *= ik;
        hat[static_cast<size_t>(i)] *= factor;
    }
    fft(hat, true);
    return hat;
}

void derivatives_1_2(const GridSpec& grid, std::span<const cplx> f, std::vector<cplx>& df,
                     std::vector<cplx>& ddf) {
    std::vector<cplx> hat(f.begin(), f.end());
    fft(hat, false);
    const std::vector<double> ks = grid.wavenumbers();
    df.assign(hat.begin(), hat.end());
    ddf.assign(hat.begin(), hat.end());
    for (int i = 0; i < grid.n; ++i) {
        const double k = ks[static_cast<size_t>(i)];
        df[static_cast<size_t>(i)] *= cplx(0.0, k);
        ddf[static_cast<size_t>(i)] *= -k * k;
    }
    fft(df, true);
    fft(ddf, true);
}

std::vector<cplx> free_propagate(const GridSpec& grid, std::span<const cplx> f, double nu1,
                                 double T) {
    std::vector<cplx> hat(f.begin(), f.end());
    fft(hat, false);
    const std::vector<double> ks = grid.wavenumbers();
    for (int i = 0; i < grid.n; ++i) {
        const double k = ks[static_cast<size_t>(i)];
        const double omega = -nu1 * k * k;
        hat[static_cast<size_t>(i)] *= std::polar(1.0, -omega * T);
    }
    fft(hat, true);
    return hat;
}

std::vector<cplx> translate(const GridSpec& grid, std::span<const cplx> f, double shift) {
    std::vector<cplx> hat(f.begin(), f.end());
    fft(hat, false);
    const std::vector<double> ks = grid.wavenumbers();
    for (int i = 0; i < grid.n; ++i)
        hat[static_cast<size_t>(i)] *= std::polar(1.0, -ks[static_cast<size_t>(i)] * shift);
    fft(hat, true);
    return hat;
}

} // namespace spectral
} // namespace nlse
