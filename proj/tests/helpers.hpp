// Shared helpers for the test suite.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "caqw/rng.hpp"
#include "caqw/state.hpp"

namespace test_helpers {

inline double max_amplitude_diff(const caqw::StateVector& a, const caqw::StateVector& b) {
    double worst = 0.0;
    const auto sa = a.amplitudes();
    const auto sb = b.amplitudes();
    for (std::size_t i = 0; i < sa.size(); ++i)
        worst = std::max(worst, std::abs(sa[i] - sb[i]));
    return worst;
}

inline double max_amplitude_diff(std::span<const std::complex<double>> a,
                                 std::span<const std::complex<double>> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Haar-ish random unit vector, deterministic in the seed.
inline caqw::StateVector random_state(const caqw::Lattice& lattice, std::uint64_t seed) {
    caqw::SplitMix64 gen(seed);
    auto unit = [&gen] {
        // uniform in [-1, 1)
        return static_cast<double>(gen.next() >> 11) * 0x1p-52 - 1.0;
    };
    std::vector<std::complex<double>> amps(lattice.dim());
    double norm = 0.0;
    for (auto& a : amps) {
        a = {unit(), unit()};
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : amps) a /= norm;
    return caqw::StateVector(lattice, std::move(amps));
}

// uniform double in [0, 1)
inline double random_unit(caqw::SplitMix64& gen) {
    return static_cast<double>(gen.next() >> 11) * 0x1p-53;
}

}  // namespace test_helpers
