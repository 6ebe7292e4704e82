// params.hpp — walk parameters (n, d, k, coin angles, initial coin amplitudes).

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

#include "caqw/lattice.hpp"

namespace caqw {

// The full parameter set of the hash: lattice side n, dimension d, bits per
// digest cell k, the two coin angles selected by message bits 0/1, and the
// initial coin amplitudes. (theta1, theta2, alpha, beta) act as the key.
struct WalkParams {
    int n = 5;
    int d = 2;
    int k = 8;
    double theta1 = 0.0;
    double theta2 = 0.0;
    std::complex<double> alpha{1.0, 0.0};
    std::complex<double> beta{0.0, 0.0};

    static constexpr double kNormTolerance = 1e-12;

    // Throws std::invalid_argument naming the offending field.
    void validate() const {
        if (n < 2) throw std::invalid_argument("n: lattice side must be >= 2");
        if (d != 2 && d != 3) throw std::invalid_argument("d: dimension must be 2 or 3");
        if (k < 1 || k > 32) throw std::invalid_argument("k: bits per cell must be in [1, 32]");
        check_angle(theta1, "theta1");
        check_angle(theta2, "theta2");
        const double norm = std::norm(alpha) + std::norm(beta);
        if (std::abs(norm - 1.0) > kNormTolerance)
            throw std::invalid_argument("alpha/beta: |alpha|^2 + |beta|^2 must equal 1 (got " +
                                        std::to_string(norm) + ")");
    }

    Lattice lattice() const { return Lattice(n, d); }

    std::size_t sites() const { return lattice().sites(); }

    std::size_t digest_bits() const { return sites() * static_cast<std::size_t>(k); }

private:
    static void check_angle(double theta, const char* name) {
        if (!(theta > 0.0 && theta < std::numbers::pi / 2))
            throw std::invalid_argument(std::string(name) +
                                        ": coin angle must lie in the open interval (0, pi/2)");
    }
};

}  // namespace caqw
