// coin.hpp — the 2x2 coin operator [[cos t, sin t], [sin t, -cos t]].
//
// This form is real, symmetric and involutory (C*C = I), so every coin is
// its own inverse and its own adjoint.

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace caqw {

class CoinOperator {
public:
    double theta() const { return theta_; }
    double c() const { return c_; }  // cos(theta)
    double s() const { return s_; }  // sin(theta)

    std::array<std::array<double, 2>, 2> entries() const {
        return {{{c_, s_}, {s_, -c_}}};
    }

private:
    friend CoinOperator coin_matrix(double theta);
    CoinOperator(double theta, double c, double s) : theta_(theta), c_(c), s_(s) {}

    double theta_;
    double c_;
    double s_;
};

// Builds the coin operator for an angle in the open interval (0, pi/2).
inline CoinOperator coin_matrix(double theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi / 2))
        throw std::domain_error("coin angle must lie in the open interval (0, pi/2)");
    return CoinOperator(theta, std::cos(theta), std::sin(theta));
}

}  // namespace caqw
