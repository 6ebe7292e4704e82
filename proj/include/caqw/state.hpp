// state.hpp — state vector of the controlled alternate walk and its
// evolution: coin application, cyclic shifts, message-controlled steps,
// and position measurement.
//
// One walk step with coin C is: apply C to every position's coin pair,
// shift along axis 0, apply C again, shift along axis 1 (and again for
// axis 2 when d = 3). Coin-up components move +1 along the axis, coin-down
// components move -1, both cyclically.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "caqw/coin.hpp"
#include "caqw/lattice.hpp"
#include "caqw/message.hpp"
#include "caqw/params.hpp"

namespace caqw {

namespace detail {

// Precomputed destination indices of one cyclic shift: position pos sends
// its coin-up amplitude to up[pos] and its coin-down amplitude to down[pos].
struct ShiftPlan {
    std::vector<std::size_t> up;
    std::vector<std::size_t> down;
};

inline ShiftPlan make_shift_plan(const Lattice& lattice, int axis) {
    ShiftPlan plan;
    plan.up.resize(lattice.sites());
    plan.down.resize(lattice.sites());
    for (std::size_t pos = 0; pos < lattice.sites(); ++pos) {
        plan.up[pos] = lattice.neighbor(pos, axis, +1);
        plan.down[pos] = lattice.neighbor(pos, axis, -1);
    }
    return plan;
}

inline void coin_inplace(std::span<std::complex<double>> amps, double c, double s) {
    for (std::size_t i = 0; i < amps.size(); i += 2) {
        const std::complex<double> up = amps[i];
        const std::complex<double> down = amps[i + 1];
        amps[i] = c * up + s * down;
        amps[i + 1] = s * up - c * down;
    }
}

inline void shift_into(std::span<const std::complex<double>> src,
                       std::span<std::complex<double>> dst, const ShiftPlan& plan) {
    for (std::size_t pos = 0; pos < plan.up.size(); ++pos) {
        dst[2 * plan.up[pos]] = src[2 * pos];
        dst[2 * plan.down[pos] + 1] = src[2 * pos + 1];
    }
}

}  // namespace detail

class StateVector {
public:
    static constexpr double kNormTolerance = 1e-9;

    StateVector(Lattice lattice, std::vector<std::complex<double>> amplitudes)
        : lattice_(lattice), amps_(std::move(amplitudes)) {
        if (amps_.size() != lattice_.dim())
            throw std::invalid_argument("state: amplitude count must be 2*n^d");
        if (std::abs(squared_norm() - 1.0) > kNormTolerance)
            throw std::invalid_argument("state: amplitudes must have unit norm");
    }

    // |pos, coin> basis state
    static StateVector basis(const Lattice& lattice, std::size_t pos, int coin) {
        if (pos >= lattice.sites()) throw std::out_of_range("state: position out of range");
        if (coin != 0 && coin != 1) throw std::out_of_range("state: coin must be 0 or 1");
        std::vector<std::complex<double>> amps(lattice.dim());
        amps[2 * pos + static_cast<std::size_t>(coin)] = 1.0;
        return StateVector(lattice, std::move(amps));
    }

    const Lattice& lattice() const { return lattice_; }

    std::span<const std::complex<double>> amplitudes() const& { return amps_; }
    // a span into a temporary state would dangle
    std::span<const std::complex<double>> amplitudes() const&& = delete;

    std::complex<double> amplitude(std::size_t pos, int coin) const {
        if (pos >= lattice_.sites()) throw std::out_of_range("state: position out of range");
        if (coin != 0 && coin != 1) throw std::out_of_range("state: coin must be 0 or 1");
        return amps_[2 * pos + static_cast<std::size_t>(coin)];
    }

    std::complex<double> amplitude(std::span<const int> coords, int coin) const {
        return amplitude(lattice_.flatten(coords), coin);
    }

    double squared_norm() const {
        double sum = 0.0;
        for (const auto& a : amps_) sum += a.real() * a.real() + a.imag() * a.imag();
        return sum;
    }

private:
    friend StateVector apply_coin(const StateVector&, const CoinOperator&);
    friend StateVector shift(const StateVector&, int);
    friend StateVector step(const StateVector&, const CoinOperator&);
    friend StateVector evolve(const WalkParams&, const Message&);

    struct Unchecked {};
    StateVector(Lattice lattice, std::vector<std::complex<double>> amplitudes, Unchecked)
        : lattice_(lattice), amps_(std::move(amplitudes)) {}

    Lattice lattice_;
    std::vector<std::complex<double>> amps_;
};

// |0...0>(alpha|up> + beta|down>)
inline StateVector initial_state(const WalkParams& params) {
    params.validate();
    const Lattice lattice = params.lattice();
    std::vector<std::complex<double>> amps(lattice.dim());
    amps[0] = params.alpha;
    amps[1] = params.beta;
    return StateVector(lattice, std::move(amps));
}

// Applies the coin to every position's (up, down) amplitude pair.
inline StateVector apply_coin(const StateVector& state, const CoinOperator& coin) {
    std::vector<std::complex<double>> amps(state.amps_.begin(), state.amps_.end());
    detail::coin_inplace(amps, coin.c(), coin.s());
    return StateVector(state.lattice_, std::move(amps), StateVector::Unchecked{});
}

// Cyclic conditional shift: coin-up moves +1 along `axis`, coin-down moves -1.
inline StateVector shift(const StateVector& state, int axis) {
    const auto plan = detail::make_shift_plan(state.lattice_, axis);
    std::vector<std::complex<double>> dst(state.amps_.size());
    detail::shift_into(state.amps_, dst, plan);
    return StateVector(state.lattice_, std::move(dst), StateVector::Unchecked{});
}

// One full walk step with a single coin: coin + shift per axis, ascending.
inline StateVector step(const StateVector& state, const CoinOperator& coin) {
    std::vector<std::complex<double>> amps(state.amps_.begin(), state.amps_.end());
    std::vector<std::complex<double>> scratch(amps.size());
    for (int axis = 0; axis < state.lattice_.d(); ++axis) {
        detail::coin_inplace(amps, coin.c(), coin.s());
        const auto plan = detail::make_shift_plan(state.lattice_, axis);
        detail::shift_into(amps, scratch, plan);
        amps.swap(scratch);
    }
    return StateVector(state.lattice_, std::move(amps), StateVector::Unchecked{});
}

// Runs the walk from the initial state, one step per message bit in message
// order; bit 0 selects the theta1 coin, bit 1 the theta2 coin. The empty
// message returns the initial state.
inline StateVector evolve(const WalkParams& params, const Message& message) {
    params.validate();
    const Lattice lattice = params.lattice();
    const CoinOperator coins[2] = {coin_matrix(params.theta1), coin_matrix(params.theta2)};

    std::vector<detail::ShiftPlan> plans;
    plans.reserve(static_cast<std::size_t>(lattice.d()));
    for (int axis = 0; axis < lattice.d(); ++axis)
        plans.push_back(detail::make_shift_plan(lattice, axis));

    std::vector<std::complex<double>> amps(lattice.dim());
    amps[0] = params.alpha;
    amps[1] = params.beta;
    std::vector<std::complex<double>> scratch(lattice.dim());

    for (std::uint8_t bit : message.bits()) {
        const CoinOperator& coin = coins[bit];
        for (std::size_t axis = 0; axis < plans.size(); ++axis) {
            detail::coin_inplace(amps, coin.c(), coin.s());
            detail::shift_into(amps, scratch, plans[axis]);
            amps.swap(scratch);
        }
    }
    return StateVector(lattice, std::move(amps), StateVector::Unchecked{});
}

// P(pos) = |up amplitude|^2 + |down amplitude|^2, indexed by flat position.
// The digest path depends on this exact summation order.
inline std::vector<double> probabilities(const StateVector& state) {
    const auto amps = state.amplitudes();
    std::vector<double> probs(state.lattice().sites());
    for (std::size_t pos = 0; pos < probs.size(); ++pos) {
        const std::complex<double> up = amps[2 * pos];
        const std::complex<double> down = amps[2 * pos + 1];
        probs[pos] = up.real() * up.real() + up.imag() * up.imag() +
                     down.real() * down.real() + down.imag() * down.imag();
    }
    return probs;
}

}  // namespace caqw
