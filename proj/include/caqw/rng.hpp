// rng.hpp — deterministic random source for the statistical campaigns.
//
// SplitMix64 (Steele, Lea & Flood's 64-bit mixer): state advances by a
// fixed odd gamma and each output is a strong finalizer of the state, so
// any 64-bit value opens an independent-looking stream. Campaign trial i
// draws from the substream keyed seed ^ i, which makes trials
// order-independent and safe to run in parallel.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "caqw/message.hpp"

namespace caqw {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection of the wrap-around zone.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("rng: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// `length` message bits drawn from `gen`, most-significant bit of each
// 64-bit word first.
inline Message random_message(SplitMix64& gen, std::size_t length) {
    std::vector<std::uint8_t> bits(length);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (i % 64 == 0) word = gen.next();
        bits[i] = static_cast<std::uint8_t>((word >> (63 - i % 64)) & 1);
    }
    return Message(std::move(bits));
}

inline Message random_message(std::size_t length, std::uint64_t seed) {
    SplitMix64 gen(seed);
    return random_message(gen, length);
}

}  // namespace caqw
