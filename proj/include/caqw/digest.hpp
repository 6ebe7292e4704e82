// digest.hpp — terminal probability distribution -> n^d*k-bit hash value.
//
// Each lattice position contributes one k-bit cell: floor(P * 1e8) mod 2^k.
// Cells are serialized in canonical position order (lexicographic over
// coordinates, axis 0 slowest), most-significant-bit first within a cell.
// For k > 27 the high cell bits exceed the 1e8 scaling resolution and are
// always zero; that is a documented property of the construction, not an
// error.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "caqw/message.hpp"
#include "caqw/params.hpp"
#include "caqw/state.hpp"

namespace caqw {

class Digest {
public:
    Digest(int n, int d, int k, std::vector<std::uint32_t> cells)
        : n_(n), d_(d), k_(k), cells_(std::move(cells)) {
        if (cells_.size() != Lattice(n, d).sites())
            throw std::invalid_argument("digest: cell count must be n^d");
        const std::uint64_t bound = std::uint64_t{1} << k_;
        for (auto c : cells_)
            if (c >= bound) throw std::invalid_argument("digest: cell value exceeds 2^k");
    }

    int n() const { return n_; }
    int d() const { return d_; }
    int k() const { return k_; }

    const std::vector<std::uint32_t>& cells() const { return cells_; }

    std::size_t bit_length() const { return cells_.size() * static_cast<std::size_t>(k_); }

    // bit i of the concatenated cell bit string (MSB-first within each cell)
    int bit(std::size_t i) const {
        if (i >= bit_length()) throw std::out_of_range("digest: bit index out of range");
        const std::size_t cell = i / static_cast<std::size_t>(k_);
        const int offset = static_cast<int>(i % static_cast<std::size_t>(k_));
        return static_cast<int>((cells_[cell] >> (k_ - 1 - offset)) & 1u);
    }

    // Uppercase hex, most-significant nibble first; ceil(bits/4) characters.
    // When the bit length is not a multiple of 4 the final nibble is padded
    // with zero bits on the low end.
    std::string to_hex() const {
        static constexpr char digits[] = "0123456789ABCDEF";
        const std::size_t bits = bit_length();
        const std::size_t nchars = (bits + 3) / 4;
        std::string out;
        out.reserve(nchars);
        for (std::size_t c = 0; c < nchars; ++c) {
            int nibble = 0;
            for (std::size_t j = 0; j < 4; ++j) {
                const std::size_t i = 4 * c + j;
                nibble = (nibble << 1) | (i < bits ? bit(i) : 0);
            }
            out.push_back(digits[nibble]);
        }
        return out;
    }

    // Raw cell bytes for piping; defined for k = 8 only.
    std::vector<std::uint8_t> to_bytes() const {
        if (k_ != 8) throw std::invalid_argument("digest: byte output requires k = 8");
        return std::vector<std::uint8_t>(cells_.begin(), cells_.end());
    }

    bool same_shape(const Digest& other) const {
        return n_ == other.n_ && d_ == other.d_ && k_ == other.k_;
    }

    bool operator==(const Digest& other) const = default;

private:
    int n_;
    int d_;
    int k_;
    std::vector<std::uint32_t> cells_;
};

// floor(p * 1e8) mod 2^k. The product is evaluated in double precision, the
// floor taken before the integer modulo.
inline std::uint32_t cell_value(double p, int k) {
    if (k < 1 || k > 32) throw std::invalid_argument("cell_value: k must be in [1, 32]");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("cell_value: p must be in [0, 1]");
    const auto scaled = static_cast<std::uint64_t>(std::floor(p * 1e8));
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    return static_cast<std::uint32_t>(scaled & mask);
}

// Runs the walk under the message and integerizes the final distribution.
inline Digest hash_message(const WalkParams& params, const Message& message) {
    const StateVector final_state = evolve(params, message);
    const std::vector<double> probs = probabilities(final_state);
    std::vector<std::uint32_t> cells(probs.size());
    for (std::size_t pos = 0; pos < probs.size(); ++pos)
        cells[pos] = cell_value(probs[pos], params.k);
    return Digest(params.n, params.d, params.k, std::move(cells));
}

inline std::string render_hex(const Digest& digest) { return digest.to_hex(); }

}  // namespace caqw
