// lattice.hpp — geometry of the d-dimensional cyclic lattice Z_n^d.
//
// Basis ordering used everywhere in this library: the flat position index
// runs lexicographically over coordinates with axis 0 varying slowest; the
// coin index (0 = up, 1 = down) varies fastest. An amplitude vector holds
// 2*n^d entries, entry 2*pos + coin.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace caqw {

class Lattice {
public:
    Lattice(int n, int d) : n_(n), d_(d) {
        if (n < 2) throw std::invalid_argument("lattice: n must be >= 2");
        if (d < 1) throw std::invalid_argument("lattice: d must be >= 1");
        sites_ = 1;
        for (int a = 0; a < d; ++a) sites_ *= static_cast<std::size_t>(n);
    }

    int n() const { return n_; }
    int d() const { return d_; }

    // number of lattice sites, n^d
    std::size_t sites() const { return sites_; }

    // Hilbert-space dimension, 2*n^d
    std::size_t dim() const { return 2 * sites_; }

    // position-index stride of one unit along `axis` (axis 0 is slowest)
    std::size_t stride(int axis) const {
        check_axis(axis);
        std::size_t s = 1;
        for (int a = axis + 1; a < d_; ++a) s *= static_cast<std::size_t>(n_);
        return s;
    }

    std::size_t flatten(std::span<const int> coords) const {
        if (std::ssize(coords) != d_)
            throw std::invalid_argument("lattice: coordinate count != d");
        std::size_t pos = 0;
        for (int a = 0; a < d_; ++a) {
            int c = coords[static_cast<std::size_t>(a)];
            if (c < 0 || c >= n_)
                throw std::out_of_range("lattice: coordinate outside [0, n)");
            pos = pos * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
        }
        return pos;
    }

    std::vector<int> coords(std::size_t pos) const {
        if (pos >= sites_) throw std::out_of_range("lattice: position index too large");
        std::vector<int> c(static_cast<std::size_t>(d_));
        for (int a = d_ - 1; a >= 0; --a) {
            c[static_cast<std::size_t>(a)] = static_cast<int>(pos % static_cast<std::size_t>(n_));
            pos /= static_cast<std::size_t>(n_);
        }
        return c;
    }

    int coord(std::size_t pos, int axis) const {
        check_axis(axis);
        return static_cast<int>(pos / stride(axis) % static_cast<std::size_t>(n_));
    }

    // cyclic neighbour of `pos` one unit along `axis`; dir is +1 or -1
    std::size_t neighbor(std::size_t pos, int axis, int dir) const {
        check_axis(axis);
        const std::size_t st = stride(axis);
        const int c = static_cast<int>(pos / st % static_cast<std::size_t>(n_));
        int moved = c + dir;
        if (moved < 0) moved += n_;
        if (moved >= n_) moved -= n_;
        const auto delta = static_cast<std::ptrdiff_t>(moved - c) * static_cast<std::ptrdiff_t>(st);
        return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(pos) + delta);
    }

    bool operator==(const Lattice& other) const {
        return n_ == other.n_ && d_ == other.d_;
    }

private:
    void check_axis(int axis) const {
        if (axis < 0 || axis >= d_) throw std::out_of_range("lattice: axis out of range");
    }

    int n_;
    int d_;
    std::size_t sites_;
};

}  // namespace caqw
