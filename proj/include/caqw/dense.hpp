// dense.hpp — explicit-matrix construction of the step operator.
//
// Verification path only: builds the full (2n^d)x(2n^d) unitary from
// explicit coin and shift matrices and multiplies them out, so results can
// be checked against the in-place kernels in state.hpp. Not meant to be
// fast; guarded against oversized lattices.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "caqw/coin.hpp"
#include "caqw/lattice.hpp"
#include "caqw/params.hpp"

namespace caqw {

class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), m_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::complex<double>& operator()(std::size_t r, std::size_t c) { return m_[r * cols_ + c]; }
    const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
        return m_[r * cols_ + c];
    }

    DenseMatrix mul(const DenseMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("dense: shape mismatch in product");
        DenseMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const std::complex<double> lik = (*this)(i, k);
                if (lik == std::complex<double>{}) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += lik * rhs(k, j);
            }
        return out;
    }

    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("dense: vector length mismatch");
        std::vector<std::complex<double>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::complex<double> acc{};
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    DenseMatrix adjoint() const {
        DenseMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::complex<double>> m_;
};

namespace detail {

// I_{n^d} (x) C : block-diagonal coin factor
inline DenseMatrix dense_coin_factor(const Lattice& lattice, const CoinOperator& coin) {
    DenseMatrix m(lattice.dim(), lattice.dim());
    for (std::size_t pos = 0; pos < lattice.sites(); ++pos) {
        m(2 * pos, 2 * pos) = coin.c();
        m(2 * pos, 2 * pos + 1) = coin.s();
        m(2 * pos + 1, 2 * pos) = coin.s();
        m(2 * pos + 1, 2 * pos + 1) = -coin.c();
    }
    return m;
}

// Permutation matrix of the conditional cyclic shift along one axis. Built
// from coordinate arithmetic directly, not from the kernel's shift plan.
inline DenseMatrix dense_shift_factor(const Lattice& lattice, int axis) {
    if (axis < 0 || axis >= lattice.d()) throw std::out_of_range("dense: axis out of range");
    DenseMatrix m(lattice.dim(), lattice.dim());
    for (std::size_t pos = 0; pos < lattice.sites(); ++pos) {
        std::vector<int> c = lattice.coords(pos);
        std::vector<int> plus = c;
        plus[static_cast<std::size_t>(axis)] = (c[static_cast<std::size_t>(axis)] + 1) % lattice.n();
        std::vector<int> minus = c;
        minus[static_cast<std::size_t>(axis)] =
            (c[static_cast<std::size_t>(axis)] + lattice.n() - 1) % lattice.n();
        m(2 * lattice.flatten(plus), 2 * pos) = 1.0;
        m(2 * lattice.flatten(minus) + 1, 2 * pos + 1) = 1.0;
    }
    return m;
}

}  // namespace detail

// Full matrix of one walk step driven by message bit `bit`, in the canonical
// basis ordering (amplitude index = 2*pos + coin). For d=2 this is
// S_y (I (x) C) S_x (I (x) C).
inline DenseMatrix dense_step_matrix(const WalkParams& params, int bit) {
    params.validate();
    if (bit != 0 && bit != 1) throw std::invalid_argument("dense: bit must be 0 or 1");
    const Lattice lattice = params.lattice();
    if (lattice.sites() > 1000)
        throw std::length_error("dense: refusing lattice with more than 1000 sites");

    const CoinOperator coin = coin_matrix(bit == 0 ? params.theta1 : params.theta2);
    const DenseMatrix coin_factor = detail::dense_coin_factor(lattice, coin);

    DenseMatrix u = DenseMatrix::identity(lattice.dim());
    for (int axis = 0; axis < lattice.d(); ++axis)
        u = detail::dense_shift_factor(lattice, axis).mul(coin_factor.mul(u));
    return u;
}

}  // namespace caqw
