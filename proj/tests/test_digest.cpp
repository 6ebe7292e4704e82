#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "caqw/digest.hpp"
#include "caqw/rng.hpp"
#include "helpers.hpp"

using caqw::cell_value;
using caqw::Digest;
using caqw::Message;
using caqw::WalkParams;

namespace {

WalkParams paper_shape_params() {
    WalkParams p;
    p.n = 5;
    p.d = 2;
    p.k = 8;
    p.theta1 = std::numbers::pi / 4;
    p.theta2 = 0.3;
    p.alpha = 1.0;
    p.beta = 0.0;
    return p;
}

// Reference serializer: builds the bit string the slow way and packs nibbles.
std::string reference_hex(const Digest& d) {
    std::string bits;
    for (auto cell : d.cells())
        for (int j = d.k() - 1; j >= 0; --j)
            bits.push_back(((cell >> j) & 1u) != 0 ? '1' : '0');
    while (bits.size() % 4 != 0) bits.push_back('0');
    std::string hex;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        const int nibble = (bits[i] - '0') * 8 + (bits[i + 1] - '0') * 4 +
                           (bits[i + 2] - '0') * 2 + (bits[i + 3] - '0');
        hex.push_back("0123456789ABCDEF"[nibble]);
    }
    return hex;
}

}  // namespace

TEST_CASE("cell values") {
    CHECK(cell_value(0.0, 8) == 0);
    CHECK(cell_value(1.0, 8) == 0);  // 1e8 is divisible by 2^8
    CHECK(cell_value(0.25, 8) == 64);

    // independent integer route for random probabilities
    caqw::SplitMix64 gen(4);
    for (int i = 0; i < 200; ++i) {
        const double p = test_helpers::random_unit(gen);
        const int k = 1 + static_cast<int>(gen.next_below(32));
        const auto scaled = static_cast<std::uint64_t>(std::floor(p * 1e8));
        CHECK(cell_value(p, k) == scaled % (std::uint64_t{1} << k));
    }

    CHECK_THROWS_AS(cell_value(-0.1, 8), std::invalid_argument);
    CHECK_THROWS_AS(cell_value(1.1, 8), std::invalid_argument);
    CHECK_THROWS_AS(cell_value(0.5, 0), std::invalid_argument);
}

TEST_CASE("empty message hashes to the all-zero digest for k=8") {
    WalkParams p = paper_shape_params();
    const std::complex<double> pairs[][2] = {
        {{1.0, 0.0}, {0.0, 0.0}},
        {{0.0, 0.0}, {0.0, 1.0}},
        {{0.6, 0.0}, {0.0, 0.8}},
        {{0.8, 0.0}, {0.6, 0.0}},
        {{0.28, 0.96}, {0.0, 0.0}},
    };
    for (const auto& pair : pairs) {
        p.alpha = pair[0];
        p.beta = pair[1];
        const Digest d = caqw::hash_message(p, Message());
        CHECK(d.bit_length() == 200);
        for (auto cell : d.cells()) CHECK(cell == 0);
        CHECK(d.to_hex() == std::string(50, '0'));
    }
}

// Floor-based integerization is exact about the 1.0 boundary: a coin pair
// whose computed squared norm rounds one ulp below 1 (e.g. 1/sqrt(2) twice)
// passes validation but yields floor(0.999...e8) mod 256 = 255 at the origin.
TEST_CASE("empty message origin cell tracks the computed norm exactly") {
    WalkParams p = paper_shape_params();
    const double r = 1.0 / std::sqrt(2.0);  // squares to 0.49999999999999988898
    p.alpha = {r, 0.0};
    p.beta = {0.0, r};
    const Digest d = caqw::hash_message(p, Message());
    CHECK(d.cells()[0] == 255);
    for (std::size_t i = 1; i < 25; ++i) CHECK(d.cells()[i] == 0);
}

// One balanced-coin step: weight 1/4 on each of the four corner cells. In
// doubles, sin(pi/4) sits one ulp below cos(pi/4), so the corner reached
// with amplitude sin^2 carries probability just under 0.25 and integerizes
// to 63; the other three floor to 64. Confirmed against the dense-matrix
// route (see test_state.cpp).
TEST_CASE("single-step digest integerizes the four corner cells") {
    const WalkParams p = paper_shape_params();
    const Digest d = caqw::hash_message(p, Message::from_bits("0"));

    // canonical order, axis 0 slowest: (1,1)=6, (1,4)=9, (4,1)=21, (4,4)=24
    for (std::size_t cell = 0; cell < 25; ++cell) {
        std::uint32_t expected = 0;
        if (cell == 6 || cell == 9 || cell == 24) expected = 64;
        if (cell == 21) expected = 63;  // sin^4(pi/4) < 1/4 in doubles
        CHECK(d.cells()[cell] == expected);
    }
    CHECK(d.to_hex() == "0000000000004000004000000000000000000000003F000040");
}

TEST_CASE("hashing is deterministic") {
    WalkParams p = paper_shape_params();
    p.theta2 = 1.2;
    const Message msg = caqw::random_message(128, 77);
    const Digest a = caqw::hash_message(p, msg);
    const Digest b = caqw::hash_message(p, msg);
    CHECK(a == b);
    CHECK(a.to_hex() == b.to_hex());
}

TEST_CASE("digest bit length is n^d * k") {
    WalkParams p = paper_shape_params();
    const Message msg = caqw::random_message(32, 9);

    CHECK(caqw::hash_message(p, msg).bit_length() == 200);
    CHECK(caqw::hash_message(p, msg).to_hex().size() == 50);

    p.n = 5;
    p.d = 3;
    CHECK(caqw::hash_message(p, msg).bit_length() == 1000);

    p.n = 7;
    p.d = 2;
    CHECK(caqw::hash_message(p, msg).bit_length() == 392);
}

TEST_CASE("k=4 digest is the low nibble of the k=8 digest") {
    WalkParams p8 = paper_shape_params();
    p8.theta2 = 0.77;
    WalkParams p4 = p8;
    p4.k = 4;

    const Message msg = caqw::random_message(96, 1234);
    const Digest d8 = caqw::hash_message(p8, msg);
    const Digest d4 = caqw::hash_message(p4, msg);

    REQUIRE(d4.cells().size() == d8.cells().size());
    for (std::size_t i = 0; i < d8.cells().size(); ++i)
        CHECK(d4.cells()[i] == (d8.cells()[i] & 0xF));
}

TEST_CASE("hex rendering") {
    CHECK(Digest(2, 2, 8, {64, 65, 255, 0}).to_hex() == "4041FF00");

    // 3-bit cells: 101 011 111 000 -> 1010 1111 1000 -> "AF8"
    CHECK(Digest(2, 2, 3, {0b101, 0b011, 0b111, 0b000}).to_hex() == "AF8");

    // random digests against the reference serializer, padded widths included
    caqw::SplitMix64 gen(55);
    for (int i = 0; i < 50; ++i) {
        const int k = 1 + static_cast<int>(gen.next_below(16));
        std::vector<std::uint32_t> cells(9);
        for (auto& c : cells)
            c = static_cast<std::uint32_t>(gen.next_below(std::uint64_t{1} << k));
        const Digest d(3, 2, k, cells);
        CHECK(d.to_hex() == reference_hex(d));
        CHECK(d.to_hex().size() == (d.bit_length() + 3) / 4);
    }
}

TEST_CASE("digest construction validates cell bounds") {
    CHECK_THROWS_AS(Digest(2, 2, 4, {16, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Digest(2, 2, 4, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("byte output is defined exactly for k=8") {
    const Digest d(2, 2, 8, {1, 2, 254, 255});
    CHECK(d.to_bytes() == std::vector<std::uint8_t>{1, 2, 254, 255});
    CHECK_THROWS_AS(Digest(2, 2, 4, {1, 2, 14, 15}).to_bytes(), std::invalid_argument);
}
