// message.hpp — the bit sequence that drives coin selection.
//
// Ingestion conventions: text maps bytes to bits most-significant-bit
// first; hex maps nibbles most-significant-nibble first. The first bit of
// the message drives the first walk step.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace caqw {

class Message {
public:
    Message() = default;

    explicit Message(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("message: bits must be 0 or 1");
    }

    static Message from_bits(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char ch : text) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("message: bit literal may contain only '0' and '1'");
            bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return Message(std::move(bits));
    }

    static Message from_hex(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size() * 4);
        for (char ch : text) {
            const int nibble = hex_value(ch);
            for (int j = 3; j >= 0; --j)
                bits.push_back(static_cast<std::uint8_t>((nibble >> j) & 1));
        }
        return Message(std::move(bits));
    }

    static Message from_text(std::string_view text) {
        return from_bytes({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
    }

    static Message from_bytes(std::span<const std::uint8_t> bytes) {
        std::vector<std::uint8_t> bits;
        bits.reserve(bytes.size() * 8);
        for (std::uint8_t byte : bytes)
            for (int j = 7; j >= 0; --j)
                bits.push_back(static_cast<std::uint8_t>((byte >> j) & 1));
        return Message(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int bit(std::size_t i) const {
        if (i >= bits_.size()) throw std::out_of_range("message: bit index out of range");
        return bits_[i];
    }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::string to_bit_string() const {
        std::string out;
        out.reserve(bits_.size());
        for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
        return out;
    }

    // Inverse of from_hex; defined only when the length is a multiple of 4.
    std::string to_hex() const {
        if (bits_.size() % 4 != 0)
            throw std::invalid_argument("message: hex rendering needs length divisible by 4");
        static constexpr char digits[] = "0123456789ABCDEF";
        std::string out;
        out.reserve(bits_.size() / 4);
        for (std::size_t i = 0; i < bits_.size(); i += 4) {
            const int nibble = (bits_[i] << 3) | (bits_[i + 1] << 2) | (bits_[i + 2] << 1) | bits_[i + 3];
            out.push_back(digits[nibble]);
        }
        return out;
    }

    bool operator==(const Message& other) const = default;

private:
    static int hex_value(char ch) {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
        throw std::invalid_argument("message: invalid hex digit");
    }

    std::vector<std::uint8_t> bits_;
};

}  // namespace caqw
