#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbf {

// Packed bit vector, 64-bit words, little-endian bit order (bit i lives in
// word i/64). Padding bits above size() are kept zero so word-wise equality,
// popcount and parity need no masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }
    const uint64_t *words() const { return words_.data(); }
    uint64_t *words() { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= m;
        else words_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    BitVector &operator^=(const BitVector &o) {
        if (o.bits_ != bits_) throw std::invalid_argument("BitVector xor: size mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }

    friend bool operator==(const BitVector &a, const BitVector &b) {
        return a.bits_ == b.bits_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVector &a, const BitVector &b) { return !(a == b); }

    // Bits [from, from+len) as a new vector.
    BitVector slice(std::size_t from, std::size_t len) const;

    // Hex rendering: ceil(size/4) digits, leftmost digit holds the highest
    // bit indices.
    std::string to_hex() const;

    // Inverse of to_hex for a vector of `bits` bits. Throws std::invalid_argument
    // with the offending character offset on malformed input.
    static BitVector from_hex(const std::string &hex, std::size_t bits);

private:
    void mask_tail() {
        if (bits_ & 63) words_.back() &= (uint64_t(1) << (bits_ & 63)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<uint64_t> words_;
};

inline BitVector BitVector::slice(std::size_t from, std::size_t len) const {
    BitVector out(len);
    for (std::size_t i = 0; i < len; ++i)
        if (get(from + i)) out.set(i, true);
    return out;
}

inline std::string BitVector::to_hex() const {
    std::size_t digits = (bits_ + 3) / 4;
    std::string s(digits, '0');
    static const char *hexc = "0123456789abcdef";
    for (std::size_t d = 0; d < digits; ++d) {
        unsigned nib = 0;
        for (unsigned b = 0; b < 4; ++b) {
            std::size_t i = 4 * d + b;
            if (i < bits_ && get(i)) nib |= 1u << b;
        }
        s[digits - 1 - d] = hexc[nib];
    }
    return s;
}

inline BitVector BitVector::from_hex(const std::string &hex, std::size_t bits) {
    std::size_t digits = (bits + 3) / 4;
    if (hex.size() != digits)
        throw std::invalid_argument("hex truth table: expected " + std::to_string(digits) +
                                    " digits, got " + std::to_string(hex.size()));
    BitVector v(bits);
    for (std::size_t d = 0; d < digits; ++d) {
        char c = hex[digits - 1 - d];
        unsigned nib;
        if (c >= '0' && c <= '9') nib = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') nib = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') nib = static_cast<unsigned>(c - 'A' + 10);
        else
            throw std::invalid_argument("hex truth table: invalid character at offset " +
                                        std::to_string(digits - 1 - d));
        for (unsigned b = 0; b < 4; ++b) {
            std::size_t i = 4 * d + b;
            if (i >= bits) {
                if (nib >> b)
                    throw std::invalid_argument("hex truth table: nonzero padding at offset 0");
                break;
            }
            if ((nib >> b) & 1u) v.set(i, true);
        }
    }
    return v;
}

} // namespace pbf
