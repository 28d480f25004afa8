#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pbf/bitvec.hpp"

namespace pbf {

// Dense GF(2) matrix, rows packed into 64-bit words. Padding bits past cols()
// stay zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t k);
    static BitMatrix from_rows(const std::vector<BitVector> &rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t m = uint64_t(1) << (c & 63);
        if (v) data_[r * wpr_ + (c >> 6)] |= m;
        else data_[r * wpr_ + (c >> 6)] &= ~m;
    }

    const uint64_t *row(std::size_t r) const { return data_.data() + r * wpr_; }
    uint64_t *row(std::size_t r) { return data_.data() + r * wpr_; }

    void xor_row_into(std::size_t src, std::size_t dst) {
        const uint64_t *s = row(src);
        uint64_t *d = row(dst);
        for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
    }

    void swap_rows(std::size_t a, std::size_t b);

    BitVector row_bits(std::size_t r) const;
    void set_row(std::size_t r, const BitVector &v);

    // "rows cols" header, then one hex string per row (highest column index
    // in the leftmost digit).
    std::string export_text() const;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

// Rank over GF(2); the argument is taken by value and eliminated in place.
std::size_t rank(BitMatrix m);

// Reduced row echelon form; pivot_cols (optional) receives the pivot column
// of each of the first rank rows.
BitMatrix rref(BitMatrix m, std::vector<std::size_t> *pivot_cols = nullptr);

// Basis of {v : m v^T = 0}, one vector per row; rows() == cols(m) - rank(m).
BitMatrix nullspace_basis(const BitMatrix &m);

// GF(2) matrix-vector product; v.size() must equal m.cols().
BitVector mat_vec(const BitMatrix &m, const BitVector &v);

} // namespace pbf
