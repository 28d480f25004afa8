#include "pbf/bitmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbf {

BitMatrix BitMatrix::identity(std::size_t k) {
    BitMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector> &rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    uint64_t *ra = row(a), *rb = row(b);
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(ra[i], rb[i]);
}

BitVector BitMatrix::row_bits(std::size_t r) const {
    BitVector v(cols_);
    const uint64_t *src = row(r);
    std::copy(src, src + wpr_, v.words());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector &v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: width mismatch");
    std::copy(v.words(), v.words() + wpr_, row(r));
}

std::string BitMatrix::export_text() const {
    std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += row_bits(r).to_hex();
        out += '\n';
    }
    return out;
}

namespace {

// Forward elimination; returns rank. When full_reduce is set the result is
// the RREF (pivots also cleared above), otherwise row echelon only.
std::size_t eliminate(BitMatrix &m, bool full_reduce, std::vector<std::size_t> *pivot_cols) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        std::size_t lo = full_reduce ? 0 : r + 1;
        for (std::size_t i = lo; i < rows; ++i)
            if (i != r && m.get(i, c)) m.xor_row_into(r, i);
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank(BitMatrix m) {
    return eliminate(m, false, nullptr);
}

BitMatrix rref(BitMatrix m, std::vector<std::size_t> *pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    eliminate(m, true, pivot_cols);
    return m;
}

BitMatrix nullspace_basis(const BitMatrix &m) {
    std::vector<std::size_t> pivots;
    BitMatrix r = rref(m, &pivots);
    const std::size_t cols = m.cols(), rk = pivots.size();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    // One basis vector per free column: 1 in the free slot, and the RREF
    // column entries copied into the pivot slots.
    BitMatrix basis(cols - rk, cols);
    std::size_t out = 0;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        basis.set(out, fc, true);
        for (std::size_t p = 0; p < rk; ++p)
            if (r.get(p, fc)) basis.set(out, pivots[p], true);
        ++out;
    }
    return basis;
}

BitVector mat_vec(const BitMatrix &m, const BitVector &v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: length mismatch");
    BitVector out(m.rows());
    const std::size_t wpr = m.words_per_row();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const uint64_t *row = m.row(r);
        uint64_t acc = 0;
        for (std::size_t i = 0; i < wpr; ++i) acc ^= row[i] & v.words()[i];
        if (__builtin_parityll(acc)) out.set(r, true);
    }
    return out;
}

} // namespace pbf
