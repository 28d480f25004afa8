#include "pbf/boolfun.hpp"

#include <stdexcept>

namespace pbf {

void mobius_transform(BitVector &tt) {
    const std::size_t n_bits = tt.size();
    uint64_t *w = tt.words();
    const std::size_t n_words = tt.word_count();

    // In-word steps: f[j] ^= f[j ^ s] for j with bit s set, as a masked shift.
    for (std::size_t s = 1; s < 64 && s < n_bits; s <<= 1) {
        uint64_t keep = 0;
        for (unsigned b = 0; b < 64; ++b)
            if (!(b & s)) keep |= uint64_t(1) << b;
        for (std::size_t i = 0; i < n_words; ++i) w[i] ^= (w[i] & keep) << s;
    }
    // Cross-word steps: whole-word XOR.
    for (std::size_t s = 1; s < n_words; s <<= 1)
        for (std::size_t i = 0; i < n_words; ++i)
            if (i & s) w[i] ^= w[i ^ s];
}

int anf_degree(const BitVector &anf) {
    int deg = -1;
    for (std::size_t wi = 0; wi < anf.word_count(); ++wi) {
        uint64_t w = anf.words()[wi];
        while (w) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
            w &= w - 1;
            int d = __builtin_popcountll(wi * 64 + b);
            if (d > deg) deg = d;
        }
    }
    return deg;
}

BooleanFunction::BooleanFunction(FieldSpec field, BitVector tt)
    : field_(std::move(field)), tt_(std::move(tt)) {
    if (tt_.size() != field_.size())
        throw std::invalid_argument("BooleanFunction: truth table must have 2^n bits");
}

BooleanFunction BooleanFunction::zero(const FieldSpec &field) {
    return BooleanFunction(field, BitVector(field.size()));
}

BooleanFunction BooleanFunction::ones(const FieldSpec &field) {
    BitVector tt(field.size());
    for (std::size_t i = 0; i < field.size(); ++i) tt.set(i, true);
    return BooleanFunction(field, tt);
}

BooleanFunction BooleanFunction::indicator(const FieldSpec &field, const std::vector<Fe> &points) {
    BitVector tt(field.size());
    for (Fe p : points) tt.set(p.v, true);
    return BooleanFunction(field, tt);
}

std::vector<Fe> BooleanFunction::support() const {
    std::vector<Fe> out;
    out.reserve(weight());
    for (std::size_t wi = 0; wi < tt_.word_count(); ++wi) {
        uint64_t w = tt_.words()[wi];
        while (w) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
            w &= w - 1;
            out.push_back(Fe{static_cast<uint32_t>(wi * 64 + b)});
        }
    }
    return out;
}

BitVector BooleanFunction::anf() const {
    BitVector a = tt_;
    mobius_transform(a);
    return a;
}

BooleanFunction BooleanFunction::from_hex(const FieldSpec &field, const std::string &hex) {
    return BooleanFunction(field, BitVector::from_hex(hex, field.size()));
}

BooleanFunction operator^(const BooleanFunction &a, const BooleanFunction &b) {
    if (a.field_ != b.field_)
        throw std::invalid_argument("BooleanFunction: field spec mismatch");
    return BooleanFunction(a.field_, a.tt_ ^ b.tt_);
}

} // namespace pbf
