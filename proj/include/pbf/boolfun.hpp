#pragma once

#include <vector>

#include "pbf/bitvec.hpp"
#include "pbf/gf2n.hpp"

namespace pbf {

// Binary Mobius transform in place (truth table <-> ANF coefficients);
// self-inverse. Index i of the ANF vector is the monomial whose variable set
// is the bit pattern of i.
void mobius_transform(BitVector &tt);

// Degree of the ANF vector: max popcount of a set index, -1 when zero.
int anf_degree(const BitVector &anf);

// Boolean function on GF(2^n) as a 2^n-bit truth table; bit index equals the
// element's coefficient word.
class BooleanFunction {
public:
    BooleanFunction(FieldSpec field, BitVector tt);

    static BooleanFunction zero(const FieldSpec &field);
    static BooleanFunction ones(const FieldSpec &field);
    static BooleanFunction indicator(const FieldSpec &field, const std::vector<Fe> &points);

    const FieldSpec &field() const { return field_; }
    const BitVector &tt() const { return tt_; }

    int operator()(Fe x) const { return tt_.get(x.v); }

    std::size_t weight() const { return tt_.popcount(); }
    std::vector<Fe> support() const;

    BitVector anf() const;
    int degree() const { return anf_degree(anf()); }

    std::string to_hex() const { return tt_.to_hex(); }
    static BooleanFunction from_hex(const FieldSpec &field, const std::string &hex);

    friend BooleanFunction operator^(const BooleanFunction &a, const BooleanFunction &b);
    friend bool operator==(const BooleanFunction &a, const BooleanFunction &b) {
        return a.field_ == b.field_ && a.tt_ == b.tt_;
    }

private:
    FieldSpec field_;
    BitVector tt_;
};

} // namespace pbf
