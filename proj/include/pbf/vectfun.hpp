#pragma once

#include <cstdint>
#include <vector>

#include "pbf/gf2n.hpp"

namespace pbf {

// (n,n)-function as a lookup table: lut[x] = F(x) as coefficient words.
struct VectorialFunction {
    FieldSpec field;
    std::vector<uint32_t> lut;

    Fe operator()(Fe x) const { return Fe{lut[x.v]}; }
};

} // namespace pbf
