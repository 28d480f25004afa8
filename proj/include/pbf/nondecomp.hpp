#pragma once

#include <string>
#include <vector>

#include "pbf/bitmatrix.hpp"
#include "pbf/boolfun.hpp"
#include "pbf/tripleset.hpp"

namespace pbf {

enum class NdKind { type_i, type_ii, type_iiia, type_iiib };

const char *nd_kind_name(NdKind k);

struct NonDecompPbf {
    BooleanFunction f;
    NdKind kind;
    std::string witness;
};

// Weight-2 PBF: indicator of {beta, beta+1} for beta in class 1.
// Throws std::invalid_argument otherwise (the indicator then violates a
// constraint row).
NonDecompPbf make_type_i(const TSetPartition &part, Fe beta);

// Weight-4 PBF from a slim triple set: support is the two class-2 elements
// of the set and their +1 mates. Throws for fat input.
NonDecompPbf make_type_ii(const TSetPartition &part, const TripleSet &ts);

// Weight-2t PBFs from simple cycles of fat vertices with t <= max_len
// vertices: each cycle edge anchored at a contributes {a, a+1} to the
// support. Cycles deduplicated up to rotation and reflection.
std::vector<NonDecompPbf> find_type_iiia(const TsGraph &g, std::size_t max_len);

// Weight-2(r+1) PBFs from simple paths with slim endpoints and fat interior,
// r <= max_len vertices: edge anchor pairs plus, per endpoint, the smaller
// of its two class-2 elements with its +1 mate.
std::vector<NonDecompPbf> find_type_iiib(const TsGraph &g, std::size_t max_len);

// All type-i and type-ii truth tables stacked into one matrix. The rows are
// linearly independent, so the spanned subspace has dimension rows().
struct Pbf4Space {
    FieldSpec field;
    BitMatrix x;      // (|T1|/2 + #slim) x 2^n, type-i rows first
    std::size_t rank; // rank of x
    std::size_t dim;  // = rank
};

Pbf4Space pbf4_space(const FieldSpec &field);

} // namespace pbf
