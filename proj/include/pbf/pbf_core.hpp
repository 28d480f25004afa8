#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbf/bitmatrix.hpp"
#include "pbf/boolfun.hpp"
#include "pbf/gf2n.hpp"
#include "pbf/vectfun.hpp"

namespace pbf {

// The linear system cutting out the preferred Boolean functions with
// f(0) = 0. Row block 1: one row per pair {x, x+1}, x outside GF(2).
// Row block 2: one row per triple set {w^i*a + 1/(w^i*a)}, a outside GF(4),
// w of order 3. Columns are the elements of GF(2^n) \ GF(2) in increasing
// word order (element v -> column v-2).
struct ConstraintSystem {
    FieldSpec field;
    std::vector<std::pair<Fe, Fe>> l1;
    std::vector<std::array<Fe, 3>> l2;
    BitMatrix m;
};

// Throws std::invalid_argument for n < 6 (GF(4) must sit strictly inside).
ConstraintSystem build_constraints(const FieldSpec &field);

// Solutions (x, y) of x^2 + x/y + 1/(y(y+1)) = 0 with y outside GF(2).
// 1/x is cached since the membership scan only ever evaluates f at 1/x.
struct UPair {
    Fe x, y, inv_x;
};
struct USet {
    FieldSpec field;
    std::vector<UPair> pairs;
};

USet enumerate_U(const FieldSpec &field);

// Definition-level check: f(x+1) = f(x) everywhere and
// f(1/x) + f(1/x + y) + f(0) + f(y) = 0 over the U set.
bool is_pbf_direct(const BooleanFunction &f, const USet &u);

// Linear-system check: f(0) = f(1) and M (f + f(0))|^T = 0 on the
// restriction to GF(2^n) \ GF(2). Equivalent to is_pbf_direct.
bool is_pbf_matrix(const BooleanFunction &f, const ConstraintSystem &cs);

// Description of the first violated constraint, or nullopt when f is a PBF.
std::optional<std::string> pbf_violation(const BooleanFunction &f, const ConstraintSystem &cs);

// Basis of the whole PBF space as truth-table rows; the all-ones function is
// the final generator, the rest are lifted null-space vectors (zero on GF(2)).
struct PbfSpace {
    FieldSpec field;
    BitMatrix basis; // dim x 2^n
    std::size_t dim; // = 2^n - 1 - rank(M)
};

PbfSpace pbf_space(const ConstraintSystem &cs);

// XOR of the basis rows selected by the mask bits (bit i of mask_words picks
// row i); mask bits past dim are ignored.
BooleanFunction combine_basis(const PbfSpace &space, const std::vector<uint64_t> &mask_words);

// Uniform member of the space, deterministic in (space, seed).
BooleanFunction sample_pbf(const PbfSpace &space, uint64_t seed);

// A preferred function R with tr(R(x+1) + R(x)) = f(x): per pair {x, x+1}
// R(x) is seed-random and R(x+1) = R(x) + f(x)*c with c the least trace-1
// element. Throws if f fails the PBF check.
VectorialFunction lift_pbf_to_pf(const BooleanFunction &f, const USet &u, uint64_t seed);

// Closed-form counts; all quantities fit in int64 at desk scale.
struct CountingRecord {
    unsigned n;
    int64_t log2_pf_per_pbf;  // n*2^n - 2^(n-1)
    int64_t log2_ccz_lower;   // (2^n + 2)/3 - 4n^2 - 2n
    int64_t nl_lower;         // 2^(n-2) - 2^(n/2+1)/4 - 1
    int64_t expected_rank;    // (2^(n+1) - 5)/3
    int64_t dim_pf;           // n*2^n + 2^(n-1) - 1 - expected_rank
};

// Throws std::invalid_argument for odd n.
CountingRecord counting_formulas(unsigned n);

} // namespace pbf
