#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pbf/boolfun.hpp"
#include "pbf/pbf_core.hpp"
#include "pbf/vectfun.hpp"

namespace pbf {

// G(x) = 1/x + f(1/x) with the output bit embedded as the element 0 or 1.
// Throws when f fails the PBF check; for a PBF, G is a differentially
// 4-uniform permutation.
VectorialFunction construct_g(const BooleanFunction &f, const USet &u);

// lut[a] = a^(-1) (0 -> 0); equals construct_g of the zero function.
VectorialFunction inverse_function(const FieldSpec &field);

bool is_permutation(const VectorialFunction &F);

struct DdtSummary {
    uint32_t max = 0; // differential uniformity
    std::map<uint32_t, uint64_t> spectrum; // entry value -> count over rows a != 0
};

DdtSummary ddt(const VectorialFunction &F);

struct WalshSummary {
    uint32_t max_abs = 0;
    int64_t nonlinearity = 0; // 2^(n-1) - max_abs/2
    std::map<uint32_t, uint64_t> extended_spectrum; // |W(a,b)| -> count, b != 0
};

WalshSummary walsh(const VectorialFunction &F);

// Max ANF degree over the n coordinate functions.
int algebraic_degree(const VectorialFunction &F);

// CCZ-invariant fingerprint: equal records are necessary (not sufficient)
// for CCZ-equivalence.
struct CczInvariants {
    std::map<uint32_t, uint64_t> differential_spectrum;
    std::map<uint32_t, uint64_t> extended_walsh_spectrum;
    int degree = 0;

    uint64_t fingerprint() const;

    friend bool operator==(const CczInvariants &a, const CczInvariants &b) {
        return a.degree == b.degree && a.differential_spectrum == b.differential_spectrum &&
               a.extended_walsh_spectrum == b.extended_walsh_spectrum;
    }
};

CczInvariants ccz_invariants(const VectorialFunction &F);

struct SurveyRow {
    int64_t nl = 0;
    uint32_t delta = 0; // 0 unless details were requested
    int degree = -1;    // -1 unless details were requested
    bool permutation = false;
};

struct SurveyResult {
    std::vector<SurveyRow> rows;
    double average_nl = 0.0;
    double var_nl = 0.0; // sqrt(sum (nl - avg)^2 / N), population form
    std::map<int64_t, uint64_t> histogram;
};

// Analyzes `count` sampled PBFs; sample i uses the seed stream (seed, i), so
// the result is independent of the thread count. details adds delta and
// degree per row. count == 0 yields an empty result.
SurveyResult nl_survey(const PbfSpace &space, std::size_t count, uint64_t seed, bool details,
                       unsigned threads = 0);

// Compact 'a^b' rendering of a nonlinearity histogram (b functions hit NL a).
std::string histogram_compact(const std::map<int64_t, uint64_t> &hist);

} // namespace pbf
