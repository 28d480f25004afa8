#pragma once

#include <cstdint>
#include <optional>

#include "pbf/tripleset.hpp"

namespace pbf {

// Published reference results the toolkit reproduces, keyed by n. Graph rows
// exist for n <= 12 only; rank/dimension rows for 6 <= n <= 14.
struct ReferenceRow {
    unsigned n;
    int64_t rank_m;   // = (2^(n+1) - 5)/3 for every computed n
    int64_t dim_pbf;  // 2^n - 1 - rank_m
    int64_t dim_pbf4; // independent low-weight generators
    std::optional<GraphStats> graph;
    std::optional<GraphStats> fat_graph;
};

inline const ReferenceRow *reference_row(unsigned n) {
    static const ReferenceRow rows[] = {
        {6, 41, 22, 16, GraphStats{10, 6, std::nullopt, 4, 2}, GraphStats{1, 0, std::nullopt, 1, 0}},
        {8, 169, 86, 64, GraphStats{42, 35, 8, 8, 6}, GraphStats{14, 13, 8, 2, 4}},
        {10, 681, 342, 256, GraphStats{170, 120, 5, 51, 4}, GraphStats{35, 15, 5, 21, 2}},
        {12, 2729, 1366, 1024, GraphStats{682, 517, 9, 170, 18}, GraphStats{176, 138, 9, 43, 18}},
        {14, 10921, 5462, 4096, std::nullopt, std::nullopt},
    };
    for (const auto &r : rows)
        if (r.n == n) return &r;
    return nullptr;
}

// Reference sampling averages of NL(G) (sample means over 10000/10000/5000
// draws) used as regression anchors with a +-1.0 band.
struct NlReference {
    unsigned n;
    double average;
    double variance; // population std-dev form
};

inline const NlReference *nl_reference(unsigned n) {
    static const NlReference rows[] = {
        {6, 18.4022, 1.2034},
        {8, 94.2740, 2.2576},
        {10, 434.2524, 3.7225},
    };
    for (const auto &r : rows)
        if (r.n == n) return &r;
    return nullptr;
}

} // namespace pbf
