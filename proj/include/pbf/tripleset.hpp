#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbf/gf2n.hpp"

namespace pbf {

// Partition of GF(2^n) by the trace pair (tr(1/x), tr(1/(x+1))):
// class 1 = (1,1), class 2 = mixed, class 3 = (0,0). 0 and 1 land in class 3
// because tr(1) = 0 when n is even.
struct TSetPartition {
    FieldSpec field;
    std::vector<uint8_t> cls; // per element: 1, 2 or 3
    std::size_t count1 = 0, count2 = 0, count3 = 0;

    int of(Fe x) const { return cls[x.v]; }
};

TSetPartition t_partition(const FieldSpec &field);

// |T1| by the exact closed form, evaluated with the integer Chebyshev
// recurrence u_{m+1} = 2 u_m - 8 u_{m-1} (u_m = sqrt(8)^m cos(m arccos(1/sqrt 8))):
// |T1| = (2^n + 1 - 2 u_n / 2^n) / 4.
int64_t t1_closed_form(unsigned n);

// {a + 1/a, wa + 1/(wa), w^2 a + 1/(w^2 a)}: three distinct elements summing
// to zero, none in GF(2). fat = all three in class 3 (three neighbours),
// otherwise exactly one is (slim, one neighbour).
struct TripleSet {
    std::array<Fe, 3> elems; // sorted ascending
    bool fat = false;
};

enum class TsKind { fat, slim };

// Throws std::logic_error when the class-3 count is not 1 or 3 (cannot
// happen for genuine triple sets; guards corrupted input).
TsKind classify(const std::array<Fe, 3> &elems, const TSetPartition &part);

// All (2^(n-1) - 2)/3 distinct triple sets, ordered by minimum element.
// Their union is S = {x outside GF(2) : tr(1/x) = 0}, pairwise disjoint.
std::vector<TripleSet> all_triple_sets(const FieldSpec &field, const TSetPartition &part);

// Triple sets joined when some a in A, b in B satisfy a + b = 1. Every class-3
// element of a vertex anchors exactly one arc; degrees are 1 (slim) or 3 (fat).
struct TsGraph {
    FieldSpec field;
    std::vector<TripleSet> verts;
    struct Arc {
        uint32_t to;
        Fe anchor; // element of this vertex; anchor + 1 lies in verts[to]
    };
    std::vector<std::vector<Arc>> adj;
    std::size_t edges = 0;
};

TsGraph build_graph(const FieldSpec &field);

struct GraphStats {
    std::size_t vertices = 0, edges = 0;
    std::optional<std::size_t> girth; // nullopt = no cycle
    std::size_t components = 0;
    std::size_t diameter = 0; // max over components of the component diameter
};

// Stats of a plain undirected adjacency structure (BFS from every vertex).
GraphStats adjacency_stats(const std::vector<std::vector<uint32_t>> &adj);

GraphStats graph_stats(const TsGraph &g);

// Induced subgraph over fat vertices. vertex_ids (optional) receives, per
// subgraph index, the originating graph index.
std::vector<std::vector<uint32_t>> fat_subgraph(const TsGraph &g,
                                                std::vector<uint32_t> *vertex_ids = nullptr);
GraphStats fat_subgraph_stats(const TsGraph &g);

// Max degree here is 3, so a 3-regular subgraph exists iff the 3-core
// (iterated removal of vertices with fewer than 3 surviving neighbours) is
// nonempty.
bool has_3_regular_subgraph(const std::vector<std::vector<uint32_t>> &adj);
bool has_3_regular_subgraph(const TsGraph &g);

// One line per vertex: "min-elem-hex: neighbour-min-elem-hex ...".
std::string export_adjacency(const TsGraph &g);

} // namespace pbf
