#include "pbf/nondecomp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pbf {

const char *nd_kind_name(NdKind k) {
    switch (k) {
    case NdKind::type_i: return "type-i";
    case NdKind::type_ii: return "type-ii";
    case NdKind::type_iiia: return "type-iiia";
    case NdKind::type_iiib: return "type-iiib";
    }
    return "?";
}

NonDecompPbf make_type_i(const TSetPartition &part, Fe beta) {
    if (part.of(beta) != 1)
        throw std::invalid_argument("make_type_i: beta must have both traces 1 "
                                    "(class 1); got class " +
                                    std::to_string(part.of(beta)));
    const FieldSpec &field = part.field;
    BooleanFunction f = BooleanFunction::indicator(field, {beta, Fe{beta.v ^ 1u}});
    return NonDecompPbf{std::move(f), NdKind::type_i, "beta=" + field.element_hex(beta)};
}

NonDecompPbf make_type_ii(const TSetPartition &part, const TripleSet &ts) {
    if (ts.fat) throw std::invalid_argument("make_type_ii: triple set must be slim");
    const FieldSpec &field = part.field;
    std::vector<Fe> supp;
    std::string desc;
    for (Fe e : ts.elems) {
        if (part.of(e) == 2) {
            supp.push_back(e);
            supp.push_back(Fe{e.v ^ 1u});
        }
        desc += (desc.empty() ? "" : ",") + field.element_hex(e);
    }
    if (supp.size() != 4) throw std::logic_error("make_type_ii: slim set without two class-2 elements");
    return NonDecompPbf{BooleanFunction::indicator(field, supp), NdKind::type_ii,
                        "ts={" + desc + "}"};
}

namespace {

// Anchor of the unique edge from vertex `from` to vertex `to`.
Fe arc_anchor(const TsGraph &g, uint32_t from, uint32_t to) {
    for (const auto &a : g.adj[from])
        if (a.to == to) return a.anchor;
    throw std::logic_error("arc_anchor: vertices are not adjacent");
}

std::string vertex_list(const TsGraph &g, const std::vector<uint32_t> &vs) {
    std::string s;
    for (uint32_t v : vs) s += (s.empty() ? "" : ",") + g.field.element_hex(g.verts[v].elems[0]);
    return s;
}

BooleanFunction support_from_pairs(const FieldSpec &field, const std::vector<Fe> &anchors) {
    std::vector<Fe> supp;
    supp.reserve(anchors.size() * 2);
    for (Fe a : anchors) {
        supp.push_back(a);
        supp.push_back(Fe{a.v ^ 1u});
    }
    return BooleanFunction::indicator(field, supp);
}

} // namespace

std::vector<NonDecompPbf> find_type_iiia(const TsGraph &g, std::size_t max_len) {
    std::vector<uint32_t> fat_ids;
    std::vector<std::vector<uint32_t>> fadj = fat_subgraph(g, &fat_ids);
    std::vector<NonDecompPbf> out;
    if (max_len < 3 || fadj.empty()) return out;

    // Simple cycles with their minimum vertex as the DFS root; each cycle is
    // seen once per direction, so keep path[1] < path.back() only.
    const std::size_t n = fadj.size();
    std::vector<uint8_t> on_path(n, 0);
    std::vector<uint32_t> path;

    auto emit = [&](const std::vector<uint32_t> &cycle) {
        std::vector<Fe> anchors;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            uint32_t a = fat_ids[cycle[i]];
            uint32_t b = fat_ids[cycle[(i + 1) % cycle.size()]];
            anchors.push_back(arc_anchor(g, a, b));
        }
        std::vector<uint32_t> orig(cycle.size());
        for (std::size_t i = 0; i < cycle.size(); ++i) orig[i] = fat_ids[cycle[i]];
        out.push_back(NonDecompPbf{support_from_pairs(g.field, anchors), NdKind::type_iiia,
                                   "cycle=[" + vertex_list(g, orig) + "]"});
    };

    std::function<void(uint32_t, uint32_t)> dfs = [&](uint32_t u, uint32_t root) {
        for (uint32_t v : fadj[u]) {
            if (v == root && path.size() >= 3) {
                if (path[1] < path.back()) emit(path);
                continue;
            }
            if (v <= root || on_path[v] || path.size() >= max_len) continue;
            on_path[v] = 1;
            path.push_back(v);
            dfs(v, root);
            path.pop_back();
            on_path[v] = 0;
        }
    };

    for (uint32_t s = 0; s < n; ++s) {
        on_path[s] = 1;
        path.assign(1, s);
        dfs(s, s);
        on_path[s] = 0;
    }
    return out;
}

std::vector<NonDecompPbf> find_type_iiib(const TsGraph &g, std::size_t max_len) {
    std::vector<NonDecompPbf> out;
    if (max_len < 2) return out;

    // Smaller of the two class-2 elements of a slim vertex (deterministic
    // choice of the endpoint support pair).
    TSetPartition part = t_partition(g.field);
    auto endpoint_extra = [&](uint32_t v) {
        for (Fe e : g.verts[v].elems)
            if (part.of(e) == 2) return e; // elems sorted, first class-2 is least
        throw std::logic_error("endpoint_extra: slim vertex without class-2 element");
    };

    auto emit = [&](const std::vector<uint32_t> &path) {
        std::vector<Fe> anchors;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            anchors.push_back(arc_anchor(g, path[i], path[i + 1]));
        Fe e1 = endpoint_extra(path.front());
        Fe e2 = endpoint_extra(path.back());
        anchors.push_back(e1);
        anchors.push_back(e2);
        out.push_back(NonDecompPbf{support_from_pairs(g.field, anchors), NdKind::type_iiib,
                                   "path=[" + vertex_list(g, path) + "] extras=" +
                                       g.field.element_hex(e1) + "," + g.field.element_hex(e2)});
    };

    std::vector<uint8_t> on_path(g.verts.size(), 0);
    std::vector<uint32_t> path;
    std::function<void(uint32_t)> dfs = [&](uint32_t u) {
        for (const auto &arc : g.adj[u]) {
            uint32_t v = arc.to;
            if (on_path[v]) continue;
            if (!g.verts[v].fat) {
                if (path.front() < v) { // endpoints slim; dedupe reversal
                    path.push_back(v);
                    emit(path);
                    path.pop_back();
                }
                continue;
            }
            if (path.size() + 1 >= max_len) continue; // room needed for the far endpoint
            on_path[v] = 1;
            path.push_back(v);
            dfs(v);
            path.pop_back();
            on_path[v] = 0;
        }
    };

    for (uint32_t s = 0; s < g.verts.size(); ++s) {
        if (g.verts[s].fat) continue;
        on_path[s] = 1;
        path.assign(1, s);
        dfs(s);
        on_path[s] = 0;
    }
    return out;
}

Pbf4Space pbf4_space(const FieldSpec &field) {
    TSetPartition part = t_partition(field);
    std::vector<BitVector> rows;
    for (uint32_t v = 0; v < field.size(); v += 2)
        if (part.cls[v] == 1)
            rows.push_back(make_type_i(part, Fe{v}).f.tt());
    for (const TripleSet &ts : all_triple_sets(field, part))
        if (!ts.fat)
            rows.push_back(make_type_ii(part, ts).f.tt());

    Pbf4Space sp{field, BitMatrix::from_rows(rows, field.size()), 0, 0};
    sp.rank = rank(sp.x);
    sp.dim = sp.rank;
    return sp;
}

} // namespace pbf
