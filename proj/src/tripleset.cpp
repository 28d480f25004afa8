#include "pbf/tripleset.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pbf {

TSetPartition t_partition(const FieldSpec &field) {
    TSetPartition part{field, std::vector<uint8_t>(field.size()), 0, 0, 0};
    for (uint32_t v = 0; v < field.size(); ++v) {
        int ta = field.trace(field.inv(Fe{v}));
        int tb = field.trace(field.inv(Fe{v ^ 1u}));
        uint8_t c = (ta && tb) ? 1 : (ta != tb) ? 2 : 3;
        part.cls[v] = c;
        if (c == 1) ++part.count1;
        else if (c == 2) ++part.count2;
        else ++part.count3;
    }
    return part;
}

int64_t t1_closed_form(unsigned n) {
    if (n % 2 != 0 || n < 2 || n > 40)
        throw std::invalid_argument("t1_closed_form: n must be even and in [2, 40]");
    int64_t prev = 1, cur = 1; // u_0, u_1
    for (unsigned m = 1; m < n; ++m) {
        int64_t next = 2 * cur - 8 * prev;
        prev = cur;
        cur = next;
    }
    const int64_t pw = int64_t(1) << n;
    if ((2 * cur) % pw != 0 || (pw + 1 - 2 * cur / pw) % 4 != 0)
        throw std::logic_error("t1_closed_form: recurrence lost exactness");
    return (pw + 1 - 2 * cur / pw) / 4;
}

TsKind classify(const std::array<Fe, 3> &elems, const TSetPartition &part) {
    int in3 = 0;
    for (Fe e : elems) in3 += part.of(e) == 3;
    if (in3 == 3) return TsKind::fat;
    if (in3 == 1) return TsKind::slim;
    throw std::logic_error("classify: triple set with " + std::to_string(in3) +
                           " class-3 elements");
}

std::vector<TripleSet> all_triple_sets(const FieldSpec &field, const TSetPartition &part) {
    const Fe w = field.omega();
    const Fe w2 = field.mul(w, w);
    std::vector<std::array<Fe, 3>> raw;
    raw.reserve(field.size());
    for (uint32_t a = 2; a < field.size(); ++a) {
        if (a == w.v || a == w2.v) continue;
        auto elem = [&](Fe t) { return field.add(t, field.inv(t)); };
        std::array<Fe, 3> ts = {elem(Fe{a}), elem(field.mul(w, Fe{a})),
                                elem(field.mul(w2, Fe{a}))};
        std::sort(ts.begin(), ts.end());
        if (ts[0] == ts[1] || ts[1] == ts[2] || (ts[0].v ^ ts[1].v ^ ts[2].v) != 0)
            throw std::logic_error("all_triple_sets: malformed triple set");
        raw.push_back(ts);
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    std::vector<TripleSet> out;
    out.reserve(raw.size());
    for (const auto &ts : raw)
        out.push_back(TripleSet{ts, classify(ts, part) == TsKind::fat});
    return out;
}

TsGraph build_graph(const FieldSpec &field) {
    TSetPartition part = t_partition(field);
    TsGraph g{field, all_triple_sets(field, part), {}, 0};

    std::vector<uint32_t> owner(field.size(), UINT32_MAX);
    for (uint32_t i = 0; i < g.verts.size(); ++i)
        for (Fe e : g.verts[i].elems) owner[e.v] = i;

    g.adj.resize(g.verts.size());
    for (uint32_t i = 0; i < g.verts.size(); ++i) {
        for (Fe a : g.verts[i].elems) {
            if (part.of(a) != 3) continue; // neighbour exists iff tr(1/(a+1)) = 0
            uint32_t to = owner[a.v ^ 1u];
            if (to == UINT32_MAX || to == i)
                throw std::logic_error("build_graph: anchor maps outside the partition");
            g.adj[i].push_back(TsGraph::Arc{to, a});
        }
        std::sort(g.adj[i].begin(), g.adj[i].end(),
                  [&](const TsGraph::Arc &x, const TsGraph::Arc &y) { return x.to < y.to; });
        std::size_t deg = g.adj[i].size();
        if (deg != 1 && deg != 3) throw std::logic_error("build_graph: vertex degree not 1 or 3");
        if ((deg == 3) != g.verts[i].fat)
            throw std::logic_error("build_graph: degree disagrees with fat/slim class");
        g.edges += deg;
    }
    g.edges /= 2;
    return g;
}

GraphStats adjacency_stats(const std::vector<std::vector<uint32_t>> &adj) {
    const std::size_t n = adj.size();
    GraphStats st;
    st.vertices = n;
    for (const auto &nb : adj) st.edges += nb.size();
    st.edges /= 2;

    std::vector<int64_t> dist(n);
    std::vector<uint32_t> parent(n);
    std::vector<uint8_t> seen(n, 0);
    std::size_t best_girth = SIZE_MAX;

    // BFS from every vertex: component count from unseen starts, diameter as
    // the max eccentricity, girth as the min closed-walk estimate
    // dist[u] + dist[v] + 1 over non-tree edges (exact over all sources).
    std::deque<uint32_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = UINT32_MAX;
        if (!seen[s]) ++st.components;
        queue.clear();
        queue.push_back(static_cast<uint32_t>(s));
        std::size_t ecc = 0;
        while (!queue.empty()) {
            uint32_t u = queue.front();
            queue.pop_front();
            seen[u] = 1;
            ecc = static_cast<std::size_t>(dist[u]);
            for (uint32_t v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    std::size_t c = static_cast<std::size_t>(dist[u] + dist[v] + 1);
                    if (c < best_girth) best_girth = c;
                }
            }
        }
        if (ecc > st.diameter) st.diameter = ecc;
    }
    if (best_girth != SIZE_MAX) st.girth = best_girth;
    return st;
}

GraphStats graph_stats(const TsGraph &g) {
    std::vector<std::vector<uint32_t>> adj(g.adj.size());
    for (std::size_t i = 0; i < g.adj.size(); ++i)
        for (const auto &a : g.adj[i]) adj[i].push_back(a.to);
    return adjacency_stats(adj);
}

std::vector<std::vector<uint32_t>> fat_subgraph(const TsGraph &g,
                                                std::vector<uint32_t> *vertex_ids) {
    std::vector<uint32_t> sub_index(g.verts.size(), UINT32_MAX);
    std::vector<uint32_t> ids;
    for (uint32_t i = 0; i < g.verts.size(); ++i)
        if (g.verts[i].fat) {
            sub_index[i] = static_cast<uint32_t>(ids.size());
            ids.push_back(i);
        }
    std::vector<std::vector<uint32_t>> adj(ids.size());
    for (uint32_t si = 0; si < ids.size(); ++si)
        for (const auto &a : g.adj[ids[si]])
            if (sub_index[a.to] != UINT32_MAX) adj[si].push_back(sub_index[a.to]);
    if (vertex_ids) *vertex_ids = std::move(ids);
    return adj;
}

GraphStats fat_subgraph_stats(const TsGraph &g) {
    return adjacency_stats(fat_subgraph(g));
}

bool has_3_regular_subgraph(const std::vector<std::vector<uint32_t>> &adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> deg(n);
    std::vector<uint8_t> removed(n, 0);
    std::deque<uint32_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = adj[i].size();
        if (deg[i] < 3) {
            removed[i] = 1;
            queue.push_back(static_cast<uint32_t>(i));
        }
    }
    std::size_t alive = n - queue.size();
    while (!queue.empty()) {
        uint32_t u = queue.front();
        queue.pop_front();
        for (uint32_t v : adj[u]) {
            if (removed[v]) continue;
            if (--deg[v] < 3) {
                removed[v] = 1;
                --alive;
                queue.push_back(v);
            }
        }
    }
    return alive > 0;
}

bool has_3_regular_subgraph(const TsGraph &g) {
    std::vector<std::vector<uint32_t>> adj(g.adj.size());
    for (std::size_t i = 0; i < g.adj.size(); ++i)
        for (const auto &a : g.adj[i]) adj[i].push_back(a.to);
    return has_3_regular_subgraph(adj);
}

std::string export_adjacency(const TsGraph &g) {
    std::string out;
    for (std::size_t i = 0; i < g.verts.size(); ++i) {
        out += g.field.element_hex(g.verts[i].elems[0]);
        out += ':';
        for (const auto &a : g.adj[i]) {
            out += ' ';
            out += g.field.element_hex(g.verts[a.to].elems[0]);
        }
        out += '\n';
    }
    return out;
}

} // namespace pbf
