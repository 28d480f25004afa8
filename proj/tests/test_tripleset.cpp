#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pbf/pbf_core.hpp"
#include "pbf/tripleset.hpp"

using namespace pbf;

TEST_CASE("trace-pair partition: brute counts equal the closed form") {
    struct Row {
        unsigned n;
        int64_t t1;
    } rows[] = {{6, 14}, {8, 72}, {10, 242}, {12, 1036}};
    for (const auto &r : rows) {
        FieldSpec f = FieldSpec::with_default_poly(r.n);
        TSetPartition part = t_partition(f);
        CHECK(part.count1 == static_cast<std::size_t>(r.t1));
        CHECK(part.count1 == part.count3);
        CHECK(part.count1 + part.count2 + part.count3 == f.size());
        CHECK(t1_closed_form(r.n) == r.t1);
        CHECK(part.of(Fe{0}) == 3);
        CHECK(part.of(Fe{1}) == 3);
    }
}

TEST_CASE("triple sets partition S") {
    for (unsigned n : {6u, 8u, 12u}) {
        FieldSpec f = FieldSpec::with_default_poly(n);
        TSetPartition part = t_partition(f);
        auto sets = all_triple_sets(f, part);
        CHECK(sets.size() == (f.size() / 2 - 2) / 3);

        std::set<uint32_t> covered;
        for (const auto &ts : sets) {
            CHECK((ts.elems[0].v ^ ts.elems[1].v ^ ts.elems[2].v) == 0);
            for (Fe e : ts.elems) {
                CHECK(covered.insert(e.v).second); // pairwise disjoint
                // 1 + e never lies in the same set
                for (Fe o : ts.elems) CHECK(o.v != (e.v ^ 1u));
            }
        }
        std::set<uint32_t> s_set;
        for (uint32_t v = 2; v < f.size(); ++v)
            if (f.trace(f.inv(Fe{v})) == 0) s_set.insert(v);
        CHECK(covered == s_set);

        // canonical order
        CHECK(std::is_sorted(sets.begin(), sets.end(), [](const TripleSet &a, const TripleSet &b) {
            return a.elems[0] < b.elems[0];
        }));
    }
}

TEST_CASE("replacing w by w^2 yields the same triple sets") {
    FieldSpec f = FieldSpec::with_default_poly(8);
    TSetPartition part = t_partition(f);
    auto sets = all_triple_sets(f, part);

    Fe w2 = f.sqr(f.omega());
    std::vector<std::array<uint32_t, 3>> alt;
    for (uint32_t a = 2; a < f.size(); ++a) {
        if (a == f.omega().v || a == w2.v) continue;
        auto elem = [&](Fe t) { return f.add(t, f.inv(t)).v; };
        std::array<uint32_t, 3> ts = {elem(Fe{a}), elem(f.mul(w2, Fe{a})),
                                      elem(f.mul(f.sqr(w2), Fe{a}))};
        std::sort(ts.begin(), ts.end());
        alt.push_back(ts);
    }
    std::sort(alt.begin(), alt.end());
    alt.erase(std::unique(alt.begin(), alt.end()), alt.end());
    REQUIRE(alt.size() == sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int k = 0; k < 3; ++k) CHECK(alt[i][k] == sets[i].elems[k].v);
}

TEST_CASE("fat/slim classification counts") {
    struct Row {
        unsigned n;
        std::size_t fat;
    } rows[] = {{6, 1}, {8, 14}, {10, 35}, {12, 176}};
    for (const auto &r : rows) {
        FieldSpec f = FieldSpec::with_default_poly(r.n);
        TSetPartition part = t_partition(f);
        auto sets = all_triple_sets(f, part);
        std::size_t fat = 0;
        for (const auto &ts : sets) fat += ts.fat;
        CHECK(fat == r.fat);
    }
    // corrupted input: a triple with two class-3 members is rejected
    FieldSpec f = FieldSpec::with_default_poly(6);
    TSetPartition part = t_partition(f);
    std::array<Fe, 3> fake{};
    int found = 0;
    for (uint32_t v = 2; v < f.size() && found < 2; ++v)
        if (part.cls[v] == 3) fake[found++] = Fe{v};
    for (uint32_t v = 2; v < f.size(); ++v)
        if (part.cls[v] == 2) {
            fake[2] = Fe{v};
            break;
        }
    CHECK_THROWS_AS(classify(fake, part), std::logic_error);
}

TEST_CASE("graph construction: degrees, anchors, no self-loops") {
    for (unsigned n : {6u, 8u, 10u}) {
        FieldSpec f = FieldSpec::with_default_poly(n);
        TsGraph g = build_graph(f);
        for (std::size_t i = 0; i < g.adj.size(); ++i) {
            std::size_t deg = g.adj[i].size();
            CHECK((deg == 1 || deg == 3));
            CHECK((deg == 3) == g.verts[i].fat);
            for (const auto &arc : g.adj[i]) {
                CHECK(arc.to != i);
                const auto &mine = g.verts[i].elems;
                CHECK(std::count(mine.begin(), mine.end(), arc.anchor) == 1);
                const auto &theirs = g.verts[arc.to].elems;
                CHECK(std::count(theirs.begin(), theirs.end(), Fe{arc.anchor.v ^ 1u}) == 1);
            }
        }
    }
}

TEST_CASE("graph statistics reproduce the reference rows") {
    struct Row {
        unsigned n;
        GraphStats full, fat;
    } rows[] = {
        {6, {10, 6, std::nullopt, 4, 2}, {1, 0, std::nullopt, 1, 0}},
        {8, {42, 35, 8, 8, 6}, {14, 13, 8, 2, 4}},
        {10, {170, 120, 5, 51, 4}, {35, 15, 5, 21, 2}},
    };
    for (const auto &r : rows) {
        FieldSpec f = FieldSpec::with_default_poly(r.n);
        TsGraph g = build_graph(f);
        GraphStats st = graph_stats(g);
        CHECK(st.vertices == r.full.vertices);
        CHECK(st.edges == r.full.edges);
        CHECK(st.girth == r.full.girth);
        CHECK(st.components == r.full.components);
        CHECK(st.diameter == r.full.diameter);
        GraphStats fs = fat_subgraph_stats(g);
        CHECK(fs.vertices == r.fat.vertices);
        CHECK(fs.edges == r.fat.edges);
        CHECK(fs.girth == r.fat.girth);
        CHECK(fs.components == r.fat.components);
        CHECK(fs.diameter == r.fat.diameter);
    }

    // n=6 is a forest: no girth and the Euler count vanishes
    TsGraph g6 = build_graph(FieldSpec::with_default_poly(6));
    GraphStats st6 = graph_stats(g6);
    CHECK_FALSE(st6.girth.has_value());
    CHECK(st6.edges + st6.components == st6.vertices);
}

TEST_CASE("3-regular subgraph criterion") {
    for (unsigned n : {6u, 8u, 10u}) {
        FieldSpec f = FieldSpec::with_default_poly(n);
        TsGraph g = build_graph(f);
        CHECK_FALSE(has_3_regular_subgraph(g));
        // full rank iff no 3-regular subgraph
        ConstraintSystem cs = build_constraints(f);
        bool full_rank =
            static_cast<int64_t>(rank(cs.m)) == counting_formulas(n).expected_rank;
        CHECK(has_3_regular_subgraph(g) == !full_rank);
    }

    // a path is cycle-free, so certainly no 3-regular subgraph
    std::vector<std::vector<uint32_t>> path{{1}, {0, 2}, {1, 3}, {2}};
    CHECK_FALSE(has_3_regular_subgraph(path));

    // K4 is 3-regular; a pendant vertex does not interfere
    std::vector<std::vector<uint32_t>> k4{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2, 4}, {3}};
    CHECK(has_3_regular_subgraph(k4));
    std::vector<std::vector<uint32_t>> pure_k4{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    CHECK(has_3_regular_subgraph(pure_k4));
}

TEST_CASE("adjacency export shape") {
    TsGraph g = build_graph(FieldSpec::with_default_poly(6));
    std::string text = export_adjacency(g);
    std::size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == 10);
    CHECK(text.find(':') != std::string::npos);
}
