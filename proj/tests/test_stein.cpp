#include "barnette/stein.hpp"

#include <set>

#include "barnette/oracle.hpp"
#include "barnette/synth.hpp"
#include "doctest.h"

using namespace barnette;

namespace {

struct Cube14Setup {
    PlaneGraph g;
    TriColoring coloring;
    BigSmallSplit split;
};

Cube14Setup cube14_setup() {
    Cube14Setup s;
    s.g = synth::cube14().graph;
    s.coloring = three_coloring(s.g);
    s.split = big_small_split(s.g);
    return s;
}

bool oracle_contains(const PlaneGraph& g, const HamiltonCycle& h) {
    DualResult d = dual(g);
    auto oracle_cycles = oracle::enumerate_hamilton_cycles(d.graph);
    // Compare as dual edge sets, mapped through the correspondence.
    std::vector<std::pair<int, int>> mine;
    for (int e : h.crossing_edges) {
        int de = d.correspondence.primal_to_dual[e];
        mine.push_back(d.graph.edges()[de]);
    }
    std::sort(mine.begin(), mine.end());
    for (const auto& cyc : oracle_cycles.cycles)
        if (cyc == mine) return true;
    return false;
}

}  // namespace

TEST_CASE("octahedron two-path partition maps to a cube cycle") {
    PlaneGraph oct = synth::octahedron();
    // Parts {4,0,5} and {1,2,3}: hub-rim-hub path and a rim path.
    ForestBipartition uw;
    uw.part_of = {0, 1, 1, 1, 0, 0};
    require_forest_bipartition(oct, uw);
    HamiltonCycle h = forest_partition_to_hamilton(oct, uw);
    CHECK(h.dual_vertices.size() == 8);
    verify_hamilton_cycle(oct, h);
    CHECK(oracle_contains(oct, h));
}

TEST_CASE("whole vertex set is rejected") {
    PlaneGraph oct = synth::octahedron();
    ForestBipartition uw;
    uw.part_of.assign(6, 0);
    CHECK_THROWS_AS(forest_partition_to_hamilton(oct, uw), graph_error);
}

TEST_CASE("round trip between partitions and cycles") {
    PlaneGraph oct = synth::octahedron();
    ForestBipartition uw;
    uw.part_of = {0, 1, 1, 1, 0, 0};
    HamiltonCycle h = forest_partition_to_hamilton(oct, uw);
    ForestBipartition back = hamilton_to_forest_partition(oct, h);
    // Both sides are trees, so e(U) = |U|-1 on both sides.
    for (int which = 0; which < 2; ++which) {
        auto part = back.part(which);
        int inner = 0;
        for (auto [u, v] : oct.edges())
            if (back.part_of[u] == which && back.part_of[v] == which) ++inner;
        CHECK(inner == static_cast<int>(part.size()) - 1);
    }
    HamiltonCycle again = forest_partition_to_hamilton(oct, back);
    verify_hamilton_cycle(oct, again);
    CHECK(again.edge_set(oct) == h.edge_set(oct));
}

TEST_CASE("restrict after extend is the identity on the big set") {
    auto s = cube14_setup();
    BigSubgraph J = big_subgraph(s.g, s.coloring, s.split);
    auto bip = is_bipartite(J.graph);
    REQUIRE(bip.has_value());
    ForestBipartition L;
    L.part_of = *bip;

    SmallPathCover cover = small_path_cover(s.g, s.coloring, s.split);
    std::vector<int> base(s.g.vertex_count(), -1);
    for (int j = 0; j < J.graph.vertex_count(); ++j) base[J.big_to_orig[j]] = L.part_of[j];
    ForestBipartition full = extend_to_full(s.g, s.coloring, cover, base);
    require_forest_bipartition(s.g, full);

    ForestBipartition back = restrict_to_big(s.g, s.coloring, s.split, J, full);
    CHECK(back.part_of == L.part_of);
}

TEST_CASE("bipartite fast path on CUBE14") {
    auto s = cube14_setup();
    HamiltonCycle h = bipartite_fastpath(s.g, s.coloring, s.split);
    CHECK(h.dual_vertices.size() == 24);
    CHECK(oracle_contains(s.g, h));
}

TEST_CASE("fast path hypothesis fails on the octahedron") {
    PlaneGraph oct = synth::octahedron();
    TriColoring c = three_coloring(oct);
    BigSmallSplit split = big_small_split(oct);
    CHECK_THROWS_AS(bipartite_fastpath(oct, c, split), graph_error);
}

TEST_CASE("fast path hypothesis on the octahedron seed expansion") {
    // The expansion of the octahedron seed has all-big facial triangles.
    auto syn = synth::synthesize_triangulation(synth::octahedron(), three_coloring(synth::octahedron()));
    TriColoring c = three_coloring(syn.graph);
    BigSmallSplit split = big_small_split(syn.graph);
    CHECK_THROWS_AS(bipartite_fastpath(syn.graph, c, split), graph_error);
    try {
        bipartite_fastpath(syn.graph, c, split);
    } catch (const graph_error& e) {
        CHECK(e.code() == errc::hypothesis_failed);
    }
}

TEST_CASE("lower bound on CUBE14 delivers four distinct verified cycles") {
    auto s = cube14_setup();
    LowerBoundResult res = hamilton_lower_bound(s.g, s.coloring, s.split);
    CHECK(res.k == 2);
    CHECK(res.cycles.size() >= 4);
    std::set<std::vector<std::pair<int, int>>> keys;
    for (const auto& h : res.cycles) {
        verify_hamilton_cycle(s.g, h);
        CHECK(keys.insert(h.edge_set(s.g)).second);
        CHECK(oracle_contains(s.g, h));
    }
    // Oracle count dominates the bound.
    DualResult d = dual(s.g);
    CHECK(oracle::enumerate_hamilton_cycles(d.graph).count >= 4);
}

TEST_CASE("quadrilateral big subgraph yields at least ten cycles") {
    PlaneGraph g = synth::quad_core();
    REQUIRE(validate_eulerian_triangulation(g).ok);
    TriColoring c = three_coloring(g);
    BigSmallSplit split = big_small_split(g);
    REQUIRE(split.big.size() == 4);
    BigSubgraph J = big_subgraph(g, c, split);
    CHECK(J.graph.edge_count() == 4);  // the ring is a plain quadrilateral
    LowerBoundResult res = hamilton_lower_bound(g, c, split);
    CHECK(res.k == 2);
    CHECK(res.cycles.size() >= 10);
    std::set<std::vector<std::pair<int, int>>> keys;
    for (const auto& h : res.cycles) {
        verify_hamilton_cycle(g, h);
        CHECK(keys.insert(h.edge_set(g)).second);
    }
    // The oracle dominates the construction.
    DualResult d = dual(g);
    CHECK(oracle::enumerate_hamilton_cycles(d.graph).count >=
          static_cast<long long>(res.cycles.size()));
}

TEST_CASE("hamiltonize the double wheel family directly") {
    for (int l = 2; l <= 6; ++l) {
        CAPTURE(l);
        PlaneGraph g = synth::double_wheel(l);
        HamiltonizeResult res = hamiltonize(g);
        CHECK(res.family == "double-wheel");
        CHECK(static_cast<int>(res.cycle.dual_vertices.size()) == 2 * g.vertex_count() - 4);
        verify_hamilton_cycle(g, res.cycle);
        if (g.vertex_count() <= 12) CHECK(oracle_contains(g, res.cycle));
    }
}

TEST_CASE("hamiltonize CUBE14 through the general branch") {
    auto s = cube14_setup();
    HamiltonizeResult res = hamiltonize(s.g);
    CHECK(res.family == "general");
    CHECK(res.cycle.dual_vertices.size() == 24);
    verify_hamilton_cycle(s.g, res.cycle);
    CHECK(oracle_contains(s.g, res.cycle));
    require_forest_bipartition(s.g, res.partition);
}

TEST_CASE("primal vertex to dual face correspondence") {
    PlaneGraph p = synth::cube();
    DualResult d = dual(p);  // the octahedron
    auto faces = primal_vertex_faces(p, d.graph);
    std::set<int> distinct(faces.begin(), faces.end());
    CHECK(distinct.size() == faces.size());
    CHECK(static_cast<int>(faces.size()) == d.graph.face_count());
}
