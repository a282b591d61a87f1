#include "barnette/triangulation.hpp"

#include <array>
#include <set>

#include "barnette/synth.hpp"
#include "doctest.h"

using namespace barnette;

namespace {

PlaneGraph triangle() { return PlaneGraph::from_rotations({{1, 2}, {2, 0}, {0, 1}}); }

// Icosahedron: all degrees five, a triangulation that is not Eulerian.
PlaneGraph icosahedron() {
    auto u = [](int i) { return 1 + (i % 5 + 5) % 5; };
    auto l = [](int i) { return 6 + (i % 5 + 5) % 5; };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, u(i), u(i + 1)});
        faces.push_back({u(i + 1), u(i), l(i)});
        faces.push_back({l(i), l(i + 1), u(i + 1)});
        faces.push_back({11, l(i + 1), l(i)});
    }
    return barnette::synth::faces_to_rotations(12, faces);
}

bool same_partition(const TriColoring& a, const TriColoring& b) {
    // Equal up to permutation of class names.
    std::array<std::set<int>, 3> sa, sb;
    for (int k = 0; k < 3; ++k) {
        sa[k] = {a.classes[k].begin(), a.classes[k].end()};
        sb[k] = {b.classes[k].begin(), b.classes[k].end()};
    }
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        if (sa[0] == sb[perm[0]] && sa[1] == sb[perm[1]] && sa[2] == sb[perm[2]]) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("validation outcomes") {
    CHECK(validate_eulerian_triangulation(synth::octahedron()).ok);
    Diagnostics tri = validate_eulerian_triangulation(triangle());
    CHECK(tri.ok);
    CHECK(tri.three_cycle);
    Diagnostics ico = validate_eulerian_triangulation(icosahedron());
    CHECK_FALSE(ico.ok);
    bool odd = false;
    for (const auto& e : ico.errors) odd |= e.find("OddDegree") != std::string::npos;
    CHECK(odd);
    Diagnostics cube = validate_eulerian_triangulation(synth::cube());
    CHECK_FALSE(cube.ok);
}

TEST_CASE("three colouring of canonical instances") {
    TriColoring oct = three_coloring(synth::octahedron());
    auto sizes = oct.sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::array<int, 3>{2, 2, 2});
    CHECK(oct.proper_on(synth::octahedron()));

    TriColoring wheel = three_coloring(synth::double_wheel(3));
    sizes = wheel.sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::array<int, 3>{2, 3, 3});

    TriColoring t = three_coloring(triangle());
    sizes = t.sizes();
    CHECK(sizes == std::array<int, 3>{1, 1, 1});
}

TEST_CASE("three colouring unique up to class names") {
    for (const auto& inst : synth::corpus()) {
        TriColoring base = three_coloring(inst.graph, 0);
        for (int s = 1; s < inst.graph.face_count(); s += std::max(1, inst.graph.face_count() / 10)) {
            TriColoring other = three_coloring(inst.graph, s);
            CHECK(same_partition(base, other));
        }
    }
}

TEST_CASE("every face sees all three classes") {
    PlaneGraph g = synth::cube14().graph;
    TriColoring c = three_coloring(g);
    for (const Face& f : g.faces()) {
        std::set<int> cls;
        for (int v : f.boundary) cls.insert(c.class_of[v]);
        CHECK(cls.size() == 3);
    }
}

TEST_CASE("family classification") {
    auto oct = synth::octahedron();
    auto s_oct = big_small_split(oct);
    CHECK(s_oct.big.empty());
    FamilyTag t1 = classify_family(oct, s_oct);
    CHECK(t1.kind == FamilyKind::DoubleWheel);
    CHECK(t1.wheel_l == 2);

    auto dw4 = synth::double_wheel(4);
    auto s_dw4 = big_small_split(dw4);
    FamilyTag t2 = classify_family(dw4, s_dw4);
    CHECK(t2.kind == FamilyKind::DoubleWheel);
    CHECK(t2.wheel_l == 4);

    auto c14 = synth::cube14().graph;
    auto s_c14 = big_small_split(c14);
    FamilyTag t3 = classify_family(c14, s_c14);
    CHECK(t3.kind == FamilyKind::GeneralBig3);
    CHECK(s_c14.big.size() == 8);

    CHECK(classify_family(triangle(), big_small_split(triangle())).kind == FamilyKind::ThreeCycle);
}

TEST_CASE("big subgraph of CUBE14 is the cube") {
    PlaneGraph g = synth::cube14().graph;
    TriColoring c = three_coloring(g);
    BigSmallSplit split = big_small_split(g);
    BigSubgraph J = big_subgraph(g, c, split);
    CHECK(J.graph.vertex_count() == 8);
    for (const Face& f : J.graph.faces()) CHECK(f.length() == 4);
    CHECK(plane_isomorphic(J.graph, synth::cube()));
    CHECK(J.types.proper_on(J.graph));
    CHECK(is_k_connected(J.graph, 2));
    // Class triple equals the restriction of the full colouring.
    for (int j = 0; j < J.graph.vertex_count(); ++j)
        CHECK(J.types.class_of[j] == c.class_of[J.big_to_orig[j]]);
}

TEST_CASE("big subgraph keeps triangle faces from the octahedron seed") {
    auto syn = synth::synthesize_triangulation(synth::octahedron(),
                                         three_coloring(synth::octahedron()));
    TriColoring c = three_coloring(syn.graph);
    BigSmallSplit split = big_small_split(syn.graph);
    BigSubgraph J = big_subgraph(syn.graph, c, split);
    bool has_triangle = false;
    for (const Face& f : J.graph.faces()) has_triangle |= f.length() == 3;
    CHECK(has_triangle);
}

TEST_CASE("small path cover of CUBE14") {
    PlaneGraph g = synth::cube14().graph;
    TriColoring c = three_coloring(g);
    BigSmallSplit split = big_small_split(g);
    SmallPathCover cover = small_path_cover(g, c, split);
    CHECK(cover.paths.size() == 6);
    for (const CoverPath& p : cover.paths) {
        CHECK(p.inner.size() == 1);
        CHECK(p.vertices.size() == 3);
        CHECK(split.is_big[p.end_a()]);
        CHECK(split.is_big[p.end_c()]);
        CHECK(c.class_of[p.flank_b] == c.class_of[p.flank_d]);
        // Deterministic diagonal: the end pair holds the smallest neighbour.
        int small = p.inner[0];
        int mn = g.vertex_count();
        for (int w : g.neighbors(small)) mn = std::min(mn, w);
        CHECK((p.end_a() == mn || p.end_c() == mn));
    }
}

TEST_CASE("length three paths appear for the three-class cube seed") {
    auto syn = synth::synthesize_triangulation(synth::cube(), synth::cube_three_class_types());
    TriColoring c = three_coloring(syn.graph);
    BigSmallSplit split = big_small_split(syn.graph);
    SmallPathCover cover = small_path_cover(syn.graph, c, split);
    bool has_two_inner = false;
    std::set<int> covered;
    for (const CoverPath& p : cover.paths) {
        has_two_inner |= p.inner.size() == 2;
        for (int v : p.inner) {
            CHECK(!covered.count(v));
            covered.insert(v);
        }
    }
    CHECK(has_two_inner);
    CHECK(covered.size() == split.small.size());
}

TEST_CASE("path cover surfaces all-small triangles, full cover absorbs them") {
    auto syn = synth::synthesize_triangulation(synth::octahedron(), three_coloring(synth::octahedron()));
    TriColoring c = three_coloring(syn.graph);
    BigSmallSplit split = big_small_split(syn.graph);
    CHECK_THROWS_AS(small_path_cover(syn.graph, c, split), graph_error);
    try {
        small_path_cover(syn.graph, c, split);
    } catch (const graph_error& e) {
        CHECK(e.code() == errc::all_small_triangle);
    }
    SmallCover cover = small_cover(syn.graph, c, split);
    CHECK(cover.triples.size() == 8);  // one gadget per octahedron face
    for (const auto& t : cover.triples) {
        CHECK(syn.graph.has_edge(t.p, t.q));
        CHECK(syn.graph.has_edge(t.s_pq, t.p));
        CHECK(syn.graph.has_edge(t.s_pq, t.q));
        CHECK(syn.graph.has_edge(t.s_qr, t.q));
        CHECK(syn.graph.has_edge(t.s_rp, t.r));
    }
}

TEST_CASE("path cover rejects the double wheel family") {
    auto dw = synth::double_wheel(3);
    auto c = three_coloring(dw);
    auto split = big_small_split(dw);
    CHECK_THROWS_AS(small_path_cover(dw, c, split), graph_error);
}

TEST_CASE("big neighbour bound") {
    auto c14 = synth::cube14().graph;
    CHECK(big_neighbour_bound(c14, big_small_split(c14)) == 4);
    auto oct = synth::octahedron();
    CHECK(big_neighbour_bound(oct, big_small_split(oct)) == 0);
    auto dw5 = synth::double_wheel(5);
    CHECK(big_neighbour_bound(dw5, big_small_split(dw5)) == 2);
}
