#include "barnette/goodcolor.hpp"

#include <set>

#include "barnette/synth.hpp"
#include "doctest.h"

using namespace barnette;

namespace {

// Q3 with the bipartition classes: J1 = evens, J2 = odds, J3 empty.
EngineInput cube_input() {
    static PlaneGraph q3 = synth::cube();
    return make_engine_input(q3, synth::cube_bipartition_types());
}

}  // namespace

TEST_CASE("preliminary colouring on the bipartite cube") {
    EngineInput in = cube_input();
    // X1 = J1 (no J3 neighbours), X2 empty (everyone sees X1), X3 empty.
    for (int v : in.types.classes[0]) {
        CHECK(in.in_x1[v]);
        CHECK(in.preliminary.label_of[v] == Label::alpha);
    }
    for (int v : in.types.classes[1]) {
        CHECK_FALSE(in.in_x2[v]);
        CHECK(in.preliminary.label_of[v] == Label::beta);
    }
    CHECK(in.preliminary.count(Label::gamma) == 0);
    auto rep = beta_cycle_report(in, in.preliminary);
    CHECK(rep.empty());
}

TEST_CASE("degree five in J1 violates the degree precondition") {
    // Octahedron with a class of hubs as J3 works; rim as J3 breaks (a1)
    // because the hubs in J1 u J2 keep degree 2l >= 6.
    PlaneGraph w3 = synth::double_wheel(3);
    TriColoring c = three_coloring(w3);
    // Identify the hub class (size 2, both degree 6).
    int hub_class = -1;
    for (int k = 0; k < 3; ++k)
        if (c.classes[k].size() == 2 && w3.degree(c.classes[k][0]) == 6) hub_class = k + 1;
    REQUIRE(hub_class > 0);
    // Roles with hubs inside J1 u J2: pick J3 = some rim class.
    std::vector<int> roles(w3.vertex_count());
    int rim_class = hub_class == 1 ? 2 : 1;
    for (int v = 0; v < w3.vertex_count(); ++v) {
        int k = c.class_of[v];
        roles[v] = k == rim_class ? 3 : k == hub_class ? 1 : 2;
    }
    CHECK_THROWS_AS(make_engine_input(w3, TriColoring::from_assignment(roles)), graph_error);
}

TEST_CASE("preliminary colouring is associated") {
    for (const auto& seed : synth::theta_seed_library()) {
        if (!is_k_connected(seed.graph, 3)) continue;
        CAPTURE(seed.name);
        EngineInput in = make_engine_input(seed.graph, seed.types);
        auto rep = validate_associated(in, in.preliminary);
        CHECK(rep.all());
        auto cycles = beta_cycle_report(in, in.preliminary);
        auto bad = bad_path_report(in, in.preliminary, cycles);
        CHECK(bad.bad_vertices.empty());
    }
}

TEST_CASE("simple associated violations are caught") {
    EngineInput in = cube_input();
    WorkColoring t = in.preliminary;
    // Label a J1 vertex beta and its J2 neighbours alpha: breaks (7) or (1).
    int v1 = in.types.classes[0][0];
    t.label_of[v1] = Label::beta;
    for (int w : in.J->neighbors(v1)) t.label_of[w] = Label::alpha;
    auto rep = validate_associated(in, t);
    CHECK_FALSE(rep.all());
}

TEST_CASE("gamma labels must match the crossing pattern") {
    EngineInput in = cube_input();
    WorkColoring t = in.preliminary;
    t.label_of[0] = Label::gamma;  // no vertex of the cube qualifies
    auto rep = validate_associated(in, t);
    CHECK_FALSE(rep.ok[5]);
}

TEST_CASE("cuboctahedron roles produce two independent beta squares") {
    PlaneGraph co = synth::cuboctahedron();
    TriColoring base = synth::cuboctahedron_types();
    // Roles: direction class 3 plays J3.
    EngineInput in = make_engine_input(co, base);
    auto rep = beta_cycle_report(in, in.preliminary);
    CHECK(rep.cycles.size() == 2);
    CHECK(rep.complex_blocks == 0);
    for (const auto& cyc : rep.cycles) {
        CHECK(cyc.vertices.size() == 4);
        CHECK(cyc.independent);
        CHECK(cyc.facial);
    }
    auto assoc = validate_associated(in, in.preliminary);
    CHECK(assoc.all());
}

TEST_CASE("overlap fixture carries three mutually overlapping beta cycles") {
    PlaneGraph g = synth::overlap_theta();
    TriColoring types = synth::overlap_theta_types();
    CHECK(is_k_connected(g, 3));
    EngineInput in = make_engine_input(g, types);
    auto rep = beta_cycle_report(in, in.preliminary);
    CHECK(rep.complex_blocks == 1);
    CHECK_FALSE(rep.all_independent());
    CHECK(rep.cyclic_edge_count == 10);
    auto cycles = enumerate_beta_cycles(g, in.preliminary);
    CHECK(cycles.size() == 3);
    // One of them is the facial quadrilateral c-d-e-f.
    bool has_quad = false;
    for (const auto& cyc : cycles) has_quad |= cyc.size() == 4;
    CHECK(has_quad);
    CHECK(validate_associated(in, in.preliminary).all());
    auto bad = bad_path_report(in, in.preliminary, rep);
    CHECK(bad.bad_vertices.empty());
}

TEST_CASE("overlap elimination fires the degree-three case and shrinks the cycle set") {
    PlaneGraph g = synth::overlap_theta();
    EngineInput in = make_engine_input(g, synth::overlap_theta_types());
    auto before = enumerate_beta_cycles(g, in.preliminary);
    StepTrace trace;
    WorkColoring m = step_eliminate_overlap(in, in.preliminary, &trace);
    CHECK(trace.rule == "L43a");
    // Case (a) swaps exactly the two pivot labels.
    int changed = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        changed += m.label_of[v] != in.preliminary.label_of[v];
    CHECK(changed == 2);
    CHECK(m.label_of[trace.pivot] == Label::beta);
    auto after = enumerate_beta_cycles(g, m);
    // Strict subset of the cycle set.
    std::set<std::vector<std::pair<int, int>>> prev(before.begin(), before.end());
    for (const auto& cyc : after) CHECK(prev.count(cyc));
    CHECK(after.size() < before.size());
    CHECK(validate_associated(in, m).all());
}

TEST_CASE("overlap elimination with a degree-four pivot takes the alpha branch") {
    PlaneGraph g = synth::overlap_theta_deg4();
    TriColoring types = synth::overlap_theta_deg4_types();
    EngineInput in = make_engine_input(g, types);
    REQUIRE(g.degree(8) == 4);  // the pivot
    auto rep = beta_cycle_report(in, in.preliminary);
    CHECK(rep.complex_blocks == 1);
    CHECK(validate_associated(in, in.preliminary).all());
    StepTrace trace;
    WorkColoring m = step_eliminate_overlap(in, in.preliminary, &trace);
    CHECK(trace.rule == "L43c");
    int changed = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        changed += m.label_of[v] != in.preliminary.label_of[v];
    CHECK(changed == 2);
    CHECK(validate_associated(in, m).all());
    ThetaPartitionResult out = forest_partition_3connected(g, types);
    CHECK(out.steps.front().rule == "L43c");
    require_forest_bipartition(g, out.partition);
}

TEST_CASE("overlap step rejects colourings with bad vertices or no overlap") {
    PlaneGraph g = synth::overlap_theta();
    EngineInput in = make_engine_input(g, synth::overlap_theta_types());
    EngineRun run = eliminate_beta_cycles(in);
    // Once resolved, a further overlap step has no configuration.
    CHECK_THROWS_AS(step_eliminate_overlap(in, run.result), graph_error);
}

TEST_CASE("overlap fixture resolves to a compatible forest partition") {
    PlaneGraph g = synth::overlap_theta();
    TriColoring types = synth::overlap_theta_types();
    ThetaPartitionResult out = forest_partition_3connected(g, types);
    CHECK(out.steps.size() >= 1);
    CHECK(out.steps.front().rule == "L43a");
    CHECK(is_compatible(g, types, out.partition).compatible);
    require_forest_bipartition(g, out.partition);
}

TEST_CASE("independent cycle removal drives the cuboctahedron to an empty cycle set") {
    PlaneGraph co = synth::cuboctahedron();
    EngineInput in = make_engine_input(co, synth::cuboctahedron_types());
    EngineRun run = eliminate_beta_cycles(in);
    CHECK(run.steps.size() == 2);
    for (const auto& s : run.steps) CHECK(s.rule == "L46");
    auto rep = beta_cycle_report(in, run.result);
    CHECK(rep.empty());
    auto assoc = validate_associated(in, run.result);
    CHECK(assoc.all());
}

TEST_CASE("gamma resolution on the cube returns the class partition") {
    EngineInput in = cube_input();
    EngineRun run = eliminate_beta_cycles(in);
    CHECK(run.steps.empty());
    GammaResolution res = resolve_gammas(in, run.result);
    // I = J1 (all alpha), parts {J2, J1}.
    std::set<int> I(res.independent_set.begin(), res.independent_set.end());
    std::set<int> J1(in.types.classes[0].begin(), in.types.classes[0].end());
    CHECK(I == J1);
}

TEST_CASE("octahedron as theta input is all gamma and resolves") {
    PlaneGraph oct = synth::octahedron();
    TriColoring types = three_coloring(oct);
    TriColoring roles = assign_engine_roles(oct, types);
    EngineInput in = make_engine_input(oct, roles);
    for (int v = 0; v < 6; ++v)
        if (roles.class_of[v] != 3) CHECK(in.preliminary.label_of[v] == Label::gamma);
    ThetaPartitionResult out = forest_partition_3connected(oct, roles);
    CHECK(is_compatible(oct, roles, out.partition).compatible);
    require_forest_bipartition(oct, out.partition);
}

TEST_CASE("three connected partition contract on the seeds") {
    for (const auto& seed : synth::theta_seed_library()) {
        if (!is_k_connected(seed.graph, 3)) continue;
        CAPTURE(seed.name);
        const TriColoring& roles = seed.types;
        ThetaPartitionResult out = forest_partition_3connected(seed.graph, roles);
        // I independent inside J1 u J2.
        std::vector<int> I;
        for (int v = 0; v < seed.graph.vertex_count(); ++v)
            if (out.partition.part_of[v] == 1 && roles.class_of[v] != 3) I.push_back(v);
        for (size_t i = 0; i < I.size(); ++i)
            for (size_t j = i + 1; j < I.size(); ++j)
                CHECK_FALSE(seed.graph.has_edge(I[i], I[j]));
        require_forest_bipartition(seed.graph, out.partition);
        CHECK(is_compatible(seed.graph, roles, out.partition).compatible);
    }
}

TEST_CASE("extension over a removed degree-2 vertex") {
    // A 4-cycle 0-1-2-3 plus a degree-2 vertex 4 adjacent to 0 and 2.
    PlaneGraph g = PlaneGraph::from_rotations({
        {1, 4, 3},
        {2, 0},
        {3, 4, 1},
        {0, 2},
        {2, 0},
    });
    TriColoring types = TriColoring::from_classes(5, {{std::vector<int>{0, 2}, {1, 3}, {4}}});
    ThetaPartitionResult out = forest_partition_theta(g, types);
    CHECK(is_compatible(g, types, out.partition).compatible);
    require_forest_bipartition(g, out.partition);
}

TEST_CASE("theta recursion on the glued seed exercises both reductions") {
    PlaneGraph g = synth::glued_squares_theta();
    TriColoring types = TriColoring::from_classes(
        10, {{std::vector<int>{2, 3, 6, 7}, {0, 4, 8}, {1, 5, 9}}});
    ThetaPartitionResult out = forest_partition_theta(g, types);
    CHECK(is_compatible(g, types, out.partition).compatible);
    require_forest_bipartition(g, out.partition);
}

TEST_CASE("theta contract across every seed with any role assignment") {
    for (const auto& seed : synth::theta_seed_library()) {
        bool deg_ok = true;
        for (int v = 0; v < seed.graph.vertex_count(); ++v)
            deg_ok &= seed.graph.degree(v) <= 4;
        if (!deg_ok) continue;
        CAPTURE(seed.name);
        ThetaPartitionResult out = forest_partition_theta(seed.graph, seed.types);
        CHECK(is_compatible(seed.graph, seed.types, out.partition).compatible);
        require_forest_bipartition(seed.graph, out.partition);
    }
}

TEST_CASE("reduction extensions validate their inputs") {
    PlaneGraph g = PlaneGraph::from_rotations({
        {1, 4, 3},
        {2, 0},
        {3, 4, 1},
        {0, 2},
        {2, 0},
    });
    TriColoring types = TriColoring::from_classes(5, {{std::vector<int>{0, 2}, {1, 3}, {4}}});
    ForestBipartition bogus;
    bogus.part_of = {0, 0, 0, 0};  // the 4-cycle in one part
    CHECK_THROWS_AS(extend_over_removed_vertex(g, types, 4, bogus), graph_error);
}
