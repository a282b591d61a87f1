#include "barnette/synth.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace barnette::synth {

PlaneGraph faces_to_rotations(int n, const std::vector<std::vector<int>>& faces) {
    // succ[v][u] = w whenever some face contains the corner u -> v -> w.
    std::vector<std::map<int, int>> succ(n);
    for (const auto& f : faces) {
        const int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i) {
            int u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
            if (!succ[v].emplace(u, w).second)
                fail(errc::bad_input, "face list not an orientation: duplicate dart into " +
                                          std::to_string(v));
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) fail(errc::bad_input, "isolated vertex " + std::to_string(v));
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            rot[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) fail(errc::bad_input, "open rotation at " + std::to_string(v));
            cur = it->second;
        } while (cur != start && static_cast<int>(rot[v].size()) <= static_cast<int>(succ[v].size()));
        if (cur != start || rot[v].size() != succ[v].size())
            fail(errc::bad_input, "rotation at " + std::to_string(v) + " is not a single cycle");
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph medial(const PlaneGraph& g) {
    const int m = g.edge_count();
    std::vector<std::vector<int>> faces;
    // Vertex stars in rotation order.
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> f;
        for (int w : g.neighbors(v)) f.push_back(g.edge_id(v, w));
        faces.push_back(std::move(f));
    }
    // Face boundaries reversed.
    for (const Face& f : g.faces()) {
        std::vector<int> edges;
        const int k = f.length();
        for (int i = 0; i < k; ++i) edges.push_back(g.edge_id(f.boundary[i], f.boundary[(i + 1) % k]));
        std::reverse(edges.begin(), edges.end());
        faces.push_back(std::move(edges));
    }
    return faces_to_rotations(m, faces);
}

PlaneGraph double_wheel(int l) {
    if (l < 2) fail(errc::bad_input, "double wheel needs l >= 2");
    const int rim = 2 * l;
    const int h1 = rim, h2 = rim + 1;
    std::vector<std::vector<int>> rot(rim + 2);
    for (int i = 0; i < rim; ++i)
        rot[i] = {(i + rim - 1) % rim, h1, (i + 1) % rim, h2};
    for (int i = rim - 1; i >= 0; --i) rot[h1].push_back(i);
    for (int i = 0; i < rim; ++i) rot[h2].push_back(i);
    return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph octahedron() { return double_wheel(2); }

PlaneGraph cube() {
    return PlaneGraph::from_rotations({
        {1, 4, 2},  // 0
        {0, 3, 5},  // 1
        {0, 6, 3},  // 2
        {1, 2, 7},  // 3
        {0, 5, 6},  // 4
        {4, 1, 7},  // 5
        {7, 2, 4},  // 6
        {5, 3, 6},  // 7
    });
}

TriColoring cube_bipartition_types() {
    // Hamming parity; J3 empty.
    return TriColoring::from_classes(8, {{std::vector<int>{0, 3, 5, 6}, {1, 2, 4, 7}, {}}});
}

TriColoring cube_three_class_types() {
    return TriColoring::from_classes(8, {{std::vector<int>{0, 7}, {3, 5, 6}, {1, 2, 4}}});
}

PlaneGraph cube_with_diagonal() {
    PlaneGraph q = cube();
    auto rot = q.rotations();
    // Chord 0-3 inside the face 0-1-3-2: insert after each trace predecessor.
    auto insert_after = [&](int v, int after, int what) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), after);
        r.insert(it + 1, what);
    };
    insert_after(0, 2, 3);
    insert_after(3, 1, 0);
    return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph triangular_prism() {
    return PlaneGraph::from_rotations({
        {1, 3, 2},  // 0
        {0, 2, 4},  // 1
        {0, 5, 1},  // 2
        {0, 4, 5},  // 3
        {3, 1, 5},  // 4
        {4, 2, 3},  // 5
    });
}

PlaneGraph square_pyramid() {
    return PlaneGraph::from_rotations({
        {1, 4, 3},     // 0
        {0, 2, 4},     // 1
        {1, 3, 4},     // 2
        {0, 4, 2},     // 3
        {0, 1, 2, 3},  // 4 apex
    });
}

PlaneGraph glued_squares_theta() {
    // Two quadrilateral pieces sharing exactly the vertex pair {0, 1}; the
    // canonical non-3-connected seed for the reduction branches.
    std::vector<std::vector<int>> faces = {
        {2, 0, 3, 4}, {2, 4, 5}, {3, 5, 4}, {2, 5, 3, 1},  // piece one
        {8, 7, 0, 6}, {6, 9, 8}, {7, 8, 9}, {1, 7, 9, 6},  // piece two
        {0, 2, 1, 6}, {1, 3, 0, 7},                        // the two joint faces
    };
    return faces_to_rotations(10, faces);
}

PlaneGraph cuboctahedron() { return medial(cube()); }

TriColoring cuboctahedron_types() {
    PlaneGraph q = cube();
    std::vector<int> cls(q.edge_count());
    for (int e = 0; e < q.edge_count(); ++e) {
        auto [u, v] = q.edges()[e];
        int diff = u ^ v;  // cube labels are coordinate bit patterns
        cls[e] = diff == 1 ? 1 : diff == 2 ? 2 : 3;
    }
    return TriColoring::from_assignment(std::move(cls));
}

PlaneGraph overlap_theta() {
    // Octagon 0..7 (a b c d e m1 m2 m3), inner pocket 8..15
    // (q f g w xe xa t u), outer ring 16..20 (z1 wd wfar wb s).
    std::vector<std::vector<int>> faces = {
        {0, 1, 2, 8},     // a b c q
        {2, 3, 4, 9},     // c d e f   (the facial beta quadrilateral)
        {8, 2, 9, 10},    // q c f g
        {12, 11, 9, 4},   // xe w f e
        {4, 5, 6, 12},    // e m1 m2 xe
        {12, 6, 13, 14},  // xe m2 xa t
        {6, 7, 0, 13},    // m2 m3 a xa
        {10, 13, 0, 8},   // g xa a q
        {13, 10, 14},     // xa g t
        {12, 14, 15, 11}, // xe t u w
        {14, 10, 15},     // t g u
        {15, 10, 9, 11},  // u g f w
        {16, 3, 2, 1},    // z1 d c b
        {17, 5, 4, 3},    // wd m1 e d
        {18, 7, 6, 5},    // wfar m3 m2 m1
        {19, 1, 0, 7},    // wb b a m3
        {16, 1, 19, 20},  // z1 b wb s
        {17, 3, 16, 20},  // wd d z1 s
        {18, 5, 17, 20},  // wfar m1 wd s
        {19, 7, 18, 20},  // wb m3 wfar s
    };
    return faces_to_rotations(21, faces);
}

TriColoring overlap_theta_types() {
    return TriColoring::from_classes(
        21, {{std::vector<int>{1, 3, 5, 7, 8, 9, 12, 13, 15, 20}, {0, 2, 4, 6, 14},
              {10, 11, 16, 17, 18, 19}}});
}

PlaneGraph overlap_theta_deg4() {
    // Same octagon-and-quadrilateral core as overlap_theta; the pocket beside
    // the pivot q = 8 is retiled through h = 13, j = 21, p1 = 22, p2 = 23 so
    // that q has degree four with a beta neighbour h and an alpha far vertex j.
    std::vector<std::vector<int>> faces = {
        {0, 1, 2, 8},      // a b c q
        {2, 3, 4, 9},      // c d e f
        {8, 2, 9, 10},     // q c f g
        {12, 11, 9, 4},    // xe w f e
        {4, 5, 6, 12},     // e m1 m2 xe
        {21, 14, 12, 6},   // j t xe m2
        {6, 7, 0, 21},     // m2 m3 a j
        {13, 21, 0, 8},    // h j a q
        {8, 10, 22, 13},   // q g p1 h
        {22, 10, 23},      // p1 g p2
        {23, 10, 14, 21},  // p2 g t j
        {13, 22, 23, 21},  // h p1 p2 j
        {12, 14, 15, 11},  // xe t u w
        {14, 10, 15},      // t g u
        {15, 10, 9, 11},   // u g f w
        {16, 3, 2, 1},     // z1 d c b
        {17, 5, 4, 3},     // wd m1 e d
        {18, 7, 6, 5},     // wfar m3 m2 m1
        {19, 1, 0, 7},     // wb b a m3
        {16, 1, 19, 20},   // z1 b wb s
        {17, 3, 16, 20},   // wd d z1 s
        {18, 5, 17, 20},   // wfar m1 wd s
        {19, 7, 18, 20},   // wb m3 wfar s
    };
    return faces_to_rotations(24, faces);
}

TriColoring overlap_theta_deg4_types() {
    return TriColoring::from_classes(
        24, {{std::vector<int>{1, 3, 5, 7, 8, 9, 12, 15, 20, 22}, {0, 2, 4, 6, 13, 14, 23},
              {10, 11, 16, 17, 18, 19, 21}}});
}

PlaneGraph quad_core() {
    // Big ring a b c d = 0 1 2 3; inner path x1 x2 x3 = 4 5 6 flanked by b, d;
    // outer path y1 y2 y3 = 7 8 9 flanked by a, c.
    std::vector<std::vector<int>> faces = {
        {1, 4, 0}, {1, 5, 4}, {1, 6, 5}, {1, 2, 6},  // b fan
        {3, 0, 4}, {3, 4, 5}, {3, 5, 6}, {3, 6, 2},  // d fan
        {7, 1, 0}, {7, 2, 1}, {9, 3, 2}, {9, 0, 3},  // ring triangles outside
        {8, 7, 0}, {2, 7, 8}, {9, 8, 0}, {8, 9, 2},  // a and c fans outside
    };
    return faces_to_rotations(10, faces);
}

namespace {

void validate_theta(const PlaneGraph& J, const TriColoring& types) {
    if (!is_k_connected(J, 2)) fail(errc::not_theta, "not 2-connected");
    for (const Face& f : J.faces())
        if (f.length() != 3 && f.length() != 4)
            fail(errc::not_theta, "face of length " + std::to_string(f.length()));
    if (!types.proper_on(J)) fail(errc::not_theta, "improper 3-colouring");
}

}  // namespace

PlaneGraph with_triangle_gadget(const PlaneGraph& g, int face_id) {
    if (face_id < 0 || face_id >= g.face_count()) fail(errc::bad_input, "face id out of range");
    const Face& f = g.face(face_id);
    if (f.length() != 3) fail(errc::bad_input, "gadget fits a triangular face only");
    auto rot = g.rotations();
    auto insert_after = [&](int v, int after, std::vector<int> what) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), after);
        r.insert(it + 1, what.begin(), what.end());
    };
    int x = f.boundary[0], y = f.boundary[1], z = f.boundary[2];
    int xp = static_cast<int>(rot.size());
    int yp = xp + 1, zp = xp + 2;
    rot.push_back({zp, yp, y, x});
    rot.push_back({xp, zp, z, y});
    rot.push_back({yp, xp, x, z});
    insert_after(x, z, {zp, xp});
    insert_after(y, x, {xp, yp});
    insert_after(z, y, {yp, zp});
    return PlaneGraph::from_rotations(std::move(rot));
}

SynthesisResult synthesize_triangulation(const PlaneGraph& J, const TriColoring& types) {
    validate_theta(J, types);
    for (int v = 0; v < J.vertex_count(); ++v)
        if (J.degree(v) < 3)
            fail(errc::min_degree_violation, "vertex " + std::to_string(v) + " has degree " +
                                                 std::to_string(J.degree(v)));

    auto rot = J.rotations();
    std::vector<int> cls = types.class_of;
    SynthesisRecipe recipe;

    auto insert_after = [&](int v, int after, std::vector<int> what) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), after);
        if (it == r.end()) fail(errc::bad_input, "insertion anchor missing");
        r.insert(it + 1, what.begin(), what.end());
    };
    auto third_class = [](int x, int y) { return 6 - x - y; };

    for (const Face& f : J.faces()) {
        GadgetRecord rec;
        rec.face = f.id;
        if (f.length() == 4) {
            // Orient the face as a,b,c,d with the same-type pair on b,d.
            int w0 = f.boundary[0], w1 = f.boundary[1], w2 = f.boundary[2], w3 = f.boundary[3];
            int a, b, c, d;
            if (cls[w1] == cls[w3]) {
                a = w0; b = w1; c = w2; d = w3;
            } else if (cls[w0] == cls[w2]) {
                a = w1; b = w2; c = w3; d = w0;
            } else {
                fail(errc::not_theta, "4-face without a monochromatic diagonal");
            }
            if (cls[a] == cls[c]) {
                int x = static_cast<int>(rot.size());
                rot.push_back({d, c, b, a});
                cls.push_back(third_class(cls[a], cls[b]));
                insert_after(a, d, {x});
                insert_after(b, a, {x});
                insert_after(c, b, {x});
                insert_after(d, c, {x});
                rec.kind = 2;
                rec.added = {x};
            } else {
                int x = static_cast<int>(rot.size());
                int y = x + 1;
                rot.push_back({d, y, b, a});      // x
                rot.push_back({x, d, c, b});      // y
                cls.push_back(cls[c]);
                cls.push_back(cls[a]);
                insert_after(a, d, {x});
                insert_after(b, a, {x, y});
                insert_after(c, b, {y});
                insert_after(d, c, {y, x});
                rec.kind = 3;
                rec.added = {x, y};
            }
        } else {
            // Triangle gadget: inner 3-cycle x'y'z' plus the 6-cycle x x' y y' z z'.
            int x = f.boundary[0], y = f.boundary[1], z = f.boundary[2];
            int xp = static_cast<int>(rot.size());
            int yp = xp + 1, zp = xp + 2;
            rot.push_back({zp, yp, y, x});  // x'
            rot.push_back({xp, zp, z, y});  // y'
            rot.push_back({yp, xp, x, z});  // z'
            cls.push_back(cls[z]);
            cls.push_back(cls[x]);
            cls.push_back(cls[y]);
            insert_after(x, z, {zp, xp});
            insert_after(y, x, {xp, yp});
            insert_after(z, y, {yp, zp});
            rec.kind = 6;
            rec.added = {xp, yp, zp};
        }
        recipe.gadgets.push_back(std::move(rec));
    }

    SynthesisResult res;
    res.graph = PlaneGraph::from_rotations(std::move(rot));
    res.coloring = TriColoring::from_assignment(std::move(cls));
    res.recipe = std::move(recipe);

    require_eulerian_triangulation(res.graph);
    if (!res.coloring.proper_on(res.graph)) fail(errc::coloring_conflict, "extension improper");

    // Seed vertices must be exactly the big set and induce J again.
    BigSmallSplit split = big_small_split(res.graph);
    for (int v = 0; v < res.graph.vertex_count(); ++v) {
        bool seed = v < J.vertex_count();
        if (seed != static_cast<bool>(split.is_big[v]))
            fail(errc::theta_violation, "big set differs from the seed set at " + std::to_string(v));
    }
    std::vector<int> seeds(J.vertex_count());
    for (int v = 0; v < J.vertex_count(); ++v) seeds[v] = v;
    PlaneGraph back = induced_plane_subgraph(res.graph, seeds);
    for (int v = 0; v < J.vertex_count(); ++v) {
        // Rotations must agree up to cyclic shift.
        const auto& orig = J.neighbors(v);
        const auto& now = back.neighbors(v);
        if (orig.size() != now.size()) fail(errc::theta_violation, "seed degree changed");
        bool match = false;
        for (size_t s = 0; s < now.size() && !match; ++s) {
            bool all = true;
            for (size_t i = 0; i < now.size() && all; ++i)
                all = now[(s + i) % now.size()] == orig[i];
            match = all;
        }
        if (!match) fail(errc::theta_violation, "seed rotation changed at " + std::to_string(v));
    }
    return res;
}

std::vector<ThetaSeed> theta_seed_library() {
    std::vector<ThetaSeed> seeds;
    seeds.push_back({"q3-bipartite", cube(), cube_bipartition_types(), true});
    seeds.push_back({"q3-three-class", cube(), cube_three_class_types(), true});
    {
        PlaneGraph g = cube_with_diagonal();
        TriColoring t = TriColoring::from_classes(
            8, {{std::vector<int>{0, 5, 6}, {3, 4}, {1, 2, 7}}});
        seeds.push_back({"q3-diagonal", std::move(g), std::move(t), true});
    }
    {
        PlaneGraph g = triangular_prism();
        TriColoring t = TriColoring::from_classes(6, {{std::vector<int>{0, 5}, {1, 3}, {2, 4}}});
        seeds.push_back({"prism3", std::move(g), std::move(t), true});
    }
    {
        PlaneGraph g = square_pyramid();
        TriColoring t = TriColoring::from_classes(5, {{std::vector<int>{4}, {0, 2}, {1, 3}}});
        seeds.push_back({"pyramid4", std::move(g), std::move(t), true});
    }
    {
        PlaneGraph g = octahedron();
        // Antipodal pairs: rim {0,2}, {1,3}; hubs {4,5}.
        TriColoring t = TriColoring::from_classes(6, {{std::vector<int>{0, 2}, {1, 3}, {4, 5}}});
        seeds.push_back({"octahedron", std::move(g), std::move(t), true});
    }
    {
        PlaneGraph g = glued_squares_theta();
        TriColoring t = TriColoring::from_classes(
            10, {{std::vector<int>{2, 3, 6, 7}, {0, 4, 8}, {1, 5, 9}}});
        seeds.push_back({"glued-squares", std::move(g), std::move(t), true});
    }
    seeds.push_back({"cuboctahedron", cuboctahedron(), cuboctahedron_types(), true});
    {
        // Cube with chords across two opposite faces.
        PlaneGraph g = cube_with_diagonal();
        auto rot = g.rotations();
        auto insert_after = [&](int v, int after, int what) {
            auto& r = rot[v];
            auto it = std::find(r.begin(), r.end(), after);
            r.insert(it + 1, what);
        };
        // Face 4-6-7-5 (inner square): trace order from the cube embedding is
        // 4->6->7->5; chord 4-7.
        insert_after(4, 5, 7);
        insert_after(7, 6, 4);
        PlaneGraph two = PlaneGraph::from_rotations(std::move(rot));
        TriColoring t = TriColoring::from_classes(
            8, {{std::vector<int>{0, 5, 6}, {3, 4}, {1, 2, 7}}});
        seeds.push_back({"q3-two-diagonals", std::move(two), std::move(t), true});
    }
    {
        // Prism with one square face split into triangles: chord 0-4 across
        // the face 0-3-4-1.
        PlaneGraph g = triangular_prism();
        auto rot = g.rotations();
        auto insert_after = [&](int v, int after, int what) {
            auto& r = rot[v];
            auto it = std::find(r.begin(), r.end(), after);
            r.insert(it + 1, what);
        };
        insert_after(0, 1, 4);
        insert_after(4, 3, 0);
        PlaneGraph split = PlaneGraph::from_rotations(std::move(rot));
        TriColoring t = TriColoring::from_classes(6, {{std::vector<int>{0, 5}, {1, 3}, {2, 4}}});
        seeds.push_back({"prism3-diagonal", std::move(split), std::move(t), true});
    }
    seeds.push_back({"overlap-theta", overlap_theta(), overlap_theta_types(), true});
    seeds.push_back({"overlap-theta-deg4", overlap_theta_deg4(), overlap_theta_deg4_types(), true});
    {
        PlaneGraph m = medial(triangular_prism());
        // Classes by the prism structure: verticals, top edges, bottom edges
        // keyed to the opposite vertex index.
        PlaneGraph prism = triangular_prism();
        std::vector<int> cls(m.vertex_count());
        for (int e = 0; e < prism.edge_count(); ++e) {
            auto [u, v] = prism.edges()[e];
            if (v == u + 3) {
                cls[e] = u + 1;  // vertical
            } else {
                int a = u % 3, b = v % 3;
                cls[e] = 3 - a - b + 1;  // opposite index of the triangle edge
            }
        }
        TriColoring t = TriColoring::from_assignment(std::move(cls));
        seeds.push_back({"medial-prism3", std::move(m), std::move(t), true});
    }
    return seeds;
}

SynthesisResult cube14() { return synthesize_triangulation(cube(), cube_bipartition_types()); }

std::vector<CorpusInstance> corpus(unsigned /*seed*/) {
    std::vector<CorpusInstance> out;
    auto add = [&](std::string name, PlaneGraph g) {
        CorpusInstance inst;
        inst.name = std::move(name);
        require_eulerian_triangulation(g);
        BigSmallSplit split = big_small_split(g);
        FamilyTag tag = classify_family(g, split);
        inst.family = tag.kind == FamilyKind::ThreeCycle  ? "three-cycle"
                      : tag.kind == FamilyKind::DoubleWheel ? "double-wheel"
                                                            : "general";
        inst.big_count = static_cast<int>(split.big.size());
        inst.big_bound = big_neighbour_bound(g, split);
        inst.mixed_faces = true;
        for (const Face& f : g.faces()) {
            bool any_small = false, any_big = false;
            for (int v : f.boundary) (split.is_big[v] ? any_big : any_small) = true;
            if (!any_small || !any_big) inst.mixed_faces = false;
        }
        inst.graph = std::move(g);
        out.push_back(std::move(inst));
    };

    for (int l = 2; l <= 6; ++l) add("double-wheel-" + std::to_string(l), double_wheel(l));
    add("quad-core", quad_core());
    for (const ThetaSeed& seed : theta_seed_library()) {
        if (!seed.min_degree_3) continue;
        SynthesisResult syn = synthesize_triangulation(seed.graph, seed.types);
        add("expand-" + seed.name, std::move(syn.graph));
    }

    // Gadget variants: triangle gadgets grow the big set (every boundary
    // vertex gains two edges), driving the recursion through its reduction
    // branches on slightly irregular instances.
    std::vector<std::pair<std::string, PlaneGraph>> bases;
    bases.emplace_back("octahedron", octahedron());
    bases.emplace_back("double-wheel-3", double_wheel(3));
    bases.emplace_back("double-wheel-4", double_wheel(4));
    bases.emplace_back("cube14", cube14().graph);
    bases.emplace_back("expand-prism3",
                       synthesize_triangulation(triangular_prism(),
                                          theta_seed_library()[3].types).graph);
    for (const auto& [name, base] : bases) {
        add("gadget-" + name + "-f0", with_triangle_gadget(base, 0));
        add("gadget-" + name + "-flast", with_triangle_gadget(base, base.face_count() - 1));
        PlaneGraph twice = with_triangle_gadget(base, 0);
        add("gadget2-" + name, with_triangle_gadget(twice, twice.face_count() - 1));
    }
    // A deeper stack of gadgets on the octahedron.
    {
        PlaneGraph g = octahedron();
        for (int r = 0; r < 3; ++r) g = with_triangle_gadget(g, r + 1);
        add("gadget3-octahedron", std::move(g));
    }
    {
        PlaneGraph g = cube14().graph;
        for (int r = 0; r < 3; ++r) g = with_triangle_gadget(g, 2 * r);
        add("gadget3-cube14", std::move(g));
    }
    return out;
}

}  // namespace barnette::synth
