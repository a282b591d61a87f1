#pragma once

#include <string>
#include <vector>

#include "barnette/plane_graph.hpp"
#include "barnette/triangulation.hpp"

namespace barnette::synth {

// Builds a rotation system from a consistently oriented face list: every
// directed edge must appear in exactly one face.
PlaneGraph faces_to_rotations(int n, const std::vector<std::vector<int>>& faces);

// Medial graph: one vertex per edge; faces are the vertex stars and the
// reversed face boundaries.
PlaneGraph medial(const PlaneGraph& g);

PlaneGraph octahedron();
PlaneGraph double_wheel(int l);  // rim C^{2l} joined to two hubs, l >= 2

struct ThetaSeed {
    std::string name;
    PlaneGraph graph;
    TriColoring types;
    bool min_degree_3 = true;  // eligible for triangulation synthesis
};

// Curated seeds: 2-connected 3-colourable plane graphs with 3/4-faces.
std::vector<ThetaSeed> theta_seed_library();

PlaneGraph cube();                 // Q3, bipartition classes even/odd
TriColoring cube_bipartition_types();
TriColoring cube_three_class_types();
PlaneGraph cube_with_diagonal();   // one face split into two triangles
PlaneGraph triangular_prism();
PlaneGraph square_pyramid();
PlaneGraph glued_squares_theta();  // two 2-connected pieces sharing one vertex pair
PlaneGraph cuboctahedron();
TriColoring cuboctahedron_types(); // edge-direction classes of the cube

// 21-vertex 3-connected fixture whose preliminary colouring carries three
// pairwise overlapping beta cycles (one facial quadrilateral inside an
// octagon); drives the overlap elimination step with a degree-3 pivot.
PlaneGraph overlap_theta();
TriColoring overlap_theta_types();

// 24-vertex variant with a degree-4 pivot whose far face vertex is alpha;
// drives the other recolouring branch of the overlap step.
PlaneGraph overlap_theta_deg4();
TriColoring overlap_theta_deg4_types();

// Minimal Eulerian triangulation whose big subgraph is a quadrilateral: a big
// 4-ring with a small 3-path inside and outside (10 vertices).
PlaneGraph quad_core();

struct GadgetRecord {
    int face = -1;           // face id of the seed
    int kind = 0;            // 2 = path of length 2, 3 = length 3, 6 = triangle gadget
    std::vector<int> added;  // new vertex ids in insertion order
};

struct SynthesisRecipe {
    std::vector<GadgetRecord> gadgets;
};

struct SynthesisResult {
    PlaneGraph graph;        // Eulerian triangulation G with G[B] = J
    TriColoring coloring;    // extended proper 3-colouring
    SynthesisRecipe recipe;
};

// Realizes J as the big subgraph of an Eulerian plane triangulation: every
// 4-face receives a small path between the bicoloured diagonal, every 3-face
// the triangle-plus-6-cycle gadget. Requires min degree 3.
SynthesisResult synthesize_triangulation(const PlaneGraph& J, const TriColoring& types);

// Inserts the triangle gadget into one face of a plane graph. On an Eulerian
// triangulation the result is again an Eulerian triangulation (each boundary
// vertex gains two edges).
PlaneGraph with_triangle_gadget(const PlaneGraph& g, int face_id);

// CUBE14: the synthesis of Q3 under its bipartition classes.
SynthesisResult cube14();

struct CorpusInstance {
    std::string name;
    PlaneGraph graph;        // Eulerian plane triangulation
    std::string family;      // "three-cycle" | "double-wheel" | "general"
    int big_count = 0;
    int big_bound = 0;       // big_neighbour_bound
    bool mixed_faces = false;  // every facial 3-cycle has a small and a big vertex
};

// Deterministic instance catalog; seed reserved for future variation and part
// of the external contract.
std::vector<CorpusInstance> corpus(unsigned seed = 0);

}  // namespace barnette::synth
