#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "barnette/plane_graph.hpp"

namespace barnette {

// Proper 3-colouring with classes {1,2,3}; class_of is 1-based.
struct TriColoring {
    std::vector<int> class_of;
    std::array<std::vector<int>, 3> classes;  // classes[k] = vertices of class k+1

    static TriColoring from_classes(int n, const std::array<std::vector<int>, 3>& cls);
    static TriColoring from_assignment(std::vector<int> class_of);
    bool proper_on(const PlaneGraph& g) const;
    std::array<int, 3> sizes() const;
};

struct BigSmallSplit {
    std::vector<int> big;    // degree >= 6
    std::vector<int> small;  // degree == 4
    std::vector<char> is_big;
};

enum class FamilyKind { ThreeCycle, DoubleWheel, GeneralBig3 };

struct FamilyTag {
    FamilyKind kind;
    int wheel_l = 0;  // DoubleWheel(l): rim C^{2l}; octahedron is l = 2
};

struct Diagnostics {
    bool ok = true;
    bool three_cycle = false;
    std::vector<std::string> errors;  // "ERR <code> <details>" payloads
    std::string report() const;
};

// One path of the small-vertex cover: full vertex sequence including the big
// ends, the small inner set, and the flank pair adjacent to every vertex.
struct CoverPath {
    std::vector<int> vertices;  // a = v1, inner..., c = vk
    std::vector<int> inner;
    int flank_b = -1, flank_d = -1;
    int end_a() const { return vertices.front(); }
    int end_c() const { return vertices.back(); }
};

struct SmallPathCover {
    std::vector<CoverPath> paths;
};

// An all-small facial triangle with its big flank triangle: the octahedral
// configuration of the family trichotomy. s_pq is the small vertex adjacent
// to both p and q, and so on around.
struct TriangleTriple {
    int p = -1, q = -1, r = -1;        // big, mutually adjacent
    int s_pq = -1, s_qr = -1, s_rp = -1;
};

// Full small-vertex cover: paths plus the triangle configurations.
struct SmallCover {
    std::vector<CoverPath> paths;
    std::vector<TriangleTriple> triples;
};

// Confirms all faces are triangles, every degree is even and |E| = 3|V|-6.
// The 3-cycle is reported via diagnostics.three_cycle, not as an error.
Diagnostics validate_eulerian_triangulation(const PlaneGraph& g);

// Must pass validate_eulerian_triangulation (3-cycle allowed).
void require_eulerian_triangulation(const PlaneGraph& g);

// Unique proper 3-colouring by face propagation from seed_face.
TriColoring three_coloring(const PlaneGraph& g, int seed_face = 0);

BigSmallSplit big_small_split(const PlaneGraph& g);

FamilyTag classify_family(const PlaneGraph& g, const BigSmallSplit& split);

struct BigSubgraph {
    PlaneGraph graph;                // J = G[B]
    std::vector<int> big_to_orig;    // J id -> G id
    std::vector<int> orig_to_big;    // G id -> J id or -1
    TriColoring types;               // restriction of g's colouring to J
};

// J = G[B] with the Theta certificate checked: 2-connected, faces of length
// 3 or 4, restricted colouring proper. Requires at least three big vertices.
BigSubgraph big_subgraph(const PlaneGraph& g, const TriColoring& coloring,
                         const BigSmallSplit& split);

// Small-vertex cover: one path per path component of the small-induced
// subgraph (isolated small vertices use the lowest-id diagonal rule) plus one
// triple per all-small facial triangle.
SmallCover small_cover(const PlaneGraph& g, const TriColoring& coloring,
                       const BigSmallSplit& split);

// Path cover as in the restricted setting: rejects inputs carrying all-small
// facial triangles with AllSmallTriangle.
SmallPathCover small_path_cover(const PlaneGraph& g, const TriColoring& coloring,
                                const BigSmallSplit& split);

// Max over all vertices of the number of big neighbours.
int big_neighbour_bound(const PlaneGraph& g, const BigSmallSplit& split);

}  // namespace barnette
