#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace barnette {

// Stable error codes, shared by the library and the CLI surface.
enum class errc {
    non_simple,
    asymmetric_adjacency,
    non_planar_embedding,
    dual_not_simple,
    empty_induced,
    not_triangulation,
    odd_degree,
    is_three_cycle,
    coloring_conflict,
    unclassified_family,
    theta_violation,
    all_small_triangle,
    not_independent,
    not_subset,
    precondition_a1,
    precondition_a2,
    configuration_not_found,
    iteration_cap_exceeded,
    case_analysis_unreachable,
    recursion_invariant_broken,
    not_two_trees,
    disconnected_cycle,
    hypothesis_failed,
    hypothesis_not_met,
    min_degree_violation,
    not_theta,
    cap_exceeded,
    contract_breach,
    bad_input,
};

const char* errc_name(errc code);

// All recoverable failures surface as graph_error; errc gives the stable code.
class graph_error : public std::runtime_error {
  public:
    graph_error(errc code, std::string what)
        : std::runtime_error(std::move(what)), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

struct Face {
    int id = -1;
    std::vector<int> boundary;  // vertex cycle, starting at the canonical dart
    int length() const { return static_cast<int>(boundary.size()); }
};

// Plane graph encoded as a rotation system: per vertex the clockwise cyclic
// sequence of neighbours. Faces, darts and the edge list are derived on
// construction and the object is immutable afterwards.
class PlaneGraph {
  public:
    PlaneGraph() = default;

    // Validates simplicity, adjacency symmetry and the Euler count. Throws
    // graph_error with codes non_simple / asymmetric_adjacency /
    // non_planar_embedding.
    static PlaneGraph from_rotations(std::vector<std::vector<int>> rotations);

    int vertex_count() const { return static_cast<int>(rotations_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<int>& neighbors(int v) const { return rotations_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rotations_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }

    int degree(int v) const { return static_cast<int>(rotations_[v].size()); }
    bool has_edge(int u, int v) const;

    // Index of v in u's rotation; -1 if absent.
    int rotation_index(int u, int v) const;
    // Neighbour following v in u's clockwise rotation.
    int next_in_rotation(int u, int v) const;
    int prev_in_rotation(int u, int v) const;

    // Face on the corner (a, v, b) where b directly follows a in v's rotation.
    int face_at_corner(int v, int a, int b) const;
    // The two faces incident to edge {u, v}.
    std::pair<int, int> faces_of_edge(int u, int v) const;
    // Face id for the dart u->v (the face traced through that dart).
    int face_of_dart(int u, int v) const;

    int edge_id(int u, int v) const;  // -1 if absent

    bool is_connected() const;

    std::string to_string() const;

  private:
    std::vector<std::vector<int>> rotations_;
    std::vector<std::pair<int, int>> edges_;        // u < v
    std::vector<Face> faces_;
    std::vector<std::vector<int>> dart_face_;       // [v][i] -> face id of dart (v, i-th nbr)
    std::vector<std::vector<int>> adj_index_;       // [v] sorted copy for has_edge
    void compute_edges();
    void compute_faces();
};

struct EdgeCorrespondence {
    // primal edge id -> dual edge id and back; total bijections.
    std::vector<int> primal_to_dual;
    std::vector<int> dual_to_primal;
};

struct DualResult {
    PlaneGraph graph;
    EdgeCorrespondence correspondence;
};

// Dual plane graph: one vertex per face, rotations induced by boundary order.
// Rejects inputs whose dual would have loops or parallel edges.
DualResult dual(const PlaneGraph& g);

// Exhaustive vertex-connectivity test, k in {1,2,3}; desk-scale inputs only.
bool is_k_connected(const PlaneGraph& g, int k);

// Induced embedded subgraph on S; cyclic neighbour order inherited from g.
// The result is re-validated. 'relabel_out', when given, receives the map
// new id -> old id (S in ascending order).
PlaneGraph induced_plane_subgraph(const PlaneGraph& g, const std::vector<int>& S,
                                  std::vector<int>* relabel_out = nullptr);

struct Block {
    std::vector<std::pair<int, int>> block_edges;
    std::vector<int> vertices;
    bool is_bridge() const { return block_edges.size() == 1; }
    // A block with as many edges as vertices is a single cycle; more edges
    // means at least two cycles through shared vertices.
    bool is_cycle() const { return block_edges.size() == vertices.size(); }
    bool is_complex() const { return block_edges.size() > vertices.size(); }
};

std::vector<Block> block_decomposition(const PlaneGraph& g);

// Two-colouring by BFS; nullopt when an odd cycle exists.
std::optional<std::vector<int>> is_bipartite(const PlaneGraph& g);

// Canonical code of the embedding (minimum over all rooted dart BFS codes of
// both orientations); equal codes <=> isomorphic plane graphs.
std::vector<int> canonical_code(const PlaneGraph& g);

bool plane_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

}  // namespace barnette
