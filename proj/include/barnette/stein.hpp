#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barnette/goodcolor.hpp"
#include "barnette/partition.hpp"
#include "barnette/plane_graph.hpp"
#include "barnette/triangulation.hpp"

namespace barnette {

// Hamilton cycle of the dual graph, written as face ids of the primal
// triangulation together with the primal crossing edges.
struct HamiltonCycle {
    std::vector<int> dual_vertices;   // cyclic face-id sequence
    std::vector<int> crossing_edges;  // primal edge ids, crossing_edges[i] between
                                      // dual_vertices[i] and dual_vertices[i+1]
    std::vector<std::pair<int, int>> edge_set(const PlaneGraph& g) const;
    std::string to_line() const;
};

// Restriction of a two-forest partition of G to the big vertices; checked to
// be compatible with the restricted classes and forests in G[B].
ForestBipartition restrict_to_big(const PlaneGraph& g, const TriColoring& coloring,
                                  const BigSmallSplit& split, const BigSubgraph& J,
                                  const ForestBipartition& uw);

// Per-path extension override used by the multiplicity construction.
enum class ExtendChoice { automatic, all_opposite, pin_lowest_inner };

// Extends a forest bipartition of the big vertices over the small paths and
// triangle triples. part_of_big is indexed by vertices of G (entries for
// small vertices are ignored). Overrides, when given, are indexed like
// cover.paths.
ForestBipartition extend_to_full(const PlaneGraph& g, const TriColoring& coloring,
                                 const SmallCover& cover,
                                 const std::vector<int>& part_of_big,
                                 const std::vector<ExtendChoice>* overrides = nullptr);

ForestBipartition extend_to_full(const PlaneGraph& g, const TriColoring& coloring,
                                 const SmallPathCover& cover,
                                 const std::vector<int>& part_of_big,
                                 const std::vector<ExtendChoice>* overrides = nullptr);

// Crossing edges of a two-tree partition, read as a Hamilton cycle of the
// dual. Throws not_two_trees / disconnected_cycle on invalid partitions.
HamiltonCycle forest_partition_to_hamilton(const PlaneGraph& g, const ForestBipartition& uw);

// Inverse direction: the Jordan split of the dual cycle; both sides induce
// trees.
ForestBipartition hamilton_to_forest_partition(const PlaneGraph& g, const HamiltonCycle& h);

// Independent verifier: every face visited once, consecutive faces share the
// recorded crossing edge.
void verify_hamilton_cycle(const PlaneGraph& g, const HamiltonCycle& h);

// Bipartite fast path: every facial 3-cycle of g carries a small and a big
// vertex; G[B] is then bipartite with quadrilateral faces and the bipartition
// itself extends to a Hamilton cycle.
HamiltonCycle bipartite_fastpath(const PlaneGraph& g, const TriColoring& coloring,
                                   const BigSmallSplit& split);

struct LowerBoundResult {
    int k = 0;
    std::vector<HamiltonCycle> cycles;  // pairwise distinct, verified
};

// Multiplicity construction: at least 2^k distinct Hamilton cycles where
// k = ceil((|B|-2)/(4*maxdeg(G[B]) - 7)); the quadrilateral big subgraph case
// enumerates at least ten cycles.
LowerBoundResult hamilton_lower_bound(const PlaneGraph& g, const TriColoring& coloring,
                                      const BigSmallSplit& split);

struct HamiltonizeResult {
    HamiltonCycle cycle;
    ForestBipartition partition;   // two-tree witness in G
    std::vector<StepTrace> steps;  // engine trace when the general branch ran
    std::string family;
};

// Full pipeline for an Eulerian plane triangulation with more than three
// vertices; requires no vertex with more than four big neighbours.
HamiltonizeResult hamiltonize(const PlaneGraph& g);

// Face ids of dual(p) corresponding to the vertices of the cubic input p.
std::vector<int> primal_vertex_faces(const PlaneGraph& p, const PlaneGraph& dual_graph);

}  // namespace barnette
