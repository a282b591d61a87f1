#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "barnette/partition.hpp"
#include "barnette/plane_graph.hpp"
#include "barnette/triangulation.hpp"

namespace barnette {

enum class Label : uint8_t { alpha, beta, gamma };

struct WorkColoring {
    std::vector<Label> label_of;
    int count(Label l) const {
        int c = 0;
        for (Label x : label_of) c += x == l;
        return c;
    }
};

// Role-resolved input of the engine: J with classes acting as J1, J2, J3 plus
// the derived preliminary structure.
struct EngineInput {
    const PlaneGraph* J = nullptr;
    TriColoring types;            // class k = J_k
    std::vector<char> in_x1, in_x2, in_x3;
    WorkColoring preliminary;

    int cls(int v) const { return types.class_of[v]; }
};

// Validates 3-connectivity, conditions (a1) and (a2), and computes the
// preliminary colouring (X1 before X2 before X3).
EngineInput make_engine_input(const PlaneGraph& J, const TriColoring& types);

// Detected cycle structure of the beta subgraph.
struct BetaCycleReport {
    struct Cycle {
        std::vector<int> vertices;  // cyclic order
        bool independent = true;
        bool facial = false;        // length-4 cycles must be facial
    };
    std::vector<Cycle> cycles;          // one per pure cycle block
    int complex_blocks = 0;             // blocks with more edges than vertices
    int cyclic_edge_count = 0;          // beta edges inside cyclic blocks
    int cycle_block_count = 0;          // blocks containing at least one cycle
    std::vector<char> on_cycle;         // vertex lies in some cyclic block
    bool empty() const { return cycle_block_count == 0; }
    bool all_independent() const { return complex_blocks == 0; }
    std::pair<int, int> measure() const { return {cyclic_edge_count, cycle_block_count}; }
};

BetaCycleReport beta_cycle_report(const EngineInput& in, const WorkColoring& t);

struct BadPathReport {
    std::vector<std::vector<int>> bad_paths;  // alternating J3/J1 sequences
    std::vector<int> bad_vertices;            // distinct J1 members, ascending
    bool good() const { return bad_vertices.size() <= 1; }
};

BadPathReport bad_path_report(const EngineInput& in, const WorkColoring& t,
                              const BetaCycleReport& cycles);

// Per-condition outcome of the eight associated-colouring conditions.
struct AssociatedReport {
    std::array<bool, 8> ok{};
    std::array<std::string, 8> witness{};
    bool all() const {
        for (bool b : ok)
            if (!b) return false;
        return true;
    }
    std::string first_failure() const;
};

AssociatedReport validate_associated(const EngineInput& in, const WorkColoring& t);

struct StepTrace {
    std::string rule;   // L43a | L43b | L43c | L46
    int pivot = -1;     // recoloured pivot vertex
    std::pair<int, int> measure;  // after the step
    std::string line() const;
};

// One application of the overlap elimination (two beta cycles sharing a
// vertex). Requires an associated colouring with no bad vertex.
WorkColoring step_eliminate_overlap(const EngineInput& in, const WorkColoring& t,
                                    StepTrace* trace = nullptr);

// One application of the independent-cycle removal. Requires a good colouring
// with all beta cycles pairwise disjoint and at least one cycle.
WorkColoring step_remove_independent_cycle(const EngineInput& in, const WorkColoring& t,
                                           StepTrace* trace = nullptr);

// Driver: preliminary colouring, overlap elimination until cycles are
// independent, then cycle removal until none remain. Invariants are checked
// after every step; on at most check_cap vertices the cycle sets are compared
// exhaustively.
struct EngineRun {
    WorkColoring result;
    std::vector<StepTrace> steps;
};

EngineRun eliminate_beta_cycles(const EngineInput& in, int exhaustive_cap = 24);

// Resolves the gamma vertices in ascending order; returns the independent set
// I and the partition {(J1 u J2) \ I, J3 u I} (part 1 is the alpha side).
struct GammaResolution {
    std::vector<int> independent_set;
    ForestBipartition partition;
};

GammaResolution resolve_gammas(const EngineInput& in, const WorkColoring& t);

struct ThetaPartitionResult {
    ForestBipartition partition;
    std::vector<StepTrace> steps;  // engine steps of all 3-connected leaves
};

// Full 3-connected run: cycle elimination then gamma resolution plus the
// final contract checks.
ThetaPartitionResult forest_partition_3connected(const PlaneGraph& J, const TriColoring& types);

// Extension rules for the reductions; sub_part is indexed by the reduced
// graph's ids (ascending-order relabelling of the kept vertices).
ForestBipartition extend_over_removed_vertex(const PlaneGraph& J, const TriColoring& types, int u,
                                 const ForestBipartition& sub_part);
ForestBipartition extend_over_removed_path(const PlaneGraph& J, const TriColoring& types,
                                 const std::vector<int>& path,
                                 const ForestBipartition& sub_part);

// Full recursion for any J in Theta with max degree 4.
ThetaPartitionResult forest_partition_theta(const PlaneGraph& J, const TriColoring& types);

// Role assignment used by the pipeline: J3 = largest class (ties by smallest
// member), J1 = the remaining class containing the smaller vertex id.
TriColoring assign_engine_roles(const PlaneGraph& J, const TriColoring& coloring);

// All simple cycles of the beta subgraph as canonical edge sets; exhaustive,
// for small fixtures only.
std::vector<std::vector<std::pair<int, int>>> enumerate_beta_cycles(const PlaneGraph& J,
                                                                    const WorkColoring& t);

}  // namespace barnette
