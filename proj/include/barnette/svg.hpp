#pragma once

#include <optional>
#include <string>

#include "barnette/partition.hpp"
#include "barnette/plane_graph.hpp"
#include "barnette/stein.hpp"

namespace barnette::svg {

// Renders the graph with a Tutte barycentric layout (outer face = face 0).
// Optional partition colours the vertices and highlights crossing edges;
// optional cycle draws the dual walk through face centroids.
std::string render(const PlaneGraph& g, const ForestBipartition* partition = nullptr,
                   const HamiltonCycle* cycle = nullptr);

}  // namespace barnette::svg
