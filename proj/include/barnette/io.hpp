#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "barnette/plane_graph.hpp"

namespace barnette::io {

// Text rotation format: first line `n`, then one line per vertex
// `v: a b c ...` with the neighbours in clockwise order.
PlaneGraph read_rotation_text(std::istream& in);
std::string write_rotation_text(const PlaneGraph& g);

// plantri planar_code: header ">>planar_code<<", then per graph one byte n
// followed by, for each vertex, its neighbour bytes (1-based) terminated by 0.
// Only n <= 255 is representable.
std::vector<PlaneGraph> read_planar_code(std::istream& in);
void write_planar_code(std::ostream& out, const std::vector<PlaneGraph>& graphs,
                       bool with_header = true);

// Sniffs planar_code by its header; anything else is rotation text. Rotation
// text carries a single graph.
std::vector<PlaneGraph> read_auto(std::istream& in);

// Partitions serialize as `v:part` lines with part in {A, B}.
std::string write_partition(const std::vector<int>& part_of);
std::vector<int> read_partition(std::istream& in);

}  // namespace barnette::io
