#pragma once

// Slow reference implementations, written straight off the definitions so
// the library's answers can be checked against an independent route.

#include <set>
#include <vector>

#include "polygb/geometry.hpp"

namespace polygb::oracle {

// Direct definition: both corners range over the vertex box, every covered
// cell is checked against the raw cell list.
std::vector<Interval> naive_inner_intervals(const Polyomino& p);

// Inner intervals not strictly contained in any other inner interval.
std::vector<Interval> naive_maximal_inner_intervals(const Polyomino& p);

// Hole count via the Euler characteristic: for an edge-connected union of
// cells, vertices - edges + cells = 1 - holes.
int euler_hole_count(const Polyomino& p);

// Grow-and-deduplicate enumeration of fixed polyominoes of a given rank.
std::set<std::vector<Cell>> naive_fixed_polyominoes(int rank);

// 2x2 scan straight off the cell set.
bool naive_is_thin(const Polyomino& p);

Polyomino fixture(const std::string& name);  // loads fixtures/paper/<name>

std::vector<Polyomino> all_fixed(int max_rank);  // via families::enumerate_fixed

}  // namespace polygb::oracle
