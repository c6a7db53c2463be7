#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "polygb/geometry.hpp"

namespace polygb::families {

// Frame-with-holes built on the vertex box [(1,1), (m,n)]: a one-cell-wide
// outer border and an aligned r x s array of rectangular holes separated by
// one-cell corridors. Hole extents are closed vertex intervals, so hole i
// covers cell columns col[i].first .. col[i].second - 1.
struct GridSpec {
  int m = 0;
  int n = 0;
  std::vector<std::pair<int, int>> cols;  // ascending, cols[0].first == 2,
  std::vector<std::pair<int, int>> rows;  // back().second == m-1 (resp. n-1)
};

// BadGridSpec when the spec violates the layout above. The result is thin,
// connected, and has exactly cols.size() * rows.size() holes.
Polyomino make_grid(const GridSpec& spec);

// Cells lying in exactly one (P1) or two (P2) maximal inner intervals of
// length at least two. Only meaningful for thin shapes with holes, which is
// what make_grid produces; anything else is BadGridSpec.
std::pair<std::vector<Cell>, std::vector<Cell>> split_P1_P2(const Polyomino& grid);

// grid minus deleted; every deleted cell must lie in P1 (DeletionNotInP1)
// and the remainder must stay connected (NotConnected).
Polyomino make_subgrid(const Polyomino& grid, const std::vector<Cell>& deleted);

// One straight stretch of a closed chain: heading and total cells covered,
// sharing one cell with the previous stretch. Length must be at least 2.
struct Run {
  char dir;  // 'E', 'N', 'W', 'S'
  int len;
};

struct ThinCycle {
  Polyomino poly;
  int min_run = 0;  // smallest maximal-inner-interval cell count
};

// Trace the runs from the origin; the trace must return to its start
// (DoesNotClose), never revisit a cell (SelfOverlap), turn at every joint
// (BadConfig), and the result must pass is_thin_cycle (NotThinCycle).
ThinCycle make_thin_cycle(const std::vector<Run>& runs);

std::vector<Run> parse_runs(const std::string& text);  // "E3,N3,W3,S3"

// All fixed polyominoes of the given rank (translations identified,
// rotations and reflections distinct), emitted in a deterministic order.
// Counts by rank start 1, 2, 6, 19, 63, 216, 760, 2725.
void enumerate_fixed(int rank, const std::function<void(const Polyomino&)>& emit,
                     int rank_cap = 8);  // RankCapExceeded above the cap

// Named example shapes used across tests and the gallery generator.
const std::vector<std::pair<std::string, std::string>>& gallery_ascii();
Polyomino gallery_shape(const std::string& name);  // BadConfig on unknown name

}  // namespace polygb::families
