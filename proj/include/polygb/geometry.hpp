#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "polygb/errors.hpp"

namespace polygb {

// Lattice point. Doubles as a cell address via the cell's lower-left corner.
struct Vertex {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

using Cell = Vertex;  // a cell is named by its lower-left corner

std::ostream& operator<<(std::ostream&, const Vertex&);

// Axis-aligned interval [lo, hi] given by its diagonal corners, lo <= hi
// componentwise. Proper means positive extent in both axes.
struct Interval {
  Vertex lo;  // lower-left
  Vertex hi;  // upper-right

  friend auto operator<=>(const Interval&, const Interval&) = default;

  bool proper() const { return lo.x < hi.x && lo.y < hi.y; }
  Vertex upper_left() const { return {lo.x, hi.y}; }
  Vertex lower_right() const { return {hi.x, lo.y}; }
  int width() const { return hi.x - lo.x; }    // in cells
  int height() const { return hi.y - lo.y; }   // in cells
  int cell_count() const { return width() * height(); }
  bool contains(const Interval& other) const {
    return lo.x <= other.lo.x && lo.y <= other.lo.y && other.hi.x <= hi.x &&
           other.hi.y <= hi.y;
  }
  std::vector<Cell> cells() const;
};

std::ostream& operator<<(std::ostream&, const Interval&);

// Finite collection of unit cells, edge-connected, translated so the
// bounding box starts at the origin. Immutable after construction; all
// derived lookups are built eagerly so instances can be shared across
// threads.
class Polyomino {
 public:
  // Validates: nonempty, connected through edges. Duplicates are dropped.
  // Canonical translation puts min x = min y = 0.
  static Polyomino validate(std::vector<Cell> cells, std::string name = "");

  const std::string& name() const { return name_; }
  const std::vector<Cell>& cells() const { return cells_; }  // sorted (x, y)
  int rank() const { return static_cast<int>(cells_.size()); }
  int width() const { return width_; }   // bounding box, in cells
  int height() const { return height_; }

  bool has_cell(int x, int y) const {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return false;
    return grid_[static_cast<size_t>(y) * width_ + x] != 0;
  }
  bool has_cell(Cell c) const { return has_cell(c.x, c.y); }

  // Vertices of P: corners of its cells, sorted by (x, y).
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool has_vertex(Vertex v) const;

  // Number of cells of P inside the (possibly out-of-range) cell box
  // [x0, x1) x [y0, y1).
  int filled_in_box(int x0, int y0, int x1, int y1) const;

  // True when every cell of [lo, hi] belongs to P and the interval is proper.
  bool is_inner(Vertex lo, Vertex hi) const;
  bool is_inner(const Interval& iv) const { return is_inner(iv.lo, iv.hi); }

  friend bool operator==(const Polyomino& a, const Polyomino& b) {
    return a.cells_ == b.cells_;
  }

 private:
  Polyomino() = default;

  std::string name_;
  std::vector<Cell> cells_;
  std::vector<Vertex> vertices_;
  std::vector<uint8_t> grid_;     // width_ * height_ occupancy
  std::vector<int> prefix_;       // (width_+1) * (height_+1) inclusion sums
  int width_ = 0;
  int height_ = 0;
};

// All inner intervals (proper intervals whose cells all lie in P), sorted.
std::vector<Interval> inner_intervals(const Polyomino& p);

// Inner intervals not strictly contained in a larger inner interval.
std::vector<Interval> maximal_inner_intervals(const Polyomino& p);

// Bounded connected components of the complement, each returned as a
// canonical Polyomino, ordered by their position inside p's bounding box.
std::vector<Polyomino> holes(const Polyomino& p);

bool is_simple(const Polyomino& p);  // no holes

// Thin: contains no 2x2 block of cells.
bool is_thin(const Polyomino& p);

// Fixed patterns used by the combinatorial criteria. Skew patterns are
// matched as subpolyominoes (cells present, rest unconstrained); the two
// diagonal-corner patterns also require their complementary cells absent.
enum class Pattern { Q, SkewI, SkewII, SkewIII, SkewIV, DiagNE, DiagNW };

struct PatternDef {
  std::vector<Cell> present;
  std::vector<Cell> absent;
};

const PatternDef& pattern_def(Pattern p);
const char* pattern_name(Pattern p);
Pattern pattern_by_name(const std::string& name);  // UnknownPattern

// Translations t such that the pattern matches P at offset t.
std::vector<Vertex> pattern_matches(const Polyomino& p, Pattern pat);
bool contains_pattern(const Polyomino& p, Pattern pat);

// How the cyclic disjointness requirement of a closed chain is read.
// Cyclic compares indices around the cycle; Linear applies the raw index
// difference including the wrap-around pair, which no closed chain of four
// or more cells can satisfy. Linear exists for comparison only.
enum class CycleReading { Cyclic, Linear };

// Closed thin chain: P is thin, its cell adjacency graph is a single cycle,
// and cells far apart along the cycle share no vertex.
bool is_thin_cycle(const Polyomino& p, CycleReading reading = CycleReading::Cyclic);

// The cell cycle of a thin cycle, starting at the smallest cell, oriented
// deterministically. Fails with NotThinCycle when p is not one.
std::vector<Cell> thin_cycle_order(const Polyomino& p);

}  // namespace polygb

template <>
struct std::hash<polygb::Vertex> {
  size_t operator()(const polygb::Vertex& v) const {
    return std::hash<long long>()((static_cast<long long>(v.x) << 32) ^
                                  static_cast<unsigned>(v.y));
  }
};
