#include "polygb/geometry.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <set>

namespace polygb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Empty: return "Empty";
    case Errc::NotConnected: return "NotConnected";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownPattern: return "UnknownPattern";
    case Errc::BadIndex: return "BadIndex";
    case Errc::VertexNotInP: return "VertexNotInP";
    case Errc::OrderPreconditionViolated: return "OrderPreconditionViolated";
    case Errc::Timeout: return "Timeout";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotThin: return "NotThin";
    case Errc::BadGridSpec: return "BadGridSpec";
    case Errc::DeletionNotInP1: return "DeletionNotInP1";
    case Errc::DoesNotClose: return "DoesNotClose";
    case Errc::SelfOverlap: return "SelfOverlap";
    case Errc::NotThinCycle: return "NotThinCycle";
    case Errc::RankCapExceeded: return "RankCapExceeded";
    case Errc::BadConfig: return "BadConfig";
  }
  return "Error";
}

std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << "(" << v.x << "," << v.y << ")";
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << "[" << iv.lo << "," << iv.hi << "]";
}

std::vector<Cell> Interval::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<size_t>(cell_count()));
  for (int x = lo.x; x < hi.x; ++x)
    for (int y = lo.y; y < hi.y; ++y) out.push_back({x, y});
  return out;
}

Polyomino Polyomino::validate(std::vector<Cell> cells, std::string name) {
  if (cells.empty()) fail(Errc::Empty, "polyomino has no cells");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  int minx = cells[0].x, miny = cells[0].y, maxx = cells[0].x, maxy = cells[0].y;
  for (const Cell& c : cells) {
    minx = std::min(minx, c.x);
    miny = std::min(miny, c.y);
    maxx = std::max(maxx, c.x);
    maxy = std::max(maxy, c.y);
  }
  for (Cell& c : cells) {
    c.x -= minx;
    c.y -= miny;
  }
  std::sort(cells.begin(), cells.end());

  Polyomino p;
  p.name_ = std::move(name);
  p.width_ = maxx - minx + 1;
  p.height_ = maxy - miny + 1;
  p.cells_ = std::move(cells);
  p.grid_.assign(static_cast<size_t>(p.width_) * p.height_, 0);
  for (const Cell& c : p.cells_) p.grid_[static_cast<size_t>(c.y) * p.width_ + c.x] = 1;

  // Edge connectivity.
  std::vector<uint8_t> seen(p.grid_.size(), 0);
  std::queue<Cell> q;
  q.push(p.cells_[0]);
  seen[static_cast<size_t>(p.cells_[0].y) * p.width_ + p.cells_[0].x] = 1;
  size_t reached = 0;
  while (!q.empty()) {
    Cell c = q.front();
    q.pop();
    ++reached;
    const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    for (const Cell& n : nbrs) {
      if (!p.has_cell(n)) continue;
      size_t idx = static_cast<size_t>(n.y) * p.width_ + n.x;
      if (!seen[idx]) {
        seen[idx] = 1;
        q.push(n);
      }
    }
  }
  if (reached != p.cells_.size())
    fail(Errc::NotConnected, "cells do not form an edge-connected set");

  std::set<Vertex> vs;
  for (const Cell& c : p.cells_) {
    vs.insert({c.x, c.y});
    vs.insert({c.x + 1, c.y});
    vs.insert({c.x, c.y + 1});
    vs.insert({c.x + 1, c.y + 1});
  }
  p.vertices_.assign(vs.begin(), vs.end());

  p.prefix_.assign(static_cast<size_t>(p.width_ + 1) * (p.height_ + 1), 0);
  auto pref = [&](int x, int y) -> int& {
    return p.prefix_[static_cast<size_t>(y) * (p.width_ + 1) + x];
  };
  for (int y = 1; y <= p.height_; ++y)
    for (int x = 1; x <= p.width_; ++x)
      pref(x, y) = (p.has_cell(x - 1, y - 1) ? 1 : 0) + pref(x - 1, y) + pref(x, y - 1) -
                   pref(x - 1, y - 1);
  return p;
}

bool Polyomino::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Polyomino::filled_in_box(int x0, int y0, int x1, int y1) const {
  x0 = std::clamp(x0, 0, width_);
  x1 = std::clamp(x1, 0, width_);
  y0 = std::clamp(y0, 0, height_);
  y1 = std::clamp(y1, 0, height_);
  if (x0 >= x1 || y0 >= y1) return 0;
  auto pref = [&](int x, int y) {
    return prefix_[static_cast<size_t>(y) * (width_ + 1) + x];
  };
  return pref(x1, y1) - pref(x0, y1) - pref(x1, y0) + pref(x0, y0);
}

bool Polyomino::is_inner(Vertex lo, Vertex hi) const {
  if (!(lo.x < hi.x && lo.y < hi.y)) return false;
  if (lo.x < 0 || lo.y < 0 || hi.x > width_ || hi.y > height_) return false;
  int area = (hi.x - lo.x) * (hi.y - lo.y);
  return filled_in_box(lo.x, lo.y, hi.x, hi.y) == area;
}

std::vector<Interval> inner_intervals(const Polyomino& p) {
  std::vector<Interval> out;
  for (int x0 = 0; x0 < p.width(); ++x0)
    for (int x1 = x0 + 1; x1 <= p.width(); ++x1)
      for (int y0 = 0; y0 < p.height(); ++y0)
        for (int y1 = y0 + 1; y1 <= p.height(); ++y1) {
          Interval iv{{x0, y0}, {x1, y1}};
          if (p.is_inner(iv)) out.push_back(iv);
        }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interval> maximal_inner_intervals(const Polyomino& p) {
  std::vector<Interval> out;
  for (const Interval& iv : inner_intervals(p)) {
    // An inner interval is maximal iff no one-step extension stays inner.
    bool extendable = p.is_inner({iv.lo.x - 1, iv.lo.y}, iv.hi) ||
                      p.is_inner(iv.lo, {iv.hi.x + 1, iv.hi.y}) ||
                      p.is_inner({iv.lo.x, iv.lo.y - 1}, iv.hi) ||
                      p.is_inner(iv.lo, {iv.hi.x, iv.hi.y + 1});
    if (!extendable) out.push_back(iv);
  }
  return out;
}

std::vector<Polyomino> holes(const Polyomino& p) {
  // Flood the complement from outside the bounding box; what is left,
  // grouped into components, is the holes.
  int w = p.width() + 2, h = p.height() + 2;  // pad one ring
  std::vector<int> comp(static_cast<size_t>(w) * h, -1);
  auto at = [&](int x, int y) -> int& { return comp[static_cast<size_t>(y) * w + x]; };
  auto occupied = [&](int x, int y) { return p.has_cell(x - 1, y - 1); };

  std::queue<Vertex> q;
  q.push({0, 0});
  at(0, 0) = 0;
  while (!q.empty()) {
    Vertex c = q.front();
    q.pop();
    const Vertex nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    for (const Vertex& n : nbrs) {
      if (n.x < 0 || n.y < 0 || n.x >= w || n.y >= h) continue;
      if (occupied(n.x, n.y) || at(n.x, n.y) == 0) continue;
      at(n.x, n.y) = 0;
      q.push(n);
    }
  }

  std::vector<Polyomino> out;
  int next = 1;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (occupied(x, y) || at(x, y) >= 0) continue;
      std::vector<Cell> cells;
      std::queue<Vertex> bfs;
      bfs.push({x, y});
      at(x, y) = next;
      while (!bfs.empty()) {
        Vertex c = bfs.front();
        bfs.pop();
        cells.push_back({c.x - 1, c.y - 1});
        const Vertex nbrs[4] = {
            {c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (const Vertex& n : nbrs) {
          if (occupied(n.x, n.y) || at(n.x, n.y) >= 0) continue;
          at(n.x, n.y) = next;
          bfs.push(n);
        }
      }
      out.push_back(Polyomino::validate(std::move(cells)));
      ++next;
    }
  return out;
}

bool is_simple(const Polyomino& p) { return holes(p).empty(); }

bool is_thin(const Polyomino& p) {
  for (int x = 0; x + 1 < p.width(); ++x)
    for (int y = 0; y + 1 < p.height(); ++y)
      if (p.filled_in_box(x, y, x + 2, y + 2) == 4) return false;
  return true;
}

const PatternDef& pattern_def(Pattern p) {
  static const PatternDef q{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {}};
  static const PatternDef s1{{{0, 0}, {1, 0}, {1, 1}, {2, 1}}, {}};
  static const PatternDef s2{{{0, 0}, {0, 1}, {1, 1}, {1, 2}}, {}};
  static const PatternDef s3{{{1, 0}, {2, 0}, {0, 1}, {1, 1}}, {}};
  static const PatternDef s4{{{1, 0}, {1, 1}, {0, 1}, {0, 2}}, {}};
  static const PatternDef dne{{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}};
  static const PatternDef dnw{{{0, 1}, {1, 0}}, {{0, 0}, {1, 1}}};
  switch (p) {
    case Pattern::Q: return q;
    case Pattern::SkewI: return s1;
    case Pattern::SkewII: return s2;
    case Pattern::SkewIII: return s3;
    case Pattern::SkewIV: return s4;
    case Pattern::DiagNE: return dne;
    case Pattern::DiagNW: return dnw;
  }
  fail(Errc::BadIndex, "bad pattern enum");
}

const char* pattern_name(Pattern p) {
  switch (p) {
    case Pattern::Q: return "Q";
    case Pattern::SkewI: return "skew-i";
    case Pattern::SkewII: return "skew-ii";
    case Pattern::SkewIII: return "skew-iii";
    case Pattern::SkewIV: return "skew-iv";
    case Pattern::DiagNE: return "diag-ne";
    case Pattern::DiagNW: return "diag-nw";
  }
  return "?";
}

Pattern pattern_by_name(const std::string& name) {
  for (Pattern p : {Pattern::Q, Pattern::SkewI, Pattern::SkewII, Pattern::SkewIII,
                    Pattern::SkewIV, Pattern::DiagNE, Pattern::DiagNW})
    if (name == pattern_name(p)) return p;
  fail(Errc::UnknownPattern, "no pattern named '" + name + "'");
}

std::vector<Vertex> pattern_matches(const Polyomino& p, Pattern pat) {
  const PatternDef& def = pattern_def(pat);
  int maxx = 0, maxy = 0;
  for (const Cell& c : def.present) {
    maxx = std::max(maxx, c.x);
    maxy = std::max(maxy, c.y);
  }
  std::vector<Vertex> out;
  for (int tx = 0; tx + maxx < p.width(); ++tx)
    for (int ty = 0; ty + maxy < p.height(); ++ty) {
      bool ok = true;
      for (const Cell& c : def.present)
        if (!p.has_cell(c.x + tx, c.y + ty)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (const Cell& c : def.absent)
        if (p.has_cell(c.x + tx, c.y + ty)) {
          ok = false;
          break;
        }
      if (ok) out.push_back({tx, ty});
    }
  return out;
}

bool contains_pattern(const Polyomino& p, Pattern pat) {
  return !pattern_matches(p, pat).empty();
}

namespace {

bool cells_share_vertex(Cell a, Cell b) {
  return std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1;
}

// Walk the adjacency cycle if every cell has exactly two edge neighbors.
// Empty result means the shape is not a single closed chain.
std::vector<Cell> cycle_walk(const Polyomino& p) {
  const auto& cs = p.cells();
  if (cs.size() < 4) return {};
  auto neighbors = [&](Cell c) {
    std::vector<Cell> out;
    const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
    for (const Cell& n : nbrs)
      if (p.has_cell(n)) out.push_back(n);
    return out;
  };
  for (const Cell& c : cs)
    if (neighbors(c).size() != 2) return {};
  // All degree two and connected (Polyomino invariant): a single cycle.
  std::vector<Cell> walk;
  walk.reserve(cs.size());
  Cell start = cs[0];
  Cell prev = start;
  Cell cur = start;
  {
    auto nb = neighbors(start);
    std::sort(nb.begin(), nb.end());
    cur = nb[0];  // deterministic orientation
  }
  walk.push_back(start);
  while (cur != start) {
    walk.push_back(cur);
    auto nb = neighbors(cur);
    Cell next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return walk;
}

}  // namespace

std::vector<Cell> thin_cycle_order(const Polyomino& p) {
  if (!is_thin_cycle(p)) fail(Errc::NotThinCycle, "not a closed thin chain");
  return cycle_walk(p);
}

bool is_thin_cycle(const Polyomino& p, CycleReading reading) {
  if (!is_thin(p)) return false;
  std::vector<Cell> walk = cycle_walk(p);
  if (walk.empty()) return false;
  int n = static_cast<int>(walk.size());
  if (reading == CycleReading::Cyclic) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int d = std::min(j - i, n - (j - i));
        if (d > 2 && cells_share_vertex(walk[i], walk[j])) return false;
      }
    return true;
  }
  // Linear reading: some rotation/reflection of the labelling must keep all
  // pairs with raw index distance above two disjoint.
  for (int rot = 0; rot < n; ++rot) {
    for (int dir = 0; dir < 2; ++dir) {
      bool ok = true;
      auto lab = [&](int i) {
        int idx = dir == 0 ? (rot + i) % n : (rot - i % n + n) % n;
        return walk[idx];
      };
      for (int i = 0; ok && i < n; ++i)
        for (int j = i + 3; ok && j < n; ++j)
          if (cells_share_vertex(lab(i), lab(j))) ok = false;
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace polygb
