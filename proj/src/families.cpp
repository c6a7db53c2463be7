#include "polygb/families.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polygb/io.hpp"

namespace polygb::families {

Polyomino make_grid(const GridSpec& spec) {
  auto check_axis = [](const std::vector<std::pair<int, int>>& ivs, int extent,
                       const char* axis) {
    if (extent < 4)
      fail(Errc::BadGridSpec, std::string("box too small along ") + axis);
    if (ivs.empty()) fail(Errc::BadGridSpec, std::string("no holes along ") + axis);
    if (ivs.front().first != 2)
      fail(Errc::BadGridSpec,
           std::string("first hole along ") + axis + " must start at 2 (one-cell border)");
    if (ivs.back().second != extent - 1)
      fail(Errc::BadGridSpec, std::string("last hole along ") + axis +
                                  " must end one short of the box (one-cell border)");
    for (size_t i = 0; i < ivs.size(); ++i) {
      if (ivs[i].first >= ivs[i].second)
        fail(Errc::BadGridSpec, std::string("degenerate hole interval along ") + axis);
      if (i + 1 < ivs.size() && ivs[i + 1].first != ivs[i].second + 1)
        fail(Errc::BadGridSpec,
             std::string("holes along ") + axis + " must be separated by one cell");
    }
  };
  check_axis(spec.cols, spec.m, "x");
  check_axis(spec.rows, spec.n, "y");

  // Hole interval [a, b] in vertices covers cells a .. b-1 (1-based).
  auto in_holes = [](const std::vector<std::pair<int, int>>& ivs, int c) {
    for (const auto& [a, b] : ivs)
      if (a <= c && c < b) return true;
    return false;
  };
  std::vector<Cell> cells;
  for (int x = 1; x < spec.m; ++x)
    for (int y = 1; y < spec.n; ++y)
      if (!in_holes(spec.cols, x) || !in_holes(spec.rows, y)) cells.push_back({x, y});

  Polyomino p = Polyomino::validate(std::move(cells));
  size_t expected = spec.cols.size() * spec.rows.size();
  if (!is_thin(p) || holes(p).size() != expected)
    fail(Errc::BadGridSpec, "spec does not produce a thin frame with the declared holes");
  return p;
}

namespace {

// Per cell, the maximal inner intervals of length >= 2 containing it. Thin
// shapes have at most two (one per axis).
std::map<Cell, int> long_interval_membership(const Polyomino& p) {
  std::map<Cell, int> count;
  for (const Cell& c : p.cells()) count[c] = 0;
  for (const Interval& iv : maximal_inner_intervals(p)) {
    if (iv.cell_count() < 2) continue;
    for (const Cell& c : iv.cells()) ++count[c];
  }
  return count;
}

void require_grid_like(const Polyomino& p, const char* who) {
  if (!is_thin(p) || holes(p).empty())
    fail(Errc::BadGridSpec, std::string(who) + " expects a thin shape with holes");
}

}  // namespace

std::pair<std::vector<Cell>, std::vector<Cell>> split_P1_P2(const Polyomino& grid) {
  require_grid_like(grid, "split_P1_P2");
  std::pair<std::vector<Cell>, std::vector<Cell>> out;
  for (const auto& [c, k] : long_interval_membership(grid)) {
    if (k == 1)
      out.first.push_back(c);
    else if (k == 2)
      out.second.push_back(c);
  }
  return out;
}

Polyomino make_subgrid(const Polyomino& grid, const std::vector<Cell>& deleted) {
  require_grid_like(grid, "make_subgrid");
  auto [p1, p2] = split_P1_P2(grid);
  std::set<Cell> p1set(p1.begin(), p1.end());
  std::set<Cell> gone;
  for (const Cell& d : deleted) {
    if (!p1set.count(d))
      fail(Errc::DeletionNotInP1, "deleted cell (" + std::to_string(d.x) + "," +
                                      std::to_string(d.y) + ") is not in P1");
    gone.insert(d);
  }
  std::vector<Cell> cells;
  for (const Cell& c : grid.cells())
    if (!gone.count(c)) cells.push_back(c);
  return Polyomino::validate(std::move(cells));  // NotConnected if split apart
}

namespace {

Vertex dir_step(char d) {
  switch (d) {
    case 'E': return {1, 0};
    case 'N': return {0, 1};
    case 'W': return {-1, 0};
    case 'S': return {0, -1};
  }
  fail(Errc::BadConfig, std::string("bad direction '") + d + "' (want E/N/W/S)");
}

bool same_axis(char a, char b) {
  auto horiz = [](char d) { return d == 'E' || d == 'W'; };
  return horiz(a) == horiz(b);
}

}  // namespace

ThinCycle make_thin_cycle(const std::vector<Run>& runs) {
  if (runs.size() < 4) fail(Errc::BadConfig, "a closed chain needs at least four runs");
  for (const Run& r : runs) {
    dir_step(r.dir);  // validates the direction
    if (r.len < 2) fail(Errc::BadConfig, "runs must cover at least two cells");
  }
  for (size_t i = 0; i < runs.size(); ++i)
    if (same_axis(runs[i].dir, runs[(i + 1) % runs.size()].dir))
      fail(Errc::BadConfig, "consecutive runs must turn");

  Cell pos{0, 0};
  std::set<Cell> visited{pos};
  std::vector<Cell> cells{pos};
  bool closed = false;
  for (size_t i = 0; i < runs.size(); ++i) {
    Vertex d = dir_step(runs[i].dir);
    for (int step = 1; step < runs[i].len; ++step) {
      pos = {pos.x + d.x, pos.y + d.y};
      bool last = (i + 1 == runs.size()) && (step + 1 == runs[i].len);
      if (pos == Cell{0, 0} && last) {
        closed = true;
        break;
      }
      if (visited.count(pos)) fail(Errc::SelfOverlap, "trace revisits a cell");
      visited.insert(pos);
      cells.push_back(pos);
    }
  }
  if (!closed) fail(Errc::DoesNotClose, "trace does not return to its start");

  ThinCycle out{Polyomino::validate(std::move(cells)), 0};
  if (!is_thin_cycle(out.poly))
    fail(Errc::NotThinCycle, "trace closes but is not a thin cycle");
  int best = 0;
  for (const Interval& iv : maximal_inner_intervals(out.poly))
    if (best == 0 || iv.cell_count() < best) best = iv.cell_count();
  out.min_run = best;
  return out;
}

std::vector<Run> parse_runs(const std::string& text) {
  std::vector<Run> out;
  size_t i = 0;
  while (i < text.size()) {
    char d = text[i++];
    size_t j = i;
    while (j < text.size() && text[j] != ',') ++j;
    if (j == i) fail(Errc::BadConfig, "run missing a length: " + text);
    int len = 0;
    for (size_t k = i; k < j; ++k) {
      if (text[k] < '0' || text[k] > '9')
        fail(Errc::BadConfig, "bad run length in: " + text);
      len = len * 10 + (text[k] - '0');
    }
    out.push_back({d, len});
    i = j < text.size() ? j + 1 : j;
  }
  if (out.empty()) fail(Errc::BadConfig, "no runs given");
  return out;
}

namespace {

// Classic fixed-polyomino enumeration: grow in the half plane y > 0 plus
// the nonnegative part of the x axis, offering each new frontier cell once.
struct Enumerator {
  int rank;
  int span;  // coordinates live in x in [-rank+1, rank-1], y in [0, rank-1]
  std::vector<uint8_t> reached;
  std::vector<Cell> cur;
  const std::function<void(const Polyomino&)>* emit;

  int index(Cell c) const { return c.y * (2 * rank - 1) + (c.x + rank - 1); }
  bool allowed(Cell c) const {
    if (c.y < 0 || c.y >= rank || c.x <= -rank || c.x >= rank) return false;
    return c.y > 0 || c.x >= 0;
  }

  void grow(std::vector<Cell> untried) {
    while (!untried.empty()) {
      Cell p = untried.back();
      untried.pop_back();
      cur.push_back(p);
      if (static_cast<int>(cur.size()) == rank) {
        (*emit)(Polyomino::validate(cur));
      } else {
        std::vector<Cell> next = untried;
        std::vector<Cell> marked;
        const Cell nbrs[4] = {
            {p.x + 1, p.y}, {p.x, p.y + 1}, {p.x - 1, p.y}, {p.x, p.y - 1}};
        for (const Cell& nb : nbrs) {
          if (!allowed(nb) || reached[static_cast<size_t>(index(nb))]) continue;
          reached[static_cast<size_t>(index(nb))] = 1;
          next.push_back(nb);
          marked.push_back(nb);
        }
        grow(std::move(next));
        for (const Cell& nb : marked) reached[static_cast<size_t>(index(nb))] = 0;
      }
      cur.pop_back();
    }
  }
};

}  // namespace

void enumerate_fixed(int rank, const std::function<void(const Polyomino&)>& emit,
                     int rank_cap) {
  if (rank < 1) fail(Errc::BadConfig, "rank must be at least 1");
  if (rank > rank_cap)
    fail(Errc::RankCapExceeded,
         "rank " + std::to_string(rank) + " above cap " + std::to_string(rank_cap));
  Enumerator e;
  e.rank = rank;
  e.reached.assign(static_cast<size_t>(rank) * (2 * rank - 1), 0);
  e.emit = &emit;
  Cell origin{0, 0};
  e.reached[static_cast<size_t>(e.index(origin))] = 1;
  e.grow({origin});
}

const std::vector<std::pair<std::string, std::string>>& gallery_ascii() {
  static const std::vector<std::pair<std::string, std::string>> shapes = {
      {"figQ",
       "##\n"
       "##\n"},
      {"fig7_i",
       ".##\n"
       "##.\n"},
      {"fig7_ii",
       ".#\n"
       "##\n"
       "#.\n"},
      {"fig7_iii",
       "##.\n"
       ".##\n"},
      {"fig7_iv",
       "#.\n"
       "##\n"
       ".#\n"},
      {"fig8a",
       ".###.\n"
       "##.##\n"
       "#...#\n"
       "#####\n"},
      {"fig8b",
       ".###.\n"
       "##.##\n"
       "#...#\n"
       "##.##\n"
       ".###.\n"},
      {"fig8c",
       "..###..\n"
       "..#.#..\n"
       "###.###\n"
       "#.....#\n"
       "###.###\n"
       "..#.#..\n"
       "..###..\n"},
      {"fig9",
       "###############\n"
       "#...#.#.#.#...#\n"
       "###############\n"
       "#...#.#.#.#...#\n"
       "###############\n"},
      {"fig10",
       "#############.#\n"
       "#...#.#.#.#...#\n"
       "###.###.###.###\n"
       "#...#.....#...#\n"
       "#.#############\n"},
  };
  return shapes;
}

Polyomino gallery_shape(const std::string& name) {
  for (const auto& [n, text] : gallery_ascii())
    if (n == name) return parse_ascii(text, n);
  fail(Errc::BadConfig, "no gallery shape named '" + name + "'");
}

}  // namespace polygb::families
