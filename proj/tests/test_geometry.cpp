#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "polygb/families.hpp"
#include "polygb/geometry.hpp"
#include "polygb/io.hpp"

using namespace polygb;

namespace {
Polyomino shape(const std::string& ascii) { return parse_ascii(ascii); }
const Polyomino kAnnulus = shape("###\n#.#\n###\n");
}  // namespace

TEST_CASE("validate canonicalizes, deduplicates and requires connectivity") {
  Polyomino l = Polyomino::validate({{5, 7}, {5, 8}, {6, 7}});
  CHECK(l == Polyomino::validate({{0, 0}, {0, 1}, {1, 0}}));
  CHECK(Polyomino::validate({{0, 0}, {0, 0}, {1, 0}}).rank() == 2);
  CHECK_THROWS_AS(Polyomino::validate({}), Error);
  CHECK_THROWS_AS(Polyomino::validate({{0, 0}, {2, 0}}), Error);
  try {
    Polyomino::validate({{0, 0}, {1, 1}});  // corner contact only
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotConnected);
  }
}

TEST_CASE("vertex set of a single cell") {
  Polyomino p = Polyomino::validate({{0, 0}});
  CHECK(p.vertices() == std::vector<Vertex>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(p.has_vertex({1, 1}));
  CHECK(!p.has_vertex({2, 0}));
}

TEST_CASE("inner interval counts on tiny shapes") {
  CHECK(inner_intervals(Polyomino::validate({{0, 0}})).size() == 1);
  CHECK(inner_intervals(shape("##\n")).size() == 3);
  CHECK(inner_intervals(shape("##\n##\n")).size() == 9);
  CHECK(inner_intervals(kAnnulus).size() == 20);  // 8 cells + 8 dominoes + 4 rows
}

TEST_CASE("inner and maximal intervals match the naive definitions") {
  for (const Polyomino& p : oracle::all_fixed(5)) {
    CHECK(inner_intervals(p) == oracle::naive_inner_intervals(p));
    CHECK(maximal_inner_intervals(p) == oracle::naive_maximal_inner_intervals(p));
  }
  Polyomino a = oracle::fixture("fig8a");
  CHECK(inner_intervals(a) == oracle::naive_inner_intervals(a));
  CHECK(maximal_inner_intervals(a) == oracle::naive_maximal_inner_intervals(a));
}

TEST_CASE("maximal intervals of a ring are its four straight runs") {
  std::vector<Interval> m = maximal_inner_intervals(kAnnulus);
  REQUIRE(m.size() == 4);
  for (const Interval& iv : m) CHECK(iv.cell_count() == 3);
}

TEST_CASE("ring around one cell has exactly one hole") {
  std::vector<Polyomino> hs = holes(kAnnulus);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].rank() == 1);
  CHECK(!is_simple(kAnnulus));
  CHECK(is_simple(shape("###\n#..\n")));
}

TEST_CASE("hole counts agree with the Euler characteristic") {
  for (const Polyomino& p : oracle::all_fixed(6))
    CHECK(static_cast<int>(holes(p).size()) == oracle::euler_hole_count(p));
  for (const char* name : {"fig8a", "fig8b", "fig8c", "fig9", "fig10"}) {
    Polyomino p = oracle::fixture(name);
    CHECK(static_cast<int>(holes(p).size()) == oracle::euler_hole_count(p));
  }
}

TEST_CASE("every hole is itself a simple polyomino") {
  for (const char* name : {"fig8b", "fig8c", "fig9", "fig10"})
    for (const Polyomino& h : holes(oracle::fixture(name))) CHECK(is_simple(h));
}

TEST_CASE("thinness") {
  CHECK(is_thin(kAnnulus));
  CHECK(!is_thin(shape("##\n##\n")));
  for (const Polyomino& p : oracle::all_fixed(6)) CHECK(is_thin(p) == oracle::naive_is_thin(p));
}

TEST_CASE("thin shapes put each cell in at most two long maximal intervals") {
  for (const Polyomino& p : oracle::all_fixed(6)) {
    if (!is_thin(p)) continue;
    std::map<Cell, int> count;
    for (const Interval& iv : maximal_inner_intervals(p)) {
      if (iv.cell_count() < 2) continue;
      for (const Cell& c : iv.cells()) ++count[c];
    }
    for (const Cell& c : p.cells()) {
      int k = count.count(c) ? count[c] : 0;
      CHECK(k <= 2);
      if (p.rank() >= 2) CHECK(k >= 1);
    }
  }
}

TEST_CASE("pattern matching by translation") {
  Polyomino s1 = oracle::fixture("fig7_i");
  CHECK(pattern_matches(s1, Pattern::SkewI) == std::vector<Vertex>{{0, 0}});
  CHECK(!contains_pattern(s1, Pattern::SkewII));
  CHECK(contains_pattern(oracle::fixture("figQ"), Pattern::Q));
  CHECK(!contains_pattern(kAnnulus, Pattern::Q));
  CHECK(!contains_pattern(kAnnulus, Pattern::DiagNE));
  CHECK(!contains_pattern(kAnnulus, Pattern::SkewI));

  Polyomino a = oracle::fixture("fig8a");
  auto has = [](const std::vector<Vertex>& v, Vertex t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  };
  CHECK(has(pattern_matches(a, Pattern::SkewI), {0, 2}));
  CHECK(has(pattern_matches(a, Pattern::SkewII), {0, 1}));
  CHECK(has(pattern_matches(a, Pattern::SkewIII), {2, 2}));
  CHECK(has(pattern_matches(a, Pattern::SkewIV), {3, 1}));
  CHECK(!contains_pattern(a, Pattern::DiagNE));
  CHECK(!contains_pattern(a, Pattern::DiagNW));
  CHECK(pattern_by_name("skew-iii") == Pattern::SkewIII);
  CHECK_THROWS_AS(pattern_by_name("nope"), Error);
}

TEST_CASE("diagonal patterns require the complementary cells absent") {
  // In a full 2x2 block the diagonal pair is there but nothing is missing.
  Polyomino q = oracle::fixture("figQ");
  CHECK(!contains_pattern(q, Pattern::DiagNE));
  CHECK(!contains_pattern(q, Pattern::DiagNW));
  Polyomino u = shape(".##\n#.#\n###\n");  // touching corner, complement empty
  CHECK(pattern_matches(u, Pattern::DiagNE) == std::vector<Vertex>{{0, 1}});
  Polyomino s = shape(".#\n##\n#.\n");  // staircase: complements are filled
  CHECK(!contains_pattern(s, Pattern::DiagNE));
  CHECK(!contains_pattern(s, Pattern::DiagNW));
}

TEST_CASE("closed thin chains") {
  CHECK(is_thin_cycle(kAnnulus));
  CHECK(is_thin_cycle(oracle::fixture("fig8a")));
  CHECK(is_thin_cycle(oracle::fixture("fig8b")));
  CHECK(is_thin_cycle(oracle::fixture("fig8c")));
  CHECK(!is_thin_cycle(shape("###\n")));
  CHECK(!is_thin_cycle(shape("##\n##\n")));
  CHECK(!is_thin_cycle(shape("###\n#..\n")));
  CHECK(!is_thin_cycle(oracle::fixture("fig9")));  // crossings have degree > 2

  std::vector<Cell> walk = thin_cycle_order(kAnnulus);
  CHECK(walk.size() == 8);
  std::set<Cell> seen(walk.begin(), walk.end());
  CHECK(seen.size() == 8);
  CHECK_THROWS_AS(thin_cycle_order(shape("###\n")), Error);
}

TEST_CASE("the literal linear reading rejects every closed chain") {
  // The wrap-around pair always shares an edge, so the raw-index reading
  // refuses even the plain ring; this is why the cyclic reading is the
  // default.
  CHECK(!is_thin_cycle(kAnnulus, CycleReading::Linear));
  CHECK(!is_thin_cycle(oracle::fixture("fig8c"), CycleReading::Linear));
}

TEST_CASE("fixture checksums: rank and hole counts") {
  struct Row {
    const char* name;
    int rank;
    int holes;
  };
  const Row rows[] = {
      {"figQ", 4, 0},    {"fig7_i", 4, 0},  {"fig7_ii", 4, 0}, {"fig7_iii", 4, 0},
      {"fig7_iv", 4, 0}, {"fig8a", 14, 1},  {"fig8b", 16, 1},  {"fig8c", 24, 1},
      {"fig9", 57, 10},  {"fig10", 50, 3},
  };
  for (const Row& r : rows) {
    Polyomino p = oracle::fixture(r.name);
    CHECK_MESSAGE(p.rank() == r.rank, r.name);
    CHECK_MESSAGE(static_cast<int>(holes(p).size()) == r.holes, r.name);
  }
  CHECK(holes(oracle::fixture("fig8b"))[0].rank() == 5);
  CHECK(holes(oracle::fixture("fig8c"))[0].rank() == 9);
}

TEST_CASE("fixture files agree with the built-in gallery") {
  for (const auto& [name, text] : families::gallery_ascii())
    CHECK_MESSAGE(oracle::fixture(name) == parse_ascii(text), name);
}

TEST_CASE("ascii round trip") {
  for (const Polyomino& p : oracle::all_fixed(4)) CHECK(parse_ascii(to_ascii(p)) == p);
  CHECK_THROWS_AS(parse_ascii("##\n\n##\n"), Error);
  CHECK_THROWS_AS(parse_ascii("#x\n"), Error);
  CHECK_THROWS_AS(parse_ascii("  \n"), Error);
  CHECK_THROWS_AS(parse_ascii("#.#\n"), Error);
  CHECK(parse_ascii("\n\n##\n\n").rank() == 2);  // surrounding blanks are fine
  CHECK(parse_ascii("#.\n##\n").rank() == 3);    // ragged right edge
}

TEST_CASE("json round trip keeps cells and name") {
  Polyomino p = parse_ascii("##\n#.\n", "elbow");
  Polyomino q = parse_json(to_json(p));
  CHECK(q == p);
  CHECK(q.name() == "elbow");
  CHECK(parse_any(to_json(p)) == p);
  CHECK(parse_any("##\n") == shape("##\n"));
  CHECK_THROWS_AS(parse_json("{\"cells\": [[0]]}"), Error);
  CHECK_THROWS_AS(parse_json("not json"), Error);
}

TEST_CASE("interval helpers") {
  Interval iv{{1, 2}, {3, 5}};
  CHECK(iv.proper());
  CHECK(iv.upper_left() == Vertex{1, 5});
  CHECK(iv.lower_right() == Vertex{3, 2});
  CHECK(iv.cell_count() == 6);
  CHECK(iv.cells().size() == 6);
  CHECK(Interval{{0, 0}, {4, 6}}.contains(iv));
  CHECK(!iv.contains(Interval{{0, 0}, {4, 6}}));
}
