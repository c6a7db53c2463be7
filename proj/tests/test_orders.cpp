#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "polygb/io.hpp"
#include "polygb/orders.hpp"

using namespace polygb;

namespace {

Polyomino shape(const std::string& ascii) { return parse_ascii(ascii); }
const Polyomino kAnnulus = shape("###\n#.#\n###\n");

bool vless(int k, Vertex a, Vertex b) {
  return vertex_compare(k, a, b) == std::strong_ordering::less;
}

std::vector<Vertex> box(int lo, int hi) {
  std::vector<Vertex> out;
  for (int x = lo; x <= hi; ++x)
    for (int y = lo; y <= hi; ++y) out.push_back({x, y});
  return out;
}

// Does the law "a <1 b iff t(a) <k t(b)" hold for every pair in a box?
bool law_holds(int k, const Isometry& t) {
  for (Vertex a : box(-3, 3))
    for (Vertex b : box(-3, 3))
      if (vless(1, a, b) != vless(k, t.apply(a), t.apply(b))) return false;
  return true;
}

Monomial mono(const VarTable& vars, std::initializer_list<Vertex> factors) {
  Monomial m = Monomial::one(vars.size());
  for (Vertex v : factors) m.mul_var(vars.id(v));
  return m;
}

}  // namespace

TEST_CASE("odd and even order classes") {
  for (int k : {1, 3, 5, 7}) CHECK(order_is_odd(k));
  for (int k : {2, 4, 6, 8}) CHECK(!order_is_odd(k));
  CHECK_THROWS_AS(order_is_odd(0), Error);
  CHECK_THROWS_AS(order_is_odd(9), Error);
  CHECK_THROWS_AS(vertex_compare(9, {0, 0}, {1, 1}), Error);
}

TEST_CASE("vertex order chains on the unit square") {
  // Order 1 lists the four corners of a cell as UL < LL < UR < LR.
  Vertex a{0, 1}, b{0, 0}, c{1, 1}, d{1, 0};
  CHECK(vless(1, a, b));
  CHECK(vless(1, b, c));
  CHECK(vless(1, c, d));
  CHECK(!vless(1, d, a));
  // Order 5 ranks by y first and breaks ties by descending x.
  CHECK(vless(5, {1, 0}, {0, 0}));
  CHECK(vless(5, {1, 0}, {0, 1}));
}

TEST_CASE("vertex order chain on the L tromino under order 1") {
  Vertex r{0, 2}, c{0, 1}, a{0, 0}, q{1, 2}, e{1, 1}, s{1, 0}, b{2, 1}, d{2, 0};
  std::vector<Vertex> chain{r, c, a, q, e, s, b, d};
  for (size_t i = 0; i + 1 < chain.size(); ++i) CHECK(vless(1, chain[i], chain[i + 1]));
  VarTable vars(shape("#.\n##\n"));
  REQUIRE(vars.size() == 8);
  for (size_t i = 0; i < chain.size(); ++i) {
    CHECK(vars.id(chain[i]) == static_cast<int>(i));
    CHECK(vars.vertex(static_cast<int>(i)) == chain[i]);
  }
  CHECK(vars.var_name(0) == "x_0_2");
  CHECK(vars.var_name(7) == "x_2_0");
  CHECK_THROWS_AS(vars.id({5, 5}), Error);
}

TEST_CASE("each vertex order is total and antisymmetric") {
  for (int k = 1; k <= kNumOrders; ++k) {
    for (Vertex a : box(-2, 2)) {
      for (Vertex b : box(-2, 2)) {
        auto ab = vertex_compare(k, a, b);
        auto ba = vertex_compare(k, b, a);
        if (a == b) {
          CHECK(ab == std::strong_ordering::equal);
        } else {
          CHECK(ab != std::strong_ordering::equal);
          CHECK((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater));
        }
      }
    }
    // Sorting is enough for transitivity: adjacent pairs must increase.
    std::vector<Vertex> pts = box(-2, 2);
    std::sort(pts.begin(), pts.end(), [&](Vertex a, Vertex b) { return vless(k, a, b); });
    for (size_t i = 0; i + 1 < pts.size(); ++i) CHECK(vless(k, pts[i], pts[i + 1]));
  }
}

TEST_CASE("symmetry_for satisfies the transport law and is unique") {
  for (int k = 1; k <= kNumOrders; ++k) {
    Isometry t = symmetry_for(k);
    CHECK(law_holds(k, t));
    int satisfying = 0;
    for (int j = 1; j <= kNumOrders; ++j)
      if (law_holds(k, symmetry_for(j))) ++satisfying;
    CHECK(satisfying == 1);
  }
  // The two quarter turns land on orders 6 and 8.
  Isometry ccw{0, -1, 1, 0};
  CHECK(symmetry_for(6).a == ccw.a);
  CHECK(symmetry_for(6).b == ccw.b);
  CHECK(symmetry_for(8).b == 1);
  CHECK(symmetry_for(8).c == -1);
}

TEST_CASE("isometry inverses and cell images") {
  for (int k = 1; k <= kNumOrders; ++k) {
    Isometry t = symmetry_for(k);
    Isometry u = t.inverse();
    for (Vertex v : box(-3, 3)) {
      CHECK(u.apply(t.apply(v)) == v);
      CHECK(t.apply(u.apply(v)) == v);
    }
    for (Vertex c : box(-2, 2)) CHECK(u.apply_cell(t.apply_cell(c)) == c);
  }
  // Image of a polyomino is canonical and round trips.
  Polyomino l = shape("#.\n##\n");
  for (int k = 1; k <= kNumOrders; ++k) {
    Isometry t = symmetry_for(k);
    Polyomino img = t.apply(l);
    CHECK(img.rank() == l.rank());
    CHECK(t.inverse().apply(img).cells() == l.cells());
  }
  // A quarter turn of the L tromino is an L in another orientation.
  CHECK(symmetry_for(6).apply(l).cells() == shape(".#\n##\n").cells());
}

TEST_CASE("monomial arithmetic") {
  VarTable vars(Polyomino::validate({{0, 0}}));
  REQUIRE(vars.size() == 4);
  Monomial one = Monomial::one(4);
  CHECK(one.deg == 0);
  Monomial m = one;
  m.mul_var(1, 2);
  m.mul_var(3);
  CHECK(m.deg == 3);
  CHECK(m.e == std::vector<int32_t>{0, 2, 0, 1});
  CHECK(one.divides(m));
  CHECK(!m.divides(one));
  CHECK(m.divisible_by_var(1));
  CHECK(!m.divisible_by_var(0));
  Monomial d = m.div_var(1);
  CHECK(d.e == std::vector<int32_t>{0, 1, 0, 1});
  CHECK(d.deg == 2);
  Monomial p = m * d;
  CHECK(p.e == std::vector<int32_t>{0, 3, 0, 2});
  CHECK(p.deg == 5);
  CHECK(Monomial::mul_div(m, d, m) == d);
  Monomial l = lcm(m, d);
  CHECK(l == m);
  Monomial a = one, b = one;
  a.mul_var(0);
  b.mul_var(2, 3);
  CHECK(Monomial::coprime(a, b));
  CHECK(!Monomial::coprime(a, a));
  CHECK(lcm(a, b).deg == 4);
}

TEST_CASE("grevlex compares degree first, then smallest variable breaks ties") {
  VarTable vars(Polyomino::validate({{0, 0}}));
  MonomialOrder o(vars, 1);
  // Ascending variables: x_0_1 < x_0_0 < x_1_1 < x_1_0.
  CHECK(o.vertex_list() == std::vector<Vertex>{{0, 1}, {0, 0}, {1, 1}, {1, 0}});
  CHECK(o.smallest_vertex() == Vertex{0, 1});
  Monomial low = mono(vars, {{0, 1}, {0, 1}});               // smallest var squared
  Monomial cube = mono(vars, {{0, 1}, {0, 1}, {0, 1}});      // degree 3
  Monomial diag = mono(vars, {{0, 0}, {1, 1}});              // x_a x_b
  Monomial anti = mono(vars, {{0, 1}, {1, 0}});              // x_s x_t
  CHECK(o.less(low, cube));     // degree dominates everything
  CHECK(o.less(diag, cube));
  CHECK(o.less(anti, diag));    // tie at degree 2: anti uses the smallest var
  CHECK(o.less(low, anti));     // low has exponent 2 on the smallest var
  CHECK(o.compare(diag, diag) == std::strong_ordering::equal);
  // Multiplying both sides by a common monomial keeps the comparison.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 3), exp(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    Monomial m1 = Monomial::one(4), m2 = Monomial::one(4), t = Monomial::one(4);
    for (int i = 0; i < 4; ++i) {
      m1.mul_var(i, exp(rng));
      m2.mul_var(i, exp(rng));
      t.mul_var(i, exp(rng));
    }
    auto cmp = o.compare(m1, m2);
    CHECK(o.compare(m1 * t, m2 * t) == cmp);
  }
}

TEST_CASE("the lead of an inner 2-minor follows the order parity") {
  std::vector<Polyomino> shapes = {
      oracle::fixture("figQ"), oracle::fixture("fig7_i"), oracle::fixture("fig8a"),
      kAnnulus, shape("####\n"), shape("#.\n##\n")};
  for (const Polyomino& p : shapes) {
    VarTable vars(p);
    for (int k = 1; k <= kNumOrders; ++k) {
      MonomialOrder o(vars, k);
      for (const Interval& iv : inner_intervals(p)) {
        Monomial diag = mono(vars, {iv.lo, iv.hi});
        Monomial anti = mono(vars, {iv.upper_left(), iv.lower_right()});
        if (o.odd()) {
          CHECK(o.less(anti, diag));
        } else {
          CHECK(o.less(diag, anti));
        }
      }
    }
  }
}

TEST_CASE("rotating an order moves the chosen vertex to the bottom") {
  Polyomino l = shape("#.\n##\n");
  VarTable vars(l);
  MonomialOrder o(vars, 1);
  CHECK(!o.rotation().has_value());
  CHECK(o.asc() == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

  MonomialOrder r = o.rotated_at({1, 0});
  CHECK(r.rotation() == Vertex{1, 0});
  CHECK(r.smallest_vertex() == Vertex{1, 0});
  CHECK(r.asc() == std::vector<int>{5, 6, 7, 0, 1, 2, 3, 4});
  CHECK(r.index() == 1);

  // Rotating at the vertex that is already smallest changes nothing else.
  MonomialOrder same = o.rotated_at({0, 2});
  CHECK(same.asc() == o.asc());
  CHECK(same.rotation() == Vertex{0, 2});
  CHECK_THROWS_AS(o.rotated_at({9, 9}), Error);

  // Rotation flips ties that hinge on which variable counts as smallest.
  Monomial with_v = mono(vars, {{1, 0}, {2, 0}});
  Monomial without = mono(vars, {{0, 2}, {0, 1}});
  CHECK(r.less(with_v, without));
  CHECK(o.less(without, with_v));  // base order ranks them the other way
}

TEST_CASE("orders 2..8 are order 1 seen through their symmetry") {
  // The variable listing of order k on P matches the order 1 listing on the
  // transformed polyomino, pulled back through the isometry.
  for (int k = 1; k <= kNumOrders; ++k) {
    Polyomino p = oracle::fixture("fig7_ii");
    Isometry t = symmetry_for(k);
    MonomialOrder ok(VarTable(p), k);
    std::vector<Vertex> got = ok.vertex_list();
    std::vector<Vertex> mapped;
    for (Vertex v : got) mapped.push_back(t.inverse().apply(v));
    CHECK(std::is_sorted(mapped.begin(), mapped.end(),
                         [&](Vertex a, Vertex b) { return vless(1, a, b); }));
  }
}
