#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "polygb/geometry.hpp"

namespace polygb {

inline constexpr int kNumOrders = 8;

// Orders 1,3,5,7 form the odd class, 2,4,6,8 the even class. Under an odd
// order the diagonal product of an inner 2-minor leads; under an even order
// the anti-diagonal product leads.
bool order_is_odd(int index);  // BadIndex outside 1..8

// The eight total orders on lattice points. Primary/secondary keys:
//   1: x asc,  tie y desc     2: x desc, tie y desc
//   3: x desc, tie y asc      4: x asc,  tie y asc
//   5: y asc,  tie x desc     6: y asc,  tie x asc
//   7: y desc, tie x asc      8: y desc, tie x desc
std::strong_ordering vertex_compare(int index, Vertex a, Vertex b);

// Plane isometry (x,y) -> (a*x + b*y, c*x + d*y), restricted to the eight
// symmetries of the square grid.
struct Isometry {
  int a = 1, b = 0, c = 0, d = 1;

  Vertex apply(Vertex v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  // Image of the unit cell at c as a cell (lower-left corner of the image).
  Cell apply_cell(Cell cl) const;
  Isometry inverse() const;
  Polyomino apply(const Polyomino& p) const;  // canonicalized image
};

// The isometry s_i with: a < b under order 1 iff s_i(a) < s_i(b) under
// order i. It is unique among the eight grid symmetries.
Isometry symmetry_for(int index);

// Interned variable set of a polyomino: one variable per vertex. Ids are
// positions in the ascending order-1 listing, so order 1 is the identity
// permutation.
class VarTable {
 public:
  VarTable() = default;  // empty table, placeholder until assigned
  explicit VarTable(const Polyomino& p);

  int size() const { return static_cast<int>(verts_.size()); }
  int id(Vertex v) const;  // VertexNotInP
  Vertex vertex(int id) const { return verts_[static_cast<size_t>(id)]; }
  std::string var_name(int id) const;  // x_{x}_{y}

 private:
  std::vector<Vertex> verts_;  // ascending under order 1
};

// Monomial as a dense exponent vector over a VarTable.
struct Monomial {
  std::vector<int32_t> e;
  int32_t deg = 0;

  static Monomial one(int nvars) { return {std::vector<int32_t>(nvars, 0), 0}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  void mul_var(int id, int k = 1) {
    e[static_cast<size_t>(id)] += k;
    deg += k;
  }
  bool divides(const Monomial& m) const;
  bool divisible_by_var(int id) const { return e[static_cast<size_t>(id)] > 0; }
  Monomial div_var(int id) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // a * b / c, assuming c divides a * b entrywise.
  static Monomial mul_div(const Monomial& a, const Monomial& b, const Monomial& c);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic order induced by one of the eight vertex
// orders, optionally rotated so a chosen vertex becomes the smallest
// variable (the rest keep their relative arrangement cyclically).
class MonomialOrder {
 public:
  MonomialOrder() = default;  // placeholder until assigned
  MonomialOrder(VarTable vars, int index);   // BadIndex
  MonomialOrder rotated_at(Vertex v) const;  // VertexNotInP

  int index() const { return index_; }
  bool odd() const { return order_is_odd(index_); }
  std::optional<Vertex> rotation() const { return rotation_; }
  const VarTable& vars() const { return vars_; }
  // Variables ascending; asc()[0] is the smallest.
  const std::vector<int>& asc() const { return asc_; }
  std::vector<Vertex> vertex_list() const;
  Vertex smallest_vertex() const { return vars_.vertex(asc_[0]); }

  // Grevlex: higher degree wins; on equal degree, walking variables from the
  // smallest upward, the first disagreement goes to the monomial with the
  // smaller exponent there.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

 private:
  VarTable vars_;
  int index_ = 0;
  std::optional<Vertex> rotation_;
  std::vector<int> asc_;
};

}  // namespace polygb
