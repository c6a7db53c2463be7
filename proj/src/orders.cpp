#include "polygb/orders.hpp"

#include <algorithm>

namespace polygb {

bool order_is_odd(int index) {
  if (index < 1 || index > kNumOrders) fail(Errc::BadIndex, "order index must be 1..8");
  return index % 2 == 1;
}

std::strong_ordering vertex_compare(int index, Vertex a, Vertex b) {
  order_is_odd(index);  // range check
  auto asc = [](int u, int v) { return u <=> v; };
  auto desc = [](int u, int v) { return v <=> u; };
  std::strong_ordering primary = std::strong_ordering::equal;
  std::strong_ordering secondary = std::strong_ordering::equal;
  switch (index) {
    case 1: primary = asc(a.x, b.x); secondary = desc(a.y, b.y); break;
    case 2: primary = desc(a.x, b.x); secondary = desc(a.y, b.y); break;
    case 3: primary = desc(a.x, b.x); secondary = asc(a.y, b.y); break;
    case 4: primary = asc(a.x, b.x); secondary = asc(a.y, b.y); break;
    case 5: primary = asc(a.y, b.y); secondary = desc(a.x, b.x); break;
    case 6: primary = asc(a.y, b.y); secondary = asc(a.x, b.x); break;
    case 7: primary = desc(a.y, b.y); secondary = asc(a.x, b.x); break;
    case 8: primary = desc(a.y, b.y); secondary = desc(a.x, b.x); break;
  }
  return primary != 0 ? primary : secondary;
}

Cell Isometry::apply_cell(Cell cl) const {
  Vertex p = apply(cl);
  Vertex q = apply({cl.x + 1, cl.y + 1});
  return {std::min(p.x, q.x), std::min(p.y, q.y)};
}

Isometry Isometry::inverse() const {
  int det = a * d - b * c;  // always +-1 here
  return {d / det, -b / det, -c / det, a / det};
}

Polyomino Isometry::apply(const Polyomino& p) const {
  std::vector<Cell> cells;
  cells.reserve(p.cells().size());
  for (const Cell& c : p.cells()) cells.push_back(apply_cell(c));
  return Polyomino::validate(std::move(cells), p.name());
}

Isometry symmetry_for(int index) {
  order_is_odd(index);  // range check
  switch (index) {
    case 1: return {1, 0, 0, 1};    // identity
    case 2: return {-1, 0, 0, 1};   // mirror x
    case 3: return {-1, 0, 0, -1};  // half turn
    case 4: return {1, 0, 0, -1};   // mirror y
    case 5: return {0, 1, 1, 0};    // transpose
    case 6: return {0, -1, 1, 0};   // quarter turn ccw
    case 7: return {0, -1, -1, 0};  // anti-transpose
    case 8: return {0, 1, -1, 0};   // quarter turn cw
  }
  fail(Errc::BadIndex, "order index must be 1..8");
}

VarTable::VarTable(const Polyomino& p) : verts_(p.vertices()) {
  std::sort(verts_.begin(), verts_.end(), [](Vertex a, Vertex b) {
    return vertex_compare(1, a, b) == std::strong_ordering::less;
  });
}

int VarTable::id(Vertex v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v, [](Vertex a, Vertex b) {
    return vertex_compare(1, a, b) == std::strong_ordering::less;
  });
  if (it == verts_.end() || *it != v)
    fail(Errc::VertexNotInP, "vertex (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                                 ") is not a vertex of the polyomino");
  return static_cast<int>(it - verts_.begin());
}

std::string VarTable::var_name(int id) const {
  Vertex v = vertex(id);
  return "x_" + std::to_string(v.x) + "_" + std::to_string(v.y);
}

bool Monomial::divides(const Monomial& m) const {
  if (deg > m.deg) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::div_var(int id) const {
  Monomial out = *this;
  out.e[static_cast<size_t>(id)] -= 1;
  out.deg -= 1;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] += b.e[i];
  out.deg += b.deg;
  return out;
}

Monomial Monomial::mul_div(const Monomial& a, const Monomial& b, const Monomial& c) {
  Monomial out = a;
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] += b.e[i] - c.e[i];
  out.deg += b.deg - c.deg;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out.deg = 0;
  for (size_t i = 0; i < out.e.size(); ++i) {
    out.e[i] = std::max(a.e[i], b.e[i]);
    out.deg += out.e[i];
  }
  return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) { return Monomial::lcm(a, b); }

MonomialOrder::MonomialOrder(VarTable vars, int index)
    : vars_(std::move(vars)), index_(index) {
  order_is_odd(index);  // range check
  asc_.resize(static_cast<size_t>(vars_.size()));
  for (int i = 0; i < vars_.size(); ++i) asc_[static_cast<size_t>(i)] = i;
  std::sort(asc_.begin(), asc_.end(), [&](int u, int v) {
    return vertex_compare(index_, vars_.vertex(u), vars_.vertex(v)) ==
           std::strong_ordering::less;
  });
}

MonomialOrder MonomialOrder::rotated_at(Vertex v) const {
  int vid = vars_.id(v);
  MonomialOrder out = *this;
  out.rotation_ = v;
  auto it = std::find(out.asc_.begin(), out.asc_.end(), vid);
  std::rotate(out.asc_.begin(), it, out.asc_.end());
  return out;
}

std::vector<Vertex> MonomialOrder::vertex_list() const {
  std::vector<Vertex> out;
  out.reserve(asc_.size());
  for (int id : asc_) out.push_back(vars_.vertex(id));
  return out;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.deg != b.deg) return a.deg <=> b.deg;
  for (int id : asc_) {
    int32_t ea = a.e[static_cast<size_t>(id)];
    int32_t eb = b.e[static_cast<size_t>(id)];
    if (ea != eb) return eb <=> ea;  // smaller exponent low in the list wins
  }
  return std::strong_ordering::equal;
}

}  // namespace polygb
