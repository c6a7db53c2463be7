#include "polygb/conditions.hpp"

#include <algorithm>

#include "json.hpp"
#include "polygb/orders.hpp"

namespace polygb::conditions {

namespace {

// Inner intervals indexed by the corners the pair scans join on.
struct IntervalIndex {
  std::vector<Interval> all;
  std::map<Vertex, std::vector<int>> by_ll, by_ul;

  explicit IntervalIndex(const Polyomino& p) : all(inner_intervals(p)) {
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
      by_ll[all[static_cast<size_t>(i)].lo].push_back(i);
      by_ul[all[static_cast<size_t>(i)].upper_left()].push_back(i);
    }
  }
};

bool prop21_odd(const Polyomino& p, const IntervalIndex& ix) {
  // Pairs [a,b], [b,e] sharing b diagonally. One of [a, (b.x, e.y)] and
  // [a, (e.x, b.y)] must be inner.
  for (const Interval& iv : ix.all) {
    Vertex a = iv.lo, b = iv.hi;
    auto it = ix.by_ll.find(b);
    if (it == ix.by_ll.end()) continue;
    for (int j : it->second) {
      Vertex e = ix.all[static_cast<size_t>(j)].hi;
      if (!p.is_inner(a, {b.x, e.y}) && !p.is_inner(a, {e.x, b.y})) return false;
    }
  }
  return true;
}

bool prop21_even(const Polyomino& p, const IntervalIndex& ix) {
  // Pairs [a,b], [e,f] with the lower-right corner of the first equal to
  // the upper-left corner of the second. One of the intervals with
  // anti-diagonal corners {a, e} and {b, f} must be inner.
  for (const Interval& iv : ix.all) {
    Vertex a = iv.lo, b = iv.hi;
    Vertex d = iv.lower_right();
    auto it = ix.by_ul.find(d);
    if (it == ix.by_ul.end()) continue;
    for (int j : it->second) {
      const Interval& jv = ix.all[static_cast<size_t>(j)];
      Vertex e = jv.lo, f = jv.hi;
      if (!p.is_inner({a.x, e.y}, d) && !p.is_inner(d, {f.x, b.y})) return false;
    }
  }
  return true;
}

// Vertices of p satisfying the k = 1 predicate, both corner shapes.
std::set<Vertex> pi1_vertices(const Polyomino& p) {
  IntervalIndex ix(p);
  std::set<Vertex> out;
  // Shape I: I = [a,b], J = [b,q]; v the upper-left corner of I and s the
  // lower-right corner of J; [v,q] inner while [a,s] is not.
  for (const Interval& iv : ix.all) {
    Vertex a = iv.lo, b = iv.hi;
    Vertex v = iv.upper_left();
    auto it = ix.by_ll.find(b);
    if (it == ix.by_ll.end()) continue;
    for (int j : it->second) {
      Vertex q = ix.all[static_cast<size_t>(j)].hi;
      Vertex s{q.x, b.y};
      if (p.is_inner(v, q) && !p.is_inner(a, s)) out.insert(v);
    }
  }
  // Shape II: K = [a,b], L = [p,q]; v the lower-right corner of K and the
  // upper-left corner of L; the interval with anti-diagonal corners {b, q}
  // inner while the one with anti-diagonal corners {a, p} is not.
  for (const Interval& kv : ix.all) {
    Vertex a = kv.lo, b = kv.hi;
    Vertex v = kv.lower_right();
    auto it = ix.by_ul.find(v);
    if (it == ix.by_ul.end()) continue;
    for (int j : it->second) {
      const Interval& lv = ix.all[static_cast<size_t>(j)];
      Vertex pp = lv.lo, q = lv.hi;
      if (p.is_inner(v, {q.x, b.y}) && !p.is_inner({a.x, pp.y}, v)) out.insert(v);
    }
  }
  return out;
}

struct Transported {
  Polyomino poly;
  int dx, dy;  // canonicalization shift applied after the isometry
};

// Image of p under the inverse of the symmetry for order k, with the shift
// needed to map vertices of p into the image.
Transported transport(const Polyomino& p, int k) {
  Isometry tau = symmetry_for(k).inverse();
  std::vector<Cell> cells;
  cells.reserve(p.cells().size());
  int minx = 0, miny = 0;
  bool first = true;
  for (const Cell& c : p.cells()) {
    Cell m = tau.apply_cell(c);
    if (first || m.x < minx) minx = m.x;
    if (first || m.y < miny) miny = m.y;
    first = false;
    cells.push_back(m);
  }
  return {Polyomino::validate(std::move(cells), p.name()), -minx, -miny};
}

std::set<Vertex> pi_k_vertices(const Polyomino& p, int k, const Transported& tp) {
  Isometry tau = symmetry_for(k).inverse();
  std::set<Vertex> image = pi1_vertices(tp.poly);
  std::set<Vertex> out;
  for (const Vertex& v : p.vertices()) {
    Vertex w = tau.apply(v);
    if (image.count({w.x + tp.dx, w.y + tp.dy})) out.insert(v);
  }
  return out;
}

}  // namespace

bool prop21(const Polyomino& p, bool odd_class) {
  IntervalIndex ix(p);
  return odd_class ? prop21_odd(p, ix) : prop21_even(p, ix);
}

bool pi(const Polyomino& p, Vertex v, int k) {
  order_is_odd(k);  // range check
  if (!p.has_vertex(v))
    fail(Errc::VertexNotInP, "vertex is not a vertex of the polyomino");
  Transported tp = transport(p, k);
  Isometry tau = symmetry_for(k).inverse();
  Vertex w = tau.apply(v);
  return pi1_vertices(tp.poly).count({w.x + tp.dx, w.y + tp.dy}) > 0;
}

std::map<Vertex, std::set<int>> pi_profile(const Polyomino& p) {
  std::map<Vertex, std::set<int>> out;
  for (const Vertex& v : p.vertices()) out[v];
  for (int k = 1; k <= kNumOrders; ++k) {
    Transported tp = transport(p, k);
    for (const Vertex& v : pi_k_vertices(p, k, tp)) out[v].insert(k);
  }
  return out;
}

ConditionReport primality_sufficient(const Polyomino& p) {
  ConditionReport r;
  IntervalIndex ix(p);
  r.prop21_odd = prop21_odd(p, ix);
  r.prop21_even = prop21_even(p, ix);
  for (int i = 1; i <= kNumOrders; ++i)
    r.quadratic_prediction[static_cast<size_t>(i - 1)] =
        order_is_odd(i) ? r.prop21_odd : r.prop21_even;
  r.profile = pi_profile(p);

  for (char parity : {'O', 'E'}) {
    bool odd = parity == 'O';
    if (odd ? !r.prop21_odd : !r.prop21_even) continue;
    Certificate cert;
    cert.parity = parity;
    cert.sufficient = true;
    for (const auto& [v, ks] : r.profile) {
      int pick = 0;
      for (int k = odd ? 1 : 2; k <= kNumOrders; k += 2)
        if (!ks.count(k)) {
          pick = k;
          break;
        }
      if (pick == 0) {
        cert.sufficient = false;
        break;
      }
      cert.chosen[v] = pick;
    }
    if (cert.sufficient) {
      r.certificate = cert;
      return r;
    }
  }
  return r;
}

std::vector<Obstruction> thin_obstructions(const Polyomino& p, bool odd_class) {
  if (!is_thin(p)) fail(Errc::NotThin, "pattern criterion applies to thin polyominoes");
  std::vector<Obstruction> out;
  auto add = [&](Pattern pat) {
    for (const Vertex& t : pattern_matches(p, pat)) out.push_back({pat, t});
  };
  if (odd_class) {
    add(Pattern::DiagNE);
    add(Pattern::SkewI);
    add(Pattern::SkewII);
  } else {
    add(Pattern::DiagNW);
    add(Pattern::SkewIII);
    add(Pattern::SkewIV);
  }
  return out;
}

std::string report_to_json(const ConditionReport& r) {
  nlohmann::ordered_json j;
  j["prop21"] = {{"odd", r.prop21_odd}, {"even", r.prop21_even}};
  auto& pred = j["quadratic_prediction"];
  for (int i = 1; i <= kNumOrders; ++i)
    pred[std::to_string(i)] = r.quadratic_prediction[static_cast<size_t>(i - 1)];
  auto& prof = j["pi_profile"];
  prof = nlohmann::ordered_json::array();
  for (const auto& [v, ks] : r.profile) {
    nlohmann::ordered_json entry;
    entry["vertex"] = {v.x, v.y};
    entry["satisfies"] = ks;
    prof.push_back(entry);
  }
  auto& cert = j["certificate"];
  cert["sufficient"] = r.certificate.sufficient;
  if (r.certificate.sufficient) {
    cert["parity"] = std::string(1, r.certificate.parity);
    auto& chosen = cert["chosen"];
    chosen = nlohmann::ordered_json::array();
    for (const auto& [v, k] : r.certificate.chosen)
      chosen.push_back({{"vertex", {v.x, v.y}}, {"order", k}});
  }
  return j.dump(2);
}

}  // namespace polygb::conditions
