#include "polygb/gbasis.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "polygb/lattice.hpp"

namespace polygb::gbasis {

namespace {

std::atomic<uint64_t> g_purity{0};

bool structurally_ok(const Binomial& f) {
  if (f.plus.e.size() != f.minus.e.size()) return false;
  int32_t dp = 0, dm = 0;
  for (int32_t v : f.plus.e) {
    if (v < 0) return false;
    dp += v;
  }
  for (int32_t v : f.minus.e) {
    if (v < 0) return false;
    dm += v;
  }
  if (dp != f.plus.deg || dm != f.minus.deg) return false;
  return f.plus != f.minus;
}

Binomial checked(Binomial f) {
  if (!structurally_ok(f)) g_purity.fetch_add(1, std::memory_order_relaxed);
  return f;
}

// Drop elements whose lead is divisible by another kept lead, then reduce
// every trailing monomial to normal form against the kept leads. For a
// basis this yields the unique reduced basis of the ideal.
std::vector<Binomial> minimalize_and_interreduce(std::vector<Binomial> g,
                                                 const MonomialOrder& o) {
  std::sort(g.begin(), g.end(), [&](const Binomial& a, const Binomial& b) {
    auto c = o.compare(a.plus, b.plus);
    if (c != 0) return c == std::strong_ordering::less;
    return o.compare(a.minus, b.minus) == std::strong_ordering::less;
  });
  std::vector<Binomial> kept;
  for (Binomial& f : g) {
    bool redundant = false;
    for (const Binomial& k : kept)
      if (k.plus.divides(f.plus)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(f));
  }
  for (Binomial& f : kept) {
    bool again = true;
    while (again) {
      again = false;
      for (const Binomial& k : kept) {
        // k.plus never divides its own trailing side, so k == &f is inert.
        if (k.plus.divides(f.minus)) {
          f.minus = Monomial::mul_div(k.minus, f.minus, k.plus);
          again = true;
          break;
        }
      }
    }
    f = checked(std::move(f));
  }
  return kept;
}

}  // namespace

uint64_t purity_violations() { return g_purity.load(); }
void reset_purity_violations() { g_purity.store(0); }

std::vector<Binomial> inner_2_minors(const Polyomino& p, const VarTable& vars) {
  std::vector<Binomial> out;
  int n = vars.size();
  for (const Interval& iv : inner_intervals(p)) {
    Monomial diag = Monomial::one(n);
    diag.mul_var(vars.id(iv.lo));
    diag.mul_var(vars.id(iv.hi));
    Monomial anti = Monomial::one(n);
    anti.mul_var(vars.id(iv.upper_left()));
    anti.mul_var(vars.id(iv.lower_right()));
    out.push_back(checked({std::move(diag), std::move(anti)}));
  }
  return out;
}

Binomial oriented(Binomial f, const MonomialOrder& o) {
  if (o.compare(f.plus, f.minus) == std::strong_ordering::less)
    std::swap(f.plus, f.minus);
  return checked(std::move(f));
}

std::optional<Binomial> spoly(const Binomial& f, const Binomial& g, const MonomialOrder& o) {
  Binomial fo = oriented(f, o);
  Binomial go = oriented(g, o);
  Monomial l = Monomial::lcm(fo.plus, go.plus);
  Monomial a = Monomial::mul_div(fo.minus, l, fo.plus);
  Monomial b = Monomial::mul_div(go.minus, l, go.plus);
  if (a == b) return std::nullopt;
  return oriented({std::move(a), std::move(b)}, o);
}

std::optional<Binomial> normal_form(Binomial f, const std::vector<Binomial>& basis,
                                    const MonomialOrder& o) {
  f = oriented(std::move(f), o);
  for (;;) {
    const Binomial* red = nullptr;
    for (const Binomial& g : basis)
      if (g.plus.divides(f.plus)) {
        red = &g;
        break;
      }
    if (!red) break;
    f.plus = Monomial::mul_div(red->minus, f.plus, red->plus);
    if (f.plus == f.minus) return std::nullopt;
    f = oriented(std::move(f), o);
  }
  // Leading side is irreducible now; finish the trailing side. These steps
  // strictly shrink the trailing monomial, so the sides cannot collide.
  for (;;) {
    const Binomial* red = nullptr;
    for (const Binomial& g : basis)
      if (g.plus.divides(f.minus)) {
        red = &g;
        break;
      }
    if (!red) break;
    f.minus = Monomial::mul_div(red->minus, f.minus, red->plus);
  }
  return checked(std::move(f));
}

bool GroebnerBasis::quadratic() const {
  return std::all_of(elems.begin(), elems.end(),
                     [](const Binomial& f) { return f.quadratic(); });
}

GroebnerBasis buchberger(std::vector<Binomial> gens, const MonomialOrder& o,
                         uint64_t pair_budget) {
  std::vector<Binomial> g;
  g.reserve(gens.size());
  for (Binomial& f : gens) {
    if (f.plus == f.minus) continue;  // zero generator carries no information
    Binomial of = oriented(std::move(f), o);
    if (std::find(g.begin(), g.end(), of) == g.end()) g.push_back(std::move(of));
  }

  struct Pair {
    Monomial l;
    int i, j;
  };
  auto heap_after = [&](const Pair& a, const Pair& b) {
    auto c = o.compare(a.l, b.l);
    if (c != 0) return c == std::strong_ordering::greater;  // smallest lcm first
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(heap_after)> queue(heap_after);
  std::set<std::pair<int, int>> done;
  auto push_pairs = [&](int t) {
    for (int i = 0; i < t; ++i)
      queue.push({Monomial::lcm(g[static_cast<size_t>(i)].plus,
                                g[static_cast<size_t>(t)].plus),
                  i, t});
  };
  for (int t = 1; t < static_cast<int>(g.size()); ++t) push_pairs(t);

  uint64_t processed = 0;
  while (!queue.empty()) {
    Pair pr = queue.top();
    queue.pop();
    if (++processed > pair_budget)
      fail(Errc::Timeout, "pair budget of " + std::to_string(pair_budget) + " exhausted");
    const Binomial& fi = g[static_cast<size_t>(pr.i)];
    const Binomial& fj = g[static_cast<size_t>(pr.j)];
    done.insert({pr.i, pr.j});
    if (Monomial::coprime(fi.plus, fj.plus)) continue;  // S-pair reduces to zero
    bool chained = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[static_cast<size_t>(k)].plus.divides(pr.l)) continue;
      auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (done.count(key(pr.i, k)) && done.count(key(k, pr.j))) chained = true;
    }
    if (chained) continue;
    std::optional<Binomial> s = spoly(fi, fj, o);
    if (!s) continue;
    std::optional<Binomial> h = normal_form(std::move(*s), g, o);
    if (!h) continue;
    g.push_back(std::move(*h));
    push_pairs(static_cast<int>(g.size()) - 1);
  }

  GroebnerBasis out{o, minimalize_and_interreduce(std::move(g), o), processed};
  return out;
}

GroebnerBasis reduced_basis(const Polyomino& p, const MonomialOrder& o,
                            uint64_t pair_budget) {
  return buchberger(inner_2_minors(p, o.vars()), o, pair_budget);
}

bool is_quadratic_gb(const Polyomino& p, const MonomialOrder& o, uint64_t pair_budget) {
  GroebnerBasis b = reduced_basis(p, o, pair_budget);
  std::vector<Binomial> minors;
  for (Binomial& f : inner_2_minors(p, o.vars())) minors.push_back(oriented(std::move(f), o));
  std::sort(minors.begin(), minors.end(), [&](const Binomial& a, const Binomial& bn) {
    auto c = o.compare(a.plus, bn.plus);
    if (c != 0) return c == std::strong_ordering::less;
    return o.compare(a.minus, bn.minus) == std::strong_ordering::less;
  });
  return b.elems == minors;
}

GroebnerBasis colon_by_variable(const GroebnerBasis& b, Vertex v) {
  int id = b.order.vars().id(v);
  if (b.order.asc().empty() || b.order.asc()[0] != id)
    fail(Errc::OrderPreconditionViolated,
         "colon requires the divided variable to be smallest in the order");
  std::vector<Binomial> out;
  out.reserve(b.elems.size());
  for (const Binomial& f : b.elems) {
    if (f.plus.divisible_by_var(id) && f.minus.divisible_by_var(id))
      out.push_back(checked({f.plus.div_var(id), f.minus.div_var(id)}));
    else
      out.push_back(f);
  }
  return {b.order, minimalize_and_interreduce(std::move(out), b.order), 0};
}

Saturation saturate_all(const Polyomino& p, uint64_t pair_budget) {
  VarTable vars(p);
  MonomialOrder base(vars, 1);
  Saturation sat;
  sat.ideal_gb = buchberger(inner_2_minors(p, vars), base, pair_budget);
  GroebnerBasis cur = sat.ideal_gb;
  bool changed = true;
  while (changed) {
    changed = false;
    ++sat.passes;
    for (int pos = 0; pos < vars.size(); ++pos) {
      Vertex v = vars.vertex(pos);
      MonomialOrder rot = base.rotated_at(v);
      GroebnerBasis bv = buchberger(cur.elems, rot, pair_budget);
      int id = vars.id(v);
      int divided = 0;
      for (const Binomial& f : bv.elems)
        if (f.plus.divisible_by_var(id) && f.minus.divisible_by_var(id)) ++divided;
      GroebnerBasis cv = colon_by_variable(bv, v);
      if (divided > 0) sat.steps.push_back({v, divided});
      if (!(cv.elems == bv.elems)) changed = true;
      cur = std::move(cv);
    }
  }
  sat.saturated_gb = buchberger(cur.elems, base, pair_budget);
  return sat;
}

PrimalityCertificate is_prime(const Polyomino& p, uint64_t pair_budget) {
  PrimalityCertificate cert;
  cert.saturation = saturate_all(p, pair_budget);
  const GroebnerBasis& ip = cert.saturation.ideal_gb;
  const GroebnerBasis& sat = cert.saturation.saturated_gb;
  if (ip.elems == sat.elems) {
    cert.prime = true;
    return cert;
  }
  for (const Binomial& f : sat.elems) {
    if (!ip.contains(f)) {
      cert.witness = f;
      break;
    }
  }
  // Saturation only ever grows the ideal, so a strict difference always
  // leaves some element outside; certify it against the lattice as well.
  if (cert.witness) {
    lattice::LatticeBasis lb = lattice::LatticeBasis::from_polyomino(p);
    cert.witness_in_lattice =
        lattice::binomial_in_lattice_ideal(lb, sat.order.vars(), *cert.witness);
  }
  return cert;
}

std::string monomial_to_string(const Monomial& m, const VarTable& vars) {
  std::vector<std::pair<Vertex, int32_t>> parts;
  for (int id = 0; id < vars.size(); ++id)
    if (m.e[static_cast<size_t>(id)] > 0)
      parts.emplace_back(vars.vertex(id), m.e[static_cast<size_t>(id)]);
  std::sort(parts.begin(), parts.end());
  if (parts.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, k] : parts) {
    if (!first) os << "*";
    first = false;
    os << "x_" << v.x << "_" << v.y;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::string to_string(const Binomial& f, const VarTable& vars) {
  return monomial_to_string(f.plus, vars) + " - " + monomial_to_string(f.minus, vars);
}

std::string basis_to_string(const GroebnerBasis& b) {
  std::ostringstream os;
  for (const Binomial& f : b.elems) os << to_string(f, b.order.vars()) << "\n";
  return os.str();
}

}  // namespace polygb::gbasis
