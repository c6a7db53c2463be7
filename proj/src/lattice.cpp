#include "polygb/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "polygb/gbasis.hpp"

namespace polygb::lattice {

std::vector<std::vector<long long>> cell_vectors(const Polyomino& p) {
  int w = p.width(), h = p.height();
  int dim = (w + 1) * (h + 1);
  auto idx = [&](int x, int y) { return y * (w + 1) + x; };
  std::vector<std::vector<long long>> out;
  out.reserve(p.cells().size());
  for (const Cell& c : p.cells()) {
    std::vector<long long> v(static_cast<size_t>(dim), 0);
    v[static_cast<size_t>(idx(c.x, c.y))] = 1;
    v[static_cast<size_t>(idx(c.x + 1, c.y + 1))] = 1;
    v[static_cast<size_t>(idx(c.x + 1, c.y))] = -1;
    v[static_cast<size_t>(idx(c.x, c.y + 1))] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

LatticeBasis LatticeBasis::from_polyomino(const Polyomino& p) {
  LatticeBasis b;
  b.width_ = p.width();
  b.height_ = p.height();
  std::vector<std::vector<long long>> rows = cell_vectors(p);
  size_t dim = static_cast<size_t>(b.ambient_dim());

  // Row-style Hermite normal form by integer elimination.
  size_t pivot_row = 0;
  for (size_t col = 0; col < dim && pivot_row < rows.size(); ++col) {
    // Clear the column below pivot_row with gcd steps.
    for (;;) {
      size_t best = rows.size();
      for (size_t r = pivot_row; r < rows.size(); ++r)
        if (rows[r][col] != 0 &&
            (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;  // column empty below
      std::swap(rows[pivot_row], rows[best]);
      bool cleared = true;
      for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        long long q = rows[r][col] / rows[pivot_row][col];
        for (size_t k = col; k < dim; ++k) rows[r][k] -= q * rows[pivot_row][k];
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0)
      for (size_t k = col; k < dim; ++k) rows[pivot_row][k] = -rows[pivot_row][k];
    // Normalize entries above the pivot into [0, pivot).
    for (size_t r = 0; r < pivot_row; ++r) {
      long long q = rows[r][col] / rows[pivot_row][col];
      if (rows[r][col] % rows[pivot_row][col] < 0) --q;
      if (q != 0)
        for (size_t k = col; k < dim; ++k) rows[r][k] -= q * rows[pivot_row][k];
    }
    b.pivot_col_.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  rows.resize(pivot_row);
  b.rows_ = std::move(rows);
  return b;
}

int LatticeBasis::ambient_index(Vertex v) const {
  if (v.x < 0 || v.y < 0 || v.x > width_ || v.y > height_)
    fail(Errc::DimensionMismatch, "vertex outside the ambient box");
  return v.y * (width_ + 1) + v.x;
}

std::vector<long long> LatticeBasis::reduce_mod(std::vector<long long> w) const {
  if (static_cast<int>(w.size()) != ambient_dim())
    fail(Errc::DimensionMismatch, "vector length does not match the ambient box");
  for (size_t r = 0; r < rows_.size(); ++r) {
    size_t col = static_cast<size_t>(pivot_col_[r]);
    long long piv = rows_[r][col];
    long long q = w[col] / piv;
    if (w[col] % piv < 0) --q;
    if (q != 0)
      for (size_t k = col; k < w.size(); ++k) w[k] -= q * rows_[r][k];
  }
  return w;
}

bool LatticeBasis::contains(const std::vector<long long>& w) const {
  if (static_cast<int>(w.size()) != ambient_dim())
    fail(Errc::DimensionMismatch, "vector length does not match the ambient box");
  std::vector<long long> rem = w;
  for (size_t r = 0; r < rows_.size(); ++r) {
    size_t col = static_cast<size_t>(pivot_col_[r]);
    if (rem[col] % rows_[r][col] != 0) return false;
    long long q = rem[col] / rows_[r][col];
    if (q != 0)
      for (size_t k = col; k < rem.size(); ++k) rem[k] -= q * rows_[r][k];
  }
  return std::all_of(rem.begin(), rem.end(), [](long long v) { return v == 0; });
}

std::vector<long long> ambient_difference(const LatticeBasis& basis, const VarTable& vars,
                                          const gbasis::Binomial& f) {
  std::vector<long long> w(static_cast<size_t>(basis.ambient_dim()), 0);
  for (int id = 0; id < vars.size(); ++id) {
    long long d = f.plus.e[static_cast<size_t>(id)] - f.minus.e[static_cast<size_t>(id)];
    if (d != 0) w[static_cast<size_t>(basis.ambient_index(vars.vertex(id)))] += d;
  }
  return w;
}

bool binomial_in_lattice_ideal(const LatticeBasis& basis, const VarTable& vars,
                               const gbasis::Binomial& f) {
  return basis.contains(ambient_difference(basis, vars, f));
}

std::optional<Witness> find_witness(const Polyomino& p, int max_degree,
                                    uint64_t pair_budget) {
  LatticeBasis lb = LatticeBasis::from_polyomino(p);
  VarTable vars(p);
  MonomialOrder base(vars, 1);
  gbasis::GroebnerBasis ip = gbasis::buchberger(gbasis::inner_2_minors(p, vars), base,
                                                pair_budget);
  int n = vars.size();

  // Enumerate monomials of each total degree and bucket them by the coset
  // of their ambient exponent vector; two monomials in one bucket differ by
  // a lattice element, so their difference is a candidate witness.
  for (int d = 2; d <= max_degree; ++d) {
    std::map<std::vector<long long>, std::vector<Monomial>> buckets;
    Monomial m = Monomial::one(n);
    std::vector<Monomial> all;  // exponent vectors summing to d, lexicographic
    std::function<void(int, int)> gen = [&](int from, int left) {
      if (left == 0) {
        all.push_back(m);
        return;
      }
      for (int v = from; v < n; ++v) {
        m.mul_var(v);
        gen(v, left - 1);
        m.mul_var(v, -1);
      }
    };
    gen(0, d);
    for (const Monomial& mono : all) {
      std::vector<long long> w(static_cast<size_t>(lb.ambient_dim()), 0);
      for (int id = 0; id < n; ++id)
        if (mono.e[static_cast<size_t>(id)] != 0)
          w[static_cast<size_t>(lb.ambient_index(vars.vertex(id)))] =
              mono.e[static_cast<size_t>(id)];
      buckets[lb.reduce_mod(w)].push_back(mono);
    }
    for (const auto& [rep, monos] : buckets) {
      for (size_t i = 0; i < monos.size(); ++i)
        for (size_t j = i + 1; j < monos.size(); ++j) {
          gbasis::Binomial f{monos[j], monos[i]};  // enumeration order: j later
          if (f.plus == f.minus) continue;
          if (!ip.contains(f)) return Witness{gbasis::oriented(f, base), d};
        }
    }
  }
  return std::nullopt;
}

}  // namespace polygb::lattice
