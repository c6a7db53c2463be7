#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polygb/gbasis.hpp"
#include "polygb/orders.hpp"

namespace polygb::lattice {

// One generator per cell of p: +1 on the diagonal corners of the cell, -1
// on the anti-diagonal ones. Coordinates index the vertex box of p's
// bounding box, row-major.
std::vector<std::vector<long long>> cell_vectors(const Polyomino& p);

// Integer row span of the cell vectors, held in Hermite normal form so
// membership and coset representatives are exact back-substitutions.
class LatticeBasis {
 public:
  static LatticeBasis from_polyomino(const Polyomino& p);

  int width() const { return width_; }    // bounding box, in cells
  int height() const { return height_; }
  int ambient_dim() const { return (width_ + 1) * (height_ + 1); }
  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient_index(Vertex v) const;  // DimensionMismatch outside the box

  const std::vector<std::vector<long long>>& rows() const { return rows_; }

  // w must have ambient_dim entries (DimensionMismatch otherwise).
  bool contains(const std::vector<long long>& w) const;
  // Canonical representative of w modulo the lattice; equal reps <=> equal
  // cosets.
  std::vector<long long> reduce_mod(std::vector<long long> w) const;

 private:
  std::vector<std::vector<long long>> rows_;  // HNF rows
  std::vector<int> pivot_col_;
  int width_ = 0;
  int height_ = 0;
};

// Exponent difference of f, embedded into the ambient vertex box.
std::vector<long long> ambient_difference(const LatticeBasis& basis, const VarTable& vars,
                                          const gbasis::Binomial& f);

bool binomial_in_lattice_ideal(const LatticeBasis& basis, const VarTable& vars,
                               const gbasis::Binomial& f);

struct Witness {
  gbasis::Binomial binomial;
  int degree = 0;
};

// Smallest-degree binomial whose exponent difference lies in the lattice
// but which does not reduce to zero against the inner-2-minor ideal.
// Degree-capped exhaustive search over monomial pairs on the vertices of p;
// a heuristic for small instances, not a completeness claim.
std::optional<Witness> find_witness(const Polyomino& p, int max_degree,
                                    uint64_t pair_budget = 1'000'000);

}  // namespace polygb::lattice
