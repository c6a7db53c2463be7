#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polygb/orders.hpp"

namespace polygb::gbasis {

inline constexpr uint64_t kDefaultPairBudget = 1'000'000;

// Pure difference of two distinct monomials, coefficients fixed at +1/-1.
// Everything the engine touches stays in this shape; there is no general
// polynomial type to fall back on.
struct Binomial {
  Monomial plus;
  Monomial minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  bool quadratic() const { return plus.deg == 2 && minus.deg == 2; }
};

// Structural invariant violations (negative exponents, equal sides where a
// nonzero binomial is required) are counted instead of silently ignored.
// The count must stay zero; the acceptance harness reports it.
uint64_t purity_violations();
void reset_purity_violations();

// x_a x_b - x_c x_d per inner interval [a, b]; plus is the diagonal product.
std::vector<Binomial> inner_2_minors(const Polyomino& p, const VarTable& vars);

// Swap sides if needed so that plus is the leading monomial.
Binomial oriented(Binomial f, const MonomialOrder& o);

// S-polynomial; nullopt when it cancels to zero. Result is oriented.
std::optional<Binomial> spoly(const Binomial& f, const Binomial& g, const MonomialOrder& o);

// Full normal form against basis (leading side first, then the trailing
// side). Reducers are tried in basis order; first divisor wins. nullopt
// means f reduced to zero.
std::optional<Binomial> normal_form(Binomial f, const std::vector<Binomial>& basis,
                                    const MonomialOrder& o);

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Binomial> elems;  // reduced, oriented, sorted by leading monomial
  uint64_t pairs_processed = 0;

  bool quadratic() const;
  std::optional<Binomial> nf(const Binomial& f) const { return normal_form(f, elems, order); }
  bool contains(const Binomial& f) const { return !nf(f).has_value(); }
  // Same reduced elements; the orders may differ in rotation.
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elems == b.elems;
  }
};

// Buchberger with normal pair selection (smallest lcm first), the coprime
// and chain criteria, and a hard budget on processed S-pairs (Timeout).
// Output is the unique reduced basis, deterministically sorted.
GroebnerBasis buchberger(std::vector<Binomial> gens, const MonomialOrder& o,
                         uint64_t pair_budget = kDefaultPairBudget);

// Reduced basis of the inner-2-minor ideal of p under o.
GroebnerBasis reduced_basis(const Polyomino& p, const MonomialOrder& o,
                            uint64_t pair_budget = kDefaultPairBudget);

// True when the reduced basis equals the inner 2-minors themselves.
bool is_quadratic_gb(const Polyomino& p, const MonomialOrder& o,
                     uint64_t pair_budget = kDefaultPairBudget);

// Quotient by one variable. Requires b reduced with x_v the smallest
// variable of b's order (OrderPreconditionViolated otherwise): in graded
// reverse lex, dividing x_v out of the elements it divides and
// inter-reducing yields the reduced basis of (I : x_v).
GroebnerBasis colon_by_variable(const GroebnerBasis& b, Vertex v);

struct SaturationStep {
  Vertex v;
  int divided;  // elements that lost a factor of x_v in this step
};

struct Saturation {
  GroebnerBasis ideal_gb;      // reduced basis of the inner-2-minor ideal, order 1
  GroebnerBasis saturated_gb;  // reduced basis of the saturation, order 1
  std::vector<SaturationStep> steps;
  int passes = 0;
};

// Saturate the inner-2-minor ideal by the product of all variables: cycle
// the vertices in ascending order-1, rotating the order so the current
// vertex is smallest, taking the colon, and repeat until a full pass leaves
// the ideal unchanged.
Saturation saturate_all(const Polyomino& p, uint64_t pair_budget = kDefaultPairBudget);

struct PrimalityCertificate {
  bool prime = false;
  std::optional<Binomial> witness;  // saturation element outside the ideal
  bool witness_in_lattice = false;  // cross-check via the cell-vector lattice
  Saturation saturation;
};

// The inner-2-minor ideal is prime iff it equals its saturation by the
// product of the variables. On failure the witness is double-certified:
// nonzero normal form against the ideal and membership in the lattice.
PrimalityCertificate is_prime(const Polyomino& p, uint64_t pair_budget = kDefaultPairBudget);

// Text form, e.g. "x_0_0*x_1_1 - x_0_1*x_1_0"; plus side first, variables
// of each side listed in ascending (x, y).
std::string to_string(const Binomial& f, const VarTable& vars);
std::string monomial_to_string(const Monomial& m, const VarTable& vars);
std::string basis_to_string(const GroebnerBasis& b);

}  // namespace polygb::gbasis
