#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polygb/geometry.hpp"

namespace polygb::conditions {

// Quadraticity criterion for one parity class of orders, decided purely on
// inner intervals. Odd class: for inner intervals [a,b] and [b,e] meeting
// diagonally at b, one of the intervals spanned by a and an anti-diagonal
// corner of [b,e] must be inner. Even class: the mirrored condition on
// intervals meeting anti-diagonally.
bool prop21(const Polyomino& p, bool odd_class);

// Vertex obstruction predicate for order k rotated to start at v. For k = 1
// it reads off two corner configurations on inner intervals; other k reduce
// to k = 1 through the grid symmetry matching order k to order 1.
bool pi(const Polyomino& p, Vertex v, int k);  // VertexNotInP, BadIndex

// For every vertex, the set of k in 1..8 whose predicate holds.
std::map<Vertex, std::set<int>> pi_profile(const Polyomino& p);

struct Certificate {
  bool sufficient = false;
  char parity = 0;  // 'O' or 'E' when sufficient
  std::map<Vertex, int> chosen;  // per vertex, an order in the class avoiding pi
};

struct ConditionReport {
  bool prop21_odd = false;
  bool prop21_even = false;
  std::array<bool, 8> quadratic_prediction{};  // index i-1 for order i
  std::map<Vertex, std::set<int>> profile;
  Certificate certificate;
};

// Sufficient primality test: some parity class has a quadratic basis by
// prop21 and every vertex avoids pi for at least one order in that class.
ConditionReport primality_sufficient(const Polyomino& p);

struct Obstruction {
  Pattern pattern;
  Vertex offset;
};

// For thin p only (NotThin otherwise): the translated pattern matches that
// decide prop21 for the class. Empty result <=> prop21 holds for the class.
std::vector<Obstruction> thin_obstructions(const Polyomino& p, bool odd_class);

std::string report_to_json(const ConditionReport& r);

}  // namespace polygb::conditions
