#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "alcove/apartment.hpp"
#include "alcove/roots.hpp"

namespace alcove {

// Rank-1 factor kinds of the anisotropic tori of Sp_2n considered here,
// named by the apartment coordinate their building point attaches to.
enum class FactorKind {
  UnramifiedHalf,  // attached to 1/2
  RamifiedMid,     // attached to 1/4 (midpoint of the rank-1 alcove)
  UnramifiedZero,  // attached to 0
};

// An ordered product of rank-1 factors, stored in the normalized order
// (all UnramifiedHalf, then RamifiedMid, then UnramifiedZero).  The
// permutation taking the input order to the canonical one is recorded.
class TorusSpec {
 public:
  static TorusSpec from_factors(const std::vector<FactorKind>& factors);
  static TorusSpec make(int m, int l, int u0);

  // Text form "u½^m r^l u0^k"; parser also accepts the ASCII alias "uh"
  // and bare counts like "r2".
  static TorusSpec parse(const std::string& text);

  int m() const { return m_; }              // # UnramifiedHalf
  int l() const { return l_; }              // # RamifiedMid
  int u0() const { return n_ - m_ - l_; }   // # UnramifiedZero
  int n() const { return n_; }

  const std::vector<FactorKind>& factors() const { return factors_; }
  // canonical_order[i] = input position of the i-th canonical factor.
  const std::vector<int>& canonical_order() const { return perm_; }

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

  bool operator==(const TorusSpec& o) const { return m_ == o.m_ && l_ == o.l_ && n_ == o.n_; }

 private:
  std::vector<FactorKind> factors_;
  std::vector<int> perm_;
  int m_ = 0, l_ = 0, n_ = 0;
};

// The image x of the torus building in the Sp_2n building:
// x = sum_{j<=m} (1/2) e_j + sum_{j=m+1}^{m+l} (1/4) e_j.
ApartmentPoint attachment_point(const TorusSpec& spec);

// A^T: equalities z_j = 1/2 (j <= m) and z_j = 0 (j > m+l), box constraints
// 0 <= z_j <= 1/2 on the ramified slots.
Region fixed_region(const TorusSpec& spec);

// c_T = simplicial radius of the fixed region with respect to x; zero
// exactly when there is no ramified factor.
Rat torus_radius(const TorusSpec& spec);

// Whether the fixed region equals the simplicial closure of {x}
// (equivalently l <= 1 in this family); decided by exact set comparison.
bool is_single_facet_closure(const TorusSpec& spec);

RootDatum torus_root_datum(const TorusSpec& spec);

}  // namespace alcove
