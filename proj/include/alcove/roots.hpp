#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "alcove/rat.hpp"

namespace alcove {

enum class Family { A, C };

// A point of the standard apartment, in the basis {e_1,...,e_n} dual to
// {eps_1,...,eps_n}.  Coordinates are exact rationals.  For family A the
// coordinates sum to zero (trace-zero realization of the SL_n apartment).
struct ApartmentPoint {
  std::vector<Rat> c;
  auto operator<=>(const ApartmentPoint&) const = default;
};

// Integer covector in the eps-basis: alpha(z) = sum covec[i] * z_i.
using Covector = std::vector<int>;

struct Root {
  Covector covec;    // the root as a covector
  Covector coroot;   // its coroot as a vector in the e-basis
  auto operator<=>(const Root&) const = default;
};

// alpha(.) + offset, a function on the apartment whose zero set is a wall.
struct AffineRoot {
  Covector gradient;
  long long offset = 0;
  auto operator<=>(const AffineRoot&) const = default;
};

// A sequence of affine simple reflections (indices into the wall list of a
// RootDatum), recorded in application order.
struct WeylWord {
  std::vector<int> reflections;
  bool empty() const { return reflections.empty(); }
  std::size_t length() const { return reflections.size(); }
};

// Root and alcove data for Sp_2n (family C, parameter n >= 1) and SL_n
// (family A, parameter n >= 2) in fixed eps/e coordinates.  The fundamental
// alcove of C_n is {1/2 >= z_1 >= ... >= z_n >= 0}; in particular the long
// root alcove of Sp_2 is [0, 1/2].
class RootDatum {
 public:
  static RootDatum build(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  // Dimension of the apartment: n for C_n, n-1 for SL_n.
  int apartment_dim() const { return apt_dim_; }

  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> simple_roots() const;
  std::vector<Root> long_roots() const;  // family C only

  // Alcove vertices v_0,...,v_N (N = apartment_dim), indexed so that wall j
  // is the unique alcove wall not containing v_j.
  const std::vector<ApartmentPoint>& alcove_vertices() const { return alcove_vertices_; }

  struct Wall {
    AffineRoot psi;
    Covector coroot;  // coroot of psi's gradient
  };
  const std::vector<Wall>& alcove_walls() const { return walls_; }

  // Throws contract_error on dimension mismatch or, for family A, a
  // nonzero coordinate sum.
  void validate_point(const ApartmentPoint& z) const;

 private:
  Family family_ = Family::C;
  int n_ = 0;
  int apt_dim_ = 0;
  std::vector<Root> roots_;
  std::vector<int> simple_idx_;
  std::vector<int> long_idx_;
  std::vector<ApartmentPoint> alcove_vertices_;
  std::vector<Wall> walls_;
};

RootDatum build_root_datum(Family family, int n);

Rat eval_affine(const AffineRoot& psi, const ApartmentPoint& z);
Rat eval_covector(const Covector& a, const ApartmentPoint& z);

// v_0,...,v_N of the fundamental alcove.  For family C these are
// v_i = sum_{j<=i} (1/2) e_j.
std::vector<ApartmentPoint> fundamental_alcove_vertices(const RootDatum& rd);

// Maps z into the closed fundamental alcove by affine simple reflections.
// The returned word maps z to the returned point; it is empty iff z already
// lies in the closed alcove.  Guarded by a step bound proportional to the
// number of separating walls; exceeding it throws std::logic_error.
std::pair<ApartmentPoint, WeylWord> reduce_to_alcove(const ApartmentPoint& z, const RootDatum& rd);

ApartmentPoint apply_word(const WeylWord& w, const ApartmentPoint& z, const RootDatum& rd);
ApartmentPoint apply_inverse_word(const WeylWord& w, const ApartmentPoint& z, const RootDatum& rd);

// Point helpers.
ApartmentPoint point_from(std::vector<Rat> coords);
ApartmentPoint add(const ApartmentPoint& a, const ApartmentPoint& b);
ApartmentPoint sub(const ApartmentPoint& a, const ApartmentPoint& b);
ApartmentPoint scale(const Rat& t, const ApartmentPoint& a);
ApartmentPoint barycentre(const std::vector<ApartmentPoint>& pts);
std::string point_str(const ApartmentPoint& p);

}  // namespace alcove
