#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcove/rat.hpp"
#include "alcove/roots.hpp"

namespace alcove {

// The face of the affine hyperplane arrangement containing a given point.
// zero_set / positive_set list the affine roots vanishing / strictly
// positive within the local enumeration window.  closure_vertices spans the
// closed facet (a simplex for these irreducible affine arrangements) and
// serves as the canonical identity of the facet.
struct Facet {
  std::vector<AffineRoot> zero_set;
  std::vector<AffineRoot> positive_set;
  int dimension = 0;
  std::optional<int> vertex_type;             // set when dimension == 0
  std::vector<ApartmentPoint> closure_vertices;  // sorted, affinely independent

  bool operator==(const Facet& o) const { return closure_vertices == o.closure_vertices; }
  bool operator<(const Facet& o) const {
    if (dimension != o.dimension) return dimension < o.dimension;
    return closure_vertices < o.closure_vertices;
  }
};

// A closed convex region cut out by finitely many affine constraints
// covec(z - base) <= bound, plus optional equalities.  The constructor
// checks that the base point satisfies every constraint and that the region
// is bounded (exact LP); violations throw contract_error.
class Region {
 public:
  struct Constraint {
    std::vector<Rat> covec;
    Rat bound;
  };

  Region(ApartmentPoint base, std::vector<Constraint> ineqs, std::vector<Constraint> eqs);

  const ApartmentPoint& base() const { return base_; }
  const std::vector<Constraint>& ineqs() const { return ineqs_; }
  const std::vector<Constraint>& eqs() const { return eqs_; }
  int dim() const { return static_cast<int>(base_.c.size()); }

  bool contains(const ApartmentPoint& z) const;

  // All extreme points, by exact solving of maximal-rank constraint subsets
  // followed by feasibility filtering.  Exponential in the number of
  // inequalities; fine at desk scale.  Recomputed per call.
  std::vector<ApartmentPoint> corners() const;

  // Largest t in [0,1] with base + t*(to - from) ... see .cpp; clips the
  // segment [from, to] to the region, assuming from lies inside.
  Rat clip_segment(const ApartmentPoint& from, const ApartmentPoint& to) const;

 private:
  ApartmentPoint base_;
  std::vector<Constraint> ineqs_;
  std::vector<Constraint> eqs_;
};

// Omega_A(x, s) = { z : alpha(z - x) <= s for every root alpha }.
Region omega_region(const ApartmentPoint& x, const Rat& s, const RootDatum& rd);

Facet facet_of(const ApartmentPoint& z, const RootDatum& rd);

// All facets meeting the region, closed under taking faces; their union is
// the simplicial closure.  Deduplicated, deterministically ordered.
std::vector<Facet> simplicial_closure(const Region& r, const RootDatum& rd);

// Simplicial closure of a single point: the facet through it plus faces.
std::vector<Facet> simplicial_closure_of_point(const ApartmentPoint& z, const RootDatum& rd);

// Apartment-restricted simplicial radius r(Omega, A, x): the maximum of
// alpha(v - x) over the region's extreme points (resp. the closure's facet
// vertices) and all roots alpha.
Rat simplicial_radius(const Region& r, const ApartmentPoint& x, const RootDatum& rd);
Rat simplicial_radius(const std::vector<Facet>& closure, const ApartmentPoint& x, const RootDatum& rd);

// All 0-dimensional facets of the arrangement lying in the region, each with
// its alcove vertex type.  Sorted by point.
std::vector<std::pair<ApartmentPoint, int>> enumerate_vertices(const Region& r, const RootDatum& rd);

// Radius of the point closure at the barycentre of the face of the SL_n
// fundamental alcove spanned by k vertices; checks the closed form 1 - 1/k.
Rat optimal_point_radius_sl_n(int n, int k);

// Exact barycentric membership test in the simplex spanned by affinely
// independent points.
bool in_simplex(const ApartmentPoint& p, const std::vector<ApartmentPoint>& verts);

}  // namespace alcove
