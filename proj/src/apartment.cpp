#include "alcove/apartment.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "alcove/errors.hpp"
#include "alcove/linalg.hpp"

namespace alcove {

namespace {

Rat eval_constraint(const Region::Constraint& c, const ApartmentPoint& base,
                    const ApartmentPoint& z) {
  Rat s(0);
  for (std::size_t i = 0; i < c.covec.size(); ++i)
    if (!c.covec[i].is_zero()) s += c.covec[i] * (z.c[i] - base.c[i]);
  return s;
}

}  // namespace

Region::Region(ApartmentPoint base, std::vector<Constraint> ineqs, std::vector<Constraint> eqs)
    : base_(std::move(base)), ineqs_(std::move(ineqs)), eqs_(std::move(eqs)) {
  int d = dim();
  for (const Constraint& c : ineqs_)
    if (static_cast<int>(c.covec.size()) != d) throw contract_error("constraint dimension mismatch");
  for (const Constraint& c : eqs_)
    if (static_cast<int>(c.covec.size()) != d) throw contract_error("constraint dimension mismatch");
  if (!contains(base_)) throw contract_error("region must contain its base point");

  // Boundedness: max and min of every coordinate must be finite.  In the
  // shifted coordinates y = z - base, y = 0 is feasible and all bounds are
  // nonnegative, so the LP needs no phase 1.
  RatMat a;
  RatVec b;
  for (const Constraint& c : ineqs_) {
    a.push_back(c.covec);
    b.push_back(c.bound);
  }
  for (const Constraint& c : eqs_) {
    a.push_back(c.covec);
    b.push_back(c.bound);
    RatVec neg(c.covec.size());
    for (std::size_t i = 0; i < c.covec.size(); ++i) neg[i] = -c.covec[i];
    a.push_back(neg);
    b.push_back(-c.bound);
  }
  for (int i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      RatVec obj(d);
      obj[i] = Rat(s);
      if (lp_max(a, b, obj).status == LpStatus::Unbounded)
        throw contract_error("region is unbounded");
    }
  }
}

bool Region::contains(const ApartmentPoint& z) const {
  for (const Constraint& c : ineqs_)
    if (eval_constraint(c, base_, z) > c.bound) return false;
  for (const Constraint& c : eqs_)
    if (eval_constraint(c, base_, z) != c.bound) return false;
  return true;
}

std::vector<ApartmentPoint> Region::corners() const {
  int d = dim();
  // Rows for the always-active equalities.
  RatMat eq_rows;
  RatVec eq_rhs;
  for (const Constraint& c : eqs_) {
    eq_rows.push_back(c.covec);
    Rat rhs = c.bound;
    for (int i = 0; i < d; ++i) rhs += c.covec[i] * base_.c[i];
    eq_rhs.push_back(rhs);
  }
  int re = rank(eq_rows);
  int need = d - re;
  std::set<ApartmentPoint> out;

  std::vector<int> idx(need);
  int m = static_cast<int>(ineqs_.size());

  auto try_subset = [&]() {
    RatMat a = eq_rows;
    RatVec b = eq_rhs;
    for (int k : idx) {
      a.push_back(ineqs_[k].covec);
      Rat rhs = ineqs_[k].bound;
      for (int i = 0; i < d; ++i) rhs += ineqs_[k].covec[i] * base_.c[i];
      b.push_back(rhs);
    }
    auto x = solve_unique(a, b);
    if (!x) return;
    ApartmentPoint p{*x};
    if (contains(p)) out.insert(p);
  };

  if (need == 0) {
    try_subset();
  } else {
    if (need < 0) throw std::logic_error("equalities overdetermine the region");
    // All size-`need` subsets of the inequality list.
    std::vector<int> sel(need);
    auto rec = [&](auto&& self, int pos, int start) -> void {
      if (pos == need) {
        idx = sel;
        try_subset();
        return;
      }
      for (int k = start; k < m; ++k) {
        sel[pos] = k;
        self(self, pos + 1, k + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return {out.begin(), out.end()};
}

Rat Region::clip_segment(const ApartmentPoint& from, const ApartmentPoint& to) const {
  if (!contains(from)) throw contract_error("clip_segment: segment start outside region");
  ApartmentPoint dir = sub(to, from);
  Rat tmax(1);
  auto handle = [&](const Constraint& c, bool equality) {
    Rat a = eval_constraint(c, base_, from);
    Rat b(0);
    for (std::size_t i = 0; i < c.covec.size(); ++i)
      if (!c.covec[i].is_zero()) b += c.covec[i] * dir.c[i];
    if (equality) {
      // a == bound at t=0; staying on the hyperplane needs b == 0.
      if (!b.is_zero()) tmax = std::min(tmax, Rat(0));
      return;
    }
    if (b.sign() > 0) tmax = std::min(tmax, (c.bound - a) / b);
  };
  for (const Constraint& c : ineqs_) handle(c, false);
  for (const Constraint& c : eqs_) handle(c, true);
  return tmax;
}

Region omega_region(const ApartmentPoint& x, const Rat& s, const RootDatum& rd) {
  rd.validate_point(x);
  if (s.sign() < 0) throw contract_error("omega_region: s must be >= 0");
  std::vector<Region::Constraint> ineqs;
  for (const Root& r : rd.roots()) {
    RatVec cv(r.covec.size());
    for (std::size_t i = 0; i < cv.size(); ++i) cv[i] = Rat(r.covec[i]);
    ineqs.push_back({cv, s});
  }
  std::vector<Region::Constraint> eqs;
  if (rd.family() == Family::A) {
    RatVec ones(rd.n(), Rat(1));
    eqs.push_back({ones, Rat(0)});
  }
  return Region(x, std::move(ineqs), std::move(eqs));
}

Facet facet_of(const ApartmentPoint& z, const RootDatum& rd) {
  rd.validate_point(z);
  auto [z0, word] = reduce_to_alcove(z, rd);

  Facet f;
  std::vector<int> positive_walls;
  for (std::size_t j = 0; j < rd.alcove_walls().size(); ++j)
    if (eval_affine(rd.alcove_walls()[j].psi, z0).sign() > 0)
      positive_walls.push_back(static_cast<int>(j));
  f.dimension = static_cast<int>(positive_walls.size()) - 1;
  if (f.dimension == 0) f.vertex_type = positive_walls[0];
  for (int j : positive_walls)
    f.closure_vertices.push_back(apply_inverse_word(word, rd.alcove_vertices()[j], rd));
  std::sort(f.closure_vertices.begin(), f.closure_vertices.end());

  // Local window: offsets up to ceil(max |alpha(z)|) + 1.
  long long window = 1;
  for (const Root& r : rd.roots()) {
    Rat v = eval_covector(r.covec, z);
    long long m = v.sign() >= 0 ? v.ceil_ll() : -v.floor_ll();
    window = std::max(window, m + 1);
  }
  for (const Root& r : rd.roots()) {
    Rat base = eval_covector(r.covec, z);
    for (long long k = -window; k <= window; ++k) {
      Rat v = base + Rat(k);
      if (v.is_zero())
        f.zero_set.push_back({r.covec, k});
      else if (v.sign() > 0)
        f.positive_set.push_back({r.covec, k});
    }
  }
  std::sort(f.zero_set.begin(), f.zero_set.end());
  std::sort(f.positive_set.begin(), f.positive_set.end());
  return f;
}

namespace {

// Adds every face of each given facet (faces are spanned by subsets of the
// closure vertices, since the cells of these arrangements are simplices).
std::vector<Facet> close_under_faces(const std::vector<Facet>& tops, const RootDatum& rd) {
  std::map<std::vector<ApartmentPoint>, Facet> seen;
  for (const Facet& f : tops) {
    seen.emplace(f.closure_vertices, f);
    int k = static_cast<int>(f.closure_vertices.size());
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<ApartmentPoint> subset;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) subset.push_back(f.closure_vertices[i]);
      Facet face = facet_of(barycentre(subset), rd);
      seen.emplace(face.closure_vertices, std::move(face));
    }
  }
  std::vector<Facet> out;
  for (auto& [key, f] : seen) out.push_back(std::move(f));
  std::sort(out.begin(), out.end());
  return out;
}

using Cell = std::vector<ApartmentPoint>;  // V-representation, sorted

Cell normalize_cell(Cell c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

std::vector<Facet> simplicial_closure_of_point(const ApartmentPoint& z, const RootDatum& rd) {
  return close_under_faces({facet_of(z, rd)}, rd);
}

// Facets meeting the region are enumerated by subdividing the region's
// V-representation with every arrangement hyperplane meeting its bounding
// box; the relative interior of each resulting cell realizes one facet.
std::vector<Facet> simplicial_closure(const Region& r, const RootDatum& rd) {
  std::vector<ApartmentPoint> corners = r.corners();
  if (corners.empty()) throw contract_error("simplicial_closure: empty region");

  // Hyperplanes alpha + k = 0 whose zero set meets the corner range of
  // alpha.  One representative per +-alpha pair.
  struct Hyp {
    Covector g;
    long long k;
  };
  std::vector<Hyp> hyps;
  for (const Root& root : rd.roots()) {
    if (root.covec < Covector(root.covec.size(), 0)) continue;  // skip negatives
    Rat lo = eval_covector(root.covec, corners[0]);
    Rat hi = lo;
    for (const ApartmentPoint& p : corners) {
      Rat v = eval_covector(root.covec, p);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    for (long long k = (-hi).ceil_ll(); k <= (-lo).floor_ll(); ++k)
      hyps.push_back({root.covec, k});
  }

  std::vector<Cell> cells = {normalize_cell(corners)};
  for (const Hyp& h : hyps) {
    std::set<Cell> next;
    for (const Cell& cell : cells) {
      std::vector<ApartmentPoint> pos, zero, neg;
      for (const ApartmentPoint& p : cell) {
        int s = (eval_covector(h.g, p) + Rat(h.k)).sign();
        (s > 0 ? pos : s < 0 ? neg : zero).push_back(p);
      }
      if (pos.empty() || neg.empty()) {
        next.insert(cell);
        if (!zero.empty() && zero.size() < cell.size()) next.insert(normalize_cell(zero));
        continue;
      }
      std::vector<ApartmentPoint> cuts;
      for (const ApartmentPoint& u : pos)
        for (const ApartmentPoint& w : neg) {
          Rat a = eval_covector(h.g, u) + Rat(h.k);
          Rat b = eval_covector(h.g, w) + Rat(h.k);
          Rat t = a / (a - b);  // a > 0 > b
          cuts.push_back(add(u, scale(t, sub(w, u))));
        }
      Cell on = normalize_cell(cuts);
      Cell zc = zero;
      zc.insert(zc.end(), on.begin(), on.end());
      Cell up = pos;
      up.insert(up.end(), zc.begin(), zc.end());
      Cell dn = neg;
      dn.insert(dn.end(), zc.begin(), zc.end());
      next.insert(normalize_cell(up));
      next.insert(normalize_cell(dn));
      next.insert(normalize_cell(zc));
    }
    cells.assign(next.begin(), next.end());
    if (cells.size() > 200000) throw std::logic_error("simplicial_closure: subdivision too large");
  }

  std::map<std::vector<ApartmentPoint>, Facet> met;
  for (const Cell& cell : cells) {
    Facet f = facet_of(barycentre(cell), rd);
    met.emplace(f.closure_vertices, std::move(f));
  }
  std::vector<Facet> tops;
  for (auto& [key, f] : met) tops.push_back(std::move(f));
  return close_under_faces(tops, rd);
}

Rat simplicial_radius(const Region& r, const ApartmentPoint& x, const RootDatum& rd) {
  rd.validate_point(x);
  if (!r.contains(x)) throw contract_error("simplicial_radius: x must lie in the region");
  Rat best(0);
  for (const ApartmentPoint& v : r.corners())
    for (const Root& root : rd.roots()) best = std::max(best, eval_covector(root.covec, sub(v, x)));
  return best;
}

Rat simplicial_radius(const std::vector<Facet>& closure, const ApartmentPoint& x,
                      const RootDatum& rd) {
  rd.validate_point(x);
  bool inside = false;
  for (const Facet& f : closure)
    if (in_simplex(x, f.closure_vertices)) {
      inside = true;
      break;
    }
  if (!inside) throw contract_error("simplicial_radius: x must lie in the closure");
  Rat best(0);
  for (const Facet& f : closure)
    for (const ApartmentPoint& v : f.closure_vertices)
      for (const Root& root : rd.roots())
        best = std::max(best, eval_covector(root.covec, sub(v, x)));
  return best;
}

std::vector<std::pair<ApartmentPoint, int>> enumerate_vertices(const Region& r,
                                                               const RootDatum& rd) {
  std::vector<ApartmentPoint> corners = r.corners();
  std::vector<std::pair<ApartmentPoint, int>> out;
  if (corners.empty()) return out;
  int n = rd.n();

  std::vector<Rat> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = hi[i] = corners[0].c[i];
    for (const ApartmentPoint& p : corners) {
      lo[i] = std::min(lo[i], p.c[i]);
      hi[i] = std::max(hi[i], p.c[i]);
    }
  }

  auto consider = [&](const ApartmentPoint& z) {
    if (!r.contains(z)) return;
    Facet f = facet_of(z, rd);
    if (f.dimension == 0) out.emplace_back(z, *f.vertex_type);
  };

  if (rd.family() == Family::C) {
    // Arrangement vertices of affine C_n are the half-integer points.
    std::vector<long long> val(n), from(n), to(n);
    for (int i = 0; i < n; ++i) {
      from[i] = (lo[i] * Rat(2)).ceil_ll();
      to[i] = (hi[i] * Rat(2)).floor_ll();
    }
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        std::vector<Rat> c(n);
        for (int j = 0; j < n; ++j) c[j] = Rat(val[j], 2);
        consider({c});
        return;
      }
      for (long long v = from[i]; v <= to[i]; ++v) {
        val[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  } else {
    // Vertices of affine A_{n-1}: points with all pairwise differences
    // integral; parametrized by integer offsets against coordinate 1 with
    // the mean subtracted.
    std::vector<long long> off(n, 0), from(n), to(n);
    for (int i = 0; i < n; ++i) {
      from[i] = (lo[i] - hi[0]).ceil_ll() - 1;
      to[i] = (hi[i] - lo[0]).floor_ll() + 1;
    }
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += off[j];
        std::vector<Rat> c(n);
        for (int j = 0; j < n; ++j) c[j] = Rat(off[j]) - Rat(s, n);
        ApartmentPoint z{c};
        for (int j = 0; j < n; ++j)
          if (z.c[j] < lo[j] || z.c[j] > hi[j]) return;
        consider(z);
        return;
      }
      for (long long v = from[i]; v <= to[i]; ++v) {
        off[i] = v;
        self(self, i + 1);
      }
    };
    off[0] = 0;  // offsets are only defined up to a common shift
    rec(rec, 1);
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_simplex(const ApartmentPoint& p, const std::vector<ApartmentPoint>& verts) {
  if (verts.empty()) return false;
  int d = static_cast<int>(p.c.size());
  int k = static_cast<int>(verts.size());
  RatMat a(d + 1, RatVec(k));
  RatVec b(d + 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = verts[j].c[i];
    b[i] = p.c[i];
  }
  for (int j = 0; j < k; ++j) a[d][j] = Rat(1);
  b[d] = Rat(1);
  auto lambda = solve_unique(a, b);
  if (!lambda) return false;
  for (const Rat& l : *lambda)
    if (l.sign() < 0) return false;
  return true;
}

Rat optimal_point_radius_sl_n(int n, int k) {
  if (n < 2) throw config_error("optimal_point_radius_sl_n: n >= 2 required");
  if (k < 1 || k > n - 1) throw contract_error("optimal_point_radius_sl_n: need 1 <= k <= n-1");
  RootDatum rd = build_root_datum(Family::A, n);
  std::vector<ApartmentPoint> face(rd.alcove_vertices().begin(), rd.alcove_vertices().begin() + k);
  ApartmentPoint x = barycentre(face);
  Rat r = simplicial_radius(simplicial_closure_of_point(x, rd), x, rd);
  if (r != Rat(1) - Rat(1, k))
    throw std::logic_error("optimal_point_radius_sl_n: radius differs from 1 - 1/k");
  return r;
}

}  // namespace alcove
