#include "alcove/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

Covector unit_cov(int n, int i, int v) {
  Covector c(n, 0);
  c[i] = v;
  return c;
}

}  // namespace

RootDatum RootDatum::build(Family family, int n) {
  RootDatum rd;
  rd.family_ = family;
  rd.n_ = n;

  if (family == Family::C) {
    if (n < 1) throw config_error("family C needs rank n >= 1");
    rd.apt_dim_ = n;
    // {eps_i - eps_j, eps_i + eps_j (i != j), +-2 eps_i}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Covector c(n, 0);
        c[i] = 1;
        c[j] = -1;
        rd.roots_.push_back({c, c});
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Covector c(n, 0);
        c[i] = 1;
        c[j] = 1;
        Covector d = c;
        rd.roots_.push_back({c, d});
        Covector nc(n, 0);
        nc[i] = -1;
        nc[j] = -1;
        rd.roots_.push_back({nc, nc});
      }
    for (int i = 0; i < n; ++i) {
      rd.roots_.push_back({unit_cov(n, i, 2), unit_cov(n, i, 1)});
      rd.roots_.push_back({unit_cov(n, i, -2), unit_cov(n, i, -1)});
    }
  } else {
    if (n < 2) throw config_error("family A needs rank parameter n >= 2");
    rd.apt_dim_ = n - 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Covector c(n, 0);
        c[i] = 1;
        c[j] = -1;
        rd.roots_.push_back({c, c});
      }
  }

  std::sort(rd.roots_.begin(), rd.roots_.end());

  auto index_of = [&rd](const Covector& c) {
    for (std::size_t k = 0; k < rd.roots_.size(); ++k)
      if (rd.roots_[k].covec == c) return static_cast<int>(k);
    throw std::logic_error("root not found");
  };

  // Simple system: eps_i - eps_{i+1} plus, for C, the long root 2 eps_n.
  for (int i = 0; i + 1 < n; ++i) {
    Covector c(n, 0);
    c[i] = 1;
    c[i + 1] = -1;
    rd.simple_idx_.push_back(index_of(c));
  }
  if (family == Family::C) {
    rd.simple_idx_.push_back(index_of(unit_cov(n, n - 1, 2)));
    for (int i = 0; i < n; ++i) {
      rd.long_idx_.push_back(index_of(unit_cov(n, i, 2)));
      rd.long_idx_.push_back(index_of(unit_cov(n, i, -2)));
    }
  }

  // Alcove vertices and the opposite walls.  Wall j vanishes on every
  // v_i with i != j and is positive at v_j.
  int N = rd.apt_dim_;
  if (family == Family::C) {
    for (int i = 0; i <= N; ++i) {
      std::vector<Rat> v(n, Rat(0));
      for (int j = 0; j < i; ++j) v[j] = Rat(1, 2);
      rd.alcove_vertices_.push_back({v});
    }
    // wall 0: 1 - 2 eps_1 (theta = 2 eps_1); wall j: eps_j - eps_{j+1};
    // wall n: 2 eps_n.
    {
      Covector g = unit_cov(n, 0, -2);
      rd.walls_.push_back({{g, 1}, unit_cov(n, 0, -1)});
    }
    for (int j = 1; j < n; ++j) {
      Covector g(n, 0);
      g[j - 1] = 1;
      g[j] = -1;
      rd.walls_.push_back({{g, 0}, g});
    }
    rd.walls_.push_back({{unit_cov(n, n - 1, 2), 0}, unit_cov(n, n - 1, 1)});
  } else {
    // v_0 = 0, v_k = k-th fundamental coweight in trace-zero coordinates.
    for (int k = 0; k <= N; ++k) {
      std::vector<Rat> v(n, Rat(0));
      for (int j = 0; j < n; ++j) v[j] = (j < k) ? Rat(n - k, n) : Rat(-k, n);
      rd.alcove_vertices_.push_back({v});
    }
    // wall 0: 1 - (eps_1 - eps_n); wall j: eps_j - eps_{j+1}.
    {
      Covector g(n, 0);
      g[0] = -1;
      g[n - 1] = 1;
      rd.walls_.push_back({{g, 1}, g});
    }
    for (int j = 1; j < n; ++j) {
      Covector g(n, 0);
      g[j - 1] = 1;
      g[j] = -1;
      rd.walls_.push_back({{g, 0}, g});
    }
  }

  return rd;
}

RootDatum build_root_datum(Family family, int n) { return RootDatum::build(family, n); }

std::vector<Root> RootDatum::simple_roots() const {
  std::vector<Root> out;
  for (int k : simple_idx_) out.push_back(roots_[k]);
  return out;
}

std::vector<Root> RootDatum::long_roots() const {
  std::vector<Root> out;
  for (int k : long_idx_) out.push_back(roots_[k]);
  return out;
}

void RootDatum::validate_point(const ApartmentPoint& z) const {
  if (static_cast<int>(z.c.size()) != n_)
    throw contract_error("apartment point has wrong dimension");
  if (family_ == Family::A) {
    Rat s(0);
    for (const Rat& x : z.c) s += x;
    if (!s.is_zero()) throw contract_error("family A points must have coordinate sum zero");
  }
}

Rat eval_covector(const Covector& a, const ApartmentPoint& z) {
  if (a.size() != z.c.size()) throw contract_error("covector/point dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rat(a[i]) * z.c[i];
  return s;
}

Rat eval_affine(const AffineRoot& psi, const ApartmentPoint& z) {
  return eval_covector(psi.gradient, z) + Rat(psi.offset);
}

std::vector<ApartmentPoint> fundamental_alcove_vertices(const RootDatum& rd) {
  return rd.alcove_vertices();
}

namespace {

ApartmentPoint reflect(const RootDatum::Wall& w, const ApartmentPoint& z) {
  Rat v = eval_affine(w.psi, z);
  ApartmentPoint out = z;
  for (std::size_t i = 0; i < out.c.size(); ++i)
    if (w.coroot[i] != 0) out.c[i] -= v * Rat(w.coroot[i]);
  return out;
}

}  // namespace

std::pair<ApartmentPoint, WeylWord> reduce_to_alcove(const ApartmentPoint& z, const RootDatum& rd) {
  rd.validate_point(z);
  // Step bound: each reflection through a violated alcove wall removes at
  // least one separating wall; overestimate their count from |alpha(z)|.
  long long bound = 16;
  for (const Root& r : rd.roots()) {
    Rat v = eval_covector(r.covec, z);
    long long m = v.sign() >= 0 ? v.ceil_ll() : -v.floor_ll();
    bound += 2 * (m + 1);
  }

  ApartmentPoint cur = z;
  WeylWord word;
  for (long long step = 0; step <= bound; ++step) {
    int violated = -1;
    for (std::size_t j = 0; j < rd.alcove_walls().size(); ++j) {
      if (eval_affine(rd.alcove_walls()[j].psi, cur).sign() < 0) {
        violated = static_cast<int>(j);
        break;
      }
    }
    if (violated < 0) return {cur, word};
    cur = reflect(rd.alcove_walls()[violated], cur);
    word.reflections.push_back(violated);
  }
  throw std::logic_error("reduce_to_alcove: step bound exceeded");
}

ApartmentPoint apply_word(const WeylWord& w, const ApartmentPoint& z, const RootDatum& rd) {
  ApartmentPoint cur = z;
  for (int j : w.reflections) {
    if (j < 0 || j >= static_cast<int>(rd.alcove_walls().size()))
      throw contract_error("word index out of range");
    cur = reflect(rd.alcove_walls()[j], cur);
  }
  return cur;
}

ApartmentPoint apply_inverse_word(const WeylWord& w, const ApartmentPoint& z, const RootDatum& rd) {
  ApartmentPoint cur = z;
  for (auto it = w.reflections.rbegin(); it != w.reflections.rend(); ++it)
    cur = reflect(rd.alcove_walls()[*it], cur);
  return cur;
}

ApartmentPoint point_from(std::vector<Rat> coords) { return {std::move(coords)}; }

ApartmentPoint add(const ApartmentPoint& a, const ApartmentPoint& b) {
  ApartmentPoint r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

ApartmentPoint sub(const ApartmentPoint& a, const ApartmentPoint& b) {
  ApartmentPoint r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

ApartmentPoint scale(const Rat& t, const ApartmentPoint& a) {
  ApartmentPoint r = a;
  for (Rat& x : r.c) x *= t;
  return r;
}

ApartmentPoint barycentre(const std::vector<ApartmentPoint>& pts) {
  if (pts.empty()) throw contract_error("barycentre of empty point set");
  ApartmentPoint s = pts[0];
  for (std::size_t k = 1; k < pts.size(); ++k) s = add(s, pts[k]);
  return scale(Rat(1, static_cast<long long>(pts.size())), s);
}

std::string point_str(const ApartmentPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (i) s += ", ";
    s += p.c[i].str();
  }
  return s + ")";
}

}  // namespace alcove
