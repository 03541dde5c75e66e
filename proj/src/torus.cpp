#include "alcove/torus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

int kind_rank(FactorKind k) {
  switch (k) {
    case FactorKind::UnramifiedHalf: return 0;
    case FactorKind::RamifiedMid: return 1;
    case FactorKind::UnramifiedZero: return 2;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

TorusSpec TorusSpec::from_factors(const std::vector<FactorKind>& factors) {
  if (factors.empty()) throw config_error("torus spec needs at least one factor");
  TorusSpec s;
  s.n_ = static_cast<int>(factors.size());
  s.perm_.resize(factors.size());
  std::iota(s.perm_.begin(), s.perm_.end(), 0);
  std::stable_sort(s.perm_.begin(), s.perm_.end(),
                   [&](int a, int b) { return kind_rank(factors[a]) < kind_rank(factors[b]); });
  for (int i : s.perm_) s.factors_.push_back(factors[i]);
  for (FactorKind k : s.factors_) {
    if (k == FactorKind::UnramifiedHalf) ++s.m_;
    if (k == FactorKind::RamifiedMid) ++s.l_;
  }
  return s;
}

TorusSpec TorusSpec::make(int m, int l, int u0) {
  if (m < 0 || l < 0 || u0 < 0) throw config_error("torus spec counts must be nonnegative");
  std::vector<FactorKind> f;
  f.insert(f.end(), m, FactorKind::UnramifiedHalf);
  f.insert(f.end(), l, FactorKind::RamifiedMid);
  f.insert(f.end(), u0, FactorKind::UnramifiedZero);
  return from_factors(f);
}

TorusSpec TorusSpec::parse(const std::string& text) {
  std::vector<FactorKind> factors;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    FactorKind kind;
    std::size_t pos = 0;
    if (tok.rfind("u\xc2\xbd", 0) == 0) {  // "u½"
      kind = FactorKind::UnramifiedHalf;
      pos = 3;
    } else if (tok.rfind("uh", 0) == 0) {
      kind = FactorKind::UnramifiedHalf;
      pos = 2;
    } else if (tok.rfind("u0", 0) == 0) {
      kind = FactorKind::UnramifiedZero;
      pos = 2;
    } else if (tok.rfind("r", 0) == 0) {
      kind = FactorKind::RamifiedMid;
      pos = 1;
    } else {
      throw config_error("bad torus factor token '" + tok + "'");
    }
    long long count = 1;
    if (pos < tok.size()) {
      std::size_t p = pos;
      if (tok[p] == '^') ++p;
      if (p >= tok.size()) throw config_error("bad torus factor token '" + tok + "'");
      try {
        std::size_t used = 0;
        count = std::stoll(tok.substr(p), &used);
        if (used != tok.size() - p) throw config_error("bad torus factor token '" + tok + "'");
      } catch (const config_error&) {
        throw;
      } catch (const std::exception&) {
        throw config_error("bad torus factor token '" + tok + "'");
      }
      if (count < 1 || count > 64) throw config_error("bad factor count in '" + tok + "'");
    }
    factors.insert(factors.end(), count, kind);
  }
  return from_factors(factors);
}

std::string TorusSpec::to_text() const {
  std::string out;
  auto emit = [&](const char* name, int count) {
    if (count == 0) return;
    if (!out.empty()) out += " ";
    out += name;
    if (count > 1) out += "^" + std::to_string(count);
  };
  emit("u\xc2\xbd", m_);
  emit("r", l_);
  emit("u0", u0());
  return out;
}

nlohmann::ordered_json TorusSpec::to_json() const {
  return nlohmann::ordered_json{{"m", m_}, {"l", l_}, {"n", n_}};
}

RootDatum torus_root_datum(const TorusSpec& spec) {
  return build_root_datum(Family::C, spec.n());
}

ApartmentPoint attachment_point(const TorusSpec& spec) {
  std::vector<Rat> c(spec.n(), Rat(0));
  for (int j = 0; j < spec.m(); ++j) c[j] = Rat(1, 2);
  for (int j = spec.m(); j < spec.m() + spec.l(); ++j) c[j] = Rat(1, 4);
  ApartmentPoint x{c};

  if (spec.l() >= 1) {
    // x is the midpoint of the 1-dimensional facet [v_m, v_{m+l}].
    RootDatum rd = torus_root_datum(spec);
    Facet f = facet_of(x, rd);
    std::vector<ApartmentPoint> expect = {rd.alcove_vertices()[spec.m()],
                                          rd.alcove_vertices()[spec.m() + spec.l()]};
    std::sort(expect.begin(), expect.end());
    if (f.dimension != 1 || f.closure_vertices != expect)
      throw std::logic_error("attachment point is not the expected facet midpoint");
  }
  return x;
}

Region fixed_region(const TorusSpec& spec) {
  int n = spec.n();
  ApartmentPoint x = attachment_point(spec);
  std::vector<Region::Constraint> ineqs, eqs;
  for (int j = 0; j < n; ++j) {
    RatVec cv(n, Rat(0));
    cv[j] = Rat(1);
    if (j < spec.m() || j >= spec.m() + spec.l()) {
      eqs.push_back({cv, Rat(0)});  // z_j pinned at x_j (1/2 or 0)
    } else {
      ineqs.push_back({cv, Rat(1, 4)});  // z_j <= 1/2
      RatVec neg(n, Rat(0));
      neg[j] = Rat(-1);
      ineqs.push_back({neg, Rat(1, 4)});  // z_j >= 0
    }
  }
  return Region(x, std::move(ineqs), std::move(eqs));
}

Rat torus_radius(const TorusSpec& spec) {
  return simplicial_radius(fixed_region(spec), attachment_point(spec), torus_root_datum(spec));
}

bool is_single_facet_closure(const TorusSpec& spec) {
  RootDatum rd = torus_root_datum(spec);
  ApartmentPoint x = attachment_point(spec);
  Region region = fixed_region(spec);

  // The closure of {x} is the closed facet through x, a simplex.
  Facet top = facet_of(x, rd);

  // Union of closed facets vs convex region: containment both ways reduces
  // to vertex checks.
  for (const ApartmentPoint& v : top.closure_vertices)
    if (!region.contains(v)) return false;
  for (const ApartmentPoint& corner : region.corners())
    if (!in_simplex(corner, top.closure_vertices)) return false;
  return true;
}

}  // namespace alcove
