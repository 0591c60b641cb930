#include "cca/newton.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cca/errors.hpp"
#include "cca/lp.hpp"

namespace cca {

namespace {

using IVec = std::vector<Int>;

IVec cross(const IVec& a, const IVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Int dot(const IVec& w, const Exponent& v) {
  Int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * v[i];
  return s;
}

// Scales to primitive and flips sign so that all entries are nonnegative.
// Returns nullopt for the zero vector or mixed signs.
std::optional<IVec> normalize_normal(IVec w) {
  Int g = 0;
  for (const Int& x : w) g = gcd(g, x);
  if (g == 0) return std::nullopt;
  for (Int& x : w) x /= g;
  bool has_pos = false, has_neg = false;
  for (const Int& x : w) {
    if (x > 0) has_pos = true;
    if (x < 0) has_neg = true;
  }
  if (has_pos && has_neg) return std::nullopt;
  if (has_neg)
    for (Int& x : w) x = -x;
  return w;
}

IVec diff(const Exponent& a, const Exponent& b) {
  IVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = Int(a[i]) - Int(b[i]);
  return d;
}

// Pure power exponent of each variable; the generators of an m-primary
// antichain contain exactly one per variable.
std::vector<int> pure_power_bounds(const MonomialIdeal& a) {
  const std::size_t n = a.ring->nvars();
  std::vector<int> k(n, -1);
  for (const Exponent& e : a.gens) {
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = static_cast<int>(i);
      }
    }
    if (pure && support >= 0) k[support] = e[support];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (k[i] < 0)
      throw DomainError("Newton polyhedron needs a pure power of " +
                        a.ring->vars[i]);
  }
  return k;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a) {
  const std::size_t d = a.ring->nvars();
  if (d == 0 || d > 3)
    throw DomainError("Newton polyhedron analysis supports 1 to 3 variables");
  if (a.is_zero()) throw DomainError("Newton polyhedron of the zero ideal");
  pure_power_bounds(a);  // validates m-primariness

  const std::vector<Exponent>& A = a.gens;
  std::set<IVec> normals;

  if (d == 1) {
    normals.insert(IVec{1});
  } else if (d == 2) {
    normals.insert(IVec{1, 0});
    normals.insert(IVec{0, 1});
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (std::size_t j = i + 1; j < A.size(); ++j) {
        IVec e = diff(A[j], A[i]);
        if (auto w = normalize_normal(IVec{-e[1], e[0]})) normals.insert(*w);
      }
    }
  } else {
    IVec axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const IVec& ax : axes) normals.insert(ax);
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (std::size_t j = i + 1; j < A.size(); ++j) {
        IVec e = diff(A[j], A[i]);
        // Plane through two generators containing an orthant ray.
        for (const IVec& ax : axes)
          if (auto w = normalize_normal(cross(e, ax))) normals.insert(*w);
        // Plane through three generators.
        for (std::size_t k = j + 1; k < A.size(); ++k) {
          if (auto w = normalize_normal(cross(e, diff(A[k], A[i]))))
            normals.insert(*w);
        }
      }
    }
  }

  NewtonPolyhedron np{a.ring, A, {}};
  std::set<std::pair<IVec, Int>> seen;
  for (const IVec& w : normals) {
    Int c;
    bool first = true;
    for (const Exponent& g : A) {
      Int s = dot(w, g);
      if (first || s < c) c = s;
      first = false;
    }
    if (seen.insert({w, c}).second) np.facets.push_back(Facet{w, c});
  }
  return np;
}

bool np_contains(const NewtonPolyhedron& np, const Exponent& v,
                 const Int& scale) {
  for (int x : v)
    if (x < 0) return false;
  for (const Facet& f : np.facets)
    if (dot(f.normal, v) < scale * f.offset) return false;
  return true;
}

bool np_contains_lp(const std::vector<Exponent>& gens, const Exponent& v,
                    long scale) {
  std::vector<Rational> point(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    point[i] = make_rational(v[i], scale);
  }
  return lp_in_shifted_hull(gens, point);
}

MonomialIdeal integral_closure_power(const NewtonPolyhedron& np, unsigned n) {
  if (n == 0)
    return make_monomial_ideal(np.ring, {Exponent(np.ring->nvars(), 0)});
  MonomialIdeal base = make_monomial_ideal(np.ring, np.gens);
  const std::vector<int> k = pure_power_bounds(base);
  const std::size_t d = np.ring->nvars();

  // Minimal lattice points of n * NP(a) all lie in the box bounded by the
  // scaled pure powers: any coordinate above n*k_i can be lowered along
  // the recession cone without leaving the polyhedron.
  std::vector<Exponent> box;
  Exponent v(d, 0);
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == d) {
      box.push_back(v);
      return;
    }
    for (int x = 0; x <= static_cast<int>(n) * k[i]; ++x) {
      v[i] = x;
      self(self, i + 1);
    }
    v[i] = 0;
  };
  walk(walk, 0);
  const MonomialOrder grevlex{};
  std::sort(box.begin(), box.end(), [&](const Exponent& a, const Exponent& b) {
    if (int c = total_degree(a) - total_degree(b)) return c < 0;
    return compare(grevlex, a, b) < 0;
  });

  std::vector<Exponent> mins;
  const Int scale(static_cast<long>(n));
  for (const Exponent& p : box) {
    bool dominated = false;
    for (const Exponent& m : mins) {
      if (divides(m, p)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    if (np_contains(np, p, scale)) mins.push_back(p);
  }
  return make_monomial_ideal(np.ring, std::move(mins));
}

MonomialIdeal integral_closure(const MonomialIdeal& a) {
  return integral_closure_power(newton_polyhedron(a), 1);
}

bool is_integrally_closed(const MonomialIdeal& a) {
  return mono_equal(a, integral_closure(a));
}

NormalityReport normality_report(const MonomialIdeal& a, unsigned window) {
  if (window == 0) throw DomainError("normality window must be positive");
  NewtonPolyhedron np = newton_polyhedron(a);
  NormalityReport report;
  report.window = window;
  report.normal = true;
  for (unsigned n = 1; n <= window; ++n) {
    MonomialIdeal power = mono_power(a, n);
    MonomialIdeal closure = integral_closure_power(np, n);
    if (mono_equal(power, closure)) continue;
    report.normal = false;
    report.failing_power = n;
    for (const Exponent& g : closure.gens) {
      if (!mono_contains(power, g)) {
        report.witness = g;
        break;
      }
    }
    break;
  }
  return report;
}

namespace {

// Volume of the cone from the origin over one strictly positive facet in
// dimension 3, via the exact convex hull of the generators on the facet.
Rational cone_volume_3(const NewtonPolyhedron& np, const Facet& f) {
  std::vector<const Exponent*> on_face;
  for (const Exponent& g : np.gens)
    if (dot(f.normal, g) == f.offset) on_face.push_back(&g);
  if (on_face.size() < 3) return Rational(0);

  // Project out the coordinate with the largest normal entry; the plane is
  // not parallel to that axis, so the projection is injective on it.
  std::size_t drop = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (abs(f.normal[i]) > abs(f.normal[drop])) drop = i;
  const std::size_t u = (drop + 1) % 3, w = (drop + 2) % 3;

  struct P2 {
    long x, y;
    const Exponent* p;
  };
  std::vector<P2> pts;
  pts.reserve(on_face.size());
  for (const Exponent* p : on_face)
    pts.push_back(P2{static_cast<long>((*p)[u]), static_cast<long>((*p)[w]), p});
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
    return std::pair(a.x, a.y) < std::pair(b.x, b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const P2& a, const P2& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  if (pts.size() < 3) return Rational(0);

  // Monotone chain; strict turns only, so collinear and interior points
  // drop out.
  // Explicit return type: gmp expression templates must not outlive their
  // operands.
  auto turn = [](const P2& o, const P2& a, const P2& b) -> Int {
    return Int(a.x - o.x) * Int(b.y - o.y) - Int(a.y - o.y) * Int(b.x - o.x);
  };
  std::vector<P2> hull;
  for (const P2& p : pts) {
    while (hull.size() >= 2 &&
           turn(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (hull.size() >= lower &&
           turn(hull[hull.size() - 2], hull.back(), pts[i]) <= 0)
      hull.pop_back();
    hull.push_back(pts[i]);
  }
  hull.pop_back();
  if (hull.size() < 3) return Rational(0);

  Int six_vol = 0;
  const Exponent& v0 = *hull[0].p;
  for (std::size_t i = 1; i + 1 < hull.size(); ++i) {
    // det[v0; v1 - v0; v2 - v0] = det[v0; v1; v2] = 6 vol(0, v0, v1, v2).
    IVec bc = cross(diff(*hull[i].p, v0), diff(*hull[i + 1].p, v0));
    six_vol += Int(v0[0]) * bc[0] + Int(v0[1]) * bc[1] + Int(v0[2]) * bc[2];
  }
  if (six_vol < 0) six_vol = -six_vol;
  return make_rational(six_vol, 6);
}

}  // namespace

Rational covolume(const NewtonPolyhedron& np) {
  const std::size_t d = np.ring->nvars();
  Rational total(0);
  if (d == 1) {
    Int c = np.facets.front().offset;
    return Rational(c);
  }
  for (const Facet& f : np.facets) {
    if (f.offset <= 0) continue;
    if (d == 2) {
      std::vector<const Exponent*> on_face;
      for (const Exponent& g : np.gens)
        if (dot(f.normal, g) == f.offset) on_face.push_back(&g);
      if (on_face.size() < 2) continue;
      auto cmp = [](const Exponent* a, const Exponent* b) {
        return std::pair((*a)[0], (*a)[1]) < std::pair((*b)[0], (*b)[1]);
      };
      const Exponent& lo = **std::min_element(on_face.begin(), on_face.end(), cmp);
      const Exponent& hi = **std::max_element(on_face.begin(), on_face.end(), cmp);
      Int det = Int(lo[0]) * hi[1] - Int(lo[1]) * hi[0];
      if (det < 0) det = -det;
      total += make_rational(det, 2);
    } else {
      total += cone_volume_3(np, f);
    }
  }
  return total;
}

}  // namespace cca
