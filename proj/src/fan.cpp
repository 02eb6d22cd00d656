#include "tmsv/fan.hpp"

#include <algorithm>
#include <numeric>

#include "tmsv/errors.hpp"
#include "tmsv/matrix.hpp"

namespace tmsv {

namespace {

// One linear constraint a·x >= c.
struct Ineq {
  QVec a;
  Rational c;
};

// Scale so entries are coprime integers; canonical form for dedup.
void normalize_ineq(Ineq& r) {
  Integer den = 1;
  for (const auto& q : r.a) den = lcm(den, q.get_den());
  den = lcm(den, r.c.get_den());
  Integer num = 0;
  for (const auto& q : r.a) num = gcd(num, Integer(q.get_num() * (den / q.get_den())));
  num = gcd(num, Integer(r.c.get_num() * (den / r.c.get_den())));
  if (num == 0) return;
  Rational s = Rational(den) / Rational(num);
  for (auto& q : r.a) q *= s;
  r.c *= s;
}

// Feasibility of {x : a_i·x >= c_i for all i} by Fourier–Motzkin elimination.
bool fm_feasible(std::vector<Ineq> rows, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    std::vector<Ineq> zero, pos, neg;
    for (auto& r : rows) {
      int s = sgn(r.a[v]);
      if (s == 0)
        zero.push_back(std::move(r));
      else if (s > 0)
        pos.push_back(std::move(r));
      else
        neg.push_back(std::move(r));
    }
    std::set<std::pair<std::vector<Rational>, Rational>> seen;
    std::vector<Ineq> next;
    auto push = [&](Ineq r) {
      normalize_ineq(r);
      bool all0 = true;
      for (const auto& q : r.a) all0 &= is_zero(q);
      if (all0 && sgn(r.c) <= 0) return;  // trivially satisfied
      if (seen.insert({r.a, r.c}).second) next.push_back(std::move(r));
    };
    for (auto& r : zero) push(std::move(r));
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Rational mp = -q.a[v], mq = p.a[v];
        Ineq r;
        r.a.resize(nvars);
        for (int t = 0; t < nvars; ++t) r.a[t] = mp * p.a[t] + mq * q.a[t];
        r.c = mp * p.c + mq * q.c;
        push(std::move(r));
      }
    rows = std::move(next);
  }
  for (const auto& r : rows)
    if (sgn(r.c) > 0) return false;
  return true;
}

// Feasibility of {Ax = b, a_i·x >= c_i}: substitute equalities away first.
bool system_feasible(std::vector<Ineq> eqs, std::vector<Ineq> ineqs, int nvars) {
  for (auto& e : eqs) {
    int v = -1;
    for (int t = 0; t < nvars; ++t)
      if (!is_zero(e.a[t])) {
        v = t;
        break;
      }
    if (v < 0) {
      if (!is_zero(e.c)) return false;
      continue;
    }
    // x_v = (c − Σ_{t≠v} a_t x_t) / a_v; substitute into every other row.
    auto substitute = [&](Ineq& r) {
      if (is_zero(r.a[v])) return;
      Rational f = r.a[v] / e.a[v];
      for (int t = 0; t < nvars; ++t) r.a[t] -= f * e.a[t];
      r.c -= f * e.c;
    };
    for (auto& r : eqs)
      if (&r != &e) substitute(r);
    for (auto& r : ineqs) substitute(r);
    e.a.assign(nvars, Rational(0));  // consumed
    e.c = 0;
  }
  return fm_feasible(std::move(ineqs), nvars);
}

QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return q;
}

}  // namespace

IVec primitivized(IVec v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

int Fan::add_ray(const IVec& v) {
  auto it = ray_index.find(v);
  if (it != ray_index.end()) return it->second;
  int id = static_cast<int>(rays.size());
  rays.push_back(v);
  ray_index.emplace(v, id);
  return id;
}

int Fan::add_cone(std::vector<int> ray_ids) {
  std::sort(ray_ids.begin(), ray_ids.end());
  ray_ids.erase(std::unique(ray_ids.begin(), ray_ids.end()), ray_ids.end());
  int k = static_cast<int>(ray_ids.size());
  int full = -1;
  for (Mask sub = 0; sub < (Mask(1) << k); ++sub) {
    std::vector<int> face;
    for (int i = 0; i < k; ++i)
      if (sub & (Mask(1) << i)) face.push_back(ray_ids[i]);
    auto it = cone_index.find(face);
    int id;
    if (it != cone_index.end()) {
      id = it->second;
    } else {
      id = static_cast<int>(cones.size());
      cones.push_back(Cone{face});
      cone_index.emplace(face, id);
    }
    if (static_cast<int>(face.size()) == k) full = id;
  }
  return full;
}

bool Fan::has_cone(const std::vector<int>& ray_ids) const {
  return cone_index.count(ray_ids) > 0;
}

std::vector<IVec> Fan::cone_rays(const Cone& c) const {
  std::vector<IVec> out;
  out.reserve(c.rays.size());
  for (int r : c.rays) out.push_back(rays[r]);
  return out;
}

int Fan::max_dim() const {
  int d = 0;
  for (const auto& c : cones) d = std::max(d, c.dim());
  return d;
}

bool cone_contains_point(const std::vector<IVec>& rays, const QVec& pt) {
  int m = static_cast<int>(pt.size());
  int k = static_cast<int>(rays.size());
  if (k == 0) {
    for (const auto& q : pt)
      if (!is_zero(q)) return false;
    return true;
  }
  std::vector<Ineq> eqs, ineqs;
  for (int t = 0; t < m; ++t) {
    Ineq e;
    e.a.resize(k);
    for (int i = 0; i < k; ++i) e.a[i] = Rational(rays[i][t]);
    e.c = pt[t];
    eqs.push_back(std::move(e));
  }
  for (int i = 0; i < k; ++i) {
    Ineq r;
    r.a.assign(k, Rational(0));
    r.a[i] = 1;
    r.c = 0;
    ineqs.push_back(std::move(r));
  }
  return system_feasible(std::move(eqs), std::move(ineqs), k);
}

bool fan_contains_point(const Fan& f, const QVec& pt) {
  if (static_cast<int>(pt.size()) != f.ambient)
    throw DimensionMismatch("point dimension vs fan ambient");
  for (const auto& c : f.cones)
    if (cone_contains_point(f.cone_rays(c), pt)) return true;
  return false;
}

bool relint_meets(const std::vector<IVec>& sigma, const std::vector<IVec>& eta,
                  int ambient) {
  int ks = static_cast<int>(sigma.size());
  int ke = static_cast<int>(eta.size());
  if (ke == 0) return true;  // relint of origin cone is the origin ∈ sigma
  // Variables: c_0..c_{ks-1} >= 0, d_0..d_{ke-1} >= 1, with Σc σ = Σd η.
  int nv = ks + ke;
  std::vector<Ineq> eqs, ineqs;
  for (int t = 0; t < ambient; ++t) {
    Ineq e;
    e.a.resize(nv);
    for (int i = 0; i < ks; ++i) e.a[i] = Rational(sigma[i][t]);
    for (int j = 0; j < ke; ++j) e.a[ks + j] = Rational(-eta[j][t]);
    e.c = 0;
    eqs.push_back(std::move(e));
  }
  for (int i = 0; i < nv; ++i) {
    Ineq r;
    r.a.assign(nv, Rational(0));
    r.a[i] = 1;
    r.c = (i < ks) ? 0 : 1;
    ineqs.push_back(std::move(r));
  }
  return system_feasible(std::move(eqs), std::move(ineqs), nv);
}

std::vector<IVec> project_rays(const std::vector<IVec>& rays,
                               const std::vector<int>& keep) {
  std::vector<IVec> out;
  std::set<IVec> seen;
  for (const auto& r : rays) {
    IVec img;
    img.reserve(keep.size());
    for (int t : keep) img.push_back(r[t]);
    bool all0 = std::all_of(img.begin(), img.end(), [](long long x) { return x == 0; });
    if (all0) continue;
    img = primitivized(std::move(img));
    if (seen.insert(img).second) out.push_back(std::move(img));
  }
  return out;
}

std::vector<IVec> project_cone(const std::vector<IVec>& rays, int n,
                               const OrbitLabel& from, const OrbitLabel& to) {
  if (!orbit_leq(from, to))
    throw NotAFaceRelation("projection target orbit is not deeper");
  std::vector<int> keep;
  int pos = 0;
  for (int e = 0; e < n; ++e) {
    Mask b = Mask(1) << e;
    if ((from.J | from.K) & b) continue;  // not a coordinate of `from`
    if (!((to.J | to.K) & b)) keep.push_back(pos);
    ++pos;
  }
  return project_rays(rays, keep);
}

Fan pi1_power_fan(int n) {
  Fan f;
  f.ambient = n;
  for (int i = 0; i < n; ++i) {
    IVec plus(n, 0), minus(n, 0);
    plus[i] = 1;
    minus[i] = -1;
    f.add_ray(plus);
    f.add_ray(minus);
  }
  // sign vector per coordinate: 0 = absent, 1 = +e_i, 2 = −e_i
  std::vector<int> signs(n, 0);
  for (;;) {
    std::vector<int> ids;
    for (int i = 0; i < n; ++i)
      if (signs[i]) ids.push_back(2 * i + (signs[i] - 1));
    f.add_cone(ids);
    int i = 0;
    while (i < n && signs[i] == 2) signs[i++] = 0;
    if (i == n) break;
    ++signs[i];
  }
  return f;
}

bool delta_compatible(const Fan& sigma, const Fan& delta) {
  if (sigma.ambient != delta.ambient)
    throw DimensionMismatch("fans in different ambient spaces");
  for (const auto& r : sigma.rays)
    if (!fan_contains_point(delta, to_qvec(r)))
      throw SupportNotContained("ray outside the coarse fan's support");
  for (const auto& c : sigma.cones) {
    QVec bary(sigma.ambient, Rational(0));
    for (int rid : c.rays)
      for (int t = 0; t < sigma.ambient; ++t) bary[t] += Rational(sigma.rays[rid][t]);
    if (!fan_contains_point(delta, bary))
      throw SupportNotContained("cone barycenter outside the coarse fan's support");
  }
  for (const auto& c : sigma.cones) {
    auto rs = c.rays;
    bool inside_one = false;
    for (const auto& d : delta.cones) {
      auto drays = delta.cone_rays(d);
      bool all = true;
      for (int rid : rs)
        if (!cone_contains_point(drays, to_qvec(sigma.rays[rid]))) {
          all = false;
          break;
        }
      if (all) {
        inside_one = true;
        break;
      }
    }
    if (!inside_one) return false;
  }
  return true;
}

std::vector<ClosureCell> closure_cells_of_cone(const std::vector<IVec>& rays,
                                               int m) {
  std::vector<ClosureCell> out;
  for (Mask J = 0; J < (Mask(1) << m); ++J) {
    Mask comp = (Mask(1) << m) - 1 - J;
    for (Mask K = comp;; K = (K - 1) & comp) {
      std::vector<IVec> eta;
      for (int i = 0; i < m; ++i) {
        IVec v(m, 0);
        if (J & (Mask(1) << i)) {
          v[i] = 1;
          eta.push_back(v);
        } else if (K & (Mask(1) << i)) {
          v[i] = -1;
          eta.push_back(v);
        }
      }
      if (relint_meets(rays, eta, m)) {
        std::vector<int> keep;
        for (int i = 0; i < m; ++i)
          if (!((J | K) & (Mask(1) << i))) keep.push_back(i);
        out.push_back(ClosureCell{OrbitLabel{J, K}, project_rays(rays, keep)});
      }
      if (K == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const ClosureCell& a, const ClosureCell& b) {
    return a.orbit < b.orbit;
  });
  return out;
}

bool fan_is_simplicial(const Fan& f) {
  for (const auto& c : f.cones) {
    if (c.rays.empty()) continue;
    std::vector<QVec> rows;
    for (int rid : c.rays) rows.push_back(to_qvec(f.rays[rid]));
    if (rank(Matrix::from_rows(rows)) != c.dim()) return false;
  }
  return true;
}

bool fan_pairwise_face_check(const Fan& f) {
  for (const auto& s : f.cones)
    for (const auto& t : f.cones) {
      // relint(s) meets t ⟹ s is a face of t
      if (relint_meets(f.cone_rays(t), f.cone_rays(s), f.ambient)) {
        if (!std::includes(t.rays.begin(), t.rays.end(), s.rays.begin(),
                           s.rays.end()))
          return false;
      }
    }
  return true;
}

}  // namespace tmsv
