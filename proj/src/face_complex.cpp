#include "tmsv/face_complex.hpp"

#include <algorithm>
#include <set>

#include "tmsv/errors.hpp"
#include "tmsv/matrix.hpp"
#include "tmsv/wedge.hpp"

namespace tmsv {

namespace {

// +1 pure nonnegative ray, -1 pure nonpositive, throws on mixed signs.
int ray_type(const IVec& v) {
  bool pos = false, neg = false;
  for (long long x : v) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (pos && neg) throw NotAdmissible("mixed-sign ray");
  return neg ? -1 : 1;
}

int first_support(const IVec& v) {
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) return i;
  return -1;
}

int support_size(const IVec& v) {
  int c = 0;
  for (long long x : v) c += x != 0;
  return c;
}

QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return q;
}

Mask lift_mask(Mask rel, const std::vector<int>& coords) {
  Mask out = 0;
  for (size_t i = 0; i < coords.size(); ++i)
    if (rel & (Mask(1) << i)) out |= Mask(1) << coords[i];
  return out;
}

bool negated(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != -b[i]) return false;
  return true;
}

// Orientation sign of the projection cover tau < sigma (tau in a deeper
// orbit). The projection kernel meets sigma in a ray spanned by v; the face
// sits at the infinite end of v, so the direction pointing from tau back
// into sigma is -v. Contract that inward direction out of sigma's
// orientation and push the rest down; the result must be ±(tau's
// orientation).
int projection_sign(const Cell& sig, const Cell& tau) {
  int mp = static_cast<int>(sig.coords.size());
  int d = sig.dim();
  std::vector<int> keep_pos, killed_pos;
  for (int idx = 0; idx < mp; ++idx) {
    Mask bit = Mask(1) << sig.coords[idx];
    if ((tau.orbit.J | tau.orbit.K) & bit)
      killed_pos.push_back(idx);
    else
      keep_pos.push_back(idx);
  }
  Matrix A(static_cast<int>(keep_pos.size()), d);
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < d; ++c) A.at(r, c) = Rational(sig.rays[c][keep_pos[r]]);
  auto ker = kernel_basis(A);
  if (ker.size() != 1)
    throw SignConsistencyFailure("projection cover kernel is not a line");
  QVec cf = ker[0];
  bool has_pos = false, has_neg = false;
  for (const auto& q : cf) {
    has_pos |= sgn(q) > 0;
    has_neg |= sgn(q) < 0;
  }
  if (has_pos && has_neg)
    throw SignConsistencyFailure("projection kernel leaves the cone");
  if (has_neg)
    for (auto& q : cf) q = -q;
  QVec v(mp, Rational(0));
  for (int c = 0; c < d; ++c)
    for (int t = 0; t < mp; ++t) v[t] += cf[c] * Rational(sig.rays[c][t]);
  int k = -1;
  for (int idx : killed_pos)
    if (!is_zero(v[idx])) {
      k = idx;
      break;
    }
  if (k < 0) throw SignConsistencyFailure("projection kernel has no killed support");
  QVec alpha(mp, Rational(0));
  alpha[k] = Rational(-1) / v[k];
  QVec w = contract(alpha, orientation_wedge(sig), mp, 1, d);
  QVec down = wedge_delete_coords(w, mp, d - 1, keep_pos);
  QVec nu_t = orientation_wedge(tau);
  if (down == nu_t) return 1;
  if (negated(down, nu_t)) return -1;
  throw SignConsistencyFailure("projection sign is not a unit");
}

void add_covers_of_cell(FaceComplex& fc, int s) {
  const Cell sig = fc.cells[s];
  int d = sig.dim();
  int mp = static_cast<int>(sig.coords.size());
  for (int j = 0; j < d; ++j) {
    std::vector<IVec> sub;
    for (int i = 0; i < d; ++i)
      if (i != j) sub.push_back(sig.rays[i]);
    int t = fc.cell_at(sig.orbit, sub);
    if (fc.cells[t].rays != sub)
      throw SignConsistencyFailure("face ray order is not a subsequence");
    fc.covers.push_back(Cover{t, s, ((d - 1 - j) % 2 == 0) ? 1 : -1});
  }
  for (const auto& cc : closure_cells_of_cone(sig.rays, mp)) {
    if (cc.orbit.J == 0 && cc.orbit.K == 0) continue;
    if (static_cast<int>(cc.rays.size()) != d - 1) continue;
    OrbitLabel glob{sig.orbit.J | lift_mask(cc.orbit.J, sig.coords),
                    sig.orbit.K | lift_mask(cc.orbit.K, sig.coords)};
    int t = fc.cell_at(glob, cc.rays);
    fc.covers.push_back(Cover{t, s, projection_sign(sig, fc.cells[t])});
  }
}

void finish_complex(FaceComplex& fc) {
  for (int s = 0; s < static_cast<int>(fc.cells.size()); ++s)
    add_covers_of_cell(fc, s);
  fc.facets_of.assign(fc.cells.size(), {});
  for (const auto& cv : fc.covers)
    fc.facets_of[cv.sigma].push_back({cv.tau, cv.sign});
  std::map<std::pair<int, int>, long long> square;
  for (int s = 0; s < static_cast<int>(fc.cells.size()); ++s)
    for (const auto& [mu, s1] : fc.facets_of[s])
      for (const auto& [tau, s2] : fc.facets_of[mu])
        square[{tau, s}] += static_cast<long long>(s1) * s2;
  for (const auto& [key, val] : square)
    if (val != 0)
      throw SignConsistencyFailure("boundary of boundary is not zero");
}

}  // namespace

QVec orientation_wedge(const Cell& c) {
  std::vector<QVec> vs;
  vs.reserve(c.rays.size());
  for (const auto& r : c.rays) vs.push_back(to_qvec(r));
  return wedge_of(vs, static_cast<int>(c.coords.size()));
}

std::vector<IVec> orientation_order(std::vector<IVec> rays) {
  auto keyed = [](const IVec& v) {
    return std::make_tuple(ray_type(v) < 0 ? 1 : 0,
                           ray_type(v) < 0 ? -support_size(v) : first_support(v),
                           v);
  };
  std::sort(rays.begin(), rays.end(),
            [&](const IVec& a, const IVec& b) { return keyed(a) < keyed(b); });
  return rays;
}

int FaceComplex::cell_at(const OrbitLabel& orbit, std::vector<IVec> rays) const {
  std::sort(rays.begin(), rays.end());
  auto it = index.find({orbit, rays});
  if (it == index.end()) throw NotAFaceRelation("expected face cell is missing");
  return it->second;
}

int FaceComplex::top_dim() const {
  int d = 0;
  for (const auto& c : cells) d = std::max(d, c.dim());
  return d;
}

FaceComplex build_face_complex(const Matroid& m) {
  int n = m.n();
  Fan aug = build_augmented(m);
  FaceComplex fc;
  fc.n = n;
  for (const auto& cone : aug.cones) {
    CompatiblePair cp = pair_of_cone(aug, cone, m);
    auto closure = closure_cells_of_cone(aug.cone_rays(cone), n);
    std::set<OrbitLabel> expected;
    for (Mask J = cp.I;; J = (J - 1) & cp.I) {
      expected.insert(OrbitLabel{J, 0});
      for (Mask F : cp.flag) expected.insert(OrbitLabel{J, m.full_mask() & ~F});
      if (J == 0) break;
    }
    std::set<OrbitLabel> found;
    for (const auto& cc : closure) found.insert(cc.orbit);
    if (expected != found)
      throw NotAdmissible("orbit census of a cone disagrees with its pair");
    for (const auto& cc : closure) {
      std::vector<IVec> key = cc.rays;
      std::sort(key.begin(), key.end());
      auto mk = std::make_pair(cc.orbit, key);
      if (fc.index.count(mk)) continue;
      Cell cell;
      cell.orbit = cc.orbit;
      cell.rays = orientation_order(cc.rays);
      for (int e = 0; e < n; ++e)
        if (!((cc.orbit.J | cc.orbit.K) & (Mask(1) << e))) cell.coords.push_back(e);
      fc.index.emplace(mk, static_cast<int>(fc.cells.size()));
      fc.cells.push_back(std::move(cell));
    }
  }
  finish_complex(fc);
  return fc;
}

FaceComplex fan_as_complex(const Fan& f) {
  FaceComplex fc;
  fc.n = f.ambient;
  std::vector<int> all_coords;
  for (int e = 0; e < f.ambient; ++e) all_coords.push_back(e);
  for (const auto& cone : f.cones) {
    auto rays = f.cone_rays(cone);
    std::vector<IVec> key = rays;
    std::sort(key.begin(), key.end());
    auto mk = std::make_pair(OrbitLabel{0, 0}, key);
    if (fc.index.count(mk)) continue;
    Cell cell;
    cell.orbit = OrbitLabel{0, 0};
    cell.rays = orientation_order(rays);
    cell.coords = all_coords;
    fc.index.emplace(mk, static_cast<int>(fc.cells.size()));
    fc.cells.push_back(std::move(cell));
  }
  // orbit at finite distance only: no projection covers exist
  for (int s = 0; s < static_cast<int>(fc.cells.size()); ++s) {
    const Cell sig = fc.cells[s];
    for (int j = 0; j < sig.dim(); ++j) {
      std::vector<IVec> sub;
      for (int i = 0; i < sig.dim(); ++i)
        if (i != j) sub.push_back(sig.rays[i]);
      int t = fc.cell_at(sig.orbit, sub);
      fc.covers.push_back(Cover{t, s, ((sig.dim() - 1 - j) % 2 == 0) ? 1 : -1});
    }
  }
  fc.facets_of.assign(fc.cells.size(), {});
  for (const auto& cv : fc.covers)
    fc.facets_of[cv.sigma].push_back({cv.tau, cv.sign});
  std::map<std::pair<int, int>, long long> square;
  for (int s = 0; s < static_cast<int>(fc.cells.size()); ++s)
    for (const auto& [mu, s1] : fc.facets_of[s])
      for (const auto& [tau, s2] : fc.facets_of[mu])
        square[{tau, s}] += static_cast<long long>(s1) * s2;
  for (const auto& [key, val] : square)
    if (val != 0) throw SignConsistencyFailure("boundary of boundary is not zero");
  return fc;
}

std::vector<Stratum> stratification(const FaceComplex& fc, const Matroid& m) {
  std::map<AdmissiblePair, std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(fc.cells.size()); ++i) {
    const Cell& c = fc.cells[i];
    AdmissiblePair p;
    p.I = c.orbit.J;
    p.F = m.full_mask() & ~c.orbit.K;
    if (!m.is_flat(p.F) || !m.is_independent(p.I) || (p.I & ~p.F) != 0)
      throw NotAdmissible("orbit of a cell does not decode to an admissible pair");
    p.rank = m.rank_of(p.F) - popcount(p.I);
    groups[p].push_back(i);
  }
  std::vector<Stratum> out;
  for (auto& [p, cells] : groups) out.push_back(Stratum{p, std::move(cells)});
  return out;
}

bool stratum_census_check(const FaceComplex& fc, const Matroid& m) {
  auto strata = stratification(fc, m);
  auto pairs = admissible_pairs(m);
  if (strata.size() != pairs.size()) return false;
  for (size_t i = 0; i < pairs.size(); ++i)
    if (!(strata[i].pair == pairs[i])) return false;
  for (const auto& st : strata) {
    Matroid mi = minor(m, st.pair.I, st.pair.F);
    Fan f = build_augmented(mi);
    std::set<std::vector<IVec>> cone_keys, cell_keys;
    for (const auto& cone : f.cones) {
      auto rays = f.cone_rays(cone);
      std::sort(rays.begin(), rays.end());
      cone_keys.insert(rays);
    }
    for (int ci : st.cells) {
      auto rays = fc.cells[ci].rays;
      std::sort(rays.begin(), rays.end());
      cell_keys.insert(rays);
    }
    if (cell_keys.size() != st.cells.size()) return false;
    if (cone_keys != cell_keys) return false;
  }
  return true;
}

bool stratum_order_check(const FaceComplex& fc, const Matroid& m) {
  auto strata = stratification(fc, m);
  int ns = static_cast<int>(strata.size());
  std::vector<int> stratum_of(fc.cells.size(), -1);
  for (int s = 0; s < ns; ++s)
    for (int ci : strata[s].cells) stratum_of[ci] = s;
  std::vector<std::vector<bool>> reach(ns, std::vector<bool>(ns, false));
  for (int s = 0; s < ns; ++s) reach[s][s] = true;
  for (const auto& cv : fc.covers) reach[stratum_of[cv.sigma]][stratum_of[cv.tau]] = true;
  for (int k = 0; k < ns; ++k)
    for (int i = 0; i < ns; ++i)
      if (reach[i][k])
        for (int j = 0; j < ns; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b) {
      PairOrder rel = pair_order(strata[b].pair, strata[a].pair);
      bool expected = (rel == PairOrder::less || rel == PairOrder::equal);
      if (reach[a][b] != expected) return false;
    }
  return true;
}

std::vector<int> rank_filtration_census(const FaceComplex& fc, const Matroid& m) {
  std::vector<int> out(m.rank() + 1, 0);
  for (const auto& st : stratification(fc, m))
    out[st.pair.rank] += static_cast<int>(st.cells.size());
  return out;
}

}  // namespace tmsv
