#include "tmsv/algebras.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tmsv/bergman.hpp"
#include "tmsv/errors.hpp"
#include "tmsv/wedge.hpp"

namespace tmsv {

namespace {

Rational det(Matrix w) {
  if (w.rows != w.cols) throw DimensionMismatch("determinant of a non-square matrix");
  Rational d = 1;
  for (int col = 0; col < w.cols; ++col) {
    int pr = -1;
    for (int r = col; r < w.rows; ++r)
      if (!is_zero(w.at(r, col))) {
        pr = r;
        break;
      }
    if (pr < 0) return Rational(0);
    if (pr != col) {
      for (int c = col; c < w.cols; ++c) std::swap(w.at(pr, c), w.at(col, c));
      d = -d;
    }
    d *= w.at(col, col);
    for (int r = col + 1; r < w.rows; ++r) {
      if (is_zero(w.at(r, col))) continue;
      const Rational f = w.at(r, col) / w.at(col, col);
      for (int c = col; c < w.cols; ++c) w.at(r, c) -= f * w.at(col, c);
    }
  }
  return d;
}

// Each cone's rays must extend to a basis of the integer lattice: the gcd of
// the maximal minors of the ray matrix is 1.
void require_unimodular(const Fan& f) {
  for (const auto& c : f.cones) {
    const int k = c.dim();
    if (k == 0) continue;
    auto rays = f.cone_rays(c);
    Integer g = 0;
    for (const auto& cols : increasing_subsets(f.ambient, k)) {
      Matrix w(k, k);
      for (int r = 0; r < k; ++r)
        for (int j = 0; j < k; ++j) w.at(r, j) = rays[r][cols[j]];
      g = gcd(g, Integer(det(w).get_num()));
    }
    if (g != 1) throw NotUnimodular("cone rays do not extend to a lattice basis");
  }
}

// Monomials of degree k whose support spans a cone, as exponent vectors in
// lex order of the non-decreasing ray multisets. Supersets of non-faces are
// non-faces, so pruning on the running support is sound.
void gen_monomials(const Fan& f, int k, int start, std::vector<int>& cur,
                   std::vector<int>& support,
                   std::vector<std::vector<int>>& out) {
  const int nrays = static_cast<int>(f.rays.size());
  if (static_cast<int>(cur.size()) == k) {
    std::vector<int> expo(nrays, 0);
    for (int r : cur) ++expo[r];
    out.push_back(std::move(expo));
    return;
  }
  for (int r = start; r < nrays; ++r) {
    const bool extends = support.empty() || support.back() != r;
    if (extends) {
      support.push_back(r);
      if (!f.has_cone(support)) {
        support.pop_back();
        continue;
      }
    }
    cur.push_back(r);
    gen_monomials(f, k, r, cur, support, out);
    cur.pop_back();
    if (extends) support.pop_back();
  }
}

bool vec_is_zero(const QVec& v) {
  for (const auto& q : v)
    if (!is_zero(q)) return false;
  return true;
}

// Image of a monomial under the substitution ray r ↦ images[r] (a linear
// form over the target's rays), in target monomial coordinates.
QVec substitute_monomial(const std::vector<int>& expo,
                         const std::vector<QVec>& images,
                         const ChowRing& target) {
  const int deg = std::accumulate(expo.begin(), expo.end(), 0);
  std::map<std::vector<int>, Rational> acc;
  acc[std::vector<int>(target.nrays, 0)] = 1;
  for (int r = 0; r < static_cast<int>(expo.size()); ++r)
    for (int rep = 0; rep < expo[r]; ++rep) {
      std::map<std::vector<int>, Rational> next;
      for (const auto& [mono, coeff] : acc)
        for (int t = 0; t < target.nrays; ++t) {
          if (is_zero(images[r][t])) continue;
          auto key = mono;
          ++key[t];
          next[key] += coeff * images[r][t];
        }
      acc = std::move(next);
    }
  QVec out(target.monos[deg].size(), Rational(0));
  for (const auto& [mono, coeff] : acc) {
    auto it = target.mono_index[deg].find(mono);
    if (it != target.mono_index[deg].end()) out[it->second] = coeff;
  }
  return out;
}

}  // namespace

MobiusAlgebra mobius_algebra(const Matroid& m) {
  return {flat_lattice(m), whitney_numbers(m)};
}

QVec ChowRing::reduce(int k, const QVec& v) const {
  if (k < 0 || k > kmax) throw DimensionMismatch("degree outside the computed range");
  if (v.size() != monos[k].size())
    throw DimensionMismatch("monomial coordinate count");
  return quotient_coords(rel[k], basis[k], v);
}

QVec ChowRing::multiply(int k1, const QVec& c1, int k2, const QVec& c2) const {
  const int k = k1 + k2;
  if (k > kmax) throw DimensionMismatch("product degree exceeds the computed range");
  QVec prod(monos[k].size(), Rational(0));
  for (int i = 0; i < dim(k1); ++i) {
    if (is_zero(c1[i])) continue;
    const auto& ei = monos[k1][basis[k1][i]];
    for (int j = 0; j < dim(k2); ++j) {
      if (is_zero(c2[j])) continue;
      const auto& ej = monos[k2][basis[k2][j]];
      std::vector<int> expo(nrays);
      for (int r = 0; r < nrays; ++r) expo[r] = ei[r] + ej[r];
      auto it = mono_index[k].find(expo);
      if (it != mono_index[k].end()) prod[it->second] += c1[i] * c2[j];
    }
  }
  return reduce(k, prod);
}

QVec ChowRing::generator_class(int ray) const {
  QVec v(monos[1].size(), Rational(0));
  v[ray] = 1;
  return reduce(1, v);
}

ChowRing chow_ring(const Fan& f, int kmax) {
  require_unimodular(f);
  ChowRing a;
  a.fan = f;
  a.kmax = kmax;
  a.nrays = static_cast<int>(f.rays.size());
  a.monos.resize(kmax + 1);
  a.mono_index.resize(kmax + 1);
  a.rel.resize(kmax + 1);
  a.basis.resize(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    std::vector<int> cur, support;
    gen_monomials(f, k, 0, cur, support, a.monos[k]);
    for (int i = 0; i < static_cast<int>(a.monos[k].size()); ++i)
      a.mono_index[k][a.monos[k][i]] = i;
    const int nm = static_cast<int>(a.monos[k].size());
    std::vector<QVec> rows;
    if (k >= 1)
      for (int c = 0; c < f.ambient; ++c)
        for (const auto& beta : a.monos[k - 1]) {
          QVec row(nm, Rational(0));
          for (int r = 0; r < a.nrays; ++r) {
            if (f.rays[r][c] == 0) continue;
            auto expo = beta;
            ++expo[r];
            auto it = a.mono_index[k].find(expo);
            if (it != a.mono_index[k].end())
              row[it->second] += Rational(f.rays[r][c]);
          }
          if (!vec_is_zero(row)) rows.push_back(std::move(row));
        }
    a.rel[k] = span_basis(rows);
    a.basis[k] = nonpivot_coords(a.rel[k], nm);
  }
  return a;
}

QVec element_class(const ChowRing& a, const Matroid& m, int i) {
  if (m.loops() & (Mask(1) << i)) return QVec(a.dim(1), Rational(0));
  IVec e(a.fan.ambient, 0);
  e[i] = 1;
  return a.generator_class(a.fan.ray_index.at(e));
}

std::vector<std::vector<int>> minimal_nonfaces(const Fan& f) {
  const int nr = static_cast<int>(f.rays.size());
  const int md = f.max_dim();
  std::vector<std::vector<int>> out;
  for (int s = 2; s <= md + 1 && s <= nr; ++s)
    for (const auto& sub : increasing_subsets(nr, s)) {
      if (f.has_cone(sub)) continue;
      bool minimal = true;
      for (int drop = 0; drop < s && minimal; ++drop) {
        auto t = sub;
        t.erase(t.begin() + drop);
        if (!f.has_cone(t)) minimal = false;
      }
      if (minimal) out.push_back(sub);
    }
  return out;
}

std::vector<QVec> pullback_generators(const ChowRing& a, const Matroid& m) {
  std::vector<QVec> out;
  for (int i = 0; i < m.n(); ++i) out.push_back(element_class(a, m, i));
  return out;
}

SubalgebraReport subalgebra_hilbert_and_structure(const Matroid& m) {
  SubalgebraReport rep;
  const int rk = m.rank();
  ChowRing a = chow_ring(build_augmented(m), rk + 1);
  rep.whitney = whitney_numbers(m);
  rep.top_vanishes = a.dim(rk + 1) == 0 && a.dim(0) == 1;

  std::vector<QVec> y(m.n());
  for (int i = 0; i < m.n(); ++i) y[i] = element_class(a, m, i);

  // y_I for every subset with |I| <= rk+1, built off the lowest element.
  std::map<Mask, QVec> ycls;
  ycls[0] = a.reduce(0, QVec{Rational(1)});
  for (Mask s = 1; s <= m.full_mask(); ++s) {
    const int pc = popcount(s);
    if (pc > rk + 1) continue;
    const int low = mask_elements(s)[0];
    ycls[s] = a.multiply(pc - 1, ycls.at(s & (s - 1)), 1, y[low]);
  }

  FlatLattice lat = flat_lattice(m);
  std::vector<Mask> rep_of(lat.flats.size(), 0);
  for (size_t fi = 0; fi < lat.flats.size(); ++fi) {
    Mask cur = 0;
    for (int e : mask_elements(lat.flats[fi]))
      if (m.rank_of(cur | (Mask(1) << e)) > m.rank_of(cur)) cur |= Mask(1) << e;
    rep_of[fi] = cur;
  }

  bool ident = true;
  for (Mask s = 1; s <= m.full_mask(); ++s) {
    if (popcount(s) > rk + 1) continue;
    if (m.is_independent(s))
      ident = ident && ycls.at(s) == ycls.at(rep_of[lat.index(m.closure(s))]);
    else
      ident = ident && vec_is_zero(ycls.at(s));
  }
  rep.identification = ident;

  std::vector<QVec> flat_cls(lat.flats.size());
  for (size_t fi = 0; fi < lat.flats.size(); ++fi)
    flat_cls[fi] = ycls.at(rep_of[fi]);

  rep.subalgebra_dims.assign(rk + 1, 0);
  bool hm = true;
  for (int p = 0; p <= rk; ++p) {
    std::vector<QVec> rows;
    for (size_t fi = 0; fi < lat.flats.size(); ++fi)
      if (lat.flat_rank[fi] == p) rows.push_back(flat_cls[fi]);
    rep.subalgebra_dims[p] = a.dim(p) == 0 ? 0 : rank(Matrix::from_rows(rows));
    hm = hm && rep.subalgebra_dims[p] == static_cast<int>(rep.whitney[p]);
  }
  rep.hilbert_match = hm;

  bool sm = true;
  for (size_t fi = 0; fi < lat.flats.size(); ++fi)
    for (size_t gi = 0; gi < lat.flats.size(); ++gi) {
      const int p = lat.flat_rank[fi], q = lat.flat_rank[gi];
      if (p + q > rk + 1) continue;
      QVec prod = a.multiply(p, flat_cls[fi], q, flat_cls[gi]);
      const int j = lat.join_table[fi][gi];
      if (lat.flat_rank[j] == p + q)
        sm = sm && prod == flat_cls[j];
      else
        sm = sm && vec_is_zero(prod);
    }
  rep.structure_match = sm;
  return rep;
}

bool theorem2_verdict(const Matroid& m,
                      const std::vector<long long>& diagonal_dims) {
  SubalgebraReport rep = subalgebra_hilbert_and_structure(m);
  if (!rep.verdict()) return false;
  if (diagonal_dims.size() != rep.whitney.size()) return false;
  for (size_t p = 0; p < rep.whitney.size(); ++p)
    if (diagonal_dims[p] != rep.whitney[p]) return false;
  return true;
}

bool pullback_chain_check(const Matroid& m) {
  const int n = m.n();
  Fan coarse = pi1_power_fan(n);
  Matroid free_matroid = from_bases(m.labels, std::vector<Mask>{m.full_mask()});
  Fan mid = build_augmented(free_matroid);
  Fan fine = build_augmented(m);

  auto mnf_coarse = minimal_nonfaces(coarse);
  auto mnf_mid = minimal_nonfaces(mid);
  int deg_mid = 1, deg_fine = 1;
  for (const auto& s : mnf_coarse) deg_mid = std::max(deg_mid, static_cast<int>(s.size()));
  for (const auto& s : mnf_mid) deg_fine = std::max(deg_fine, static_cast<int>(s.size()));
  ChowRing amid = chow_ring(mid, deg_mid);
  ChowRing afine = chow_ring(fine, deg_fine);

  // Coarse ray classes evaluate on each finer ray through the cone that
  // contains it: the coefficients of the ray in that cone's generators.
  std::vector<QVec> phi(coarse.rays.size(), QVec(mid.rays.size(), Rational(0)));
  for (size_t t = 0; t < mid.rays.size(); ++t) {
    QVec pt(n);
    for (int c = 0; c < n; ++c) pt[c] = Rational(mid.rays[t][c]);
    bool placed = false;
    for (const auto& cone : coarse.cones) {
      auto rays = coarse.cone_rays(cone);
      if (!cone_contains_point(rays, pt)) continue;
      std::vector<QVec> gens;
      for (const auto& r : rays) {
        QVec g(n);
        for (int c = 0; c < n; ++c) g[c] = Rational(r[c]);
        gens.push_back(std::move(g));
      }
      auto coeffs = solve_in_span(gens, pt);
      if (!coeffs) continue;
      for (size_t j = 0; j < cone.rays.size(); ++j)
        phi[cone.rays[j]][t] = (*coeffs)[j];
      placed = true;
      break;
    }
    if (!placed) throw SupportNotContained("finer ray escapes the coarse fan");
  }

  std::vector<QVec> psi(mid.rays.size(), QVec(fine.rays.size(), Rational(0)));
  for (size_t r = 0; r < mid.rays.size(); ++r) {
    auto it = fine.ray_index.find(mid.rays[r]);
    if (it != fine.ray_index.end()) psi[r][it->second] = 1;
  }

  bool ok = true;

  // Linear relations map to linear relations.
  for (int c = 0; c < n; ++c) {
    QVec img_mid(mid.rays.size(), Rational(0));
    for (size_t rho = 0; rho < coarse.rays.size(); ++rho)
      if (coarse.rays[rho][c] != 0)
        for (size_t t = 0; t < mid.rays.size(); ++t)
          img_mid[t] += Rational(coarse.rays[rho][c]) * phi[rho][t];
    ok = ok && vec_is_zero(amid.reduce(1, img_mid));

    QVec img_fine(fine.rays.size(), Rational(0));
    for (size_t r = 0; r < mid.rays.size(); ++r)
      if (mid.rays[r][c] != 0)
        for (size_t t = 0; t < fine.rays.size(); ++t)
          img_fine[t] += Rational(mid.rays[r][c]) * psi[r][t];
    ok = ok && vec_is_zero(afine.reduce(1, img_fine));
  }

  // Monomials on non-faces map to zero.
  for (const auto& s : mnf_coarse) {
    std::vector<int> expo(coarse.rays.size(), 0);
    for (int r : s) expo[r] = 1;
    ok = ok && vec_is_zero(amid.reduce(static_cast<int>(s.size()),
                                       substitute_monomial(expo, phi, amid)));
  }
  for (const auto& s : mnf_mid) {
    std::vector<int> expo(mid.rays.size(), 0);
    for (int r : s) expo[r] = 1;
    ok = ok && vec_is_zero(afine.reduce(static_cast<int>(s.size()),
                                        substitute_monomial(expo, psi, afine)));
  }

  // The composite takes each coordinate hyperplane class to the element class.
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    const int rho = coarse.ray_index.at(e);
    QVec img(fine.rays.size(), Rational(0));
    for (size_t r = 0; r < mid.rays.size(); ++r)
      if (!is_zero(phi[rho][r]))
        for (size_t t = 0; t < fine.rays.size(); ++t)
          img[t] += phi[rho][r] * psi[r][t];
    ok = ok && afine.reduce(1, img) == element_class(afine, m, i);
  }
  return ok;
}

}  // namespace tmsv
