#include "tmsv/cohomology.hpp"

#include <algorithm>

#include "tmsv/errors.hpp"
#include "tmsv/wedge.hpp"

namespace tmsv {

namespace {

QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return q;
}

bool subset_rays(const std::vector<IVec>& small, const std::vector<IVec>& big) {
  for (const auto& r : small)
    if (std::find(big.begin(), big.end(), r) == big.end()) return false;
  return true;
}

// positions of tau's coordinates inside sigma's coordinate list
std::vector<int> keep_positions(const Cell& sig, const Cell& tau) {
  std::vector<int> keep;
  size_t j = 0;
  for (size_t i = 0; i < sig.coords.size(); ++i) {
    if (j < tau.coords.size() && sig.coords[i] == tau.coords[j]) {
      keep.push_back(static_cast<int>(i));
      ++j;
    }
  }
  if (j != tau.coords.size())
    throw DimensionMismatch("face coordinates are not a subset");
  return keep;
}

}  // namespace

std::vector<QVec> multi_tangent_basis(const FaceComplex& fc, int cell, int p) {
  const Cell& c = fc.cells[cell];
  int m = static_cast<int>(c.coords.size());
  std::vector<QVec> gens;
  for (const auto& d : fc.cells) {
    if (!(d.orbit == c.orbit)) continue;
    if (!subset_rays(c.rays, d.rays)) continue;
    std::vector<QVec> rays;
    rays.reserve(d.rays.size());
    for (const auto& r : d.rays) rays.push_back(to_qvec(r));
    for (auto& w : wedge_power_basis(rays, p, m)) gens.push_back(std::move(w));
  }
  return span_basis(gens);
}

int CochainComplex::block_of(int q, int cell) const {
  const auto& v = cells_by_dim[q];
  auto it = std::find(v.begin(), v.end(), cell);
  if (it == v.end()) throw NotAFaceRelation("cell is not in this complex");
  return static_cast<int>(it - v.begin());
}

CochainComplex cochain_complex(const FaceComplex& fc,
                               const std::vector<int>& cell_subset, int p) {
  CochainComplex cc;
  cc.p = p;
  cc.top = 0;
  std::vector<char> in_subset(fc.cells.size(), 0);
  for (int ci : cell_subset) {
    in_subset[ci] = 1;
    cc.top = std::max(cc.top, fc.cells[ci].dim());
  }
  cc.cells_by_dim.assign(cc.top + 1, {});
  for (int ci : cell_subset) cc.cells_by_dim[fc.cells[ci].dim()].push_back(ci);
  for (auto& v : cc.cells_by_dim) std::sort(v.begin(), v.end());
  cc.offsets.assign(cc.top + 1, {});
  cc.total.assign(cc.top + 1, 0);
  cc.bases.assign(cc.top + 1, {});
  for (int q = 0; q <= cc.top; ++q) {
    for (int ci : cc.cells_by_dim[q]) {
      auto b = multi_tangent_basis(fc, ci, p);
      cc.offsets[q].push_back(cc.total[q]);
      cc.total[q] += static_cast<int>(b.size());
      cc.bases[q].push_back(std::move(b));
    }
  }
  cc.d.clear();
  for (int q = 0; q < cc.top; ++q) cc.d.push_back(Matrix(cc.total[q + 1], cc.total[q]));
  for (const auto& cv : fc.covers) {
    if (!in_subset[cv.tau] || !in_subset[cv.sigma]) continue;
    const Cell& tau = fc.cells[cv.tau];
    const Cell& sig = fc.cells[cv.sigma];
    int q = tau.dim();
    int bt = cc.block_of(q, cv.tau);
    int bs = cc.block_of(q + 1, cv.sigma);
    const auto& tb = cc.bases[q][bt];
    const auto& sb = cc.bases[q + 1][bs];
    if (sb.empty()) continue;
    std::vector<QVec> mapped;
    if (tau.orbit == sig.orbit) {
      mapped = sb;
    } else {
      auto keep = keep_positions(sig, tau);
      int ms = static_cast<int>(sig.coords.size());
      mapped.reserve(sb.size());
      for (const auto& w : sb)
        mapped.push_back(wedge_delete_coords(w, ms, p, keep));
    }
    if (tb.empty()) {
      for (const auto& w : mapped)
        for (const auto& x : w)
          if (!is_zero(x))
            throw SupportNotContained("coefficient image misses the face space");
      continue;
    }
    Matrix A = coords_in_basis(tb, mapped);  // dim F_p(tau) × dim F_p(sigma)
    for (int r = 0; r < A.rows; ++r)
      for (int c = 0; c < A.cols; ++c)
        cc.d[q].at(cc.offsets[q + 1][bs] + c, cc.offsets[q][bt] + r) =
            Rational(cv.sign) * A.at(r, c);
  }
  return cc;
}

CochainComplex cochain_complex(const FaceComplex& fc, int p) {
  std::vector<int> all(fc.cells.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return cochain_complex(fc, all, p);
}

std::vector<int> cohomology_dims(const CochainComplex& cc) {
  std::vector<int> ranks(cc.top + 1, 0);
  for (int q = 0; q < cc.top; ++q) ranks[q] = rank(cc.d[q]);
  std::vector<int> h(cc.top + 1, 0);
  for (int q = 0; q <= cc.top; ++q) {
    int below = (q > 0) ? ranks[q - 1] : 0;
    int here = (q < cc.top) ? ranks[q] : 0;
    h[q] = cc.total[q] - here - below;
  }
  return h;
}

std::vector<std::vector<int>> cohomology_table(const FaceComplex& fc, int pmax) {
  std::vector<std::vector<int>> table;
  for (int p = 0; p <= pmax; ++p)
    table.push_back(cohomology_dims(cochain_complex(fc, p)));
  return table;
}

std::vector<std::vector<int>> fan_hc_table(const Fan& f, int pmax) {
  return cohomology_table(fan_as_complex(f), pmax);
}

bool fan_pd_check(const Matroid& m) {
  int top = m.rank();
  auto table = fan_hc_table(build_augmented(m), top);
  auto f = f_vector(m);
  for (int p = 0; p <= top; ++p)
    for (int q = 0; q < static_cast<int>(table[p].size()); ++q) {
      long long expected = (q == top) ? f[top - p] : 0;
      if (table[p][q] != expected) return false;
    }
  return true;
}

void check_balanced(const FaceComplex& fc) {
  int d = fc.top_dim();
  if (d == 0) return;
  for (int t = 0; t < static_cast<int>(fc.cells.size()); ++t) {
    const Cell& tau = fc.cells[t];
    if (tau.dim() != d - 1) continue;
    int mt = static_cast<int>(tau.coords.size());
    QVec sum(binom(mt, d), Rational(0));
    for (const auto& cv : fc.covers) {
      if (cv.tau != t) continue;
      const Cell& sig = fc.cells[cv.sigma];
      if (sig.dim() != d) continue;
      QVec nu = orientation_wedge(sig);
      if (!(sig.orbit == tau.orbit)) {
        auto keep = keep_positions(sig, tau);
        nu = wedge_delete_coords(nu, static_cast<int>(sig.coords.size()), d, keep);
      }
      for (size_t i = 0; i < sum.size(); ++i) sum[i] += Rational(cv.sign) * nu[i];
    }
    for (const auto& q : sum)
      if (!is_zero(q)) throw NotBalanced("top cycle has a nonzero boundary facet");
  }
}

}  // namespace tmsv
