#include "tmsv/spectral.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "tmsv/errors.hpp"

namespace tmsv {

namespace {

int sign_below(Mask S, int x) {
  return popcount(S & ((Mask(1) << x) - 1)) % 2 == 0 ? 1 : -1;
}

QVec apply_matrix(const Matrix& m, const QVec& x) {
  QVec y(m.rows, Rational(0));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (!is_zero(m.at(r, c))) y[r] += m.at(r, c) * x[c];
  return y;
}

}  // namespace

E1Page e1_page(const Matroid& m, int p) {
  E1Page page;
  page.p = p;
  int rk = m.rank();
  page.basis.assign(rk + 1, {});
  for (const auto& pr : admissible_pairs(m)) {
    int ssize = pr.rank - p;
    if (ssize < 0) continue;
    Mask free_elems = pr.F & ~pr.I;
    for (Mask S = 0; S < (Mask(1) << m.n()); ++S) {
      if ((S & ~free_elems) != 0) continue;
      if (popcount(S) != ssize) continue;
      if (!m.is_independent(pr.I | S)) continue;
      page.basis[pr.rank].push_back(PageBasis{pr.I, pr.F, S});
    }
  }
  std::map<std::tuple<Mask, Mask, Mask>, std::pair<int, int>> pos;
  for (int a = 0; a <= rk; ++a)
    for (size_t i = 0; i < page.basis[a].size(); ++i) {
      const auto& b = page.basis[a][i];
      pos[{b.I, b.F, b.S}] = {a, static_cast<int>(i)};
    }
  FlatLattice L = flat_lattice(m);
  auto target = [&](int a, Mask I, Mask F, Mask S) {
    auto it = pos.find({I, F, S});
    if (it == pos.end() || it->second.first != a + 1)
      throw DecompositionFailure("page differential target is not a basis vector");
    return it->second.second;
  };
  for (int a = 0; a < rk; ++a) {
    Matrix d(static_cast<int>(page.basis[a + 1].size()),
             static_cast<int>(page.basis[a].size()));
    for (size_t col = 0; col < page.basis[a].size(); ++col) {
      const auto& b = page.basis[a][col];
      for (int j : mask_elements(b.I)) {
        int row = target(a, b.I & ~(Mask(1) << j), b.F, b.S | (Mask(1) << j));
        d.at(row, static_cast<int>(col)) += Rational(-sign_below(b.S, j));
      }
      int fi = L.index(b.F);
      for (const auto& [lo, hi] : L.covers) {
        if (lo != fi) continue;
        Mask Fup = L.flats[hi];
        for (int t : mask_elements(Fup & ~b.F)) {
          if (b.S & (Mask(1) << t)) continue;
          int row = target(a, b.I, Fup, b.S | (Mask(1) << t));
          d.at(row, static_cast<int>(col)) += Rational(sign_below(b.S, t));
        }
      }
    }
    page.d1.push_back(std::move(d));
  }
  return page;
}

bool d1_squared_zero(const E1Page& page) {
  for (size_t a = 0; a + 1 < page.d1.size(); ++a)
    if (!(page.d1[a + 1] * page.d1[a]).is_zero()) return false;
  return true;
}

std::vector<int> e2_dims(const E1Page& page) {
  int rk = static_cast<int>(page.basis.size()) - 1;
  std::vector<int> ranks(rk + 1, 0);
  for (int a = 0; a < rk; ++a) ranks[a] = rank(page.d1[a]);
  std::vector<int> h(rk + 1, 0);
  for (int a = 0; a <= rk; ++a) {
    int out = (a < rk) ? ranks[a] : 0;
    int in = (a > 0) ? ranks[a - 1] : 0;
    h[a] = static_cast<int>(page.basis[a].size()) - out - in;
  }
  return h;
}

bool euler_check(const Matroid& m, int p) {
  E1Page page = e1_page(m, p);
  long long sum = 0;
  for (size_t a = 0; a < page.basis.size(); ++a) {
    long long dim = static_cast<long long>(page.basis[a].size());
    sum += ((static_cast<int>(a) - p) % 2 == 0) ? dim : -dim;
  }
  auto W = whitney_numbers(m);
  return sum == W[p];
}

bool e1_honest_check(const FaceComplex& fc, const Matroid& m, int p) {
  E1Page page = e1_page(m, p);
  std::map<std::pair<Mask, Mask>, int> expected;
  for (const auto& col : page.basis)
    for (const auto& b : col) expected[{b.I, b.F}] += 1;
  for (const auto& st : stratification(fc, m)) {
    auto cc = cochain_complex(fc, st.cells, p);
    int a = st.pair.rank;
    if (cc.top != a) return false;
    auto h = cohomology_dims(cc);
    auto it = expected.find({st.pair.I, st.pair.F});
    int want = (it == expected.end()) ? 0 : it->second;
    for (int q = 0; q <= a; ++q)
      if (h[q] != ((q == a) ? want : 0)) return false;
  }
  return true;
}

namespace {

// Map a stratum-complex coordinate of degree q to the full-complex
// coordinate of the same basis vector.
int to_global(const CochainComplex& full, const CochainComplex& str, int q,
              int coord) {
  int block = 0;
  while (block + 1 < static_cast<int>(str.offsets[q].size()) &&
         str.offsets[q][block + 1] <= coord)
    ++block;
  int cell = str.cells_by_dim[q][block];
  int vecidx = coord - str.offsets[q][block];
  int fb = full.block_of(q, cell);
  if (full.bases[q][fb].size() != str.bases[q][block].size())
    throw DimensionMismatch("coefficient bases differ between views");
  return full.offsets[q][fb] + vecidx;
}

std::vector<QVec> matrix_columns(const Matrix& m) {
  std::vector<QVec> cols(m.cols, QVec(m.rows));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) cols[c][r] = m.at(r, c);
  return cols;
}

}  // namespace

int honest_d1_rank(const FaceComplex& fc, const Matroid& m, int p, int a) {
  if (a + 1 > m.rank()) return 0;
  CochainComplex full = cochain_complex(fc, p);
  auto strata = stratification(fc, m);
  struct Target {
    CochainComplex cc;
    std::vector<QVec> img;
    std::vector<int> nonpivot;
  };
  std::vector<Target> targets;
  for (const auto& st : strata) {
    if (st.pair.rank != a + 1) continue;
    Target t{cochain_complex(fc, st.cells, p), {}, {}};
    t.img = span_basis(matrix_columns(t.cc.d[a]));
    t.nonpivot = nonpivot_coords(t.img, t.cc.total[a + 1]);
    targets.push_back(std::move(t));
  }
  std::vector<QVec> columns;
  for (const auto& st : strata) {
    if (st.pair.rank != a) continue;
    CochainComplex src = cochain_complex(fc, st.cells, p);
    std::vector<QVec> img;
    if (a > 0) img = span_basis(matrix_columns(src.d[a - 1]));
    auto reps = nonpivot_coords(img, src.total[a]);
    for (int rep : reps) {
      QVec x(full.total[a], Rational(0));
      x[to_global(full, src, a, rep)] = 1;
      QVec y = (a < full.top) ? apply_matrix(full.d[a], x) : QVec(0);
      QVec column;
      for (const auto& t : targets) {
        QVec ystr(t.cc.total[a + 1], Rational(0));
        if (!y.empty())
          for (int c = 0; c < t.cc.total[a + 1]; ++c)
            ystr[c] = y[to_global(full, t.cc, a + 1, c)];
        for (auto& v : quotient_coords(t.img, t.nonpivot, ystr))
          column.push_back(std::move(v));
      }
      columns.push_back(std::move(column));
    }
  }
  if (columns.empty() || columns[0].empty()) return 0;
  return rank(Matrix::from_cols(columns));
}

bool koszul_check(const Matroid& m, int p) {
  FlatLattice L = flat_lattice(m);
  E1Page page = e1_page(m, p);
  long long total_basis = 0;
  for (const auto& col : page.basis) total_basis += static_cast<long long>(col.size());
  long long covered = 0, zero_blocks = 0;
  for (size_t fi = 0; fi < L.flats.size(); ++fi) {
    Mask F = L.flats[fi];
    int k = L.flat_rank[fi] - p;
    if (k < 0) continue;
    for (Mask J = 0; J < (Mask(1) << m.n()); ++J) {
      if ((J & ~F) != 0 || popcount(J) != k) continue;
      if (!m.is_independent(J)) continue;
      covered += 1LL << k;
      if (k == 0) {
        ++zero_blocks;
        continue;
      }
      auto elems = mask_elements(J);
      std::vector<std::vector<Mask>> grade(k + 1);
      for (Mask S = 0;; S = ((S | ~J) + 1) & J) {
        grade[popcount(S)].push_back(S);
        if (S == J) break;
      }
      std::vector<int> ranks(k, 0);
      for (int s = 0; s < k; ++s) {
        Matrix d(static_cast<int>(grade[s + 1].size()),
                 static_cast<int>(grade[s].size()));
        for (size_t col = 0; col < grade[s].size(); ++col) {
          Mask S = grade[s][col];
          for (int j : elems) {
            if (S & (Mask(1) << j)) continue;
            Mask Sj = S | (Mask(1) << j);
            auto it = std::find(grade[s + 1].begin(), grade[s + 1].end(), Sj);
            d.at(static_cast<int>(it - grade[s + 1].begin()),
                 static_cast<int>(col)) = Rational(-sign_below(S, j));
          }
        }
        ranks[s] = rank(d);
      }
      for (int s = 0; s <= k; ++s) {
        long long out = (s < k) ? ranks[s] : 0;
        long long in = (s > 0) ? ranks[s - 1] : 0;
        if (static_cast<long long>(grade[s].size()) - out - in != 0) return false;
      }
    }
  }
  if (covered != total_basis)
    throw DecompositionFailure("page basis does not split into the blocks");
  return zero_blocks == whitney_numbers(m)[p];
}

}  // namespace tmsv
