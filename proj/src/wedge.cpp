#include "tmsv/wedge.hpp"

#include <algorithm>
#include <cassert>

#include "tmsv/errors.hpp"

namespace tmsv {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::vector<int>> increasing_subsets(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int subset_lex_rank(const std::vector<int>& s, int n) {
  const int p = static_cast<int>(s.size());
  long long r = 0;
  int prev = -1;
  for (int i = 0; i < p; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) r += binom(n - 1 - v, p - 1 - i);
    prev = s[i];
  }
  return static_cast<int>(r);
}

QVec wedge_vec(const QVec& v, const QVec& u, int n, int k) {
  auto subsets = increasing_subsets(n, k);
  QVec out(binom(n, k + 1), Rational(0));
  for (size_t si = 0; si < subsets.size(); ++si) {
    if (is_zero(u[si])) continue;
    const auto& s = subsets[si];
    for (int t = 0; t < n; ++t) {
      if (is_zero(v[t])) continue;
      if (std::binary_search(s.begin(), s.end(), t)) continue;
      std::vector<int> target = s;
      target.insert(std::upper_bound(target.begin(), target.end(), t), t);
      int below = static_cast<int>(std::lower_bound(s.begin(), s.end(), t) -
                                   s.begin());
      Rational term = v[t] * u[si];
      if (below % 2 != 0) term = -term;
      out[subset_lex_rank(target, n)] += term;
    }
  }
  return out;
}

QVec wedge_of(const std::vector<QVec>& vectors, int n) {
  QVec acc(1, Rational(1));
  int k = 0;
  for (const auto& v : vectors) {
    acc = wedge_vec(v, acc, n, k);
    ++k;
  }
  return acc;
}

std::vector<QVec> wedge_power_basis(const std::vector<QVec>& vectors, int p,
                                    int n) {
  std::vector<QVec> out;
  for (const auto& pick :
       increasing_subsets(static_cast<int>(vectors.size()), p)) {
    std::vector<QVec> chosen;
    chosen.reserve(pick.size());
    for (int i : pick) chosen.push_back(vectors[i]);
    out.push_back(wedge_of(chosen, n));
  }
  return out;
}

namespace {

// Parity of #{(a,b) : a ∈ A, b ∈ B, a > b} for sorted disjoint A, B; the sign
// of sorting the concatenation A ++ B.
int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b) {
  int inv = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

QVec contract(const QVec& alpha, const QVec& nu, int n, int p, int d) {
  if (p > d) throw DimensionMismatch("contract: covector degree exceeds vector degree");
  auto asub = increasing_subsets(n, p);
  auto bsub = increasing_subsets(n, d - p);
  QVec out(binom(n, d - p), Rational(0));
  for (size_t ai = 0; ai < asub.size(); ++ai) {
    if (is_zero(alpha[ai])) continue;
    const auto& A = asub[ai];
    for (size_t bi = 0; bi < bsub.size(); ++bi) {
      const auto& B = bsub[bi];
      std::vector<int> u;
      std::set_union(A.begin(), A.end(), B.begin(), B.end(),
                     std::back_inserter(u));
      if (static_cast<int>(u.size()) != d) continue;  // overlap
      const Rational& nq = nu[subset_lex_rank(u, n)];
      if (is_zero(nq)) continue;
      Rational term = alpha[ai] * nq;
      if (shuffle_sign(A, B) < 0) term = -term;
      out[bi] += term;
    }
  }
  return out;
}

QVec wedge_delete_coords(const QVec& u, int n, int k,
                         const std::vector<int>& keep) {
  std::vector<int> newpos(n, -1);
  for (size_t i = 0; i < keep.size(); ++i) newpos[keep[i]] = static_cast<int>(i);
  const int m = static_cast<int>(keep.size());
  auto subsets = increasing_subsets(n, k);
  QVec out(binom(m, k), Rational(0));
  for (size_t si = 0; si < subsets.size(); ++si) {
    if (is_zero(u[si])) continue;
    std::vector<int> img;
    img.reserve(k);
    bool alive = true;
    for (int x : subsets[si]) {
      if (newpos[x] < 0) {
        alive = false;
        break;
      }
      img.push_back(newpos[x]);
    }
    if (alive) out[subset_lex_rank(img, m)] += u[si];
  }
  return out;
}

}  // namespace tmsv
