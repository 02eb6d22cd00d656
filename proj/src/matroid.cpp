#include "tmsv/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "tmsv/errors.hpp"

namespace tmsv {

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; m >> i; ++i)
    if (m & (Mask(1) << i)) out.push_back(i);
  return out;
}

Mask mask_from_elements(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) m |= Mask(1) << e;
  return m;
}

int Matroid::rank_of(Mask s) const {
  if (s & ~full_mask()) throw ElementNotInGroundSet("rank_of");
  int best = 0;
  for (Mask b : bases) best = std::max(best, popcount(b & s));
  return best;
}

Mask Matroid::closure(Mask s) const {
  if (s & ~full_mask()) throw ElementNotInGroundSet("closure");
  const int r = rank_of(s);
  Mask cl = 0;
  for (int e = 0; e < n(); ++e) {
    Mask se = s | (Mask(1) << e);
    if (rank_of(se) == r) cl |= Mask(1) << e;
  }
  return cl;
}

bool Matroid::is_independent(Mask s) const { return rank_of(s) == popcount(s); }

bool Matroid::is_basis(Mask s) const {
  return std::binary_search(bases.begin(), bases.end(), s);
}

bool Matroid::is_flat(Mask s) const {
  return (s & ~full_mask()) == 0 && closure(s) == s;
}

int Matroid::element_index(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == label) return i;
  throw ElementNotInGroundSet(label);
}

Mask Matroid::mask_of(const std::vector<std::string>& elems) const {
  Mask m = 0;
  for (const auto& e : elems) m |= Mask(1) << element_index(e);
  return m;
}

std::string Matroid::set_name(Mask s) const {
  if (s == 0) return "∅";
  bool all_single = true;
  for (const auto& l : labels)
    if (l.size() != 1) all_single = false;
  std::string out;
  for (int e : mask_elements(s)) {
    if (!out.empty() && !all_single) out += ",";
    out += labels[e];
  }
  return out;
}

Matroid from_bases(std::vector<std::string> labels, std::vector<Mask> bases) {
  Matroid m;
  m.labels = std::move(labels);
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (bases.empty()) throw EmptyBases("a matroid needs at least one basis");
  const Mask full = m.full_mask();
  for (Mask b : bases)
    if (b & ~full) throw ElementNotInGroundSet("basis outside ground set");
  const int d = popcount(bases[0]);
  for (Mask b : bases)
    if (popcount(b) != d)
      throw UnequalCardinality("bases of sizes " + std::to_string(d) + " and " +
                               std::to_string(popcount(b)));
  m.bases = std::move(bases);
  m.rank_ = d;
  // Exchange axiom: for all A,B and a ∈ A∖B there is b ∈ B∖A with A-a+b a
  // basis.
  for (Mask A : m.bases)
    for (Mask B : m.bases) {
      if (A == B) continue;
      Mask AminusB = A & ~B;
      for (int a : mask_elements(AminusB)) {
        bool ok = false;
        for (int b : mask_elements(B & ~A)) {
          Mask cand = (A & ~(Mask(1) << a)) | (Mask(1) << b);
          if (std::binary_search(m.bases.begin(), m.bases.end(), cand)) {
            ok = true;
            break;
          }
        }
        if (!ok)
          throw ExchangeAxiomFailure("bases " + m.set_name(A) + " and " +
                                     m.set_name(B) + " fail at element " +
                                     m.labels[a]);
      }
    }
  m.loops_ = m.closure(0);
  return m;
}

Matroid from_bases(std::vector<std::string> labels,
                   const std::vector<std::vector<std::string>>& bases) {
  Matroid probe;
  probe.labels = labels;
  std::vector<Mask> bm;
  bm.reserve(bases.size());
  for (const auto& b : bases) bm.push_back(probe.mask_of(b));
  return from_bases(std::move(labels), std::move(bm));
}

FlatLattice flat_lattice(const Matroid& m) {
  FlatLattice L;
  const Mask full = m.full_mask();
  std::vector<Mask> flats;
  std::vector<bool> seen(static_cast<size_t>(full) + 1, false);
  for (Mask s = 0;; ++s) {
    Mask cl = m.closure(s);
    if (!seen[cl]) {
      seen[cl] = true;
      flats.push_back(cl);
    }
    if (s == full) break;
  }
  std::sort(flats.begin(), flats.end(), [&](Mask a, Mask b) {
    int ra = m.rank_of(a), rb = m.rank_of(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  L.flats = flats;
  for (Mask f : flats) L.flat_rank.push_back(m.rank_of(f));
  for (size_t i = 0; i < flats.size(); ++i) L.index_of[flats[i]] = static_cast<int>(i);
  const int nf = static_cast<int>(flats.size());
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j) {
      if (i == j) continue;
      if ((flats[i] & ~flats[j]) == 0 && L.flat_rank[j] == L.flat_rank[i] + 1)
        L.covers.emplace_back(i, j);
    }
  L.join_table.assign(nf, std::vector<int>(nf));
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j)
      L.join_table[i][j] = L.index_of.at(m.closure(flats[i] | flats[j]));
  // μ(bottom, F) by recursion over the containment order.
  L.mobius.assign(nf, Integer(0));
  L.mobius[0] = 1;
  for (int j = 1; j < nf; ++j) {
    Integer acc(0);
    for (int i = 0; i < nf; ++i)
      if (i != j && (flats[i] & ~flats[j]) == 0) acc += L.mobius[i];
    L.mobius[j] = -acc;
  }
  return L;
}

int FlatLattice::index(Mask f) const {
  auto it = index_of.find(f);
  if (it == index_of.end()) throw ElementNotInGroundSet("not a flat");
  return it->second;
}

bool FlatLattice::leq(int i, int j) const {
  return (flats[i] & ~flats[j]) == 0;
}

std::vector<long long> whitney_numbers(const Matroid& m) {
  FlatLattice L = flat_lattice(m);
  std::vector<long long> w(m.rank() + 1, 0);
  for (int r : L.flat_rank) ++w[r];
  return w;
}

std::vector<long long> f_vector(const Matroid& m) {
  std::vector<long long> f(m.rank() + 1, 0);
  const Mask full = m.full_mask();
  for (Mask s = 0;; ++s) {
    if (m.is_independent(s)) ++f[popcount(s)];
    if (s == full) break;
  }
  return f;
}

Matroid dual(const Matroid& m) {
  std::vector<Mask> co;
  co.reserve(m.bases.size());
  const Mask full = m.full_mask();
  for (Mask b : m.bases) co.push_back(full & ~b);
  return from_bases(m.labels, std::move(co));
}

Matroid free_extension(const Matroid& m) {
  std::string label = "0";
  bool clash = true;
  while (clash) {
    clash = false;
    for (const auto& l : m.labels)
      if (l == label) {
        clash = true;
        label += "'";
        break;
      }
  }
  std::vector<std::string> labels;
  labels.push_back(label);
  labels.insert(labels.end(), m.labels.begin(), m.labels.end());
  const int d = m.rank();
  std::vector<Mask> bases;
  for (Mask b : m.bases) bases.push_back(b << 1);
  // New element is free: I ∪ {0} is a basis for every independent I of size
  // d-1.
  const Mask full = m.full_mask();
  for (Mask s = 0;; ++s) {
    if (popcount(s) == d - 1 && m.is_independent(s))
      bases.push_back((s << 1) | 1);
    if (s == full) break;
  }
  return from_bases(std::move(labels), std::move(bases));
}

Matroid free_coextension(const Matroid& m) {
  return dual(free_extension(dual(m)));
}

Matroid minor(const Matroid& m, Mask I, Mask F) {
  if (!m.is_flat(F) || !m.is_independent(I) || (I & ~F))
    throw NotAdmissible("minor wants an independent set inside a flat");
  const std::vector<int> ground = mask_elements(F & ~I);
  std::vector<std::string> labels;
  for (int e : ground) labels.push_back(m.labels[e]);
  const int k = static_cast<int>(ground.size());
  const int d = m.rank_of(F) - popcount(I);
  std::vector<Mask> bases;
  for (Mask s = 0; s < (Mask(1) << k); ++s) {
    if (popcount(s) != d) continue;
    Mask amb = I;
    for (int i = 0; i < k; ++i)
      if (s & (Mask(1) << i)) amb |= Mask(1) << ground[i];
    if (m.rank_of(amb) == popcount(amb)) bases.push_back(s);
  }
  return from_bases(std::move(labels), std::move(bases));
}

std::vector<AdmissiblePair> admissible_pairs(const Matroid& m) {
  FlatLattice L = flat_lattice(m);
  std::vector<Mask> indeps;
  const Mask full = m.full_mask();
  for (Mask s = 0;; ++s) {
    if (m.is_independent(s)) indeps.push_back(s);
    if (s == full) break;
  }
  std::vector<AdmissiblePair> out;
  for (size_t fi = 0; fi < L.flats.size(); ++fi)
    for (Mask I : indeps)
      if ((I & ~L.flats[fi]) == 0)
        out.push_back({I, L.flats[fi], L.flat_rank[fi] - popcount(I)});
  std::sort(out.begin(), out.end());
  return out;
}

PairOrder pair_order(const AdmissiblePair& p1, const AdmissiblePair& p2) {
  // p1 ⪯ p2 iff p2.I ⊆ p1.I and p1.F ⊆ p2.F.
  const bool le = (p2.I & ~p1.I) == 0 && (p1.F & ~p2.F) == 0;
  const bool ge = (p1.I & ~p2.I) == 0 && (p2.F & ~p1.F) == 0;
  if (le && ge) return PairOrder::equal;
  if (le) return PairOrder::less;
  if (ge) return PairOrder::greater;
  return PairOrder::incomparable;
}

long long n_p_i(const Matroid& m, int p, int i) {
  if (p < 0 || i < 0) return 0;
  long long total = 0;
  for (const auto& pr : admissible_pairs(m)) {
    if (pr.rank != p + i) continue;
    // f^i of M(I,F): independent i-subsets S of F∖I with I∪S independent.
    const std::vector<int> ground = mask_elements(pr.F & ~pr.I);
    const int k = static_cast<int>(ground.size());
    for (Mask s = 0; s < (Mask(1) << k); ++s) {
      if (popcount(s) != i) continue;
      Mask amb = pr.I;
      for (int b = 0; b < k; ++b)
        if (s & (Mask(1) << b)) amb |= Mask(1) << ground[b];
      if (m.rank_of(amb) == popcount(amb)) ++total;
    }
  }
  return total;
}

long long N_p(const Matroid& m, int p) {
  long long acc = 0;
  for (int i = 0; p + i <= m.rank(); ++i)
    acc += (i % 2 == 0 ? 1 : -1) * n_p_i(m, p, i);
  return acc;
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  for (const auto& la : a.labels)
    for (const auto& lb : b.labels)
      if (la == lb) throw GroundSetOverlap(la);
  std::vector<std::string> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  std::vector<Mask> bases;
  for (Mask x : a.bases)
    for (Mask y : b.bases) bases.push_back(x | (y << a.n()));
  return from_bases(std::move(labels), std::move(bases));
}

Polynomial characteristic_polynomial(const Matroid& m) {
  FlatLattice L = flat_lattice(m);
  const int d = m.rank();
  std::vector<Rational> c(d + 1, Rational(0));
  for (size_t i = 0; i < L.flats.size(); ++i)
    c[d - L.flat_rank[i]] += Rational(L.mobius[i]);
  return Polynomial::from_coeffs(std::move(c));
}

Polynomial reduced_characteristic_polynomial(const Matroid& m) {
  if (m.loops() != 0)
    throw DivisionNotExact("characteristic polynomial of a matroid with loops");
  return divide_by_t_minus_1(characteristic_polynomial(m));
}

bool coext_f_identity_check(const Matroid& m) {
  const Polynomial chibar =
      reduced_characteristic_polynomial(free_coextension(m));
  const std::vector<long long> f = f_vector(m);
  const int d = m.rank();
  if (chibar.degree() != d) return false;
  for (int k = 0; k <= d; ++k) {
    Rational a = chibar.coeff(k);
    if (sgn(a) < 0) a = -a;
    if (a != Rational(static_cast<long>(f[d - k]))) return false;
  }
  return true;
}

}  // namespace tmsv
