#include "tmsv/bergman.hpp"

#include <algorithm>

#include "tmsv/errors.hpp"

namespace tmsv {

namespace {

void extend_chains(const std::vector<Mask>& flats, size_t start,
                   std::vector<Mask>& chain, Mask I,
                   std::vector<CompatiblePair>& out) {
  out.push_back(CompatiblePair{I, chain});
  for (size_t i = start; i < flats.size(); ++i) {
    if (!chain.empty() && (chain.back() & ~flats[i]) != 0) continue;
    if (!chain.empty() && chain.back() == flats[i]) continue;
    chain.push_back(flats[i]);
    extend_chains(flats, i + 1, chain, I, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<CompatiblePair> compatible_pairs(const Matroid& m) {
  FlatLattice L = flat_lattice(m);
  std::vector<CompatiblePair> out;
  for (Mask I = 0; I < (Mask(1) << m.n()); ++I) {
    if (!m.is_independent(I)) continue;
    std::vector<Mask> flats;  // proper flats containing I, by (rank, mask)
    for (const auto& F : L.flats)
      if (F != m.full_mask() && (I & ~F) == 0) flats.push_back(F);
    std::vector<Mask> chain;
    extend_chains(flats, 0, chain, I, out);
  }
  return out;
}

Fan build_augmented(const Matroid& m) {
  int n = m.n();
  Fan f;
  f.ambient = n;
  for (const auto& p : compatible_pairs(m)) {
    std::vector<int> ids;
    for (int i = 0; i < n; ++i)
      if (p.I & (Mask(1) << i)) {
        IVec v(n, 0);
        v[i] = 1;
        ids.push_back(f.add_ray(v));
      }
    for (Mask F : p.flag) {
      IVec v(n, 0);
      for (int t = 0; t < n; ++t)
        if (!(F & (Mask(1) << t))) v[t] = -1;
      ids.push_back(f.add_ray(v));
    }
    f.add_cone(ids);
  }
  if (!fan_is_simplicial(f))
    throw DimensionMismatch("augmented fan has a non-simplicial cone");
  if (f.max_dim() != m.rank())
    throw DimensionMismatch("augmented fan dimension vs matroid rank");
  for (const auto& c : f.cones) pair_of_cone(f, c, m);
  return f;
}

CompatiblePair pair_of_cone(const Fan& f, const Cone& c, const Matroid& m) {
  CompatiblePair p;
  for (int rid : c.rays) {
    const IVec& v = f.rays[rid];
    int pos = 0, neg = 0;
    Mask support = 0;
    for (int t = 0; t < static_cast<int>(v.size()); ++t) {
      if (v[t] > 0) ++pos;
      if (v[t] < 0) ++neg;
      if (v[t] != 0) support |= Mask(1) << t;
    }
    if (pos == 1 && neg == 0) {
      p.I |= support;
    } else if (pos == 0 && neg > 0) {
      p.flag.push_back(m.full_mask() & ~support);
    } else {
      throw NotAdmissible("cone ray is not a coordinate or flat ray");
    }
  }
  std::sort(p.flag.begin(), p.flag.end(),
            [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  if (!m.is_independent(p.I))
    throw NotAdmissible("positive rays of cone are not independent");
  Mask prev = 0;
  bool first = true;
  for (Mask F : p.flag) {
    if (!m.is_flat(F) || F == m.full_mask())
      throw NotAdmissible("negative ray does not name a proper flat");
    if ((p.I & ~F) != 0)
      throw NotAdmissible("flag flat does not contain the independent set");
    if (!first && ((prev & ~F) != 0 || prev == F))
      throw NotAdmissible("flag is not a strict chain");
    prev = F;
    first = false;
  }
  return p;
}

Fan build_bergman(const Matroid& m) {
  if (m.loops() != 0) throw HasLoops("fan of flat chains needs a loopless matroid");
  int n = m.n();
  FlatLattice L = flat_lattice(m);
  std::vector<Mask> proper;
  for (const auto& F : L.flats)
    if (F != 0 && F != m.full_mask()) proper.push_back(F);
  Fan f;
  f.ambient = n - 1;
  auto ray_of = [&](Mask F) {
    IVec v(n - 1, 0);
    if (F & (Mask(1) << (n - 1))) {
      for (int t = 0; t < n - 1; ++t)
        if (!(F & (Mask(1) << t))) v[t] = -1;
    } else {
      for (int t = 0; t < n - 1; ++t)
        if (F & (Mask(1) << t)) v[t] = 1;
    }
    return v;
  };
  std::vector<CompatiblePair> chains;
  std::vector<Mask> chain;
  extend_chains(proper, 0, chain, 0, chains);
  for (const auto& ch : chains) {
    std::vector<int> ids;
    for (Mask F : ch.flag) ids.push_back(f.add_ray(ray_of(F)));
    f.add_cone(ids);
  }
  if (!fan_is_simplicial(f))
    throw DimensionMismatch("flat-chain fan has a non-simplicial cone");
  return f;
}

QVec gamma_map(const QVec& sliced) {
  int n = static_cast<int>(sliced.size());
  QVec y(n);
  for (int i = 0; i < n; ++i) {
    Rational ai = (i + 1 < n) ? sliced[i + 1] : Rational(0);
    y[i] = ai - sliced[0];
  }
  return y;
}

namespace {

std::vector<QVec> cone_samples(const Fan& f, const Cone& c) {
  std::vector<QVec> out;
  QVec bary(f.ambient, Rational(0)), weighted(f.ambient, Rational(0));
  int w = 1;
  for (int rid : c.rays) {
    QVec r(f.ambient);
    for (int t = 0; t < f.ambient; ++t) r[t] = Rational(f.rays[rid][t]);
    for (int t = 0; t < f.ambient; ++t) {
      bary[t] += r[t];
      weighted[t] += Rational(w) * r[t];
    }
    ++w;
    out.push_back(std::move(r));
  }
  out.push_back(std::move(bary));
  out.push_back(std::move(weighted));
  return out;
}

}  // namespace

bool support_identification_check(const Matroid& m) {
  int n = m.n();
  Fan aug = build_augmented(m);
  Matroid mt = free_coextension(m);
  Fan berg = build_bergman(mt);
  if (berg.ambient != n)
    throw DimensionMismatch("coextension fan slice vs ground set");
  for (const auto& c : berg.cones)
    for (const auto& s : cone_samples(berg, c))
      if (!fan_contains_point(aug, gamma_map(s))) return false;
  for (const auto& c : aug.cones)
    for (const auto& s : cone_samples(aug, c)) {
      QVec u(n);
      Rational last = s[n - 1];
      u[0] = -last;
      for (int t = 1; t < n; ++t) u[t] = s[t - 1] - last;
      if (!fan_contains_point(berg, u)) return false;
    }
  return true;
}

}  // namespace tmsv
