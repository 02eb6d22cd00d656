#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tmsv/bergman.hpp"
#include "tmsv/catalog.hpp"
#include "tmsv/errors.hpp"
#include "tmsv/matroid.hpp"

using namespace tmsv;

namespace {

std::map<int, int> cones_by_dim(const Fan& f) {
  std::map<int, int> h;
  for (const auto& c : f.cones) ++h[c.dim()];
  return h;
}

std::set<IVec> ray_set(const Fan& f) {
  return std::set<IVec>(f.rays.begin(), f.rays.end());
}

}  // namespace

TEST_CASE("compatible pairs") {
  CHECK(compatible_pairs(uniform(1, 1)).size() == 3);
  CHECK(compatible_pairs(uniform(2, 2)).size() == 11);
  for (const auto& cp : compatible_pairs(uniform(2, 3))) {
    Mask prev = cp.I;
    bool first = true;
    for (Mask f : cp.flag) {
      CHECK((cp.I & ~f) == 0);
      if (!first) CHECK((prev & ~f) == 0);
      CHECK(popcount(f) < 3);  // proper flats only
      prev = f;
      first = false;
    }
  }
}

TEST_CASE("augmented fan of the boolean pair") {
  Fan f = build_augmented(uniform(2, 2));
  CHECK(ray_set(f) == std::set<IVec>{
                          {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {-1, -1}});
  CHECK(f.cones.size() == 11);
  CHECK(fan_is_simplicial(f));
  CHECK(fan_pairwise_face_check(f));
  CHECK(delta_compatible(f, pi1_power_fan(2)));
}

TEST_CASE("augmented fan cone histograms") {
  auto h12 = cones_by_dim(build_augmented(uniform(1, 2)));
  CHECK(build_augmented(uniform(1, 2)).cones.size() == 4);
  CHECK(h12[0] == 1);
  CHECK(h12[1] == 3);

  Fan f23 = build_augmented(uniform(2, 3));
  auto h23 = cones_by_dim(f23);
  CHECK(f23.cones.size() == 17);
  CHECK(h23[0] == 1);
  CHECK(h23[1] == 7);
  CHECK(h23[2] == 9);

  Fan f34 = build_augmented(uniform(3, 4));
  auto h34 = cones_by_dim(f34);
  CHECK(f34.cones.size() == 94);
  CHECK(h34[0] == 1);
  CHECK(h34[1] == 15);
  CHECK(h34[2] == 44);
  CHECK(h34[3] == 34);
  CHECK(fan_is_simplicial(f34));
}

TEST_CASE("cones decode back to their pairs") {
  for (const std::string& name : {"U(2,3)", "ex82", "triangle"}) {
    Matroid m = catalog_matroid(name);
    Fan f = build_augmented(m);
    std::set<CompatiblePair> seen;
    for (const auto& c : f.cones) {
      CompatiblePair cp = pair_of_cone(f, c, m);
      CHECK(m.is_independent(cp.I));
      seen.insert(cp);
    }
    auto all = compatible_pairs(m);
    CHECK(seen.size() == all.size());
    CHECK(seen == std::set<CompatiblePair>(all.begin(), all.end()));
  }
}

TEST_CASE("bergman fan of the free matroid") {
  Fan b = build_bergman(uniform(3, 3));
  CHECK(b.rays.size() == 6);
  auto h = cones_by_dim(b);
  CHECK(h[2] == 6);
  CHECK(fan_is_simplicial(b));
  CHECK(fan_pairwise_face_check(b));
}

TEST_CASE("bergman fan of the three point line") {
  Fan b = build_bergman(uniform(2, 3));
  CHECK(b.rays.size() == 3);
  auto h = cones_by_dim(b);
  CHECK(h[0] == 1);
  CHECK(h[1] == 3);
  CHECK(b.max_dim() == 1);
}

TEST_CASE("bergman fan rejects loops") {
  Matroid loopy = from_bases({"1", "2"}, std::vector<Mask>{0b01});
  CHECK_THROWS_AS(build_bergman(loopy), HasLoops);
}

TEST_CASE("quotient chart map") {
  QVec s(2);
  s[0] = Rational(3);
  s[1] = Rational(5);
  QVec g = gamma_map(s);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == Rational(2));   // a1 - a0
  CHECK(g[1] == Rational(-3));  // 0 - a0
  QVec zero(3, Rational(0));
  QVec gz = gamma_map(zero);
  for (const auto& q : gz) CHECK(is_zero(q));
}

TEST_CASE("support identification across the catalog") {
  for (const std::string& name : verification_names()) {
    CAPTURE(name);
    CHECK(support_identification_check(catalog_matroid(name)));
  }
}

TEST_CASE("augmented fans compatible with the ambient product") {
  for (const std::string& name : {"U(1,1)", "U(2,3)", "ex82", "triangle"}) {
    Matroid m = catalog_matroid(name);
    CHECK(delta_compatible(build_augmented(m), pi1_power_fan(m.n())));
  }
}
