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
#include "tmsv/face_complex.hpp"
#include "tmsv/matroid.hpp"

using namespace tmsv;

namespace {

std::map<int, int> cells_by_dim(const FaceComplex& fc) {
  std::map<int, int> h;
  for (const auto& c : fc.cells) ++h[c.dim()];
  return h;
}

std::string stratum_label(const Matroid& m, const AdmissiblePair& p) {
  return "M(" + m.set_name(p.I) + "," + m.set_name(p.F) + ")";
}

}  // namespace

TEST_CASE("tropical line compactification by hand") {
  Matroid m = uniform(1, 1);
  FaceComplex fc = build_face_complex(m);
  REQUIRE(fc.cells.size() == 5);
  auto h = cells_by_dim(fc);
  CHECK(h[0] == 3);
  CHECK(h[1] == 2);
  CHECK(fc.covers.size() == 4);
  CHECK(fc.top_dim() == 1);

  int origin = fc.cell_at(OrbitLabel{0, 0}, {});
  int eplus = fc.cell_at(OrbitLabel{0, 0}, {{1}});
  int eminus = fc.cell_at(OrbitLabel{0, 0}, {{-1}});
  int vplus = fc.cell_at(OrbitLabel{0b1, 0}, {});
  int vminus = fc.cell_at(OrbitLabel{0, 0b1}, {});

  // each edge runs from the origin to its vertex at infinity with the
  // boundary signs of an oriented interval
  std::map<int, int> bplus(fc.facets_of[eplus].begin(),
                           fc.facets_of[eplus].end());
  REQUIRE(bplus.size() == 2);
  CHECK(bplus[origin] == 1);
  CHECK(bplus[vplus] == -1);
  std::map<int, int> bminus(fc.facets_of[eminus].begin(),
                            fc.facets_of[eminus].end());
  REQUIRE(bminus.size() == 2);
  CHECK(bminus[origin] == 1);
  CHECK(bminus[vminus] == -1);

  auto strata = stratification(fc, m);
  REQUIRE(strata.size() == 3);
  CHECK(rank_filtration_census(fc, m) == std::vector<int>{2, 3});
}

TEST_CASE("boolean pair complex") {
  Matroid m = uniform(2, 2);
  FaceComplex fc = build_face_complex(m);
  CHECK(fc.cells.size() == 27);
  auto h = cells_by_dim(fc);
  CHECK(h[0] == 9);
  CHECK(h[1] == 13);
  CHECK(h[2] == 5);
  CHECK(rank_filtration_census(fc, m) == std::vector<int>{4, 12, 11});
  auto strata = stratification(fc, m);
  CHECK(strata.size() == 9);
  CHECK(stratum_census_check(fc, m));
  CHECK(stratum_order_check(fc, m));
  // the dense stratum carries the augmented fan itself
  for (const auto& s : strata)
    if (s.pair.F == m.full_mask() && s.pair.I == 0)
      CHECK(s.cells.size() == 11);
}

TEST_CASE("cover structure invariants") {
  for (const std::string& name : {"U(2,2)", "U(2,3)", "ex82", "triangle"}) {
    Matroid m = catalog_matroid(name);
    FaceComplex fc = build_face_complex(m);
    auto strata = stratification(fc, m);
    std::vector<AdmissiblePair> pair_of_cell(fc.cells.size());
    for (const auto& s : strata)
      for (int c : s.cells) pair_of_cell[c] = s.pair;
    for (const auto& cv : fc.covers) {
      CAPTURE(name);
      CHECK(fc.cells[cv.tau].dim() + 1 == fc.cells[cv.sigma].dim());
      CHECK((cv.sign == 1 || cv.sign == -1));
      // faces sit in the same orbit or a deeper one
      CHECK(orbit_leq(fc.cells[cv.sigma].orbit, fc.cells[cv.tau].orbit));
      // the stratum rank never rises when passing to a face
      PairOrder o = pair_order(pair_of_cell[cv.tau], pair_of_cell[cv.sigma]);
      CHECK((o == PairOrder::less || o == PairOrder::equal));
      CHECK(pair_of_cell[cv.tau].rank <= pair_of_cell[cv.sigma].rank);
    }
  }
}

TEST_CASE("parallel example strata carry the figure labels") {
  Matroid m = catalog_matroid("ex82");
  FaceComplex fc = build_face_complex(m);
  auto strata = stratification(fc, m);
  REQUIRE(strata.size() == 12);
  std::set<std::string> labels;
  for (const auto& s : strata) labels.insert(stratum_label(m, s.pair));
  std::set<std::string> expected = {
      "M(∅,∅)",  "M(2,12)",  "M(1,12)",   "M(∅,12)",
      "M(∅,3)",  "M(3,3)",   "M(2,123)",  "M(1,123)",
      "M(∅,123)", "M(3,123)", "M(23,123)", "M(13,123)"};
  CHECK(labels == expected);
  CHECK(stratum_census_check(fc, m));
  CHECK(stratum_order_check(fc, m));
}

TEST_CASE("stratum cell counts match the minor fans") {
  Matroid m = catalog_matroid("ex82");
  FaceComplex fc = build_face_complex(m);
  for (const auto& s : stratification(fc, m)) {
    Fan f = build_augmented(minor(m, s.pair.I, s.pair.F));
    CAPTURE(stratum_label(m, s.pair));
    CHECK(s.cells.size() == f.cones.size());
  }
}

TEST_CASE("largest catalog complex") {
  Matroid m = uniform(3, 4);
  FaceComplex fc = build_face_complex(m);
  CHECK(fc.cells.size() == 315);
  CHECK(stratification(fc, m).size() == 48);
  CHECK(stratum_census_check(fc, m));
  CHECK(stratum_order_check(fc, m));
}

TEST_CASE("filtration level dimensions") {
  for (const std::string& name : {"U(1,1)", "U(2,2)", "ex82"}) {
    Matroid m = catalog_matroid(name);
    FaceComplex fc = build_face_complex(m);
    auto strata = stratification(fc, m);
    // max cell dimension within stratum rank k is exactly k
    std::map<int, int> maxdim;
    for (const auto& s : strata)
      for (int c : s.cells)
        maxdim[s.pair.rank] = std::max(maxdim[s.pair.rank],
                                       fc.cells[c].dim());
    for (const auto& [k, d] : maxdim) {
      CAPTURE(name);
      CHECK(d == k);
    }
    auto census = rank_filtration_census(fc, m);
    int total = 0;
    for (int c : census) total += c;
    CHECK(total == static_cast<int>(fc.cells.size()));
  }
}

TEST_CASE("orientation order groups coordinate rays first") {
  auto r = orientation_order({{0, -1}, {-1, -1}, {1, 0}});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == IVec{1, 0});
  CHECK(r[1] == IVec{-1, -1});
  CHECK(r[2] == IVec{0, -1});
}

TEST_CASE("a fan as a single orbit complex") {
  FaceComplex fc = fan_as_complex(pi1_power_fan(1));
  CHECK(fc.cells.size() == 3);
  CHECK(fc.covers.size() == 2);
  for (const auto& c : fc.cells) CHECK(c.orbit == OrbitLabel{0, 0});
  FaceComplex fc2 = fan_as_complex(build_augmented(uniform(2, 2)));
  CHECK(fc2.cells.size() == 11);
}

TEST_CASE("missing face lookups throw") {
  FaceComplex fc = build_face_complex(uniform(1, 1));
  CHECK_THROWS_AS(fc.cell_at(OrbitLabel{0, 0}, {{1}, {-1}}), NotAFaceRelation);
}
