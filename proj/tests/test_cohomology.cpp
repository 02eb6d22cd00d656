#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "tmsv/bergman.hpp"
#include "tmsv/catalog.hpp"
#include "tmsv/cohomology.hpp"
#include "tmsv/errors.hpp"
#include "tmsv/face_complex.hpp"
#include "tmsv/matroid.hpp"

using namespace tmsv;

TEST_CASE("tropical line cohomology") {
  FaceComplex fc = build_face_complex(uniform(1, 1));
  auto table = cohomology_table(fc, 1);
  REQUIRE(table.size() == 2);
  CHECK(table[0] == std::vector<int>{1, 0});
  CHECK(table[1] == std::vector<int>{0, 1});
}

TEST_CASE("multi tangent spaces of the tropical line") {
  FaceComplex fc = build_face_complex(uniform(1, 1));
  for (int c = 0; c < static_cast<int>(fc.cells.size()); ++c) {
    CHECK(multi_tangent_basis(fc, c, 0).size() == 1);
    const Cell& cell = fc.cells[c];
    // at infinity the orbit space is a point; at finite distance the origin
    // and both edges all see the full line
    size_t expect = cell.coords.empty() ? 0 : 1;
    CHECK(multi_tangent_basis(fc, c, 1).size() == expect);
  }
}

TEST_CASE("cochain complex bookkeeping") {
  FaceComplex fc = build_face_complex(uniform(1, 1));
  CochainComplex cc = cochain_complex(fc, 0);
  REQUIRE(cc.top == 1);
  CHECK(cc.total[0] == 3);
  CHECK(cc.total[1] == 2);
  CHECK(cc.d.size() == 1);
  CHECK(cc.d[0].rows == 2);
  CHECK(cc.d[0].cols == 3);
  CHECK(rank(cc.d[0]) == 2);
  CHECK(cohomology_dims(cc) == std::vector<int>{1, 0});

  CochainComplex c1 = cochain_complex(fc, 1);
  CHECK(c1.total[0] == 1);
  CHECK(c1.total[1] == 2);
  CHECK(cohomology_dims(c1) == std::vector<int>{0, 1});
}

TEST_CASE("diagonal concentration on the small catalog") {
  for (const std::string& name :
       {"U(1,1)", "U(1,2)", "U(2,2)", "U(2,3)", "U(3,3)", "ex82",
        "parallel2_coloop", "coloop_parallel2", "triangle"}) {
    Matroid m = catalog_matroid(name);
    FaceComplex fc = build_face_complex(m);
    auto table = cohomology_table(fc, m.rank());
    auto w = whitney_numbers(m);
    CAPTURE(name);
    REQUIRE(table.size() == static_cast<size_t>(m.rank()) + 1);
    for (int p = 0; p <= m.rank(); ++p)
      for (int q = 0; q < static_cast<int>(table[p].size()); ++q) {
        CAPTURE(p);
        CAPTURE(q);
        if (p == q)
          CHECK(table[p][q] == w[p]);
        else
          CHECK(table[p][q] == 0);
      }
  }
}

TEST_CASE("boolean pair diagonal") {
  auto table = cohomology_table(build_face_complex(uniform(2, 2)), 2);
  CHECK(table[0] == std::vector<int>{1, 0, 0});
  CHECK(table[1] == std::vector<int>{0, 2, 0});
  CHECK(table[2] == std::vector<int>{0, 0, 1});
}

TEST_CASE("compact support cohomology of augmented fans") {
  auto h11 = fan_hc_table(build_augmented(uniform(1, 1)), 1);
  CHECK(h11[0] == std::vector<int>{0, 1});
  CHECK(h11[1] == std::vector<int>{0, 1});

  auto h12 = fan_hc_table(build_augmented(uniform(1, 2)), 1);
  CHECK(h12[0] == std::vector<int>{0, 2});
  CHECK(h12[1] == std::vector<int>{0, 1});

  auto h22 = fan_hc_table(build_augmented(uniform(2, 2)), 2);
  for (int p = 0; p <= 2; ++p) {
    CHECK(h22[p][0] == 0);
    CHECK(h22[p][1] == 0);
  }
  CHECK(h22[0][2] == 1);
  CHECK(h22[1][2] == 2);
  CHECK(h22[2][2] == 1);

  // top-degree values are the reversed independence counts
  auto h23 = fan_hc_table(build_augmented(uniform(2, 3)), 2);
  CHECK(h23[0][2] == 3);
  CHECK(h23[1][2] == 3);
  CHECK(h23[2][2] == 1);
}

TEST_CASE("fan duality across the catalog") {
  for (const std::string& name : verification_names()) {
    CAPTURE(name);
    CHECK(fan_pd_check(catalog_matroid(name)));
  }
}

TEST_CASE("balancing") {
  CHECK_NOTHROW(check_balanced(build_face_complex(uniform(2, 2))));
  CHECK_NOTHROW(check_balanced(build_face_complex(catalog_matroid("ex82"))));
  CHECK_NOTHROW(check_balanced(fan_as_complex(pi1_power_fan(2))));
  CHECK_NOTHROW(
      check_balanced(fan_as_complex(build_bergman(uniform(2, 3)))));
  Fan lone;
  lone.ambient = 1;
  lone.add_cone({lone.add_ray({1})});
  CHECK_THROWS_AS(check_balanced(fan_as_complex(lone)), NotBalanced);
}

TEST_CASE("subsets of cells give subcomplex cohomology") {
  // the dense stratum of the tropical line is an open interval; its
  // compactly supported cohomology sits in degree one
  Matroid m = uniform(1, 1);
  FaceComplex fc = build_face_complex(m);
  std::vector<int> dense;
  for (int c = 0; c < static_cast<int>(fc.cells.size()); ++c)
    if (fc.cells[c].orbit == OrbitLabel{0, 0}) dense.push_back(c);
  REQUIRE(dense.size() == 3);
  CochainComplex cc = cochain_complex(fc, dense, 0);
  CHECK(cohomology_dims(cc) == std::vector<int>{0, 1});
}
