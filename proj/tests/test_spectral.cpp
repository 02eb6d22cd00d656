#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "tmsv/catalog.hpp"
#include "tmsv/face_complex.hpp"
#include "tmsv/matroid.hpp"
#include "tmsv/spectral.hpp"

using namespace tmsv;

namespace {

std::vector<int> dims(const E1Page& page) {
  std::vector<int> out;
  for (const auto& col : page.basis) out.push_back(static_cast<int>(col.size()));
  return out;
}

std::vector<int> d1_ranks(const E1Page& page) {
  std::vector<int> out;
  for (const auto& m : page.d1) out.push_back(rank(m));
  return out;
}

}  // namespace

TEST_CASE("first page of the tropical line") {
  Matroid m = uniform(1, 1);
  E1Page p0 = e1_page(m, 0);
  CHECK(dims(p0) == std::vector<int>{2, 1});
  CHECK(d1_ranks(p0) == std::vector<int>{1});
  CHECK(e2_dims(p0) == std::vector<int>{1, 0});
  E1Page p1 = e1_page(m, 1);
  CHECK(dims(p1) == std::vector<int>{0, 1});
  CHECK(e2_dims(p1) == std::vector<int>{0, 1});
}

TEST_CASE("first page of the boolean pair") {
  Matroid m = uniform(2, 2);
  E1Page p0 = e1_page(m, 0);
  CHECK(dims(p0) == std::vector<int>{4, 4, 1});
  CHECK(d1_ranks(p0) == std::vector<int>{3, 1});
  CHECK(e2_dims(p0) == std::vector<int>{1, 0, 0});
  CHECK(d1_squared_zero(p0));

  E1Page p1 = e1_page(m, 1);
  CHECK(dims(p1) == std::vector<int>{0, 4, 2});
  CHECK(e2_dims(p1) == std::vector<int>{0, 2, 0});

  E1Page p2 = e1_page(m, 2);
  CHECK(dims(p2) == std::vector<int>{0, 0, 1});
  CHECK(e2_dims(p2) == std::vector<int>{0, 0, 1});
}

TEST_CASE("page basis labels are admissible") {
  Matroid m = catalog_matroid("ex82");
  for (int p = 0; p <= m.rank(); ++p) {
    E1Page page = e1_page(m, p);
    for (int a = 0; a < static_cast<int>(page.basis.size()); ++a)
      for (const auto& w : page.basis[a]) {
        CAPTURE(p);
        CAPTURE(a);
        CHECK(m.is_flat(w.F));
        CHECK(m.is_independent(w.I));
        CHECK((w.I & ~w.F) == 0);
        CHECK((w.S & w.I) == 0);
        CHECK((w.S & ~w.F) == 0);
        CHECK(m.is_independent(w.I | w.S));
        CHECK(m.rank_of(w.F) - popcount(w.I) == a);
        CHECK(popcount(w.S) == a - p);
      }
  }
}

TEST_CASE("page differential squares to zero across the catalog") {
  for (const std::string& name : verification_names()) {
    Matroid m = catalog_matroid(name);
    for (int p = 0; p <= m.rank(); ++p) {
      CAPTURE(name);
      CAPTURE(p);
      CHECK(d1_squared_zero(e1_page(m, p)));
    }
  }
}

TEST_CASE("second page carries the whitney numbers") {
  for (const std::string& name :
       {"U(1,2)", "U(2,3)", "U(3,3)", "U(2,4)", "U(3,4)", "ex82", "triangle"}) {
    Matroid m = catalog_matroid(name);
    auto w = whitney_numbers(m);
    for (int p = 0; p <= m.rank(); ++p) {
      auto e2 = e2_dims(e1_page(m, p));
      CAPTURE(name);
      CAPTURE(p);
      for (int a = 0; a < static_cast<int>(e2.size()); ++a)
        CHECK(e2[a] == (a == p ? w[p] : 0));
    }
  }
}

TEST_CASE("euler characteristics count flats") {
  for (const std::string& name : verification_names()) {
    Matroid m = catalog_matroid(name);
    for (int p = 0; p <= m.rank(); ++p) {
      CAPTURE(name);
      CAPTURE(p);
      CHECK(euler_check(m, p));
    }
  }
  Matroid v = vamos();
  for (int p = 0; p <= v.rank(); ++p) {
    CAPTURE(p);
    CHECK(euler_check(v, p));
  }
}

TEST_CASE("page differential against the cell complex") {
  for (const std::string& name : {"U(1,1)", "U(2,2)", "ex82"}) {
    Matroid m = catalog_matroid(name);
    FaceComplex fc = build_face_complex(m);
    for (int p = 0; p <= m.rank(); ++p) {
      CAPTURE(name);
      CAPTURE(p);
      CHECK(e1_honest_check(fc, m, p));
      E1Page page = e1_page(m, p);
      for (int a = 0; a + 1 < static_cast<int>(page.basis.size()); ++a) {
        CAPTURE(a);
        CHECK(honest_d1_rank(fc, m, p, a) == rank(page.d1[a]));
      }
    }
  }
}

TEST_CASE("flat rank blocks decompose the page") {
  for (const std::string& name : verification_names()) {
    Matroid m = catalog_matroid(name);
    for (int p = 0; p <= m.rank(); ++p) {
      CAPTURE(name);
      CAPTURE(p);
      CHECK(koszul_check(m, p));
    }
  }
  CHECK(koszul_check(vamos(), 2));
}
