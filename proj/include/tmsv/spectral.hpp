#pragma once

#include <vector>

#include "tmsv/cohomology.hpp"
#include "tmsv/face_complex.hpp"
#include "tmsv/matroid.hpp"

namespace tmsv {

// Basis vector w_{(I,F,S)} of the first page of the stratum-rank filtration:
// stratum (I,F), S independent in the minor M(I,F), |S| = rank(I,F) − p.
struct PageBasis {
  Mask I = 0;
  Mask F = 0;
  Mask S = 0;
  bool operator==(const PageBasis& o) const {
    return I == o.I && F == o.F && S == o.S;
  }
};

// First page: one column per stratum rank a, with the combinatorial wedge
// differential raising a by one.
struct E1Page {
  int p = 0;
  std::vector<std::vector<PageBasis>> basis;  // a = 0..rk(M)
  std::vector<Matrix> d1;                     // d1[a] : column a → column a+1
};

E1Page e1_page(const Matroid& m, int p);

bool d1_squared_zero(const E1Page& page);

// Homology dimensions of (E1, d1) per column.
std::vector<int> e2_dims(const E1Page& page);

// Σ_a (−1)^{a−p} dim E1^a equals the number of rank-p flats.
bool euler_check(const Matroid& m, int p);

// Cohomology of every stratum subcomplex is concentrated in the stratum's
// rank, with dimension equal to that stratum's share of the page basis.
bool e1_honest_check(const FaceComplex& fc, const Matroid& m, int p);

// Rank of the connecting map out of column a computed from the cell
// complex itself (lift a page class, apply the full differential, project
// onto the next column); cross-checks d1.
int honest_d1_rank(const FaceComplex& fc, const Matroid& m, int p, int a);

// Finer decomposition of the page by flat and J = I ∪ S: each J ≠ ∅ block
// is an exact contraction complex and the J = ∅ blocks count rank-p flats.
// Throws DecompositionFailure if the blocks do not partition the basis.
bool koszul_check(const Matroid& m, int p);

}  // namespace tmsv
