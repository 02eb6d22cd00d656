#pragma once

#include <vector>

#include "tmsv/face_complex.hpp"
#include "tmsv/matrix.hpp"

namespace tmsv {

// Basis of F_p(cell) = Σ Λ^p of the spans of all same-orbit cells having the
// given cell as a face, inside Λ^p of the orbit's coordinate space.
std::vector<QVec> multi_tangent_basis(const FaceComplex& fc, int cell, int p);

// Cellular cochain complex with dual multi-tangent coefficients on a subset
// of the cells: C^q = ⊕_{dim=q} F_p(cell)^*, differential assembled from the
// signed covers joining cells of the subset.
struct CochainComplex {
  int p = 0;
  int top = 0;
  std::vector<std::vector<int>> cells_by_dim;        // q → cell ids
  std::vector<std::vector<int>> offsets;             // q → block starts
  std::vector<int> total;                            // q → dim C^q
  std::vector<std::vector<std::vector<QVec>>> bases; // q → block → F_p basis
  std::vector<Matrix> d;                             // d[q] : C^q → C^{q+1}

  int block_of(int q, int cell) const;  // index into cells_by_dim[q]
};

CochainComplex cochain_complex(const FaceComplex& fc,
                               const std::vector<int>& cell_subset, int p);
CochainComplex cochain_complex(const FaceComplex& fc, int p);

// h^q = dim C^q − rank d^q − rank d^{q−1}, q = 0..top.
std::vector<int> cohomology_dims(const CochainComplex& cc);

// table[p][q] for p = 0..pmax, q = 0..(top cell dimension).
std::vector<std::vector<int>> cohomology_table(const FaceComplex& fc, int pmax);

// Compactly supported cohomology of a fan: the cochain table of the fan
// viewed as a one-orbit complex.
std::vector<std::vector<int>> fan_hc_table(const Fan& f, int pmax);

// The augmented fan's compact-support cohomology is concentrated in the top
// degree, where its dimensions across p are the reversed independence
// counts.
bool fan_pd_check(const Matroid& m);

// The signed sum of the top cells' orientation wedges must be a cycle for
// the top-degree coefficient boundary; throws NotBalanced otherwise.
void check_balanced(const FaceComplex& fc);

}  // namespace tmsv
