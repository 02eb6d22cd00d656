#pragma once

#include <map>
#include <vector>

#include "tmsv/fan.hpp"
#include "tmsv/matrix.hpp"
#include "tmsv/matroid.hpp"

namespace tmsv {

// Graded algebra with one basis element y_F per flat; y_F * y_G is y_{F∨G}
// when the ranks add up and zero otherwise.
struct MobiusAlgebra {
  FlatLattice lattice;
  std::vector<long long> hilbert;

  // Flat index of y_F * y_G, or -1 when the product vanishes.
  int product(int fi, int gi) const {
    int j = lattice.join_table[fi][gi];
    if (lattice.flat_rank[fi] + lattice.flat_rank[gi] != lattice.flat_rank[j])
      return -1;
    return j;
  }
};

MobiusAlgebra mobius_algebra(const Matroid& m);

// Piecewise-polynomial ring of a simplicial fan with unimodular cones,
// presented degree by degree: monomials in the ray variables modulo monomials
// whose support is not a cone and modulo products of a linear form with any
// lower-degree monomial. Monomials on non-faces are quotiented away up front
// by keeping only exponent vectors whose support spans a cone; the remaining
// relations are the projected linear-form multiples. Classes are coordinate
// vectors in the surviving (non-pivot) monomials of their degree.
struct ChowRing {
  Fan fan;
  int kmax = 0;
  int nrays = 0;
  // Degree-k face monomials as exponent vectors over rays, in lex order of
  // the non-decreasing ray-index multisets; degree-1 monomial i is ray i.
  std::vector<std::vector<std::vector<int>>> monos;
  std::vector<std::map<std::vector<int>, int>> mono_index;
  std::vector<std::vector<QVec>> rel;
  std::vector<std::vector<int>> basis;

  int dim(int k) const { return static_cast<int>(basis[k].size()); }
  // Quotient coordinates of a vector given in monomial coordinates.
  QVec reduce(int k, const QVec& v) const;
  // Product of two classes, reduced in degree k1+k2 (must be <= kmax).
  QVec multiply(int k1, const QVec& c1, int k2, const QVec& c2) const;
  // Class of the ray variable x_ray.
  QVec generator_class(int ray) const;
};

ChowRing chow_ring(const Fan& f, int kmax);

// Degree-1 class pulled back from the i-th coordinate line: the class of
// x_{e_i} when e_i is a ray, zero when element i is a loop.
QVec element_class(const ChowRing& a, const Matroid& m, int i);

// All of the above at once: the degree-1 classes y_1..y_n.
std::vector<QVec> pullback_generators(const ChowRing& a, const Matroid& m);

// Inclusion-minimal ray sets that do not span a cone. Together with the
// linear forms these generate all relations of the ring.
std::vector<std::vector<int>> minimal_nonfaces(const Fan& f);

struct SubalgebraReport {
  bool top_vanishes = false;     // ring is zero in degree rank+1
  bool identification = false;   // y_I depends only on cl(I); dependent I give 0
  bool hilbert_match = false;    // span of rank-p flat classes has dim W_p
  bool structure_match = false;  // products of flat classes follow the
                                 // Möbius-algebra rule
  std::vector<int> subalgebra_dims;
  std::vector<long long> whitney;

  bool verdict() const {
    return top_vanishes && identification && hilbert_match && structure_match;
  }
};

// Compare the subring of the augmented fan's ring generated by the element
// classes against the Möbius algebra of the matroid.
SubalgebraReport subalgebra_hilbert_and_structure(const Matroid& m);

// True when the generated subalgebra matches the Möbius algebra and its
// Hilbert function also equals the given diagonal cohomology dimensions.
bool theorem2_verdict(const Matroid& m,
                      const std::vector<long long>& diagonal_dims);

// Check the evaluation chain from the ring of the product of coordinate
// lines through the augmented fan of the free matroid down to the augmented
// fan of m: relation generators map to zero at each step and the composite
// sends each coordinate hyperplane class to the matching element class.
bool pullback_chain_check(const Matroid& m);

}  // namespace tmsv
