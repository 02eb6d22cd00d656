#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tmsv/polynomial.hpp"
#include "tmsv/rational.hpp"

namespace tmsv {

// Subsets of a ground set with at most 31 elements, as bitmasks in the ground
// order.
using Mask = uint32_t;

int popcount(Mask m);
std::vector<int> mask_elements(Mask m);
Mask mask_from_elements(const std::vector<int>& elems);

// Matroid given by its explicit basis family; validated on construction.
struct Matroid {
  std::vector<std::string> labels;
  std::vector<Mask> bases;  // sorted, deduplicated

  int n() const { return static_cast<int>(labels.size()); }
  Mask full_mask() const { return n() == 0 ? 0 : (Mask(1) << n()) - 1; }
  int rank() const { return rank_; }
  Mask loops() const { return loops_; }

  int rank_of(Mask s) const;
  Mask closure(Mask s) const;
  bool is_independent(Mask s) const;
  bool is_basis(Mask s) const;
  bool is_flat(Mask s) const;

  int element_index(const std::string& label) const;  // ElementNotInGroundSet
  Mask mask_of(const std::vector<std::string>& elems) const;
  std::string set_name(Mask s) const;  // "∅" for empty

  // Internal; set by from_bases.
  int rank_ = 0;
  Mask loops_ = 0;
};

Matroid from_bases(std::vector<std::string> labels, std::vector<Mask> bases);
Matroid from_bases(std::vector<std::string> labels,
                   const std::vector<std::vector<std::string>>& bases);

// Lattice of flats, graded by matroid rank, with join table and Möbius values
// from the bottom flat cl(∅).
struct FlatLattice {
  std::vector<Mask> flats;  // sorted by (rank, mask)
  std::vector<int> flat_rank;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) indices
  std::vector<std::vector<int>> join_table;
  std::vector<Integer> mobius;  // μ(bottom, F)
  std::map<Mask, int> index_of;

  int index(Mask f) const;
  bool leq(int i, int j) const;  // containment
  int bottom() const { return 0; }
  int top() const { return static_cast<int>(flats.size()) - 1; }
};

FlatLattice flat_lattice(const Matroid& m);
std::vector<long long> whitney_numbers(const Matroid& m);  // W_0..W_d
std::vector<long long> f_vector(const Matroid& m);         // f^0..f^d

Matroid dual(const Matroid& m);
// Adds a free element labeled "0" (primed on collision) at ground position 0.
Matroid free_extension(const Matroid& m);
Matroid free_coextension(const Matroid& m);

// Admissible pair: independent I inside a flat F.
struct AdmissiblePair {
  Mask I = 0;
  Mask F = 0;
  int rank = 0;  // r(F) - |I|

  bool operator==(const AdmissiblePair& o) const {
    return I == o.I && F == o.F;
  }
  bool operator<(const AdmissiblePair& o) const {
    if (F != o.F) return F < o.F;
    return I < o.I;
  }
};

enum class PairOrder { less, greater, equal, incomparable };

// Minor M(I,F): restrict to the flat F, contract the independent set I;
// ground set F∖I in the ambient order, loops retained.
Matroid minor(const Matroid& m, Mask I, Mask F);

std::vector<AdmissiblePair> admissible_pairs(const Matroid& m);

// (J,G) ⪯ (I,F) iff I ⊆ J and G ⊆ F; returns the relation of p1 vs p2.
PairOrder pair_order(const AdmissiblePair& p1, const AdmissiblePair& p2);

// n_p^i = Σ_{rk(I,F)=p+i} f^i of M(I,F);  N_p = Σ_i (-1)^i n_p^i.
long long n_p_i(const Matroid& m, int p, int i);
long long N_p(const Matroid& m, int p);

Matroid direct_sum(const Matroid& a, const Matroid& b);

// χ_M(t) = Σ_F μ(cl(∅),F) t^{d-r(F)} over the lattice of flats.
Polynomial characteristic_polynomial(const Matroid& m);
// χ_M(t)/(t-1); loops make the quotient meaningless, reported as
// DivisionNotExact.
Polynomial reduced_characteristic_polynomial(const Matroid& m);

// |χ̄^k of the free coextension| = f^{d-k} of m, for all k.
bool coext_f_identity_check(const Matroid& m);

}  // namespace tmsv
