#pragma once

#include <vector>

#include "tmsv/fan.hpp"
#include "tmsv/matroid.hpp"

namespace tmsv {

// Independent set together with a chain of proper flats containing it.
struct CompatiblePair {
  Mask I = 0;
  std::vector<Mask> flag;  // strictly increasing proper flats, each ⊇ I
  bool operator==(const CompatiblePair& o) const {
    return I == o.I && flag == o.flag;
  }
  bool operator<(const CompatiblePair& o) const {
    if (I != o.I) return I < o.I;
    return flag < o.flag;
  }
};

std::vector<CompatiblePair> compatible_pairs(const Matroid& m);

// Augmented fan in ℝ^E: cone(e_i : i∈I) + cone(−e_{E∖F} : F in the flag)
// over all compatible pairs. Cones are in bijection with the pairs.
Fan build_augmented(const Matroid& m);

// Decode a cone of the augmented fan back to its compatible pair; validates
// independence / flatness / chain order.
CompatiblePair pair_of_cone(const Fan& f, const Cone& c, const Matroid& m);

// Fan on chains of nonempty proper flats, in the slice where the last
// ground-set coordinate is 0: flat F maps to −e_{E∖F} when it contains the
// last element and to e_F otherwise. Throws HasLoops on matroids with loops.
Fan build_bergman(const Matroid& m);

// Quotient-by-diagonal chart map [a_0,…,a_n] ↦ (a_1−a_0,…,a_n−a_0) applied to
// a point of the sliced space (last coordinate implicitly 0).
QVec gamma_map(const QVec& sliced);

// The augmented fan's support equals the gamma image of the support of the
// free coextension's fan; checked by exact membership of deterministic
// sample points in both directions.
bool support_identification_check(const Matroid& m);

}  // namespace tmsv
