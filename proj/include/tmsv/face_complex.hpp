#pragma once

#include <map>
#include <vector>

#include "tmsv/bergman.hpp"
#include "tmsv/fan.hpp"
#include "tmsv/matroid.hpp"

namespace tmsv {

// Closed polyhedral cell of the compactified space: a cone in the coordinate
// space of its torus orbit. Rays are kept in orientation order (coordinate
// rays by coordinate ascending, then negative rays by support size
// descending); their wedge is the cell's reference orientation.
struct Cell {
  OrbitLabel orbit;
  std::vector<IVec> rays;
  std::vector<int> coords;  // global coordinates of the orbit, ascending
  int dim() const { return static_cast<int>(rays.size()); }
};

// Codim-1 incidence tau < sigma with its orientation sign.
struct Cover {
  int tau = 0;
  int sigma = 0;
  int sign = 0;
};

struct FaceComplex {
  int n = 0;  // global ambient coordinates
  std::vector<Cell> cells;
  std::vector<Cover> covers;
  std::map<std::pair<OrbitLabel, std::vector<IVec>>, int> index;  // sorted rays
  std::vector<std::vector<std::pair<int, int>>> facets_of;  // sigma -> (tau, sign)

  int cell_at(const OrbitLabel& orbit, std::vector<IVec> rays) const;
  int top_dim() const;
};

// Cells of the orbit closure decomposition of the compactified augmented
// fan: every cone's coordinate-deletion images across the orbits its closure
// meets, deduplicated, with signed codim-1 incidences. Checks the square of
// the boundary map.
FaceComplex build_face_complex(const Matroid& m);

// A plain fan viewed as a one-orbit complex (all cells at finite
// coordinates), for local / fan-level cohomology.
FaceComplex fan_as_complex(const Fan& f);

std::vector<IVec> orientation_order(std::vector<IVec> rays);

// Wedge of the cell's rays in stored order: the reference orientation of the
// cell, as a Λ^dim coordinate vector of its orbit space.
QVec orientation_wedge(const Cell& c);

// Stratum: all cells lying in one torus orbit, labeled by the admissible
// pair (I, F) with I = coordinates at +infinity, F = complement of the
// coordinates at -infinity.
struct Stratum {
  AdmissiblePair pair;
  std::vector<int> cells;
};

// Strata sorted by (F, I); fails if some orbit does not decode to an
// admissible pair.
std::vector<Stratum> stratification(const FaceComplex& fc, const Matroid& m);

// The strata are exactly the admissible pairs, and the cells of each stratum
// match the cones of the minor's augmented fan one-to-one.
bool stratum_census_check(const FaceComplex& fc, const Matroid& m);

// Face reachability between strata agrees with the admissible pair order.
bool stratum_order_check(const FaceComplex& fc, const Matroid& m);

// Cell counts by stratum rank r(F) - |I|, index 0..rk(M).
std::vector<int> rank_filtration_census(const FaceComplex& fc,
                                        const Matroid& m);

}  // namespace tmsv
