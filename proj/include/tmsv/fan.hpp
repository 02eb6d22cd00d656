#pragma once

#include <map>
#include <set>
#include <vector>

#include "tmsv/matroid.hpp"
#include "tmsv/rational.hpp"

namespace tmsv {

using IVec = std::vector<long>;

// Simplicial cone inside a Fan, stored by sorted ray indices.
struct Cone {
  std::vector<int> rays;
  int dim() const { return static_cast<int>(rays.size()); }
};

// Simplicial fan: primitive integer rays, cone set closed under faces.
struct Fan {
  int ambient = 0;
  std::vector<IVec> rays;
  std::vector<Cone> cones;
  std::map<IVec, int> ray_index;
  std::map<std::vector<int>, int> cone_index;

  int add_ray(const IVec& v);
  // Adds the cone and all its faces; returns the cone's index.
  int add_cone(std::vector<int> ray_ids);
  bool has_cone(const std::vector<int>& ray_ids) const;
  std::vector<IVec> cone_rays(const Cone& c) const;
  int max_dim() const;
};

// Coordinates at +infinity (J) and -infinity (K) of a torus orbit of the
// ambient product of tropical lines.
struct OrbitLabel {
  Mask J = 0;
  Mask K = 0;
  bool operator<(const OrbitLabel& o) const {
    if (J != o.J) return J < o.J;
    return K < o.K;
  }
  bool operator==(const OrbitLabel& o) const { return J == o.J && K == o.K; }
};

// a ⪯ b: the orbit of b lies in the closure of the orbit of a.
inline bool orbit_leq(const OrbitLabel& a, const OrbitLabel& b) {
  return (a.J & ~b.J) == 0 && (a.K & ~b.K) == 0;
}

IVec primitivized(IVec v);

// Exact membership: is pt a nonnegative combination of the given rays?
bool cone_contains_point(const std::vector<IVec>& rays, const QVec& pt);

// Membership in the fan's support.
bool fan_contains_point(const Fan& f, const QVec& pt);

// Exact feasibility of sigma ∩ relint(eta) ≠ ∅, both cones given by rays in a
// common ambient space. relint of the zero cone is the origin.
bool relint_meets(const std::vector<IVec>& sigma, const std::vector<IVec>& eta,
                  int ambient);

// Coordinate deletion: keep the listed coordinate positions, drop zero rays,
// primitivize, deduplicate.
std::vector<IVec> project_rays(const std::vector<IVec>& rays,
                               const std::vector<int>& keep);

// Projection of a cone living in orbit `from` onto the orbit `to`
// (from ⪯ to); throws NotAFaceRelation otherwise. Rays are in the coordinate
// space of `from` (ambient coordinates = elements of ~ (J|K), ascending).
std::vector<IVec> project_cone(const std::vector<IVec>& rays, int n,
                               const OrbitLabel& from, const OrbitLabel& to);

// The fan of the product of n tropical lines: rays ±e_i, cones = all sign
// choices on coordinate subsets.
Fan pi1_power_fan(int n);

// Every cone of `sigma` must sit inside one cone of `delta`; throws
// SupportNotContained when the support test (rays and barycenters) fails.
bool delta_compatible(const Fan& sigma, const Fan& delta);

// Cells of the closure of a cone of the ambient (Π¹)^m: one cell per orbit
// whose relative interior the cone meets, each the coordinate-deletion image.
struct ClosureCell {
  OrbitLabel orbit;
  std::vector<IVec> rays;
};
std::vector<ClosureCell> closure_cells_of_cone(const std::vector<IVec>& rays,
                                               int m);

// Fan sanity: every cone simplicial (independent rays).
bool fan_is_simplicial(const Fan& f);
// Fan axiom via relint: relint(σ) meets τ only when σ is a face of τ.
bool fan_pairwise_face_check(const Fan& f);

}  // namespace tmsv
