#pragma once

// Brute-force check of the dual cone: the cone of curves is cut out by one
// linear functional per strict transform, its extreme rays come from an exact
// double description run, and every ray must match a listed generator.

#include "apg/arith.hpp"
#include "apg/dual_cone.hpp"
#include "apg/lattice.hpp"
#include "apg/proximity_graph.hpp"

#include <string>
#include <vector>

namespace apg {

using Vector = std::vector<Integer>;

/// Rows over (a, b, c_1..c_N); x lies in the cone iff every row . x >= 0.
struct InequalitySystem {
  std::size_t dimension = 0;
  std::vector<Vector> rows;
  std::vector<std::string> provenance;  // "E[p]", "F~[f]", "M~0"
};

/// E_l: c_l - sum_{mu -> l} c_mu; F~_i: b - sum of fiber-i flagged c;
/// M~0: a - sum of M0 flagged c.
InequalitySystem inequality_system(const Configuration& config);

/// Primitive (content 1) integer rays, sorted lexicographically.
using RaySet = std::vector<Vector>;

/// Divides by the content; the zero vector stays zero.
Vector primitive(Vector v);

struct DdLimits {
  std::size_t max_dimension = 24;
};

/// Extreme rays of a pointed cone {x : rows . x >= 0}. Throws CapExceeded
/// past the dimension cap and std::invalid_argument if the cone has a
/// lineality space.
RaySet extreme_rays(const InequalitySystem& system, const DdLimits& limits = {});

RaySet dual_rays_dd(const Configuration& config, const DdLimits& limits = {});

struct DualConeCheck {
  bool ok = false;
  std::size_t generators = 0;
  std::size_t rays = 0;
  std::size_t extreme_generators = 0;  // generators proportional to some ray
  std::string witness;                 // first failure, empty when ok
};

/// Both inclusions: every generator satisfies every row, and every extreme
/// ray is proportional to a generator.
DualConeCheck verify_dual_cone(const Configuration& config, const EnumerationLimits& limits = {},
                               const DdLimits& dd = {});

/// Whether v is a nonnegative rational combination of the vectors in `others`
/// (exact phase I simplex with Bland's rule).
bool in_cone(const Vector& v, const std::vector<Vector>& others);

/// flags[i] is true iff classes[i] is not a nonnegative combination of the rest.
std::vector<bool> extremality_flags(const std::vector<PicardClass>& classes);

/// Strict transforms (fibers, M~0, exceptional curves) evaluated at delta,
/// then extremality_flags. Throws std::invalid_argument for delta < 1.
std::vector<bool> strict_transform_extremality(const Configuration& config, const Integer& delta);

}  // namespace apg
