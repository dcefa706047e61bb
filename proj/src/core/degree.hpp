#pragma once

#include <cstdint>
#include <vector>

#include "core/map_zoo.hpp"

namespace hopfroots::deg {

using maps::MapDescriptor;
using maps::Space;
using maps::SpacePoint;
using geom::Vec4;

struct DegreeConfig {
  int seeds = 500;
  double newton_tol = 1e-11;
  int max_newton_iters = 50;
  double dedupe_tol = 1e-6;  // angular distance between distinct preimages
  bool stability_check = true;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Preimages of a single target value, with local orientation signs.
/// For RP3 domains the points are canonical representatives, one per
/// antipodal class of the lifted solution set.
struct PreimageSet {
  std::vector<Vec4> points;
  std::vector<int> signs;
  bool regular = true;
  int dropped_seeds = 0;
};

/// Multistart Newton (tangent coordinates, renormalization retraction) for
/// f(x) = y, with y on the 3-dimensional target. Throws IrregularValue when
/// any solution has a near-singular differential (smallest singular value
/// below 1e-6).
PreimageSet find_preimages(const MapDescriptor& f, const Vec4& y,
                           const DegreeConfig& cfg);

/// Sign of det of the differential at x expressed in positively-oriented
/// frames. Throws IrregularPoint when the differential is near-singular.
int local_sign(const MapDescriptor& f, const SpacePoint& x);

/// Signed mapping degree by regular-value preimage counting. Regular values
/// are searched by rejection sampling (at most 20 attempts); the count is
/// re-run with doubled seeds when stability_check is set and must agree.
int compute_degree(const MapDescriptor& f, const DegreeConfig& cfg);

}  // namespace hopfroots::deg
