#pragma once

#include <cstdint>
#include <vector>

#include "core/map_zoo.hpp"

namespace hopfroots::trace {

using maps::MapDescriptor;
using maps::Space;
using maps::SpacePoint;
using geom::Vec3;
using geom::Vec4;

struct TraceConfig {
  double step = 0.01;                 // arclength step, radians
  double corrector_tol = 1e-10;
  int max_steps = 100000;
  double closure_radius = 0.0;        // 0 means step/2
  int min_steps_before_closure = 10;
  int seeds = 200;
  double component_dedupe = 1e-4;     // Hausdorff threshold between components
  std::uint64_t seed = 1;

  // curve points whose 2x3 system drops below this smallest singular value
  // abort with SingularCurvePoint
  double rank_tol = 1e-9;

  // when positive, find_root_components rejects values whose roots have a
  // smallest singular value under this bound (IrregularValue); 0 disables
  double irregular_value_tol = 0.0;

  void validate() const;
  double closure() const { return closure_radius > 0.0 ? closure_radius : 0.5 * step; }
};

/// An ordered polyline on S^3. Curves traced on RP3 store the lift of one
/// representative component and carry space == RP3; points are then read
/// modulo the antipodal map. Closed curves implicitly connect the last
/// vertex back to the first.
struct Curve {
  std::vector<Vec4> points;
  bool closed = false;
  double length = 0.0;  // radians, sum of geodesic gaps (+ closing arc)
  Space space = Space::S3;
  double min_sigma = 0.0;  // smallest singular value seen along the trace
};

/// Gauss-Newton projection of a near-solution x onto the root set f^-1(y)
/// (f with S2 target, S3 domain). Minimum-norm tangent update with
/// renormalization. Throws CorrectorDiverged after 25 iterations.
Vec4 corrector_project(const MapDescriptor& f, const Vec3& y, const Vec4& x,
                       const TraceConfig& cfg);

/// Predictor-corrector continuation of the component of f^-1(y) through the
/// corrected root x0. The predictor is the unit kernel vector of the 2x3
/// tangent system, oriented by continuity; closure requires proximity to x0
/// plus tangent alignment.
Curve trace_component(const MapDescriptor& f, const Vec3& y, const Vec4& x0,
                      const TraceConfig& cfg);

/// All components of f^-1(y) found from quasi-uniform seeding. For RP3
/// domains the lift through the double cover is traced and components are
/// identified under the antipodal map.
std::vector<Curve> find_root_components(const MapDescriptor& f, const Vec3& y,
                                        const TraceConfig& cfg);

/// Residual |f(p) - y| maximized over the curve vertices; used to assert the
/// per-vertex root invariant.
double max_residual(const MapDescriptor& f, const Vec3& y, const Curve& c);

/// Max over vertices of `c` of the distance to the polyline `other`
/// (vertex-to-segment, including the closing segment of closed curves).
double directed_distance(const Curve& c, const Curve& other);

/// Symmetric Hausdorff distance between two polylines.
double curve_hausdorff(const Curve& a, const Curve& b);

/// Distance from a point to the polyline.
double point_to_curve(const Vec4& p, const Curve& c);

/// The antipodal image of a curve.
Curve antipode(const Curve& c);

}  // namespace hopfroots::trace
