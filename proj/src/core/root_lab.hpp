#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/linking.hpp"

namespace hopfroots::rootlab {

using maps::MapDescriptor;
using maps::Space;
using maps::SpacePoint;
using trace::Curve;
using trace::TraceConfig;
using geom::Vec3;
using geom::Vec4;

/// Known analytic root circles attached to the class-indexed maps.
enum class AnalyticSet {
  None,
  CircleZ1,       // {(z1, 0) : |z1| = 1}
  CircleZ2,       // {(0, z2) : |z2| = 1}
  CircleZ1Mod,    // the antipodal class of CircleZ1 in RP3
  CircleZ2Mod,    // the antipodal class of CircleZ2 in RP3
  CollapseCircle, // {|(x1,x2)| = 1/2, x3 = 0, x4 = sqrt(3)/2}, modulo +/- in RP3
};

const char* analytic_set_name(AnalyticSet s);

/// Exact chordal distance from a unit 4-vector to the analytic set; for the
/// Mod variants the distance is measured in the antipodal quotient.
double analytic_distance(AnalyticSet s, const Vec4& p);

struct ComponentSummary {
  bool closed = false;
  double length = 0.0;
  std::size_t vertices = 0;
  double planarity = 0.0;        // RMS residual of the best 2-plane through 0
  double analytic_match = -1.0;  // max vertex distance to the analytic set; -1 if none
  double residual = 0.0;         // max |f(p) - y| over the vertices
};

struct RootSetReport {
  std::string map_expr;
  Space domain = Space::S3;
  Space target = Space::S2;
  Vec3 base_point = Vec3(0, 0, 1);
  AnalyticSet analytic = AnalyticSet::None;
  std::vector<ComponentSummary> components;
  std::vector<Curve> curves;
  std::size_t component_count = 0;
  bool closed_loop_present = false;
};

/// RMS distance of the curve vertices to their best-fit 2-plane through the
/// origin; ~0 exactly when the polyline lies on a great circle.
double planarity_residual(const Curve& c);

/// Traces the root set of f (target S2) over y and summarizes each
/// component, attaching analytic-match distances when the map is one of the
/// class-indexed representatives based at y0 or -y0.
RootSetReport root_set_report(const MapDescriptor& f, const Vec3& y,
                              const TraceConfig& cfg);

/// Root set of an RP2-valued map f = cover2 o g at the class ybar: the
/// disjoint union of the root sets of g over the two lifts of ybar. Asserts
/// disjointness of the two traced sets (DecompositionOverlap otherwise).
std::pair<RootSetReport, RootSetReport> rp2_root_decompose(
    const MapDescriptor& f, const Vec3& ybar_rep, const TraceConfig& cfg);

struct DemoResult {
  Space domain;
  Space target;
  int n = 0;
  bool pass = false;
  std::string detail;
  std::vector<RootSetReport> reports;
};

/// Builds the minimal representative of class n, traces its root set over
/// the standard base point and checks the predicted topology: empty for
/// n = 0; one closed circle for S2 targets; two disjoint closed circles for
/// RP2 targets. Throws TheoremCheckFailed on a mismatch.
DemoResult minimal_root_demo(Space domain, Space target, int n,
                             const TraceConfig& cfg);

/// Variant that reports the failure in-band instead of throwing.
DemoResult minimal_root_demo_checked(Space domain, Space target, int n,
                                     const TraceConfig& cfg);

/// Minimum chordal distance between two traced curve sets.
double min_separation(const std::vector<Curve>& a, const std::vector<Curve>& b);

}  // namespace hopfroots::rootlab
