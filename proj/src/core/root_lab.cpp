#include "core/root_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "core/expr.hpp"

namespace hopfroots::rootlab {

namespace {

using maps::Gen;
using maps::Generator;

constexpr double kBaseTol = 1e-9;
constexpr double kDisjointness = 1e-3;
constexpr double kSqrt3Half = 0.86602540378443864676372317075294;
constexpr double kHalfPi = 1.5707963267948966192313216916398;

// Root demos compare traced curves against exact circles at 1e-6, which
// needs a tighter corrector than the general default.
constexpr double kDemoCorrectorTol = 1e-13;
constexpr int kDemoSeeds = 400;

struct ClassId {
  Space domain;
  int n;
};

// Recognizes the class-indexed representatives produced by build_class_map
// (target S2). Rotated or otherwise perturbed composites stay anonymous.
std::optional<ClassId> identify_class_map(const MapDescriptor& f) {
  if (f.target() != Space::S2) return std::nullopt;
  for (int n = -8; n <= 8; ++n) {
    if (f == maps::build_class_map(Space::S2, f.domain(), n)) {
      return ClassId{f.domain(), n};
    }
  }
  return std::nullopt;
}

AnalyticSet analytic_for(const ClassId& id, bool minus_side) {
  if (id.n == 0) return AnalyticSet::None;
  if (id.domain == Space::S3) {
    return minus_side ? AnalyticSet::CircleZ2 : AnalyticSet::CircleZ1;
  }
  if (id.n % 2 != 0) {
    return minus_side ? AnalyticSet::CircleZ2Mod : AnalyticSet::CircleZ1Mod;
  }
  // even classes factor through the collapse map; the -y0 fiber meets the
  // collapsed skeleton, so only the +y0 side has a pinned circle
  return minus_side ? AnalyticSet::None : AnalyticSet::CollapseCircle;
}

double circle_z1_distance(const Vec4& p) {
  const double r = std::hypot(p[0], p[1]);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * r));
}

double circle_z2_distance(const Vec4& p) {
  const double r = std::hypot(p[2], p[3]);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * r));
}

double collapse_circle_distance(const Vec4& p) {
  // nearest point of {|(x1,x2)| = 1/2, x3 = 0, x4 = sqrt(3)/2}
  const double dot_plus = 0.5 * std::hypot(p[0], p[1]) + kSqrt3Half * p[3];
  const double dot_minus = 0.5 * std::hypot(p[0], p[1]) - kSqrt3Half * p[3];
  const double best = std::max(dot_plus, dot_minus);  // quotient metric
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * best));
}

}  // namespace

const char* analytic_set_name(AnalyticSet s) {
  switch (s) {
    case AnalyticSet::None: return "none";
    case AnalyticSet::CircleZ1: return "circle_z1";
    case AnalyticSet::CircleZ2: return "circle_z2";
    case AnalyticSet::CircleZ1Mod: return "circle_z1_mod";
    case AnalyticSet::CircleZ2Mod: return "circle_z2_mod";
    case AnalyticSet::CollapseCircle: return "collapse_circle";
  }
  return "?";
}

double analytic_distance(AnalyticSet s, const Vec4& p) {
  switch (s) {
    case AnalyticSet::None:
      return -1.0;
    case AnalyticSet::CircleZ1:
      return circle_z1_distance(p);
    case AnalyticSet::CircleZ2:
      return circle_z2_distance(p);
    case AnalyticSet::CircleZ1Mod:
      // the circle is antipodally symmetric, so the quotient distance
      // coincides with the ambient one
      return circle_z1_distance(p);
    case AnalyticSet::CircleZ2Mod:
      return circle_z2_distance(p);
    case AnalyticSet::CollapseCircle:
      return collapse_circle_distance(p);
  }
  return -1.0;
}

double planarity_residual(const Curve& c) {
  const std::size_t n = c.points.size();
  if (n < 3) return 0.0;
  Eigen::MatrixXd M(static_cast<Eigen::Index>(n), 4);
  for (std::size_t i = 0; i < n; ++i) M.row(static_cast<Eigen::Index>(i)) = c.points[i].transpose();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  double out_of_plane = 0.0;
  for (int i = 2; i < sv.size(); ++i) out_of_plane += sv[i] * sv[i];
  return std::sqrt(out_of_plane / static_cast<double>(n));
}

RootSetReport root_set_report(const MapDescriptor& f, const Vec3& y,
                              const TraceConfig& cfg) {
  if (f.target() != Space::S2) {
    throw TypeMismatch("root_set_report: S2 target required (decompose RP2 maps first)");
  }
  RootSetReport report;
  report.map_expr = maps::format_map(f);
  report.domain = f.domain();
  report.target = f.target();
  report.base_point = y;

  const auto id = identify_class_map(f);
  if (id) {
    const bool plus = (y - maps::base_point_y0()).norm() < kBaseTol;
    const bool minus = (y + maps::base_point_y0()).norm() < kBaseTol;
    if (plus || minus) report.analytic = analytic_for(*id, minus);
  }

  report.curves = trace::find_root_components(f, y, cfg);
  report.component_count = report.curves.size();
  for (const Curve& c : report.curves) {
    ComponentSummary s;
    s.closed = c.closed;
    s.length = c.length;
    s.vertices = c.points.size();
    s.planarity = planarity_residual(c);
    s.residual = trace::max_residual(f, y, c);
    if (report.analytic != AnalyticSet::None) {
      double worst = 0.0;
      for (const Vec4& p : c.points) {
        worst = std::max(worst, analytic_distance(report.analytic, p));
      }
      s.analytic_match = worst;
    }
    report.components.push_back(s);
    report.closed_loop_present = report.closed_loop_present || c.closed;
  }
  return report;
}

double min_separation(const std::vector<Curve>& a,
                      const std::vector<Curve>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const Curve& ca : a) {
    for (const Curve& cb : b) {
      for (const Vec4& p : ca.points) {
        best = std::min(best, trace::point_to_curve(p, cb));
        if (ca.space == Space::RP3 || cb.space == Space::RP3) {
          best = std::min(best, trace::point_to_curve(Vec4(-p), cb));
        }
      }
    }
  }
  return best;
}

std::pair<RootSetReport, RootSetReport> rp2_root_decompose(
    const MapDescriptor& f, const Vec3& ybar_rep, const TraceConfig& cfg) {
  if (f.target() != Space::RP2) {
    throw TypeMismatch("rp2_root_decompose: RP2 target required");
  }
  const auto& gens = f.gens();
  if (gens.back().kind != Gen::Cover2) {
    throw TypeMismatch(
        "rp2_root_decompose: RP2-valued maps are built as cover2 o g");
  }
  std::vector<Generator> inner(gens.begin(), gens.end() - 1);
  const MapDescriptor g{std::move(inner)};

  const Vec3 y_plus = geom::unitize(ybar_rep);
  const Vec3 y_minus = -y_plus;

  TraceConfig minus_cfg = cfg;
  minus_cfg.seed = cfg.seed + 7919;
  auto plus = root_set_report(g, y_plus, cfg);
  auto minus = root_set_report(g, y_minus, minus_cfg);

  if (!plus.curves.empty() && !minus.curves.empty()) {
    const double sep = min_separation(plus.curves, minus.curves);
    if (sep <= kDisjointness) {
      std::ostringstream os;
      os << "lifted root sets overlap (separation=" << sep
         << "); the base class looks irregular";
      throw DecompositionOverlap(os.str());
    }
  }
  return {std::move(plus), std::move(minus)};
}

namespace {

MapDescriptor demo_map(Space domain, Space target, int n) {
  if (target == Space::RP2 && domain == Space::RP3 && n != 0 && n % 2 == 0) {
    // Both base-point lifts are hit for RP2 targets and the -y0 fiber of the
    // even-class composite runs through the collapse point. Rotating the S2
    // side moves both fibers off it without leaving the homotopy class.
    std::vector<Generator> chain;
    chain.push_back(Generator::collapse3());
    if (n / 2 != 1) chain.push_back(Generator::power(n / 2));
    chain.push_back(Generator::hopf());
    chain.push_back(Generator::rot_s2(1, 2, kHalfPi));
    chain.push_back(Generator::cover2());
    return MapDescriptor(std::move(chain));
  }
  return maps::build_class_map(target, domain, n);
}

std::string topology_failure(const std::vector<RootSetReport>& reports,
                             const std::string& expect) {
  std::ostringstream os;
  os << "expected " << expect << "; found";
  for (const auto& r : reports) {
    os << " [" << r.component_count << " component(s) over ("
       << r.base_point[0] << "," << r.base_point[1] << "," << r.base_point[2]
       << ")";
    for (const auto& c : r.components) {
      os << (c.closed ? " closed" : " open");
    }
    os << "]";
  }
  return os.str();
}

}  // namespace

DemoResult minimal_root_demo_checked(Space domain, Space target, int n,
                                     const TraceConfig& cfg) {
  TraceConfig demo_cfg = cfg;
  demo_cfg.corrector_tol = std::min(cfg.corrector_tol, kDemoCorrectorTol);
  demo_cfg.seeds = std::max(cfg.seeds, kDemoSeeds);

  DemoResult result{domain, target, n, false, "", {}};
  const MapDescriptor f = demo_map(domain, target, n);

  if (target == Space::S2) {
    result.reports.push_back(
        root_set_report(f, maps::base_point_y0(), demo_cfg));
  } else {
    auto [plus, minus] = rp2_root_decompose(f, maps::base_point_y0(), demo_cfg);
    result.reports.push_back(std::move(plus));
    result.reports.push_back(std::move(minus));
  }

  std::size_t total = 0;
  bool all_closed = true;
  for (const auto& r : result.reports) {
    total += r.component_count;
    for (const auto& c : r.components) all_closed = all_closed && c.closed;
  }

  if (n == 0) {
    result.pass = (total == 0);
    result.detail = result.pass ? "root set empty"
                                : topology_failure(result.reports, "an empty root set");
  } else if (target == Space::S2) {
    result.pass = (total == 1 && all_closed);
    result.detail = result.pass
                        ? "one closed component"
                        : topology_failure(result.reports, "one closed circle");
  } else {
    bool split_ok = result.reports[0].component_count == 1 &&
                    result.reports[1].component_count == 1;
    result.pass = (total == 2 && all_closed && split_ok);
    result.detail = result.pass
                        ? "two disjoint closed components"
                        : topology_failure(result.reports,
                                           "two disjoint closed circles");
  }
  return result;
}

DemoResult minimal_root_demo(Space domain, Space target, int n,
                             const TraceConfig& cfg) {
  DemoResult result = minimal_root_demo_checked(domain, target, n, cfg);
  if (!result.pass) {
    throw TheoremCheckFailed("minimal_root_demo(" +
                             std::string(maps::space_name(domain)) + " -> " +
                             maps::space_name(target) + ", n=" +
                             std::to_string(n) + "): " + result.detail);
  }
  return result;
}

}  // namespace hopfroots::rootlab
