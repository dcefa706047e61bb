#include "core/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "core/sampling.hpp"

namespace hopfroots::trace {

namespace {

using geom::TangentBasisS2;
using geom::TangentFrame;
using maps::ambient_differential;
using maps::Generator;

constexpr int kCorrectorIters = 25;
constexpr double kCorrectorClamp = 0.3;
constexpr double kClosureAlignment = 0.9;

struct TangentSystem {
  Eigen::Matrix<double, 2, 3> J;   // rows: chart gradients in the domain frame
  Eigen::Vector2d F;               // chart residual
  TangentFrame frame;
  Vec4 value;                      // f(x) ambient
};

// Chart at y is the fixed oriented tangent basis; the traced system is
// F(x) = basis(y)^T (f(x) - y) = 0.
TangentSystem tangent_system(const MapDescriptor& f, const TangentBasisS2& yb,
                             const Vec3& y, const SpacePoint& x) {
  const auto ad = ambient_differential(f, x);
  TangentSystem sys;
  sys.frame = ad.frame;
  sys.value = ad.value.v;
  const Vec3 fx = ad.value.v3();
  sys.F[0] = yb.u.dot(fx - y);
  sys.F[1] = yb.v.dot(fx - y);
  sys.J.row(0) = yb.u.transpose() * ad.jac.topRows(3);
  sys.J.row(1) = yb.v.transpose() * ad.jac.topRows(3);
  return sys;
}

// Unit kernel vector of the 2x3 system in domain-frame coordinates: the
// cross product of the two gradient rows. Its sign, together with the
// oriented frames, fixes the orientation every fiber is traced with.
Eigen::Vector3d kernel_direction(const Eigen::Matrix<double, 2, 3>& J) {
  const Eigen::Vector3d r0 = J.row(0);
  const Eigen::Vector3d r1 = J.row(1);
  return r0.cross(r1);
}

double smallest_sv(const Eigen::Matrix<double, 2, 3>& J) {
  const Eigen::JacobiSVD<Eigen::Matrix<double, 2, 3>> svd(J);
  return svd.singularValues().minCoeff();
}

MapDescriptor lift_if_needed(const MapDescriptor& f, bool* lifted) {
  if (f.domain() == Space::RP3) {
    *lifted = true;
    return f.after(MapDescriptor(Generator::cover3()));
  }
  *lifted = false;
  return f;
}

double segment_distance(const Vec4& p, const Vec4& a, const Vec4& b) {
  const Vec4 d = b - a;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  double t = (p - a).dot(d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return (p - (a + t * d)).norm();
}

}  // namespace

void TraceConfig::validate() const {
  if (step <= 0.0) throw DegenerateInput("TraceConfig: step must be positive");
  if (closure_radius > 0.0 && closure_radius >= step) {
    throw DegenerateInput("TraceConfig: closure_radius must stay below step");
  }
  if (corrector_tol <= 0.0 || component_dedupe <= 0.0 || rank_tol <= 0.0) {
    throw DegenerateInput("TraceConfig: tolerances must be positive");
  }
  if (seeds < 1 || max_steps < 1) {
    throw DegenerateInput("TraceConfig: seeds and max_steps must be positive");
  }
}

Vec4 corrector_project(const MapDescriptor& f, const Vec3& y, const Vec4& x,
                       const TraceConfig& cfg) {
  if (f.target() != Space::S2) {
    throw TypeMismatch("corrector_project: S2 target required");
  }
  const Vec3 yu = geom::unitize(y);
  const TangentBasisS2 yb = geom::tangent_basis_s2(geom::PointS2(yu));
  Vec4 cur = geom::unitize(x);
  for (int iter = 0; iter < kCorrectorIters; ++iter) {
    const SpacePoint p = SpacePoint::s3(cur);
    const Vec3 fx = maps::eval(f, p).v3();
    if ((fx - yu).norm() < cfg.corrector_tol && fx.dot(yu) > 0.0) return cur;

    const TangentSystem sys = tangent_system(f, yb, yu, p);
    // minimum-norm update: delta = J^T (J J^T)^{-1} (-F), via a truncated
    // pseudo-inverse so rank-deficient points do not blow up
    const Eigen::JacobiSVD<Eigen::Matrix<double, 2, 3>> svd(
        sys.J, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::Vector2d scaled = svd.matrixU().transpose() * (-sys.F);
    for (int i = 0; i < 2; ++i) {
      scaled[i] = sv[i] > 1e-13 ? scaled[i] / sv[i] : 0.0;
    }
    Eigen::Vector3d delta =
        svd.matrixV().leftCols(2) * scaled;
    const double n = delta.norm();
    if (n > kCorrectorClamp) delta *= kCorrectorClamp / n;
    cur = geom::unitize(Vec4(cur + sys.frame.basis() * delta));
  }
  throw CorrectorDiverged("corrector did not reach tolerance in 25 iterations");
}

Curve trace_component(const MapDescriptor& f, const Vec3& y, const Vec4& x0,
                      const TraceConfig& cfg) {
  cfg.validate();
  if (f.target() != Space::S2) {
    throw TypeMismatch("trace_component: S2 target required");
  }
  const Vec3 yu = geom::unitize(y);
  const TangentBasisS2 yb = geom::tangent_basis_s2(geom::PointS2(yu));
  const double closure_radius = cfg.closure();

  Curve curve;
  Vec4 x = corrector_project(f, yu, x0, cfg);
  curve.points.push_back(x);

  TangentSystem sys = tangent_system(f, yb, yu, SpacePoint::s3(x));
  double sigma = smallest_sv(sys.J);
  curve.min_sigma = sigma;
  if (sigma < cfg.rank_tol) {
    throw SingularCurvePoint("rank drop at the starting root");
  }

  auto ambient_tangent = [&](const TangentSystem& s) {
    const Eigen::Vector3d k = kernel_direction(s.J).normalized();
    return Vec4(s.frame.basis() * k);
  };

  Vec4 t0 = ambient_tangent(sys);
  Vec4 t_prev = t0;
  const Vec4 start = x;

  for (int step_idx = 1; step_idx <= cfg.max_steps; ++step_idx) {
    const Vec4 prev = x;
    const Vec4 predicted = geom::unitize(Vec4(x + cfg.step * t_prev));
    x = corrector_project(f, yu, predicted, cfg);

    sys = tangent_system(f, yb, yu, SpacePoint::s3(x));
    sigma = smallest_sv(sys.J);
    curve.min_sigma = std::min(curve.min_sigma, sigma);
    if (sigma < cfg.rank_tol) {
      std::ostringstream os;
      os << "rank drop along the curve at step " << step_idx << " (sigma_min="
         << sigma << ")";
      throw SingularCurvePoint(os.str());
    }

    Vec4 t = ambient_tangent(sys);
    if (t.dot(t_prev) < 0.0) t = -t;

    curve.points.push_back(x);
    t_prev = t;

    if (step_idx >= cfg.min_steps_before_closure) {
      const bool near_vertex = (x - start).norm() < closure_radius;
      const bool near_segment =
          segment_distance(start, prev, x) < closure_radius;
      if ((near_vertex || near_segment) && t.dot(t0) > kClosureAlignment) {
        if (!near_vertex) {
          // land the final vertex inside the closure ball
          const Vec4 mid = geom::unitize(Vec4(0.5 * (prev + x)));
          const Vec4 xc = corrector_project(f, yu, mid, cfg);
          if ((xc - start).norm() < closure_radius) curve.points.back() = xc;
        }
        if ((curve.points.back() - start).norm() < closure_radius) {
          curve.closed = true;
          break;
        }
      }
    }
  }

  if (!curve.closed) {
    throw OpenOrTooLong("trace exceeded max_steps without closing");
  }

  double len = 0.0;
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    len += geom::angular_distance(curve.points[i], curve.points[i + 1]);
  }
  len += geom::angular_distance(curve.points.back(), curve.points.front());
  curve.length = len;
  return curve;
}

std::vector<Curve> find_root_components(const MapDescriptor& f, const Vec3& y,
                                        const TraceConfig& cfg) {
  cfg.validate();
  bool lifted = false;
  const MapDescriptor g = lift_if_needed(f, &lifted);
  if (g.target() != Space::S2) {
    throw TypeMismatch("find_root_components: S2 target required");
  }
  const Vec3 yu = geom::unitize(y);
  const TangentBasisS2 yb = geom::tangent_basis_s2(geom::PointS2(yu));

  std::vector<Curve> curves;
  auto near_known = [&](const Vec4& p) {
    for (const Curve& c : curves) {
      if (point_to_curve(p, c) < cfg.component_dedupe) return true;
      if (lifted && point_to_curve(Vec4(-p), c) < cfg.component_dedupe) {
        return true;
      }
    }
    return false;
  };

  for (const Vec4& s : geom::sample_s3(cfg.seeds, cfg.seed)) {
    Vec4 root;
    try {
      root = corrector_project(g, yu, s, cfg);
    } catch (const CorrectorDiverged&) {
      continue;  // silently dropped; the caller sees only converged seeds
    } catch (const NonSmoothPoint&) {
      continue;
    }
    if (cfg.irregular_value_tol > 0.0) {
      const TangentSystem sys = tangent_system(g, yb, yu, SpacePoint::s3(root));
      if (smallest_sv(sys.J) < cfg.irregular_value_tol) {
        throw IrregularValue(
            "find_root_components: near-singular root; perturb the value");
      }
    }
    if (near_known(root)) continue;

    const Curve traced = trace_component(g, yu, root, cfg);
    bool duplicate = false;
    for (const Curve& c : curves) {
      if (curve_hausdorff(traced, c) < cfg.component_dedupe) {
        duplicate = true;
        break;
      }
      if (lifted &&
          curve_hausdorff(antipode(traced), c) < cfg.component_dedupe) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) curves.push_back(traced);
  }

  if (lifted) {
    for (Curve& c : curves) c.space = Space::RP3;
  }
  return curves;
}

double max_residual(const MapDescriptor& f, const Vec3& y, const Curve& c) {
  bool lifted = false;
  const MapDescriptor g = lift_if_needed(f, &lifted);
  const Vec3 yu = geom::unitize(y);
  double worst = 0.0;
  for (const Vec4& p : c.points) {
    const Vec3 fp = maps::eval(g, SpacePoint::s3(p)).v3();
    worst = std::max(worst, (fp - yu).norm());
  }
  return worst;
}

double point_to_curve(const Vec4& p, const Curve& c) {
  double best = std::numeric_limits<double>::infinity();
  const auto& pts = c.points;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    best = std::min(best, segment_distance(p, pts[i], pts[i + 1]));
  }
  if (c.closed && pts.size() > 1) {
    best = std::min(best, segment_distance(p, pts.back(), pts.front()));
  }
  if (pts.size() == 1) best = (p - pts[0]).norm();
  return best;
}

double directed_distance(const Curve& c, const Curve& other) {
  double worst = 0.0;
  for (const Vec4& p : c.points) {
    worst = std::max(worst, point_to_curve(p, other));
  }
  return worst;
}

double curve_hausdorff(const Curve& a, const Curve& b) {
  return std::max(directed_distance(a, b), directed_distance(b, a));
}

Curve antipode(const Curve& c) {
  Curve out = c;
  for (Vec4& p : out.points) p = -p;
  return out;
}

}  // namespace hopfroots::trace
