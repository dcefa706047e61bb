#include "core/linking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "core/sampling.hpp"

namespace hopfroots::link {

namespace {

using geom::Vec4;
using maps::Generator;
using maps::Space;
using maps::SpacePoint;

constexpr double kFourPi = 12.566370614359172953850573533118;

// Global orientation calibration: fixed so that hopf_invariant(hopf) = +1
// under the tracer's kernel-vector fiber orientation.
constexpr int kHopfOrientationSign = 1;

double min_distance_to_curve_vertices(const Vec4& p, const Curve& c) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec4& q : c.points) best = std::min(best, (p - q).norm());
  return best;
}

double max_vertex_gap(const Curve& c) {
  double worst = 0.0;
  const auto& pts = c.points;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    worst = std::max(worst, (pts[i] - pts[i + 1]).norm());
  }
  if (c.closed && pts.size() > 1) {
    worst = std::max(worst, (pts.back() - pts.front()).norm());
  }
  return worst;
}

double min_curve_separation(const Curve& a, const Curve& b) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec4& p : a.points) {
    best = std::min(best, trace::point_to_curve(p, b));
  }
  for (const Vec4& p : b.points) {
    best = std::min(best, trace::point_to_curve(p, a));
  }
  return best;
}

// Pole for the stereographic picture: the candidate maximizing the distance
// to both curves, drawn from a fixed deterministic set.
Vec4 choose_pole(const Curve& c1, const Curve& c2) {
  std::vector<Vec4> candidates = geom::sample_s3(64, 0x706f6c65ULL);
  for (int i = 0; i < 4; ++i) {
    candidates.push_back(Vec4::Unit(i));
    candidates.push_back(-Vec4::Unit(i));
  }
  double best = -1.0;
  Vec4 pole = Vec4::Unit(3);
  for (const Vec4& cand : candidates) {
    const double d = std::min(min_distance_to_curve_vertices(cand, c1),
                              min_distance_to_curve_vertices(cand, c2));
    if (d > best) {
      best = d;
      pole = cand;
    }
  }
  return pole;
}

std::vector<Vec3> project_curve(const Curve& c, const Vec4& pole) {
  const geom::PointS3 p(pole);
  std::vector<Vec3> out;
  out.reserve(c.points.size());
  for (const Vec4& q : c.points) {
    out.push_back(geom::stereographic(geom::PointS3(q), p));
  }
  return out;
}

// Midpoint-rule Gauss double integral over the two closed polylines.
double gauss_integral(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Vec3> amid(na), adir(na), bmid(nb), bdir(nb);
  for (std::size_t i = 0; i < na; ++i) {
    const Vec3& p0 = a[i];
    const Vec3& p1 = a[(i + 1) % na];
    amid[i] = 0.5 * (p0 + p1);
    adir[i] = p1 - p0;
  }
  for (std::size_t j = 0; j < nb; ++j) {
    const Vec3& q0 = b[j];
    const Vec3& q1 = b[(j + 1) % nb];
    bmid[j] = 0.5 * (q0 + q1);
    bdir[j] = q1 - q0;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const Vec3 d = amid[i] - bmid[j];
      const double r2 = d.squaredNorm();
      const double r3 = r2 * std::sqrt(r2);
      total += d.dot(adir[i].cross(bdir[j])) / r3;
    }
  }
  return total / kFourPi;
}

// Signed crossings of the plane projection along direction `dir`; returns
// false on a degenerate configuration (the caller retries with a new
// direction).
bool crossing_sum(const std::vector<Vec3>& a, const std::vector<Vec3>& b,
                  const Vec3& dir, double* out) {
  const geom::TangentBasisS2 basis =
      geom::tangent_basis_s2(geom::PointS2(dir));
  const Vec3 u = basis.u, v = basis.v;

  const std::size_t na = a.size(), nb = b.size();
  double scale = 0.0;
  for (const Vec3& p : a) scale = std::max(scale, p.norm());
  for (const Vec3& p : b) scale = std::max(scale, p.norm());
  const double eps_t = 1e-9;
  const double eps_h = 1e-9 * std::max(scale, 1.0);

  int sum = 0;
  for (std::size_t i = 0; i < na; ++i) {
    const Vec3& p0 = a[i];
    const Vec3& p1 = a[(i + 1) % na];
    const Eigen::Vector2d A0(p0.dot(u), p0.dot(v));
    const Eigen::Vector2d A1(p1.dot(u), p1.dot(v));
    const Eigen::Vector2d da = A1 - A0;
    for (std::size_t j = 0; j < nb; ++j) {
      const Vec3& q0 = b[j];
      const Vec3& q1 = b[(j + 1) % nb];
      const Eigen::Vector2d B0(q0.dot(u), q0.dot(v));
      const Eigen::Vector2d B1(q1.dot(u), q1.dot(v));
      const Eigen::Vector2d db = B1 - B0;

      const double den = da.x() * db.y() - da.y() * db.x();
      const Eigen::Vector2d rhs = B0 - A0;
      if (std::abs(den) < 1e-14 * (da.norm() * db.norm() + 1e-300)) {
        // parallel segments: degenerate only if they could overlap
        const double off = std::abs(rhs.x() * da.y() - rhs.y() * da.x());
        if (off < eps_h * da.norm()) return false;
        continue;
      }
      const double s = (rhs.x() * db.y() - rhs.y() * db.x()) / den;
      const double t = (rhs.x() * da.y() - rhs.y() * da.x()) / den;
      if (s < -eps_t || s > 1.0 + eps_t || t < -eps_t || t > 1.0 + eps_t) {
        continue;
      }
      if (s < eps_t || s > 1.0 - eps_t || t < eps_t || t > 1.0 - eps_t) {
        return false;  // intersection too close to a vertex
      }
      const double ha = (p0 + s * (p1 - p0)).dot(dir);
      const double hb = (q0 + t * (q1 - q0)).dot(dir);
      if (std::abs(ha - hb) < eps_h) return false;

      // knot-theory crossing sign: det[t_over, t_under] in the plane
      const bool a_over = ha > hb;
      const double det =
          a_over ? (da.x() * db.y() - da.y() * db.x())
                 : (db.x() * da.y() - db.y() * da.x());
      sum += det > 0.0 ? 1 : -1;
    }
  }
  if (sum % 2 != 0) return false;  // a crossing was missed or double-counted
  *out = 0.5 * static_cast<double>(sum);
  return true;
}

double crossing_number(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  const auto dirs = geom::sample_s2(20, 0x63726f73ULL);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const Vec3 dir = attempt == 0 ? Vec3(0.0, 0.0, 1.0) : dirs[attempt];
    double value = 0.0;
    if (crossing_sum(a, b, dir, &value)) return value;
  }
  throw ProjectionFailure(
      "crossing count: no generic projection direction in 20 attempts");
}

LinkResult finish(double raw, LinkMethod method) {
  LinkResult r;
  r.raw = raw;
  r.method = method;
  r.value = static_cast<int>(std::lround(raw));
  r.residual = std::abs(raw - r.value);
  if (r.residual >= kLinkResidualMax) {
    std::ostringstream os;
    os << "linking number quadrature too far from an integer (raw=" << raw
       << ")";
    throw ProjectionFailure(os.str());
  }
  return r;
}

// Deterministic small rotation taking the default value off an irregular
// configuration; attempt 0 is the identity.
Vec3 perturb_value(const Vec3& y, int attempt, std::uint64_t salt) {
  if (attempt == 0) return y;
  const auto axes = geom::sample_s2(32, 0xabcdULL ^ salt);
  const Vec3 axis = axes[attempt % 32];
  const double angle = 0.15 + 0.02 * attempt;
  // Rodrigues rotation
  const Vec3 k = axis.normalized();
  return y * std::cos(angle) + k.cross(y) * std::sin(angle) +
         k * k.dot(y) * (1.0 - std::cos(angle));
}

}  // namespace

LinkResult linking_number(const Curve& c1, const Curve& c2,
                          LinkMethod method) {
  if (!c1.closed || !c2.closed) {
    throw DegenerateInput("linking_number: both curves must be closed");
  }
  const double gap = std::max(max_vertex_gap(c1), max_vertex_gap(c2));
  const double sep = min_curve_separation(c1, c2);
  if (sep <= 10.0 * gap) {
    std::ostringstream os;
    os << "curves too close for reliable linking (separation=" << sep
       << ", max gap=" << gap << ")";
    throw CurvesNotSeparated(os.str());
  }

  const Vec4 pole = choose_pole(c1, c2);
  const auto p1 = project_curve(c1, pole);
  const auto p2 = project_curve(c2, pole);

  switch (method) {
    case LinkMethod::Gauss:
      return finish(gauss_integral(p1, p2), LinkMethod::Gauss);
    case LinkMethod::Crossing:
      return finish(crossing_number(p1, p2), LinkMethod::Crossing);
    case LinkMethod::Both: {
      const LinkResult g = finish(gauss_integral(p1, p2), LinkMethod::Gauss);
      const LinkResult x = finish(crossing_number(p1, p2), LinkMethod::Crossing);
      if (g.value != x.value) {
        std::ostringstream os;
        os << "Gauss and crossing methods disagree: " << g.value << " vs "
           << x.value;
        throw ProjectionFailure(os.str());
      }
      return g;
    }
  }
  throw ProjectionFailure("unknown linking method");
}

HopfInvariantResult hopf_invariant_detail(const MapDescriptor& f,
                                          const TraceConfig& cfg) {
  if (f.domain() != Space::S3 || f.target() != Space::S2) {
    throw TypeMismatch("hopf_invariant: map from S3 to S2 required");
  }
  const Vec3 y1_default(0.0, 0.0, 1.0);
  const Vec3 y2_default(0.0, 0.0, -1.0);

  // Critical fibers leave corrector-converged roots within ~1e-5 of the
  // singular set (sigma of order sqrt(corrector_tol)); honest regular fibers
  // in the zoo stay above ~5e-2. The gate sits between.
  TraceConfig tc = cfg;
  if (tc.irregular_value_tol <= 0.0) tc.irregular_value_tol = 1e-3;

  for (int attempt = 0; attempt < 20; ++attempt) {
    const Vec3 y1 = perturb_value(y1_default, attempt, 0x01);
    const Vec3 y2 = perturb_value(y2_default, attempt, 0x02);
    try {
      TraceConfig t1 = tc;
      t1.seed = tc.seed + 101 * attempt;
      const auto fiber1 = trace::find_root_components(f, y1, t1);
      TraceConfig t2 = tc;
      t2.seed = tc.seed + 101 * attempt + 50;
      const auto fiber2 = trace::find_root_components(f, y2, t2);

      HopfInvariantResult out;
      out.fiber1_components = fiber1.size();
      out.fiber2_components = fiber2.size();
      out.attempts = attempt + 1;
      out.asymmetric_empty = fiber1.empty() != fiber2.empty();
      int total = 0;
      for (const Curve& a : fiber1) {
        for (const Curve& b : fiber2) {
          total += linking_number(a, b, LinkMethod::Both).value;
        }
      }
      out.value = kHopfOrientationSign * total;
      return out;
    } catch (const IrregularValue&) {
    } catch (const SingularCurvePoint&) {
    } catch (const CurvesNotSeparated&) {
    } catch (const NonSmoothPoint&) {
    } catch (const ProjectionFailure&) {
    }
    // retry with the next perturbation
  }
  throw CriticalValueSearchFailed(
      "hopf_invariant: no regular value pair found in 20 attempts");
}

int hopf_invariant(const MapDescriptor& f, const TraceConfig& cfg) {
  return hopf_invariant_detail(f, cfg).value;
}

std::vector<ClassificationRow> verify_classification(int nmin, int nmax,
                                                     const TraceConfig& cfg) {
  if (nmin > nmax) throw DegenerateInput("verify_classification: empty range");
  std::vector<ClassificationRow> table;
  int bad_n = 0;
  bool failed = false;
  for (int n = nmin; n <= nmax; ++n) {
    const MapDescriptor hn = maps::build_class_map(Space::S2, Space::RP3, n);
    const MapDescriptor lifted =
        hn.after(MapDescriptor(Generator::cover3()));
    TraceConfig tc = cfg;
    tc.seed = cfg.seed + static_cast<std::uint64_t>(n - nmin);
    const int inv = hopf_invariant(lifted, tc);
    table.push_back({n, inv, inv == n});
    if (inv != n && !failed) {
      failed = true;
      bad_n = n;
    }
  }
  if (failed) {
    std::ostringstream os;
    os << "classification mismatch at n=" << bad_n;
    throw ClassificationMismatchWithTable(os.str(), std::move(table), bad_n);
  }
  return table;
}

}  // namespace hopfroots::link
