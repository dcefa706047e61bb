#include "core/degree.hpp"

#include <cmath>

#include "core/sampling.hpp"

namespace hopfroots::deg {

namespace {

using geom::TangentFrame;
using maps::ambient_differential;
using maps::differential;
using maps::Gen;
using maps::Generator;

constexpr double kSingularSv = 1e-6;
constexpr double kStepClamp = 0.5;

MapDescriptor lift_through_cover(const MapDescriptor& f) {
  return f.after(MapDescriptor(Generator::cover3()));
}

// Newton iteration for f(x) = y on maps S3 -> S3, solved in the tangent
// frame at y. Returns the solution or nullopt when the seed does not
// converge.
std::optional<Vec4> newton_solve(const MapDescriptor& f, const Vec4& y,
                                 const TangentFrame& y_frame, Vec4 x,
                                 const DegreeConfig& cfg) {
  const Eigen::Matrix<double, 4, 3> yb = y_frame.basis();
  for (int iter = 0; iter < cfg.max_newton_iters; ++iter) {
    SpacePoint p = SpacePoint::s3(x);
    Vec4 fx;
    try {
      fx = maps::eval(f, p).v;
      if ((fx - y).norm() < cfg.newton_tol && fx.dot(y) > 0.0) return x;
      const auto ad = ambient_differential(f, p);
      const Eigen::Vector3d resid = yb.transpose() * (fx - y);
      const Eigen::Matrix3d J = yb.transpose() * ad.jac;
      Eigen::Vector3d delta = J.partialPivLu().solve(-resid);
      if (!delta.allFinite()) return std::nullopt;
      const double n = delta.norm();
      if (n > kStepClamp) delta *= kStepClamp / n;
      x = geom::unitize(Vec4(x + ad.frame.basis() * delta));
    } catch (const Error&) {
      return std::nullopt;  // stepped into a non-smooth locus; drop the seed
    }
  }
  return std::nullopt;
}

int sign_of(const MapDescriptor& f, const Vec4& x, bool* regular) {
  const Eigen::MatrixXd J = differential(f, SpacePoint::s3(x));
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
  const double smin = svd.singularValues().minCoeff();
  if (smin < kSingularSv) {
    if (regular) *regular = false;
    return 0;
  }
  return J.determinant() > 0.0 ? 1 : -1;
}

}  // namespace

void DegreeConfig::validate() const {
  if (seeds < 1) throw DegenerateInput("DegreeConfig: seeds >= 1 required");
  if (newton_tol <= 0.0 || dedupe_tol <= 0.0) {
    throw DegenerateInput("DegreeConfig: tolerances must be positive");
  }
}

PreimageSet find_preimages(const MapDescriptor& f, const Vec4& y,
                           const DegreeConfig& cfg) {
  cfg.validate();
  if (f.target() != Space::S3) {
    throw TypeMismatch("find_preimages: S3-valued maps only");
  }
  const bool quotient = (f.domain() == Space::RP3);
  const MapDescriptor g = quotient ? lift_through_cover(f) : f;

  const Vec4 yu = geom::unitize(y);
  const TangentFrame y_frame = geom::tangent_frame(geom::PointS3(yu));

  std::vector<Vec4> roots;
  int dropped = 0;
  auto add_root = [&](const Vec4& x) {
    for (const Vec4& r : roots) {
      if (geom::angular_distance(r, x) < cfg.dedupe_tol) return;
    }
    roots.push_back(x);
  };

  for (const Vec4& s : geom::sample_s3(cfg.seeds, cfg.seed)) {
    const auto sol = newton_solve(g, yu, y_frame, s, cfg);
    if (!sol) {
      ++dropped;
      continue;
    }
    add_root(*sol);
  }

  if (quotient) {
    // the lift is antipodally symmetric: complete each orbit, then keep one
    // representative per class
    const std::size_t found = roots.size();
    for (std::size_t i = 0; i < found; ++i) add_root(Vec4(-roots[i]));
    std::vector<Vec4> reps;
    for (const Vec4& r : roots) {
      const Vec4 c = geom::canonical_rep(r);
      bool seen = false;
      for (const Vec4& q : reps) {
        if (geom::quotient_distance(q, c) < cfg.dedupe_tol) {
          seen = true;
          break;
        }
      }
      if (!seen) reps.push_back(c);
    }
    // antipodal lifts must carry equal signs; verify while deduping
    PreimageSet out;
    out.dropped_seeds = dropped;
    for (const Vec4& r : reps) {
      bool regular = true;
      const int s_plus = sign_of(g, r, &regular);
      const int s_minus = sign_of(g, Vec4(-r), &regular);
      if (!regular) {
        throw IrregularValue("find_preimages: near-singular preimage; perturb y");
      }
      if (s_plus != s_minus) {
        throw IrregularValue("find_preimages: antipodal lifts disagree in sign");
      }
      out.points.push_back(r);
      out.signs.push_back(s_plus);
    }
    return out;
  }

  PreimageSet out;
  out.dropped_seeds = dropped;
  for (const Vec4& r : roots) {
    bool regular = true;
    const int s = sign_of(f, r, &regular);
    if (!regular) {
      throw IrregularValue("find_preimages: near-singular preimage; perturb y");
    }
    out.points.push_back(r);
    out.signs.push_back(s);
  }
  return out;
}

int local_sign(const MapDescriptor& f, const SpacePoint& x) {
  const Eigen::MatrixXd J = differential(f, x);
  if (J.rows() != J.cols()) {
    throw TypeMismatch("local_sign: differential must be square");
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
  if (svd.singularValues().minCoeff() < kSingularSv) {
    throw IrregularPoint("local_sign: singular differential");
  }
  return J.determinant() > 0.0 ? 1 : -1;
}

int compute_degree(const MapDescriptor& f, const DegreeConfig& cfg) {
  cfg.validate();
  std::uint64_t value_seed = cfg.seed ^ 0x9d2c5680u;
  const auto candidates = geom::sample_s3(20, value_seed);
  for (const Vec4& y : candidates) {
    PreimageSet pre;
    try {
      pre = find_preimages(f, y, cfg);
    } catch (const IrregularValue&) {
      continue;
    }
    int degree = 0;
    for (int s : pre.signs) degree += s;
    if (cfg.stability_check) {
      DegreeConfig doubled = cfg;
      doubled.seeds = 2 * cfg.seeds;
      doubled.stability_check = false;
      const PreimageSet again = find_preimages(f, y, doubled);
      int degree2 = 0;
      for (int s : again.signs) degree2 += s;
      if (degree2 != degree || again.points.size() != pre.points.size()) {
        throw UnstableCount("compute_degree: count changed under doubled seeding");
      }
    }
    return degree;
  }
  throw CriticalValueSearchFailed(
      "compute_degree: no regular value found in 20 attempts");
}

}  // namespace hopfroots::deg
