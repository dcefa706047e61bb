#pragma once

#include <Eigen/Dense>

#include "core/errors.hpp"

namespace hopfroots::geom {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Unit-norm tolerance for points on a sphere; constructors re-normalize
/// rather than reject near-unit input.
inline constexpr double kUnitTol = 1e-12;

/// Orthonormality tolerance for tangent frames.
inline constexpr double kFrameTol = 1e-10;

/// Minimum angular distance from the projection pole.
inline constexpr double kPoleEps = 1e-6;

/// Returns v/|v|; throws DegenerateInput when |v| = 0.
template <typename Vec>
Vec unitize(const Vec& v) {
  const double n = v.norm();
  if (n == 0.0) throw DegenerateInput("cannot normalize the zero vector");
  return v / n;
}

/// Canonical antipodal representative: x/|x| with the sign flipped so the
/// coordinate of largest absolute value is positive (ties broken by lowest
/// index). canonical_rep(-x) == canonical_rep(x) for all nonzero x.
template <typename Vec>
Vec canonical_rep(const Vec& x) {
  Vec u = unitize(x);
  int pivot = 0;
  double best = std::abs(u[0]);
  for (int i = 1; i < u.size(); ++i) {
    const double a = std::abs(u[i]);
    if (a > best) {
      best = a;
      pivot = i;
    }
  }
  if (u[pivot] < 0.0) u = -u;
  return u;
}

/// A point on the unit 3-sphere, viewed as (z1, z2) = (x1+ix2, x3+ix4).
struct PointS3 {
  Vec4 x{1.0, 0.0, 0.0, 0.0};

  PointS3() = default;
  explicit PointS3(const Vec4& v) : x(unitize(v)) {}
  PointS3(double a, double b, double c, double d) : PointS3(Vec4(a, b, c, d)) {}
};

/// A point on the unit 2-sphere.
struct PointS2 {
  Vec3 y{0.0, 0.0, 1.0};

  PointS2() = default;
  explicit PointS2(const Vec3& v) : y(unitize(v)) {}
  PointS2(double a, double b, double c) : PointS2(Vec3(a, b, c)) {}
};

/// An antipodal class in RP^3, held through its canonical representative.
struct PointRP3 {
  PointS3 rep;

  PointRP3() = default;
  explicit PointRP3(const Vec4& v) { rep.x = canonical_rep(v); }
};

/// An antipodal class in RP^2.
struct PointRP2 {
  PointS2 rep;

  PointRP2() = default;
  explicit PointRP2(const Vec3& v) { rep.y = canonical_rep(v); }
};

/// Positively-oriented orthonormal frame of the tangent space at a point of
/// S^3: {base, e1, e2, e3} orthonormal with det[base|e1|e2|e3] = +1.
struct TangentFrame {
  Vec4 base;
  Vec4 e1, e2, e3;

  Eigen::Matrix<double, 4, 3> basis() const {
    Eigen::Matrix<double, 4, 3> b;
    b.col(0) = e1;
    b.col(1) = e2;
    b.col(2) = e3;
    return b;
  }
};

/// Oriented orthonormal tangent basis at a point of S^2:
/// det[base|u|v] = +1.
struct TangentBasisS2 {
  Vec3 base;
  Vec3 u, v;

  Eigen::Matrix<double, 3, 2> basis() const {
    Eigen::Matrix<double, 3, 2> b;
    b.col(0) = u;
    b.col(1) = v;
    return b;
  }
};

/// Deterministic positively-oriented tangent frame at p. Gram-Schmidt of the
/// standard basis vectors against p, dropping the pivot axis selected by the
/// largest-|coordinate| rule.
TangentFrame tangent_frame(const PointS3& p);

/// S^2 counterpart of tangent_frame.
TangentBasisS2 tangent_basis_s2(const PointS2& p);

/// Stereographic projection of p from `pole`, computed after rotating the
/// pole to (0,0,0,1). Throws PoleProximity when p lies within kPoleEps of
/// the pole.
Vec3 stereographic(const PointS3& p, const PointS3& pole);

/// Inverse of stereographic(): maps q in R^3 back onto S^3.
PointS3 stereographic_inverse(const Vec3& q, const PointS3& pole);

/// Rotation taking `pole` to (0,0,0,1); an in-plane rotation with det +1.
Mat4 rotation_to_north(const Vec4& pole);

/// Angular (geodesic) distance, robust near zero.
inline double angular_distance(const Vec4& a, const Vec4& b) {
  return 2.0 * std::asin(std::min(1.0, 0.5 * (a - b).norm()));
}
inline double angular_distance(const Vec3& a, const Vec3& b) {
  return 2.0 * std::asin(std::min(1.0, 0.5 * (a - b).norm()));
}

/// Chordal distance between antipodal classes.
inline double quotient_distance(const Vec4& a, const Vec4& b) {
  return std::min((a - b).norm(), (a + b).norm());
}

}  // namespace hopfroots::geom
