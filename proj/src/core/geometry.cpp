#include "core/geometry.hpp"

#include <array>
#include <cmath>

namespace hopfroots::geom {

namespace {

template <typename Vec>
int largest_abs_index(const Vec& v) {
  int pivot = 0;
  double best = std::abs(v[0]);
  for (int i = 1; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      pivot = i;
    }
  }
  return pivot;
}

}  // namespace

TangentFrame tangent_frame(const PointS3& p) {
  const Vec4 b = p.x;
  const int pivot = largest_abs_index(b);

  std::array<Vec4, 3> e;
  int m = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == pivot) continue;
    Vec4 v = Vec4::Unit(i);
    v -= v.dot(b) * b;
    for (int j = 0; j < m; ++j) v -= v.dot(e[j]) * e[j];
    // second pass keeps orthogonality residuals at machine precision
    v -= v.dot(b) * b;
    for (int j = 0; j < m; ++j) v -= v.dot(e[j]) * e[j];
    e[m++] = unitize(v);
  }

  Mat4 M;
  M.col(0) = b;
  M.col(1) = e[0];
  M.col(2) = e[1];
  M.col(3) = e[2];
  if (M.determinant() < 0.0) e[2] = -e[2];

  return TangentFrame{b, e[0], e[1], e[2]};
}

TangentBasisS2 tangent_basis_s2(const PointS2& p) {
  const Vec3 b = p.y;
  const int pivot = largest_abs_index(b);

  std::array<Vec3, 2> e;
  int m = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pivot) continue;
    Vec3 v = Vec3::Unit(i);
    v -= v.dot(b) * b;
    for (int j = 0; j < m; ++j) v -= v.dot(e[j]) * e[j];
    v -= v.dot(b) * b;
    for (int j = 0; j < m; ++j) v -= v.dot(e[j]) * e[j];
    e[m++] = unitize(v);
  }

  Mat3 M;
  M.col(0) = b;
  M.col(1) = e[0];
  M.col(2) = e[1];
  if (M.determinant() < 0.0) e[1] = -e[1];

  return TangentBasisS2{b, e[0], e[1]};
}

Mat4 rotation_to_north(const Vec4& pole) {
  const Vec4 u = Vec4::Unit(3);
  const double c = pole.dot(u);
  if (c > 1.0 - 1e-14) return Mat4::Identity();
  if (c < -1.0 + 1e-14) {
    // half-turn in the (x3, x4) plane
    Mat4 R = Mat4::Identity();
    R(2, 2) = -1.0;
    R(3, 3) = -1.0;
    return R;
  }
  // rotate within the plane span{w, u}, where pole = s*w + c*u
  Vec4 w = pole - c * u;
  w = unitize(w);
  const double s = pole.dot(w);
  Mat4 R = Mat4::Identity();
  R -= w * w.transpose();
  R -= u * u.transpose();
  // in-plane block sends (s, c) -> (0, 1)
  R += c * (w * w.transpose()) - s * (w * u.transpose()) +
       s * (u * w.transpose()) + c * (u * u.transpose());
  return R;
}

Vec3 stereographic(const PointS3& p, const PointS3& pole) {
  if (angular_distance(p.x, pole.x) <= kPoleEps) {
    throw PoleProximity("point too close to the projection pole");
  }
  const Mat4 R = rotation_to_north(pole.x);
  const Vec4 q = R * p.x;
  const double denom = 1.0 - q[3];
  return Vec3(q[0], q[1], q[2]) / denom;
}

PointS3 stereographic_inverse(const Vec3& q, const PointS3& pole) {
  const double s = q.squaredNorm();
  Vec4 p(2.0 * q[0], 2.0 * q[1], 2.0 * q[2], s - 1.0);
  p /= s + 1.0;
  const Mat4 R = rotation_to_north(pole.x);
  return PointS3(Vec4(R.transpose() * p));
}

}  // namespace hopfroots::geom
