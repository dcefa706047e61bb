#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/geometry.hpp"

namespace hopfroots::maps {

using geom::Vec3;
using geom::Vec4;

enum class Space { S3, S2, RP3, RP2 };

const char* space_name(Space s);
int ambient_dim(Space s);
int tangent_dim(Space s);
bool is_projective(Space s);

/// A tagged ambient point. S2/RP2 points live in the first three slots with
/// the fourth zeroed; projective points always hold the canonical
/// representative of their antipodal class.
struct SpacePoint {
  Space space = Space::S3;
  Vec4 v = Vec4(1, 0, 0, 0);

  Vec3 v3() const { return v.head<3>(); }

  static SpacePoint s3(const Vec4& x);
  static SpacePoint s2(const Vec3& y);
  static SpacePoint rp3(const Vec4& x);
  static SpacePoint rp2(const Vec3& y);
  static SpacePoint make(Space space, const Vec4& x);
};

/// Chordal distance that respects the antipodal identification of
/// projective points.
double space_distance(const SpacePoint& a, const SpacePoint& b);

enum class Gen {
  Hopf,       // S3 -> S2,  (z1,z2) -> (2 Re(z1 conj z2), 2 Im(z1 conj z2), |z1|^2-|z2|^2)
  HPrime,     // RP3 -> S2, descent of Hopf through the double cover
  Power,      // S3 -> S3,  (z1,z2) -> (z1^k, z2)/|(z1^k, z2)|; k<0 uses conj(z1)^{-k}
  PowerRp,    // RP3 -> RP3, induced by Power on the quotient (k odd only)
  Cover3,     // S3 -> RP3, antipodal quotient
  Cover2,     // S2 -> RP2, antipodal quotient
  Collapse3,  // RP3 -> S3, hemisphere collapse: rep with x4 >= 0, r = |(x1,x2,x3)|,
              //            [x] -> (sin(pi r) x'/r, cos(pi r)); r -> 0 limit (0,0,0,1)
  Const,      // constant map
  Antipodal,  // S3 -> S3, x -> -x
  Reflect,    // S3 -> S3, (z1,z2) -> (conj z1, z2)
  QSquare,    // S3 -> S3, unit-quaternion squaring
  RotS3,      // S3 -> S3, rotation by `angle` in the (axis_i, axis_j) plane
  RotS2,      // S2 -> S2, rotation by `angle` in the (axis_i, axis_j) plane
};

struct Generator {
  Gen kind = Gen::Hopf;
  int k = 0;              // Power / PowerRp exponent
  int axis_i = 0;         // rotation plane
  int axis_j = 1;
  double angle = 0.0;
  Vec4 value = Vec4(0, 0, 1, 0);  // Const value (ambient, padded)
  Space const_domain = Space::S3;
  Space const_target = Space::S2;

  Space domain() const;
  Space target() const;

  static Generator hopf() { return {Gen::Hopf}; }
  static Generator hprime() { return {Gen::HPrime}; }
  static Generator power(int k);
  static Generator power_rp(int k);  // throws ParityError for even k
  static Generator cover3() { return {Gen::Cover3}; }
  static Generator cover2() { return {Gen::Cover2}; }
  static Generator collapse3() { return {Gen::Collapse3}; }
  static Generator constant(const SpacePoint& y, Space domain = Space::S3);
  static Generator antipodal() { return {Gen::Antipodal}; }
  static Generator reflect() { return {Gen::Reflect}; }
  static Generator qsquare() { return {Gen::QSquare}; }
  static Generator rot_s3(int i, int j, double angle);
  static Generator rot_s2(int i, int j, double angle);
};

bool operator==(const Generator& a, const Generator& b);

/// An evaluable composition of generators. Generators are stored inner-first:
/// gens()[0] is applied to the input point first.
class MapDescriptor {
 public:
  explicit MapDescriptor(Generator g) : gens_{g} {}
  explicit MapDescriptor(std::vector<Generator> inner_first);

  Space domain() const { return gens_.front().domain(); }
  Space target() const { return gens_.back().target(); }
  const std::vector<Generator>& gens() const { return gens_; }

  /// Composition this-after-inner: (*this) o inner.
  MapDescriptor after(const MapDescriptor& inner) const;

 private:
  std::vector<Generator> gens_;
};

bool operator==(const MapDescriptor& a, const MapDescriptor& b);

/// Evaluates the descriptor at p (inside-out). Throws TypeMismatch when the
/// point's space tag differs from the descriptor domain.
SpacePoint eval(const MapDescriptor& f, const SpacePoint& p);

/// Differential of f at x expressed in the deterministic oriented frames of
/// the domain and target tangent spaces (tangent_dim(target) rows by 3
/// columns; domains are S3 or RP3). Central finite differences with step
/// 1e-6 on tangent coordinates, re-projected to the target tangent space.
/// Throws NonSmoothPoint on the known non-smooth loci (Collapse3 input with
/// r near {0,1}; Power/PowerRp with k <= 0 evaluated near z1 = 0).
Eigen::MatrixXd differential(const MapDescriptor& f, const SpacePoint& x);

/// Ambient-row variant used by the solvers: rows are target ambient
/// coordinates (3 or 4), columns the domain frame directions. Also returns
/// the frame used so callers can map tangent updates back to ambient space.
struct AmbientDifferential {
  Eigen::MatrixXd jac;  // ambient_dim(target) x 3
  geom::TangentFrame frame;
  SpacePoint value;
};
AmbientDifferential ambient_differential(const MapDescriptor& f,
                                         const SpacePoint& x);

/// Analytic ambient Jacobians, provided for Hopf and Power as independent
/// cross-checks of the finite-difference path.
Eigen::Matrix<double, 3, 4> hopf_jacobian_ambient(const Vec4& x);
Eigen::Matrix<double, 4, 4> power_jacobian_ambient(int k, const Vec4& x);

/// Builds the representative of class n for the requested domain/target:
///   S2  <- S3 :  hopf o power(n)          (n != 0)
///   S2  <- RP3:  hprime o power_rp(n)     (n odd)
///                hopf o power(n/2) o collapse3   (n even, n != 0)
///   n = 0     :  constant at (1,0,0), a point off the standard base pair
///   RP2 target:  the S2 construction post-composed with cover2
MapDescriptor build_class_map(Space target, Space domain, int n);

/// Base point y0 = hopf(1,0) = (0,0,1) used throughout the root studies.
Vec3 base_point_y0();

/// Constant value used by the class-0 maps; off the base pair {y0, -y0}.
Vec3 null_class_value();

struct WellDefinedReport {
  Gen generator;
  int k = 0;
  std::size_t samples = 0;
  double max_violation = 0.0;
};

/// Checks the defining equivariance of a quotient-related generator on
/// `samples` quasi-random points:
///   HPrime:    |h(p) - h(-p)|
///   PowerRp:   |a_k(-p) + a_k(p)|  (k odd; even k throws ParityError)
///   Collapse3: value independence of the representative
///   Cover2:    descent of cover2 o hopf through the antipodal quotient
WellDefinedReport verify_well_defined(Gen g, int k, std::size_t samples,
                                      std::uint64_t seed);

}  // namespace hopfroots::maps
