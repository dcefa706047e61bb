#include "core/map_zoo.hpp"

#include <cmath>
#include <complex>

#include "core/sampling.hpp"

namespace hopfroots::maps {

namespace {

using Complex = std::complex<double>;

constexpr double kFdStep = 1e-6;
constexpr double kNonSmoothRadius = 1e-7;
// The conjugate-power extension is smooth in the real sense, so only flag
// evaluation essentially at the z1 = 0 locus itself.
constexpr double kPowerLocusRadius = 1e-9;
constexpr double kPi = 3.1415926535897932384626433832795;

Complex z1_of(const Vec4& x) { return {x[0], x[1]}; }
Complex z2_of(const Vec4& x) { return {x[2], x[3]}; }

Vec4 from_complex(const Complex& a, const Complex& b) {
  return Vec4(a.real(), a.imag(), b.real(), b.imag());
}

Complex signed_power(const Complex& z, int k) {
  if (k >= 0) return std::pow(z, k);
  return std::pow(std::conj(z), -k);
}

Vec3 hopf_formula(const Vec4& x) {
  const Complex w = z1_of(x) * std::conj(z2_of(x));
  return Vec3(2.0 * w.real(), 2.0 * w.imag(),
              std::norm(z1_of(x)) - std::norm(z2_of(x)));
}

Vec4 power_formula(int k, const Vec4& x) {
  const Complex w1 = signed_power(z1_of(x), k);
  const Vec4 w = from_complex(w1, z2_of(x));
  return geom::unitize(w);
}

// sin(pi r)/r with the smooth continuation at r = 0.
double collapse_radial(double r) {
  if (r < 1e-8) {
    const double t = kPi * r;
    return kPi * (1.0 - t * t / 6.0);
  }
  return std::sin(kPi * r) / r;
}

Vec4 collapse_formula(const Vec4& rep) {
  Vec4 x = rep;
  if (x[3] < 0.0) x = -x;  // representative with x4 >= 0
  const double r = x.head<3>().norm();
  const double f = collapse_radial(r);
  Vec4 out(f * x[0], f * x[1], f * x[2], std::cos(kPi * r));
  return geom::unitize(out);
}

Vec4 qsquare_formula(const Vec4& x) {
  const double a = x[0];
  Vec4 out(2.0 * a * a - 1.0, 2.0 * a * x[1], 2.0 * a * x[2], 2.0 * a * x[3]);
  return geom::unitize(out);
}

Vec4 rotate4(const Vec4& x, int i, int j, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Vec4 out = x;
  out[i] = c * x[i] - s * x[j];
  out[j] = s * x[i] + c * x[j];
  return out;
}

Vec3 rotate3(const Vec3& x, int i, int j, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Vec3 out = x;
  out[i] = c * x[i] - s * x[j];
  out[j] = s * x[i] + c * x[j];
  return out;
}

}  // namespace

const char* space_name(Space s) {
  switch (s) {
    case Space::S3: return "s3";
    case Space::S2: return "s2";
    case Space::RP3: return "rp3";
    case Space::RP2: return "rp2";
  }
  return "?";
}

int ambient_dim(Space s) {
  return (s == Space::S3 || s == Space::RP3) ? 4 : 3;
}

int tangent_dim(Space s) {
  return (s == Space::S3 || s == Space::RP3) ? 3 : 2;
}

bool is_projective(Space s) { return s == Space::RP3 || s == Space::RP2; }

SpacePoint SpacePoint::s3(const Vec4& x) {
  return {Space::S3, geom::unitize(x)};
}

SpacePoint SpacePoint::s2(const Vec3& y) {
  const Vec3 u = geom::unitize(y);
  return {Space::S2, Vec4(u[0], u[1], u[2], 0.0)};
}

SpacePoint SpacePoint::rp3(const Vec4& x) {
  return {Space::RP3, geom::canonical_rep(x)};
}

SpacePoint SpacePoint::rp2(const Vec3& y) {
  const Vec3 u = geom::canonical_rep(y);
  return {Space::RP2, Vec4(u[0], u[1], u[2], 0.0)};
}

SpacePoint SpacePoint::make(Space space, const Vec4& x) {
  switch (space) {
    case Space::S3: return s3(x);
    case Space::S2: return s2(x.head<3>());
    case Space::RP3: return rp3(x);
    case Space::RP2: return rp2(x.head<3>());
  }
  throw TypeMismatch("unknown space tag");
}

double space_distance(const SpacePoint& a, const SpacePoint& b) {
  if (a.space != b.space) throw TypeMismatch("distance across spaces");
  if (is_projective(a.space)) return geom::quotient_distance(a.v, b.v);
  return (a.v - b.v).norm();
}

Space Generator::domain() const {
  switch (kind) {
    case Gen::Hopf: return Space::S3;
    case Gen::HPrime: return Space::RP3;
    case Gen::Power: return Space::S3;
    case Gen::PowerRp: return Space::RP3;
    case Gen::Cover3: return Space::S3;
    case Gen::Cover2: return Space::S2;
    case Gen::Collapse3: return Space::RP3;
    case Gen::Const: return const_domain;
    case Gen::Antipodal:
    case Gen::Reflect:
    case Gen::QSquare:
    case Gen::RotS3: return Space::S3;
    case Gen::RotS2: return Space::S2;
  }
  throw TypeMismatch("unknown generator");
}

Space Generator::target() const {
  switch (kind) {
    case Gen::Hopf: return Space::S2;
    case Gen::HPrime: return Space::S2;
    case Gen::Power: return Space::S3;
    case Gen::PowerRp: return Space::RP3;
    case Gen::Cover3: return Space::RP3;
    case Gen::Cover2: return Space::RP2;
    case Gen::Collapse3: return Space::S3;
    case Gen::Const: return const_target;
    case Gen::Antipodal:
    case Gen::Reflect:
    case Gen::QSquare:
    case Gen::RotS3: return Space::S3;
    case Gen::RotS2: return Space::S2;
  }
  throw TypeMismatch("unknown generator");
}

Generator Generator::power(int k) {
  Generator g{Gen::Power};
  g.k = k;
  return g;
}

Generator Generator::power_rp(int k) {
  if (k % 2 == 0) {
    throw ParityError("power_rp requires an odd exponent; (-z)^k = z^k for even k "
                      "does not descend with the required sign");
  }
  Generator g{Gen::PowerRp};
  g.k = k;
  return g;
}

Generator Generator::constant(const SpacePoint& y, Space domain) {
  Generator g{Gen::Const};
  g.value = y.v;
  g.const_target = y.space;
  g.const_domain = domain;
  return g;
}

Generator Generator::rot_s3(int i, int j, double angle) {
  if (i < 0 || j < 0 || i >= 4 || j >= 4 || i == j) {
    throw DegenerateInput("rot_s3: axes must be distinct indices in 0..3");
  }
  Generator g{Gen::RotS3};
  g.axis_i = i;
  g.axis_j = j;
  g.angle = angle;
  return g;
}

Generator Generator::rot_s2(int i, int j, double angle) {
  if (i < 0 || j < 0 || i >= 3 || j >= 3 || i == j) {
    throw DegenerateInput("rot_s2: axes must be distinct indices in 0..2");
  }
  Generator g{Gen::RotS2};
  g.axis_i = i;
  g.axis_j = j;
  g.angle = angle;
  return g;
}

bool operator==(const Generator& a, const Generator& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Gen::Power:
    case Gen::PowerRp: return a.k == b.k;
    case Gen::RotS3:
    case Gen::RotS2:
      return a.axis_i == b.axis_i && a.axis_j == b.axis_j &&
             a.angle == b.angle;
    case Gen::Const:
      return a.value == b.value && a.const_domain == b.const_domain &&
             a.const_target == b.const_target;
    default: return true;
  }
}

MapDescriptor::MapDescriptor(std::vector<Generator> inner_first)
    : gens_(std::move(inner_first)) {
  if (gens_.empty()) throw DegenerateInput("empty composition");
  for (std::size_t i = 1; i < gens_.size(); ++i) {
    if (gens_[i].kind == Gen::Const) {
      gens_[i].const_domain = gens_[i - 1].target();
    }
    if (gens_[i].domain() != gens_[i - 1].target()) {
      throw TypeMismatch(std::string("composition mismatch: ") +
                         space_name(gens_[i - 1].target()) + " feeds a map on " +
                         space_name(gens_[i].domain()));
    }
  }
}

MapDescriptor MapDescriptor::after(const MapDescriptor& inner) const {
  std::vector<Generator> chain = inner.gens_;
  chain.insert(chain.end(), gens_.begin(), gens_.end());
  return MapDescriptor(std::move(chain));
}

bool operator==(const MapDescriptor& a, const MapDescriptor& b) {
  return a.gens() == b.gens();
}

namespace {

SpacePoint eval_generator(const Generator& g, const SpacePoint& p) {
  switch (g.kind) {
    case Gen::Hopf:
      return SpacePoint::s2(hopf_formula(p.v));
    case Gen::HPrime:
      return SpacePoint::s2(hopf_formula(p.v));
    case Gen::Power:
      return SpacePoint::s3(power_formula(g.k, p.v));
    case Gen::PowerRp:
      return SpacePoint::rp3(power_formula(g.k, p.v));
    case Gen::Cover3:
      return SpacePoint::rp3(p.v);
    case Gen::Cover2:
      return SpacePoint::rp2(p.v3());
    case Gen::Collapse3:
      return SpacePoint::s3(collapse_formula(p.v));
    case Gen::Const:
      return SpacePoint::make(g.const_target, g.value);
    case Gen::Antipodal:
      return SpacePoint::s3(-p.v);
    case Gen::Reflect:
      return SpacePoint::s3(Vec4(p.v[0], -p.v[1], p.v[2], p.v[3]));
    case Gen::QSquare:
      return SpacePoint::s3(qsquare_formula(p.v));
    case Gen::RotS3:
      return SpacePoint::s3(rotate4(p.v, g.axis_i, g.axis_j, g.angle));
    case Gen::RotS2:
      return SpacePoint::s2(rotate3(p.v3(), g.axis_i, g.axis_j, g.angle));
  }
  throw TypeMismatch("unknown generator");
}

// Walks the chain, raising NonSmoothPoint when an intermediate value sits on
// a known non-smooth locus of the next generator.
void check_smooth_locus(const MapDescriptor& f, const SpacePoint& x) {
  SpacePoint p = x;
  for (const Generator& g : f.gens()) {
    switch (g.kind) {
      case Gen::Collapse3: {
        Vec4 rep = p.v;
        if (rep[3] < 0.0) rep = -rep;
        const double r = rep.head<3>().norm();
        if (r < kNonSmoothRadius || std::abs(1.0 - r) < kNonSmoothRadius) {
          throw NonSmoothPoint("collapse3 evaluated at the collapse locus");
        }
        break;
      }
      case Gen::Power:
      case Gen::PowerRp:
        if (g.k <= 0 && std::abs(z1_of(p.v)) < kPowerLocusRadius) {
          throw NonSmoothPoint("power(k<=0) evaluated at z1 = 0");
        }
        break;
      default:
        break;
    }
    p = eval_generator(g, p);
  }
}

Vec4 align_to(const Vec4& v, const Vec4& ref) {
  return v.dot(ref) < 0.0 ? Vec4(-v) : v;
}

}  // namespace

SpacePoint eval(const MapDescriptor& f, const SpacePoint& p) {
  if (p.space != f.domain()) {
    throw TypeMismatch(std::string("eval: point on ") + space_name(p.space) +
                       " fed to a map on " + space_name(f.domain()));
  }
  SpacePoint q = p;
  for (const Generator& g : f.gens()) q = eval_generator(g, q);
  return q;
}

AmbientDifferential ambient_differential(const MapDescriptor& f,
                                         const SpacePoint& x) {
  if (x.space != f.domain()) throw TypeMismatch("differential: wrong domain");
  if (tangent_dim(f.domain()) != 3) {
    throw TypeMismatch("differential: domains are S3 or RP3");
  }
  check_smooth_locus(f, x);

  const geom::TangentFrame frame = geom::tangent_frame(geom::PointS3(x.v));
  const SpacePoint y0 = eval(f, x);
  const bool align = is_projective(f.target());
  const int m = ambient_dim(f.target());

  Eigen::MatrixXd jac(m, 3);
  const Vec4 dirs[3] = {frame.e1, frame.e2, frame.e3};
  for (int i = 0; i < 3; ++i) {
    SpacePoint xp = x, xm = x;
    xp.v = geom::unitize(Vec4(x.v + kFdStep * dirs[i]));
    xm.v = geom::unitize(Vec4(x.v - kFdStep * dirs[i]));
    Vec4 yp = eval(f, xp).v;
    Vec4 ym = eval(f, xm).v;
    if (align) {
      yp = align_to(yp, y0.v);
      ym = align_to(ym, y0.v);
    }
    jac.col(i) = ((yp - ym) / (2.0 * kFdStep)).head(m);
  }
  return {std::move(jac), frame, y0};
}

Eigen::MatrixXd differential(const MapDescriptor& f, const SpacePoint& x) {
  AmbientDifferential ad = ambient_differential(f, x);
  const int t = tangent_dim(f.target());
  Eigen::MatrixXd rows(t, ambient_dim(f.target()));
  if (t == 3) {
    const geom::TangentFrame tf =
        geom::tangent_frame(geom::PointS3(ad.value.v));
    rows.row(0) = tf.e1.transpose();
    rows.row(1) = tf.e2.transpose();
    rows.row(2) = tf.e3.transpose();
  } else {
    const geom::TangentBasisS2 tb =
        geom::tangent_basis_s2(geom::PointS2(ad.value.v3()));
    rows.row(0) = tb.u.transpose().head(3);
    rows.row(1) = tb.v.transpose().head(3);
  }
  return rows * ad.jac;
}

Eigen::Matrix<double, 3, 4> hopf_jacobian_ambient(const Vec4& x) {
  Eigen::Matrix<double, 3, 4> J;
  J << 2 * x[2], 2 * x[3], 2 * x[0], 2 * x[1],
      -2 * x[3], 2 * x[2], 2 * x[1], -2 * x[0],
       2 * x[0], 2 * x[1], -2 * x[2], -2 * x[3];
  return J;
}

Eigen::Matrix<double, 4, 4> power_jacobian_ambient(int k, const Vec4& x) {
  // w(x) = (z1^k, z2), a = w/|w|;  Da = (I - a a^T) Dw / |w|
  const Complex z1 = z1_of(x);
  Eigen::Matrix2d dz1;
  if (k >= 0) {
    const Complex d = static_cast<double>(k) * std::pow(z1, k - 1);
    dz1 << d.real(), -d.imag(), d.imag(), d.real();
  } else {
    const int m = -k;
    const Complex d = static_cast<double>(m) * std::pow(std::conj(z1), m - 1);
    // conj(z1)^m = phi(conj z1): chain rule with d(conj z) = diag(1,-1)
    Eigen::Matrix2d mult;
    mult << d.real(), -d.imag(), d.imag(), d.real();
    Eigen::Matrix2d conj;
    conj << 1, 0, 0, -1;
    dz1 = mult * conj;
  }
  Eigen::Matrix4d Dw = Eigen::Matrix4d::Zero();
  Dw.block<2, 2>(0, 0) = dz1;
  Dw.block<2, 2>(2, 2) = Eigen::Matrix2d::Identity();

  const Vec4 w = from_complex(signed_power(z1, k), z2_of(x));
  const double nw = w.norm();
  const Vec4 a = w / nw;
  return (Eigen::Matrix4d::Identity() - a * a.transpose()) * Dw / nw;
}

Vec3 base_point_y0() { return Vec3(0.0, 0.0, 1.0); }

Vec3 null_class_value() { return Vec3(1.0, 0.0, 0.0); }

MapDescriptor build_class_map(Space target, Space domain, int n) {
  if ((target != Space::S2 && target != Space::RP2) ||
      (domain != Space::S3 && domain != Space::RP3)) {
    throw TypeMismatch("build_class_map: domain in {S3,RP3}, target in {S2,RP2}");
  }

  std::vector<Generator> chain;
  if (n == 0) {
    chain.push_back(
        Generator::constant(SpacePoint::s2(null_class_value()), domain));
  } else if (domain == Space::S3) {
    if (n != 1) chain.push_back(Generator::power(n));
    chain.push_back(Generator::hopf());
  } else if (n % 2 != 0) {
    if (n != 1) chain.push_back(Generator::power_rp(n));
    chain.push_back(Generator::hprime());
  } else {
    chain.push_back(Generator::collapse3());
    if (n / 2 != 1) chain.push_back(Generator::power(n / 2));
    chain.push_back(Generator::hopf());
  }
  if (target == Space::RP2) chain.push_back(Generator::cover2());
  return MapDescriptor(std::move(chain));
}

WellDefinedReport verify_well_defined(Gen g, int k, std::size_t samples,
                                      std::uint64_t seed) {
  if (g == Gen::PowerRp && k % 2 == 0) {
    throw ParityError("power_rp descent check requires an odd exponent");
  }
  if (g != Gen::HPrime && g != Gen::PowerRp && g != Gen::Collapse3 &&
      g != Gen::Cover2) {
    throw TypeMismatch("verify_well_defined: not a quotient-related generator");
  }

  WellDefinedReport report{g, k, samples, 0.0};
  const auto pts = geom::sample_s3(samples, seed);
  for (const Vec4& x : pts) {
    double violation = 0.0;
    switch (g) {
      case Gen::HPrime:
        violation = (hopf_formula(x) - hopf_formula(Vec4(-x))).norm();
        break;
      case Gen::PowerRp:
        violation =
            (power_formula(k, Vec4(-x)) + power_formula(k, x)).norm();
        break;
      case Gen::Collapse3:
        violation = (collapse_formula(x) - collapse_formula(Vec4(-x))).norm();
        break;
      case Gen::Cover2: {
        const Vec3 a = geom::canonical_rep(Vec3(hopf_formula(x)));
        const Vec3 b = geom::canonical_rep(Vec3(hopf_formula(Vec4(-x))));
        violation = (a - b).norm();
        break;
      }
      default:
        break;
    }
    report.max_violation = std::max(report.max_violation, violation);
  }
  return report;
}

}  // namespace hopfroots::maps
