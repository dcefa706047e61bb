#include <doctest.h>

#include "core/map_zoo.hpp"
#include "core/sampling.hpp"

using namespace hopfroots;
using maps::Gen;
using maps::Generator;
using maps::MapDescriptor;
using maps::Space;
using maps::SpacePoint;
using geom::Vec3;
using geom::Vec4;

namespace {

const MapDescriptor kHopf{Generator::hopf()};

SpacePoint s1_point(double t) {
  return SpacePoint::s3(Vec4(std::cos(t), std::sin(t), 0, 0));
}

}  // namespace

TEST_CASE("generator formulas at the standard points") {
  // h(1,0) = (0,0,1), the base point of the root studies
  CHECK((maps::eval(kHopf, SpacePoint::s3(Vec4(1, 0, 0, 0))).v3() -
         Vec3(0, 0, 1))
            .norm() < 1e-15);
  // h(0,1) = (0,0,-1)
  CHECK((maps::eval(kHopf, SpacePoint::s3(Vec4(0, 0, 1, 0))).v3() -
         Vec3(0, 0, -1))
            .norm() < 1e-15);

  const MapDescriptor cube{Generator::power(3)};
  CHECK((maps::eval(cube, SpacePoint::s3(Vec4(1, 0, 0, 0))).v -
         Vec4(1, 0, 0, 0))
            .norm() < 1e-15);

  // every representative with x4 = 0 sits on the collapsed skeleton
  const MapDescriptor collapse{Generator::collapse3()};
  for (const Vec4& raw : geom::sample_s3(20, 3)) {
    Vec4 x = raw;
    x[3] = 0.0;
    if (x.norm() < 1e-3) continue;
    x.normalize();
    const SpacePoint img = maps::eval(collapse, SpacePoint::rp3(x));
    CHECK((img.v - Vec4(0, 0, 0, -1)).norm() < 1e-12);
  }
}

TEST_CASE("eval rejects points from the wrong space") {
  CHECK_THROWS_AS(maps::eval(kHopf, SpacePoint::s2(Vec3(0, 0, 1))),
                  TypeMismatch);
  CHECK_THROWS_AS(
      MapDescriptor(Generator::hopf()).after(MapDescriptor(Generator::hopf())),
      TypeMismatch);
}

TEST_CASE("factorization identities hold pointwise") {
  const MapDescriptor hprime_p3 =
      MapDescriptor(Generator::hprime()).after(MapDescriptor(Generator::cover3()));
  const MapDescriptor a3{Generator::power(3)};
  const MapDescriptor p3_a3 =
      MapDescriptor(Generator::cover3()).after(a3);
  const MapDescriptor a3p_p3 =
      MapDescriptor(Generator::power_rp(3)).after(MapDescriptor(Generator::cover3()));

  for (const Vec4& x : geom::sample_s3(2000, 23)) {
    const SpacePoint p = SpacePoint::s3(x);
    // h' o p3 = h
    CHECK((maps::eval(hprime_p3, p).v3() - maps::eval(kHopf, p).v3()).norm() <
          1e-12);
    // p3 o a_k = a'_k o p3 for odd k
    CHECK(maps::space_distance(maps::eval(p3_a3, p), maps::eval(a3p_p3, p)) <
          1e-12);
  }
}

TEST_CASE("the standard fibers are exactly the coordinate circles") {
  for (int i = 0; i < 64; ++i) {
    const double t = 2.0 * M_PI * i / 64.0;
    // h(S1) = y0 and a_k(S1) stays inside S1
    CHECK((maps::eval(kHopf, s1_point(t)).v3() - Vec3(0, 0, 1)).norm() < 1e-14);
    for (int k : {-2, 2, 3}) {
      const SpacePoint img =
          maps::eval(MapDescriptor(Generator::power(k)), s1_point(t));
      CHECK(std::hypot(img.v[2], img.v[3]) < 1e-14);
    }
  }
}

TEST_CASE("differential of the identity composite is the identity") {
  const MapDescriptor identity{Generator::power(1)};
  for (const Vec4& x : geom::sample_s3(25, 29)) {
    const Eigen::MatrixXd J = maps::differential(identity, SpacePoint::s3(x));
    CHECK((J - Eigen::Matrix3d::Identity()).norm() < 1e-8);
  }
}

TEST_CASE("hopf differential is a submersion at the fiber base") {
  const Eigen::MatrixXd J =
      maps::differential(kHopf, SpacePoint::s3(Vec4(1, 0, 0, 0)));
  REQUIRE(J.rows() == 2);
  REQUIRE(J.cols() == 3);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
  CHECK(svd.singularValues()[0] > 1.0);
  CHECK(svd.singularValues()[1] > 1.0);  // rank 2
}

TEST_CASE("analytic Jacobians agree with finite differences") {
  for (const Vec4& x : geom::sample_s3(100, 31)) {
    const SpacePoint p = SpacePoint::s3(x);
    {
      const auto ad = maps::ambient_differential(kHopf, p);
      const Eigen::MatrixXd analytic =
          maps::hopf_jacobian_ambient(x) * ad.frame.basis();
      CHECK((analytic - ad.jac).norm() < 1e-5);
    }
    for (int k : {2, -2}) {
      const MapDescriptor f{Generator::power(k)};
      if (k < 0 && std::hypot(x[0], x[1]) < 1e-3) continue;
      const auto ad = maps::ambient_differential(f, p);
      const Eigen::MatrixXd analytic =
          maps::power_jacobian_ambient(k, x) * ad.frame.basis();
      CHECK((analytic - ad.jac).norm() < 1e-5);
    }
  }
}

TEST_CASE("differentials refuse the known non-smooth loci") {
  const MapDescriptor collapse{Generator::collapse3()};
  // r = 0: the cell center
  CHECK_THROWS_AS(
      maps::differential(collapse, SpacePoint::rp3(Vec4(0, 0, 0, 1))),
      NonSmoothPoint);
  // r = 1: the collapsed skeleton
  CHECK_THROWS_AS(
      maps::differential(collapse, SpacePoint::rp3(Vec4(1, 0, 0, 0))),
      NonSmoothPoint);

  const MapDescriptor neg{Generator::power(-2)};
  CHECK_THROWS_AS(maps::differential(neg, SpacePoint::s3(Vec4(0, 0, 1, 0))),
                  NonSmoothPoint);
  const MapDescriptor zero{Generator::power(0)};
  CHECK_THROWS_AS(maps::differential(zero, SpacePoint::s3(Vec4(0, 0, 0, 1))),
                  NonSmoothPoint);
}

TEST_CASE("class map construction matches the factorization table") {
  CHECK(maps::build_class_map(Space::S2, Space::S3, 1) == kHopf);

  const MapDescriptor even2 = maps::build_class_map(Space::S2, Space::RP3, 2);
  REQUIRE(even2.gens().size() == 2);
  CHECK(even2.gens()[0].kind == Gen::Collapse3);
  CHECK(even2.gens()[1].kind == Gen::Hopf);

  const MapDescriptor null_rp2 = maps::build_class_map(Space::RP2, Space::S3, 0);
  REQUIRE(null_rp2.gens().size() == 2);
  CHECK(null_rp2.gens()[0].kind == Gen::Const);
  CHECK(null_rp2.gens()[1].kind == Gen::Cover2);
  // the constant avoids the base pair {y0, -y0}
  CHECK(std::abs(null_rp2.gens()[0].value[2]) < 0.5);

  const MapDescriptor odd = maps::build_class_map(Space::S2, Space::RP3, 5);
  REQUIRE(odd.gens().size() == 2);
  CHECK(odd.gens()[0].kind == Gen::PowerRp);
  CHECK(odd.gens()[0].k == 5);
  CHECK(odd.gens()[1].kind == Gen::HPrime);

  // domain/target sanity
  CHECK(maps::build_class_map(Space::RP2, Space::RP3, -4).domain() == Space::RP3);
  CHECK(maps::build_class_map(Space::RP2, Space::RP3, -4).target() == Space::RP2);
  CHECK_THROWS_AS(maps::build_class_map(Space::S3, Space::S3, 1), TypeMismatch);
}

TEST_CASE("quotient generators are well defined") {
  const auto hp = maps::verify_well_defined(Gen::HPrime, 0, 10000, 7);
  CHECK(hp.max_violation < 1e-12);

  const auto a3 = maps::verify_well_defined(Gen::PowerRp, 3, 10000, 7);
  CHECK(a3.max_violation < 1e-12);

  const auto q3 = maps::verify_well_defined(Gen::Collapse3, 0, 2000, 7);
  CHECK(q3.max_violation < 1e-12);

  const auto c2 = maps::verify_well_defined(Gen::Cover2, 0, 2000, 7);
  CHECK(c2.max_violation < 1e-12);

  CHECK_THROWS_AS(maps::verify_well_defined(Gen::PowerRp, 2, 10, 7),
                  ParityError);
  CHECK_THROWS_AS(Generator::power_rp(2), ParityError);
  CHECK_THROWS_AS(maps::verify_well_defined(Gen::Hopf, 0, 10, 7), TypeMismatch);
}

TEST_CASE("generator outputs stay on their target spheres") {
  const MapDescriptor maps_to_probe[] = {
      MapDescriptor(Generator::qsquare()),
      MapDescriptor(Generator::power(-3)),
      MapDescriptor(Generator::rot_s3(0, 3, 0.8)),
      maps::build_class_map(Space::RP2, Space::S3, 3),
  };
  for (const auto& f : maps_to_probe) {
    for (const Vec4& x : geom::sample_s3(200, 37)) {
      const SpacePoint img = maps::eval(f, SpacePoint::s3(x));
      const int m = maps::ambient_dim(img.space);
      CHECK(std::abs(img.v.head(m).norm() - 1.0) < 1e-12);
    }
  }
}
