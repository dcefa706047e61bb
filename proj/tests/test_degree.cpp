#include <doctest.h>

#include "core/degree.hpp"
#include "core/sampling.hpp"
#include "test_oracles.hpp"

using namespace hopfroots;
using deg::DegreeConfig;
using maps::Generator;
using maps::MapDescriptor;
using maps::Space;
using maps::SpacePoint;
using geom::Vec4;

namespace {

DegreeConfig quick_cfg(std::uint64_t seed = 1) {
  DegreeConfig cfg;
  cfg.seed = seed;
  return cfg;
}

int degree_of(const MapDescriptor& f, std::uint64_t seed = 1) {
  return deg::compute_degree(f, quick_cfg(seed));
}

}  // namespace

TEST_CASE("preimages of the cubing map match the complex-root oracle") {
  const MapDescriptor cube{Generator::power(3)};
  const Vec4 y = Vec4(std::sqrt(0.5), 0, std::sqrt(0.5), 0);
  const auto pre = deg::find_preimages(cube, y, quick_cfg());
  REQUIRE(pre.points.size() == 3);
  for (int s : pre.signs) CHECK(s == 1);

  const auto expected = oracles::power_preimages(3, y);
  REQUIRE(expected.size() == 3);
  for (const Vec4& e : expected) {
    double best = 1e9;
    for (const Vec4& p : pre.points) best = std::min(best, (p - e).norm());
    CHECK(best < 1e-9);
  }
}

TEST_CASE("identity and constant preimages") {
  const MapDescriptor identity{Generator::power(1)};
  const Vec4 y = geom::unitize(Vec4(0.3, -0.2, 0.8, 0.4));
  const auto pre = deg::find_preimages(identity, y, quick_cfg());
  REQUIRE(pre.points.size() == 1);
  CHECK(pre.signs[0] == 1);
  CHECK((pre.points[0] - y).norm() < 1e-9);

  const MapDescriptor constant{
      Generator::constant(SpacePoint::s3(Vec4(1, 0, 0, 0)))};
  const auto empty = deg::find_preimages(constant, Vec4(0, 1, 0, 0), quick_cfg());
  CHECK(empty.points.empty());
}

TEST_CASE("preimage counts and signs follow the exponent") {
  for (int k : {-3, -2, -1, 1, 2, 3}) {
    const MapDescriptor f{Generator::power(k)};
    for (const Vec4& y : geom::sample_s3(3, 100 + k)) {
      const auto pre = deg::find_preimages(f, y, quick_cfg());
      CHECK(pre.points.size() == static_cast<std::size_t>(std::abs(k)));
      for (int s : pre.signs) CHECK(s == (k > 0 ? 1 : -1));
    }
  }
}

TEST_CASE("near-singular preimages are rejected as irregular values") {
  // (0,0,1,0) pulls back to the z1 = 0 circle where the squaring map drops
  // rank
  const MapDescriptor square{Generator::power(2)};
  CHECK_THROWS_AS(deg::find_preimages(square, Vec4(0, 0, 1, 0), quick_cfg()),
                  IrregularValue);
}

TEST_CASE("local signs of the basic self-maps") {
  const MapDescriptor identity{Generator::power(1)};
  const MapDescriptor antipodal{Generator::antipodal()};
  const MapDescriptor reflect{Generator::reflect()};

  // ambient reflection matrix has det -1; the frame computation must agree
  Eigen::Matrix4d R = Eigen::Matrix4d::Identity();
  R(1, 1) = -1.0;
  CHECK(R.determinant() == doctest::Approx(-1.0));

  for (const Vec4& x : geom::sample_s3(25, 5)) {
    const SpacePoint p = SpacePoint::s3(x);
    CHECK(deg::local_sign(identity, p) == 1);
    CHECK(deg::local_sign(antipodal, p) == 1);  // (-1)^4 on the ambient space
    CHECK(deg::local_sign(reflect, p) == -1);
  }

  const MapDescriptor constant{
      Generator::constant(SpacePoint::s3(Vec4(1, 0, 0, 0)))};
  CHECK_THROWS_AS(
      deg::local_sign(constant, SpacePoint::s3(Vec4(0, 1, 0, 0))),
      IrregularPoint);
}

TEST_CASE("degree table for the power family and the collapse maps") {
  for (int k = -3; k <= 3; ++k) {
    CHECK(degree_of(MapDescriptor(Generator::power(k))) == k);
  }
  const MapDescriptor q3{Generator::collapse3()};
  const MapDescriptor q3_p3 = q3.after(MapDescriptor(Generator::cover3()));
  CHECK(degree_of(q3_p3) == 2);
  // orientation convention fixed by the ambient frames gives +1 here; the
  // invariant part is |deg| = 1
  const int dq3 = degree_of(q3);
  CHECK(std::abs(dq3) == 1);
  CHECK(dq3 == 1);
  CHECK(degree_of(MapDescriptor(Generator::qsquare())) == 2);
}

TEST_CASE("degree is multiplicative under composition") {
  std::vector<MapDescriptor> zoo;
  std::vector<int> expected;
  for (int k = -2; k <= 3; ++k) {
    zoo.push_back(MapDescriptor(Generator::power(k)));
    expected.push_back(k);
  }
  zoo.push_back(MapDescriptor(Generator::antipodal()));
  expected.push_back(1);
  zoo.push_back(MapDescriptor(Generator::reflect()));
  expected.push_back(-1);

  for (std::size_t i = 0; i < zoo.size(); ++i) {
    CHECK(degree_of(zoo[i]) == expected[i]);
    for (std::size_t j = 0; j < zoo.size(); ++j) {
      const MapDescriptor composite = zoo[i].after(zoo[j]);
      CHECK(degree_of(composite, 3 + i * 17 + j) == expected[i] * expected[j]);
    }
  }
}

TEST_CASE("degree does not depend on the chosen regular value") {
  const MapDescriptor square{Generator::power(2)};
  int hits = 0;
  for (const Vec4& y : geom::sample_s3(14, 777)) {
    deg::PreimageSet pre;
    try {
      pre = deg::find_preimages(square, y, quick_cfg());
    } catch (const IrregularValue&) {
      continue;
    }
    int total = 0;
    for (int s : pre.signs) total += s;
    CHECK(total == 2);
    if (++hits == 10) break;
  }
  CHECK(hits == 10);
}

TEST_CASE("rp3-domain degrees use the lift-and-halve convention") {
  // a'_3 on RP3 keeps degree 3
  const MapDescriptor a3p{Generator::power_rp(3)};
  const MapDescriptor lift_target =
      MapDescriptor(Generator::cover3());  // RP3-valued: not a valid degree map
  CHECK_THROWS_AS(deg::compute_degree(lift_target, quick_cfg()), TypeMismatch);

  // a'_3 followed by the collapse gives an RP3 -> S3 map of degree 3 * 1
  const MapDescriptor f = MapDescriptor(Generator::collapse3())
                              .after(MapDescriptor(Generator::power_rp(3)));
  CHECK(degree_of(f) == 3);
}

TEST_CASE("insufficient seeding is reported as instability") {
  DegreeConfig tiny;
  tiny.seeds = 2;
  tiny.seed = 9;
  const MapDescriptor cube{Generator::power(3)};
  CHECK_THROWS_AS(deg::compute_degree(cube, tiny), UnstableCount);
}

TEST_CASE("config validation") {
  DegreeConfig bad;
  bad.seeds = 0;
  CHECK_THROWS_AS(bad.validate(), DegenerateInput);
  bad = DegreeConfig{};
  bad.newton_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), DegenerateInput);
}
