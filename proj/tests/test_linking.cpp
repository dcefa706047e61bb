#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "core/linking.hpp"
#include "core/sampling.hpp"
#include "test_oracles.hpp"

using namespace hopfroots;
using link::LinkMethod;
using maps::Generator;
using maps::MapDescriptor;
using maps::Space;
using trace::Curve;
using trace::TraceConfig;
using geom::PointS3;
using geom::Vec3;
using geom::Vec4;

namespace {

Curve circle_curve(const std::function<Vec4(double)>& param, int n) {
  Curve c;
  for (int i = 0; i < n; ++i) {
    c.points.push_back(param(oracles::kTwoPi * i / n));
  }
  c.closed = true;
  double len = 0.0;
  for (int i = 0; i < n; ++i) {
    len += geom::angular_distance(c.points[i], c.points[(i + 1) % n]);
  }
  c.length = len;
  return c;
}

Curve z1_circle(int n = 400) {
  return circle_curve(
      [](double t) { return Vec4(std::cos(t), std::sin(t), 0, 0); }, n);
}

Curve z2_circle(int n = 400) {
  return circle_curve(
      [](double t) { return Vec4(0, 0, std::cos(t), std::sin(t)); }, n);
}

Curve reversed(const Curve& c) {
  Curve out = c;
  std::reverse(out.points.begin(), out.points.end());
  return out;
}

}  // namespace

TEST_CASE("the standard fiber pair links once") {
  const Curve a = z1_circle();
  const Curve b = z2_circle();

  const auto gauss = link::linking_number(a, b, LinkMethod::Gauss);
  const auto crossing = link::linking_number(a, b, LinkMethod::Crossing);
  const auto both = link::linking_number(a, b, LinkMethod::Both);

  CHECK(std::abs(gauss.value) == 1);
  CHECK(gauss.value == crossing.value);
  CHECK(gauss.value == both.value);
  CHECK(gauss.residual < 0.2);
  CHECK(crossing.residual < 0.2);

  // the traced orientation convention makes this pair link positively
  CHECK(gauss.value == 1);

  // independent textbook crossing count on a fixed stereographic picture
  const PointS3 pole(geom::unitize(Vec4(1.0, 0.0, 1.0, 0.0)));
  std::vector<Vec3> pa, pb;
  for (const Vec4& p : a.points) pa.push_back(geom::stereographic(PointS3(p), pole));
  for (const Vec4& p : b.points) pb.push_back(geom::stereographic(PointS3(p), pole));
  double oracle_value = 0.0;
  bool ok = false;
  for (const Vec3& dir : geom::sample_s2(10, 2024)) {
    if (oracles::crossing_linking(pa, pb, dir, &oracle_value)) {
      ok = true;
      break;
    }
  }
  REQUIRE(ok);
  CHECK(static_cast<int>(std::lround(oracle_value)) == gauss.value);
}

TEST_CASE("linking is symmetric and flips under orientation reversal") {
  const Curve a = z1_circle();
  const Curve b = z2_circle();
  const int base = link::linking_number(a, b, LinkMethod::Gauss).value;
  CHECK(link::linking_number(b, a, LinkMethod::Gauss).value == base);
  CHECK(link::linking_number(a, reversed(b), LinkMethod::Both).value == -base);
  CHECK(link::linking_number(reversed(a), b, LinkMethod::Both).value == -base);
}

TEST_CASE("distant round circles are unlinked") {
  // small circles inside disjoint balls around (1,0,0,0) and (0,0,0,1)
  const double r = 0.2;
  const Curve a = circle_curve(
      [&](double t) {
        return geom::unitize(Vec4(1.0, r * std::cos(t), r * std::sin(t), 0.0));
      },
      300);
  const Curve b = circle_curve(
      [&](double t) {
        return geom::unitize(Vec4(r * std::cos(t), 0.0, r * std::sin(t), 1.0));
      },
      300);
  const auto lr = link::linking_number(a, b, LinkMethod::Both);
  CHECK(lr.value == 0);
}

TEST_CASE("interleaved curves are rejected as unseparated") {
  const Curve a = z1_circle(80);
  Curve b = z1_circle(80);
  for (Vec4& p : b.points) {
    p = geom::unitize(Vec4(p[0] + 1e-3, p[1], p[2], p[3]));
  }
  CHECK_THROWS_AS(link::linking_number(a, b, LinkMethod::Gauss),
                  CurvesNotSeparated);

  Curve open = z1_circle(80);
  open.closed = false;
  CHECK_THROWS_AS(link::linking_number(open, z2_circle(), LinkMethod::Gauss),
                  DegenerateInput);
}

TEST_CASE("hopf invariants of the generators") {
  TraceConfig cfg;
  CHECK(link::hopf_invariant(MapDescriptor(Generator::hopf()), cfg) == 1);
  CHECK(link::hopf_invariant(maps::build_class_map(Space::S2, Space::S3, 0),
                             cfg) == 0);
  CHECK(link::hopf_invariant(
            MapDescriptor(Generator::hopf())
                .after(MapDescriptor(Generator::power(-1))),
            cfg) == -1);

  const auto detail = link::hopf_invariant_detail(
      maps::build_class_map(Space::S2, Space::S3, 0), cfg);
  CHECK(detail.value == 0);
  CHECK(detail.fiber1_components == 0);
  CHECK(detail.fiber2_components == 0);

  CHECK_THROWS_AS(
      link::hopf_invariant(MapDescriptor(Generator::hprime()), cfg),
      TypeMismatch);
}

TEST_CASE("hopf invariant is independent of the value pair") {
  // five explicit regular value pairs for h o a_2 all give 2
  const MapDescriptor f =
      MapDescriptor(Generator::hopf()).after(MapDescriptor(Generator::power(2)));
  TraceConfig cfg;
  cfg.irregular_value_tol = 1e-3;
  const auto values = geom::sample_s2(10, 31415);
  int done = 0;
  for (std::size_t i = 0; i + 1 < values.size() && done < 5; i += 2) {
    const Vec3 y1 = values[i];
    const Vec3 y2 = values[i + 1];
    if ((y1 - y2).norm() < 0.5) continue;
    std::vector<trace::Curve> f1, f2;
    try {
      TraceConfig c1 = cfg;
      c1.seed = 100 + i;
      f1 = trace::find_root_components(f, y1, c1);
      TraceConfig c2 = cfg;
      c2.seed = 200 + i;
      f2 = trace::find_root_components(f, y2, c2);
    } catch (const IrregularValue&) {
      continue;
    }
    int total = 0;
    for (const auto& a : f1) {
      for (const auto& b : f2) {
        total += link::linking_number(a, b, LinkMethod::Both).value;
      }
    }
    CHECK(total == 2);
    ++done;
  }
  CHECK(done == 5);
}

TEST_CASE("classification table for a small range") {
  TraceConfig cfg;
  const auto table = link::verify_classification(0, 2, cfg);
  REQUIRE(table.size() == 3);
  for (const auto& row : table) {
    CHECK(row.pass);
    CHECK(row.invariant == row.n);
  }
  CHECK_THROWS_AS(link::verify_classification(2, 0, cfg), DegenerateInput);
}
