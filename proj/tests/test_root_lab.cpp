#include <doctest.h>

#include "core/root_lab.hpp"
#include "core/sampling.hpp"

using namespace hopfroots;
using maps::Generator;
using maps::MapDescriptor;
using maps::Space;
using rootlab::AnalyticSet;
using rootlab::DemoResult;
using rootlab::RootSetReport;
using trace::TraceConfig;
using geom::Vec3;
using geom::Vec4;

namespace {

const Vec3 kY0(0, 0, 1);

TraceConfig tight_cfg() {
  TraceConfig cfg;
  cfg.corrector_tol = 1e-13;
  cfg.seeds = 400;
  return cfg;
}

}  // namespace

TEST_CASE("root reports for the class maps over the base point") {
  TraceConfig cfg;

  const auto two = rootlab::root_set_report(
      maps::build_class_map(Space::S2, Space::S3, 2), kY0, cfg);
  CHECK(two.component_count == 1);
  CHECK(two.closed_loop_present);
  CHECK(two.analytic == AnalyticSet::CircleZ1);
  REQUIRE(two.components.size() == 1);
  CHECK(two.components[0].analytic_match < 1e-6);
  CHECK(two.components[0].residual < cfg.corrector_tol);
  CHECK(two.components[0].planarity < 1e-8);

  const auto null = rootlab::root_set_report(
      maps::build_class_map(Space::S2, Space::S3, 0), kY0, cfg);
  CHECK(null.component_count == 0);
  CHECK(!null.closed_loop_present);

  const auto odd = rootlab::root_set_report(
      maps::build_class_map(Space::S2, Space::RP3, 3), kY0, cfg);
  CHECK(odd.component_count == 1);
  CHECK(odd.analytic == AnalyticSet::CircleZ1Mod);
  CHECK(odd.components[0].analytic_match < 1e-6);

  CHECK_THROWS_AS(
      rootlab::root_set_report(maps::build_class_map(Space::RP2, Space::S3, 1),
                               kY0, cfg),
      TypeMismatch);
}

TEST_CASE("rp2 roots decompose into the two lifted root sets") {
  const auto cfg = tight_cfg();

  // class 1: the two fibers are the coordinate circles
  {
    const auto f = maps::build_class_map(Space::RP2, Space::S3, 1);
    const auto [plus, minus] = rootlab::rp2_root_decompose(f, kY0, cfg);
    CHECK(plus.component_count == 1);
    CHECK(minus.component_count == 1);
    CHECK(plus.analytic == AnalyticSet::CircleZ1);
    CHECK(minus.analytic == AnalyticSet::CircleZ2);
    CHECK(plus.components[0].analytic_match < 1e-6);
    CHECK(minus.components[0].analytic_match < 1e-6);
    CHECK(rootlab::min_separation(plus.curves, minus.curves) > 0.5);
  }

  // class 2: the -y0 side runs through the critical circle and still traces
  {
    const auto f = maps::build_class_map(Space::RP2, Space::S3, 2);
    const auto [plus, minus] = rootlab::rp2_root_decompose(f, kY0, cfg);
    CHECK(plus.component_count == 1);
    CHECK(minus.component_count == 1);
    CHECK(plus.components[0].analytic_match < 1e-6);
    CHECK(minus.components[0].analytic_match < 1e-6);
  }

  // the null class is empty on both sides
  {
    const auto f = maps::build_class_map(Space::RP2, Space::S3, 0);
    const auto [plus, minus] = rootlab::rp2_root_decompose(f, kY0, cfg);
    CHECK(plus.component_count == 0);
    CHECK(minus.component_count == 0);
  }

  CHECK_THROWS_AS(
      rootlab::rp2_root_decompose(MapDescriptor(Generator::hopf()), kY0, cfg),
      TypeMismatch);
}

TEST_CASE("minimal root demos match the predicted topology") {
  TraceConfig cfg;

  const DemoResult s2 = rootlab::minimal_root_demo(Space::S3, Space::S2, -1, cfg);
  CHECK(s2.pass);
  REQUIRE(s2.reports.size() == 1);
  CHECK(s2.reports[0].component_count == 1);

  const DemoResult even = rootlab::minimal_root_demo(Space::RP3, Space::S2, 2, cfg);
  CHECK(even.pass);
  CHECK(even.reports[0].analytic == AnalyticSet::CollapseCircle);
  CHECK(even.reports[0].components[0].analytic_match < 1e-6);

  const DemoResult rp2 = rootlab::minimal_root_demo(Space::RP3, Space::RP2, 1, cfg);
  CHECK(rp2.pass);
  REQUIRE(rp2.reports.size() == 2);
  CHECK(rp2.reports[0].component_count == 1);
  CHECK(rp2.reports[1].component_count == 1);
}

TEST_CASE("rp2 root components stay far apart across the class range") {
  TraceConfig cfg;
  for (Space domain : {Space::S3, Space::RP3}) {
    for (int n : {-2, -1, 1, 2, 3}) {
      const DemoResult demo =
          rootlab::minimal_root_demo_checked(domain, Space::RP2, n, cfg);
      CHECK(demo.pass);
      REQUIRE(demo.reports.size() == 2);
      const double sep = rootlab::min_separation(demo.reports[0].curves,
                                                 demo.reports[1].curves);
      CHECK(sep > 0.5);
    }
  }
}

TEST_CASE("planarity residual separates great circles from small ones") {
  TraceConfig cfg;
  const auto great = rootlab::root_set_report(
      maps::build_class_map(Space::S2, Space::S3, 1), kY0, cfg);
  REQUIRE(great.component_count == 1);
  CHECK(rootlab::planarity_residual(great.curves[0]) < 1e-8);

  const auto small = rootlab::root_set_report(
      maps::build_class_map(Space::S2, Space::RP3, 2), kY0, cfg);
  REQUIRE(small.component_count == 1);
  // the collapse-model circle is a round circle off the origin plane
  CHECK(rootlab::planarity_residual(small.curves[0]) > 0.1);
}

TEST_CASE("analytic distances are exact on their circles") {
  for (int i = 0; i < 32; ++i) {
    const double t = 2.0 * M_PI * i / 32.0;
    CHECK(rootlab::analytic_distance(
              AnalyticSet::CircleZ1,
              Vec4(std::cos(t), std::sin(t), 0, 0)) < 1e-7);
    CHECK(rootlab::analytic_distance(
              AnalyticSet::CircleZ2,
              Vec4(0, 0, std::cos(t), std::sin(t))) < 1e-7);
    const double r = 0.5, h = std::sqrt(3.0) / 2.0;
    CHECK(rootlab::analytic_distance(
              AnalyticSet::CollapseCircle,
              Vec4(r * std::cos(t), r * std::sin(t), 0, h)) < 1e-7);
    // the antipodal lift matches too (quotient metric)
    CHECK(rootlab::analytic_distance(
              AnalyticSet::CollapseCircle,
              Vec4(-r * std::cos(t), -r * std::sin(t), 0, -h)) < 1e-7);
  }
  CHECK(rootlab::analytic_distance(AnalyticSet::CircleZ1, Vec4(0, 0, 1, 0)) >
        1.0);
}
