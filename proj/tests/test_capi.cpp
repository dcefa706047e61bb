// Exercises the shared-library C interface end to end.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfroots/hopfroots.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("map lifecycle: parse, inspect, format, evaluate") {
  hr_map* map = nullptr;
  REQUIRE(hr_map_parse("compose(hopf, power(3))", &map) == HR_OK);
  CHECK(std::string(hr_map_domain(map)) == "s3");
  CHECK(std::string(hr_map_target(map)) == "s2");

  char buf[128];
  REQUIRE(hr_map_format(map, buf, sizeof(buf)) == HR_OK);
  CHECK(std::string(buf) == "compose(hopf, power(3))");
  char tiny[4];
  CHECK(hr_map_format(map, tiny, sizeof(tiny)) == HR_ERR_INVALID_ARGUMENT);

  const double p[4] = {1, 0, 0, 0};
  double out[4] = {0, 0, 0, 0};
  int out_len = 0;
  REQUIRE(hr_map_eval(map, p, 4, out, &out_len) == HR_OK);
  REQUIRE(out_len == 3);
  CHECK(std::abs(out[0]) < 1e-14);
  CHECK(std::abs(out[1]) < 1e-14);
  CHECK(std::abs(out[2] - 1.0) < 1e-14);

  CHECK(hr_map_eval(map, p, 3, out, &out_len) == HR_ERR_TYPE_MISMATCH);
  hr_map_free(map);
}

TEST_CASE("errors surface as status codes with messages") {
  hr_map* map = nullptr;
  CHECK(hr_map_parse("nonsense(3)", &map) == HR_ERR_PARSE);
  CHECK(std::string(hr_last_error()).find("nonsense") != std::string::npos);
  CHECK(hr_map_parse(nullptr, &map) == HR_ERR_INVALID_ARGUMENT);
  CHECK(hr_map_parse("power_rp(2)", &map) == HR_ERR_PARITY);
  CHECK(hr_map_class("s3", "s3", 1, &map) == HR_ERR_TYPE_MISMATCH);
}

TEST_CASE("degree and hopf invariant through the C boundary") {
  hr_map* cube = nullptr;
  REQUIRE(hr_map_parse("power(3)", &cube) == HR_OK);
  hr_degree_opts d;
  hr_degree_opts_init(&d);
  CHECK(d.seeds == 500);
  int degree = 0;
  REQUIRE(hr_degree(cube, &d, &degree) == HR_OK);
  CHECK(degree == 3);
  hr_map_free(cube);

  hr_map* h = nullptr;
  REQUIRE(hr_map_parse("hopf", &h) == HR_OK);
  int invariant = 0;
  hr_trace_opts t;
  hr_trace_opts_init(&t);
  REQUIRE(hr_hopf_invariant(h, &t, &invariant) == HR_OK);
  CHECK(invariant == 1);

  // degree requires a 3-dimensional target
  REQUIRE(hr_degree(h, &d, &degree) == HR_ERR_TYPE_MISMATCH);
  hr_map_free(h);
}

TEST_CASE("class maps and root tracing") {
  hr_map* h2 = nullptr;
  REQUIRE(hr_map_class("rp3", "s2", 2, &h2) == HR_OK);
  CHECK(std::string(hr_map_domain(h2)) == "rp3");

  hr_trace_opts t;
  hr_trace_opts_init(&t);
  const double y0[3] = {0, 0, 1};
  hr_curves* curves = nullptr;
  REQUIRE(hr_trace_roots(h2, y0, 3, &t, &curves) == HR_OK);
  REQUIRE(hr_curves_count(curves) == 1);
  CHECK(hr_curve_closed(curves, 0) == 1);
  CHECK(hr_curve_length(curves, 0) > 1.0);

  const int npts = hr_curve_point_count(curves, 0);
  REQUIRE(npts > 100);
  std::vector<double> pts(4 * static_cast<size_t>(npts));
  REQUIRE(hr_curve_points(curves, 0, pts.data(), pts.size()) == HR_OK);
  const double s3h = std::sqrt(3.0) / 2.0;
  for (int i = 0; i < npts; ++i) {
    CHECK(std::abs(std::abs(pts[4 * i + 3]) - s3h) < 1e-6);
  }
  CHECK(hr_curve_points(curves, 0, pts.data(), 3) == HR_ERR_INVALID_ARGUMENT);

  hr_curves_free(curves);
  hr_map_free(h2);
}

TEST_CASE("csv export is byte-stable") {
  hr_map* h = nullptr;
  REQUIRE(hr_map_parse("hopf", &h) == HR_OK);
  hr_trace_opts t;
  hr_trace_opts_init(&t);
  const double y[3] = {0.2, -0.3, 0.5};
  hr_curves* curves = nullptr;
  REQUIRE(hr_trace_roots(h, y, 3, &t, &curves) == HR_OK);
  REQUIRE(hr_curves_count(curves) == 1);

  const char* p1 = "/tmp/hopfroots_export_a.csv";
  const char* p2 = "/tmp/hopfroots_export_b.csv";
  REQUIRE(hr_curves_export_csv(curves, p1) == HR_OK);
  REQUIRE(hr_curves_export_csv(curves, p2) == HR_OK);
  const std::string a = slurp(p1), b = slurp(p2);
  REQUIRE(!a.empty());
  CHECK(a == b);
  CHECK(a.rfind("component,idx,x1,x2,x3,x4,sx,sy,sz\n", 0) == 0);

  // retracing with the same seed gives the same bytes
  hr_curves* again = nullptr;
  REQUIRE(hr_trace_roots(h, y, 3, &t, &again) == HR_OK);
  const char* p3 = "/tmp/hopfroots_export_c.csv";
  REQUIRE(hr_curves_export_csv(again, p3) == HR_OK);
  CHECK(slurp(p3) == a);

  std::remove(p1);
  std::remove(p2);
  std::remove(p3);
  hr_curves_free(curves);
  hr_curves_free(again);
  hr_map_free(h);
}

TEST_CASE("z1 circle exports fall back to the south pole") {
  hr_map* h = nullptr;
  REQUIRE(hr_map_parse("hopf", &h) == HR_OK);
  hr_trace_opts t;
  hr_trace_opts_init(&t);
  const double y0[3] = {0, 0, 1};
  hr_curves* curves = nullptr;
  REQUIRE(hr_trace_roots(h, y0, 3, &t, &curves) == HR_OK);

  const char* path = "/tmp/hopfroots_export_z1.csv";
  REQUIRE(hr_curves_export_csv(curves, path) == HR_OK);
  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  // x3 = x4 = 0 on the z1 circle
  std::stringstream ss(row);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  REQUIRE(fields.size() == 9);
  CHECK(std::abs(std::stod(fields[4])) < 1e-6);
  CHECK(std::abs(std::stod(fields[5])) < 1e-6);
  std::remove(path);
  hr_curves_free(curves);
  hr_map_free(h);
}

TEST_CASE("reports: classification, root report, demo, suite") {
  hr_trace_opts t;
  hr_trace_opts_init(&t);

  hr_report* cls = nullptr;
  REQUIRE(hr_classify(0, 1, &t, &cls) == HR_OK);
  CHECK(hr_report_ok(cls) == 1);
  CHECK(std::string(hr_report_text(cls)).find("n=0 invariant=0 pass=true") !=
        std::string::npos);
  CHECK(std::string(hr_report_json(cls)).find("\"all_pass\": true") !=
        std::string::npos);
  hr_report_free(cls);

  hr_map* f = nullptr;
  REQUIRE(hr_map_class("s3", "rp2", 1, &f) == HR_OK);
  const double y0[3] = {0, 0, 1};
  hr_report* roots = nullptr;
  REQUIRE(hr_root_report(f, y0, 3, &t, &roots) == HR_OK);
  CHECK(std::string(hr_report_text(roots)).find("components=1") !=
        std::string::npos);
  hr_report_free(roots);
  hr_map_free(f);

  hr_report* demo = nullptr;
  REQUIRE(hr_minimal_root_demo("s3", "s2", 1, &t, &demo) == HR_OK);
  CHECK(hr_report_ok(demo) == 1);
  hr_report_free(demo);

  hr_report* suite = nullptr;
  REQUIRE(hr_run_suite("quick", 1, nullptr, &suite) == HR_OK);
  CHECK(hr_report_ok(suite) == 1);
  const std::string text = hr_report_text(suite);
  CHECK(text.find("c3_classify_n_0") != std::string::npos);
  CHECK(text.find("c3_classify_n_1") != std::string::npos);
  CHECK(text.find("c3_classify_n_2") != std::string::npos);
  hr_report_free(suite);

  hr_report* bad = nullptr;
  CHECK(hr_run_suite("nope", 1, nullptr, &bad) == HR_ERR_DEGENERATE_INPUT);
}

TEST_CASE("version string is present") {
  CHECK(std::string(hr_version()) == "0.1.0");
}
