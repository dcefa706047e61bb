// Command-line front end for the hopfroots shared library. Everything goes
// through the public C API in hopfroots/hopfroots.h.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfroots/hopfroots.h"

namespace {

struct MapHandle {
  hr_map* ptr = nullptr;
  ~MapHandle() { hr_map_free(ptr); }
};

struct CurvesHandle {
  hr_curves* ptr = nullptr;
  ~CurvesHandle() { hr_curves_free(ptr); }
};

struct ReportHandle {
  hr_report* ptr = nullptr;
  ~ReportHandle() { hr_report_free(ptr); }
};

int fail(hr_status status, const char* what) {
  std::fprintf(stderr, "error: %s: %s (status %d)\n", what, hr_last_error(),
               static_cast<int>(status));
  return 1;
}

bool parse_point(const std::string& text, std::vector<double>* out) {
  out->clear();
  std::string token;
  for (char c : text + ",") {
    if (c == ',') {
      if (token.empty()) return false;
      try {
        size_t used = 0;
        out->push_back(std::stod(token, &used));
        if (used != token.size()) return false;
      } catch (const std::exception&) {
        return false;
      }
      token.clear();
    } else {
      token += c;
    }
  }
  return !out->empty();
}

struct Options {
  std::uint64_t seed = 1;
  int seeds = 0;       // 0 keeps the library default
  double step = 0.0;   // ditto
  std::string out;
};

hr_trace_opts make_trace_opts(const Options& opt) {
  hr_trace_opts t;
  hr_trace_opts_init(&t);
  t.seed = opt.seed;
  if (opt.seeds > 0) t.seeds = opt.seeds;
  if (opt.step > 0.0) t.step = opt.step;
  return t;
}

hr_degree_opts make_degree_opts(const Options& opt) {
  hr_degree_opts d;
  hr_degree_opts_init(&d);
  d.seed = opt.seed;
  if (opt.seeds > 0) d.seeds = opt.seeds;
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hopfroots: degrees, Hopf invariants and continuation-traced root "
      "sets for maps between S3, RP3, S2 and RP2"};
  app.set_config("--config");
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "deterministic run seed")
      ->capture_default_str();
  app.add_option("--seeds", opt.seeds, "multistart seed count (0 = default)");
  app.add_option("--step", opt.step, "tracer arclength step (0 = default)");
  app.add_option("--out", opt.out, "output directory or file");

  std::string map_expr;
  std::string domain, target, y_text;
  int n = 0, nmin = 0, nmax = 0;
  std::string suite_name;

  auto* degree = app.add_subcommand("degree", "signed mapping degree of a map expression");
  degree->add_option("map", map_expr, "map expression, e.g. compose(hopf, power(3))")->required();

  auto* hopf = app.add_subcommand("hopf", "Hopf invariant of an S2-valued map on S3");
  hopf->add_option("map", map_expr)->required();

  auto* roots = app.add_subcommand("roots", "minimal root-set demo for a homotopy class");
  roots->add_option("domain", domain, "s3 | rp3")->required();
  roots->add_option("target", target, "s2 | rp2")->required();
  roots->add_option("n", n, "class index")->required();

  auto* classify = app.add_subcommand("classify", "Hopf-invariant table of the lifted class maps");
  classify->add_option("nmin", nmin)->required();
  classify->add_option("nmax", nmax)->required();

  auto* suite = app.add_subcommand("suite", "run the verification suite (paper | quick)");
  suite->add_option("name", suite_name, "paper | quick")->required();

  auto* export_cmd = app.add_subcommand("export", "trace a root set and export it as CSV");
  export_cmd->add_option("map", map_expr)->required();
  export_cmd->add_option("y", y_text, "target point, e.g. 0,0,1")->required();

  app.require_subcommand(1);
  CLI11_PARSE(app, argc, argv);

  if (degree->parsed()) {
    MapHandle map;
    hr_status st = hr_map_parse(map_expr.c_str(), &map.ptr);
    if (st != HR_OK) return fail(st, "parse");
    const hr_degree_opts d = make_degree_opts(opt);
    int value = 0;
    st = hr_degree(map.ptr, &d, &value);
    if (st != HR_OK) return fail(st, "degree");
    std::printf("map=%s degree=%d\n", map_expr.c_str(), value);
    return 0;
  }

  if (hopf->parsed()) {
    MapHandle map;
    hr_status st = hr_map_parse(map_expr.c_str(), &map.ptr);
    if (st != HR_OK) return fail(st, "parse");
    const hr_trace_opts t = make_trace_opts(opt);
    int value = 0;
    st = hr_hopf_invariant(map.ptr, &t, &value);
    if (st != HR_OK) return fail(st, "hopf invariant");
    std::printf("map=%s hopf_invariant=%d\n", map_expr.c_str(), value);
    return 0;
  }

  if (roots->parsed()) {
    const hr_trace_opts t = make_trace_opts(opt);
    ReportHandle rep;
    const hr_status st = hr_minimal_root_demo(domain.c_str(), target.c_str(),
                                              n, &t, &rep.ptr);
    if (rep.ptr) std::fputs(hr_report_text(rep.ptr), stdout);
    if (st == HR_OK) return 0;
    if (st == HR_ERR_THEOREM_CHECK_FAILED && rep.ptr) {
      std::fprintf(stderr, "theorem check failed: %s\n", hr_last_error());
      return 1;
    }
    return fail(st, "roots");
  }

  if (classify->parsed()) {
    const hr_trace_opts t = make_trace_opts(opt);
    ReportHandle rep;
    const hr_status st = hr_classify(nmin, nmax, &t, &rep.ptr);
    if (rep.ptr) std::fputs(hr_report_text(rep.ptr), stdout);
    if (st == HR_OK && rep.ptr && hr_report_ok(rep.ptr)) return 0;
    if (st == HR_ERR_CLASSIFICATION_MISMATCH) {
      std::fprintf(stderr, "classification mismatch: %s\n", hr_last_error());
      return 1;
    }
    return st == HR_OK ? 1 : fail(st, "classify");
  }

  if (suite->parsed()) {
    ReportHandle rep;
    const hr_status st = hr_run_suite(
        suite_name.c_str(), opt.seed, opt.out.empty() ? nullptr : opt.out.c_str(),
        &rep.ptr);
    if (st != HR_OK) return fail(st, "suite");
    std::fputs(hr_report_text(rep.ptr), stdout);
    return hr_report_ok(rep.ptr) ? 0 : 1;
  }

  if (export_cmd->parsed()) {
    std::vector<double> y;
    if (!parse_point(y_text, &y) || y.size() != 3) {
      std::fprintf(stderr, "error: y must be three comma-separated numbers\n");
      return 1;
    }
    MapHandle map;
    hr_status st = hr_map_parse(map_expr.c_str(), &map.ptr);
    if (st != HR_OK) return fail(st, "parse");
    const hr_trace_opts t = make_trace_opts(opt);
    CurvesHandle curves;
    st = hr_trace_roots(map.ptr, y.data(), 3, &t, &curves.ptr);
    if (st != HR_OK) return fail(st, "trace");
    const std::string path = opt.out.empty() ? "curves.csv" : opt.out;
    st = hr_curves_export_csv(curves.ptr, path.c_str());
    if (st != HR_OK) return fail(st, "export");
    std::printf("map=%s components=%d file=%s\n", map_expr.c_str(),
                hr_curves_count(curves.ptr), path.c_str());
    return 0;
  }

  return 1;
}
