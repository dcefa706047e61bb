#include "hopfroots/hopfroots.h"

#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "core/degree.hpp"
#include "core/expr.hpp"
#include "core/linking.hpp"
#include "core/root_lab.hpp"
#include "core/suite.hpp"

using hopfroots::Error;
using hopfroots::ErrorCode;
namespace geom = hopfroots::geom;
namespace maps = hopfroots::maps;
namespace deg = hopfroots::deg;
namespace trace = hopfroots::trace;
namespace lk = hopfroots::link;
namespace rootlab = hopfroots::rootlab;
namespace cli = hopfroots::cli;

struct hr_map {
  maps::MapDescriptor desc;
};

struct hr_curves {
  std::vector<trace::Curve> curves;
};

struct hr_report {
  bool ok = false;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

hr_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return HR_ERR_DEGENERATE_INPUT;
    case ErrorCode::PoleProximity: return HR_ERR_POLE_PROXIMITY;
    case ErrorCode::TypeMismatch: return HR_ERR_TYPE_MISMATCH;
    case ErrorCode::NonSmoothPoint: return HR_ERR_NON_SMOOTH_POINT;
    case ErrorCode::ParityError: return HR_ERR_PARITY;
    case ErrorCode::IrregularValue: return HR_ERR_IRREGULAR_VALUE;
    case ErrorCode::IrregularPoint: return HR_ERR_IRREGULAR_POINT;
    case ErrorCode::CriticalValueSearchFailed: return HR_ERR_CRITICAL_VALUE_SEARCH;
    case ErrorCode::UnstableCount: return HR_ERR_UNSTABLE_COUNT;
    case ErrorCode::CorrectorDiverged: return HR_ERR_CORRECTOR_DIVERGED;
    case ErrorCode::SingularCurvePoint: return HR_ERR_SINGULAR_CURVE_POINT;
    case ErrorCode::OpenOrTooLong: return HR_ERR_OPEN_OR_TOO_LONG;
    case ErrorCode::CurvesNotSeparated: return HR_ERR_CURVES_NOT_SEPARATED;
    case ErrorCode::ProjectionFailure: return HR_ERR_PROJECTION_FAILURE;
    case ErrorCode::DecompositionOverlap: return HR_ERR_DECOMPOSITION_OVERLAP;
    case ErrorCode::TheoremCheckFailed: return HR_ERR_THEOREM_CHECK_FAILED;
    case ErrorCode::ClassificationMismatch: return HR_ERR_CLASSIFICATION_MISMATCH;
    case ErrorCode::ParseError: return HR_ERR_PARSE;
    case ErrorCode::IoError: return HR_ERR_IO;
  }
  return HR_ERR_INTERNAL;
}

template <typename Fn>
hr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HR_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return HR_ERR_INTERNAL;
  }
}

hr_status invalid(const char* message) {
  g_last_error = message;
  return HR_ERR_INVALID_ARGUMENT;
}

maps::Space space_from(const char* name) {
  const std::string s = name ? name : "";
  if (s == "s3") return maps::Space::S3;
  if (s == "s2") return maps::Space::S2;
  if (s == "rp3") return maps::Space::RP3;
  if (s == "rp2") return maps::Space::RP2;
  throw hopfroots::TypeMismatch("unknown space '" + s + "'");
}

deg::DegreeConfig degree_config(const hr_degree_opts* opts) {
  deg::DegreeConfig cfg;
  if (opts) {
    cfg.seeds = opts->seeds;
    cfg.newton_tol = opts->newton_tol;
    cfg.max_newton_iters = opts->max_newton_iters;
    cfg.dedupe_tol = opts->dedupe_tol;
    cfg.stability_check = opts->stability_check != 0;
    cfg.seed = opts->seed;
  }
  return cfg;
}

trace::TraceConfig trace_config(const hr_trace_opts* opts) {
  trace::TraceConfig cfg;
  if (opts) {
    cfg.step = opts->step;
    cfg.corrector_tol = opts->corrector_tol;
    cfg.max_steps = opts->max_steps;
    cfg.closure_radius = opts->closure_radius;
    cfg.min_steps_before_closure = opts->min_steps_before_closure;
    cfg.seeds = opts->seeds;
    cfg.component_dedupe = opts->component_dedupe;
    cfg.seed = opts->seed;
  }
  return cfg;
}

nlohmann::ordered_json report_json(const rootlab::RootSetReport& r) {
  nlohmann::ordered_json j;
  j["map"] = r.map_expr;
  j["domain"] = maps::space_name(r.domain);
  j["base_point"] = {r.base_point[0], r.base_point[1], r.base_point[2]};
  j["analytic_set"] = rootlab::analytic_set_name(r.analytic);
  j["component_count"] = r.component_count;
  j["closed_loop_present"] = r.closed_loop_present;
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& c : r.components) {
    nlohmann::ordered_json cj;
    cj["closed"] = c.closed;
    cj["length"] = c.length;
    cj["vertices"] = c.vertices;
    cj["planarity"] = c.planarity;
    cj["residual"] = c.residual;
    if (c.analytic_match >= 0.0) cj["analytic_match"] = c.analytic_match;
    j["components"].push_back(cj);
  }
  return j;
}

hr_report* make_report(bool ok, std::string text, std::string json) {
  auto* rep = new hr_report;
  rep->ok = ok;
  rep->text = std::move(text);
  rep->json = std::move(json);
  return rep;
}

}  // namespace

extern "C" {

const char* hr_version(void) { return "0.1.0"; }

const char* hr_last_error(void) { return g_last_error.c_str(); }

void hr_degree_opts_init(hr_degree_opts* opts) {
  if (!opts) return;
  const deg::DegreeConfig cfg;
  opts->seeds = cfg.seeds;
  opts->newton_tol = cfg.newton_tol;
  opts->max_newton_iters = cfg.max_newton_iters;
  opts->dedupe_tol = cfg.dedupe_tol;
  opts->stability_check = cfg.stability_check ? 1 : 0;
  opts->seed = cfg.seed;
}

void hr_trace_opts_init(hr_trace_opts* opts) {
  if (!opts) return;
  const trace::TraceConfig cfg;
  opts->step = cfg.step;
  opts->corrector_tol = cfg.corrector_tol;
  opts->max_steps = cfg.max_steps;
  opts->closure_radius = cfg.closure_radius;
  opts->min_steps_before_closure = cfg.min_steps_before_closure;
  opts->seeds = cfg.seeds;
  opts->component_dedupe = cfg.component_dedupe;
  opts->seed = cfg.seed;
}

hr_status hr_map_parse(const char* expr, hr_map** out) {
  if (!expr || !out) return invalid("hr_map_parse: null argument");
  return guarded([&] {
    *out = new hr_map{maps::parse_map(expr)};
    return HR_OK;
  });
}

hr_status hr_map_class(const char* domain, const char* target, int n,
                       hr_map** out) {
  if (!domain || !target || !out) return invalid("hr_map_class: null argument");
  return guarded([&] {
    *out = new hr_map{
        maps::build_class_map(space_from(target), space_from(domain), n)};
    return HR_OK;
  });
}

void hr_map_free(hr_map* map) { delete map; }

const char* hr_map_domain(const hr_map* map) {
  return map ? maps::space_name(map->desc.domain()) : "";
}

const char* hr_map_target(const hr_map* map) {
  return map ? maps::space_name(map->desc.target()) : "";
}

hr_status hr_map_format(const hr_map* map, char* buf, size_t cap) {
  if (!map || !buf) return invalid("hr_map_format: null argument");
  return guarded([&] {
    const std::string text = maps::format_map(map->desc);
    if (text.size() + 1 > cap) {
      g_last_error = "hr_map_format: buffer too small";
      return HR_ERR_INVALID_ARGUMENT;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return HR_OK;
  });
}

hr_status hr_map_eval(const hr_map* map, const double* point, int point_len,
                      double out[4], int* out_len) {
  if (!map || !point || !out || !out_len) {
    return invalid("hr_map_eval: null argument");
  }
  return guarded([&] {
    const int need = maps::ambient_dim(map->desc.domain());
    if (point_len != need) {
      g_last_error = "hr_map_eval: domain expects " + std::to_string(need) +
                     " coordinates";
      return HR_ERR_TYPE_MISMATCH;
    }
    geom::Vec4 v = geom::Vec4::Zero();
    for (int i = 0; i < need; ++i) v[i] = point[i];
    const maps::SpacePoint p = maps::SpacePoint::make(map->desc.domain(), v);
    const maps::SpacePoint q = maps::eval(map->desc, p);
    const int m = maps::ambient_dim(q.space);
    for (int i = 0; i < m; ++i) out[i] = q.v[i];
    *out_len = m;
    return HR_OK;
  });
}

hr_status hr_degree(const hr_map* map, const hr_degree_opts* opts,
                    int* degree_out) {
  if (!map || !degree_out) return invalid("hr_degree: null argument");
  return guarded([&] {
    *degree_out = deg::compute_degree(map->desc, degree_config(opts));
    return HR_OK;
  });
}

hr_status hr_hopf_invariant(const hr_map* map, const hr_trace_opts* opts,
                            int* value_out) {
  if (!map || !value_out) return invalid("hr_hopf_invariant: null argument");
  return guarded([&] {
    *value_out = lk::hopf_invariant(map->desc, trace_config(opts));
    return HR_OK;
  });
}

hr_status hr_trace_roots(const hr_map* map, const double* y, int y_len,
                         const hr_trace_opts* opts, hr_curves** out) {
  if (!map || !y || !out) return invalid("hr_trace_roots: null argument");
  if (y_len != 3) return invalid("hr_trace_roots: y takes 3 coordinates");
  return guarded([&] {
    const geom::Vec3 value(y[0], y[1], y[2]);
    *out = new hr_curves{
        trace::find_root_components(map->desc, value, trace_config(opts))};
    return HR_OK;
  });
}

int hr_curves_count(const hr_curves* curves) {
  return curves ? static_cast<int>(curves->curves.size()) : 0;
}

int hr_curve_point_count(const hr_curves* curves, int index) {
  if (!curves || index < 0 ||
      index >= static_cast<int>(curves->curves.size())) {
    return 0;
  }
  return static_cast<int>(curves->curves[index].points.size());
}

int hr_curve_closed(const hr_curves* curves, int index) {
  if (!curves || index < 0 ||
      index >= static_cast<int>(curves->curves.size())) {
    return 0;
  }
  return curves->curves[index].closed ? 1 : 0;
}

double hr_curve_length(const hr_curves* curves, int index) {
  if (!curves || index < 0 ||
      index >= static_cast<int>(curves->curves.size())) {
    return 0.0;
  }
  return curves->curves[index].length;
}

hr_status hr_curve_points(const hr_curves* curves, int index, double* xyzw,
                          size_t cap) {
  if (!curves || !xyzw) return invalid("hr_curve_points: null argument");
  if (index < 0 || index >= static_cast<int>(curves->curves.size())) {
    return invalid("hr_curve_points: index out of range");
  }
  const auto& pts = curves->curves[index].points;
  if (cap < 4 * pts.size()) return invalid("hr_curve_points: buffer too small");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int j = 0; j < 4; ++j) xyzw[4 * i + j] = pts[i][j];
  }
  return HR_OK;
}

hr_status hr_curves_export_csv(const hr_curves* curves, const char* path) {
  if (!curves || !path) return invalid("hr_curves_export_csv: null argument");
  return guarded([&] {
    cli::export_curves(curves->curves, path);
    return HR_OK;
  });
}

void hr_curves_free(hr_curves* curves) { delete curves; }

hr_status hr_classify(int nmin, int nmax, const hr_trace_opts* opts,
                      hr_report** out) {
  if (!out) return invalid("hr_classify: null argument");
  return guarded([&] {
    std::vector<lk::ClassificationRow> table;
    hr_status status = HR_OK;
    try {
      table = lk::verify_classification(nmin, nmax, trace_config(opts));
    } catch (const lk::ClassificationMismatchWithTable& e) {
      table = e.table();
      g_last_error = e.what();
      status = HR_ERR_CLASSIFICATION_MISMATCH;
    }
    bool ok = true;
    std::ostringstream text;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table) {
      ok &= row.pass;
      text << "n=" << row.n << " invariant=" << row.invariant
           << " pass=" << (row.pass ? "true" : "false") << "\n";
      rows.push_back({{"n", row.n},
                      {"invariant", row.invariant},
                      {"pass", row.pass}});
    }
    nlohmann::ordered_json j;
    j["classification"] = rows;
    j["all_pass"] = ok;
    *out = make_report(ok, text.str(), j.dump(2));
    return status;
  });
}

hr_status hr_root_report(const hr_map* map, const double* y, int y_len,
                         const hr_trace_opts* opts, hr_report** out) {
  if (!map || !y || !out) return invalid("hr_root_report: null argument");
  if (y_len != 3) return invalid("hr_root_report: y takes 3 coordinates");
  return guarded([&] {
    const geom::Vec3 value(y[0], y[1], y[2]);
    const trace::TraceConfig cfg = trace_config(opts);
    std::ostringstream text;
    nlohmann::ordered_json j;
    if (map->desc.target() == maps::Space::RP2) {
      auto [plus, minus] = rootlab::rp2_root_decompose(map->desc, value, cfg);
      text << cli::render_report_text(plus) << cli::render_report_text(minus);
      j["lift_plus"] = report_json(plus);
      j["lift_minus"] = report_json(minus);
    } else {
      const auto report = rootlab::root_set_report(map->desc, value, cfg);
      text << cli::render_report_text(report);
      j = report_json(report);
    }
    *out = make_report(true, text.str(), j.dump(2));
    return HR_OK;
  });
}

hr_status hr_minimal_root_demo(const char* domain, const char* target, int n,
                               const hr_trace_opts* opts, hr_report** out) {
  if (!domain || !target || !out) {
    return invalid("hr_minimal_root_demo: null argument");
  }
  return guarded([&] {
    const rootlab::DemoResult demo = rootlab::minimal_root_demo_checked(
        space_from(domain), space_from(target), n, trace_config(opts));
    nlohmann::ordered_json j;
    j["domain"] = domain;
    j["target"] = target;
    j["n"] = n;
    j["pass"] = demo.pass;
    j["detail"] = demo.detail;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : demo.reports) j["reports"].push_back(report_json(r));
    *out = make_report(demo.pass, cli::render_demo_text(demo), j.dump(2));
    if (!demo.pass) {
      g_last_error = "minimal root demo failed: " + demo.detail;
      return HR_ERR_THEOREM_CHECK_FAILED;
    }
    return HR_OK;
  });
}

hr_status hr_run_suite(const char* suite, uint64_t seed, const char* out_dir,
                       hr_report** out) {
  if (!suite || !out) return invalid("hr_run_suite: null argument");
  return guarded([&] {
    const cli::SuiteResult result = cli::run_suite(
        cli::suite_kind_from(suite), seed, out_dir ? out_dir : "");
    *out = make_report(result.all_pass, cli::render_text(result),
                       cli::render_json(result));
    return HR_OK;
  });
}

int hr_report_ok(const hr_report* report) {
  return report && report->ok ? 1 : 0;
}

const char* hr_report_text(const hr_report* report) {
  return report ? report->text.c_str() : "";
}

const char* hr_report_json(const hr_report* report) {
  return report ? report->json.c_str() : "";
}

void hr_report_free(hr_report* report) { delete report; }

}  // extern "C"
