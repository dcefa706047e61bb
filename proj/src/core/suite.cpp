#include "core/suite.hpp"

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/degree.hpp"
#include "core/expr.hpp"
#include "core/sampling.hpp"

namespace hopfroots::cli {

namespace {

using deg::DegreeConfig;
using maps::Gen;
using maps::Generator;
using maps::MapDescriptor;
using maps::Space;
using maps::SpacePoint;
using rootlab::AnalyticSet;
using rootlab::DemoResult;
using rootlab::RootSetReport;
using trace::TraceConfig;
using geom::Vec3;
using geom::Vec4;

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Recorder {
  std::vector<CheckRecord> records;

  void add(const std::string& id, const std::string& desc,
           const std::string& expected, const std::string& observed,
           bool pass) {
    records.push_back({id, desc, expected, observed, pass});
  }

  void add_int(const std::string& id, const std::string& desc, int expected,
               int observed) {
    add(id, desc, std::to_string(expected), std::to_string(observed),
        expected == observed);
  }
};

MapDescriptor lift(const MapDescriptor& f) {
  return f.after(MapDescriptor(Generator::cover3()));
}

// ---------------------------------------------------------------------------
// criterion 1: mapping degrees

void check_degrees(Recorder& rec, std::uint64_t seed) {
  DegreeConfig cfg;
  cfg.seed = seed;

  for (int k = -3; k <= 3; ++k) {
    int observed = 9999;
    try {
      observed = deg::compute_degree(MapDescriptor(Generator::power(k)), cfg);
    } catch (const Error&) {
    }
    rec.add_int("c1_deg_a_" + std::to_string(k),
                "deg(a_" + std::to_string(k) + ") = " + std::to_string(k), k,
                observed);
  }

  int id_deg = 9999;
  try {
    id_deg = deg::compute_degree(MapDescriptor(Generator::power(1)), cfg);
  } catch (const Error&) {
  }
  rec.add_int("c1_deg_identity", "deg(identity) = 1", 1, id_deg);

  int q3p3 = 9999;
  try {
    q3p3 = deg::compute_degree(
        MapDescriptor(Generator::collapse3())
            .after(MapDescriptor(Generator::cover3())),
        cfg);
  } catch (const Error&) {
  }
  rec.add_int("c1_deg_q3_p3", "deg(q3 o p3) = 2", 2, q3p3);

  int q3 = 9999;
  try {
    q3 = deg::compute_degree(MapDescriptor(Generator::collapse3()), cfg);
  } catch (const Error&) {
  }
  rec.add("c1_deg_q3", "|deg(q3)| = 1 (sign fixed by the chosen orientations)",
          "|1|", std::to_string(q3), std::abs(q3) == 1);
}

// ---------------------------------------------------------------------------
// criteria 2 and 3: Hopf-invariant tables

void check_hopf_table(Recorder& rec, std::uint64_t seed) {
  for (int n = -2; n <= 3; ++n) {
    TraceConfig cfg;
    cfg.seed = seed + static_cast<std::uint64_t>(n + 10);
    MapDescriptor f = n == 1 ? MapDescriptor(Generator::hopf())
                             : MapDescriptor(Generator::hopf())
                                   .after(MapDescriptor(Generator::power(n)));
    int observed = 9999;
    try {
      observed = link::hopf_invariant(f, cfg);
    } catch (const Error&) {
    }
    rec.add_int("c2_hopf_a_" + std::to_string(n),
                "hopf(h o a_" + std::to_string(n) + ") = " + std::to_string(n),
                n, observed);
  }
}

void check_classification(Recorder& rec, std::uint64_t seed, int nmin,
                          int nmax) {
  for (int n = nmin; n <= nmax; ++n) {
    TraceConfig cfg;
    cfg.seed = seed + static_cast<std::uint64_t>(n + 20);
    int observed = 9999;
    try {
      const MapDescriptor hn = maps::build_class_map(Space::S2, Space::RP3, n);
      observed = link::hopf_invariant(lift(hn), cfg);
    } catch (const Error&) {
    }
    rec.add_int("c3_classify_n_" + std::to_string(n),
                "hopf(h'_" + std::to_string(n) + " o p3) = " +
                    std::to_string(n),
                n, observed);
  }
}

// ---------------------------------------------------------------------------
// criteria 4, 5, 6: minimal root sets

struct DemoOutcome {
  DemoResult demo;
  bool ok = false;
  std::string note;
};

DemoOutcome run_demo(Space domain, Space target, int n, std::uint64_t seed) {
  DemoOutcome out{DemoResult{domain, target, n, false, "", {}}, false, ""};
  TraceConfig cfg;
  cfg.seed = seed;
  try {
    out.demo = rootlab::minimal_root_demo_checked(domain, target, n, cfg);
    out.ok = out.demo.pass;
    out.note = out.demo.detail;
  } catch (const Error& e) {
    out.note = e.what();
  }
  return out;
}

double worst_analytic_match(const DemoResult& demo) {
  double worst = 0.0;
  for (const auto& report : demo.reports) {
    for (const auto& c : report.components) {
      if (c.analytic_match >= 0.0) worst = std::max(worst, c.analytic_match);
    }
  }
  return worst;
}

void check_s2_roots(Recorder& rec, std::uint64_t seed,
                    std::vector<std::pair<std::string, DemoResult>>* exports) {
  // domain S3: one closed circle matching the z1 circle, length 2*pi
  for (int n : {1, 2, 3, -1}) {
    DemoOutcome out = run_demo(Space::S3, Space::S2, n, seed + n + 40);
    bool pass = out.ok;
    std::ostringstream obs;
    obs << out.note;
    if (out.ok) {
      const double match = worst_analytic_match(out.demo);
      const double len = out.demo.reports[0].components.empty()
                             ? 0.0
                             : out.demo.reports[0].components[0].length;
      pass = match < 1e-6 && std::abs(len - kTwoPi) < 1e-4;
      obs.str("");
      obs << "components=1 match=" << fmt_short(match)
          << " length=" << fmt(len);
    }
    const std::string id = "c4_min_root_s2_s3_n_" + std::to_string(n);
    rec.add(id,
            "phi_" + std::to_string(n) +
                "^-1(y0) is the z1 circle (one closed component)",
            "1 closed circle, match<1e-6, length=2pi+-1e-4", obs.str(), pass);
    if (out.ok && exports) exports->push_back({id, out.demo});
  }

  // domain RP3, odd classes: the projected z1 circle
  for (int n : {1, 3}) {
    DemoOutcome out = run_demo(Space::RP3, Space::S2, n, seed + n + 50);
    bool pass = out.ok;
    std::ostringstream obs;
    obs << out.note;
    if (out.ok) {
      const double match = worst_analytic_match(out.demo);
      pass = match < 1e-6;
      obs.str("");
      obs << "components=1 match=" << fmt_short(match);
    }
    const std::string id = "c4_min_root_s2_rp3_n_" + std::to_string(n);
    rec.add(id,
            "phi'_" + std::to_string(n) +
                "^-1(y0) is the projected z1 circle",
            "1 closed circle, match<1e-6", obs.str(), pass);
    if (out.ok && exports) exports->push_back({id, out.demo});
  }

  // domain RP3, even class 2: the collapse-model circle
  {
    DemoOutcome out = run_demo(Space::RP3, Space::S2, 2, seed + 60);
    bool pass = out.ok;
    std::ostringstream obs;
    obs << out.note;
    if (out.ok) {
      const double match = worst_analytic_match(out.demo);
      pass = match < 1e-6;
      obs.str("");
      obs << "components=1 match=" << fmt_short(match);
    }
    rec.add("c4_min_root_s2_rp3_n_2",
            "phi'_2^-1(y0) is the circle {|x'|=1/2, x3=0, x4=sqrt(3)/2}",
            "1 closed circle, match<1e-6", obs.str(), pass);
    if (out.ok && exports) exports->push_back({"c4_min_root_s2_rp3_n_2", out.demo});
  }
}

void check_rp2_roots(Recorder& rec, std::uint64_t seed,
                     std::vector<std::pair<std::string, DemoResult>>* exports) {
  for (Space domain : {Space::S3, Space::RP3}) {
    for (int n : {1, 2}) {
      DemoOutcome out =
          run_demo(domain, Space::RP2, n, seed + n + (domain == Space::S3 ? 70 : 80));
      bool pass = out.ok;
      std::ostringstream obs;
      obs << out.note;
      std::string expect = "2 disjoint closed circles";
      if (out.ok) {
        obs.str("");
        obs << "components=2 disjoint";
        if (domain == Space::S3) {
          const double match = worst_analytic_match(out.demo);
          pass = match < 1e-6;
          obs << " match=" << fmt_short(match);
          expect += " matching the z1 and z2 circles (<1e-6)";
        }
      }
      const std::string id = std::string("c5_min_root_rp2_") +
                             maps::space_name(domain) + "_n_" +
                             std::to_string(n);
      rec.add(id, "root set over p2(y0) splits into two disjoint circles",
              expect, obs.str(), pass);
      if (out.ok && exports) exports->push_back({id, out.demo});
    }
  }
}

void check_null_classes(Recorder& rec, std::uint64_t seed) {
  const std::pair<Space, Space> combos[] = {
      {Space::S3, Space::S2},
      {Space::RP3, Space::S2},
      {Space::S3, Space::RP2},
      {Space::RP3, Space::RP2},
  };
  int off = 0;
  for (const auto& [domain, target] : combos) {
    DemoOutcome out = run_demo(domain, target, 0, seed + 90 + off++);
    rec.add(std::string("c6_null_") + maps::space_name(domain) + "_" +
                maps::space_name(target),
            "class 0 root set is empty", "0 components",
            out.ok ? "0 components" : out.note, out.ok);
  }
}

// ---------------------------------------------------------------------------
// criterion 7: closed loops for every nontrivial class, including
// perturbed non-minimal composites

void check_closed_loops(Recorder& rec, std::uint64_t seed) {
  const char* exprs[] = {
      "compose(hopf, power(1), rot_s3(0,2,0.37))",
      "compose(hopf, power(2), rot_s3(1,3,0.83))",
      "compose(hopf, rot_s3(0,1,0.4), power(-1))",
      "compose(rot_s2(0,2,0.5), hprime, power_rp(3))",
      "compose(rot_s2(1,2,0.7), hopf, collapse3)",
  };
  int idx = 0;
  for (const char* text : exprs) {
    ++idx;
    bool pass = false;
    std::string note;
    try {
      const MapDescriptor f = maps::parse_map(text);
      TraceConfig cfg;
      cfg.seed = seed + 200 + idx;
      const auto curves =
          trace::find_root_components(f, maps::base_point_y0(), cfg);
      for (const auto& c : curves) pass = pass || c.closed;
      note = std::to_string(curves.size()) + " component(s)";
      if (!pass) note += ", none closed";
    } catch (const Error& e) {
      note = e.what();
    }
    rec.add("c7_loops_" + std::to_string(idx),
            std::string("closed root loop present for ") + text,
            ">=1 closed component", note, pass);
  }
}

// ---------------------------------------------------------------------------
// criterion 8: equivariance identities

void check_equivariance(Recorder& rec, std::uint64_t seed) {
  const std::size_t samples = 10000;

  const auto hp = maps::verify_well_defined(Gen::HPrime, 0, samples, seed);
  rec.add("c8_equivariance_hprime", "max |h(p) - h(-p)| over 1e4 samples",
          "<1e-12", fmt_short(hp.max_violation), hp.max_violation < 1e-12);

  const auto pr = maps::verify_well_defined(Gen::PowerRp, 3, samples, seed + 1);
  rec.add("c8_equivariance_power_rp_3",
          "max |a_3(-p) + a_3(p)| over 1e4 samples", "<1e-12",
          fmt_short(pr.max_violation), pr.max_violation < 1e-12);

  double worst = 0.0;
  const MapDescriptor h{Generator::hopf()};
  const MapDescriptor hprime_p3 = lift(MapDescriptor(Generator::hprime()));
  for (const Vec4& x : geom::sample_s3(samples, seed + 2)) {
    const Vec3 a = maps::eval(hprime_p3, SpacePoint::s3(x)).v3();
    const Vec3 b = maps::eval(h, SpacePoint::s3(x)).v3();
    worst = std::max(worst, (a - b).norm());
  }
  rec.add("c8_factorization", "max |h'(p3(x)) - h(x)| over 1e4 samples",
          "<1e-12", fmt_short(worst), worst < 1e-12);
}

// ---------------------------------------------------------------------------
// criterion 9: fiber geometry of the Hopf map

void check_fiber_geometry(Recorder& rec, std::uint64_t seed,
                          std::vector<Curve>* export_pair) {
  const MapDescriptor h{Generator::hopf()};
  TraceConfig cfg;
  cfg.seed = seed + 300;

  std::vector<Curve> fibers;
  double worst_planarity = 0.0;
  bool traced_ok = true;
  std::string note;
  try {
    const auto values = geom::sample_s2(20, seed + 301);
    for (const Vec3& y : values) {
      const auto comps = trace::find_root_components(h, y, cfg);
      if (comps.size() != 1 || !comps[0].closed) {
        traced_ok = false;
        break;
      }
      fibers.push_back(comps[0]);
      worst_planarity =
          std::max(worst_planarity, rootlab::planarity_residual(comps[0]));
    }
  } catch (const Error& e) {
    traced_ok = false;
    note = e.what();
  }
  rec.add("c9_fiber_planarity",
          "20 random fibers of h lie on 2-planes through the origin",
          "residual<1e-8",
          traced_ok ? fmt_short(worst_planarity) : note,
          traced_ok && worst_planarity < 1e-8);

  bool links_ok = traced_ok;
  int pair_count = 0;
  std::string link_note;
  if (traced_ok) {
    try {
      for (std::size_t stride = 1; stride < fibers.size() && pair_count < 20;
           ++stride) {
        for (std::size_t i = 0; i + stride < fibers.size() && pair_count < 20;
             i += 2) {
          const Curve& a = fibers[i];
          const Curve& b = fibers[i + stride];
          link::LinkResult lr;
          try {
            lr = link::linking_number(a, b, link::LinkMethod::Both);
          } catch (const CurvesNotSeparated&) {
            continue;  // too-close pair; pick another
          }
          ++pair_count;
          if (lr.value != 1) {
            links_ok = false;
            link_note = "pair linking " + std::to_string(lr.value);
          }
        }
      }
      if (export_pair && fibers.size() >= 2) {
        export_pair->push_back(fibers[0]);
        export_pair->push_back(fibers[1]);
      }
    } catch (const Error& e) {
      links_ok = false;
      link_note = e.what();
    }
    if (pair_count < 20) {
      links_ok = false;
      link_note = "only " + std::to_string(pair_count) + " separated pairs";
    }
  }
  rec.add("c9_fiber_linking",
          "20 separated fiber pairs of h link once, both methods agreeing",
          "linking=+1 for 20 pairs",
          links_ok ? std::to_string(pair_count) + " pairs, all +1"
                   : (link_note.empty() ? note : link_note),
          links_ok);
}

// ---------------------------------------------------------------------------
// criterion 10: preimage solver against the closed-form root oracle

// Direct complex-root extraction for a_k(x) = y: z2 = t*w2 and z1 runs over
// the |k| k-th roots (conjugated for k < 0), with t fixed by the unit-norm
// constraint.
std::vector<Vec4> oracle_preimages(int k, const Vec4& y) {
  using Complex = std::complex<double>;
  const Complex w1(y[0], y[1]);
  const Complex w2(y[2], y[3]);
  const int m = std::abs(k);
  if (m == 0 || std::abs(w1) < 1e-9) {
    throw DegenerateInput("oracle_preimages: k != 0 and w1 != 0 required");
  }
  // |z1| = s solves s^2 + s^(2m) |w2|^2/|w1|^2 = 1, increasing on (0,1)
  const double q = std::norm(w2) / std::norm(w1);
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double val = mid * mid + std::pow(mid, 2 * m) * q;
    (val < 1.0 ? lo : hi) = mid;
  }
  const double s = 0.5 * (lo + hi);
  const double t = std::pow(s, m) / std::abs(w1);
  const Complex z2 = t * w2;
  std::vector<Vec4> out;
  const double base_arg = std::arg(w1);
  for (int j = 0; j < m; ++j) {
    const double arg = (base_arg + kTwoPi * j) / m;
    Complex z1 = std::polar(s, arg);
    if (k < 0) z1 = std::conj(z1);
    out.push_back(geom::unitize(Vec4(z1.real(), z1.imag(), z2.real(), z2.imag())));
  }
  return out;
}

void check_preimage_oracle(Recorder& rec, std::uint64_t seed) {
  for (int k : {3, -2}) {
    bool pass = true;
    std::string note = "5 values matched";
    try {
      const MapDescriptor f{Generator::power(k)};
      DegreeConfig cfg;
      cfg.seed = seed + 400 + k;
      const auto values = geom::sample_s3(5, seed + 401 + k);
      for (const Vec4& y : values) {
        const auto found = deg::find_preimages(f, y, cfg);
        const auto expected = oracle_preimages(k, geom::unitize(y));
        if (found.points.size() != expected.size()) {
          pass = false;
          note = "count " + std::to_string(found.points.size()) + " vs oracle " +
                 std::to_string(expected.size());
          break;
        }
        for (const Vec4& e : expected) {
          double best = 1e9;
          for (const Vec4& p : found.points) best = std::min(best, (p - e).norm());
          if (best > 1e-8) {
            pass = false;
            note = "point mismatch " + fmt_short(best);
            break;
          }
        }
        for (int sgn : found.signs) {
          if (sgn != (k > 0 ? 1 : -1)) {
            pass = false;
            note = "sign mismatch";
            break;
          }
        }
        if (!pass) break;
      }
    } catch (const Error& e) {
      pass = false;
      note = e.what();
    }
    rec.add("c10_oracle_a_" + std::to_string(k),
            "find_preimages(a_" + std::to_string(k) +
                ") equals the complex-root oracle at 5 random values",
            "same points (<1e-8), same signs", note, pass);
  }
}

// ---------------------------------------------------------------------------

void write_outputs(const SuiteResult& result, const std::string& out_dir,
                   const std::vector<std::pair<std::string, DemoResult>>& demos,
                   const std::vector<Curve>& fiber_pair) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir);

  {
    std::ofstream txt(fs::path(out_dir) / "summary.txt", std::ios::binary);
    if (!txt) throw IoError("cannot write summary.txt under " + out_dir);
    txt << render_text(result);
  }
  {
    std::ofstream js(fs::path(out_dir) / "summary.json", std::ios::binary);
    if (!js) throw IoError("cannot write summary.json under " + out_dir);
    js << render_json(result) << "\n";
  }
  for (const auto& [id, demo] : demos) {
    std::vector<Curve> curves;
    for (const auto& report : demo.reports) {
      curves.insert(curves.end(), report.curves.begin(), report.curves.end());
    }
    if (curves.empty()) continue;
    export_curves(curves, (fs::path(out_dir) / (id + ".csv")).string());
  }
  if (!fiber_pair.empty()) {
    export_curves(fiber_pair,
                  (fs::path(out_dir) / "c9_fiber_pair.csv").string());
  }
}

}  // namespace

SuiteKind suite_kind_from(const std::string& name) {
  if (name == "paper") return SuiteKind::Paper;
  if (name == "quick") return SuiteKind::Quick;
  throw DegenerateInput("unknown suite '" + name + "' (use paper or quick)");
}

SuiteResult run_suite(SuiteKind kind, std::uint64_t seed,
                      const std::string& out_dir) {
  Recorder rec;
  std::vector<std::pair<std::string, DemoResult>> demo_exports;
  std::vector<Curve> fiber_pair;

  if (kind == SuiteKind::Quick) {
    check_classification(rec, seed, 0, 2);
  } else {
    check_degrees(rec, seed);
    check_hopf_table(rec, seed);
    check_classification(rec, seed, -2, 3);
    check_s2_roots(rec, seed, &demo_exports);
    check_rp2_roots(rec, seed, &demo_exports);
    check_null_classes(rec, seed);
    check_closed_loops(rec, seed);
    check_equivariance(rec, seed);
    check_fiber_geometry(rec, seed, &fiber_pair);
    check_preimage_oracle(rec, seed);
  }

  SuiteResult result;
  result.kind = kind == SuiteKind::Paper ? "paper" : "quick";
  result.seed = seed;
  result.records = std::move(rec.records);
  result.all_pass = true;
  for (const auto& r : result.records) result.all_pass &= r.pass;

  if (!out_dir.empty()) {
    write_outputs(result, out_dir, demo_exports, fiber_pair);
  }
  return result;
}

void export_curves(const std::vector<Curve>& curves, const std::string& path) {
  if (curves.empty()) throw DegenerateInput("export_curves: empty curve list");

  const Vec4 default_pole(0, 0, 0, 1);
  const Vec4 fallback_pole(0, 0, 0, -1);
  auto min_dist = [&](const Vec4& pole) {
    double best = std::numeric_limits<double>::infinity();
    for (const Curve& c : curves) {
      for (const Vec4& p : c.points) best = std::min(best, (p - pole).norm());
    }
    return best;
  };
  Vec4 pole = default_pole;
  if (min_dist(default_pole) < 1e-3) {
    pole = fallback_pole;
    if (min_dist(fallback_pole) < 1e-6) {
      throw DegenerateInput("export_curves: curves pass through both poles");
    }
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("export_curves: cannot open " + path);
  out << "component,idx,x1,x2,x3,x4,sx,sy,sz\n";
  const geom::PointS3 pole_pt(pole);
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& pts = curves[ci].points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec3 s = geom::stereographic(geom::PointS3(pts[i]), pole_pt);
      out << ci << ',' << i;
      for (int j = 0; j < 4; ++j) out << ',' << fmt(pts[i][j]);
      for (int j = 0; j < 3; ++j) out << ',' << fmt(s[j]);
      out << '\n';
    }
  }
  if (!out) throw IoError("export_curves: write failed for " + path);
}

std::string render_text(const SuiteResult& result) {
  std::ostringstream os;
  os << "suite=" << result.kind << " seed=" << result.seed
     << " checks=" << result.records.size()
     << " all_pass=" << (result.all_pass ? "true" : "false") << "\n";
  for (const auto& r : result.records) {
    os << "id=" << r.id << " expected=\"" << r.expected << "\" observed=\""
       << r.observed << "\" pass=" << (r.pass ? "true" : "false") << " desc=\""
       << r.desc << "\"\n";
  }
  return os.str();
}

std::string render_json(const SuiteResult& result) {
  nlohmann::ordered_json j;
  j["suite"] = result.kind;
  j["seed"] = result.seed;
  j["all_pass"] = result.all_pass;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : result.records) {
    nlohmann::ordered_json rj;
    rj["id"] = r.id;
    rj["desc"] = r.desc;
    rj["expected"] = r.expected;
    rj["observed"] = r.observed;
    rj["pass"] = r.pass;
    j["records"].push_back(rj);
  }
  return j.dump(2);
}

std::string render_report_text(const rootlab::RootSetReport& report) {
  std::ostringstream os;
  os << "map=" << report.map_expr << " domain="
     << maps::space_name(report.domain) << " base=(" << fmt(report.base_point[0])
     << "," << fmt(report.base_point[1]) << "," << fmt(report.base_point[2])
     << ") components=" << report.component_count
     << " closed_loop=" << (report.closed_loop_present ? "true" : "false")
     << " analytic=" << rootlab::analytic_set_name(report.analytic) << "\n";
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const auto& c = report.components[i];
    os << "component=" << i << " closed=" << (c.closed ? "true" : "false")
       << " length=" << fmt(c.length) << " vertices=" << c.vertices
       << " planarity=" << fmt_short(c.planarity)
       << " residual=" << fmt_short(c.residual);
    if (c.analytic_match >= 0.0) {
      os << " analytic_match=" << fmt_short(c.analytic_match);
    }
    os << "\n";
  }
  return os.str();
}

std::string render_demo_text(const rootlab::DemoResult& demo) {
  std::ostringstream os;
  os << "demo domain=" << maps::space_name(demo.domain)
     << " target=" << maps::space_name(demo.target) << " n=" << demo.n
     << " pass=" << (demo.pass ? "true" : "false") << " detail=\""
     << demo.detail << "\"\n";
  for (const auto& report : demo.reports) os << render_report_text(report);
  return os.str();
}

}  // namespace hopfroots::cli
