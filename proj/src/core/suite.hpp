#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/root_lab.hpp"

namespace hopfroots::cli {

using trace::Curve;

enum class SuiteKind { Paper, Quick };

SuiteKind suite_kind_from(const std::string& name);  // "paper" | "quick"

struct CheckRecord {
  std::string id;
  std::string desc;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct SuiteResult {
  std::string kind;
  std::uint64_t seed = 1;
  std::vector<CheckRecord> records;
  bool all_pass = false;
};

/// Runs the verification suite. `paper` covers the full check list; `quick`
/// runs the class table for n in {0,1,2}. When out_dir is nonempty the
/// line-oriented summary, a JSON mirror and per-check curve exports are
/// written there (IoError when the directory cannot be written).
SuiteResult run_suite(SuiteKind kind, std::uint64_t seed,
                      const std::string& out_dir);

/// Writes the curves as CSV with header component,idx,x1,x2,x3,x4,sx,sy,sz.
/// Stereographic columns use the pole (0,0,0,1), falling back to
/// (0,0,0,-1) when a curve passes within 1e-3 of the default. Byte-stable
/// for fixed input.
void export_curves(const std::vector<Curve>& curves, const std::string& path);

std::string render_text(const SuiteResult& result);
std::string render_json(const SuiteResult& result);

/// Text/JSON rendering of a root-set report (used by the CLI).
std::string render_report_text(const rootlab::RootSetReport& report);
std::string render_demo_text(const rootlab::DemoResult& demo);

}  // namespace hopfroots::cli
