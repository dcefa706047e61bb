#pragma once

#include <cstdint>
#include <vector>

#include "core/tracer.hpp"

namespace hopfroots::link {

using maps::MapDescriptor;
using trace::Curve;
using trace::TraceConfig;
using geom::Vec3;

enum class LinkMethod { Gauss, Crossing, Both };

/// Residual above which an integer linking value is rejected.
inline constexpr double kLinkResidualMax = 0.2;

struct LinkResult {
  int value = 0;
  double raw = 0.0;  // pre-rounding value of the method that produced `value`
  LinkMethod method = LinkMethod::Gauss;
  double residual = 0.0;
};

/// Linking number of two disjoint closed curves in S^3. Both curves are
/// projected stereographically from a pole maximizing the distance to both;
/// `Gauss` evaluates the discretized Gauss double integral, `Crossing` sums
/// signed crossings of a generic plane projection and halves. `Both` runs
/// the two and requires integer agreement.
LinkResult linking_number(const Curve& c1, const Curve& c2, LinkMethod method);

struct HopfInvariantResult {
  int value = 0;
  std::size_t fiber1_components = 0;
  std::size_t fiber2_components = 0;
  bool asymmetric_empty = false;  // one fiber empty, the other not
  int attempts = 1;               // value perturbations used
};

/// Hopf invariant of an S2-valued map on S3, computed as the total linking
/// of the fibers over (0,0,1) and (0,0,-1); the values are perturbed
/// deterministically when they turn out to be irregular. The sign convention
/// is calibrated so hopf_invariant(hopf) = +1.
HopfInvariantResult hopf_invariant_detail(const MapDescriptor& f,
                                          const TraceConfig& cfg);
int hopf_invariant(const MapDescriptor& f, const TraceConfig& cfg);

struct ClassificationRow {
  int n = 0;
  int invariant = 0;
  bool pass = false;
};

/// For each n in [nmin, nmax], builds the RP3 -> S2 class-n representative,
/// composes with the double cover and checks that the Hopf invariant of the
/// composite equals n. Throws ClassificationMismatch (carrying the table)
/// when a row fails.
class ClassificationMismatchWithTable;
std::vector<ClassificationRow> verify_classification(int nmin, int nmax,
                                                     const TraceConfig& cfg);

class ClassificationMismatchWithTable : public ClassificationMismatch {
 public:
  ClassificationMismatchWithTable(const std::string& what,
                                  std::vector<ClassificationRow> table,
                                  int offending_n)
      : ClassificationMismatch(what),
        table_(std::move(table)),
        offending_n_(offending_n) {}

  const std::vector<ClassificationRow>& table() const { return table_; }
  int offending_n() const { return offending_n_; }

 private:
  std::vector<ClassificationRow> table_;
  int offending_n_;
};

}  // namespace hopfroots::link
