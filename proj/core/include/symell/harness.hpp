#pragma once

// Verification campaigns: enclosure containment against the quadrature
// oracle, realized error symbols, empirical orders of accuracy, identity and
// inequality suites, and dispatcher soundness.
//
// Samples are generated up front from the seed, so a report depends only on
// its inputs and never on thread scheduling.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symell/asym.hpp"
#include "symell/bounds.hpp"
#include "symell/dispatch.hpp"

namespace symell {

/// Thrown by run_order_fit for grids with fewer than 4 ratios or spanning
/// less than 3 decades.
class GridError : public std::invalid_argument {
 public:
  explicit GridError(const std::string& what) : std::invalid_argument(what) {}
};

// ---- sampling -------------------------------------------------------------

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double uniform01(std::uint64_t bits);

/// Argument tuples for `id` with the regime ratio pinned to `ratio`.
///
/// Magnitudes are log-uniform: a scale S in [1e-3, 1e3], members of each
/// group S*u with u in [0.1, 1], then the small group is rescaled so that
/// max(small)/min(large) == ratio. Sample i depends on (seed, id, i) only,
/// so the same shapes recur at every ratio. With `degenerate` set the small
/// group is 0 instead.
std::vector<std::vector<double>> sample_case(CaseId id, double ratio, int n,
                                             std::uint64_t seed,
                                             bool degenerate = false);

/// Long-double truth for a case's family at `args` (case slot order), from
/// the quadrature oracle.
struct Truth {
  long double value = 0;
  long double abs_error = 0;
};
Truth oracle_truth(CaseId id, std::span<const double> args);

// ---- containment and order fits -------------------------------------------

struct Campaign {
  CaseId case_id = CaseId::C1;
  std::vector<double> ratios;
  int samples = 500;
  std::uint64_t seed = 42;
  int threads = 0;  // 0: hardware concurrency
  bool degenerate = false;
};

struct ThetaStats {
  long inside = 0;    // strictly inside the stated bracket
  long endpoint = 0;  // at an endpoint, within rounding
  long outside = 0;
};

struct RatioResult {
  double ratio = 0;
  int samples = 0;
  int evaluated = 0;
  int gated = 0;  // rejected by the case's regime conditions
  int violations = 0;
  double max_rel_width = 0;
  ThetaStats theta;
};

struct Violation {
  std::string what;  // containment, theta, oracle
  double ratio = 0;
  std::vector<double> args;
  double lo = 0;
  double hi = 0;
  long double truth = 0;
};

struct CampaignReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<RatioResult> per_ratio;
  int violations = 0;
  ThetaStats theta;
  std::optional<double> slope;
  std::optional<double> expected_slope;
  std::optional<bool> slope_ok;
  std::vector<Violation> offending;  // the first few, for reproduction
  double wall_seconds = 0;

  int evaluated() const;
  bool ok() const;
};

/// Checks oracle in [lo, hi] and that the realized symbol lies in its
/// stated bracket. Violations are reported, never thrown.
CampaignReport run_containment(const Campaign& c);

/// Least-squares slope of log(max relative bracket width) against
/// log(ratio), compared with the expected exponent table.
CampaignReport run_order_fit(CaseId id, const std::vector<double>& ratios,
                             std::uint64_t seed, int samples = 64);

/// Slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ExpectedOrders {
  double slack = 0.15;
  std::vector<double> fit_ratios;
  std::map<CaseId, double> exponent;
};

/// The table built into the library from config/expected_orders.json.
const ExpectedOrders& expected_orders();
ExpectedOrders parse_expected_orders(const std::string& json_text);

// ---- sharpening -------------------------------------------------------------

struct SharpeningResult {
  CaseId sharper;
  CaseId coarser;
  int samples = 0;
  int failures = 0;
  std::vector<std::vector<double>> offending;
};

/// width(sharper) < width(coarser) at identical arguments, for the pairs
/// F1d/F1c, F1d/F1a, C2b/C2a, D2b/D2a, D2c/D2b, J2b/J2a, F1f/F1e.
std::vector<SharpeningResult> run_sharpening(const std::vector<double>& ratios,
                                             int samples, std::uint64_t seed);

// ---- identity, inequality and dispatcher suites ----------------------------

struct CheckResult {
  std::string id;
  std::string description;
  long samples = 0;
  long failures = 0;
  double max_error = 0;  // in the units `tolerance` is stated in
  double tolerance = 0;
  std::vector<std::vector<double>> offending;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;
  double wall_seconds = 0;

  long failures() const;
  bool ok() const { return failures() == 0; }
};

/// Identities, reductions, symmetry, homogeneity and the inequality chains
/// satisfied by the reference evaluators; n fuzzed tuples each.
SuiteReport run_identities(std::uint64_t seed, long n, int threads = 0);

/// Reference evaluators against the quadrature oracle, n tuples per
/// function, relative tolerance `tol`.
SuiteReport run_dual_oracle(std::uint64_t seed, long n, double tol = 1e-9,
                            int threads = 0);

/// Appendix inequalities: n fuzzed tuples each (log-uniform in [1e-6, 1e6]),
/// plus monotonicity of the A3/A4 symbol along increasing t grids.
SuiteReport run_inequalities(const std::vector<IneqId>& ids, std::uint64_t seed,
                             long n);

/// Fuzzed EvalRequests at each tolerance, achieved error checked against the
/// oracle; plus fast-path coverage for ratio <= 1e-8 at tolerance 1e-6.
SuiteReport run_dispatch(std::uint64_t seed, long n,
                         const std::vector<double>& tols, int threads = 0);

/// Quadrature truth for an evaluation request (principal values included).
Truth request_truth(const EvalRequest& req);

}  // namespace symell
