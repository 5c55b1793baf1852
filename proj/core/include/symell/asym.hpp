#pragma once

// Asymptotic approximations of the symmetric integrals when some arguments
// are much smaller than the others, packaged as certified enclosures.
//
// Every case has the form  value = base + slope * e  where e is (a monotone
// transform of) the case's error symbol theta, r or s, and the symbol is
// known to lie in a closed or open bracket. Substituting the bracket
// endpoints gives lower and upper bounds; each is then widened outward by
// kWidenUlps ulps to absorb rounding in working precision.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace symell {

enum class CaseId {
  C1, C2a, C2b, C2c,
  F1a, F1b, F1c, F1d, F1e, F1f, F2a,
  D1, D2a, D2b, D2c, D3, D4,
  J1a, J1b, J2a, J2b, J3, J4a, J4b, J4c, J5, J6a, J6complete,
  G1a, G1b, G1c, G2,
};

inline constexpr std::array<CaseId, 32> kAllCases{
    CaseId::C1,  CaseId::C2a, CaseId::C2b, CaseId::C2c,
    CaseId::F1a, CaseId::F1b, CaseId::F1c, CaseId::F1d,
    CaseId::F1e, CaseId::F1f, CaseId::F2a, CaseId::D1,
    CaseId::D2a, CaseId::D2b, CaseId::D2c, CaseId::D3,
    CaseId::D4,  CaseId::J1a, CaseId::J1b, CaseId::J2a,
    CaseId::J2b, CaseId::J3,  CaseId::J4a, CaseId::J4b,
    CaseId::J4c, CaseId::J5,  CaseId::J6a, CaseId::J6complete,
    CaseId::G1a, CaseId::G1b, CaseId::G1c, CaseId::G2,
};

std::string_view to_string(CaseId id);
std::optional<CaseId> case_from_string(std::string_view name);

/// Which function a case approximates.
enum class Family { RC, RF, RD, RJ, RG, K, E };

std::string_view to_string(Family f);

/// Static description of a case.
///
/// Argument slots are numbered in the order the case is stated: (x, y) for
/// R_C, (x, y, z) for R_F/R_D/R_G, (x, y, z, p) for R_J and (k') for K and E.
/// The regime ratio is max(small slots)/min(large slots); for K and E it is
/// k'^2. `zero_slot` is the argument that must be exactly 0 in complete cases.
struct CaseInfo {
  CaseId id;
  Family family;
  int arity;
  std::string_view symbol;  // theta, theta1, r, r1, s, ...
  int cost_class;           // 1: elementary, 2: calls a reference evaluator
  bool upper_only;          // C2c, F1b: only an upper bound is stated
  std::vector<int> small;
  std::vector<int> large;
  std::optional<int> zero_slot;
  bool lo_strict;
  bool hi_strict;
};

const CaseInfo& case_info(CaseId id);

inline constexpr int kWidenUlps = 8;

/// Regime data for a particular argument tuple.
struct Regime {
  double ratio = 0;
  /// False only for G1a when 5a >= z: the stated upper endpoint does not
  /// apply and `hi` comes from the reference evaluator instead.
  bool stated_upper = true;
};

struct Enclosure {
  double lo = 0;
  double hi = 0;
  double estimate = 0;
  CaseId case_id = CaseId::C1;
  bool lo_strict = false;
  bool hi_strict = false;
  /// |slope| times the bracket length, before widening.
  double bracket_width = 0;
  /// The error symbol's bracket as stated.
  double symbol_lo = 0;
  double symbol_hi = 0;
  Regime regime;

  double width() const { return hi - lo; }
  /// bracket_width / |estimate|.
  double rel_width() const;
  /// Half the widened width relative to |estimate|.
  double rel_half_width() const;
  bool contains(double v) const { return lo <= v && v <= hi; }
};

/// Generic entry point; args in the case's slot order.
Enclosure approximate(CaseId id, std::span<const double> args);

Enclosure approx_rc(double x, double y, CaseId id);
Enclosure approx_rf(double x, double y, double z, CaseId id);
Enclosure approx_rd(double x, double y, double z, CaseId id);
Enclosure approx_rj(double x, double y, double z, double p, CaseId id);
Enclosure approx_rg(double x, double y, double z, CaseId id);
Enclosure approx_k(double kprime, CaseId id);
Enclosure approx_e(double kprime);

/// Regime ratio without building the enclosure (no precondition checks).
double regime_ratio(CaseId id, std::span<const double> args);

/// Realized error symbol: the value of theta/r/s that makes the case formula
/// reproduce `true_value` exactly.
double theta_recover(CaseId id, std::span<const double> args,
                     double true_value);

struct RecoveredSymbol {
  long double symbol = 0;
  /// Rounding uncertainty of `symbol` given `true_abs_error` in the supplied
  /// true value.
  long double uncertainty = 0;
  long double bracket_lo = 0;
  long double bracket_hi = 0;
  bool collapsed = false;  // bracket is a single point (equality case)
};

/// Same, evaluated in long double throughout so that the symbol is
/// meaningful even when slope * symbol is tiny next to the leading term.
RecoveredSymbol theta_recover_ld(CaseId id, std::span<const double> args,
                                 long double true_value,
                                 long double true_abs_error = 0);

}  // namespace symell
