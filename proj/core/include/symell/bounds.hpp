#pragma once

// Elementary inequalities behind the asymptotic error bounds. Each is
// exposed as a Bracket (lower bound, the exact middle quantity, upper
// bound); the ones written as equalities with an error symbol also expose
// that symbol through theta_of.
//
// Middle quantities are differences of nearly equal terms; they are
// evaluated through rationalized forms so they keep full relative accuracy
// even when t is far from x, y, z.

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace symell {

enum class IneqId {
  A1, A2, A3, A4, A5, A6, A6a, A7, A8, A9, A10, AX, AY, AZ,
};

inline constexpr std::array<IneqId, 14> kAllIneqs{
    IneqId::A1, IneqId::A2,  IneqId::A3, IneqId::A4, IneqId::A5,
    IneqId::A6, IneqId::A6a, IneqId::A7, IneqId::A8, IneqId::A9,
    IneqId::A10, IneqId::AX, IneqId::AY, IneqId::AZ,
};

std::string_view to_string(IneqId id);
std::optional<IneqId> ineq_from_string(std::string_view name);

struct IneqInfo {
  IneqId id;
  /// Arguments are (t, x), (t, x, y) or (t, x, y, z).
  int arity;
  bool lo_strict;
  bool hi_strict;
  /// Equality form with an error symbol (theta_of applies).
  bool has_theta;
  /// t may be 0 (AX, AY, AZ); otherwise every argument must be positive.
  bool t_may_vanish;
};

const IneqInfo& ineq_info(IneqId id);

struct Bracket {
  double lo = 0;
  double mid = 0;
  double hi = 0;
};

/// Throws DomainError on nonpositive or non-finite input.
Bracket bracket(IneqId id, std::span<const double> args);

/// The error symbol solved from the equality form; A3, A4, A5, A6a, A7, A8.
double theta_of(IneqId id, std::span<const double> args);

/// Range of the symbol as stated: (1, 3/2), [g, a], [1, a/g], ...
std::pair<double, double> theta_range(IneqId id, std::span<const double> args);

/// True at the documented equality configurations, where a non-strict
/// inequality may hold with equality (x = y, or x = y = z).
bool equality_configuration(IneqId id, std::span<const double> args);

}  // namespace symell
