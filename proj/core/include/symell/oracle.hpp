#pragma once

// Independent quadrature oracle for the symmetric integrals.
//
// Every defining integral over t in [0, inf) is evaluated after the change of
// variable t = exp(v), split at log(x), log(y), ... so that widely separated
// scales each get their own segment, and integrated by adaptive
// Gauss-Kronrod in long double. Nothing here calls the duplication
// evaluators in carlson.hpp.

#include <functional>
#include <limits>
#include <span>
#include <string_view>

namespace symell {

enum class OracleKind { RC, RF, RD, RJ, RG, Rm1 };

std::string_view to_string(OracleKind kind);

struct Quadrature {
  long double value = 0;
  long double abs_error = 0;  // Gauss-Kronrod error estimate, summed
};

using Integrand = std::function<long double(long double)>;

/// int_{t_lo}^{t_hi} f(t) dt for 0 <= t_lo < t_hi <= inf, where f decays at
/// least like t^{-1-eps} at infinity and is integrable at 0. `scales` are the
/// characteristic points of f (its arguments); the log-mapped interval is
/// split at each of them. Segments reaching t = 0 or t = inf are truncated
/// 92 e-folds beyond the extreme scale.
Quadrature integrate_positive(
    const Integrand& f, std::span<const long double> scales,
    long double t_lo = 0,
    long double t_hi = std::numeric_limits<long double>::infinity(),
    long double rel_tol = 1e-17L);

/// Relative accuracy the oracle promises; anything worse is a
/// ConvergenceError.
inline constexpr double kOracleRelTol = 1e-10;

/// Defining integral of `kind` at `args` ((x, y) for RC, (x, y, z) for RF,
/// RD, RG and Rm1, (x, y, z, p) with p > 0 for RJ).
Quadrature oracle_ld(OracleKind kind, std::span<const double> args);
Quadrature oracle_ld(OracleKind kind, std::span<const long double> args);
double oracle(OracleKind kind, std::span<const double> args);

/// Principal-value quadratures for R_C(x, -y_abs) and R_J(x, y, z, p < 0),
/// with the pole at t = |p| removed by subtraction.
Quadrature oracle_rc_pv(double x, double y_abs);
Quadrature oracle_rj_pv(double x, double y, double z, double p);

}  // namespace symell
