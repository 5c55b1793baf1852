#include "symell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "symell/errors.hpp"

namespace symell {

namespace {

using LD = long double;
using GK = boost::math::quadrature::gauss_kronrod<LD, 31>;

constexpr LD kTail = 92;  // e-folds kept beyond the extreme scale
constexpr int kMaxBisections = 4000;

template <class A>
void check_args(OracleKind kind, std::span<const A> args) {
  const std::size_t want = kind == OracleKind::RC   ? 2
                           : kind == OracleKind::RJ ? 4
                                                    : 3;
  if (args.size() != want)
    throw DomainError("oracle: wrong number of arguments for " +
                      std::string(to_string(kind)));
  for (A a : args)
    if (!std::isfinite(a) || a < 0)
      throw DomainError("oracle: arguments must be finite and nonnegative");
  const auto zeros = std::count(args.begin(), args.end(), A(0));
  switch (kind) {
    case OracleKind::RC:
      if (args[1] <= 0) throw DomainError("oracle: R_C needs y > 0");
      break;
    case OracleKind::RF:
    case OracleKind::RG:
      if (zeros > 1) throw DomainError("oracle: at most one zero argument");
      break;
    case OracleKind::RD:
      if (args[2] <= 0 || args[0] + args[1] <= 0)
        throw DomainError("oracle: R_D needs z > 0 and x + y > 0");
      break;
    case OracleKind::RJ:
      if (args[3] <= 0) throw DomainError("oracle: R_J needs p > 0");
      if (zeros > 1) throw DomainError("oracle: at most one zero argument");
      break;
    case OracleKind::Rm1:
      if (zeros > 0) throw DomainError("oracle: R_-1 needs positive arguments");
      break;
  }
}

struct Piece {
  LD a, b, value, error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

template <class F>
Piece rule(const F& g, LD a, LD b) {
  LD err = 0;
  const LD v = GK::integrate(g, a, b, 0, LD(0), &err);
  return {a, b, v, err};
}

// Globally adaptive Gauss-Kronrod: always bisect the piece with the largest
// error estimate until the summed estimate meets rel_tol against the summed
// value. Pieces are never judged against their own (possibly tiny) value, so
// round-off in negligible pieces cannot force endless refinement.
template <class F>
Quadrature adaptive(const F& g, const std::vector<LD>& cuts, LD rel_tol) {
  std::priority_queue<Piece> heap;
  LD value = 0, error = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    // Pieces wider than 4 e-folds start out split; the integrand is analytic
    // in a strip of half-width pi around the real v axis.
    const int n = std::max(1, static_cast<int>(std::ceil((cuts[i + 1] - cuts[i]) / 4)));
    for (int k = 0; k < n; ++k) {
      const LD a = cuts[i] + (cuts[i + 1] - cuts[i]) * k / n;
      const LD b = k + 1 == n ? cuts[i + 1] : cuts[i] + (cuts[i + 1] - cuts[i]) * (k + 1) / n;
      Piece p = rule(g, a, b);
      value += p.value;
      error += p.error;
      heap.push(p);
    }
  }
  for (int iter = 0; iter < kMaxBisections && !heap.empty(); ++iter) {
    const LD floor = 64 * std::numeric_limits<LD>::epsilon() * std::fabs(value);
    if (error <= std::max(rel_tol * std::fabs(value), floor)) break;
    const Piece worst = heap.top();
    heap.pop();
    const LD mid = (worst.a + worst.b) / 2;
    const Piece l = rule(g, worst.a, mid), r = rule(g, mid, worst.b);
    value += l.value + r.value - worst.value;
    error += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
  }
  // Recompute the sums to shed accumulated update round-off.
  Quadrature q;
  while (!heap.empty()) {
    q.value += heap.top().value;
    q.abs_error += heap.top().error;
    heap.pop();
  }
  return q;
}

Quadrature checked(Quadrature q, std::string_view what) {
  if (!std::isfinite(q.value) ||
      q.abs_error > static_cast<LD>(kOracleRelTol) * std::fabs(q.value))
    throw ConvergenceError("oracle: quadrature for " + std::string(what) +
                           " did not reach tolerance");
  return q;
}

}  // namespace

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::RC: return "RC";
    case OracleKind::RF: return "RF";
    case OracleKind::RD: return "RD";
    case OracleKind::RJ: return "RJ";
    case OracleKind::RG: return "RG";
    case OracleKind::Rm1: return "Rm1";
  }
  return "?";
}

Quadrature integrate_positive(const Integrand& f,
                              std::span<const long double> scales,
                              long double t_lo, long double t_hi,
                              long double rel_tol) {
  std::vector<LD> logs;
  for (LD s : scales)
    if (s > 0 && std::isfinite(s)) logs.push_back(std::log(s));
  if (t_lo > 0) logs.push_back(std::log(t_lo));
  if (std::isfinite(t_hi)) logs.push_back(std::log(t_hi));
  if (logs.empty()) logs.push_back(0);
  std::sort(logs.begin(), logs.end());

  const LD v_lo = t_lo > 0 ? std::log(t_lo) : logs.front() - kTail;
  const LD v_hi = std::isfinite(t_hi) ? std::log(t_hi) : logs.back() + kTail;

  std::vector<LD> cuts{v_lo};
  for (LD v : logs)
    if (v > cuts.back() && v < v_hi) cuts.push_back(v);
  cuts.push_back(v_hi);

  auto g = [&f](LD v) {
    const LD t = std::exp(v);
    return f(t) * t;
  };
  return adaptive(g, cuts, rel_tol);
}

Quadrature oracle_ld(OracleKind kind, std::span<const double> args) {
  check_args(kind, args);
  std::vector<LD> wide(args.begin(), args.end());
  return oracle_ld(kind, std::span<const LD>(wide));
}

Quadrature oracle_ld(OracleKind kind, std::span<const long double> args) {
  check_args(kind, args);
  const LD x = args[0], y = args[1];
  const LD z = args.size() > 2 ? LD(args[2]) : LD(0);
  const LD p = args.size() > 3 ? LD(args[3]) : LD(0);
  std::vector<LD> scales(args.begin(), args.end());

  Integrand f;
  switch (kind) {
    case OracleKind::RC:
      f = [=](LD t) { return 0.5L / (std::sqrt(t + x) * (t + y)); };
      break;
    case OracleKind::RF:
      f = [=](LD t) { return 0.5L / std::sqrt((t + x) * (t + y) * (t + z)); };
      break;
    case OracleKind::RD:
      f = [=](LD t) {
        return 1.5L / (std::sqrt((t + x) * (t + y)) * (t + z) *
                       std::sqrt(t + z));
      };
      break;
    case OracleKind::RJ:
      f = [=](LD t) {
        return 1.5L / (std::sqrt((t + x) * (t + y) * (t + z)) * (t + p));
      };
      break;
    case OracleKind::RG:
      f = [=](LD t) {
        const LD s = x / (t + x) + y / (t + y) + z / (t + z);
        return 0.25L * s * t / std::sqrt((t + x) * (t + y) * (t + z));
      };
      break;
    case OracleKind::Rm1:
      f = [=](LD t) { return 1 / (std::sqrt((t + x) * (t + y)) * (t + z)); };
      break;
  }
  return checked(integrate_positive(f, scales), to_string(kind));
}

double oracle(OracleKind kind, std::span<const double> args) {
  return static_cast<double>(oracle_ld(kind, args).value);
}

namespace {

// PV int_0^inf g(t)/(t - c) dt
//   = int_0^{2c} (g(t) - g(c))/(t - c) dt + int_{2c}^inf g(t)/(t - c) dt,
// since the principal value of int_0^{2c} dt/(t - c) vanishes.
Quadrature pv_integral(const Integrand& g, LD c,
                       std::span<const long double> scales) {
  std::vector<LD> s(scales.begin(), scales.end());
  s.push_back(c);
  const LD gc = g(c);
  auto near = [&](LD t) {
    if (t == c) return LD(0);
    return (g(t) - gc) / (t - c);
  };
  auto far = [&](LD t) { return g(t) / (t - c); };
  Quadrature a = integrate_positive(near, s, 0, 2 * c);
  Quadrature b = integrate_positive(far, s, 2 * c);
  return {a.value + b.value, a.abs_error + b.abs_error};
}

}  // namespace

Quadrature oracle_rc_pv(double x, double y_abs) {
  if (!(std::isfinite(x) && std::isfinite(y_abs) && x >= 0 && y_abs > 0))
    throw DomainError("oracle_rc_pv: need x >= 0, y_abs > 0");
  const LD xl = x;
  const LD scales[] = {xl};
  auto g = [=](LD t) { return 0.5L / std::sqrt(t + xl); };
  // Cancellation makes the result small relative to its parts; measure the
  // tolerance against the parts.
  Quadrature q = pv_integral(g, y_abs, scales);
  if (!std::isfinite(q.value)) throw ConvergenceError("oracle_rc_pv failed");
  return q;
}

Quadrature oracle_rj_pv(double x, double y, double z, double p) {
  if (!(x > 0 && y > 0 && z > 0 && p < 0 && std::isfinite(x) &&
        std::isfinite(y) && std::isfinite(z) && std::isfinite(p)))
    throw DomainError("oracle_rj_pv: need x, y, z > 0 and p < 0");
  const LD xl = x, yl = y, zl = z;
  const LD scales[] = {xl, yl, zl};
  auto g = [=](LD t) {
    return 1.5L / std::sqrt((t + xl) * (t + yl) * (t + zl));
  };
  Quadrature q = pv_integral(g, -static_cast<LD>(p), scales);
  if (!std::isfinite(q.value)) throw ConvergenceError("oracle_rj_pv failed");
  return q;
}

}  // namespace symell
