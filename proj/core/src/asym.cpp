#include "symell/asym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "symell/carlson.hpp"
#include "symell/detail/carlson_impl.hpp"
#include "symell/errors.hpp"
#include "symell/fp.hpp"

namespace symell {
namespace {

using detail::agm_impl;
using detail::pi_v;
using detail::rc_impl;
using detail::rd_impl;
using detail::rf_impl;
using detail::rg_impl;
using detail::rj_impl;

// How the linear symbol e relates to the symbol as stated.
enum class SymbolMap {
  identity,
  log,        // e = ln(theta)
  inv_one_minus,  // e = 1/(1 - theta/p)
};

// value = base + slope * e, e between e_lo and e_hi.
template <class T>
struct Form {
  T base = 0;
  T slope = 0;
  T e_lo = 0;
  T e_hi = 0;
  SymbolMap map = SymbolMap::identity;
  T map_param = 0;
};

// R_F(x, y, 0) = pi / (2 AGM(sqrt x, sqrt y)).
template <class T>
T rf_complete(T x, T y) {
  return pi_v<T>() / (2 * agm_impl(std::sqrt(x), std::sqrt(y)));
}

template <class T>
T rg_complete(T x, T y) {
  return rg_impl(x, y, T(0));
}

template <class T>
Form<T> log_form(T base, T slope) {
  return {base, slope, T(0), std::log(T(4)), SymbolMap::log, T(0)};
}

template <class T>
Form<T> build(CaseId id, const T* v) {
  using std::log;
  using std::pow;
  using std::sqrt;
  const T pi = pi_v<T>();
  const T x = v[0];
  const T y = v[1];
  const T z = v[2];
  const T p = v[3];

  switch (id) {
    case CaseId::C1: {
      return {pi / (2 * sqrt(y)) - sqrt(x) / y, pi * x / (4 * y * sqrt(y)),
              1 / (1 + sqrt(x / y)), T(1)};
    }
    case CaseId::C2a:
    case CaseId::C2c: {
      const T c = 1 / (2 * sqrt(x));
      const T k = y / (2 * x - y);
      return log_form(c * (log(4 * x / y) + k * log(x / y)), c * k);
    }
    case CaseId::C2b: {
      const T c = 1 / (2 * sqrt(x));
      const T k = 3 * y * y / (4 * x * (2 * x - y));
      const T u = y / (2 * x);
      return log_form(c * ((1 + u) * log(4 * x / y) - u + k * log(x / y)),
                      c * k);
    }
    case CaseId::F1a:
    case CaseId::F1b: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T L = log(8 * z / (a + g));
      const T c = 1 / (2 * sqrt(z));
      return {c * L, c / (2 * z), g / (1 - g / z) * log(2 * z / (a + g)),
              a / (1 - a / (2 * z)) * L};
    }
    case CaseId::F1c:
    case CaseId::F1d: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T L = log(8 * z / (a + g));
      const T c = 1 / (2 * sqrt(z));
      const T rho = std::max(x, y) / z;
      const T lo = log(1 / rho) / (1 - rho);
      const T hi = L / (1 - a / (2 * z));
      if (id == CaseId::F1c) return {c * L, c * a / (2 * z), lo, hi};
      return {c * ((1 + a / (2 * z)) * L - (2 * a - g) / (2 * z)),
              c * 3 * (3 * a * a - g * g) / (16 * z * z), lo, hi};
    }
    case CaseId::F1e:
    case CaseId::F1f: {
      const T kp = x;
      const T k2 = kp * kp;
      const T lk = log(1 / kp);
      if (id == CaseId::F1e) {
        const T s = k2 / (4 - k2);
        return log_form(log(4 / kp) + s * lk, s);
      }
      const T s = 9 * k2 * k2 / (16 * (4 - k2));
      return log_form((1 + k2 / 4) * log(4 / kp) - k2 / 4 + s * lk, s);
    }
    case CaseId::F2a: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      return {rf_complete(x, y) - sqrt(z) / g, pi * z / (4 * g * sqrt(g)),
              1 / (1 + sqrt(z / g)), a / g};
    }
    case CaseId::D1: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T c = 3 / (2 * z * sqrt(z));
      return {c * (log(8 * z / (a + g)) - 2), c / z * log(2 * z / (a + g)),
              g / (1 - g / z), 3 * a / (2 * (1 - a / z))};
    }
    case CaseId::D2a: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T c = 3 / sqrt(x * y * z);
      const T s = sqrt(z / g);
      return {c, -c * pi / 2 * s, 1 - 4 / pi * s, a / g};
    }
    case CaseId::D2b: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T s = sqrt(z / g);
      return {3 / sqrt(x * y * z) - rd_impl(T(0), x, y) - rd_impl(T(0), y, x),
              3 * pi * sqrt(z) / (2 * g * g), 1 / (sqrt(T(2) / 3) + s),
              3 * a / (2 * g * (1 + s))};
    }
    case CaseId::D2c: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T k = 6 * a * sqrt(z) / (g * g * g);
      const T r = a / g;
      return {3 / sqrt(x * y * z) - 6 / (x * y) * rg_complete(x, y) + k,
              -k * pi / 4 * sqrt(z / a), 1 / (1 + sqrt(z / a)),
              r * sqrt(r) * (3 - 1 / (r * r))};
    }
    case CaseId::D3: {
      const T a = (y + z) / 2, g = sqrt(y * z);
      const T c = 3 / sqrt(x);
      return {c / (g + z), -c / (4 * x),
              1 / (1 - g / x) * log(2 * x / (a + g)) - 2 * z / (g + z),
              1 / (1 - a / (2 * x)) * log(8 * x / (a + g))};
    }
    case CaseId::D4: {
      const T a = (y + z) / 2, g = sqrt(y * z);
      const T c = 3 * sqrt(x) / (g * z);
      const T r = a / g;
      return {rd_impl(T(0), y, z) - c, c * pi / 4 * sqrt(x / a),
              1 / (1 + sqrt(x / a)), r * sqrt(r) * (1 + y / a)};
    }
    case CaseId::J1a: {
      const T a = (x + y + z) / 3;
      const T b = sqrt(T(3)) / 2 * sqrt(x * y + x * z + y * z);
      const T c = 3 * pi / (2 * p * sqrt(p));
      const T sb = sqrt(b / p), sa = sqrt(a / p);
      return {3 / p * rf_impl(x, y, z) - c, c, sb / (1 + sb),
              T(1.5) * sa / (1 + sa)};
    }
    case CaseId::J1b: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      return {T(0), 3 / p * (rf_complete(x, y) - pi / (2 * sqrt(p))),
              1 / (1 - g / p), 1 / (1 - a / p), SymbolMap::inv_one_minus, p};
    }
    case CaseId::J2a: {
      const T g = std::cbrt(x * y * z);
      const T h = 3 / (1 / x + 1 / y + 1 / z);
      const T c = 3 / (2 * sqrt(x * y * z));
      return {c * (log(4 * g / p) - 2), c, -log(g / h),
              3 * p / (2 * (g - p)) * log(g / p)};
    }
    case CaseId::J2b: {
      const T g = std::cbrt(x * y * z);
      const T h = 3 / (1 / x + 1 / y + 1 / z);
      const T lam = sqrt(x * y) + sqrt(x * z) + sqrt(y * z);
      const T q = sqrt(x * y * z);
      return {3 / (2 * q) * log(4 * x * y * z / (p * lam * lam)) +
                  2 * rj_impl(x + lam, y + lam, z + lam, lam),
              3 * p / (4 * q), 2 / (g - p) * log(g / p),
              3 / (h - p) * log(h / p)};
    }
    case CaseId::J3: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T c = 3 / (2 * sqrt(z) * p);
      return {c * (log(8 * z / (a + g)) - 2 * rc_impl(T(1), p / z)),
              c / p * log(2 * p / (a + g)), g / (1 - g / p),
              a / (1 - a / p) * (1 + p / (2 * z))};
    }
    case CaseId::J4a: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T rzp = rc_impl(z, p);
      return {3 / g * rzp, -3 / (g - p) * (rc_impl(z, g) - p / g * rzp), T(1),
              a / g};
    }
    case CaseId::J4b: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T c = 3 * pi / (2 * sqrt(x * y * p));
      return {c, -c * sqrt(p) / (sqrt(g) + sqrt(p)), T(1), a / g};
    }
    case CaseId::J4c: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T b = sqrt(3 * p * (p + 2 * z)) / 2;
      const T d = (z + 2 * p) / 3;
      return {3 / g * rc_impl(z, p) - 6 / (x * y) * rg_complete(x, y),
              3 * pi / (2 * x * y), sqrt(b) / (1 + sqrt(b / g)),
              3 * a / (2 * g) * sqrt(d) / (1 + sqrt(d / g))};
    }
    case CaseId::J5: {
      const T a = (y + z) / 2, g = sqrt(y * z);
      const T c = 3 * sqrt(x) / (g * p);
      return {rj_impl(T(0), y, z, p) - c, c * pi / 4 * sqrt(x / g),
              sqrt(g / a) / (1 + sqrt(x / a)), a / g + g / p};
    }
    case CaseId::J6a: {
      const T a = (y + z) / 2, g = sqrt(y * z);
      const T r = rc_impl((g + p) * (g + p), 2 * (a + g) * p);
      const T c = 3 / sqrt(x);
      return {c * r, -c / 4,
              1 / (x - g) * log(2 * x / (a + g)) - 2 * p / x * r,
              1 / (x - a / 2) * log(8 * x / (a + g))};
    }
    case CaseId::J6complete: {
      const T r = rc_impl(p, z);
      return {3 / sqrt(x * p) * r, -3 / (4 * x * sqrt(x)),
              log(4 * x / z) - 2 * sqrt(p) * r,
              1 / (1 - z / (4 * x)) * log(16 * x / z)};
    }
    case CaseId::G1a: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      const T l = log(2 * z / (a + g));
      return {sqrt(z) / 2, 1 / (4 * sqrt(z)),
              (a + g) / 2 * l + 2 * g - 4 * a / 3,
              (3 * a - g) * l + 2 * g - a / 3};
    }
    case CaseId::G1b: {
      const T sz = sqrt(z);
      return {sz / 2 + y / (8 * sz) * (log(16 * z / y) - 1),
              y * y / (16 * z * sz), T(0.75) * log(z / y),
              1 / (1 - y / z) * (log(16 * z / y) - T(13) / 6)};
    }
    case CaseId::G1c: {
      const T kp = x;
      const T k2 = kp * kp;
      const T k = sqrt((1 - kp) * (1 + kp));
      return {1 + k2 / 2 * (log(4 / kp) - T(0.5)), k2 * k2 / 2,
              T(0.375) * log(1 / kp),
              1 / (k * (1 + k)) * (log(4 / kp) - T(13) / 12)};
    }
    case CaseId::G2: {
      const T a = (x + y) / 2, g = sqrt(x * y);
      return {rg_complete(x, y), pi * z / 8,
              1 / sqrt(a) * (1 - 4 / pi * sqrt(z / a)),
              sqrt(sqrt(2 / (a * g + g * g)))};
    }
  }
  return {};
}

template <class T>
T to_stated(SymbolMap m, T e, T param) {
  switch (m) {
    case SymbolMap::identity:
      return e;
    case SymbolMap::log:
      return std::exp(e);
    case SymbolMap::inv_one_minus:
      return param * (1 - 1 / e);
  }
  return e;
}

// d(stated symbol)/de, for propagating uncertainty.
template <class T>
T stated_derivative(SymbolMap m, T e, T param) {
  switch (m) {
    case SymbolMap::identity:
      return 1;
    case SymbolMap::log:
      return std::exp(e);
    case SymbolMap::inv_one_minus:
      return param / (e * e);
  }
  return 1;
}

struct Info {
  CaseInfo info;
  std::string_view name;
};

const std::vector<Info>& table() {
  // clang-format off
  static const std::vector<Info> t = [] {
    std::vector<Info> v;
    auto add = [&](CaseId id, std::string_view name, Family f, int arity,
                   std::string_view sym, int cost, bool upper_only,
                   std::vector<int> small, std::vector<int> large,
                   std::optional<int> zero, bool lo_s, bool hi_s) {
      v.push_back({CaseInfo{id, f, arity, sym, cost, upper_only,
                            std::move(small), std::move(large), zero, lo_s,
                            hi_s},
                   name});
    };
    using F = Family;
    add(CaseId::C1, "C1", F::RC, 2, "theta", 1, false, {0}, {1}, {}, false, false);
    add(CaseId::C2a, "C2a", F::RC, 2, "theta1", 1, false, {1}, {0}, {}, true, true);
    add(CaseId::C2b, "C2b", F::RC, 2, "theta2", 1, false, {1}, {0}, {}, true, true);
    add(CaseId::C2c, "C2c", F::RC, 2, "theta1", 1, true, {1}, {0}, {}, true, true);
    add(CaseId::F1a, "F1a", F::RF, 3, "r", 1, false, {0, 1}, {2}, {}, true, true);
    add(CaseId::F1b, "F1b", F::RF, 3, "r", 1, true, {0, 1}, {2}, {}, true, true);
    add(CaseId::F1c, "F1c", F::RF, 3, "r1", 1, false, {0, 1}, {2}, {}, true, true);
    add(CaseId::F1d, "F1d", F::RF, 3, "r2", 1, false, {0, 1}, {2}, {}, true, true);
    add(CaseId::F1e, "F1e", F::K, 1, "theta1", 1, false, {0}, {}, {}, true, true);
    add(CaseId::F1f, "F1f", F::K, 1, "theta2", 1, false, {0}, {}, {}, true, true);
    add(CaseId::F2a, "F2a", F::RF, 3, "theta", 2, false, {2}, {0, 1}, {}, true, true);
    add(CaseId::D1, "D1", F::RD, 3, "r", 1, false, {0, 1}, {2}, {}, true, true);
    add(CaseId::D2a, "D2a", F::RD, 3, "theta", 1, false, {2}, {0, 1}, {}, true, true);
    add(CaseId::D2b, "D2b", F::RD, 3, "theta", 2, false, {2}, {0, 1}, {}, true, true);
    add(CaseId::D2c, "D2c", F::RD, 3, "theta", 2, false, {2}, {0, 1}, {}, true, true);
    add(CaseId::D3, "D3", F::RD, 3, "r", 1, false, {1, 2}, {0}, {}, true, true);
    add(CaseId::D4, "D4", F::RD, 3, "theta", 2, false, {0}, {1, 2}, {}, true, true);
    add(CaseId::J1a, "J1a", F::RJ, 4, "r", 2, false, {0, 1, 2}, {3}, {}, true, true);
    add(CaseId::J1b, "J1b", F::RJ, 4, "theta", 2, false, {0, 1}, {3}, 2, false, false);
    add(CaseId::J2a, "J2a", F::RJ, 4, "r", 1, false, {3}, {0, 1, 2}, {}, true, true);
    add(CaseId::J2b, "J2b", F::RJ, 4, "r", 2, false, {3}, {0, 1, 2}, {}, true, true);
    add(CaseId::J3, "J3", F::RJ, 4, "r", 1, false, {0, 1}, {2, 3}, {}, true, true);
    add(CaseId::J4a, "J4a", F::RJ, 4, "theta", 1, false, {2, 3}, {0, 1}, {}, false, false);
    add(CaseId::J4b, "J4b", F::RJ, 4, "theta", 1, false, {3}, {0, 1}, 2, false, false);
    add(CaseId::J4c, "J4c", F::RJ, 4, "theta", 2, false, {2, 3}, {0, 1}, {}, true, true);
    add(CaseId::J5, "J5", F::RJ, 4, "theta", 2, false, {0}, {1, 2, 3}, {}, true, true);
    add(CaseId::J6a, "J6a", F::RJ, 4, "r", 1, false, {1, 2, 3}, {0}, {}, true, true);
    add(CaseId::J6complete, "J6complete", F::RJ, 4, "r", 1, false, {2, 3}, {0}, 1, true, true);
    add(CaseId::G1a, "G1a", F::RG, 3, "r", 1, false, {0, 1}, {2}, {}, true, true);
    add(CaseId::G1b, "G1b", F::RG, 3, "s", 1, false, {1}, {2}, 0, true, true);
    add(CaseId::G1c, "G1c", F::E, 1, "r", 1, false, {0}, {}, {}, true, true);
    add(CaseId::G2, "G2", F::RG, 3, "theta", 2, false, {2}, {0, 1}, {}, true, true);
    return v;
  }();
  // clang-format on
  return t;
}

const Info& entry(CaseId id) { return table()[static_cast<size_t>(id)]; }

[[noreturn]] void regime_fail(CaseId id, const std::string& what) {
  throw RegimeError(std::string(to_string(id)) + ": requires " + what);
}

[[noreturn]] void domain_fail(CaseId id, const std::string& what) {
  throw DomainError(std::string(to_string(id)) + ": " + what);
}

// Validates arguments; DomainError for the function's own domain, RegimeError
// for the case's extra conditions.
void check(CaseId id, std::span<const double> v) {
  const CaseInfo& ci = entry(id).info;
  if (static_cast<int>(v.size()) != ci.arity)
    domain_fail(id, "expects " + std::to_string(ci.arity) + " arguments");
  for (double a : v)
    if (!std::isfinite(a)) domain_fail(id, "arguments must be finite");

  switch (ci.family) {
    case Family::RC:
      if (v[0] < 0 || v[1] <= 0) domain_fail(id, "needs x >= 0, y > 0");
      break;
    case Family::RF:
    case Family::RG:
    case Family::RD: {
      (void)Sym3Args(v[0], v[1], v[2]);
      if (ci.family == Family::RD && v[2] <= 0) domain_fail(id, "needs z > 0");
      break;
    }
    case Family::RJ:
      (void)Sym3Args(v[0], v[1], v[2]);
      if (v[3] <= 0)
        domain_fail(id, "needs p > 0 (principal values are not approximated)");
      break;
    case Family::K:
    case Family::E:
      if (!(v[0] > 0 && v[0] < 1)) domain_fail(id, "needs 0 < k' < 1");
      break;
  }

  if (ci.zero_slot && v[*ci.zero_slot] != 0) {
    static constexpr const char* names[] = {"x", "y", "z", "p"};
    regime_fail(id, std::string(names[*ci.zero_slot]) + " = 0");
  }

  const double x = v[0];
  const double y = ci.arity > 1 ? v[1] : 0;
  const double z = ci.arity > 2 ? v[2] : 0;
  const double p = ci.arity > 3 ? v[3] : 0;
  const double axy = (x + y) / 2, gxy = std::sqrt(x * y);
  const double ayz = (y + z) / 2, gyz = std::sqrt(y * z);

  switch (id) {
    case CaseId::C1:
    case CaseId::F1e:
    case CaseId::F1f:
    case CaseId::G1c:
      break;
    case CaseId::C2a:
    case CaseId::C2b:
    case CaseId::C2c:
      if (!(y < 2 * x)) regime_fail(id, "0 < y < 2x");
      break;
    case CaseId::F1a:
    case CaseId::F1b:
    case CaseId::F1c:
    case CaseId::F1d:
      if (!(axy < 2 * z && gxy < z)) regime_fail(id, "a < 2z and g < z");
      if ((id == CaseId::F1c || id == CaseId::F1d) &&
          !(std::max(x, y) < z))
        regime_fail(id, "max(x, y) < z");
      break;
    case CaseId::F2a:
      if (!(z < gxy)) regime_fail(id, "z < g");
      break;
    case CaseId::D1:
      if (!(gxy < z && axy < z)) regime_fail(id, "g < z and a < z");
      break;
    case CaseId::D2a:
    case CaseId::D2b:
    case CaseId::D2c:
      if (!(z < gxy)) regime_fail(id, "z < g");
      break;
    case CaseId::D3:
      if (!(gyz < x && ayz < 2 * x)) regime_fail(id, "g < x and a < 2x");
      break;
    case CaseId::D4:
      if (!(y > 0 && z > 0)) regime_fail(id, "y, z > 0");
      if (!(x < ayz)) regime_fail(id, "x < a");
      break;
    case CaseId::J1a: {
      const double a = (x + y + z) / 3;
      const double b = std::sqrt(3.0) / 2 * std::sqrt(x * y + x * z + y * z);
      if (!(a < p && b < p)) regime_fail(id, "a < p and b < p");
      break;
    }
    case CaseId::J1b:
      if (!(axy < p)) regime_fail(id, "a < p");
      break;
    case CaseId::J2a:
    case CaseId::J2b: {
      const double h = (x > 0 && y > 0 && z > 0)
                           ? 3 / (1 / x + 1 / y + 1 / z)
                           : 0.0;
      if (!(p < h)) regime_fail(id, "p < h");
      break;
    }
    case CaseId::J3:
      if (!(z > 0)) regime_fail(id, "z > 0");
      if (!(axy < p && gxy < p)) regime_fail(id, "a < p and g < p");
      break;
    case CaseId::J4a:
    case CaseId::J4c:
      if (!(z < gxy && p < gxy)) regime_fail(id, "z < g and p < g");
      break;
    case CaseId::J4b:
      if (!(p < gxy)) regime_fail(id, "p < g");
      break;
    case CaseId::J5:
      if (!(y > 0 && z > 0)) regime_fail(id, "y, z > 0");
      if (!(x < ayz)) regime_fail(id, "x < a");
      break;
    case CaseId::J6a:
      if (!(gyz < x && ayz < 2 * x)) regime_fail(id, "g < x and a < 2x");
      break;
    case CaseId::J6complete:
      if (!(z > 0 && z < 4 * x)) regime_fail(id, "0 < z < 4x");
      break;
    case CaseId::G1a:
      if (!(z > 0)) regime_fail(id, "z > 0");
      break;
    case CaseId::G1b:
      if (!(y > 0 && y < z)) regime_fail(id, "0 < y < z");
      break;
    case CaseId::G2:
      if (!(z < gxy)) regime_fail(id, "z < g");
      if (!(1 - 4 / pi_v<double>() * std::sqrt(z / axy) > 0))
        regime_fail(id, "1 - (4/pi) sqrt(z/a) > 0");
      break;
  }
}

bool g1a_upper_applies(std::span<const double> v) {
  return 5 * (v[0] + v[1]) / 2 < v[2];
}

std::pair<double, double> stated_bracket(CaseId id, const Form<double>& f) {
  if (f.map == SymbolMap::log) return {1.0, 4.0};
  if (f.map == SymbolMap::inv_one_minus) {
    // theta in [g, a]
    const double p = f.map_param;
    return {p * (1 - 1 / f.e_lo), p * (1 - 1 / f.e_hi)};
  }
  (void)id;
  return {f.e_lo, f.e_hi};
}

Enclosure make_enclosure(CaseId id, std::span<const double> v) {
  check(id, v);
  const CaseInfo& ci = entry(id).info;
  std::array<double, 4> a{};
  std::copy(v.begin(), v.end(), a.begin());
  const Form<double> f = build<double>(id, a.data());

  const double v1 = f.base + f.slope * f.e_lo;
  const double v2 = f.base + f.slope * f.e_hi;
  Enclosure e;
  e.case_id = id;
  e.lo = fp::widen_down(std::min(v1, v2), kWidenUlps);
  e.hi = fp::widen_up(std::max(v1, v2), kWidenUlps);
  e.estimate = f.base + f.slope * (f.e_lo + f.e_hi) / 2;
  e.estimate = std::clamp(e.estimate, e.lo, e.hi);
  e.lo_strict = ci.lo_strict;
  e.hi_strict = ci.hi_strict;
  e.bracket_width = std::fabs(f.slope) * std::fabs(f.e_hi - f.e_lo);
  std::tie(e.symbol_lo, e.symbol_hi) = stated_bracket(id, f);
  e.regime.ratio = regime_ratio(id, v);

  if (id == CaseId::G1a && !g1a_upper_applies(v)) {
    // Upper endpoint from the reference evaluator, widened by its certified
    // accuracy; the lower endpoint is unconditional.
    e.regime.stated_upper = false;
    const double r = rg(v[0], v[1], v[2]);
    e.lo = fp::widen_down(f.base + f.slope * f.e_lo, kWidenUlps);
    e.hi = fp::widen_up(r * (1 + 2 * kReferenceRelErr), kWidenUlps);
    e.estimate = std::clamp(r, e.lo, e.hi);
    e.bracket_width = e.hi - e.lo;
  }
  return e;
}

}  // namespace

std::string_view to_string(CaseId id) { return entry(id).name; }

std::optional<CaseId> case_from_string(std::string_view name) {
  for (const Info& i : table())
    if (i.name == name) return i.info.id;
  return std::nullopt;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::RC: return "RC";
    case Family::RF: return "RF";
    case Family::RD: return "RD";
    case Family::RJ: return "RJ";
    case Family::RG: return "RG";
    case Family::K: return "K";
    case Family::E: return "E";
  }
  return "?";
}

const CaseInfo& case_info(CaseId id) { return entry(id).info; }

double Enclosure::rel_width() const {
  return estimate == 0 ? std::numeric_limits<double>::infinity()
                       : bracket_width / std::fabs(estimate);
}

double Enclosure::rel_half_width() const {
  return estimate == 0 ? std::numeric_limits<double>::infinity()
                       : (hi - lo) / (2 * std::fabs(estimate));
}

double regime_ratio(CaseId id, std::span<const double> v) {
  const CaseInfo& ci = entry(id).info;
  if (ci.family == Family::K || ci.family == Family::E) return v[0] * v[0];
  double small = 0;
  double large = std::numeric_limits<double>::infinity();
  for (int i : ci.small) small = std::max(small, v[i]);
  for (int i : ci.large) large = std::min(large, v[i]);
  return small / large;
}

Enclosure approximate(CaseId id, std::span<const double> args) {
  return make_enclosure(id, args);
}

namespace {
void require_family(CaseId id, std::initializer_list<Family> fams,
                    const char* op) {
  const Family f = case_info(id).family;
  for (Family g : fams)
    if (f == g) return;
  throw DomainError(std::string(op) + ": case " + std::string(to_string(id)) +
                    " does not belong here");
}
}  // namespace

Enclosure approx_rc(double x, double y, CaseId id) {
  require_family(id, {Family::RC}, "approx_rc");
  const double a[] = {x, y};
  return make_enclosure(id, a);
}

Enclosure approx_rf(double x, double y, double z, CaseId id) {
  require_family(id, {Family::RF}, "approx_rf");
  const double a[] = {x, y, z};
  return make_enclosure(id, a);
}

Enclosure approx_rd(double x, double y, double z, CaseId id) {
  require_family(id, {Family::RD}, "approx_rd");
  const double a[] = {x, y, z};
  return make_enclosure(id, a);
}

Enclosure approx_rj(double x, double y, double z, double p, CaseId id) {
  require_family(id, {Family::RJ}, "approx_rj");
  const double a[] = {x, y, z, p};
  return make_enclosure(id, a);
}

Enclosure approx_rg(double x, double y, double z, CaseId id) {
  require_family(id, {Family::RG}, "approx_rg");
  const double a[] = {x, y, z};
  return make_enclosure(id, a);
}

Enclosure approx_k(double kprime, CaseId id) {
  require_family(id, {Family::K}, "approx_k");
  const double a[] = {kprime};
  return make_enclosure(id, a);
}

Enclosure approx_e(double kprime) {
  const double a[] = {kprime};
  return make_enclosure(CaseId::G1c, a);
}

RecoveredSymbol theta_recover_ld(CaseId id, std::span<const double> args,
                                 long double true_value,
                                 long double true_abs_error) {
  check(id, args);
  using LD = long double;
  std::array<LD, 4> a{};
  std::copy(args.begin(), args.end(), a.begin());
  const Form<LD> f = build<LD>(id, a.data());

  RecoveredSymbol r;
  r.bracket_lo = to_stated(f.map, f.e_lo, f.map_param);
  r.bracket_hi = to_stated(f.map, f.e_hi, f.map_param);
  if (f.map == SymbolMap::log) {
    r.bracket_lo = 1;
    r.bracket_hi = 4;
  }
  if (id == CaseId::J1b) {
    r.bracket_lo = std::sqrt(a[0] * a[1]);
    r.bracket_hi = (a[0] + a[1]) / 2;
  }
  r.collapsed = r.bracket_lo == r.bracket_hi || f.slope == 0;

  if (r.collapsed) {
    // Equality case: the symbol is pinned at the endpoint and the formula is
    // exact, so there is nothing to solve for.
    r.symbol = r.bracket_lo;
    return r;
  }
  const LD eps = std::numeric_limits<LD>::epsilon();
  const LD e = (true_value - f.base) / f.slope;
  r.symbol = to_stated(f.map, e, f.map_param);
  const LD de = (std::fabs(true_abs_error) +
                 64 * eps * (std::fabs(true_value) + std::fabs(f.base))) /
                std::fabs(f.slope);
  r.uncertainty = std::fabs(stated_derivative(f.map, e, f.map_param)) * de +
                  64 * eps * std::fabs(r.symbol);
  return r;
}

double theta_recover(CaseId id, std::span<const double> args,
                     double true_value) {
  return static_cast<double>(theta_recover_ld(id, args, true_value).symbol);
}

}  // namespace symell
