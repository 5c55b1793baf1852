#include "symell/bounds.hpp"

#include <cmath>
#include <string>

#include "symell/errors.hpp"

namespace symell {
namespace {

struct Entry {
  IneqInfo info;
  std::string_view name;
};

// clang-format off
constexpr Entry kTable[] = {
    {{IneqId::A1, 2, true, true, false, false}, "A1"},
    {{IneqId::A2, 2, true, true, false, false}, "A2"},
    {{IneqId::A3, 2, true, true, true, false}, "A3"},
    {{IneqId::A4, 2, true, true, true, false}, "A4"},
    {{IneqId::A5, 3, false, false, true, false}, "A5"},
    {{IneqId::A6, 3, false, false, false, false}, "A6"},
    {{IneqId::A6a, 3, false, false, true, false}, "A6a"},
    {{IneqId::A7, 3, true, true, true, false}, "A7"},
    {{IneqId::A8, 4, true, true, true, false}, "A8"},
    {{IneqId::A9, 4, true, true, false, false}, "A9"},
    {{IneqId::A10, 4, true, true, false, false}, "A10"},
    {{IneqId::AX, 3, false, false, false, true}, "AX"},
    {{IneqId::AY, 4, true, false, false, true}, "AY"},
    {{IneqId::AZ, 4, false, false, false, true}, "AZ"},
};
// clang-format on

const Entry& entry(IneqId id) { return kTable[static_cast<int>(id)]; }

void check(IneqId id, std::span<const double> v) {
  const IneqInfo& info = entry(id).info;
  const std::string name(entry(id).name);
  if (static_cast<int>(v.size()) != info.arity)
    throw DomainError(name + ": expects " + std::to_string(info.arity) +
                      " arguments");
  for (size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]))
      throw DomainError(name + ": arguments must be finite");
    const bool ok = (i == 0 && info.t_may_vanish) ? v[i] >= 0 : v[i] > 0;
    if (!ok) throw DomainError(name + ": arguments must be positive");
  }
}

// Expressions are formed in long double and rounded once, which keeps the
// three values of a bracket within an ulp or so of the exact ones.
using R = long double;

R pow32(R v) { return v * std::sqrt(v); }

// sqrt((t+x)(t+y)) - sqrt(xy), rationalized.
R s_minus_g(R t, R x, R y, R s, R g) {
  return t * (t + x + y) / (s + g);
}

// (t+x)(t+y)(t+z) - t^3 and - xyz, expanded so no cancellation occurs.
R p_minus_t3(R t, R x, R y, R z) {
  return t * t * (x + y + z) + t * (x * y + x * z + y * z) + x * y * z;
}
R p_minus_xyz(R t, R x, R y, R z) {
  return t * (t * t + t * (x + y + z) + (x * y + x * z + y * z));
}

// 1/sqrt(t) - 1/sqrt(t+x)
R inv_sqrt_diff(R t, R x) {
  const R st = std::sqrt(t), su = std::sqrt(t + x);
  return x / (st * su * (su + st));
}

// t^{-3/2} - (t+x)^{-3/2} as (a - b)(a^2 + ab + b^2).
R inv_pow32_diff(R t, R x) {
  const R a = 1 / std::sqrt(t), b = 1 / std::sqrt(t + x);
  return inv_sqrt_diff(t, x) * (a * a + a * b + b * b);
}

R theta_a3(R t, R x) {
  const R w = std::sqrt(1 + x / t);
  return 1 + 1 / (w * (w + 1));
}

}  // namespace

std::string_view to_string(IneqId id) { return entry(id).name; }

std::optional<IneqId> ineq_from_string(std::string_view name) {
  for (const Entry& e : kTable)
    if (e.name == name) return e.info.id;
  return std::nullopt;
}

const IneqInfo& ineq_info(IneqId id) { return entry(id).info; }

bool equality_configuration(IneqId id, std::span<const double> v) {
  switch (id) {
    case IneqId::A5:
    case IneqId::A6:
    case IneqId::A6a:
    case IneqId::AX:
      return v[1] == v[2];
    case IneqId::AY:
    case IneqId::AZ:
      return v[1] == v[2] && v[2] == v[3];
    default:
      return false;
  }
}

namespace {

struct Triple {
  R lo, mid, hi;
};

Triple bracket_ld(IneqId id, R t, R x, R y, R z) {
  const R a2 = (x + y) / 2;
  const R g2 = std::sqrt(x * y);
  const R s = std::sqrt((t + x) * (t + y));

  switch (id) {
    case IneqId::A1:
      return {x / (2 * std::sqrt(t) * (t + x)), inv_sqrt_diff(t, x),
              x / (2 * t * std::sqrt(t + x))};
    case IneqId::A2:
      return {t / (2 * std::sqrt(x) * (t + x)), inv_sqrt_diff(x, t),
              t / (2 * x * std::sqrt(t + x))};
    case IneqId::A3: {
      const R base = x / (pow32(t) * (t + x));
      return {base, inv_pow32_diff(t, x), R(1.5) * base};
    }
    case IneqId::A4: {
      const R base = t / (pow32(x) * (t + x));
      return {base, inv_pow32_diff(x, t), R(1.5) * base};
    }
    case IneqId::A5: {
      const R mid = (2 * a2 * t + g2 * g2) / (s + t) / (t * s);
      return {g2 / (t * s), mid, a2 / (t * s)};
    }
    case IneqId::A6: {
      const R mid = s_minus_g(t, x, y, s, g2) / (g2 * s);
      return {t / (g2 * (t + g2)), mid, a2 * t / (g2 * g2 * s)};
    }
    case IneqId::A6a: {
      const R base = t / (g2 * (t + g2));
      const R mid = s_minus_g(t, x, y, s, g2) / (g2 * s);
      return {base, mid, a2 / g2 * base};
    }
    case IneqId::A7: {
      const R sx = std::sqrt(x), su = std::sqrt(t + x);
      const R num = t * (t + y) / (su + sx) + sx * t;
      const R mid = num / (sx * y * su * (t + y));
      const R base = t / (sx * y * (t + y));
      return {base, mid, (1 + y / (2 * x)) * base};
    }
    case IneqId::A8: {
      const R num = s_minus_g(t, x, y, s, g2) * (t + z) + g2 * t;
      const R mid = num / (g2 * z * s * (t + z));
      const R base = t / (g2 * z * s);
      return {base, mid, (a2 / g2 + g2 / z) * base};
    }
    case IneqId::A9: {
      const R a = (x + y + z) / 3;
      const R b = std::sqrt(3 * (x * y + x * z + y * z)) / 2;
      const R sp = std::sqrt((t + x) * (t + y) * (t + z));
      const R t32 = pow32(t);
      const R mid = p_minus_t3(t, x, y, z) / (sp + t32) / (t32 * sp);
      return {b / (t32 * (t + b)), mid, 3 * a / (2 * t32 * (t + a))};
    }
    case IneqId::A10: {
      const R g = std::cbrt(x * y * z);
      const R h = 3 / (1 / x + 1 / y + 1 / z);
      const R sp = std::sqrt((t + x) * (t + y) * (t + z));
      const R sq = std::sqrt(x * y * z);
      const R mid = p_minus_xyz(t, x, y, z) / (sp + sq) / (sq * sp);
      return {t / (pow32(g) * (t + g)), mid, 3 * t / (2 * pow32(g) * (t + h))};
    }
    case IneqId::AX:
      return {t + g2, s, t + a2};
    case IneqId::AY: {
      const R a = (x + y + z) / 3;
      const R b = std::sqrt(3 * (x * y + x * z + y * z)) / 2;
      return {std::sqrt(t) * (t + b),
              std::sqrt((t + x) * (t + y) * (t + z)), pow32(t + a)};
    }
    case IneqId::AZ: {
      const R g = std::cbrt(x * y * z);
      const R h = 3 / (1 / x + 1 / y + 1 / z);
      // (g/h)^{3/2} (t+h)^{3/2} with g^{3/2} = sqrt(xyz), which avoids the
      // cube root on this side.
      const R r = 1 + t / h;
      return {pow32(t + g), std::sqrt((t + x) * (t + y) * (t + z)),
              std::sqrt(x * y * z) * (r * std::sqrt(r))};
    }
  }
  return {};
}

}  // namespace

Bracket bracket(IneqId id, std::span<const double> v) {
  check(id, v);
  const Triple r = bracket_ld(id, v[0], v[1], v.size() > 2 ? v[2] : 0,
                              v.size() > 3 ? v[3] : 0);
  return {static_cast<double>(r.lo), static_cast<double>(r.mid),
          static_cast<double>(r.hi)};
}

double theta_of(IneqId id, std::span<const double> v) {
  check(id, v);
  if (!entry(id).info.has_theta)
    throw DomainError(std::string(entry(id).name) +
                      ": not an equality form");
  const double t = v[0];
  const double x = v[1];
  const double y = v.size() > 2 ? v[2] : 0;
  const double z = v.size() > 3 ? v[3] : 0;
  const double a = (x + y) / 2;
  const double g = std::sqrt(x * y);
  const double s = std::sqrt((t + x) * (t + y));

  switch (id) {
    case IneqId::A3:
      return theta_a3(t, x);
    case IneqId::A4:
      return theta_a3(x, t);
    case IneqId::A5:
      if (x == y) return x;
      return (2 * a * t + g * g) / (s + t);
    case IneqId::A6a:
      if (x == y) return 1;
      return (t + g) * (t + 2 * a) / (s * (s + g));
    case IneqId::A7: {
      const double su = std::sqrt(t + x);
      return 1 + y / (su * (su + std::sqrt(x)));
    }
    case IneqId::A8:
      return (t + 2 * a) / (s + g) + g / (t + z);
    default:
      break;
  }
  return 0;
}

std::pair<double, double> theta_range(IneqId id, std::span<const double> v) {
  check(id, v);
  const double x = v[1];
  const double y = v.size() > 2 ? v[2] : 0;
  const double a = (x + y) / 2;
  const double g = std::sqrt(x * y);
  switch (id) {
    case IneqId::A3:
    case IneqId::A4:
      return {1.0, 1.5};
    case IneqId::A5:
      return {g, a};
    case IneqId::A6a:
      return {1.0, a / g};
    case IneqId::A7:
      return {1.0, 1 + y / (2 * x)};
    case IneqId::A8:
      return {1.0, a / g + g / v[3]};
    default:
      throw DomainError(std::string(entry(id).name) +
                        ": not an equality form");
  }
}

}  // namespace symell
