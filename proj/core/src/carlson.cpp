#include "symell/carlson.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symell/detail/carlson_impl.hpp"
#include "symell/errors.hpp"

namespace symell {

namespace {

void require(bool ok, const char* fn, const char* what) {
  if (!ok) throw DomainError(std::string(fn) + ": " + what);
}

// The double entry points run the duplication in long double and round
// once, which keeps them within about an ulp of the true value.
using LD = long double;

double round_ld(LD v) { return static_cast<double>(v); }

bool finite_all(std::initializer_list<double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double d) { return std::isfinite(d); });
}

}  // namespace

Sym3Args::Sym3Args(double x, double y, double z) : v_{x, y, z} {
  require(finite_all({x, y, z}), "Sym3Args", "arguments must be finite");
  require(x >= 0 && y >= 0 && z >= 0, "Sym3Args",
          "arguments must be nonnegative");
  require(zero_count() <= 1, "Sym3Args", "at most one argument may be zero");
}

std::array<double, 3> Sym3Args::sorted() const {
  auto s = v_;
  std::sort(s.begin(), s.end());
  return s;
}

int Sym3Args::zero_count() const {
  return static_cast<int>(std::count(v_.begin(), v_.end(), 0.0));
}

Sym4Args::Sym4Args(double x, double y, double z, double p)
    : xyz_(x, y, z), p_(p) {
  require(std::isfinite(p), "Sym4Args", "p must be finite");
  require(p != 0, "Sym4Args", "p must be nonzero");
}

MeanStats mean_stats(double x, double y) {
  MeanStats m;
  m.a = (x + y) / 2;
  m.g = std::sqrt(x * y);
  m.h = (x == 0 || y == 0) ? 0.0 : 2 * x * y / (x + y);
  m.b = m.g;
  m.lambda = m.g;
  return m;
}

MeanStats mean_stats(double x, double y, double z) {
  MeanStats m;
  m.a = (x + y + z) / 3;
  m.g = std::cbrt(x * y * z);
  m.h = (x == 0 || y == 0 || z == 0) ? 0.0 : 3 / (1 / x + 1 / y + 1 / z);
  m.b = std::sqrt((x * y + x * z + y * z) / 3);
  m.lambda = std::sqrt(x * y) + std::sqrt(x * z) + std::sqrt(y * z);
  return m;
}

MeanStats mean_stats(double x, double y, double z, double p) {
  MeanStats m = mean_stats(x, y, z);
  m.d = (z + 2 * p) / 3;
  return m;
}

double rc(double x, double y) {
  require(finite_all({x, y}), "rc", "arguments must be finite");
  require(x >= 0, "rc", "x must be nonnegative");
  require(y > 0, "rc", "y must be positive (use rc_pv for y < 0)");
  return round_ld(detail::rc_impl<LD>(x, y));
}

double rc_pv(double x, double y_abs) {
  require(finite_all({x, y_abs}), "rc_pv", "arguments must be finite");
  require(x >= 0, "rc_pv", "x must be nonnegative");
  require(y_abs > 0, "rc_pv", "y_abs must be positive");
  return round_ld(detail::rc_pv_impl<LD>(x, y_abs));
}

double rf(const Sym3Args& args) {
  const auto s = args.sorted();
  return round_ld(detail::rf_impl<LD>(s[0], s[1], s[2]));
}

double rf(double x, double y, double z) { return rf(Sym3Args(x, y, z)); }

double rd(double x, double y, double z) {
  require(finite_all({x, y, z}), "rd", "arguments must be finite");
  require(x >= 0 && y >= 0, "rd", "x and y must be nonnegative");
  require(x + y > 0, "rd", "x and y must not both be zero");
  require(z > 0, "rd", "z must be positive");
  return round_ld(detail::rd_impl<LD>(std::min(x, y), std::max(x, y), z));
}

double rj(const Sym4Args& args) {
  require(args.p() > 0, "rj", "p must be positive (use rj_pv for p < 0)");
  const auto s = args.xyz().sorted();
  return round_ld(detail::rj_impl<LD>(s[0], s[1], s[2], args.p()));
}

double rj(double x, double y, double z, double p) {
  return rj(Sym4Args(x, y, z, p));
}

PvValue rj_pv_conditioned(double x, double y, double z, double p) {
  require(finite_all({x, y, z, p}), "rj_pv", "arguments must be finite");
  require(x > 0 && y > 0 && z > 0, "rj_pv", "x, y, z must be positive");
  require(p < 0, "rj_pv", "p must be negative");
  const auto t = detail::rj_pv_impl<LD>(x, y, z, -p);
  const double cond =
      t.value == 0 ? HUGE_VAL : round_ld(t.magnitude / std::fabs(t.value));
  return {round_ld(t.value), cond};
}

double rj_pv(double x, double y, double z, double p) {
  return rj_pv_conditioned(x, y, z, p).value;
}

double rg(double x, double y, double z) {
  require(finite_all({x, y, z}), "rg", "arguments must be finite");
  require(x >= 0 && y >= 0 && z >= 0, "rg", "arguments must be nonnegative");
  require(x + y + z > 0, "rg", "arguments must not all be zero");
  return round_ld(detail::rg_impl<LD>(x, y, z));
}

double r_minus1(double x, double y, double z) {
  require(finite_all({x, y, z}), "r_minus1", "arguments must be finite");
  require(x > 0 && y > 0 && z > 0, "r_minus1", "arguments must be positive");
  return round_ld(detail::r_minus1_impl<LD>(x, y, z));
}

double agm(double u, double v) {
  require(finite_all({u, v}), "agm", "arguments must be finite");
  require(u > 0 && v > 0, "agm", "arguments must be positive");
  return round_ld(detail::agm_impl<LD>(u, v));
}

double legendre_k(double k) {
  require(std::isfinite(k) && k >= 0 && k < 1, "legendre_k",
          "k must lie in [0, 1)");
  return round_ld(detail::rf_impl<LD>(0, (1 - LD(k)) * (1 + LD(k)), 1));
}

double legendre_e(double k) {
  require(std::isfinite(k) && k >= 0 && k <= 1, "legendre_e",
          "k must lie in [0, 1]");
  return round_ld(2 * detail::rg_impl<LD>(0, (1 - LD(k)) * (1 + LD(k)), 1));
}

double legendre_k_comp(double kprime) {
  require(std::isfinite(kprime) && kprime > 0 && kprime <= 1,
          "legendre_k_comp", "k' must lie in (0, 1]");
  return round_ld(detail::rf_impl<LD>(0, LD(kprime) * kprime, 1));
}

double legendre_e_comp(double kprime) {
  require(std::isfinite(kprime) && kprime > 0 && kprime <= 1,
          "legendre_e_comp", "k' must lie in (0, 1]");
  return round_ld(2 * detail::rg_impl<LD>(0, LD(kprime) * kprime, 1));
}

}  // namespace symell
