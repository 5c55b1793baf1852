#pragma once

// Duplication-theorem evaluators for the symmetric integrals, written once
// for any floating type. The double instantiations back the public API in
// carlson.hpp; the long double ones are used where the verification code needs
// a few more digits than the quantity being checked.
//
// Duplication followed by the Taylor tail through degree 7 in the
// normalized deviations. No argument validation happens here.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace symell::detail {

template <class T>
struct Tol {
  static T base() { return std::numeric_limits<T>::epsilon() * T(0.01); }
  static T rf() { return std::pow(3 * base(), T(1) / 8); }
  static T rd() { return std::pow(T(0.2) * base(), T(1) / 8); }
};

template <class T>
T pi_v() {
  return std::numbers::pi_v<T>;
}

template <class T>
void sort3(T& x, T& y, T& z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
}

/// R_C(x, y), x >= 0, y > 0.
template <class T>
T rc_impl(T x, T y) {
  using std::sqrt;
  const T e = (x - y) / y;
  if (std::fabs(e) < T(1e-6)) {
    // Taylor series in (x - y)/y; the closed forms are 0/0 on the diagonal.
    const T s = 1 + e * (T(-1) / 6 + e * (T(3) / 40 + e * (T(-5) / 112 +
                                                          e * (T(35) / 1152))));
    return s / sqrt(y);
  }
  if (x < y) {
    if (x == 0) return pi_v<T>() / (2 * sqrt(y));
    const T d = y - x;
    // arccos(sqrt(x/y)) == arctan(sqrt((y - x)/x))
    return std::atan(sqrt(d / x)) / sqrt(d);
  }
  const T d = x - y;
  const T sx = sqrt(x), sy = sqrt(y), sd = sqrt(d);
  // ln((sqrt(x) + sqrt(x - y))/sqrt(y)) with the argument minus one formed
  // without cancellation.
  return std::log1p((d / (sx + sy) + sd) / sy) / sd;
}

/// Cauchy principal value R_C(x, -ym), ym > 0.
template <class T>
T rc_pv_impl(T x, T ym) {
  if (x == 0) return T(0);
  return std::sqrt(x / (x + ym)) * rc_impl(x + ym, ym);
}

/// R_F(x, y, z); at most one argument zero.
template <class T>
T rf_impl(T x, T y, T z) {
  using std::sqrt;
  sort3(x, y, z);
  const T a0 = (x + y + z) / 3;
  T an = a0, x0 = x, y0 = y, z0 = z, mul = 1;
  const T q = std::max({std::fabs(a0 - x), std::fabs(a0 - y),
                        std::fabs(a0 - z)}) /
              Tol<T>::rf();
  while (q >= mul * std::fabs(an)) {
    const T lam = sqrt(x0) * sqrt(y0) + sqrt(y0) * sqrt(z0) +
                  sqrt(z0) * sqrt(x0);
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    mul *= 4;
  }
  const T xx = (a0 - x) / (mul * an);
  const T yy = (a0 - y) / (mul * an);
  const T zz = -(xx + yy);
  const T e2 = xx * yy - zz * zz;
  const T e3 = xx * yy * zz;
  // 1 - E2/10 + E3/14 + E2^2/24 - 3 E2 E3/44 - 5 E2^3/208 + 3 E3^2/104
  //   + E2^2 E3/16, in Horner form
  return (e3 * (6930 * e3 + e2 * (15015 * e2 - 16380) + 17160) +
          e2 * ((10010 - 5775 * e2) * e2 - 24024) + 240240) /
         (240240 * sqrt(an));
}

/// R_D(x, y, z); z > 0, x and y not both zero.
template <class T>
T rd_impl(T x, T y, T z) {
  using std::sqrt;
  if (x > y) std::swap(x, y);
  const T a0 = (x + y + 3 * z) / 5;
  T an = a0, x0 = x, y0 = y, z0 = z, mul = 1, s = 0;
  const T q = std::max({std::fabs(a0 - x), std::fabs(a0 - y),
                        std::fabs(a0 - z)}) /
              Tol<T>::rd();
  while (q >= mul * std::fabs(an)) {
    const T lam = sqrt(x0) * sqrt(y0) + sqrt(y0) * sqrt(z0) +
                  sqrt(z0) * sqrt(x0);
    s += 1 / (mul * sqrt(z0) * (z0 + lam));
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    mul *= 4;
  }
  const T xx = (a0 - x) / (mul * an);
  const T yy = (a0 - y) / (mul * an);
  const T zz = -(xx + yy) / 3;
  const T e2 = xx * yy - 6 * zz * zz;
  const T e3 = (3 * xx * yy - 8 * zz * zz) * zz;
  const T e4 = 3 * (xx * yy - zz * zz) * zz * zz;
  const T e5 = xx * yy * zz * zz * zz;
  return ((471240 - 540540 * e2) * e5 +
          (612612 * e2 - 540540 * e3 - 556920) * e4 +
          e3 * (306306 * e3 + e2 * (675675 * e2 - 706860) + 680680) +
          e2 * ((417690 - 255255 * e2) * e2 - 875160) + 4084080) /
             (4084080 * mul * an * sqrt(an)) +
         3 * s;
}

/// R_J(x, y, z, p); p > 0, at most one of x, y, z zero.
template <class T>
T rj_impl(T x, T y, T z, T p) {
  using std::sqrt;
  sort3(x, y, z);
  if (p == x) return rd_impl(y, z, x);
  if (p == y) return rd_impl(x, z, y);
  if (p == z) return rd_impl(x, y, z);
  const T a0 = (x + y + z + 2 * p) / 5;
  const T delta = (p - x) * (p - y) * (p - z);
  T an = a0, x0 = x, y0 = y, z0 = z, p0 = p, mul = 1, mul3 = 1, s = 0;
  const T q = std::max({std::fabs(a0 - x), std::fabs(a0 - y),
                        std::fabs(a0 - z), std::fabs(a0 - p)}) /
              Tol<T>::rd();
  while (q >= mul * std::fabs(an)) {
    const T lam = sqrt(x0) * sqrt(y0) + sqrt(y0) * sqrt(z0) +
                  sqrt(z0) * sqrt(x0);
    const T d0 = (sqrt(p0) + sqrt(x0)) * (sqrt(p0) + sqrt(y0)) *
                 (sqrt(p0) + sqrt(z0));
    const T e0 = delta / (mul3 * d0 * d0);
    s += rc_impl(T(1), 1 + e0) / (mul * d0);
    an = (an + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    p0 = (p0 + lam) / 4;
    mul *= 4;
    mul3 *= 64;
  }
  const T xx = (a0 - x) / (mul * an);
  const T yy = (a0 - y) / (mul * an);
  const T zz = (a0 - z) / (mul * an);
  const T pp = -(xx + yy + zz) / 2;
  const T e2 = xx * yy + xx * zz + yy * zz - 3 * pp * pp;
  const T e3 = xx * yy * zz + 2 * pp * (e2 + 2 * pp * pp);
  const T e4 = (2 * xx * yy * zz + pp * (e2 + 3 * pp * pp)) * pp;
  const T e5 = xx * yy * zz * pp * pp;
  return ((471240 - 540540 * e2) * e5 +
          (612612 * e2 - 540540 * e3 - 556920) * e4 +
          e3 * (306306 * e3 + e2 * (675675 * e2 - 706860) + 680680) +
          e2 * ((417690 - 255255 * e2) * e2 - 875160) + 4084080) /
             (4084080 * mul * an * sqrt(an)) +
         6 * s;
}

/// Terms of the principal-value formula, kept apart so callers can judge
/// cancellation.
template <class T>
struct PvTerms {
  T value;
  T magnitude;  // sum of |terms| / (y + |p|)
};

/// Cauchy principal value R_J(x, y, z, -pm), pm > 0, x, y, z > 0.
template <class T>
PvTerms<T> rj_pv_impl(T x, T y, T z, T pm) {
  using std::sqrt;
  // Median in the middle slot makes (z - y)(y - x) >= 0, so q >= y > 0.
  sort3(x, y, z);
  const T q = y + (z - y) * (y - x) / (y + pm);
  const T t1 = (q == y) ? T(0) : (q - y) * rj_impl(x, y, z, q);
  const T t2 = 3 * rf_impl(x, y, z);
  const T w = x * z + pm * q;
  const T t3 = 3 * sqrt(x * y * z / w) * rc_impl(w, pm * q);
  const T denom = y + pm;
  return {(t1 - t2 + t3) / denom,
          (std::fabs(t1) + std::fabs(t2) + std::fabs(t3)) / denom};
}

/// R_G(x, y, z) from R_F and R_D with the largest argument in the z slot, so
/// that (z - x)(z - y) >= 0. Two zero arguments give the limit sqrt(z)/2.
template <class T>
T rg_impl(T x, T y, T z) {
  using std::sqrt;
  sort3(x, y, z);
  if (y == 0) return sqrt(z) / 2;
  if (x == z) return sqrt(x);
  const T rf = rf_impl(x, y, z);
  const T rd = rd_impl(x, y, z);
  return (z * rf - (z - x) * (z - y) * rd / 3 + sqrt(x * y / z)) / 2;
}

/// Arithmetic-geometric mean of u, v > 0.
template <class T>
T agm_impl(T u, T v) {
  T a = u, g = v;
  for (int i = 0; i < 64; ++i) {
    if (std::fabs(a - g) <= 4 * std::numeric_limits<T>::epsilon() * a) break;
    const T an = (a + g) / 2;
    g = std::sqrt(a * g);
    a = an;
  }
  return (a + g) / 2;
}

/// int_0^inf [(t+x)(t+y)]^{-1/2} (t+z)^{-1} dt as 2 R_C((sqrt(xy)+z)^2,
/// (sqrt(x)+sqrt(y))^2 z).
template <class T>
T r_minus1_impl(T x, T y, T z) {
  const T g = std::sqrt(x * y);
  const T s = std::sqrt(x) + std::sqrt(y);
  return 2 * rc_impl((g + z) * (g + z), s * s * z);
}

}  // namespace symell::detail
