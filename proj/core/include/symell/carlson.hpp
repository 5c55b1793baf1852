#pragma once

// Reference evaluators for the symmetric elliptic integrals and the
// related elementary and Legendre functions. These are the ground truth the
// asymptotic enclosures are checked against.
//
// All functions are pure and throw DomainError for arguments outside their
// domain. Fully symmetric functions sort their arguments first, so results
// are bit-identical under permutation.

#include "symell/args.hpp"

namespace symell {

/// Relative accuracy the evaluators below are certified to. The dual-oracle
/// tests hold them to this bound; the dispatcher refuses tighter requests.
inline constexpr double kReferenceRelErr = 1e-14;

/// R_C(x, y) for x >= 0, y > 0. Elementary: arctan form below the diagonal,
/// logarithmic form above it, Taylor series within 1e-6 relative of it.
double rc(double x, double y);

/// Cauchy principal value R_C(x, -y_abs), y_abs > 0.
double rc_pv(double x, double y_abs);

double rf(const Sym3Args& args);
double rf(double x, double y, double z);

/// R_D(x, y, z): x, y >= 0 not both zero, z > 0.
double rd(double x, double y, double z);

/// R_J(x, y, z, p) for p > 0. Equal to rd when p coincides with one of x, y,
/// z. Negative p is a domain error here; see rj_pv.
double rj(const Sym4Args& args);
double rj(double x, double y, double z, double p);

/// Cauchy principal value R_J(x, y, z, p) for p < 0 and x, y, z > 0.
double rj_pv(double x, double y, double z, double p);

/// Same as rj_pv but also returns sum(|terms|)/|value|, the amplification of
/// rounding error in the principal-value combination.
struct PvValue {
  double value;
  double condition;
};
PvValue rj_pv_conditioned(double x, double y, double z, double p);

/// R_G(x, y, z). Unlike rf, two zero arguments are allowed (limit sqrt(z)/2).
double rg(double x, double y, double z);

/// int_0^inf [(t+x)(t+y)]^{-1/2} (t+z)^{-1} dt, all arguments positive.
double r_minus1(double x, double y, double z);

/// Gauss's arithmetic-geometric mean, u, v > 0.
double agm(double u, double v);

/// K(k) = R_F(0, 1 - k^2, 1), 0 <= k < 1.
double legendre_k(double k);

/// E(k) = 2 R_G(0, 1 - k^2, 1), 0 <= k <= 1.
double legendre_e(double k);

/// K and E parameterized by the complementary modulus k' in (0, 1], which
/// keeps full relative accuracy of k'^2 near k = 1.
double legendre_k_comp(double kprime);
double legendre_e_comp(double kprime);

}  // namespace symell
