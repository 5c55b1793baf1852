#pragma once

#include <array>
#include <optional>

namespace symell {

/// Validated (x, y, z) for R_F, R_D and R_G: finite, nonnegative, at most
/// one of them zero.
class Sym3Args {
 public:
  /// Throws DomainError if the invariants do not hold.
  Sym3Args(double x, double y, double z);

  double x() const { return v_[0]; }
  double y() const { return v_[1]; }
  double z() const { return v_[2]; }
  const std::array<double, 3>& values() const { return v_; }

  /// Ascending copy; used to canonicalize fully symmetric functions.
  std::array<double, 3> sorted() const;
  int zero_count() const;

 private:
  std::array<double, 3> v_;
};

/// Validated (x, y, z, p) for R_J. p may be negative, which selects the
/// Cauchy principal value.
class Sym4Args {
 public:
  Sym4Args(double x, double y, double z, double p);

  double x() const { return xyz_.x(); }
  double y() const { return xyz_.y(); }
  double z() const { return xyz_.z(); }
  double p() const { return p_; }
  const Sym3Args& xyz() const { return xyz_; }
  bool principal_value() const { return p_ < 0; }

 private:
  Sym3Args xyz_;
  double p_;
};

/// Symmetric means of two or three variables.
///
/// `b` is Maclaurin's second symmetric mean sqrt((xy + xz + yz)/3); for two
/// variables it coincides with g. `lambda` is sqrt(xy) + sqrt(xz) + sqrt(yz)
/// (sqrt(xy) for two variables). `d` = (z + 2p)/3 is only filled in when a
/// fourth variable p is supplied.
struct MeanStats {
  double a = 0;
  double g = 0;
  double h = 0;
  double b = 0;
  double lambda = 0;
  std::optional<double> d;
};

MeanStats mean_stats(double x, double y);
MeanStats mean_stats(double x, double y, double z);
MeanStats mean_stats(double x, double y, double z, double p);

}  // namespace symell
