#pragma once

// Tolerance-driven evaluation: pick the cheapest method whose a priori error
// bound meets the requested relative tolerance.
//
// Order of preference: closed forms, then asymptotic enclosures by cost
// class and predicted width, then the reference evaluators. The predicted
// width of an enclosure is its actual width, so "meets the tolerance" is a
// guarantee rather than a heuristic.

#include <optional>
#include <string>
#include <vector>

#include "symell/asym.hpp"

namespace symell {

enum class Kind { RC, RF, RD, RJ, RG, K, E };

std::string_view to_string(Kind k);
std::optional<Kind> kind_from_string(std::string_view name);  // case-insensitive
int kind_arity(Kind k);

inline constexpr double kMinRelTol = 1e-14;
inline constexpr double kMaxRelTol = 1e-1;

/// Arguments in the usual order: (x, y) for RC, (x, y, z) for RF/RD/RG,
/// (x, y, z, p) for RJ, (k) for K and E. A negative y for RC or negative p
/// for RJ asks for the principal value.
struct EvalRequest {
  Kind kind = Kind::RF;
  std::vector<double> args;
  double rel_tol = 1e-12;
};

struct Method {
  enum class Type { closed_form, asym, reference };
  Type type = Type::reference;
  std::optional<CaseId> case_id;

  std::string to_string() const;  // closed_form, asym(F1d), reference
  bool operator==(const Method&) const = default;
};

struct EvalReport {
  double value = 0;
  Method method;
  double guaranteed_rel_err = 0;
  std::optional<Enclosure> enclosure;
};

struct Candidate {
  Method method;
  /// Guaranteed relative error if this candidate is used.
  double predicted_rel_err = 0;
  bool meets_tol = false;
  /// Arguments permuted into the case's slot order (asym only).
  std::vector<double> case_args;
  std::optional<Enclosure> enclosure;
};

/// Deterministic candidate list. Throws DomainError for invalid arguments
/// or a tolerance outside [kMinRelTol, kMaxRelTol] and ToleranceError below
/// it.
std::vector<Candidate> plan(const EvalRequest& req);

/// Follows plan() and returns the first candidate meeting the tolerance.
/// Throws ToleranceError when even the reference evaluator cannot certify
/// it (ill-conditioned principal values).
EvalReport evaluate(const EvalRequest& req);

}  // namespace symell
