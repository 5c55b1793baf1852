#include "symell/dispatch.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "symell/args.hpp"
#include "symell/carlson.hpp"
#include "symell/errors.hpp"

namespace symell {
namespace {

// Closed forms that are a couple of correctly rounded operations.
constexpr double kSimpleClosedRelErr = 1e-15;
// Relative error of k' = sqrt((1-k)(1+k)) carried into K and E.
constexpr double kKPrimeRelErr = 4e-16;

constexpr double kPi = std::numbers::pi;

std::string fmt_kind(Kind k) { return std::string(to_string(k)); }

void validate(const EvalRequest& req) {
  const std::string name = fmt_kind(req.kind);
  if (static_cast<int>(req.args.size()) != kind_arity(req.kind))
    throw DomainError(name + ": expects " +
                      std::to_string(kind_arity(req.kind)) + " arguments");
  for (double a : req.args)
    if (!std::isfinite(a)) throw DomainError(name + ": arguments must be finite");
  if (!std::isfinite(req.rel_tol) || req.rel_tol > kMaxRelTol)
    throw DomainError("rel_tol must lie in [1e-14, 1e-1]");
  if (req.rel_tol < kMinRelTol)
    throw ToleranceError("rel_tol below 1e-14 cannot be certified");

  const auto& v = req.args;
  switch (req.kind) {
    case Kind::RC:
      if (v[0] < 0 || v[1] == 0)
        throw DomainError("RC: needs x >= 0 and y != 0");
      break;
    case Kind::RF:
      (void)Sym3Args(v[0], v[1], v[2]);
      break;
    case Kind::RD:
      (void)Sym3Args(v[0], v[1], v[2]);
      if (v[2] <= 0) throw DomainError("RD: needs z > 0");
      break;
    case Kind::RJ:
      (void)Sym4Args(v[0], v[1], v[2], v[3]);
      if (v[3] < 0 && !(v[0] > 0 && v[1] > 0 && v[2] > 0))
        throw DomainError("RJ: principal value needs x, y, z > 0");
      break;
    case Kind::RG:
      if (v[0] < 0 || v[1] < 0 || v[2] < 0 || (v[0] + v[1] + v[2]) == 0)
        throw DomainError("RG: needs nonnegative arguments, not all zero");
      break;
    case Kind::K:
      if (!(v[0] >= 0 && v[0] < 1)) throw DomainError("K: needs 0 <= k < 1");
      break;
    case Kind::E:
      if (!(v[0] >= 0 && v[0] <= 1)) throw DomainError("E: needs 0 <= k <= 1");
      break;
  }
}

bool principal_value(const EvalRequest& req) {
  return (req.kind == Kind::RC && req.args[1] < 0) ||
         (req.kind == Kind::RJ && req.args[3] < 0);
}

struct Closed {
  double value;
  double rel_err;
};

std::optional<Closed> closed_form(const EvalRequest& req) {
  const auto& v = req.args;
  switch (req.kind) {
    case Kind::RC:
      // R_C is elementary everywhere.
      if (v[1] < 0) return Closed{rc_pv(v[0], -v[1]), kReferenceRelErr};
      if (v[0] == v[1]) return Closed{1 / std::sqrt(v[0]), kSimpleClosedRelErr};
      if (v[0] == 0)
        return Closed{kPi / (2 * std::sqrt(v[1])), kSimpleClosedRelErr};
      return Closed{rc(v[0], v[1]), kReferenceRelErr};
    case Kind::RF: {
      std::array<double, 3> s{v[0], v[1], v[2]};
      std::sort(s.begin(), s.end());
      if (s[0] == s[2]) return Closed{1 / std::sqrt(s[0]), kSimpleClosedRelErr};
      if (s[1] == s[2]) return Closed{rc(s[0], s[1]), kReferenceRelErr};
      if (s[0] == s[1]) return Closed{rc(s[2], s[0]), kReferenceRelErr};
      return std::nullopt;
    }
    case Kind::RD:
      if (v[0] == v[1] && v[1] == v[2])
        return Closed{1 / (v[0] * std::sqrt(v[0])), kSimpleClosedRelErr};
      return std::nullopt;
    case Kind::RJ:
      if (v[3] > 0 && v[0] == v[1] && v[1] == v[2] && v[2] == v[3])
        return Closed{1 / (v[0] * std::sqrt(v[0])), kSimpleClosedRelErr};
      return std::nullopt;
    case Kind::RG: {
      std::array<double, 3> s{v[0], v[1], v[2]};
      std::sort(s.begin(), s.end());
      if (s[0] == s[2]) return Closed{std::sqrt(s[0]), kSimpleClosedRelErr};
      if (s[1] == 0) return Closed{std::sqrt(s[2]) / 2, kSimpleClosedRelErr};
      return std::nullopt;
    }
    case Kind::K:
      if (v[0] == 0) return Closed{kPi / 2, kSimpleClosedRelErr};
      return std::nullopt;
    case Kind::E:
      if (v[0] == 0) return Closed{kPi / 2, kSimpleClosedRelErr};
      if (v[0] == 1) return Closed{1.0, 0.0};
      return std::nullopt;
  }
  return std::nullopt;
}

Family family_of(Kind k) {
  switch (k) {
    case Kind::RC: return Family::RC;
    case Kind::RF: return Family::RF;
    case Kind::RD: return Family::RD;
    case Kind::RJ: return Family::RJ;
    case Kind::RG: return Family::RG;
    case Kind::K: return Family::K;
    case Kind::E: return Family::E;
  }
  return Family::RF;
}

// Argument orders under which the case could apply. Fully symmetric groups
// are sorted so the small/large split lines up with the case's slots.
std::vector<std::vector<double>> slot_orders(CaseId id, const EvalRequest& req) {
  const auto& v = req.args;
  switch (req.kind) {
    case Kind::RC:
      return {{v[0], v[1]}};
    case Kind::K:
    case Kind::E: {
      const double k = v[0];
      return {{std::sqrt((1 - k) * (1 + k))}};
    }
    case Kind::RD:
      return {{v[0], v[1], v[2]}, {v[1], v[0], v[2]}};
    default:
      break;
  }
  std::array<double, 3> s{v[0], v[1], v[2]};
  std::sort(s.begin(), s.end());
  const CaseInfo& ci = case_info(id);
  // Fill slots from smallest to largest value: the zero slot, then the small
  // group, then anything unclassified, then the large group.
  auto rank = [&](int slot) {
    auto has = [slot](const std::vector<int>& g) {
      return std::find(g.begin(), g.end(), slot) != g.end();
    };
    if (ci.zero_slot == slot) return 0;
    if (has(ci.small)) return 1;
    if (has(ci.large)) return 3;
    return 2;
  };
  std::array<int, 3> slots{0, 1, 2};
  std::stable_sort(slots.begin(), slots.end(),
                   [&](int a, int b) { return rank(a) < rank(b); });
  std::vector<double> out(3);
  for (int k = 0; k < 3; ++k) out[slots[k]] = s[k];
  if (req.kind == Kind::RJ) out.push_back(v[3]);
  return {out};
}

double rel_err_of(const Enclosure& e, double extra) {
  const double mid = e.lo / 2 + e.hi / 2;
  const double hw = (e.hi - e.lo) / 2;
  if (!(std::fabs(mid) > hw)) return std::numeric_limits<double>::infinity();
  return hw / (std::fabs(mid) - hw) + extra;
}

double reference_value(const EvalRequest& req, double* rel_err) {
  const auto& v = req.args;
  *rel_err = kReferenceRelErr;
  switch (req.kind) {
    case Kind::RC:
      return v[1] < 0 ? rc_pv(v[0], -v[1]) : rc(v[0], v[1]);
    case Kind::RF:
      return rf(v[0], v[1], v[2]);
    case Kind::RD:
      return rd(v[0], v[1], v[2]);
    case Kind::RJ:
      if (v[3] < 0) {
        const PvValue pv = rj_pv_conditioned(v[0], v[1], v[2], v[3]);
        *rel_err = kReferenceRelErr * std::max(1.0, pv.condition);
        return pv.value;
      }
      return rj(v[0], v[1], v[2], v[3]);
    case Kind::RG:
      return rg(v[0], v[1], v[2]);
    case Kind::K:
      return legendre_k(v[0]);
    case Kind::E:
      return legendre_e(v[0]);
  }
  return 0;
}

}  // namespace

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::RC: return "RC";
    case Kind::RF: return "RF";
    case Kind::RD: return "RD";
    case Kind::RJ: return "RJ";
    case Kind::RG: return "RG";
    case Kind::K: return "K";
    case Kind::E: return "E";
  }
  return "?";
}

std::optional<Kind> kind_from_string(std::string_view name) {
  std::string up(name);
  for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Kind k : {Kind::RC, Kind::RF, Kind::RD, Kind::RJ, Kind::RG, Kind::K,
                 Kind::E})
    if (to_string(k) == up) return k;
  return std::nullopt;
}

int kind_arity(Kind k) {
  switch (k) {
    case Kind::RC: return 2;
    case Kind::RJ: return 4;
    case Kind::K:
    case Kind::E: return 1;
    default: return 3;
  }
}

std::string Method::to_string() const {
  switch (type) {
    case Type::closed_form:
      return "closed_form";
    case Type::asym:
      return "asym(" + std::string(symell::to_string(*case_id)) + ")";
    case Type::reference:
      return "reference";
  }
  return "?";
}

std::vector<Candidate> plan(const EvalRequest& req) {
  validate(req);
  std::vector<Candidate> out;

  if (auto c = closed_form(req)) {
    Candidate cand;
    cand.method.type = Method::Type::closed_form;
    cand.predicted_rel_err = c->rel_err;
    cand.meets_tol = c->rel_err <= req.rel_tol;
    const bool done = cand.meets_tol;
    out.push_back(std::move(cand));
    // A closed form is exact up to rounding; nothing else can beat it.
    if (done) return out;
  }

  std::vector<Candidate> asym;
  if (!principal_value(req)) {
    const Family fam = family_of(req.kind);
    const double extra =
        (req.kind == Kind::K || req.kind == Kind::E) ? kKPrimeRelErr : 0.0;
    for (CaseId id : kAllCases) {
      const CaseInfo& ci = case_info(id);
      if (ci.family != fam || ci.upper_only) continue;
      std::optional<Candidate> best;
      for (const auto& args : slot_orders(id, req)) {
        try {
          const Enclosure e = approximate(id, args);
          if (!e.regime.stated_upper) continue;
          Candidate cand;
          cand.method = {Method::Type::asym, id};
          cand.predicted_rel_err = rel_err_of(e, extra);
          cand.meets_tol = cand.predicted_rel_err <= req.rel_tol;
          cand.case_args = args;
          cand.enclosure = e;
          if (!best || cand.predicted_rel_err < best->predicted_rel_err)
            best = std::move(cand);
        } catch (const RegimeError&) {
        } catch (const DomainError&) {
        }
      }
      if (best) asym.push_back(std::move(*best));
    }
    std::stable_sort(asym.begin(), asym.end(),
                     [](const Candidate& a, const Candidate& b) {
                       const int ca = case_info(*a.method.case_id).cost_class;
                       const int cb = case_info(*b.method.case_id).cost_class;
                       if (ca != cb) return ca < cb;
                       return a.predicted_rel_err < b.predicted_rel_err;
                     });
  }
  for (auto& c : asym) out.push_back(std::move(c));

  Candidate ref;
  ref.method.type = Method::Type::reference;
  double err = kReferenceRelErr;
  if (principal_value(req) && req.kind == Kind::RJ) {
    const auto& v = req.args;
    err = kReferenceRelErr *
          std::max(1.0, rj_pv_conditioned(v[0], v[1], v[2], v[3]).condition);
  }
  ref.predicted_rel_err = err;
  ref.meets_tol = err <= req.rel_tol;
  out.push_back(std::move(ref));
  return out;
}

EvalReport evaluate(const EvalRequest& req) {
  const std::vector<Candidate> cands = plan(req);
  for (const Candidate& c : cands) {
    if (!c.meets_tol) continue;
    EvalReport r;
    r.method = c.method;
    switch (c.method.type) {
      case Method::Type::closed_form:
        r.value = closed_form(req)->value;
        r.guaranteed_rel_err = c.predicted_rel_err;
        break;
      case Method::Type::asym:
        r.value = c.enclosure->lo / 2 + c.enclosure->hi / 2;
        r.guaranteed_rel_err = c.predicted_rel_err;
        r.enclosure = c.enclosure;
        break;
      case Method::Type::reference:
        r.value = reference_value(req, &r.guaranteed_rel_err);
        break;
    }
    return r;
  }
  throw ToleranceError("no method can guarantee relative error " +
                       std::to_string(req.rel_tol) + " (best available " +
                       std::to_string(cands.back().predicted_rel_err) + ")");
}

}  // namespace symell
