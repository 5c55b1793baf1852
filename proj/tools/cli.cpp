#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symell/asym.hpp"
#include "symell/bounds.hpp"
#include "symell/carlson.hpp"
#include "symell/dispatch.hpp"
#include "symell/errors.hpp"
#include "symell/harness.hpp"
#include "symell/report.hpp"

namespace symell::cli {

namespace {

using json = nlohmann::json;

// Malformed command-line input, reported with exit 64.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& s) {
  const char* b = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(b, &end);
  if (s.empty() || end != b + s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::vector<double> parse_numbers(const std::vector<std::string>& v) {
  std::vector<double> out;
  for (const auto& s : v) out.push_back(parse_number(s));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// "1e-2:1e-7" expands by decades, either direction; otherwise a comma list.
std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) {
      out.push_back(parse_number(tok));
      continue;
    }
    const double a = parse_number(tok.substr(0, colon));
    const double b = parse_number(tok.substr(colon + 1));
    if (!(a > 0 && b > 0)) throw UsageError("range endpoints must be positive: " + tok);
    const double la = std::log10(a), lb = std::log10(b);
    const int steps = static_cast<int>(std::lround(std::fabs(lb - la)));
    if (std::fabs(std::fabs(lb - la) - steps) > 1e-9)
      throw UsageError("range endpoints must be whole decades apart: " + tok);
    const double dir = lb < la ? -1 : 1;
    for (int k = 0; k <= steps; ++k) out.push_back(a * std::pow(10.0, dir * k));
  }
  return out;
}

struct Selection {
  std::vector<CaseId> cases;
  std::vector<IneqId> ineqs;
};

// Comma-separated case or inequality tags; "all" is every asymptotic case
// and "X:Y" an inclusive range in declaration order.
Selection parse_selection(const std::string& s) {
  Selection sel;
  auto add_case = [&](CaseId id) {
    if (std::find(sel.cases.begin(), sel.cases.end(), id) == sel.cases.end())
      sel.cases.push_back(id);
  };
  auto add_ineq = [&](IneqId id) {
    if (std::find(sel.ineqs.begin(), sel.ineqs.end(), id) == sel.ineqs.end())
      sel.ineqs.push_back(id);
  };
  for (const auto& tok : split(s, ',')) {
    if (tok == "all") {
      for (CaseId id : kAllCases) add_case(id);
      continue;
    }
    if (tok == "appendix") {
      for (IneqId id : kAllIneqs) add_ineq(id);
      continue;
    }
    const auto colon = tok.find(':');
    const std::string a = tok.substr(0, colon);
    const std::string b = colon == std::string::npos ? a : tok.substr(colon + 1);
    if (auto ca = case_from_string(a), cb = case_from_string(b); ca && cb) {
      for (int k = static_cast<int>(*ca); k <= static_cast<int>(*cb); ++k)
        add_case(static_cast<CaseId>(k));
    } else if (auto ia = ineq_from_string(a), ib = ineq_from_string(b); ia && ib) {
      for (int k = static_cast<int>(*ia); k <= static_cast<int>(*ib); ++k)
        add_ineq(static_cast<IneqId>(k));
    } else {
      throw UsageError("unknown case selection: '" + tok + "'");
    }
  }
  return sel;
}

double reference_for_case(CaseId id, std::span<const double> a) {
  switch (case_info(id).family) {
    case Family::RC: return rc(a[0], a[1]);
    case Family::RF: return rf(a[0], a[1], a[2]);
    case Family::RD: return rd(a[0], a[1], a[2]);
    case Family::RJ: return rj(a[0], a[1], a[2], a[3]);
    case Family::RG: return rg(a[0], a[1], a[2]);
    case Family::K: return legendre_k_comp(a[0]);
    case Family::E: return legendre_e_comp(a[0]);
  }
  return 0;
}

struct Symbol {
  double value;
  bool collapsed;
};

Symbol realized_symbol(CaseId id, std::span<const double> a, double ref) {
  const RecoveredSymbol r = theta_recover_ld(
      id, a, ref, std::fabs(ref) * kReferenceRelErr);
  return {static_cast<double>(r.symbol), r.collapsed};
}

// ---- eval -----------------------------------------------------------------

int cmd_eval(const std::string& kind_name, const std::vector<std::string>& raw,
             double rel_tol, bool as_json, std::ostream& out) {
  const auto kind = kind_from_string(kind_name);
  if (!kind) throw UsageError("unknown function: '" + kind_name + "'");
  EvalRequest req;
  req.kind = *kind;
  req.args = parse_numbers(raw);
  req.rel_tol = rel_tol;
  if (static_cast<int>(req.args.size()) != kind_arity(*kind))
    throw UsageError(std::string(to_string(*kind)) + " takes " +
                     std::to_string(kind_arity(*kind)) + " arguments");
  const EvalReport r = evaluate(req);
  if (as_json)
    out << to_json(r) << '\n';
  else
    out << format_double(r.value) << ' ' << r.method.to_string() << ' '
        << format_double(r.guaranteed_rel_err) << '\n';
  return kOk;
}

// ---- asym -------------------------------------------------------------------

int cmd_asym(const std::string& tag, const std::vector<std::string>& raw,
             bool as_json, std::ostream& out, std::ostream& err) {
  const auto id = case_from_string(tag);
  if (!id) throw UsageError("unknown case: '" + tag + "'");
  const std::vector<double> a = parse_numbers(raw);
  if (static_cast<int>(a.size()) != case_info(*id).arity)
    throw UsageError(tag + " takes " + std::to_string(case_info(*id).arity) +
                     " arguments");
  const Enclosure e = approximate(*id, a);
  if (!e.regime.stated_upper) {
    // Only G1a gates its upper bound this way.
    err << tag << ": upper bound requires 5a < z\n";
    return kRegime;
  }
  const double ref = reference_for_case(*id, a);
  const Symbol th = realized_symbol(*id, a, ref);
  if (as_json) {
    json j = json::parse(to_json(e));
    j["reference"] = ref;
    j["theta"] = th.value;
    j["theta_collapsed"] = th.collapsed;
    j["contains_reference"] = e.contains(ref);
    out << canonical_json(j.dump()) << '\n';
    return kOk;
  }
  out << "case " << tag << '\n'
      << "estimate " << format_double(e.estimate) << '\n'
      << "lo " << format_double(e.lo) << '\n'
      << "hi " << format_double(e.hi) << '\n'
      << "reference " << format_double(ref) << '\n'
      << "theta " << format_double(th.value) << '\n'
      << "theta_bracket " << format_double(e.symbol_lo) << ' '
      << format_double(e.symbol_hi) << '\n'
      << "ratio " << format_double(e.regime.ratio) << '\n'
      << "lo_strict " << (e.lo_strict ? "true" : "false") << '\n'
      << "hi_strict " << (e.hi_strict ? "true" : "false") << '\n';
  return kOk;
}

// ---- bounds-check -------------------------------------------------------------

int cmd_bounds(const std::string& tag, const std::vector<std::string>& raw,
               bool as_json, std::ostream& out) {
  const auto id = ineq_from_string(tag);
  if (!id) throw UsageError("unknown inequality: '" + tag + "'");
  const std::vector<double> a = parse_numbers(raw);
  if (static_cast<int>(a.size()) != ineq_info(*id).arity)
    throw UsageError(tag + " takes " + std::to_string(ineq_info(*id).arity) +
                     " arguments");
  const Bracket b = bracket(*id, a);
  const bool holds = b.lo <= b.mid && b.mid <= b.hi;
  if (as_json) {
    json j = json::parse(to_json(*id, a, b));
    j["holds"] = holds;
    if (ineq_info(*id).has_theta) {
      j["theta"] = theta_of(*id, a);
      const auto [lo, hi] = theta_range(*id, a);
      j["theta_range"] = {lo, hi};
    }
    out << canonical_json(j.dump()) << '\n';
  } else {
    out << format_double(b.lo) << ' ' << format_double(b.mid) << ' '
        << format_double(b.hi) << ' ' << (holds ? "holds" : "VIOLATED") << '\n';
  }
  return holds ? kOk : kViolations;
}

// ---- verify ---------------------------------------------------------------------

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string opt(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("-");
}

int cmd_verify(const std::string& cases, const std::string& ratios,
               std::optional<int> samples, std::uint64_t seed, int threads,
               const std::string& out_prefix, bool as_json, std::ostream& out) {
  const Selection sel = parse_selection(cases);
  const std::vector<double> grid = parse_grid(ratios);
  bool ok = true;
  std::vector<CampaignReport> reports;
  for (CaseId id : sel.cases) {
    Campaign c;
    c.case_id = id;
    c.ratios = grid;
    c.samples = samples.value_or(500);
    c.seed = seed;
    c.threads = threads;
    reports.push_back(run_containment(c));
    const auto& r = reports.back();
    ok = ok && r.ok();
    if (!as_json)
      out << r.name << " evaluated=" << r.evaluated()
          << " violations=" << r.violations << " slope=" << opt(r.slope)
          << " expected=" << opt(r.expected_slope) << ' '
          << (r.ok() ? "ok" : "FAIL") << '\n';
  }
  std::optional<SuiteReport> ineq;
  if (!sel.ineqs.empty()) {
    ineq = run_inequalities(sel.ineqs, seed, samples.value_or(100000));
    ok = ok && ineq->ok();
    if (!as_json)
      for (const auto& c : ineq->results)
        out << c.id << " samples=" << c.samples << " violations=" << c.failures
            << ' ' << (c.failures == 0 ? "ok" : "FAIL") << '\n';
  }
  std::string text;
  if (!sel.cases.empty() && !ineq) {
    text = to_json(reports);
  } else if (sel.cases.empty() && ineq) {
    text = to_json(*ineq);
  } else {
    text = canonical_json("{\"campaigns\":" + to_json(reports) +
                          ",\"inequalities\":" + to_json(*ineq) + "}");
  }
  if (as_json) out << text << '\n';
  if (!out_prefix.empty()) {
    write_file(out_prefix + ".json", text + "\n");
    if (!reports.empty()) write_file(out_prefix + ".csv", to_csv(reports));
  }
  return ok ? kOk : kViolations;
}

// ---- table ------------------------------------------------------------------------

int cmd_table(const std::string& function, const std::string& grid_text,
              const std::string& format, std::ostream& out) {
  std::vector<CaseId> cases;
  double (*ref)(double) = nullptr;
  if (function == "K") {
    cases = {CaseId::F1e, CaseId::F1f};
    ref = legendre_k_comp;
  } else if (function == "E") {
    cases = {CaseId::G1c};
    ref = legendre_e_comp;
  } else {
    throw UsageError("--function must be K or E");
  }
  if (format != "csv" && format != "tsv" && format != "json")
    throw UsageError("--format must be csv, json or tsv");
  const std::vector<double> grid = parse_grid(grid_text);
  for (double kp : grid)
    if (!(kp > 0 && kp < 1))
      throw DomainError("k' grid values must lie in (0, 1)");

  std::vector<std::string> header = {"kprime", "reference"};
  for (CaseId id : cases)
    for (const char* col : {"lo", "hi", "theta", "contains"})
      header.push_back(std::string(to_string(id)) + "_" + col);

  json rows = json::array();
  std::vector<std::vector<std::string>> text_rows;
  for (double kp : grid) {
    const double a[] = {kp};
    const double r = ref(kp);
    json row = {{"kprime", kp}, {"reference", r}};
    std::vector<std::string> cells = {format_double(kp), format_double(r)};
    for (CaseId id : cases) {
      const std::string p(to_string(id));
      const Enclosure e = approximate(id, a);
      const Symbol th = realized_symbol(id, a, r);
      row[p + "_lo"] = e.lo;
      row[p + "_hi"] = e.hi;
      row[p + "_theta"] = th.value;
      row[p + "_contains"] = e.contains(r);
      cells.insert(cells.end(), {format_double(e.lo), format_double(e.hi),
                                 format_double(th.value),
                                 e.contains(r) ? "true" : "false"});
    }
    rows.push_back(row);
    text_rows.push_back(std::move(cells));
  }
  if (format == "json") {
    out << canonical_json(json({{"function", function}, {"rows", rows}}).dump())
        << '\n';
    return kOk;
  }
  const char sep = format == "csv" ? ',' : '\t';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? std::string(1, sep) : "") << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : text_rows) line(r);
  return kOk;
}

// ---- identities ---------------------------------------------------------------------

void print_suite(const SuiteReport& r, std::ostream& out) {
  for (const auto& c : r.results)
    out << r.name << ' ' << c.id << " samples=" << c.samples
        << " failures=" << c.failures << " max_error=" << format_double(c.max_error)
        << " tolerance=" << format_double(c.tolerance) << ' '
        << (c.failures == 0 ? "ok" : "FAIL") << '\n';
}

int cmd_identities(const std::string& suite, long samples, std::uint64_t seed,
                   int threads, bool as_json, std::ostream& out) {
  std::vector<SuiteReport> reports;
  const bool all = suite == "all";
  if (all || suite == "identities")
    reports.push_back(run_identities(seed, samples, threads));
  if (all || suite == "dual-oracle")
    reports.push_back(run_dual_oracle(seed, samples, 1e-9, threads));
  if (all || suite == "dispatch")
    reports.push_back(run_dispatch(seed, samples, {1e-3, 1e-6, 1e-9}, threads));
  if (reports.empty())
    throw UsageError("--suite must be identities, dual-oracle, dispatch or all");
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (as_json)
      out << to_json(r) << '\n';
    else
      print_suite(r, out);
  }
  return ok ? kOk : kViolations;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("SEED"); s && *s) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0') throw UsageError("SEED must be an unsigned integer");
    return v;
  }
  return 42;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Symmetric elliptic integrals: evaluation, asymptotic "
               "enclosures and verification"};
  app.require_subcommand(1);

  std::string name;
  std::vector<std::string> nums;
  double rel_tol = 1e-12;
  bool as_json = false;

  auto* eval = app.add_subcommand("eval", "Evaluate rc, rf, rd, rj, rg, K or E");
  eval->add_option("function", name, "rc | rf | rd | rj | rg | K | E")->required();
  eval->add_option("args", nums, "arguments")->required();
  eval->add_option("--rel-tol", rel_tol, "requested relative tolerance");
  eval->add_flag("--json", as_json, "JSON output");

  auto* asym = app.add_subcommand("asym", "Enclosure for one asymptotic case");
  asym->add_option("case", name, "case tag, e.g. F1a")->required();
  asym->add_option("args", nums, "arguments in the case's slot order")->required();
  asym->add_flag("--json", as_json, "JSON output");

  auto* bounds = app.add_subcommand("bounds-check", "Evaluate one inequality");
  bounds->add_option("inequality", name, "A1 ... A10, A6a, AX, AY, AZ")->required();
  bounds->add_option("args", nums, "t followed by x [y [z]]")->required();
  bounds->add_flag("--json", as_json, "JSON output");

  std::string cases = "all", ratios = "1e-2:1e-7", out_prefix;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  int threads = 0;
  auto* verify = app.add_subcommand("verify", "Containment and order campaigns");
  verify->add_option("--cases", cases, "tags, ranges (A1:A10), 'all' or 'appendix'");
  verify->add_option("--ratios", ratios, "comma list or decade range 1e-2:1e-7");
  verify->add_option("--samples", samples, "samples per ratio (inequalities: per tag)");
  verify->add_option("--seed", seed, "seed (default: $SEED, else 42)");
  verify->add_option("--threads", threads, "worker threads, 0 for all cores");
  verify->add_option("--out", out_prefix, "write <prefix>.json and <prefix>.csv");
  verify->add_flag("--json", as_json, "JSON report on stdout");

  std::string function, grid, format = "csv";
  auto* table = app.add_subcommand("table", "K or E against their enclosures");
  table->add_option("--function", function, "K or E")->required();
  table->add_option("--kprime-grid", grid, "comma list or decade range of k'");
  table->add_option("--format", format, "csv, json or tsv");

  std::string suite = "identities";
  long id_samples = 10000;
  auto* ident = app.add_subcommand("identities", "Identity and oracle suites");
  ident->add_option("--suite", suite, "identities, dual-oracle, dispatch or all");
  ident->add_option("--samples", id_samples, "tuples per check");
  ident->add_option("--seed", seed, "seed (default: $SEED, else 42)");
  ident->add_option("--threads", threads, "worker threads, 0 for all cores");
  ident->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(name, nums, rel_tol, as_json, out);
    if (asym->parsed()) return cmd_asym(name, nums, as_json, out, err);
    if (bounds->parsed()) return cmd_bounds(name, nums, as_json, out);
    if (verify->parsed())
      return cmd_verify(cases, ratios, samples, seed ? *seed : default_seed(),
                        threads, out_prefix, as_json, out);
    if (table->parsed()) return cmd_table(function, grid, format, out);
    if (ident->parsed())
      return cmd_identities(suite, id_samples, seed ? *seed : default_seed(),
                            threads, as_json, out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const GridError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kDomain;
  } catch (const ToleranceError& e) {
    err << e.what() << '\n';
    return kTolerance;
  } catch (const RegimeError& e) {
    err << e.what() << '\n';
    return kRegime;
  }
  return kUsage;
}

}  // namespace symell::cli
