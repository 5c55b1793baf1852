#include "symell/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symell {

namespace {

using json = nlohmann::json;

void emit(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      // nlohmann::json keeps object keys in a std::map, so iteration is
      // already sorted.
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(k).dump();
        out += ':';
        emit(v, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        emit(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

std::string canonical(const json& j) {
  std::string out;
  emit(j, out);
  return out;
}

json theta_json(const ThetaStats& t) {
  return {{"inside", t.inside}, {"endpoint", t.endpoint}, {"outside", t.outside}};
}

json campaign_json(const CampaignReport& r) {
  json per = json::array();
  for (const auto& x : r.per_ratio)
    per.push_back({{"ratio", x.ratio},
                   {"samples", x.samples},
                   {"evaluated", x.evaluated},
                   {"gated", x.gated},
                   {"violations", x.violations},
                   {"max_rel_width", x.max_rel_width},
                   {"theta", theta_json(x.theta)}});
  json off = json::array();
  for (const auto& v : r.offending)
    off.push_back({{"what", v.what},
                   {"ratio", v.ratio},
                   {"args", v.args},
                   {"lo", v.lo},
                   {"hi", v.hi},
                   {"truth", static_cast<double>(v.truth)}});
  json j = {{"case", r.name},
            {"seed", r.seed},
            {"per_ratio", per},
            {"violations", r.violations},
            {"evaluated", r.evaluated()},
            {"theta", theta_json(r.theta)},
            {"offending", off},
            {"ok", r.ok()}};
  j["slope"] = r.slope ? json(*r.slope) : json(nullptr);
  j["expected_slope"] = r.expected_slope ? json(*r.expected_slope) : json(nullptr);
  j["slope_ok"] = r.slope_ok ? json(*r.slope_ok) : json(nullptr);
  return j;
}

json enclosure_json(const Enclosure& e) {
  return {{"case", std::string(to_string(e.case_id))},
          {"lo", e.lo},
          {"hi", e.hi},
          {"estimate", e.estimate},
          {"lo_strict", e.lo_strict},
          {"hi_strict", e.hi_strict},
          {"bracket_width", e.bracket_width},
          {"symbol_lo", e.symbol_lo},
          {"symbol_hi", e.symbol_hi},
          {"ratio", e.regime.ratio}};
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string to_json(const Enclosure& e) { return canonical(enclosure_json(e)); }

std::string to_json(const EvalReport& r) {
  json j = {{"value", r.value},
            {"method", r.method.to_string()},
            {"guaranteed_rel_err", r.guaranteed_rel_err}};
  j["enclosure"] = r.enclosure ? enclosure_json(*r.enclosure) : json(nullptr);
  return canonical(j);
}

std::string to_json(IneqId id, const std::vector<double>& args, const Bracket& b) {
  return canonical({{"inequality", std::string(to_string(id))},
                    {"args", args},
                    {"lo", b.lo},
                    {"mid", b.mid},
                    {"hi", b.hi}});
}

std::string to_json(const CampaignReport& r) { return canonical(campaign_json(r)); }

std::string to_json(const std::vector<CampaignReport>& rs) {
  json a = json::array();
  bool ok = true;
  int violations = 0;
  for (const auto& r : rs) {
    a.push_back(campaign_json(r));
    ok = ok && r.ok();
    violations += r.violations;
  }
  return canonical({{"cases", a}, {"violations", violations}, {"ok", ok}});
}

std::string to_json(const SuiteReport& r) {
  json a = json::array();
  for (const auto& c : r.results)
    a.push_back({{"id", c.id},
                 {"description", c.description},
                 {"samples", c.samples},
                 {"failures", c.failures},
                 {"max_error", c.max_error},
                 {"tolerance", c.tolerance},
                 {"offending", c.offending}});
  return canonical({{"suite", r.name},
                    {"seed", r.seed},
                    {"results", a},
                    {"failures", r.failures()},
                    {"ok", r.ok()}});
}

std::string to_json(const std::vector<SharpeningResult>& rs) {
  json a = json::array();
  for (const auto& r : rs)
    a.push_back({{"sharper", std::string(to_string(r.sharper))},
                 {"coarser", std::string(to_string(r.coarser))},
                 {"samples", r.samples},
                 {"failures", r.failures},
                 {"offending", r.offending}});
  return canonical(a);
}

std::string to_csv(const std::vector<CampaignReport>& rs) {
  std::ostringstream os;
  os << "case,ratio,samples,violations,max_rel_width,slope,seed\n";
  char buf[64];
  auto g17 = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const auto& r : rs)
    for (const auto& x : r.per_ratio)
      os << r.name << ',' << g17(x.ratio) << ',' << x.samples << ','
         << x.violations << ',' << g17(x.max_rel_width) << ','
         << (r.slope ? g17(*r.slope) : std::string()) << ',' << r.seed << '\n';
  return os.str();
}

std::string canonical_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
  return canonical(j);
}

}  // namespace symell
