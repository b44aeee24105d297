#include "padic/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace padic {

using nlohmann::ordered_json;

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "PASS";
    case Outcome::kFail: return "FAIL";
    case Outcome::kInconclusive: return "INCONCLUSIVE";
    case Outcome::kSkipped: return "SKIPPED";
    case Outcome::kInfo: return "INFO";
  }
  return "FAIL";
}

Outcome parse_outcome(const std::string& s) {
  for (Outcome o : {Outcome::kPass, Outcome::kFail, Outcome::kInconclusive, Outcome::kSkipped, Outcome::kInfo})
    if (outcome_name(o) == s) return o;
  throw Error("PARSE", "unknown outcome '" + s + "'");
}

void set_series_comparison(VerificationReport& r, const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                           long order) {
  r.lhs = lhs;
  r.rhs = rhs;
  const SeriesEquality eq = compare_up_to_order(lhs, rhs, order);
  r.order_compared = eq.order_compared;
  switch (eq.outcome) {
    case SeriesComparison::kEqual: r.outcome = Outcome::kPass; break;
    case SeriesComparison::kInconclusive: r.outcome = Outcome::kInconclusive; break;
    case SeriesComparison::kNotEqual:
      r.outcome = Outcome::kFail;
      r.detail = "first mismatch at t^" + std::to_string(eq.first_mismatch);
      break;
  }
}

namespace {

ordered_json series_json(const TruncatedSeries& s) {
  ordered_json j;
  j["p"] = s.p();
  j["lead"] = s.lead();
  j["trunc_order"] = s.trunc_order();
  ordered_json coeffs = ordered_json::array();
  for (const Cyclotomic& c : s.coeffs()) {
    ordered_json coords = ordered_json::array();
    for (const Rational& x : c.coords()) coords.push_back(to_string(x));
    coeffs.push_back(ordered_json::array({c.level(), coords}));
  }
  j["coeffs"] = coeffs;
  return j;
}

TruncatedSeries series_of(const ordered_json& j) {
  try {
    const long p = j.at("p").get<long>();
    std::vector<Cyclotomic> coeffs;
    for (const auto& c : j.at("coeffs")) {
      std::vector<Rational> coords;
      for (const auto& x : c.at(1)) coords.push_back(parse_rational(x.get<std::string>()));
      coeffs.push_back(Cyclotomic::from_coords(p, c.at(0).get<int>(), std::move(coords)));
    }
    return TruncatedSeries(p, j.at("lead").get<long>(), std::move(coeffs), j.at("trunc_order").get<long>());
  } catch (const nlohmann::json::exception& e) {
    throw Error("PARSE", std::string("malformed series record: ") + e.what());
  }
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["group"] = r.group;
  j["p"] = r.p;
  j["parameters"] = ordered_json(r.parameters);
  j["lhs"] = r.lhs ? series_json(*r.lhs) : ordered_json(nullptr);
  j["rhs"] = r.rhs ? series_json(*r.rhs) : ordered_json(nullptr);
  j["order_compared"] = r.order_compared;
  j["outcome"] = outcome_name(r.outcome);
  j["values"] = ordered_json(r.values);
  j["detail"] = r.detail;
  return j;
}

}  // namespace

std::string series_to_json(const TruncatedSeries& s) { return series_json(s).dump(); }

TruncatedSeries series_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("PARSE", e.what());
  }
  return series_of(j);
}

std::string report_to_json(const VerificationReport& r) { return report_json(r).dump(); }

VerificationReport report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("PARSE", e.what());
  }
  try {
    VerificationReport r;
    r.check = j.at("check").get<std::string>();
    r.group = j.at("group").get<std::string>();
    r.p = j.at("p").get<long>();
    r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    if (!j.at("lhs").is_null()) r.lhs = series_of(j.at("lhs"));
    if (!j.at("rhs").is_null()) r.rhs = series_of(j.at("rhs"));
    r.order_compared = j.at("order_compared").get<long>();
    r.outcome = parse_outcome(j.at("outcome").get<std::string>());
    r.values = j.at("values").get<std::map<std::string, std::string>>();
    r.detail = j.at("detail").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error("PARSE", std::string("malformed report: ") + e.what());
  }
}

std::vector<std::vector<std::string>> series_csv_rows(const TruncatedSeries& s) {
  std::vector<std::vector<std::string>> rows;
  long e = s.lead();
  for (const Cyclotomic& c : s.coeffs()) {
    std::string coords;
    for (const Rational& x : c.coords()) {
      if (!coords.empty()) coords += ' ';
      coords += to_string(x);
    }
    rows.push_back({std::to_string(e++), std::to_string(c.level()), coords});
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "check,group,p,outcome,order_compared,side,exponent,level,coefficient\n";
  const std::string head = csv_field(r.check) + "," + csv_field(r.group) + "," + std::to_string(r.p) + "," +
                           outcome_name(r.outcome) + "," + std::to_string(r.order_compared);
  if (!r.lhs && !r.rhs) {
    os << head << ",,,,\n";
    return os.str();
  }
  if (!r.lhs || !r.rhs) {
    const char* side = r.lhs ? "lhs" : "rhs";
    for (const auto& row : series_csv_rows(r.lhs ? *r.lhs : *r.rhs))
      os << head << ',' << side << ',' << row[0] << ',' << row[1] << ',' << csv_field(row[2]) << '\n';
    return os.str();
  }
  // Both blocks cover the same exponent range so they line up row by row.
  long lo = std::min(r.lhs->is_zero() ? 0 : r.lhs->lead(), r.rhs->is_zero() ? 0 : r.rhs->lead());
  const long hi = std::min(r.lhs->trunc_order(), r.rhs->trunc_order());
  lo = std::min(lo, hi);
  for (const auto& [side, s] : {std::pair{"lhs", &*r.lhs}, std::pair{"rhs", &*r.rhs}}) {
    for (long e = lo; e <= hi; ++e) {
      const Cyclotomic c = s->coeff(e);
      std::string coords;
      for (const Rational& x : c.coords()) {
        if (!coords.empty()) coords += ' ';
        coords += to_string(x);
      }
      os << head << ',' << side << ',' << e << ',' << c.level() << ',' << csv_field(coords) << '\n';
    }
  }
  return os.str();
}

}  // namespace padic
