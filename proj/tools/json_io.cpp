#include "json_io.hpp"

#include <algorithm>
#include <sstream>

#include "hyperweight/error.hpp"

namespace hyperweight::cli {

Json polynomial_to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [a, c] : f.terms()) terms.push_back({{"exps", a.exps()}, {"coeff", c.rep}});
  return {{"s", f.num_vars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j, const FieldPtr& field) {
  if (!j.is_object() || !j.contains("s") || !j.contains("terms")) {
    throw Error(ErrorCode::kParse, "polynomial needs \"s\" and \"terms\"");
  }
  const auto s = j.at("s").get<unsigned>();
  Polynomial f(field, s);
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
    if (exps.size() != s) {
      throw Error(ErrorCode::kParse, "term has " + std::to_string(exps.size()) + " exponents, expected " +
                                         std::to_string(s));
    }
    const auto raw = t.at("coeff").get<std::int64_t>();
    const std::int64_t q = field->q();
    if (raw >= q || raw <= -q) {
      throw Error(ErrorCode::kParse, "coefficient " + std::to_string(raw) + " outside (-q, q)");
    }
    const FieldElement mag{static_cast<std::uint32_t>(raw < 0 ? -raw : raw)};
    f.add_term(ExponentVector(exps), raw < 0 ? field->neg(mag) : mag);
  }
  return f;
}

std::vector<Polynomial> polynomials_from_json(const Json& j, const FieldPtr& field) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected a JSON array of polynomials");
  std::vector<Polynomial> out;
  for (const auto& p : j) out.push_back(polynomial_from_json(p, field));
  return out;
}

Json field_json(const Field& field) {
  return {{"q", field.q()}, {"p", field.p()}, {"e", field.e()}, {"modulus", field.modulus()},
          {"theta", field.theta().rep}};
}

Json code_json(const LinearCode& code, bool include_generator) {
  const CodeMeta& m = code.meta();
  Json j = {{"schema_version", kSchemaVersion},
            {"family", std::string(code_family_name(m.family))},
            {"q", m.q},
            {"s", m.s},
            {"d", m.d},
            {"n", code.n()},
            {"k", code.k()},
            {"expected_k", m.expected_k},
            {"rank_defect", code.rank_defect()},
            {"field", field_json(code.field())}};
  if (include_generator) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < code.k(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < code.n(); ++c) row.push_back(code.generator()(r, c).rep);
      rows.push_back(std::move(row));
    }
    j["generator"] = std::move(rows);
  }
  return j;
}

Json formula_json(const FormulaResult& f) {
  Json j = {{"status", std::string(formula_status_name(f.status))}};
  j["value"] = f.value ? Json(*f.value) : Json(nullptr);
  j["source"] = f.source;
  j["region"] = f.region;
  return j;
}

Json zero_bound_json(const ZeroBound& b) {
  return {{"value", b.value}, {"sources", b.sources}, {"considered", b.considered}};
}

Json suite_json(const SuiteReport& report, const VerifyOptions& options) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json params = Json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    Json row = {{"name", c.name}, {"params", std::move(params)}, {"relation", c.relation}};
    row["expected"] = c.expected ? Json(*c.expected) : Json(nullptr);
    row["actual"] = c.actual ? Json(*c.actual) : Json(nullptr);
    row["status"] = std::string(check_status_name(c.status));
    row["note"] = c.note;
    checks.push_back(std::move(row));
  }
  return {{"schema_version", kSchemaVersion},
          {"suite", report.suite},
          {"options",
           {{"q_max", options.q_max},
            {"s_max", options.s_max},
            {"seed", options.seed},
            {"budget", options.budget},
            {"samples", options.samples}}},
          {"summary",
           {{"pass", report.count(CheckStatus::kPass)},
            {"fail", report.count(CheckStatus::kFail)},
            {"skipped", report.count(CheckStatus::kSkipped)}}},
          {"checks", std::move(checks)}};
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

// Leaves of nested objects as dotted keys; arrays of scalars stay inline.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      continue;  // rendered separately as a table
    } else {
      out.emplace_back(name, scalar_text(value));
    }
  }
}

std::vector<std::vector<std::string>> object_rows(const Json& array, std::vector<std::string>& header) {
  std::vector<std::pair<std::string, std::string>> first;
  flatten(array.front(), "", first);
  for (const auto& [k, v] : first) header.push_back(k);
  std::vector<std::vector<std::string>> rows;
  for (const auto& item : array) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(item, "", cells);
    std::vector<std::string> row;
    for (const auto& h : header) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const auto& c) { return c.first == h; });
      row.push_back(it == cells.end() ? "" : it->second);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_table(const Json& doc) {
  std::ostringstream os;
  std::vector<std::pair<std::string, std::string>> scalars;
  flatten(doc, "", scalars);
  std::size_t width = 0;
  for (const auto& [k, v] : scalars) width = std::max(width, k.size());
  for (const auto& [k, v] : scalars) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';

  for (const auto& [key, value] : doc.items()) {
    if (!value.is_array() || value.empty() || !value.front().is_object()) continue;
    std::vector<std::string> header;
    const auto rows = object_rows(value, header);
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
      widths[i] = header[i].size();
      for (const auto& row : rows) widths[i] = std::max(widths[i], row[i].size());
    }
    os << '\n' << key << ":\n";
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << cells[i];
        if (i + 1 < cells.size()) os << std::string(widths[i] - cells[i].size() + 2, ' ');
      }
      os << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
  }
  return os.str();
}

std::string render_csv(const Json& doc) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  if (doc.contains("checks") && doc.at("checks").is_array() && !doc.at("checks").empty()) {
    std::vector<std::string> header;
    const auto rows = object_rows(doc.at("checks"), header);
    emit(header);
    for (const auto& row : rows) emit(row);
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> scalars;
  flatten(doc, "", scalars);
  std::vector<std::string> header;
  std::vector<std::string> values;
  for (const auto& [k, v] : scalars) {
    header.push_back(k);
    values.push_back(v);
  }
  emit(header);
  emit(values);
  return os.str();
}

}  // namespace hyperweight::cli
