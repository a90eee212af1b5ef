#include "report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "config.hpp"

namespace glmn::app {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw ConfigError("unknown format '" + s + "' (json, csv, table)");
}

std::string extension(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Table: return "txt";
  }
  return "txt";
}

namespace {

std::vector<std::string> columns(const Report& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

std::string cell_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_table(const Report& rows) {
  if (!rows.is_array() || rows.empty()) return "(no rows)\n";
  const auto cols = columns(rows);
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? cell_text(row.at(cols[c])) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  std::ostringstream os;
  auto put = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) os << " | ";
      os << line[c] << std::string(width[c] - line[c].size(), ' ');
    }
    os << '\n';
  };
  put(cols);
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "-+-" : "") << std::string(width[c], '-');
  os << '\n';
  for (const auto& line : cells) put(line);
  return os.str();
}

std::string render_csv(const Report& rows) {
  if (!rows.is_array() || rows.empty()) return "";
  const auto cols = columns(rows);
  std::ostringstream os;
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) os << ',';
      if (!row.contains(cols[c])) continue;
      const auto& v = row.at(cols[c]);
      os << (v.is_number() || v.is_boolean() ? v.dump() : csv_quote(cell_text(v)));
    }
    os << '\n';
  }
  return os.str();
}

std::string emit(const Report& r, Format f) {
  switch (f) {
    case Format::Json: return r.dump(2) + "\n";
    case Format::Csv: return render_csv(r.contains("rows") ? r.at("rows") : Report::array());
    case Format::Table: {
      std::ostringstream os;
      os << "task: " << r.value("task", std::string("?")) << "  status: " << r.value("status", std::string("?")) << '\n';
      if (r.contains("field")) os << "field: " << r.at("field").dump() << '\n';
      if (r.contains("error")) os << "error: " << r.at("error").get<std::string>() << '\n';
      if (r.contains("summary"))
        for (const auto& [k, v] : r.at("summary").items()) os << "  " << k << ": " << cell_text(v) << '\n';
      if (r.contains("checks"))
        for (const auto& c : r.at("checks"))
          os << "  [" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] " << c.at("name").get<std::string>()
             << (c.contains("detail") ? " (" + cell_text(c.at("detail")) + ")" : std::string()) << '\n';
      if (r.contains("rows") && !r.at("rows").empty()) os << render_table(r.at("rows"));
      return os.str();
    }
  }
  return {};
}

Report parse_report(const std::string& text) { return Report::parse(text); }

}  // namespace glmn::app
