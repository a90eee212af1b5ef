#pragma once

// Report records and their three serializations.

#include <string>

#include <json.hpp>

namespace glmn::app {

using Report = nlohmann::ordered_json;

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& s);
std::string extension(Format f);

/// Bit-stable serialization of one task report.
std::string emit(const Report& r, Format f);
/// Inverse of emit(r, Format::Json).
Report parse_report(const std::string& text);

/// Rows rendered as an aligned table with a fixed column order.
std::string render_table(const Report& rows);
/// Rows rendered as CSV; every string cell quoted.
std::string render_csv(const Report& rows);

}  // namespace glmn::app
