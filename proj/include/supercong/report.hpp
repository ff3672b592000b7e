#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable verification reports (JSON array or CSV).
 *
 * Rationals and valuations are always strings; no floating point is ever
 * written. JSON keys keep a fixed order so that reading a report and writing
 * it back reproduces the same bytes.
 */

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "harness.hpp"

namespace supercong {

struct ReportEntry {
  std::string case_name;
  long p = 0;
  long param = 0;
  std::string required;
  std::string achieved;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool conjectural = false;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

inline constexpr const char* kCsvHeader = "case,p,param,required,achieved,lhs,rhs,pass,conjectural";

inline ReportEntry to_entry(const VerificationRecord& rec) {
  return {std::string(rec.case_name()), rec.p, rec.param, rec.required.str(), rec.achieved_str(),
          rec.error.empty() ? rec.lhs.str() : "", rec.error.empty() ? rec.rhs.str() : "",
          rec.pass, rec.conjectural};
}

inline std::vector<ReportEntry> to_entries(const std::vector<VerificationRecord>& records) {
  std::vector<ReportEntry> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(to_entry(r));
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json entry_to_json(const ReportEntry& e) {
  nlohmann::ordered_json j;
  j["case"] = e.case_name;
  j["p"] = e.p;
  j["param"] = e.param;
  j["required"] = e.required;
  j["achieved"] = e.achieved;
  j["lhs"] = e.lhs;
  j["rhs"] = e.rhs;
  j["pass"] = e.pass;
  j["conjectural"] = e.conjectural;
  return j;
}

inline std::string write_json(const std::vector<ReportEntry>& entries) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) arr.push_back(entry_to_json(e));
  return arr.dump(2) + "\n";
}

inline std::vector<ReportEntry> read_json(const std::string& text) {
  nlohmann::ordered_json arr;
  try {
    arr = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed report: ") + ex.what());
  }
  if (!arr.is_array()) throw Error(ErrorKind::InvalidArgument, "report must be a JSON array");
  std::vector<ReportEntry> out;
  for (const auto& j : arr) {
    try {
      out.push_back({j.at("case").get<std::string>(), j.at("p").get<long>(), j.at("param").get<long>(),
                     j.at("required").get<std::string>(), j.at("achieved").get<std::string>(),
                     j.at("lhs").get<std::string>(), j.at("rhs").get<std::string>(), j.at("pass").get<bool>(),
                     j.at("conjectural").get<bool>()});
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::InvalidArgument, std::string("malformed report entry: ") + ex.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180 quoting)

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

inline bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw Error(ErrorKind::InvalidArgument, "expected true/false, got '" + s + "'");
}

inline long parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "expected integer, got '" + s + "'");
  }
}

}  // namespace detail

inline std::string write_csv(const std::vector<ReportEntry>& entries) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const auto& e : entries) {
    os << detail::csv_field(e.case_name) << ',' << e.p << ',' << e.param << ',' << detail::csv_field(e.required)
       << ',' << detail::csv_field(e.achieved) << ',' << detail::csv_field(e.lhs) << ','
       << detail::csv_field(e.rhs) << ',' << (e.pass ? "true" : "false") << ','
       << (e.conjectural ? "true" : "false") << "\n";
  }
  return os.str();
}

// Error messages never contain newlines, so one record per line.
inline std::vector<ReportEntry> read_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw Error(ErrorKind::InvalidArgument, "missing CSV header");
  }
  std::vector<ReportEntry> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto f = detail::csv_split(line);
    if (f.size() != 9) throw Error(ErrorKind::InvalidArgument, "CSV row needs 9 fields: " + line);
    out.push_back({f[0], detail::parse_long(f[1]), detail::parse_long(f[2]), f[3], f[4], f[5], f[6],
                   detail::parse_bool(f[7]), detail::parse_bool(f[8])});
  }
  return out;
}

}  // namespace supercong
