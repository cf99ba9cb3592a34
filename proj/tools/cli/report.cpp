#include "cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cauchy::cli {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(k).dump() << ": ";
        write(os, v, indent, depth + 1);
      }
      os << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      if (flat) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write(os, j[i], indent, depth + 1);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write(os, j[i], indent, depth + 1);
      }
      os << '\n' << close << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) s += ' ';
      s += j[i].is_number_float() ? format_double(j[i].get<double>()) : j[i].dump();
    }
    out.emplace_back(prefix, s);
  } else if (j.is_number_float()) {
    out.emplace_back(prefix, format_double(j.get<double>()));
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

}  // namespace

std::string to_json_string(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  os << '\n';
  return os.str();
}

std::string render(const CommandResult& r, Format f) {
  if (f == Format::json) {
    Json full = r.report;
    if (!r.columns.empty()) {
      full["columns"] = r.columns;
      Json rows = Json::array();
      for (const auto& row : r.rows) rows.push_back(row);
      full["rows"] = std::move(rows);
    }
    return to_json_string(full);
  }
  std::ostringstream os;
  if (f == Format::csv && !r.columns.empty()) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
    os << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(r.report, "", kv);
  if (f == Format::csv) {
    os << "key,value\n";
    for (const auto& [k, v] : kv) os << k << ',' << v << '\n';
    return os.str();
  }
  std::size_t width = 0;
  for (const auto& [k, v] : kv) width = std::max(width, k.size());
  for (const auto& [k, v] : kv) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  if (!r.rows.empty()) os << "rows" << std::string(width > 2 ? width - 2 : 2, ' ') << r.rows.size() << '\n';
  os << (r.exit_code == kPass ? "PASS" : r.exit_code == kSingularity ? "SINGULARITY" : "FAIL") << '\n';
  return os.str();
}

}  // namespace cauchy::cli
