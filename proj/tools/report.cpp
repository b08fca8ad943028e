#include "report.hpp"

#include <algorithm>
#include <ostream>
#include <regex>

namespace lgf::cli {

Key point_key(const std::string& name, Pt p) { return {name, p.str(), nlohmann::json::array({p.x, p.y})}; }
Key text_key(const std::string& name, const std::string& s) { return {name, s, s}; }
Key int_key(const std::string& name, long v) { return {name, std::to_string(v), v}; }

Format parse_format(const std::string& s) {
  if (s == "pretty") return Format::pretty;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw UsageError("unknown format '" + s + "'");
}

std::optional<int> parse_digits(const std::string& s) {
  if (s == "exact-only") return std::nullopt;
  static const std::regex num("[0-9]{1,4}");
  if (!std::regex_match(s, num)) throw UsageError("--digits takes N or exact-only, got '" + s + "'");
  return std::stoi(s);
}

Window parse_window(const std::string& s) {
  static const std::regex re(R"((-?\d+):(-?\d+),(-?\d+):(-?\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("--window takes X0:X1,Y0:Y1, got '" + s + "'");
  Window w{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])};
  if (w.x0 > w.x1 || w.y0 > w.y1) throw UsageError("empty window '" + s + "'");
  return w;
}

namespace {

void render_pretty(const Table& t, const OutputSpec& spec, std::ostream& out) {
  out << "# " << t.title << "\n";
  std::vector<std::string> lines;
  size_t width = 0;
  for (const auto& r : t.rows) {
    std::string s;
    for (const auto& k : r.keys) s += (s.empty() ? "" : " ") + k.text;
    s += " = " + r.value.str();
    width = std::max(width, s.size());
    lines.push_back(std::move(s));
  }
  for (size_t i = 0; i < lines.size(); ++i) {
    out << lines[i];
    if (spec.digits) out << std::string(width - lines[i].size() + 2, ' ') << "~ " << t.rows[i].value.to_decimal(*spec.digits);
    out << "\n";
  }
}

// keys are written bare so a point reads (x,y) like the tables in print
void render_csv(const Table& t, const OutputSpec& spec, std::ostream& out) {
  for (const auto& c : t.columns) out << c << ",";
  out << "exact";
  if (spec.digits) out << ",decimal";
  out << "\n";
  for (const auto& r : t.rows) {
    for (const auto& k : r.keys) out << k.text << ",";
    out << r.value.compact();
    if (spec.digits) out << "," << r.value.to_decimal(*spec.digits);
    out << "\n";
  }
}

// laid out like the figure fixtures: one entry per line
void render_json(const Table& t, const OutputSpec& spec, std::ostream& out) {
  out << "{\"table\": " << nlohmann::json(t.title).dump() << ",\n \"columns\": " << nlohmann::json(t.columns).dump()
      << ",\n \"entries\": [";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const Row& r = t.rows[i];
    nlohmann::ordered_json e;
    for (const auto& k : r.keys) e[k.name] = k.value;
    e["value"] = nlohmann::ordered_json::parse(r.value.to_json());
    e["exact"] = r.value.compact();
    if (spec.digits) e["decimal"] = r.value.to_decimal(*spec.digits);
    out << (i ? ",\n  " : "\n  ") << e.dump();
  }
  out << "\n ]}\n";
}

}  // namespace

void render(const Table& t, const OutputSpec& spec, std::ostream& out) {
  switch (spec.format) {
    case Format::pretty: render_pretty(t, spec, out); break;
    case Format::csv: render_csv(t, spec, out); break;
    case Format::json: render_json(t, spec, out); break;
  }
}

}  // namespace lgf::cli
