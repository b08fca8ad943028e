#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lgf/exact.hpp"
#include "lgf/trunk.hpp"

namespace lgf::cli {

// bad flags or files; maps to exit code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { pretty, csv, json };

// A key column: its text goes into pretty/csv output, its json into json output.
struct Key {
  std::string name;
  std::string text;
  nlohmann::json value;
};

Key point_key(const std::string& name, Pt p);
Key text_key(const std::string& name, const std::string& s);
Key int_key(const std::string& name, long v);

struct Row {
  std::vector<Key> keys;
  RingElem value;
};

struct Table {
  std::string title;
  std::vector<std::string> columns;  // key column names
  std::vector<Row> rows;
};

struct OutputSpec {
  Format format = Format::pretty;
  std::optional<int> digits = 6;  // empty: exact only
};

void render(const Table& t, const OutputSpec& spec, std::ostream& out);

Format parse_format(const std::string& s);
// "N" or "exact-only"
std::optional<int> parse_digits(const std::string& s);
// "X0:X1,Y0:Y1"
Window parse_window(const std::string& s);

}  // namespace lgf::cli
