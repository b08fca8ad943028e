#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace lgf::cli {

enum ExitCode { kOk = 0, kUsage = 2, kComputation = 3, kMismatch = 4 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Mismatch {
  std::string key;
  std::string expected;
  std::string got;
};

// Recompute every entry of a figure fixture.  kind is one of potential, slit,
// slit-gf, branched-vertex, branched-face, trunk, triangular-slit,
// triangular-face.
std::vector<Mismatch> compare_fixture(const std::string& kind, const nlohmann::json& entries);

// Named scalar values with known closed forms.
std::vector<Mismatch> check_closed_forms(int& checked);

// Directory holding the figure fixtures and the calibration file.
std::string default_fixture_dir();

}  // namespace lgf::cli
