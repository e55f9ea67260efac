#pragma once

#include <toricsolve/poly.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toricsolve {

/// A .psys file: a `vars:` line, `name = polynomial` lines, `#` comments and
/// an optional `projection = ...` line linear in one extra variable.
struct SystemFile {
  std::vector<std::string> vars;
  std::vector<std::string> names;
  PolySystem system;
  std::optional<SparsePoly> projection;  ///< over vars + {projection_var}
  std::string projection_var;
};

SystemFile parse_system_file(std::string_view text);
SystemFile load_system_file(const std::string& path);
std::string to_text(const SystemFile& s);

/// Golden coefficient file: `exponent coefficient` lines and `#` comments.
using GoldenTerms = std::vector<std::pair<long, Int>>;
GoldenTerms load_golden(const std::string& path);

struct GoldenDiff {
  std::size_t compared = 0;
  std::vector<long> mismatched;  ///< listed exponents whose coefficient differs
  std::vector<long> unlisted;    ///< nonzero coefficients absent from the file
  bool ok() const { return compared > 0 && mismatched.empty() && unlisted.empty(); }
};

/// Compares ascending integer coefficients against the listed terms.
GoldenDiff diff_golden(const std::vector<Int>& coeffs, const GoldenTerms& golden);

}  // namespace toricsolve
