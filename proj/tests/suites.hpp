#pragma once

#include <toricsolve/poly.hpp>

#include <random>
#include <string>
#include <vector>

namespace suites {

using toricsolve::SparsePoly;

struct DimCase {
  std::vector<std::string> polys;
  std::vector<std::string> vars;
  long dim;
};

// hand-analyzed zero sets
inline const std::vector<DimCase> kDimension{
    {{}, {"x", "y"}, 2},
    {{"x-y"}, {"x", "y"}, 1},
    {{"x", "y"}, {"x", "y"}, 0},
    {{"x", "x-1"}, {"x"}, -1},
    {{"x^2+1"}, {"x"}, 0},
    {{"x*y"}, {"x", "y"}, 1},
    {{"x^2+y^2-1", "x-y"}, {"x", "y"}, 0},
    {{"x*y-1", "x*y-2"}, {"x", "y"}, -1},
    {{"x-1"}, {"x", "y", "z"}, 2},
    {{"x-1", "y-2"}, {"x", "y", "z"}, 1},
    {{"x", "y", "z"}, {"x", "y", "z"}, 0},
    {{"y-x^2", "z-x*y"}, {"x", "y", "z"}, 1},
};

struct JstCase {
  std::string f;
  bool over_n, over_z;
};

// verdicts by hand
inline const std::vector<JstCase> kJst{
    {"(2*y-x)*(2*y-x-1)", true, true},
    {"2*y-x", false, false},
    {"y-2*x", true, true},
    {"y^2-x", false, false},
    {"(y-x^2)*(y+1)", true, true},
    {"y-x+3", false, true},
    {"(y+x)*(y-x)", true, true},
    {"3*y-x^2-2", false, false},
    {"(3*y-x^2-2)*(3*y-x)", true, true},
    {"x*y-x", true, true},
};

/// Products of 1 to 3 factors d*y - a*x - b, sometimes times y^2 + x^2 + 1.
inline SparsePoly random_product(std::mt19937_64& rng) {
  const std::vector<std::string> xy{"x", "y"};
  std::uniform_int_distribution<int> den(1, 3), slope(-2, 2), off(-3, 3), count(1, 3), extra(0, 3);
  SparsePoly f = toricsolve::parse_poly("1", xy);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const std::string fac = "(" + std::to_string(den(rng)) + "*y - (" + std::to_string(slope(rng)) + ")*x - (" +
                            std::to_string(off(rng)) + "))";
    f = f * toricsolve::parse_poly(fac, xy);
  }
  if (extra(rng) == 0) f = f * toricsolve::parse_poly("y^2+x^2+1", xy);
  return f;
}

}  // namespace suites
