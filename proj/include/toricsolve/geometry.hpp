#pragma once

#include <toricsolve/poly.hpp>
#include <toricsolve/unired.hpp>

#include <cstdint>
#include <vector>

namespace toricsolve {

/// Deterministic probe tuples: entry e of tuple j is 1 + g^(seed + j*len + e)
/// mod R for a primitive root g of the prime R, so all entries across all
/// tuples are distinct and lie in [2, R]. R is the least prime >= 29 with
/// R > 4*degree_bound and R - 1 > count*len.
std::vector<std::vector<Int>> probe_sequence(std::size_t k, std::size_t count, std::size_t tuple_len,
                                             std::uint64_t seed = 0, std::size_t degree_bound = 0);

struct ProbeSystem {
  PolySystem base;
  std::size_t level = 0;
  std::vector<Int> weights;               ///< epsilon_1..epsilon_n
  std::vector<std::vector<Int>> forms;    ///< epsilon_(t,1..n), t = 1..level
  PolySystem G;                           ///< n combinations of f_1..f_m, l_1..l_level
  std::vector<SparsePoly> hyperplanes;    ///< l_t = epsilon_t . x - 1
};

ProbeSystem probe_system(const PolySystem& F, std::size_t level, const std::vector<Int>& tuple);

/// True when the RUR of the probe system certifies a root shared by F and
/// every l_t (gcd of h with the composed residues has positive degree).
bool probe_hits(const ProbeSystem& P);

struct DimensionOptions {
  std::size_t max_vars = 3;
  Int max_volume = 64;
  std::uint64_t seed = 0;
};

struct LevelVotes {
  std::size_t level = 0;
  std::size_t yes = 0, no = 0;
};

struct DimensionReport {
  long dimension = -1;
  std::size_t k = 0;           ///< total term count; 2k+1 probes per level
  std::vector<LevelVotes> levels;
};

DimensionReport dimension_report(const PolySystem& F, const DimensionOptions& opts = {});
/// -1 for the empty zero set, otherwise dim Z_F.
long dimension(const PolySystem& F, const DimensionOptions& opts = {});
bool feasible_c(const PolySystem& F, const DimensionOptions& opts = {});

}  // namespace toricsolve
