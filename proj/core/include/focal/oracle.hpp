#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "focal/pmf.hpp"

namespace focal {

struct CellWeight {
  std::size_t symbol;
  double mass;
};

struct CellReconstruction {
  /// Reconstruction probability per cell member, aligned with the input weights.
  std::vector<double> probs;
  double value;
  /// False when the inner search was a multi-start local method.
  bool certified;
};

/// Minimizes sum_a mass(a) (1 - t_a)^gamma log2(1/t_a) over probability vectors
/// t supported on the cell.
CellReconstruction optimal_cell_reconstruction(const std::vector<CellWeight> &weights,
                                               double gamma);

struct OracleResult {
  double value;
  /// Cell index per symbol (restricted-growth string).
  std::vector<std::size_t> best_partition;
  /// One full-alphabet reconstruction per cell.
  std::vector<Pmf> best_reconstructions;
  bool certified;
};

inline constexpr std::size_t kOracleMaxAlphabet = 10;
inline constexpr double kOracleMaxFunctions = 1e6;

/// Smallest average focal loss over all codes with at most m messages,
/// by enumerating set partitions of the alphabet. Throws GuardRailError when
/// the alphabet exceeds kOracleMaxAlphabet or m^|X| exceeds kOracleMaxFunctions.
OracleResult exhaustive_dstar(const Pmf &r, std::size_t m, double gamma);

/// Brute-force maximum of focal_entropy over the lattice of distributions whose
/// entries are multiples of `step`. Alphabet sizes 2..4 only.
double simplex_grid_max_focal_entropy(std::size_t alphabet_size, double gamma, double step);

} // namespace focal
