#pragma once

#include <cstddef>
#include <cstdint>

#include "focal/code.hpp"
#include "focal/pmf.hpp"

namespace focal {

struct FxSearchConfig {
  unsigned starts = 32;
  /// Proposal rounds per start.
  unsigned iterations = 400;
  std::uint64_t seed = 0;
  /// Step multiplier after a rejected round; its inverse is applied after an accepted one.
  double step_decay = 0.9;
  /// Compressor visit order the objective is evaluated with.
  VisitOrder visit_order = VisitOrder::descending;
};

struct FxResult {
  Pmf f;
  double value;
};

/// Searches auxiliary distributions f for the smallest exact_code_distortion(r, f, m, gamma).
///
/// f is parameterized as softmax(z). Start 0 is f = r itself, later starts
/// perturb log r with a stream seeded by (config.seed, start index). Each round
/// perturbs a sparse random subset of coordinates and tries both signs.
/// The returned value never exceeds exact_code_distortion(r, r, m, gamma, config.visit_order).
FxResult optimize_fx(const Pmf &r, std::size_t m, double gamma, const FxSearchConfig &config = {});

} // namespace focal
