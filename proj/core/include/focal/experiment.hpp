#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "focal/bounds.hpp"
#include "focal/fx_optimizer.hpp"
#include "focal/pmf.hpp"

namespace focal {

enum class FxMode { source, uniform, file, optimize };

/// How the auxiliary distribution of the achievability bounds is chosen.
struct FxChoice {
  FxMode mode = FxMode::source;
  std::string path; ///< only for FxMode::file
};

/// "source" | "uniform" | "file:PATH" | "optimize".
FxChoice parse_fx_choice(std::string_view text);

/// Auxiliary distribution used by the closed-form bounds. Optimization starts
/// from r, so FxMode::optimize resolves to r here.
Pmf resolve_fx(const FxChoice &choice, const Pmf &r, bool renormalize = false);

/// Inclusive arithmetic progression; count == 1 yields {start}.
std::vector<double> linspace(double start, double stop, std::size_t count);

/// "G" for a single value or "START:STOP:COUNT". All values must be >= 0.
std::vector<double> parse_gamma_grid(std::string_view text);

/// 15 significant digits, shortest form, independent of the C locale.
std::string format_real(double value);

/// Mixes a row index into a sweep seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Every bound for one point. fx_optimized is filled only for FxMode::optimize;
/// the exact and optimized values use search.visit_order.
BoundReport run_point(const Source &source, std::size_t m, double gamma, const FxChoice &fx,
                      std::uint64_t seed, const FxSearchConfig &search = {},
                      bool renormalize = false);

enum class Figure { fig1, fig2, fig4, custom };

Figure parse_figure(std::string_view text);

struct SweepConfig {
  Figure figure = Figure::custom;
  /// Empty selects the figure default (fig4: binomial:100:0.1).
  std::string source_spec;
  /// Empty selects the figure default (fig4: 8).
  std::vector<std::size_t> m_grid;
  /// Empty selects the figure default.
  std::string gamma_grid;
  /// Custom sweeps with a non-empty n grid tabulate the n-letter bound at `rate`.
  std::vector<unsigned> n_grid;
  double rate = 0.0;
  FxChoice fx;
  std::uint64_t seed = 0;
  std::string output_path;
  bool renormalize = false;
  FxSearchConfig search;
};

/// Renders the sweep as CSV text with a header row.
std::string render_sweep(const SweepConfig &config);

/// Renders the sweep and writes it to config.output_path.
void run_sweep(const SweepConfig &config);

/// Consistency check of the binomial source behind the fig4 sweep.
struct SourceAudit {
  unsigned trials;
  double stated_p;
  double stated_entropy;
  double implied_entropy;
  double gap;
  bool inconsistent;
  /// Largest symbol probability of the stated source, compared with 1/m.
  double stated_max_prob;
  double closest_p;
  double closest_entropy;
};

/// Entropy the fig4 data implies: converse at gamma = 0 plus log2(8).
inline constexpr double kFig4ImpliedEntropy = 3.86897353302468;

/// Compares the entropy of Binomial(trials, stated_p) with `implied_entropy`
/// and scans p over [0.05, 0.5] in steps of 0.005 for the closest match.
SourceAudit audit_binomial_source(unsigned trials = 100, double stated_p = 0.1,
                                  double implied_entropy = kFig4ImpliedEntropy,
                                  double flag_gap = 0.1);

std::string render_audit(const SourceAudit &audit);

} // namespace focal
