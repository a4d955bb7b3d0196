#include "focal/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <unordered_map>

#include "focal/error.hpp"
#include "focal/measures.hpp"

namespace focal {

namespace {

constexpr std::size_t kPairGridPoints = 2001;
constexpr double kPairEdge = 1e-9;
constexpr double kRefineTolerance = 1e-12;
constexpr std::size_t kRandomStarts = 48;
constexpr double kMinStep = 1e-10;
constexpr std::uint64_t kStartSeed = 0x5eed'ce11'0f0c'a1ULL;

double cell_objective(const std::vector<double> &mass, const std::vector<double> &t,
                      double gamma) {
  double total = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (mass[i] > 0.0) total += mass[i] * focal_loss(t[i], gamma);
  }
  return total;
}

double pair_objective(double w0, double w1, double t, double gamma) {
  return w0 * focal_loss(t, gamma) + w1 * focal_loss(1.0 - t, gamma);
}

// Global 1-D search over the mass given to the first member.
std::pair<double, double> solve_pair(double w0, double w1, double gamma) {
  const double span = 1.0 - 2.0 * kPairEdge;
  const double h = span / static_cast<double>(kPairGridPoints - 1);
  std::vector<double> grid(kPairGridPoints);
  for (std::size_t i = 0; i < kPairGridPoints; ++i) {
    grid[i] = pair_objective(w0, w1, kPairEdge + static_cast<double>(i) * h, gamma);
  }
  std::vector<std::size_t> idx(kPairGridPoints);
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::partial_sort(idx.begin(), idx.begin() + 3, idx.end(),
                    [&grid](std::size_t a, std::size_t b) {
                      return grid[a] < grid[b] || (grid[a] == grid[b] && a < b);
                    });

  // The conditional distribution is optimal at gamma = 0 and is what the
  // greedy code uses, so it always competes.
  double best_t = w0 / (w0 + w1);
  double best_v = pair_objective(w0, w1, best_t, gamma);
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t i = idx[k];
    double lo = kPairEdge + static_cast<double>(i == 0 ? 0 : i - 1) * h;
    double hi = kPairEdge + static_cast<double>(std::min(i + 1, kPairGridPoints - 1)) * h;
    while (hi - lo > kRefineTolerance) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (pair_objective(w0, w1, m1, gamma) < pair_objective(w0, w1, m2, gamma)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    for (double t : {0.5 * (lo + hi), kPairEdge + static_cast<double>(i) * h}) {
      const double v = pair_objective(w0, w1, t, gamma);
      if (v < best_v) {
        best_v = v;
        best_t = t;
      }
    }
  }
  return {best_t, best_v};
}

// Pairwise mass transfers with a halving step; stays on the simplex.
double descend(const std::vector<double> &mass, std::vector<double> &t, double gamma) {
  const std::size_t k = t.size();
  double value = cell_objective(mass, t, gamma);
  double step = 0.1;
  while (step >= kMinStep) {
    bool improved = false;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const double delta = std::min(step, t[j]);
        if (delta <= 0.0) continue;
        const double ti = t[i];
        const double tj = t[j];
        t[i] = ti + delta;
        t[j] = tj - delta;
        const double v = cell_objective(mass, t, gamma);
        if (v < value) {
          value = v;
          improved = true;
        } else {
          t[i] = ti;
          t[j] = tj;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return value;
}

CellReconstruction solve_positive(const std::vector<double> &mass, double gamma) {
  const std::size_t k = mass.size();
  if (k == 1) return {{1.0}, 0.0, true};
  if (k == 2) {
    const auto [t, v] = solve_pair(mass[0], mass[1], gamma);
    return {{t, 1.0 - t}, v, true};
  }

  double total = 0.0;
  for (double w : mass) total += w;
  std::vector<std::vector<double>> starts;
  starts.reserve(kRandomStarts + 2);
  {
    std::vector<double> conditional(k);
    for (std::size_t i = 0; i < k; ++i) conditional[i] = mass[i] / total;
    starts.push_back(std::move(conditional));
  }
  starts.emplace_back(k, 1.0 / static_cast<double>(k));
  std::mt19937_64 rng(kStartSeed);
  std::exponential_distribution<double> expo(1.0);
  for (std::size_t s = 0; s < kRandomStarts; ++s) {
    std::vector<double> p(k);
    double sum = 0.0;
    for (double &v : p) sum += (v = expo(rng));
    for (double &v : p) v /= sum;
    starts.push_back(std::move(p));
  }

  CellReconstruction best{starts.front(), cell_objective(mass, starts.front(), gamma), false};
  for (auto &t : starts) {
    const double v = descend(mass, t, gamma);
    if (v < best.value) best = {t, v, false};
  }
  // gamma = 0 is plain log loss, whose optimum is the conditional distribution.
  if (gamma == 0.0) best.certified = true;
  return best;
}

} // namespace

CellReconstruction optimal_cell_reconstruction(const std::vector<CellWeight> &weights,
                                               double gamma) {
  (void)FocalParams{gamma};
  if (weights.empty()) throw ValidationError("cell reconstruction: empty cell");
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].mass < 0.0) throw ValidationError("cell reconstruction: negative mass");
    if (weights[i].mass > 0.0) positive.push_back(i);
  }
  CellReconstruction out{std::vector<double>(weights.size(), 0.0), 0.0, true};
  if (positive.empty()) {
    std::fill(out.probs.begin(), out.probs.end(), 1.0 / static_cast<double>(weights.size()));
    return out;
  }
  std::vector<double> mass;
  for (std::size_t i : positive) mass.push_back(weights[i].mass);
  CellReconstruction inner = solve_positive(mass, gamma);
  for (std::size_t k = 0; k < positive.size(); ++k) out.probs[positive[k]] = inner.probs[k];
  out.value = inner.value;
  out.certified = inner.certified;
  return out;
}

OracleResult exhaustive_dstar(const Pmf &r, std::size_t m, double gamma) {
  (void)FocalParams{gamma};
  if (m == 0) throw ValidationError("exhaustive_dstar: code size must be positive");
  const std::size_t n = r.size();
  if (n > kOracleMaxAlphabet) {
    throw GuardRailError("exhaustive_dstar: alphabet of " + std::to_string(n) +
                         " symbols exceeds the limit of " + std::to_string(kOracleMaxAlphabet));
  }
  if (std::pow(static_cast<double>(m), static_cast<double>(n)) > kOracleMaxFunctions) {
    throw GuardRailError("exhaustive_dstar: m^|X| exceeds " +
                         std::to_string(static_cast<long long>(kOracleMaxFunctions)));
  }
  const std::size_t max_cells = std::min(m, n);

  std::unordered_map<unsigned, CellReconstruction> memo;
  auto solve_cell = [&](unsigned subset) -> const CellReconstruction & {
    auto it = memo.find(subset);
    if (it != memo.end()) return it->second;
    std::vector<CellWeight> weights;
    for (std::size_t a = 0; a < n; ++a) {
      if (subset & (1u << a)) weights.push_back({a, r[a]});
    }
    return memo.emplace(subset, optimal_cell_reconstruction(weights, gamma)).first->second;
  };

  // Restricted-growth strings in lexicographic order.
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  std::vector<std::size_t> best_rgs;
  double best_value = kInfinity;
  bool best_certified = true;
  std::vector<unsigned> masks;
  while (true) {
    const std::size_t cells = prefix_max[n - 1] + 1;
    masks.assign(cells, 0u);
    for (std::size_t a = 0; a < n; ++a) masks[rgs[a]] |= 1u << a;
    double total = 0.0;
    bool certified = true;
    for (unsigned mask : masks) {
      const CellReconstruction &c = solve_cell(mask);
      total += c.value;
      certified = certified && c.certified;
    }
    if (total < best_value) {
      best_value = total;
      best_rgs = rgs;
      best_certified = certified;
    }

    // Advance: bump the rightmost position that can still grow.
    bool advanced = false;
    for (std::size_t pos = n; pos-- > 1;) {
      const std::size_t limit = std::min(prefix_max[pos - 1] + 1, max_cells - 1);
      if (rgs[pos] < limit) {
        ++rgs[pos];
        prefix_max[pos] = std::max(prefix_max[pos - 1], rgs[pos]);
        for (std::size_t a = pos + 1; a < n; ++a) {
          rgs[a] = 0;
          prefix_max[a] = prefix_max[pos];
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  OracleResult result{best_value, best_rgs, {}, best_certified};
  const std::size_t cells = *std::max_element(best_rgs.begin(), best_rgs.end()) + 1;
  for (std::size_t c = 0; c < cells; ++c) {
    unsigned mask = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (best_rgs[a] == c) mask |= 1u << a;
    }
    const CellReconstruction &rec = solve_cell(mask);
    std::vector<double> full(n, 0.0);
    std::size_t k = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (mask & (1u << a)) full[a] = rec.probs[k++];
    }
    result.best_reconstructions.push_back(Pmf::from_values(full, true));
  }
  return result;
}

double simplex_grid_max_focal_entropy(std::size_t alphabet_size, double gamma, double step) {
  (void)FocalParams{gamma};
  if (alphabet_size < 2 || alphabet_size > 4) {
    throw ValidationError("simplex grid: alphabet size must be 2, 3 or 4");
  }
  if (!(step >= 0.005) || step > 1.0) {
    throw ValidationError("simplex grid: step must lie in [0.005, 1]");
  }
  const double units_real = 1.0 / step;
  const auto units = static_cast<std::size_t>(std::llround(units_real));
  if (std::abs(units_real - static_cast<double>(units)) > 1e-6) {
    throw ValidationError("simplex grid: step must divide 1");
  }

  // Enumerate compositions of `units` into alphabet_size parts.
  std::vector<std::size_t> parts(alphabet_size, 0);
  double best = -kInfinity;
  auto evaluate = [&] {
    double sum = 0.0;
    for (std::size_t i = 0; i < alphabet_size; ++i) {
      sum += focal_power(static_cast<double>(parts[i]) / static_cast<double>(units), gamma);
    }
    best = std::max(best, std::log2(sum));
  };
  auto recurse = [&](auto &self, std::size_t index, std::size_t remaining) -> void {
    if (index + 1 == alphabet_size) {
      parts[index] = remaining;
      evaluate();
      return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
      parts[index] = v;
      self(self, index + 1, remaining - v);
    }
  };
  recurse(recurse, 0, units);
  return best;
}

} // namespace focal
