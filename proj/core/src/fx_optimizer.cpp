#include "focal/fx_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "focal/code.hpp"
#include "focal/error.hpp"
#include "focal/measures.hpp"

namespace focal {

namespace {

constexpr double kInitialStep = 0.5;
constexpr double kMaxStep = 2.0;
constexpr double kMinStep = 1e-4;
constexpr double kStartSpread = 1.0;
constexpr double kExpectedCoordinates = 3.0;

Pmf softmax(const std::vector<double> &z) {
  const double top = *std::max_element(z.begin(), z.end());
  std::vector<double> w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) w[i] = std::exp(z[i] - top);
  return Pmf::from_values(w, true);
}

std::vector<double> log_start(const Pmf &r) {
  double smallest = 1.0;
  for (double v : r) {
    if (v > 0.0) smallest = std::min(smallest, v);
  }
  const double floor = std::log(smallest) - 10.0;
  std::vector<double> z(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) z[i] = r[i] > 0.0 ? std::log(r[i]) : floor;
  return z;
}

} // namespace

FxResult optimize_fx(const Pmf &r, std::size_t m, double gamma, const FxSearchConfig &config) {
  if (config.starts < 1 || config.iterations < 1) {
    throw ValidationError("optimize_fx: starts and iterations must be positive");
  }
  if (!(config.step_decay > 0.0 && config.step_decay < 1.0)) {
    throw ValidationError("optimize_fx: step_decay must lie in (0, 1)");
  }
  if (m == 0) throw ValidationError("optimize_fx: code size must be positive");
  (void)FocalParams{gamma};

  FxResult best{r, exact_code_distortion(r, r, m, gamma, config.visit_order)};
  if (r.size() <= m || best.value == 0.0) return best;

  const std::size_t n = r.size();
  const double include_prob = std::min(1.0, kExpectedCoordinates / static_cast<double>(n));
  const std::vector<double> base = log_start(r);

  for (unsigned start = 0; start < config.starts; ++start) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                      static_cast<std::uint32_t>(config.seed >> 32), start};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::bernoulli_distribution include(include_prob);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);

    std::vector<double> z = base;
    if (start > 0) {
      for (double &v : z) v += kStartSpread * normal(rng);
    }
    Pmf current = softmax(z);
    double value = exact_code_distortion(r, current, m, gamma, config.visit_order);
    double step = kInitialStep;

    std::vector<double> delta(n);
    std::vector<double> trial(n);
    for (unsigned it = 0; it < config.iterations; ++it) {
      std::fill(delta.begin(), delta.end(), 0.0);
      delta[pick(rng)] = step * normal(rng);
      for (std::size_t i = 0; i < n; ++i) {
        if (delta[i] == 0.0 && include(rng)) delta[i] = step * normal(rng);
      }
      bool accepted = false;
      for (double sign : {1.0, -1.0}) {
        for (std::size_t i = 0; i < n; ++i) trial[i] = z[i] + sign * delta[i];
        Pmf candidate = softmax(trial);
        const double v = exact_code_distortion(r, candidate, m, gamma, config.visit_order);
        if (v < value) {
          z = trial;
          current = std::move(candidate);
          value = v;
          accepted = true;
          break;
        }
      }
      step = accepted ? std::min(kMaxStep, step / config.step_decay)
                      : std::max(kMinStep, step * config.step_decay);
    }
    if (value < best.value) best = {std::move(current), value};
  }
  return best;
}

} // namespace focal
