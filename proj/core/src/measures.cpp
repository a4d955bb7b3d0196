#include "focal/measures.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "focal/code.hpp"
#include "focal/error.hpp"

namespace focal {

namespace {

void require_gamma(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw ValidationError("focal: gamma must be a finite value >= 0");
  }
}

constexpr std::size_t kQGridPoints = 10001;
constexpr double kQTolerance = 1e-12;

} // namespace

FocalParams::FocalParams(double gamma) : gamma_(gamma) { require_gamma(gamma); }

double focal_loss(double t, double gamma) {
  if (t >= 1.0) return 0.0;
  if (t <= 0.0) return kInfinity;
  return std::pow(1.0 - t, gamma) * -std::log2(t);
}

double focal_distortion(std::size_t symbol, const Pmf &phat, double gamma) {
  require_gamma(gamma);
  return focal_loss(phat.at(symbol), gamma);
}

double expected_distortion(const Pmf &r, const Code &code, double gamma) {
  require_gamma(gamma);
  if (r.size() != code.alphabet_size()) {
    throw ValidationError("expected_distortion: code alphabet does not match the source");
  }
  double total = 0.0;
  for (std::size_t a = 0; a < r.size(); ++a) {
    if (r[a] == 0.0) continue;
    total += r[a] * focal_loss(code.reconstruction_prob(a), gamma);
  }
  return total;
}

double focal_power(double t, double gamma) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return std::exp2(std::pow(1.0 - t, gamma) * std::log2(t));
}

double focal_entropy(const Pmf &p, double gamma) {
  require_gamma(gamma);
  double sum = 0.0;
  for (double v : p) sum += focal_power(v, gamma);
  return std::log2(sum);
}

double structured_focal_objective(std::size_t d, double q, double gamma) {
  const double dd = static_cast<double>(d);
  return std::log2(focal_power(1.0 - q, gamma) + dd * focal_power(q / dd, gamma));
}

HGammaMax focal_entropy_max(std::size_t alphabet_size, double gamma) {
  require_gamma(gamma);
  if (alphabet_size < 2) {
    throw ValidationError("focal_entropy_max: alphabet size must be at least 2");
  }
  HGammaMax best{-kInfinity, 1, 0.0};
  const double h = 1.0 / static_cast<double>(kQGridPoints - 1);
  for (std::size_t d = 1; d < alphabet_size; ++d) {
    std::size_t best_i = 0;
    double best_v = -kInfinity;
    for (std::size_t i = 0; i < kQGridPoints; ++i) {
      const double v = structured_focal_objective(d, static_cast<double>(i) * h, gamma);
      if (v > best_v) {
        best_v = v;
        best_i = i;
      }
    }
    // Ternary refinement on the bracket around the best grid point.
    double lo = best_i == 0 ? 0.0 : static_cast<double>(best_i - 1) * h;
    double hi = best_i + 1 == kQGridPoints ? 1.0 : static_cast<double>(best_i + 1) * h;
    while (hi - lo > kQTolerance) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (structured_focal_objective(d, m1, gamma) < structured_focal_objective(d, m2, gamma)) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    double q = 0.5 * (lo + hi);
    double v = structured_focal_objective(d, q, gamma);
    if (best_v >= v) {
      q = static_cast<double>(best_i) * h;
      v = best_v;
    }
    if (v > best.value) best = {v, d, q};
  }
  return best;
}

Pmf structured_maximizer(std::size_t alphabet_size, const HGammaMax &max) {
  if (max.d_star < 1 || max.d_star >= alphabet_size) {
    throw ValidationError("structured_maximizer: d_star outside [1, alphabet_size - 1]");
  }
  std::vector<double> probs(alphabet_size, 0.0);
  const std::size_t first = alphabet_size - max.d_star - 1;
  probs[first] = 1.0 - max.q_star;
  for (std::size_t i = first + 1; i < alphabet_size; ++i) {
    probs[i] = max.q_star / static_cast<double>(max.d_star);
  }
  return Pmf::from_values(probs, false);
}

double focal_entropy_upper(double gamma) {
  require_gamma(gamma);
  return std::log2(1.0 + std::exp(std::max(1.0, gamma) / std::exp(1.0)));
}

int inflection_count(double gamma, std::size_t grid_size) {
  require_gamma(gamma);
  if (grid_size < 100) throw ValidationError("inflection_count: grid size must be at least 100");
  constexpr double lo = 1e-4;
  constexpr double hi = 1.0 - 1e-4;
  constexpr double ignore_below = 1e-12;
  const double step = (hi - lo) / static_cast<double>(grid_size - 1);
  std::vector<double> f(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    f[i] = focal_power(lo + static_cast<double>(i) * step, gamma);
  }
  int changes = 0;
  int last_sign = 0;
  for (std::size_t i = 1; i + 1 < grid_size; ++i) {
    const double second = f[i - 1] - 2.0 * f[i] + f[i + 1];
    if (std::abs(second) < ignore_below) continue;
    const int sign = second > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

} // namespace focal
