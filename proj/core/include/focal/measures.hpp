#pragma once

#include <cstddef>

#include "focal/pmf.hpp"

namespace focal {

class Code;

/// Focus parameter of the focal loss; always >= 0.
class FocalParams {
public:
  explicit FocalParams(double gamma);
  double gamma() const noexcept { return gamma_; }

private:
  double gamma_;
};

/// (1 - t)^gamma * log2(1 / t) for a reconstruction probability t.
/// Zero at t == 1 for every gamma, kInfinity at t == 0.
double focal_loss(double reconstruction_prob, double gamma);

/// Focal loss of symbol x against the soft reconstruction phat.
double focal_distortion(std::size_t symbol, const Pmf &phat, double gamma);

/// Average focal loss of `code` when symbols are drawn from r.
double expected_distortion(const Pmf &r, const Code &code, double gamma);

/// t^((1 - t)^gamma), continuous at both ends of [0, 1].
double focal_power(double t, double gamma);

/// log2 sum_x p(x)^((1 - p(x))^gamma).
double focal_entropy(const Pmf &p, double gamma);

struct HGammaMax {
  double value;
  std::size_t d_star;
  double q_star;
};

/// Objective whose maximum over d in [1, size-1] and q in [0, 1] is the
/// largest focal entropy on an alphabet of the given size: one atom of
/// mass 1 - q and d atoms of mass q / d.
double structured_focal_objective(std::size_t d, double q, double gamma);

/// Maximum of focal_entropy over all distributions on `alphabet_size` symbols.
HGammaMax focal_entropy_max(std::size_t alphabet_size, double gamma);

/// The structured maximizer as a full distribution: zeros first, then the
/// 1 - q atom, then d atoms of q / d.
Pmf structured_maximizer(std::size_t alphabet_size, const HGammaMax &max);

/// log2(1 + e^(max(1, gamma) / e)), an alphabet-free bound on focal_entropy_max.
double focal_entropy_upper(double gamma);

/// Sign changes of the second difference of t^((1-t)^gamma) over a uniform
/// grid on [1e-4, 1 - 1e-4]; differences below 1e-12 in magnitude are skipped.
int inflection_count(double gamma, std::size_t grid_size);

} // namespace focal
