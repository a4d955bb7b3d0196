#pragma once

#include <cstddef>
#include <optional>

#include "focal/code.hpp"
#include "focal/pmf.hpp"

namespace focal {

/// Every bound at one (code size, gamma) point, in bits.
struct BoundReport {
  std::size_t m = 1;
  double gamma = 0.0;
  double converse = 0.0;
  double ach_eq16 = 0.0;   ///< log(1 + 2^(iota - log M)) form
  double ach_eq17 = 0.0;   ///< linear (iota - log M + 1) form
  double exact_code = 0.0; ///< exact distortion of the greedy code
  std::optional<double> fx_optimized;
};

/// [H(r) - log2 m - h_gamma(|X|)]^+.
double converse_bound(const Pmf &r, std::size_t m, double gamma);

/// E_r[1{f(X) < 1/m} (t/(t+1))^gamma log2(1 + t)] with t = 1/(m f(X)).
double ach_bound_log(const Pmf &r, const Pmf &f, std::size_t m, double gamma);

/// E_r[1{f(X) < 1/m} (1 - m f(X)/2)^gamma (iota_f(X) - log2 m + 1)].
double ach_bound_linear(const Pmf &r, const Pmf &f, std::size_t m, double gamma);

/// Per-letter linear bound at blocklength n with 2^(n rate) messages, using
/// the exact spectrum of the n-letter information and product auxiliary f^n.
double ach_bound_n_letter(const Pmf &r, const Pmf &f, unsigned n, double rate, double gamma);

/// [H(r) - rate]^+; the focus parameter has no effect in the limit.
double asymptotic_distortion_rate(const Pmf &r, double rate);

/// Fills every closed-form and exact field; fx_optimized is left empty.
BoundReport make_bound_report(const Pmf &r, const Pmf &f, std::size_t m, double gamma,
                              VisitOrder order = VisitOrder::descending);

/// Throws InvariantViolation unless converse <= exact_code (and the optimized
/// value, if present) and, when the alphabet exceeds m, exact_code <= ach_eq16 <= ach_eq17.
void check_bound_report(const BoundReport &report, std::size_t alphabet_size,
                        double slack = 1e-12);

} // namespace focal
