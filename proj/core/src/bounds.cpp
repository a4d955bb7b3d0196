#include "focal/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "focal/code.hpp"
#include "focal/error.hpp"
#include "focal/measures.hpp"
#include "focal/spectrum.hpp"

namespace focal {

namespace {

void require_common(const Pmf &r, const Pmf &f, std::size_t m, double gamma) {
  if (r.size() != f.size()) throw ValidationError("bounds: source and auxiliary lengths differ");
  if (m == 0) throw ValidationError("bounds: code size must be positive");
  (void)FocalParams{gamma};
}

// Symbols with iota_f(x) > log2 m, compared on the computed information.
template <typename Term>
double sum_over_event(const Pmf &r, const Pmf &f, double log_m, Term term) {
  double total = 0.0;
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (r[x] == 0.0) continue;
    const double iota = information(f, x);
    if (!(iota > log_m)) continue;
    if (iota == kInfinity) return kInfinity;
    total += r[x] * term(iota - log_m);
  }
  return total;
}

} // namespace

double converse_bound(const Pmf &r, std::size_t m, double gamma) {
  if (m == 0) throw ValidationError("converse_bound: code size must be positive");
  const double h = focal_entropy_max(r.size(), gamma).value;
  return std::max(0.0, shannon_entropy(r) - std::log2(static_cast<double>(m)) - h);
}

double ach_bound_log(const Pmf &r, const Pmf &f, std::size_t m, double gamma) {
  require_common(r, f, m, gamma);
  return sum_over_event(r, f, std::log2(static_cast<double>(m)), [gamma](double excess) {
    const double t = std::exp2(excess);
    return std::pow(t / (t + 1.0), gamma) * std::log2(1.0 + t);
  });
}

double ach_bound_linear(const Pmf &r, const Pmf &f, std::size_t m, double gamma) {
  require_common(r, f, m, gamma);
  return sum_over_event(r, f, std::log2(static_cast<double>(m)), [gamma](double excess) {
    return std::pow(1.0 - 0.5 * std::exp2(-excess), gamma) * (excess + 1.0);
  });
}

double ach_bound_n_letter(const Pmf &r, const Pmf &f, unsigned n, double rate, double gamma) {
  if (n == 0) throw ValidationError("ach_bound_n_letter: blocklength must be positive");
  if (!(rate > 0.0)) throw ValidationError("ach_bound_n_letter: rate must be positive");
  (void)FocalParams{gamma};
  const Spectrum spectrum = iid_spectrum(r, f, n);
  const double log_m = static_cast<double>(n) * rate;
  double total = 0.0;
  for (const Spectrum::Atom &atom : spectrum.atoms()) {
    if (!(atom.value > log_m)) continue;
    const double excess = atom.value - log_m;
    total += atom.mass * std::pow(1.0 - 0.5 * std::exp2(-excess), gamma) * (excess + 1.0);
  }
  return total / static_cast<double>(n);
}

double asymptotic_distortion_rate(const Pmf &r, double rate) {
  if (!(rate >= 0.0)) throw ValidationError("asymptotic_distortion_rate: rate must be >= 0");
  return std::max(0.0, shannon_entropy(r) - rate);
}

BoundReport make_bound_report(const Pmf &r, const Pmf &f, std::size_t m, double gamma,
                              VisitOrder order) {
  BoundReport report;
  report.m = m;
  report.gamma = gamma;
  report.converse = converse_bound(r, m, gamma);
  report.ach_eq16 = ach_bound_log(r, f, m, gamma);
  report.ach_eq17 = ach_bound_linear(r, f, m, gamma);
  report.exact_code = exact_code_distortion(r, f, m, gamma, order);
  return report;
}

void check_bound_report(const BoundReport &report, std::size_t alphabet_size, double slack) {
  auto fail = [&report](const char *what) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "bound ordering violated (" << what << ") at m=" << report.m
        << " gamma=" << report.gamma << ": converse=" << report.converse
        << " exact=" << report.exact_code << " eq16=" << report.ach_eq16
        << " eq17=" << report.ach_eq17;
    if (report.fx_optimized) msg << " fx_optimized=" << *report.fx_optimized;
    throw InvariantViolation(msg.str());
  };
  if (report.converse < 0.0) fail("converse < 0");
  if (report.converse > report.exact_code + slack) fail("converse > exact");
  if (report.fx_optimized && report.converse > *report.fx_optimized + slack) {
    fail("converse > fx_optimized");
  }
  if (alphabet_size > report.m) {
    if (report.exact_code > report.ach_eq16 + slack) fail("exact > eq16");
    if (report.ach_eq16 > report.ach_eq17 + slack) fail("eq16 > eq17");
  }
}

} // namespace focal
