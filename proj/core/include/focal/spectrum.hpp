#pragma once

#include <cstddef>
#include <vector>

#include "focal/pmf.hpp"

namespace focal {

/// Atoms whose values are within this many bits of each other are merged.
inline constexpr double kSpectrumMergeTolerance = 1e-9;

/// Finite distribution of a real-valued information sum.
class Spectrum {
public:
  struct Atom {
    double value;
    double mass;
  };

  /// Sorts, merges values within kSpectrumMergeTolerance and drops zero-mass atoms.
  static Spectrum from_atoms(std::vector<Atom> atoms);

  const std::vector<Atom> &atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  double total_mass() const noexcept;
  double mean() const noexcept;

  /// Distribution of the sum of independent draws from *this and `other`.
  Spectrum convolve(const Spectrum &other) const;

private:
  explicit Spectrum(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  std::vector<Atom> atoms_;
};

/// Single-letter distribution of log2(1/f(X)) for X ~ r.
Spectrum information_spectrum(const Pmf &r, const Pmf &f);

/// Exact distribution of sum_{i=1..n} log2(1/f(X_i)) with X_i i.i.d. ~ r.
/// Throws ValidationError if a symbol with r(x) > 0 has f(x) == 0.
Spectrum iid_spectrum(const Pmf &r, const Pmf &f, unsigned n);

} // namespace focal
