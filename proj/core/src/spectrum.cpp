#include "focal/spectrum.hpp"

#include <algorithm>

#include "focal/error.hpp"

namespace focal {

Spectrum Spectrum::from_atoms(std::vector<Atom> atoms) {
  std::erase_if(atoms, [](const Atom &a) { return !(a.mass > 0.0); });
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom &a, const Atom &b) { return a.value < b.value; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const Atom &a : atoms) {
    // Clusters are anchored at their smallest value so merging cannot drift.
    if (!merged.empty() && a.value - merged.back().value <= kSpectrumMergeTolerance) {
      merged.back().mass += a.mass;
    } else {
      merged.push_back(a);
    }
  }
  return Spectrum(std::move(merged));
}

double Spectrum::total_mass() const noexcept {
  double total = 0.0;
  for (const Atom &a : atoms_) total += a.mass;
  return total;
}

double Spectrum::mean() const noexcept {
  double m = 0.0;
  for (const Atom &a : atoms_) m += a.mass * a.value;
  return m;
}

Spectrum Spectrum::convolve(const Spectrum &other) const {
  std::vector<Atom> out;
  out.reserve(atoms_.size() * other.atoms_.size());
  for (const Atom &a : atoms_) {
    for (const Atom &b : other.atoms_) {
      out.push_back({a.value + b.value, a.mass * b.mass});
    }
  }
  return from_atoms(std::move(out));
}

Spectrum information_spectrum(const Pmf &r, const Pmf &f) {
  if (r.size() != f.size()) {
    throw ValidationError("spectrum: source and auxiliary distributions differ in length");
  }
  std::vector<Spectrum::Atom> atoms;
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (r[x] == 0.0) continue;
    const double iota = information(f, x);
    if (iota == kInfinity) {
      throw ValidationError("spectrum: symbol " + std::to_string(x) +
                            " has positive source mass but zero auxiliary mass");
    }
    atoms.push_back({iota, r[x]});
  }
  return Spectrum::from_atoms(std::move(atoms));
}

Spectrum iid_spectrum(const Pmf &r, const Pmf &f, unsigned n) {
  if (n == 0) throw ValidationError("spectrum: blocklength must be positive");
  const Spectrum letter = information_spectrum(r, f);
  Spectrum acc = letter;
  for (unsigned i = 1; i < n; ++i) acc = acc.convolve(letter);
  return acc;
}

} // namespace focal
