#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace focal {

/// Marks an information or distortion value that is infinite. Never a large finite number.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline constexpr double kPmfSumTolerance = 1e-9;

/// Probability mass function over symbols 0..size()-1.
///
/// Entries are non-negative and sum to one within kPmfSumTolerance. Symbols
/// with zero mass stay in the alphabet so indices remain stable.
class Pmf {
public:
  /// Validates `values`. With `renormalize` the entries are divided by their
  /// sum; otherwise the sum must already be within tolerance of one.
  static Pmf from_values(std::span<const double> values, bool renormalize = false);
  static Pmf from_values(std::initializer_list<double> values, bool renormalize = false) {
    return from_values(std::span<const double>(values.begin(), values.size()), renormalize);
  }

  static Pmf uniform(std::size_t size);
  static Pmf point_mass(std::size_t size, std::size_t symbol);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t symbol) const { return probs_[symbol]; }
  double at(std::size_t symbol) const;
  std::span<const double> probs() const noexcept { return probs_; }

  auto begin() const noexcept { return probs_.begin(); }
  auto end() const noexcept { return probs_.end(); }

  bool operator==(const Pmf &) const = default;

private:
  explicit Pmf(std::vector<double> probs) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

/// R(x) = p(x) q(x) / sum_a p(a) q(a).
Pmf reweight(const Pmf &p, const Pmf &q);

/// Raw source distribution with an optional weight distribution folded in.
class Source {
public:
  explicit Source(Pmf p);
  Source(Pmf p, Pmf q);

  const Pmf &raw() const noexcept { return p_; }
  const std::optional<Pmf> &weight() const noexcept { return q_; }
  /// The distribution all bounds are stated against.
  const Pmf &reweighted() const noexcept { return r_; }
  std::size_t size() const noexcept { return r_.size(); }

private:
  Pmf p_;
  std::optional<Pmf> q_;
  Pmf r_;
};

/// Binomial(trials, success_prob), evaluated in log space.
Pmf binomial_pmf(unsigned trials, double success_prob);

/// [1 - p, p].
Pmf bernoulli_pmf(double success_prob);

/// Shannon entropy in bits; zero-mass symbols contribute nothing.
double shannon_entropy(const Pmf &p);

/// log2(1 / f(x)); kInfinity when f(x) == 0.
double information(const Pmf &f, std::size_t symbol);

/// Parses the PMF text format: values one per line or separated by commas
/// and/or whitespace, '#' comment lines ignored. Tokens may be decimals or
/// simple fractions such as "2/3".
std::vector<double> parse_pmf_values(std::string_view text);
Pmf parse_pmf_text(std::string_view text, bool renormalize = false);
Pmf read_pmf_file(const std::string &path, bool renormalize = false);

} // namespace focal
