#include "focal/pmf.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "focal/error.hpp"

namespace focal {

Pmf Pmf::from_values(std::span<const double> values, bool renormalize) {
  if (values.empty()) {
    throw ValidationError("pmf: at least one value is required");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      throw ValidationError("pmf: value at index " + std::to_string(i) + " is not finite");
    }
    if (v < 0.0) {
      throw ValidationError("pmf: negative value at index " + std::to_string(i));
    }
    total += v;
  }
  if (!(total > 0.0)) {
    throw ValidationError("pmf: total mass is zero");
  }
  std::vector<double> probs(values.begin(), values.end());
  if (renormalize) {
    for (double &v : probs) v /= total;
  } else if (std::abs(total - 1.0) > kPmfSumTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "pmf: values sum to " << total << ", expected 1";
    throw ValidationError(msg.str());
  }
  return Pmf(std::move(probs));
}

Pmf Pmf::uniform(std::size_t size) {
  if (size == 0) throw ValidationError("pmf: uniform over an empty alphabet");
  return Pmf(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

Pmf Pmf::point_mass(std::size_t size, std::size_t symbol) {
  if (symbol >= size) throw ValidationError("pmf: point mass outside the alphabet");
  std::vector<double> probs(size, 0.0);
  probs[symbol] = 1.0;
  return Pmf(std::move(probs));
}

double Pmf::at(std::size_t symbol) const {
  if (symbol >= probs_.size()) {
    throw ValidationError("pmf: symbol " + std::to_string(symbol) + " out of range");
  }
  return probs_[symbol];
}

Pmf reweight(const Pmf &p, const Pmf &q) {
  if (p.size() != q.size()) {
    throw ValidationError("reweight: source and weight lengths differ");
  }
  std::vector<double> r(p.size());
  double denom = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] = p[i] * q[i];
    denom += r[i];
  }
  if (!(denom > 0.0)) {
    throw ValidationError("reweight: source and weight have disjoint support");
  }
  for (double &v : r) v /= denom;
  return Pmf::from_values(r, false);
}

Source::Source(Pmf p) : p_(p), r_(std::move(p)) {}

Source::Source(Pmf p, Pmf q) : p_(std::move(p)), q_(std::move(q)), r_(reweight(p_, *q_)) {}

Pmf binomial_pmf(unsigned trials, double success_prob) {
  if (!(success_prob >= 0.0 && success_prob <= 1.0)) {
    throw ValidationError("binomial: success probability must lie in [0, 1]");
  }
  const std::size_t size = static_cast<std::size_t>(trials) + 1;
  if (success_prob == 0.0) return Pmf::point_mass(size, 0);
  if (success_prob == 1.0) return Pmf::point_mass(size, trials);

  const double n = trials;
  const double log_p = std::log(success_prob);
  const double log_q = std::log1p(-success_prob);
  const double log_n_fact = std::lgamma(n + 1.0);
  std::vector<double> probs(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double k = static_cast<double>(i);
    const double log_coeff = log_n_fact - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    probs[i] = std::exp(log_coeff + k * log_p + (n - k) * log_q);
  }
  // lgamma round-off leaves the sum a few ulps away from one.
  return Pmf::from_values(probs, true);
}

Pmf bernoulli_pmf(double success_prob) { return binomial_pmf(1, success_prob); }

double shannon_entropy(const Pmf &p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double information(const Pmf &f, std::size_t symbol) {
  const double v = f.at(symbol);
  if (v == 0.0) return kInfinity;
  return -std::log2(v);
}

namespace {

double parse_number(std::string_view token) {
  auto to_double = [token](std::string_view part) {
    double out = 0.0;
    const char *first = part.data();
    const char *last = part.data() + part.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) {
      throw ValidationError("pmf: cannot parse value '" + std::string(token) + "'");
    }
    return out;
  };
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return to_double(token);
  const double num = to_double(token.substr(0, slash));
  const double den = to_double(token.substr(slash + 1));
  if (den == 0.0) throw ValidationError("pmf: zero denominator in '" + std::string(token) + "'");
  return num / den;
}

} // namespace

std::vector<double> parse_pmf_values(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ',' || std::isspace(static_cast<unsigned char>(line[i])))) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ',' && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) values.push_back(parse_number(line.substr(i, j - i)));
      i = j;
    }
  }
  return values;
}

Pmf parse_pmf_text(std::string_view text, bool renormalize) {
  return Pmf::from_values(parse_pmf_values(text), renormalize);
}

Pmf read_pmf_file(const std::string &path, bool renormalize) {
  std::ifstream in(path);
  if (!in) throw ValidationError("pmf: cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pmf_text(buf.str(), renormalize);
}

} // namespace focal
