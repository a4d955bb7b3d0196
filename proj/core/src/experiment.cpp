#include "focal/experiment.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "focal/code.hpp"
#include "focal/error.hpp"
#include "focal/measures.hpp"
#include "focal/oracle.hpp"
#include "focal/source_spec.hpp"

namespace focal {

namespace {

constexpr const char *kFig4DefaultSource = "binomial:100:0.1";
constexpr std::size_t kFig4DefaultM = 8;
constexpr const char *kFig4Grid = "0:10:40";
constexpr const char *kFig2Grid = "0:10:20";
constexpr std::size_t kFig1MaxAlphabet = 50;

double to_real(std::string_view text, const char *what) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return out;
}

class CsvWriter {
public:
  explicit CsvWriter(std::initializer_list<std::string_view> header) {
    bool first = true;
    for (auto h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }

  CsvWriter &cell(double v) { return raw(format_real(v)); }
  CsvWriter &cell(std::size_t v) { return raw(std::to_string(v)); }
  CsvWriter &raw(std::string_view s) {
    if (!row_empty_) out_ << ',';
    out_ << s;
    row_empty_ = false;
    return *this;
  }
  void end_row() {
    out_ << '\n';
    row_empty_ = true;
  }
  std::string str() const { return out_.str(); }

private:
  std::ostringstream out_;
  bool row_empty_ = true;
};

std::string render_fig1() {
  CsvWriter csv{"alphabet_size", "gamma", "h_gamma"};
  for (double gamma : {0.5, 1.0, 20.0, 100.0}) {
    double previous = -kInfinity;
    for (std::size_t size = 2; size <= kFig1MaxAlphabet; ++size) {
      const double h = focal_entropy_max(size, gamma).value;
      if (h < previous) {
        throw InvariantViolation("fig1: h_gamma decreased along the alphabet axis at size " +
                                 std::to_string(size));
      }
      previous = h;
      csv.cell(size).cell(gamma).cell(h).end_row();
    }
  }
  return csv.str();
}

std::string render_fig2(const SweepConfig &config) {
  const Pmf first = Pmf::uniform(3);
  const Pmf second = Pmf::from_values({2.0 / 3.0, 1.0 / 4.0, 1.0 / 12.0});
  const std::size_t m = config.m_grid.empty() ? 2 : config.m_grid.front();
  CsvWriter csv{"gamma", "dstar_source1", "dstar_source2"};
  for (double gamma : parse_gamma_grid(config.gamma_grid.empty() ? kFig2Grid : config.gamma_grid)) {
    csv.cell(gamma)
        .cell(exhaustive_dstar(first, m, gamma).value)
        .cell(exhaustive_dstar(second, m, gamma).value)
        .end_row();
  }
  return csv.str();
}

void emit_report(CsvWriter &csv, const BoundReport &report, bool with_m) {
  if (with_m) csv.cell(report.m);
  csv.cell(report.gamma)
      .cell(report.converse)
      .cell(report.ach_eq17)
      .cell(report.ach_eq16)
      .cell(report.exact_code);
  if (report.fx_optimized) {
    csv.cell(*report.fx_optimized);
  } else {
    csv.raw("");
  }
  csv.end_row();
}

std::string render_bounds(const SweepConfig &config, bool with_m) {
  const std::string spec =
      config.source_spec.empty()
          ? (config.figure == Figure::fig4 ? std::string(kFig4DefaultSource) : std::string())
          : config.source_spec;
  if (spec.empty()) throw ValidationError("sweep: a source spec is required");
  const Source source = parse_source_spec(spec, config.renormalize);
  std::vector<std::size_t> ms = config.m_grid;
  if (ms.empty()) ms.push_back(kFig4DefaultM);
  std::string grid = config.gamma_grid;
  if (grid.empty()) {
    if (config.figure != Figure::fig4) throw ValidationError("sweep: a gamma grid is required");
    grid = kFig4Grid;
  }
  const std::vector<double> gammas = parse_gamma_grid(grid);

  CsvWriter csv = with_m ? CsvWriter{"m", "gamma", "converse", "ach_eq17", "ach_eq16",
                                     "ach_exact", "ach_exact_optfx"}
                         : CsvWriter{"gamma", "converse", "ach_eq17", "ach_eq16", "ach_exact",
                                     "ach_exact_optfx"};
  std::uint64_t row = 0;
  for (std::size_t m : ms) {
    for (double gamma : gammas) {
      const BoundReport report = run_point(source, m, gamma, config.fx,
                                           derive_seed(config.seed, row++), config.search,
                                           config.renormalize);
      check_bound_report(report, source.size());
      emit_report(csv, report, with_m);
    }
  }
  return csv.str();
}

std::string render_n_letter(const SweepConfig &config) {
  if (config.source_spec.empty()) throw ValidationError("sweep: a source spec is required");
  if (!(config.rate > 0.0)) throw ValidationError("sweep: the n-letter table needs a rate > 0");
  const Source source = parse_source_spec(config.source_spec, config.renormalize);
  const Pmf &r = source.reweighted();
  if (config.fx.mode == FxMode::optimize) {
    throw ValidationError("sweep: the n-letter table takes a fixed auxiliary distribution");
  }
  const Pmf f = resolve_fx(config.fx, r, config.renormalize);
  const double limit = asymptotic_distortion_rate(r, config.rate);
  CsvWriter csv{"n", "gamma", "rate", "ach_n_letter", "limit"};
  for (double gamma : parse_gamma_grid(config.gamma_grid.empty() ? "0" : config.gamma_grid)) {
    for (unsigned n : config.n_grid) {
      csv.cell(static_cast<std::size_t>(n))
          .cell(gamma)
          .cell(config.rate)
          .cell(ach_bound_n_letter(r, f, n, config.rate, gamma))
          .cell(limit)
          .end_row();
    }
  }
  return csv.str();
}

} // namespace

FxChoice parse_fx_choice(std::string_view text) {
  if (text == "source") return {FxMode::source, {}};
  if (text == "uniform") return {FxMode::uniform, {}};
  if (text == "optimize") return {FxMode::optimize, {}};
  if (text.substr(0, 5) == "file:" && text.size() > 5) {
    return {FxMode::file, std::string(text.substr(5))};
  }
  throw ValidationError("fx: expected source, uniform, file:PATH or optimize, got '" +
                        std::string(text) + "'");
}

Pmf resolve_fx(const FxChoice &choice, const Pmf &r, bool renormalize) {
  switch (choice.mode) {
  case FxMode::source:
  case FxMode::optimize:
    return r;
  case FxMode::uniform:
    return Pmf::uniform(r.size());
  case FxMode::file: {
    Pmf f = read_pmf_file(choice.path, renormalize);
    if (f.size() != r.size()) {
      throw ValidationError("fx: file '" + choice.path + "' has " + std::to_string(f.size()) +
                            " entries, source has " + std::to_string(r.size()));
    }
    return f;
  }
  }
  throw ValidationError("fx: unknown mode");
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
  if (count == 0) throw ValidationError("grid: count must be at least 1");
  if (count == 1) return {start};
  std::vector<double> out(count);
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
  out.back() = stop;
  return out;
}

std::vector<double> parse_gamma_grid(std::string_view text) {
  std::vector<double> values;
  const auto first = text.find(':');
  if (first == std::string_view::npos) {
    values.push_back(to_real(text, "gamma"));
  } else {
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos) {
      throw ValidationError("grid: expected START:STOP:COUNT, got '" + std::string(text) + "'");
    }
    const double start = to_real(text.substr(0, first), "grid start");
    const double stop = to_real(text.substr(first + 1, second - first - 1), "grid stop");
    const std::string_view count_text = text.substr(second + 1);
    std::size_t count = 0;
    auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count == 0) {
      throw ValidationError("grid: count must be a positive integer");
    }
    values = linspace(start, stop, count);
  }
  for (double g : values) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw ValidationError("grid: gamma values must be >= 0");
  }
  return values;
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 15);
  if (ec != std::errc()) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, ptr);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined words.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BoundReport run_point(const Source &source, std::size_t m, double gamma, const FxChoice &fx,
                      std::uint64_t seed, const FxSearchConfig &search, bool renormalize) {
  const Pmf &r = source.reweighted();
  const Pmf f = resolve_fx(fx, r, renormalize);
  BoundReport report = make_bound_report(r, f, m, gamma, search.visit_order);
  if (fx.mode == FxMode::optimize) {
    FxSearchConfig cfg = search;
    cfg.seed = seed;
    report.fx_optimized = optimize_fx(r, m, gamma, cfg).value;
  }
  return report;
}

Figure parse_figure(std::string_view text) {
  if (text == "fig1") return Figure::fig1;
  if (text == "fig2") return Figure::fig2;
  if (text == "fig4") return Figure::fig4;
  if (text == "custom") return Figure::custom;
  throw ValidationError("sweep: unknown figure '" + std::string(text) + "'");
}

std::string render_sweep(const SweepConfig &config) {
  switch (config.figure) {
  case Figure::fig1:
    return render_fig1();
  case Figure::fig2:
    return render_fig2(config);
  case Figure::fig4:
    return render_bounds(config, false);
  case Figure::custom:
    return config.n_grid.empty() ? render_bounds(config, true) : render_n_letter(config);
  }
  throw ValidationError("sweep: unknown figure");
}

void run_sweep(const SweepConfig &config) {
  const std::string csv = render_sweep(config);
  std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("sweep: cannot write '" + config.output_path + "'");
  out << csv;
  if (!out) throw ValidationError("sweep: write to '" + config.output_path + "' failed");
}

SourceAudit audit_binomial_source(unsigned trials, double stated_p, double implied_entropy,
                                  double flag_gap) {
  const Pmf stated = binomial_pmf(trials, stated_p);
  SourceAudit audit{};
  audit.trials = trials;
  audit.stated_p = stated_p;
  audit.stated_entropy = shannon_entropy(stated);
  audit.implied_entropy = implied_entropy;
  audit.gap = std::abs(audit.stated_entropy - implied_entropy);
  audit.inconsistent = audit.gap > flag_gap;
  audit.stated_max_prob = 0.0;
  for (double v : stated) audit.stated_max_prob = std::max(audit.stated_max_prob, v);

  double best_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 90; ++i) {
    const double p = 0.05 + 0.005 * i;
    const double h = shannon_entropy(binomial_pmf(trials, p));
    const double g = std::abs(h - implied_entropy);
    if (g < best_gap) {
      best_gap = g;
      audit.closest_p = p;
      audit.closest_entropy = h;
    }
  }
  return audit;
}

std::string render_audit(const SourceAudit &audit) {
  CsvWriter csv{"trials", "stated_p", "stated_entropy", "implied_entropy", "gap",
                "inconsistent", "stated_max_prob", "closest_p", "closest_entropy"};
  csv.cell(static_cast<std::size_t>(audit.trials))
      .cell(audit.stated_p)
      .cell(audit.stated_entropy)
      .cell(audit.implied_entropy)
      .cell(audit.gap)
      .raw(audit.inconsistent ? "true" : "false")
      .cell(audit.stated_max_prob)
      .cell(audit.closest_p)
      .cell(audit.closest_entropy)
      .end_row();
  return csv.str();
}

} // namespace focal
