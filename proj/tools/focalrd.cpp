// focalrd: rate-distortion bounds under the focal loss, as deterministic CSV.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "focal/focal.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitGuardRail = 2;
constexpr int kExitInvariant = 3;

struct Common {
  std::string source;
  std::size_t m = 2;
  std::string gamma = "0";
  std::string fx = "source";
  std::uint64_t seed = 0;
  std::string out;
  bool renormalize = false;
  std::string visit_order = "descending";
  unsigned starts = focal::FxSearchConfig{}.starts;
  unsigned iterations = focal::FxSearchConfig{}.iterations;
};

void add_source(CLI::App *cmd, Common &c, bool required) {
  auto *opt = cmd->add_option("--source", c.source,
                              "uniform:K | binomial:K:P | bernoulli:P | pmf:V1,V2,... | "
                              "pmf-file:PATH, optionally followed by :q=WEIGHTS");
  if (required) opt->required();
  cmd->add_flag("--renormalize", c.renormalize, "Renormalize pmf:/pmf-file: values");
}

void add_fx(CLI::App *cmd, Common &c) {
  cmd->add_option("--fx", c.fx, "Auxiliary distribution: source | uniform | file:PATH | optimize");
  cmd->add_option("--seed", c.seed, "Seed for all randomness");
  cmd->add_option("--visit-order", c.visit_order, "Greedy compressor order")
      ->check(CLI::IsMember({"descending", "ascending"}));
  cmd->add_option("--starts", c.starts, "F_X search starts")->check(CLI::PositiveNumber);
  cmd->add_option("--iterations", c.iterations, "F_X search rounds per start")
      ->check(CLI::PositiveNumber);
}

void add_out(CLI::App *cmd, Common &c) {
  cmd->add_option("--out", c.out, "Output file (stdout when omitted)");
}

focal::FxSearchConfig search_config(const Common &c) {
  focal::FxSearchConfig cfg;
  cfg.starts = c.starts;
  cfg.iterations = c.iterations;
  cfg.seed = c.seed;
  cfg.visit_order =
      c.visit_order == "ascending" ? focal::VisitOrder::ascending : focal::VisitOrder::descending;
  return cfg;
}

void emit(const Common &c, const std::string &text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(c.out, std::ios::binary | std::ios::trunc);
  if (!file) throw focal::ValidationError("cannot write '" + c.out + "'");
  file << text;
}

std::string join_pmf(const focal::Pmf &p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ';';
    s += focal::format_real(p[i]);
  }
  return s;
}

std::string cmd_point(const Common &c) {
  const focal::Source source = focal::parse_source_spec(c.source, c.renormalize);
  const double gamma = focal::parse_gamma_grid(c.gamma).at(0);
  const focal::BoundReport report =
      focal::run_point(source, c.m, gamma, focal::parse_fx_choice(c.fx), c.seed, search_config(c),
                       c.renormalize);
  focal::check_bound_report(report, source.size());
  std::ostringstream out;
  out << "m,gamma,converse,ach_eq16,ach_eq17,exact_code,fx_optimized\n"
      << report.m << ',' << focal::format_real(report.gamma) << ','
      << focal::format_real(report.converse) << ',' << focal::format_real(report.ach_eq16) << ','
      << focal::format_real(report.ach_eq17) << ',' << focal::format_real(report.exact_code) << ','
      << (report.fx_optimized ? focal::format_real(*report.fx_optimized) : "") << '\n';
  return out.str();
}

std::string cmd_oracle(const Common &c) {
  const focal::Source source = focal::parse_source_spec(c.source, c.renormalize);
  std::ostringstream out;
  out << "gamma,dstar,certified,partition,reconstructions\n";
  for (double gamma : focal::parse_gamma_grid(c.gamma)) {
    const focal::OracleResult res = focal::exhaustive_dstar(source.reweighted(), c.m, gamma);
    std::string partition;
    for (std::size_t i = 0; i < res.best_partition.size(); ++i) {
      if (i) partition += ';';
      partition += std::to_string(res.best_partition[i]);
    }
    std::string recon;
    for (std::size_t k = 0; k < res.best_reconstructions.size(); ++k) {
      if (k) recon += '|';
      recon += join_pmf(res.best_reconstructions[k]);
    }
    out << focal::format_real(gamma) << ',' << focal::format_real(res.value) << ','
        << (res.certified ? "true" : "false") << ',' << partition << ',' << recon << '\n';
  }
  return out.str();
}

std::string cmd_code_dump(const Common &c) {
  const focal::Source source = focal::parse_source_spec(c.source, c.renormalize);
  const focal::FxChoice choice = focal::parse_fx_choice(c.fx);
  if (choice.mode == focal::FxMode::optimize) {
    throw focal::ValidationError("code-dump: --fx optimize is not supported; pass a fixed F");
  }
  const focal::Pmf f = focal::resolve_fx(choice, source.reweighted(), c.renormalize);
  const focal::Code code = focal::build_code(f, c.m, search_config(c).visit_order);
  std::ostringstream out;
  out << "symbol,message,f_mass,reconstruction_prob\n";
  for (std::size_t a = 0; a < code.alphabet_size(); ++a) {
    out << a << ',' << code.message(a) << ',' << focal::format_real(f[a]) << ','
        << focal::format_real(code.reconstruction_prob(a)) << '\n';
  }
  return out.str();
}

std::string cmd_hgamma(const Common &c, const std::vector<std::size_t> &sizes) {
  std::ostringstream out;
  if (!c.source.empty()) {
    const focal::Source source = focal::parse_source_spec(c.source, c.renormalize);
    out << "gamma,focal_entropy,h_gamma,upper_bound\n";
    for (double gamma : focal::parse_gamma_grid(c.gamma)) {
      out << focal::format_real(gamma) << ','
          << focal::format_real(focal::focal_entropy(source.reweighted(), gamma)) << ','
          << focal::format_real(focal::focal_entropy_max(source.size(), gamma).value) << ','
          << focal::format_real(focal::focal_entropy_upper(gamma)) << '\n';
    }
    return out.str();
  }
  if (sizes.empty()) throw focal::ValidationError("hgamma: pass --size or --source");
  out << "alphabet_size,gamma,h_gamma,d_star,q_star,upper_bound\n";
  for (double gamma : focal::parse_gamma_grid(c.gamma)) {
    for (std::size_t size : sizes) {
      const focal::HGammaMax h = focal::focal_entropy_max(size, gamma);
      out << size << ',' << focal::format_real(gamma) << ',' << focal::format_real(h.value) << ','
          << h.d_star << ',' << focal::format_real(h.q_star) << ','
          << focal::format_real(focal::focal_entropy_upper(gamma)) << '\n';
    }
  }
  return out.str();
}

int guarded(const std::function<void()> &body) {
  try {
    body();
    return 0;
  } catch (const focal::GuardRailError &e) {
    std::cerr << "focalrd: " << e.what() << '\n';
    return kExitGuardRail;
  } catch (const focal::InvariantViolation &e) {
    std::cerr << "focalrd: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument &e) {
    std::cerr << "focalrd: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range &e) {
    std::cerr << "focalrd: " << e.what() << '\n';
    return kExitValidation;
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Lossy source coding bounds under the focal loss"};
  app.require_subcommand(1);

  Common c;
  std::string figure = "custom";
  std::vector<std::size_t> m_grid;
  std::vector<std::size_t> sizes;
  std::vector<unsigned> n_grid;
  double rate = 0.0;
  unsigned trials = 100;
  double stated_p = 0.1;
  double implied = focal::kFig4ImpliedEntropy;

  auto *point = app.add_subcommand("point", "Every bound at one (m, gamma) point");
  add_source(point, c, true);
  point->add_option("--m", c.m, "Code size")->check(CLI::PositiveNumber);
  point->add_option("--gamma", c.gamma, "Focus parameter");
  add_fx(point, c);
  add_out(point, c);

  auto *sweep = app.add_subcommand("sweep", "Figure reproduction and custom sweeps");
  sweep->add_option("--figure", figure, "fig1 | fig2 | fig4 | custom")
      ->check(CLI::IsMember({"fig1", "fig2", "fig4", "custom"}));
  add_source(sweep, c, false);
  sweep->add_option("--m", m_grid, "Code size(s)")->delimiter(',');
  sweep->add_option("--gamma", c.gamma, "Gamma grid START:STOP:COUNT or a single value");
  sweep->add_option("--n", n_grid, "Blocklengths (custom n-letter table)")->delimiter(',');
  sweep->add_option("--rate", rate, "Rate in bits per symbol for the n-letter table");
  add_fx(sweep, c);
  add_out(sweep, c);

  auto *oracle = app.add_subcommand("oracle", "Exhaustive optimum over all codes");
  add_source(oracle, c, true);
  oracle->add_option("--m", c.m, "Code size")->check(CLI::PositiveNumber);
  oracle->add_option("--gamma", c.gamma, "Gamma or grid");
  add_out(oracle, c);

  auto *dump = app.add_subcommand("code-dump", "Print the greedy code built from F");
  add_source(dump, c, true);
  dump->add_option("--m", c.m, "Code size")->check(CLI::PositiveNumber);
  add_fx(dump, c);
  add_out(dump, c);

  auto *hgamma = app.add_subcommand("hgamma", "Largest focal entropy per alphabet size");
  hgamma->add_option("--size", sizes, "Alphabet size(s)")->delimiter(',');
  add_source(hgamma, c, false);
  hgamma->add_option("--gamma", c.gamma, "Gamma or grid");
  add_out(hgamma, c);

  auto *asym = app.add_subcommand("asymptotic", "n-letter bound versus the distortion-rate limit");
  add_source(asym, c, true);
  asym->add_option("--rate", rate, "Rate in bits per symbol")->required();
  asym->add_option("--n", n_grid, "Blocklengths")->delimiter(',')->required();
  asym->add_option("--gamma", c.gamma, "Gamma or grid");
  add_fx(asym, c);
  add_out(asym, c);

  auto *audit = app.add_subcommand("audit", "Entropy audit of the fig4 binomial source");
  audit->add_option("--trials", trials, "Binomial trials");
  audit->add_option("--p", stated_p, "Stated success probability");
  audit->add_option("--implied", implied, "Entropy implied by the figure data");
  add_out(audit, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitValidation;
  }

  return guarded([&] {
    if (point->parsed()) {
      emit(c, cmd_point(c));
    } else if (sweep->parsed() || asym->parsed()) {
      focal::SweepConfig cfg;
      cfg.figure = asym->parsed() ? focal::Figure::custom : focal::parse_figure(figure);
      cfg.source_spec = c.source;
      cfg.m_grid = m_grid;
      if (sweep->parsed() && (sweep->count("--gamma") != 0 || cfg.figure == focal::Figure::custom)) {
        cfg.gamma_grid = c.gamma;
      }
      if (asym->parsed()) cfg.gamma_grid = c.gamma;
      cfg.n_grid = n_grid;
      cfg.rate = rate;
      cfg.fx = focal::parse_fx_choice(c.fx);
      cfg.seed = c.seed;
      cfg.renormalize = c.renormalize;
      cfg.search = search_config(c);
      emit(c, focal::render_sweep(cfg));
    } else if (oracle->parsed()) {
      emit(c, cmd_oracle(c));
    } else if (dump->parsed()) {
      emit(c, cmd_code_dump(c));
    } else if (hgamma->parsed()) {
      emit(c, cmd_hgamma(c, sizes));
    } else if (audit->parsed()) {
      emit(c, focal::render_audit(focal::audit_binomial_source(trials, stated_p, implied)));
    }
  });
}
