#include "commands.hpp"

#include "qsphere/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace qsphere;
  using namespace qsphere::cli;

  CLI::App app{"Exact symbolic checks for the quantum 4-sphere instanton"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  bool latex = false;
  bool timing = false;
  std::string convention = "paper-derived";
  std::string q_at;
  double tolerance = 1e-12;
  double oracle_tolerance = 1e-10;
  app.add_flag("--json", json, "Emit the run report as JSON");
  app.add_flag("--latex", latex, "Render chains as LaTeX");
  app.add_flag("--timing", timing, "Include timing_ms in JSON reports");
  app.add_option("--convention", convention, "B operator convention")
      ->check(CLI::IsMember({"paper-derived", "standard"}));
  app.add_option("--q-at", q_at, "Evaluate coefficients at a rational q before comparing");
  app.add_option("--tolerance", tolerance, "Tolerance for relation and character residuals");
  app.add_option("--oracle-tolerance", oracle_tolerance, "Tolerance for the homomorphism oracle");

  auto* idem = app.add_subcommand("verify-idempotent", "Check e^2 = e = e* symbolically");

  int chern_n = 1;
  std::string format = "text";
  auto* chern = app.add_subcommand("chern", "Print ch_n(e) and diff it against the published chain");
  chern->add_option("--n", chern_n, "Component index")->check(CLI::NonNegativeNumber);
  chern->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));

  int cycle_n = 1;
  auto* cycle = app.add_subcommand("verify-cycle", "Check B ch_n(e) = b ch_(n+1)(e)");
  cycle->add_option("--n", cycle_n, "Component index")->check(CLI::NonNegativeNumber);

  std::string rep_q = "0.5", rep_lambda = "1", rep_sign = "plus", grid_path;
  int rep_dim = 32, oracle_samples = 0;
  bool check_relations = false, csv = false;
  std::uint64_t seed = 1;
  auto* rep = app.add_subcommand("rep", "Build a truncated representation and check relations numerically");
  rep->add_option("--q", rep_q, "Deformation parameter in (-1,0) or (0,1]");
  rep->add_option("--lambda", rep_lambda, "Complex parameter with |lambda| <= 1, e.g. 0.8+0.1i");
  rep->add_option("--sign", rep_sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  rep->add_option("--dim", rep_dim, "Truncation dimension N");
  rep->add_flag("--check-relations", check_relations, "Report relation residuals");
  rep->add_option("--oracle-samples", oracle_samples, "Random symbolic/numeric homomorphism checks");
  rep->add_option("--seed", seed, "Seed for the oracle samples");
  rep->add_option("--grid", grid_path, "JSON grid {q: [...], lambda: [...], sign: [...], N: n}");
  rep->add_flag("--csv", csv, "Print the residual table as CSV");

  std::string ch_q, ch_alpha, ch_beta = "0", ch_z = "0";
  auto* character = app.add_subcommand("character", "Test whether a scalar point defines a character");
  character->add_option("--q", ch_q, "Deformation parameter")->required();
  character->add_option("--alpha", ch_alpha, "Value of alpha (complex)")->required();
  character->add_option("--beta", ch_beta, "Value of beta (complex)");
  character->add_option("--z", ch_z, "Value of z (real)");

  auto* iso = app.add_subcommand("iso-check", "Map the ideal generators through q -> 1/q, alpha -> alpha*, beta -> q beta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Options opts;
  opts.format = json ? Format::Json : latex ? Format::Latex : Format::Text;
  if (chern->parsed() && !json && !latex) opts.format = format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text;
  opts.convention = parse_convention(convention);
  opts.tolerance = tolerance;
  opts.oracle_tolerance = oracle_tolerance;
  opts.timing = timing;

  RunReport report;
  try {
    if (!q_at.empty()) opts.q_at = parse_rational(q_at);

    if (idem->parsed()) {
      report = cmd_verify_idempotent(opts);
    } else if (chern->parsed()) {
      report = cmd_chern(chern_n, opts);
    } else if (cycle->parsed()) {
      report = cmd_verify_cycle(cycle_n, opts);
    } else if (rep->parsed()) {
      RepRequest req;
      req.qval = std::stod(rep_q);
      req.lambda = parse_complex(rep_lambda);
      req.sign = parse_sign(rep_sign);
      req.dim = rep_dim;
      req.check_relations = check_relations || oracle_samples == 0;
      req.oracle_samples = oracle_samples;
      req.seed = seed;
      if (!grid_path.empty()) {
        std::ifstream in(grid_path);
        if (!in) throw InvalidParameter("cannot open grid file '" + grid_path + "'");
        report = cmd_rep_sweep(nlohmann::json::parse(in), req, opts);
      } else {
        report = cmd_rep(req, opts);
      }
      if (csv && opts.format == Format::Text && report.output.contains("residuals")) {
        std::cout << residual_csv(relation_residuals(build_rep(req.qval, req.lambda, req.sign, req.dim)));
        return report.passed() ? kExitPass : kExitFail;
      }
    } else if (character->parsed()) {
      const Complex z = parse_complex(ch_z);
      if (z.imag() != 0.0) throw InvalidParameter("z must be real");
      report = cmd_character(std::stod(ch_q), parse_complex(ch_alpha), parse_complex(ch_beta), z.real(), opts);
    } else if (iso->parsed()) {
      report = cmd_iso_check(opts);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cout << render(report, opts);
  std::cerr << report.command << ": " << report.timing_ms << " ms\n";
  return report.passed() ? kExitPass : kExitFail;
}
