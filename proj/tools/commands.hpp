#pragma once

#include "qsphere/homology.hpp"
#include "qsphere/repsim.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qsphere::cli {

enum class Format { Text, Json, Latex };

/// Where an expected value comes from.
enum class Source { Published, Derived, Trivial };

struct Check {
  std::string name;
  Source source = Source::Trivial;
  bool passed = false;
  nlohmann::json diff;  ///< null when there is nothing to show
};

struct RunReport {
  std::string command;
  std::vector<Check> checks;
  double timing_ms = 0;
  /// Command-specific payload (chains, residual tables, counts).
  nlohmann::json output = nlohmann::json::object();
  /// Human-readable payload for text/latex output.
  std::string text;

  bool passed() const;
  void add(std::string name, Source source, bool passed, nlohmann::json diff = nullptr);
  nlohmann::json to_json(bool with_timing) const;
};

struct Options {
  Format format = Format::Text;
  BConvention convention = BConvention::PaperDerived;
  std::optional<Rational> q_at;
  double tolerance = 1e-12;
  double oracle_tolerance = 1e-10;
  bool timing = false;
};

RunReport cmd_verify_idempotent(const Options& opts);
RunReport cmd_chern(int n, const Options& opts);
RunReport cmd_verify_cycle(int n, const Options& opts);

struct RepRequest {
  double qval = 0.5;
  Complex lambda{1.0, 0.0};
  Sign sign = Sign::Plus;
  int dim = 32;
  bool check_relations = true;
  int oracle_samples = 0;
  std::uint64_t seed = 1;
};

RunReport cmd_rep(const RepRequest& req, const Options& opts);
/// Runs cmd_rep over the cartesian product of a grid {q: [...], lambda: [...], sign: [...], N: n}.
RunReport cmd_rep_sweep(const nlohmann::json& grid, const RepRequest& base, const Options& opts);

RunReport cmd_character(double qval, Complex alpha, Complex beta, double z, const Options& opts);
RunReport cmd_iso_check(const Options& opts);

/// Renders a report (and its payload) in the requested format.
std::string render(const RunReport& report, const Options& opts);
/// Residual table as CSV: relation,residual,subspace_dim
std::string residual_csv(const std::vector<RelationResidual>& rows);

}  // namespace qsphere::cli
