#include "commands.hpp"

#include "qsphere/chern.hpp"
#include "qsphere/io.hpp"
#include "qsphere/random.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace qsphere::cli {

namespace {

std::string_view source_name(Source s) {
  switch (s) {
    case Source::Published: return "published";
    case Source::Derived: return "derived";
    case Source::Trivial: return "trivial";
  }
  return "?";
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Chain specialize(const Chain& c, const Options& opts) { return opts.q_at ? c.eval_at(*opts.q_at) : c; }

std::string chain_text(const Chain& c, const Options& opts) {
  return opts.format == Format::Latex ? chain_latex(c) + "\n" : c.str();
}

nlohmann::json diff_payload(const Chain& diff) {
  if (diff.is_zero()) return nullptr;
  return chain_to_json(diff);
}

std::string q_at_str(const Options& opts) { return opts.q_at ? " at q = " + opts.q_at->get_str() : ""; }

}  // namespace

bool RunReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void RunReport::add(std::string name, Source source, bool passed, nlohmann::json diff) {
  checks.push_back({std::move(name), source, passed, std::move(diff)});
}

nlohmann::json RunReport::to_json(bool with_timing) const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name},
                           {"source", source_name(c.source)},
                           {"outcome", c.passed ? "pass" : "fail"},
                           {"diff", c.diff}});
  nlohmann::json j = {{"command", command},
                      {"status", passed() ? "pass" : "fail"},
                      {"checks", std::move(checks_json)},
                      {"output", output}};
  if (with_timing) j["timing_ms"] = timing_ms;
  return j;
}

// ---------------------------------------------------------------------------

RunReport cmd_verify_idempotent(const Options& opts) {
  Stopwatch clock;
  RunReport r;
  r.command = "verify-idempotent";
  const AlgMatrix e = instanton_idempotent();
  const AlgMatrix e2 = e * e;
  const AlgMatrix es = e.star();

  auto entry_diff = [](const AlgMatrix& a, const AlgMatrix& b) {
    nlohmann::json d = nlohmann::json::array();
    for (int i = 0; i < a.size(); ++i)
      for (int j = 0; j < a.size(); ++j)
        if (a(i, j) != b(i, j)) d.push_back({{"row", i}, {"col", j}, {"difference", (a(i, j) - b(i, j)).str()}});
    return d.empty() ? nlohmann::json(nullptr) : d;
  };
  r.add("e^2 = e", Source::Published, e2 == e, entry_diff(e2, e));
  r.add("e* = e", Source::Published, es == e, entry_diff(es, e));
  const NCPoly tr = e.trace();
  r.add("trace(e) = 2 (rank two)", Source::Published, tr == NCPoly(2),
        tr == NCPoly(2) ? nlohmann::json(nullptr) : nlohmann::json(tr.str()));

  nlohmann::json entries = nlohmann::json::array();
  std::ostringstream text;
  for (int i = 0; i < e.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < e.size(); ++j) {
      row.push_back(e(i, j).str());
      text << "e(" << i << "," << j << ") = " << (opts.format == Format::Latex ? e(i, j).latex() : e(i, j).str())
           << "\n";
    }
    entries.push_back(std::move(row));
  }
  r.output["idempotent"] = std::move(entries);
  r.text = text.str();
  r.timing_ms = clock.elapsed_ms();
  return r;
}

RunReport cmd_chern(int n, const Options& opts) {
  Stopwatch clock;
  RunReport r;
  r.command = "chern";
  const Chain ch = chern_component(instanton_idempotent(), n);
  const Chain shown = specialize(ch, opts);

  if (n <= 2) {
    const Chain golden = specialize(golden_chain("ch" + std::to_string(n)), opts);
    const Chain diff = shown - golden;
    r.add("ch_" + std::to_string(n) + " matches the published chain" + q_at_str(opts), Source::Published,
          chain_eq(shown, golden), diff_payload(diff));
    r.output["published_terms"] = golden.size();
  }
  if (n >= 1 && !opts.q_at)
    r.add("ch_" + std::to_string(n) + " is nonzero for formal q", Source::Published, !ch.is_zero());

  r.output["n"] = n;
  r.output["terms"] = shown.size();
  r.output["chain"] = chain_to_json(shown);
  if (n == 2) {
    // ch_2 = (1/32) sum_L L (x) c_L, keyed by the leading monomial L
    std::map<std::string, Chain> blocks;
    for (const auto& [slots, coeff] : shown.terms()) {
      auto [it, inserted] = blocks.try_emplace(slots.front().str(), Chain(3));
      it->second.add_term(Slots(slots.begin() + 1, slots.end()), QLaurent(32) * coeff);
    }
    nlohmann::json blocks_json = nlohmann::json::object();
    for (const auto& [lead, block] : blocks) blocks_json[lead] = chain_to_json(block);
    r.output["blocks"] = std::move(blocks_json);
  }
  r.text = chain_text(shown, opts);
  r.timing_ms = clock.elapsed_ms();
  return r;
}

RunReport cmd_verify_cycle(int n, const Options& opts) {
  Stopwatch clock;
  RunReport r;
  r.command = "verify-cycle";
  const AlgMatrix e = instanton_idempotent();
  const CycleReport cycle = verify_cycle(e, n, opts.convention);
  const Chain lhs = specialize(cycle.lhs, opts);
  const Chain rhs = specialize(cycle.rhs, opts);
  const Chain diff = rhs - lhs;

  const std::string label = "B ch_" + std::to_string(n) + " = b ch_" + std::to_string(n + 1) + " (" +
                            std::string(convention_name(opts.convention)) + ")" + q_at_str(opts);
  r.add(label, n <= 1 ? Source::Published : Source::Derived, chain_eq(lhs, rhs), diff_payload(diff));
  if (n == 1) {
    const Chain golden = specialize(golden_chain("bch2"), opts);
    r.add("b ch_2 matches the published chain" + q_at_str(opts), Source::Published, chain_eq(rhs, golden),
          diff_payload(rhs - golden));
  }

  const Chain upper = chern_component(e, n + 1);
  r.output["n"] = n;
  r.output["convention"] = convention_name(opts.convention);
  r.output["upper_component_terms"] = upper.size();
  // each term of ch_(n+1) contributes one product per face of b
  r.output["boundary_products"] = upper.size() * static_cast<std::size_t>(upper.degree() + 1);
  r.output["lhs_terms"] = lhs.size();
  r.output["rhs_terms"] = rhs.size();
  r.output["lhs"] = chain_to_json(lhs);
  r.output["rhs"] = chain_to_json(rhs);
  if (!diff.is_zero()) r.output["difference"] = chain_to_json(diff);

  std::ostringstream text;
  text << "ch_" << n + 1 << ": " << upper.size() << " terms, " << r.output["boundary_products"].get<std::size_t>()
       << " boundary products\n";
  text << "B ch_" << n << ":\n" << chain_text(lhs, opts);
  text << "b ch_" << n + 1 << ":\n" << chain_text(rhs, opts);
  if (!diff.is_zero()) text << "difference (b ch - B ch):\n" << chain_text(diff, opts);
  r.text = text.str();
  r.timing_ms = clock.elapsed_ms();
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct OracleResult {
  double max_product_error = 0;
  double max_star_error = 0;
  int samples = 0;
};

OracleResult run_homomorphism_oracle(const TruncatedRep& rep, int samples, std::uint64_t seed) {
  OracleResult out;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const NCPoly x = random_ncpoly(rng, 3);
    const NCPoly y = random_ncpoly(rng, 3);
    const OracleErrors err = oracle_errors(rep, x, y);
    out.max_product_error = std::max(out.max_product_error, err.product);
    out.max_star_error = std::max(out.max_star_error, err.star);
    ++out.samples;
  }
  return out;
}

}  // namespace

std::string residual_csv(const std::vector<RelationResidual>& rows) {
  std::ostringstream out;
  out << "relation,residual,subspace_dim\n";
  out.precision(6);
  for (const auto& row : rows) out << '"' << row.relation << "\"," << std::scientific << row.residual << ',' << row.subspace_dim << '\n';
  return out.str();
}

RunReport cmd_rep(const RepRequest& req, const Options& opts) {
  Stopwatch clock;
  RunReport r;
  r.command = "rep";
  const TruncatedRep rep = build_rep(req.qval, req.lambda, req.sign, req.dim);
  r.output["q"] = req.qval;
  r.output["lambda"] = {req.lambda.real(), req.lambda.imag()};
  r.output["sign"] = sign_name(req.sign);
  r.output["dim"] = req.dim;
  std::ostringstream text;

  if (req.check_relations) {
    const auto rows = relation_residuals(rep);
    double worst = 0;
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : rows) {
      worst = std::max(worst, row.residual);
      table.push_back({{"relation", row.relation},
                       {"residual", row.residual},
                       {"subspace_dim", row.subspace_dim},
                       {"full_residual", row.full_residual}});
    }
    r.output["residuals"] = std::move(table);
    r.add("relation residuals <= tolerance on the interior subspace", Source::Derived, worst <= opts.tolerance,
          worst <= opts.tolerance ? nlohmann::json(nullptr) : nlohmann::json(worst));
    text << residual_csv(rows);
  }

  if (std::abs(std::abs(req.lambda) - 1.0) <= 1e-12) {
    const TruncatedRep other = build_rep(req.qval, req.lambda, req.sign == Sign::Plus ? Sign::Minus : Sign::Plus, req.dim);
    const bool same = rep.op_alpha == other.op_alpha && rep.op_beta == other.op_beta && rep.op_z == other.op_z;
    r.add("pi_+ and pi_- coincide at |lambda| = 1", Source::Published, same);
    text << "|lambda| = 1: pi_plus and pi_minus are " << (same ? "identical" : "different") << "\n";
  }

  if (req.oracle_samples > 0) {
    const OracleResult oracle = run_homomorphism_oracle(rep, req.oracle_samples, req.seed);
    r.output["oracle"] = {{"samples", oracle.samples},
                          {"max_product_error", oracle.max_product_error},
                          {"max_star_error", oracle.max_star_error}};
    r.add("pi(x y) = pi(x) pi(y) on the interior subspace", Source::Derived,
          oracle.max_product_error <= opts.oracle_tolerance, nlohmann::json(oracle.max_product_error));
    r.add("pi(x*) = pi(x)^dagger on the interior subspace", Source::Derived,
          oracle.max_star_error <= opts.oracle_tolerance, nlohmann::json(oracle.max_star_error));
    text << "oracle: " << oracle.samples << " samples, max product error " << oracle.max_product_error
         << ", max star error " << oracle.max_star_error << "\n";
  }
  r.text = text.str();
  r.timing_ms = clock.elapsed_ms();
  return r;
}

RunReport cmd_rep_sweep(const nlohmann::json& grid, const RepRequest& base, const Options& opts) {
  Stopwatch clock;
  RunReport r;
  r.command = "rep";
  auto as_list = [&](const char* key, nlohmann::json fallback) {
    if (!grid.contains(key)) return nlohmann::json::array({fallback});
    const auto& v = grid.at(key);
    return v.is_array() ? v : nlohmann::json::array({v});
  };
  const auto qs = as_list("q", base.qval);
  const auto lambdas = as_list("lambda", "1");
  const auto signs = as_list("sign", "plus");
  const int dim = grid.value("N", base.dim);

  nlohmann::json points = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& qj : qs)
    for (const auto& lj : lambdas)
      for (const auto& sj : signs) {
        RepRequest req = base;
        req.qval = qj.get<double>();
        req.lambda = lj.is_string() ? parse_complex(lj.get<std::string>()) : Complex(lj.get<double>());
        req.sign = parse_sign(sj.get<std::string>());
        req.dim = dim;
        RunReport point = cmd_rep(req, opts);
        std::ostringstream tag;
        tag << "q=" << req.qval << " lambda=" << req.lambda.real() << (req.lambda.imag() < 0 ? "" : "+")
            << req.lambda.imag() << "i sign=" << sign_name(req.sign);
        for (auto& c : point.checks) r.add(tag.str() + ": " + c.name, c.source, c.passed, std::move(c.diff));
        points.push_back(point.output);
        text << tag.str() << ": " << (point.passed() ? "pass" : "fail") << "\n";
      }
  r.output["points"] = std::move(points);
  r.text = text.str();
  r.timing_ms = clock.elapsed_ms();
  return r;
}

RunReport cmd_character(double qval, Complex alpha, Complex beta, double z, const Options& opts) {
  Stopwatch clock;
  RunReport r;
  r.command = "character";
  const CharacterReport report = character_check(qval, alpha, beta, z, opts.tolerance);
  const bool closed_form = is_classical_point(qval, alpha, beta, z, opts.tolerance);
  r.add("generator residuals agree with the closed-form description of classical points", Source::Published,
        report.valid == closed_form);

  nlohmann::json residuals = nlohmann::json::array();
  std::ostringstream text;
  text << (report.valid ? "valid" : "invalid") << " character\n";
  for (const auto& row : report.residuals) {
    residuals.push_back({{"relation", row.relation}, {"residual", row.residual}});
    text << "  " << row.relation << ": " << row.residual << "\n";
  }
  text << "  sphere difference (q^2 - 1)|beta|^2: " << report.sphere_difference << "\n";
  r.output["valid"] = report.valid;
  r.output["residuals"] = std::move(residuals);
  r.output["sphere_difference"] = report.sphere_difference;
  r.text = text.str();
  r.timing_ms = clock.elapsed_ms();
  return r;
}

RunReport cmd_iso_check(const Options&) {
  Stopwatch clock;
  RunReport r;
  r.command = "iso-check";
  const auto h = inversion_assignment();
  nlohmann::json images = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& gen : ideal_generators()) {
    const NCPoly image = substitute(gen.expr, h);
    r.add("image of '" + gen.name + "' reduces to 0", Source::Derived, image.is_zero(),
          image.is_zero() ? nlohmann::json(nullptr) : nlohmann::json(image.str()));
    images.push_back({{"generator", gen.name}, {"image", image.str()}});
    text << gen.name << " -> " << image.str() << "\n";
  }
  r.output["images"] = std::move(images);
  r.text = text.str();
  r.timing_ms = clock.elapsed_ms();
  return r;
}

std::string render(const RunReport& report, const Options& opts) {
  if (opts.format == Format::Json) return report.to_json(opts.timing).dump(1) + "\n";
  std::ostringstream out;
  out << report.text;
  out << "qsphere " << report.command << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : report.checks)
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << " (" << source_name(c.source) << ")\n";
  return out.str();
}

}  // namespace qsphere::cli
