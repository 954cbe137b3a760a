#include "commands.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qsphere;
using namespace qsphere::cli;

TEST_SUITE("commands") {
  TEST_CASE("verify-idempotent") {
    const RunReport r = cmd_verify_idempotent({});
    CHECK(r.passed());
    CHECK(r.checks.size() == 3);
    const auto j = r.to_json(false);
    CHECK(j["status"] == "pass");
    CHECK_FALSE(j.contains("timing_ms"));
    CHECK(r.to_json(true).contains("timing_ms"));
  }

  TEST_CASE("chern") {
    const RunReport r1 = cmd_chern(1, {});
    CHECK(r1.passed());
    CHECK(r1.output["terms"] == 6);
    const RunReport r2 = cmd_chern(2, {});
    CHECK(r2.passed());
    CHECK(r2.output["terms"] == 150);
    CHECK(r2.output.contains("blocks"));

    Options at_one;
    at_one.q_at = Rational(1);
    const RunReport r1q = cmd_chern(1, at_one);
    CHECK(r1q.passed());
    CHECK(r1q.output["terms"] == 0);
  }

  TEST_CASE("verify-cycle") {
    CHECK(cmd_verify_cycle(0, {}).passed());
    const RunReport r = cmd_verify_cycle(1, {});
    CHECK(r.passed());
    CHECK(r.output["upper_component_terms"] == 150);
    CHECK(r.output["boundary_products"] == 750);
    CHECK_FALSE(r.output.contains("difference"));

    Options std_opts;
    std_opts.convention = BConvention::Standard;
    const RunReport s = cmd_verify_cycle(1, std_opts);
    CHECK_FALSE(s.passed());
    CHECK(s.output.contains("difference"));
    CHECK(s.to_json(false)["status"] == "fail");
  }

  TEST_CASE("rep") {
    RepRequest req;
    req.qval = 0.5;
    req.lambda = {0.8, 0.0};
    req.dim = 64;
    req.oracle_samples = 20;
    const RunReport r = cmd_rep(req, {});
    CHECK(r.passed());
    CHECK(r.output["residuals"].size() == 10);
    CHECK(r.output.contains("oracle"));

    RepRequest edge = req;
    edge.lambda = {0.6, 0.8};
    CHECK(cmd_rep(edge, {}).passed());

    const nlohmann::json grid = {{"q", {0.5, 1.0}}, {"lambda", {"0.8", "0.6+0.8i"}}, {"sign", {"plus", "minus"}}, {"N", 32}};
    const RunReport sweep = cmd_rep_sweep(grid, req, {});
    CHECK(sweep.passed());
    CHECK(sweep.output["points"].size() == 8);
  }

  TEST_CASE("character") {
    const RunReport bad = cmd_character(0.5, 0.6, 0.8, 0.0, {});
    CHECK(bad.passed());
    CHECK(bad.output["valid"] == false);
    const RunReport good = cmd_character(1.0, 0.6, Complex(0.0, 0.8), 0.0, {});
    CHECK(good.output["valid"] == true);
  }

  TEST_CASE("iso-check") {
    const RunReport r = cmd_iso_check({});
    CHECK(r.passed());
    CHECK(r.checks.size() == 10);
  }

  TEST_CASE("json output is deterministic") {
    Options opts;
    opts.format = Format::Json;
    CHECK(render(cmd_verify_cycle(1, opts), opts) == render(cmd_verify_cycle(1, opts), opts));
    CHECK(render(cmd_chern(2, opts), opts) == render(cmd_chern(2, opts), opts));
  }

  TEST_CASE("csv") {
    const auto rows = relation_residuals(build_rep(0.5, 0.8, Sign::Plus, 16));
    const std::string csv = residual_csv(rows);
    CHECK(csv.rfind("relation,residual,subspace_dim\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
  }
}
