#include "qsphere/random.hpp"
#include "qsphere/repsim.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace qsphere;

namespace {

double max_residual(const std::vector<RelationResidual>& rows) {
  double worst = 0;
  for (const auto& r : rows) worst = std::max(worst, r.residual);
  return worst;
}

const RelationResidual& find(const std::vector<RelationResidual>& rows, const std::string& name) {
  return *std::find_if(rows.begin(), rows.end(), [&](const RelationResidual& r) { return r.relation == name; });
}

}  // namespace

TEST_SUITE("repsim") {
  TEST_CASE("operators") {
    const TruncatedRep rep = build_rep(0.5, 1.0, Sign::Plus, 4);
    CMatrix expected = CMatrix::Zero(4, 4);
    expected.diagonal() << 1.0, 0.5, 0.25, 0.125;
    CHECK((rep.op_beta - expected).norm() < 1e-15);
    CHECK(rep.op_z.norm() == 0.0);

    const TruncatedRep minus = build_rep(0.5, 1.0, Sign::Minus, 4);
    CHECK((rep.op_alpha - minus.op_alpha).norm() == 0.0);
    CHECK((rep.op_z - minus.op_z).norm() == 0.0);

    const TruncatedRep z_rep = build_rep(0.5, 0.6, Sign::Minus, 5);
    CHECK((z_rep.op_z + 0.8 * CMatrix::Identity(5, 5)).norm() < 1e-15);

    CHECK(interior_dim(rep, 2) == 2);
    CHECK(interior_dim(rep, 0) == 3);
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_rep(1.5, 0.5, Sign::Plus, 8), InvalidParameter);
    CHECK_THROWS_AS(build_rep(0.0, 0.5, Sign::Plus, 8), InvalidParameter);
    CHECK_THROWS_AS(build_rep(-1.0, 0.5, Sign::Plus, 8), InvalidParameter);
    CHECK_THROWS_AS(build_rep(0.5, Complex(1.0, 1.0), Sign::Plus, 8), InvalidParameter);
    CHECK_THROWS_AS(build_rep(0.5, 0.5, Sign::Plus, 1), InvalidParameter);
    CHECK_NOTHROW(build_rep(1.0, 0.5, Sign::Plus, 8));
    CHECK_NOTHROW(build_rep(-0.5, 0.5, Sign::Minus, 8));
  }

  TEST_CASE("relations hold on the interior") {
    for (double qv : {0.5, 0.9, 1.0, -0.3}) {
      for (Complex lam : {Complex(0.8, 0.0), Complex(0.6, 0.8), Complex(0.0, 0.3), Complex(1.0, 0.0)}) {
        const auto rows = relation_residuals(build_rep(qv, lam, Sign::Minus, 64));
        REQUIRE(rows.size() == 10);
        CAPTURE(qv);
        CHECK(max_residual(rows) <= 1e-12);
        for (const auto& r : rows) CHECK(r.subspace_dim == 63);
      }
    }
  }

  TEST_CASE("truncation edge") {
    const double qv = 0.5;
    const Complex lam(0.8, 0.0);
    const int n = 6;
    const auto rows = relation_residuals(build_rep(qv, lam, Sign::Plus, n));
    const auto& r = find(rows, "al* al + q^2 be* be + z^2 - 1");
    CHECK(r.residual <= 1e-12);
    CHECK(r.full_residual == doctest::Approx(std::norm(lam) * (1.0 - std::pow(qv, 2 * n))).epsilon(1e-12));
  }

  TEST_CASE("evaluation is a homomorphism on the interior") {
    const TruncatedRep rep = build_rep(0.7, Complex(0.6, 0.3), Sign::Plus, 32);
    CHECK((rep_evaluate(rep, NCPoly(1)) - CMatrix::Identity(32, 32)).norm() == 0.0);
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      const NCPoly x = random_ncpoly(rng, 2), y = random_ncpoly(rng, 2);
      const OracleErrors err = oracle_errors(rep, x, y);
      REQUIRE(err.product <= 1e-10);
      REQUIRE(err.star <= 1e-10);
    }
  }

  TEST_CASE("the projection evaluates to a projection") {
    const int n = 16;
    const TruncatedRep rep = build_rep(0.5, Complex(0.6, 0.0), Sign::Plus, n);
    const CMatrix e = rep_evaluate(rep, instanton_idempotent());
    const CMatrix defect = e * e - e;
    double worst = 0;
    for (int block = 0; block < 4; ++block)
      for (int j = 0; j < n - 2; ++j) worst = std::max(worst, defect.col(block * n + j).norm());
    CHECK(worst <= 1e-10);
    CHECK((e - e.adjoint()).norm() <= 1e-12);
  }

  TEST_CASE("scalar points") {
    const CharacterReport bad = character_check(0.5, 0.6, 0.8, 0.0);
    CHECK_FALSE(bad.valid);
    double worst = 0;
    for (const auto& r : bad.residuals) worst = std::max(worst, r.residual);
    CHECK(worst == doctest::Approx(0.48));
    CHECK(bad.sphere_difference == doctest::Approx(-0.48));

    CHECK(character_check(0.5, 0.6, 0.0, 0.8).valid);
    CHECK(character_check(1.0, 0.6, Complex(0.0, 0.8), 0.0).valid);
    CHECK_FALSE(character_check(1.0, 0.6, 0.6, 0.0).valid);
    CHECK(character_check(-1.0, 0.0, 0.6, 0.8).valid);
    CHECK_FALSE(character_check(-1.0, 0.6, 0.8, 0.0).valid);
  }

  TEST_CASE("property: generator evaluation agrees with the closed form") {
    Rng rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double qv : {0.5, 1.0, -1.0, -0.4}) {
      for (int i = 0; i < 200; ++i) {
        // half the samples sit on the unit sphere with beta = 0 or alpha = 0
        Complex a(u(rng), u(rng)), b(u(rng), u(rng));
        double z = u(rng);
        if (i % 2 == 0) {
          if (i % 4 == 0) b = 0; else a = 0;
          const double r = std::sqrt(std::norm(a) + std::norm(b) + z * z);
          a /= r;
          b /= r;
          z /= r;
        }
        CAPTURE(qv);
        CAPTURE(i);
        REQUIRE(character_check(qv, a, b, z, 1e-12).valid == is_classical_point(qv, a, b, z, 1e-12));
      }
    }
  }

  TEST_CASE("parsing") {
    CHECK(parse_complex("0.8") == Complex(0.8, 0.0));
    CHECK(parse_complex("0.6+0.8i") == Complex(0.6, 0.8));
    CHECK(parse_complex("0.3-0.1i") == Complex(0.3, -0.1));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("2i") == Complex(0.0, 2.0));
    CHECK(parse_complex("1e-3+2e-1i") == Complex(1e-3, 2e-1));
    CHECK_THROWS_AS(parse_complex("abc"), InvalidParameter);
    CHECK_THROWS_AS(parse_complex(""), InvalidParameter);
    CHECK(parse_sign("minus") == Sign::Minus);
    CHECK(sign_name(Sign::Plus) == "plus");
    CHECK_THROWS_AS(parse_sign("up"), InvalidParameter);
  }
}
