#include "qsphere/qlaurent.hpp"
#include "qsphere/random.hpp"

#include <doctest.h>

using namespace qsphere;

namespace {

const QLaurent q = QLaurent::q();
const QLaurent one = 1;

Rational rat(long p, long r) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

}  // namespace

TEST_SUITE("coeffring") {
  TEST_CASE("arithmetic examples") {
    CHECK((one - q * q) + q * q == one);
    CHECK((one - q * q) * (one + q * q) == one - QLaurent::q(4));
    CHECK(q * QLaurent::q(-1) == one);
    CHECK(-(one - q) == q - one);
  }

  TEST_CASE("canonical form stores no zero coefficient") {
    QLaurent a = one + q;
    a -= q;
    CHECK(a.terms().size() == 1);
    CHECK(a == one);
    CHECK((a - one).is_zero());
    CHECK(QLaurent(0).terms().empty());
  }

  TEST_CASE("evaluation") {
    CHECK((one - q * q).eval(Rational(1)) == 0);
    CHECK((one - q * q).eval(rat(1, 2)) == rat(3, 4));
    CHECK((one - q * q).eval(0.5) == doctest::Approx(0.75));
    CHECK_THROWS_AS(QLaurent::q(-1).eval(Rational(0)), ZeroEvaluationError);
    CHECK_THROWS_AS(QLaurent::q(-1).eval(0.0), ZeroEvaluationError);
    CHECK(q.eval(Rational(0)) == 0);
  }

  TEST_CASE("q -> 1/q") {
    CHECK(q.invert_q() == QLaurent::q(-1));
    CHECK((one - q * q).invert_q() == one - QLaurent::q(-2));
  }

  TEST_CASE("rendering and parsing") {
    CHECK(QLaurent().str() == "0");
    CHECK((QLaurent(rat(1, 8)) - QLaurent::monomial(rat(1, 8), 2)).str() == "1/8 - 1/8*q^2");
    CHECK((-QLaurent(rat(1, 16)) + QLaurent::monomial(rat(1, 16), 2)).str() == "-1/16 + 1/16*q^2");
    CHECK(QLaurent::monomial(-2, -1).str() == "-2*q^-1");
    CHECK((QLaurent(1) - q * q).str() == "1 - 1*q^2");
    CHECK(QLaurent::parse("1/8 - 1/8*q^2") == QLaurent(rat(1, 8)) - QLaurent::monomial(rat(1, 8), 2));
    CHECK(QLaurent::parse("q") == q);
    CHECK(QLaurent::parse("-q^-2 + 3") == QLaurent(3) - QLaurent::q(-2));
    CHECK(QLaurent::parse("2/4*q^1") == QLaurent::monomial(rat(1, 2), 1));
    CHECK_THROWS_AS(QLaurent::parse(""), ParseError);
    CHECK_THROWS_AS(QLaurent::parse("1 +"), ParseError);
    CHECK_THROWS_AS(QLaurent::parse("1/0"), ParseError);
    CHECK_THROWS_AS(QLaurent::parse("x^2"), ParseError);
    CHECK(QLaurent::parse("0").is_zero());
  }

  TEST_CASE("latex") {
    CHECK((one - q * q).latex() == "-q^{2} + 1");
    CHECK(QLaurent(rat(1, 2)).latex() == "\\frac{1}{2}");
  }

  TEST_CASE("property: ring axioms, evaluation homomorphism, inversion automorphism") {
    Rng rng(20240601);
    for (int i = 0; i < 300; ++i) {
      const QLaurent a = random_qlaurent(rng), b = random_qlaurent(rng), c = random_qlaurent(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());

      const Rational q0 = rat(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) + 1);
      CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
      CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));

      CHECK(a.invert_q().invert_q() == a);
      CHECK((a * b).invert_q() == a.invert_q() * b.invert_q());
      CHECK((a + b).invert_q() == a.invert_q() + b.invert_q());

      CHECK(QLaurent::parse(a.str()) == a);
    }
  }
}
