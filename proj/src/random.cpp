#include "qsphere/random.hpp"

namespace qsphere {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

QLaurent random_qlaurent(Rng& rng, int max_terms) {
  QLaurent r;
  const int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i) {
    int p = uniform(rng, -5, 5);
    if (p == 0) p = 1;
    Rational c(p, uniform(rng, 1, 4));
    c.canonicalize();
    r += QLaurent::monomial(c, uniform(rng, -2, 3));
  }
  return r;
}

BasisMonomial random_monomial(Rng& rng, int max_degree) {
  BasisMonomial mono;
  int alpha_power = 0;
  for (int budget = uniform(rng, 0, max_degree); budget > 0; --budget) {
    switch (uniform(rng, 0, 3)) {
      case 0: ++alpha_power; break;
      case 1: ++mono.m; break;
      case 2: ++mono.n; break;
      default: ++mono.l; break;
    }
  }
  mono.k = uniform(rng, 0, 1) ? alpha_power : -alpha_power;
  return mono;
}

NCPoly random_ncpoly(Rng& rng, int max_degree, int max_terms) {
  NCPoly p;
  const int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i) p.add_term(random_monomial(rng, max_degree), random_qlaurent(rng));
  return p;
}

Chain random_chain(Rng& rng, int degree, int max_terms, int max_slot_degree) {
  Chain c(degree);
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Slots slots(static_cast<std::size_t>(degree + 1));
    slots[0] = random_monomial(rng, max_slot_degree);
    for (int i = 1; i <= degree; ++i) {
      BasisMonomial mono;
      do {
        mono = random_monomial(rng, max_slot_degree);
      } while (mono.is_unit());
      slots[static_cast<std::size_t>(i)] = mono;
    }
    c.add_term(slots, random_qlaurent(rng));
  }
  return c;
}

}  // namespace qsphere
