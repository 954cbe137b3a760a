#pragma once

#include "qsphere/homology.hpp"
#include "qsphere/ncalg.hpp"

#include <random>

namespace qsphere {

using Rng = std::mt19937_64;

/// Small sparse Laurent polynomial: up to `max_terms` terms, exponents in [-2, 3],
/// coefficients p/r with |p| <= 5, 1 <= r <= 4.
QLaurent random_qlaurent(Rng& rng, int max_terms = 3);

/// Random basis monomial of total degree <= max_degree.
BasisMonomial random_monomial(Rng& rng, int max_degree);

/// Random polynomial with 1..max_terms terms of degree <= max_degree.
NCPoly random_ncpoly(Rng& rng, int max_degree, int max_terms = 3);

/// Random normalized chain; slots >= 1 are non-unit monomials of degree <= max_slot_degree.
Chain random_chain(Rng& rng, int degree, int max_terms = 3, int max_slot_degree = 2);

}  // namespace qsphere
