#pragma once

#include "qsphere/ncalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsphere {

using Slots = std::vector<BasisMonomial>;

class ChainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of A (x) Abar^(x)m, Abar = A / C.1, expanded over basis tuples.
///
/// Tuples carrying the unit in any slot past the first are never stored.
class Chain {
 public:
  using TermMap = std::map<Slots, QLaurent>;

  explicit Chain(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QLaurent coeff(const Slots& slots) const;

  /// Adds c * (s_0 (x) ... (x) s_m); silently drops degenerate tuples.
  void add_term(const Slots& slots, const QLaurent& c);

  Chain operator-() const;
  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const QLaurent& c);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const QLaurent& c, Chain a) { return a *= c; }
  friend bool operator==(const Chain&, const Chain&) = default;

  /// Specializes every coefficient at q = q0 (results are constant Laurent polynomials).
  Chain eval_at(const Rational& q0) const;
  Chain map_coefficients(const std::function<QLaurent(const QLaurent&)>& f) const;

  std::string str() const;

 private:
  int degree_;
  TermMap terms_;
};

/// c * (p_0 (x) ... (x) p_m) with polynomial slots, before expansion.
struct RawTensor {
  QLaurent coeff;
  std::vector<NCPoly> slots;
};

/// Multilinear expansion into basis tuples, dropping units in slots >= 1.
Chain normalize_chain(const std::vector<RawTensor>& raw);

/// Hochschild boundary; degree(c) must be >= 1.
Chain boundary_b(const Chain& c);

enum class BConvention {
  /// B = A B_0 as a literal composition: on normalized chains only the j = 0
  /// cyclic term survives, leaving (1/m) 1 (x) c with m = degree(c) (1 at m = 0).
  PaperDerived,
  /// Connes' operator on the normalized complex:
  ///   B(a_0 (x) ... (x) a_m) = sum_j (-1)^(mj) 1 (x) a_j (x) ... (x) a_(j-1).
  Standard,
};

std::string_view convention_name(BConvention c);
BConvention parse_convention(std::string_view name);

Chain operator_B(const Chain& c, BConvention convention = BConvention::PaperDerived);

/// Literal implementations of the two factors of B = A B_0, for cross-checks.
/// These work on raw (unnormalized) tuples so the projection can be applied last.
std::vector<std::pair<Slots, QLaurent>> prepend_unit(const Chain& c);
std::vector<std::pair<Slots, QLaurent>> cyclic_antisymmetrize(
    const std::vector<std::pair<Slots, QLaurent>>& raw, const QLaurent& scale);
Chain operator_B_literal(const Chain& c);

bool chain_eq(const Chain& a, const Chain& b);

}  // namespace qsphere
