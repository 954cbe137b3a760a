#pragma once

#include "qsphere/qlaurent.hpp"

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qsphere {

/// Letters of the free *-algebra. z is selfadjoint, so z* is written as Z.
enum class Generator : std::uint8_t { AL, ALS, BE, BES, Z };

Generator star(Generator g);
std::string_view generator_name(Generator g);

using Word = std::vector<Generator>;

/// Normal-form basis element:
///   alpha*^k beta*^m beta^n z^l   for k >= 0
///   alpha^(-k) beta*^m beta^n z^l for k < 0
struct BasisMonomial {
  int k = 0;
  int m = 0;
  int n = 0;
  int l = 0;

  static constexpr BasisMonomial unit() { return {}; }
  bool is_unit() const { return k == 0 && m == 0 && n == 0 && l == 0; }
  /// Number of generator letters in the monomial.
  int degree() const { return (k < 0 ? -k : k) + m + n + l; }

  friend auto operator<=>(const BasisMonomial&, const BasisMonomial&) = default;

  /// Canonical form, e.g. "al^2 be* z", "al* be^3", "1".
  std::string str() const;
  std::string latex() const;
  static BasisMonomial parse(std::string_view text);
};

/// Element of the dense *-subalgebra of A_q, expanded over the normal-form basis.
class NCPoly {
 public:
  using TermMap = std::map<BasisMonomial, QLaurent>;

  NCPoly() = default;
  NCPoly(const QLaurent& c);  // NOLINT(google-explicit-constructor)
  NCPoly(long c) : NCPoly(QLaurent(c)) {}  // NOLINT(google-explicit-constructor)

  static NCPoly monomial(const BasisMonomial& mono, const QLaurent& c = 1);
  static NCPoly generator(Generator g);
  static NCPoly alpha() { return generator(Generator::AL); }
  static NCPoly alpha_star() { return generator(Generator::ALS); }
  static NCPoly beta() { return generator(Generator::BE); }
  static NCPoly beta_star() { return generator(Generator::BES); }
  static NCPoly z() { return generator(Generator::Z); }

  /// Parses a sum of "coeff * monomial" terms, e.g. "1 - q^2 * be* be - z^2".
  /// Coefficients may be parenthesized Laurent polynomials: "(1 - q^2) * z".
  static NCPoly parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QLaurent coeff(const BasisMonomial& mono) const;
  int degree() const;

  void add_term(const BasisMonomial& mono, const QLaurent& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const QLaurent& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const QLaurent& c, NCPoly a) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) = default;

  /// Applies a coefficient map (e.g. q -> 1/q or evaluation at a point) termwise.
  NCPoly map_coefficients(const std::function<QLaurent(const QLaurent&)>& f) const;

  std::string str() const;
  std::string latex() const;

 private:
  TermMap terms_;
};

/// Product of two basis monomials in normal form.
NCPoly monomial_product(const BasisMonomial& a, const BasisMonomial& b);

NCPoly nf_mul(const NCPoly& x, const NCPoly& y);
NCPoly normal_form(const Word& w);
NCPoly star(const NCPoly& x);
/// Expansion of a basis monomial back into its letters.
Word to_word(const BasisMonomial& mono);

/// Formal linear combination of words, before any reduction.
class FreeExpr {
 public:
  using TermMap = std::map<Word, QLaurent>;

  FreeExpr() = default;
  static FreeExpr word(Word w, const QLaurent& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FreeExpr& operator+=(const FreeExpr& o);
  FreeExpr& operator-=(const FreeExpr& o);
  friend FreeExpr operator+(FreeExpr a, const FreeExpr& b) { return a += b; }
  friend FreeExpr operator-(FreeExpr a, const FreeExpr& b) { return a -= b; }
  friend FreeExpr operator*(const QLaurent& c, const FreeExpr& a);
  friend bool operator==(const FreeExpr&, const FreeExpr&) = default;

  NCPoly reduce() const;
  std::string str() const;

 private:
  TermMap terms_;
};

struct IdealGenerator {
  std::string name;
  FreeExpr expr;
};

/// The ten generators of the defining ideal, as unreduced expressions.
std::vector<IdealGenerator> ideal_generators();

// ---------------------------------------------------------------------------
// Substitution engine

/// Minimal algebra interface a substitution target has to provide.
template <class T>
concept SubstitutionTarget = requires(T a, T b) {
  { a + b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
};

/// Images of the generators in a target algebra. Star images are derived
/// through the target involution; `scalar` embeds a coefficient as
/// c times the target unit (and carries any coefficient map such as q -> 1/q).
template <SubstitutionTarget T>
struct GeneratorAssignment {
  T alpha;
  T beta;
  T z;
  std::function<T(const T&)> star;
  std::function<T(const QLaurent&)> scalar;
};

namespace detail {

template <SubstitutionTarget T>
struct ResolvedAssignment {
  T images[5];
  const GeneratorAssignment<T>* h;

  explicit ResolvedAssignment(const GeneratorAssignment<T>& a)
      : images{a.alpha, a.star(a.alpha), a.beta, a.star(a.beta), a.z}, h(&a) {}

  const T& operator[](Generator g) const { return images[static_cast<int>(g)]; }

  T power(Generator g, int e) const {
    T r = h->scalar(1);
    for (int i = 0; i < e; ++i) r = r * (*this)[g];
    return r;
  }
};

}  // namespace detail

template <SubstitutionTarget T>
T substitute(const NCPoly& x, const GeneratorAssignment<T>& h) {
  detail::ResolvedAssignment<T> r(h);
  T acc = h.scalar(0);
  for (const auto& [mono, c] : x.terms()) {
    T term = h.scalar(c);
    if (mono.k > 0) term = term * r.power(Generator::ALS, mono.k);
    if (mono.k < 0) term = term * r.power(Generator::AL, -mono.k);
    term = term * r.power(Generator::BES, mono.m);
    term = term * r.power(Generator::BE, mono.n);
    term = term * r.power(Generator::Z, mono.l);
    acc = acc + term;
  }
  return acc;
}

template <SubstitutionTarget T>
T substitute(const FreeExpr& x, const GeneratorAssignment<T>& h) {
  detail::ResolvedAssignment<T> r(h);
  T acc = h.scalar(0);
  for (const auto& [word, c] : x.terms()) {
    T term = h.scalar(c);
    for (Generator g : word) term = term * r[g];
    acc = acc + term;
  }
  return acc;
}

/// The map q -> 1/q, alpha -> alpha*, beta -> q beta, z -> z into A_q.
GeneratorAssignment<NCPoly> inversion_assignment();

}  // namespace qsphere
