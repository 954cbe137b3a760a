#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsphere {

using Rational = mpq_class;

/// Thrown when a Laurent polynomial with negative powers is evaluated at q = 0.
class ZeroEvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Laurent polynomial in the deformation parameter q with rational coefficients.
///
/// Stored sparsely as exponent -> coefficient. Zero coefficients are never
/// stored, so equality of values is equality of the term maps.
class QLaurent {
 public:
  using TermMap = std::map<int, Rational>;

  QLaurent() = default;
  QLaurent(long c);  // NOLINT(google-explicit-constructor)
  QLaurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// c * q^exponent
  static QLaurent monomial(const Rational& c, int exponent);
  static QLaurent q(int exponent = 1) { return monomial(1, exponent); }

  /// Parses the textual form produced by str(), e.g. "1/8 - 1/8*q^2".
  static QLaurent parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of q^exponent (zero when absent).
  Rational coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) = default;

  /// Exact evaluation at a rational point.
  Rational eval(const Rational& q0) const;
  /// Floating evaluation.
  double eval(double q0) const;
  std::complex<double> eval(std::complex<double> q0) const;

  /// Replaces q by 1/q.
  QLaurent invert_q() const;

  std::string str() const;
  std::string latex() const;

 private:
  void add_term(int exponent, const Rational& c);

  TermMap terms_;
};

std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace qsphere
