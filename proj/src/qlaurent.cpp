#include "qsphere/qlaurent.hpp"

#include <cctype>
#include <cmath>

namespace qsphere {

QLaurent::QLaurent(long c) : QLaurent(Rational(c)) {}

QLaurent::QLaurent(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

QLaurent QLaurent::monomial(const Rational& c, int exponent) {
  QLaurent r;
  r.add_term(exponent, c);
  return r;
}

void QLaurent::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool QLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational QLaurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int QLaurent::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int QLaurent::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) { return *this = *this * o; }

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational result = 1;
  Rational b = base;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  while (n) {
    if (n & 1u) result *= b;
    b *= b;
    n >>= 1u;
  }
  if (e < 0) result = 1 / result;
  return result;
}

template <class T>
T eval_generic(const QLaurent::TermMap& terms, const T& q0, bool q_is_zero) {
  T acc{0};
  for (const auto& [e, c] : terms) {
    if (e < 0 && q_is_zero) throw ZeroEvaluationError("negative power of q evaluated at q = 0");
    acc += T(c.get_d()) * std::pow(q0, e);
  }
  return acc;
}

}  // namespace

Rational QLaurent::eval(const Rational& q0) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && q0 == 0) throw ZeroEvaluationError("negative power of q evaluated at q = 0");
    acc += c * rational_pow(q0, e);
  }
  return acc;
}

double QLaurent::eval(double q0) const { return eval_generic<double>(terms_, q0, q0 == 0.0); }

std::complex<double> QLaurent::eval(std::complex<double> q0) const {
  return eval_generic<std::complex<double>>(terms_, q0, q0 == 0.0);
}

QLaurent QLaurent::invert_q() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += rational_str(mag);
    if (e != 0) out += "*q^" + std::to_string(e);
    first = false;
  }
  return out;
}

std::string QLaurent::latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit_coeff = mag == 1 && e != 0;
    if (!unit_coeff) {
      if (mag.get_den() == 1)
        out += mag.get_num().get_str();
      else
        out += "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    }
    if (e == 1)
      out += "q";
    else if (e != 0)
      out += "q^{" + std::to_string(e) + "}";
    first = false;
  }
  return out;
}

QLaurent QLaurent::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty Laurent polynomial");

  QLaurent result;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad Laurent polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected sign");
    }
    Rational c = 1;
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    bool has_number = i > start;
    if (has_number) c = parse_rational(std::string_view(s).substr(start, i - start));
    int exponent = 0;
    bool has_q = false;
    if (i < s.size() && s[i] == '*') {
      if (!has_number) fail("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 'q') fail("expected 'q' after '*'");
    }
    if (i < s.size() && s[i] == 'q') {
      has_q = true;
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es || !std::isdigit(static_cast<unsigned char>(s[i - 1]))) fail("bad exponent");
        exponent = std::stoi(s.substr(es, i - es));
      }
    }
    if (!has_number && !has_q) fail("empty term");
    result.add_term(exponent, sign * c);
  }
  return result;
}

}  // namespace qsphere
