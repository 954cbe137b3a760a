#include "qsphere/ncalg.hpp"

#include <cctype>
#include <utility>

namespace qsphere {

Generator star(Generator g) {
  switch (g) {
    case Generator::AL: return Generator::ALS;
    case Generator::ALS: return Generator::AL;
    case Generator::BE: return Generator::BES;
    case Generator::BES: return Generator::BE;
    case Generator::Z: return Generator::Z;
  }
  return g;
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::AL: return "al";
    case Generator::ALS: return "al*";
    case Generator::BE: return "be";
    case Generator::BES: return "be*";
    case Generator::Z: return "z";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// BasisMonomial

namespace {

void append_power(std::string& out, std::string_view name, int e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += name;
  if (e != 1) out += "^" + std::to_string(e);
}

void append_latex_power(std::string& out, std::string_view name, int e) {
  if (e == 0) return;
  out += name;
  if (e != 1) out += "^{" + std::to_string(e) + "}";
}

}  // namespace

std::string BasisMonomial::str() const {
  if (is_unit()) return "1";
  std::string out;
  if (k < 0) append_power(out, "al", -k);
  if (k > 0) append_power(out, "al*", k);
  append_power(out, "be*", m);
  append_power(out, "be", n);
  append_power(out, "z", l);
  return out;
}

std::string BasisMonomial::latex() const {
  if (is_unit()) return "\\mathbb{I}";
  std::string out;
  // a starred letter with a power needs braces: {\alpha^*}^{2}
  auto starred = [&](std::string_view base, int e) {
    if (e == 0) return;
    if (e == 1)
      out += std::string(base) + "^*";
    else
      out += "{" + std::string(base) + "^*}^{" + std::to_string(e) + "}";
  };
  if (k < 0) append_latex_power(out, "\\alpha", -k);
  starred("\\alpha", k > 0 ? k : 0);
  starred("\\beta", m);
  append_latex_power(out, "\\beta", n);
  append_latex_power(out, "z", l);
  return out;
}

BasisMonomial BasisMonomial::parse(std::string_view text) {
  BasisMonomial mono;
  std::string s(text);
  std::size_t i = 0;
  int stage = 0;  // enforces the canonical factor order
  auto fail = [&](const std::string& why) {
    throw ParseError("bad monomial '" + s + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first != std::string::npos && s.substr(first, last - first + 1) == "1") return mono;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    std::size_t start = i;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    std::string name = s.substr(start, i - start);
    if (i < s.size() && s[i] == '*') {
      name += '*';
      ++i;
    }
    int e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t es = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == es) fail("missing exponent");
      e = std::stoi(s.substr(es, i - es));
      if (e <= 0) fail("exponent must be positive");
    }
    int this_stage;
    if (name == "al") {
      this_stage = 1;
      mono.k = -e;
    } else if (name == "al*") {
      this_stage = 1;
      mono.k = e;
    } else if (name == "be*") {
      this_stage = 2;
      mono.m = e;
    } else if (name == "be") {
      this_stage = 3;
      mono.n = e;
    } else if (name == "z") {
      this_stage = 4;
      mono.l = e;
    } else {
      fail("unknown factor '" + name + "'");
    }
    if (this_stage <= stage) fail("factors out of canonical order");
    stage = this_stage;
  }
  if (stage == 0) fail("empty monomial");
  return mono;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly::NCPoly(const QLaurent& c) {
  if (!c.is_zero()) terms_.emplace(BasisMonomial::unit(), c);
}

NCPoly NCPoly::monomial(const BasisMonomial& mono, const QLaurent& c) {
  NCPoly r;
  r.add_term(mono, c);
  return r;
}

NCPoly NCPoly::generator(Generator g) {
  BasisMonomial mono;
  switch (g) {
    case Generator::AL: mono.k = -1; break;
    case Generator::ALS: mono.k = 1; break;
    case Generator::BE: mono.n = 1; break;
    case Generator::BES: mono.m = 1; break;
    case Generator::Z: mono.l = 1; break;
  }
  return monomial(mono);
}

QLaurent NCPoly::coeff(const BasisMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? QLaurent() : it->second;
}

int NCPoly::degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

void NCPoly::add_term(const BasisMonomial& mono, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const QLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) { return nf_mul(a, b); }

NCPoly NCPoly::map_coefficients(const std::function<QLaurent(const QLaurent&)>& f) const {
  NCPoly r;
  for (const auto& [mono, c] : terms_) r.add_term(mono, f(c));
  return r;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (mono.is_unit()) {
      out += "(" + c.str() + ")";
    } else if (c == QLaurent(1)) {
      out += mono.str();
    } else {
      out += "(" + c.str() + ") " + mono.str();
    }
  }
  return out;
}

std::string NCPoly::latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c == QLaurent(1)) {
      out += mono.latex();
    } else {
      out += "\\left(" + c.latex() + "\\right)";
      if (!mono.is_unit()) out += " " + mono.latex();
    }
  }
  return out;
}

NCPoly NCPoly::parse(std::string_view text) {
  // term := ["-"] ( "(" qlaurent ")" [monomial] | monomial )   joined by "+"/"-"
  std::string s(text);
  NCPoly result;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (s.substr(i) == "0") return result;
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("bad polynomial '" + s + "': expected '+' or '-'");
    }
    QLaurent c = 1;
    if (i < s.size() && s[i] == '(') {
      int depth = 0;
      std::size_t start = i + 1;
      for (; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) break;
      }
      if (i >= s.size()) throw ParseError("bad polynomial '" + s + "': unbalanced parenthesis");
      c = QLaurent::parse(std::string_view(s).substr(start, i - start));
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string mono_text = s.substr(start, i - start);
    BasisMonomial mono;
    if (mono_text.find_first_not_of(" \t") != std::string::npos) mono = BasisMonomial::parse(mono_text);
    result.add_term(mono, sign == 1 ? c : -c);
    first = false;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Normal-form multiplication

namespace {

/// x * c where c only involves beta*, beta, z (which commute with each other).
NCPoly times_commutative(const NCPoly& x, const NCPoly& c) {
  NCPoly r;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [mc, cc] : c.terms())
      r.add_term({mx.k, mx.m + mc.m, mx.n + mc.n, mx.l + mc.l}, cx * cc);
  return r;
}

/// 1 - coeff * beta* beta - z^2
NCPoly sphere_factor(const QLaurent& beta_coeff) {
  NCPoly f(1);
  f.add_term({0, 1, 1, 0}, -beta_coeff);
  f.add_term({0, 0, 0, 2}, -1);
  return f;
}

/// Product of alpha-powers (encoded as in BasisMonomial::k) in normal form.
/// Each step peels one alpha*alpha or alpha alpha* pair off the middle via the
/// sphere relations, so the recursion depth is min(|a|, |b|).
const NCPoly& alpha_product(int a, int b) {
  thread_local std::map<std::pair<int, int>, NCPoly> cache;
  auto key = std::make_pair(a, b);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  NCPoly result;
  if (a == 0 || b == 0 || (a > 0) == (b > 0)) {
    result = NCPoly::monomial({a + b, 0, 0, 0});
  } else if (a > 0) {
    // alpha*^a alpha^j = alpha*^(a-1) (1 - q^2 be* be - z^2) alpha^(j-1)
    //                  = alpha*^(a-1) alpha^(j-1) (1 - q^(2j) be* be - z^2)
    int j = -b;
    result = times_commutative(alpha_product(a - 1, b + 1), sphere_factor(QLaurent::q(2 * j)));
  } else {
    // alpha^i alpha*^c = alpha^(i-1) (1 - be* be - z^2) alpha*^(c-1)
    //                  = alpha^(i-1) alpha*^(c-1) (1 - q^(-2(c-1)) be* be - z^2)
    result = times_commutative(alpha_product(a + 1, b - 1), sphere_factor(QLaurent::q(-2 * (b - 1))));
  }
  return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace

NCPoly monomial_product(const BasisMonomial& a, const BasisMonomial& b) {
  // a.alpha a.comm b.alpha b.comm: move a.comm right past b.alpha.
  // beta, beta* pick up q per alpha and q^-1 per alpha*.
  int shift = -(a.m + a.n) * b.k;
  NCPoly head = alpha_product(a.k, b.k);
  NCPoly tail = NCPoly::monomial({0, a.m + b.m, a.n + b.n, a.l + b.l}, QLaurent::q(shift));
  return times_commutative(head, tail);
}

NCPoly nf_mul(const NCPoly& x, const NCPoly& y) {
  NCPoly r;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      const QLaurent c = cx * cy;
      const NCPoly product = monomial_product(mx, my);
      for (const auto& [mono, cm] : product.terms()) r.add_term(mono, c * cm);
    }
  return r;
}

NCPoly normal_form(const Word& w) {
  NCPoly r(1);
  for (Generator g : w) r = nf_mul(r, NCPoly::generator(g));
  return r;
}

NCPoly star(const NCPoly& x) {
  // (A C)* = C* A*; moving C* = be*^n be^m z^l back past A* gives q^((m+n)k).
  NCPoly r;
  for (const auto& [mono, c] : x.terms())
    r.add_term({-mono.k, mono.n, mono.m, mono.l}, c * QLaurent::q((mono.m + mono.n) * mono.k));
  return r;
}

Word to_word(const BasisMonomial& mono) {
  Word w;
  w.insert(w.end(), static_cast<std::size_t>(mono.k < 0 ? -mono.k : 0), Generator::AL);
  w.insert(w.end(), static_cast<std::size_t>(mono.k > 0 ? mono.k : 0), Generator::ALS);
  w.insert(w.end(), static_cast<std::size_t>(mono.m), Generator::BES);
  w.insert(w.end(), static_cast<std::size_t>(mono.n), Generator::BE);
  w.insert(w.end(), static_cast<std::size_t>(mono.l), Generator::Z);
  return w;
}

// ---------------------------------------------------------------------------
// FreeExpr

FreeExpr FreeExpr::word(Word w, const QLaurent& c) {
  FreeExpr r;
  if (!c.is_zero()) r.terms_.emplace(std::move(w), c);
  return r;
}

FreeExpr& FreeExpr::operator+=(const FreeExpr& o) {
  for (const auto& [w, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

FreeExpr& FreeExpr::operator-=(const FreeExpr& o) { return *this += QLaurent(-1) * o; }

FreeExpr operator*(const QLaurent& c, const FreeExpr& a) {
  FreeExpr r;
  if (c.is_zero()) return r;
  for (const auto& [w, coeff] : a.terms_) r.terms_.emplace(w, c * coeff);
  return r;
}

NCPoly FreeExpr::reduce() const {
  NCPoly r;
  for (const auto& [w, c] : terms_) r += c * normal_form(w);
  return r;
}

std::string FreeExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (Generator g : w) {
      out += ' ';
      out += generator_name(g);
    }
  }
  return out;
}

std::vector<IdealGenerator> ideal_generators() {
  using G = Generator;
  auto w = [](Word word, const QLaurent& c = 1) { return FreeExpr::word(std::move(word), c); };
  const QLaurent q = QLaurent::q();
  // z* is the same letter as z, so "z - z*" collapses to the zero expression.
  return {
      {"be al - q al be", w({G::BE, G::AL}) - w({G::AL, G::BE}, q)},
      {"be* al - q al be*", w({G::BES, G::AL}) - w({G::AL, G::BES}, q)},
      {"be* be - be be*", w({G::BES, G::BE}) - w({G::BE, G::BES})},
      {"al* be* - q be* al*", w({G::ALS, G::BES}) - w({G::BES, G::ALS}, q)},
      {"al* be - q be al*", w({G::ALS, G::BE}) - w({G::BE, G::ALS}, q)},
      {"z - z*", w({G::Z}) - w({G::Z})},
      {"z al - al z", w({G::Z, G::AL}) - w({G::AL, G::Z})},
      {"z be - be z", w({G::Z, G::BE}) - w({G::BE, G::Z})},
      {"al* al + q^2 be* be + z^2 - 1",
       w({G::ALS, G::AL}) + w({G::BES, G::BE}, QLaurent::q(2)) + w({G::Z, G::Z}) - w({})},
      {"al al* + be* be + z^2 - 1", w({G::AL, G::ALS}) + w({G::BES, G::BE}) + w({G::Z, G::Z}) - w({})},
  };
}

GeneratorAssignment<NCPoly> inversion_assignment() {
  return {
      .alpha = NCPoly::alpha_star(),
      .beta = QLaurent::q() * NCPoly::beta(),
      .z = NCPoly::z(),
      .star = [](const NCPoly& x) { return star(x); },
      .scalar = [](const QLaurent& c) { return NCPoly(c.invert_q()); },
  };
}

}  // namespace qsphere
