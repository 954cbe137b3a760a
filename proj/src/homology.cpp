#include "qsphere/homology.hpp"

namespace qsphere {

namespace {

bool degenerate(const Slots& slots) {
  for (std::size_t i = 1; i < slots.size(); ++i)
    if (slots[i].is_unit()) return true;
  return false;
}

}  // namespace

QLaurent Chain::coeff(const Slots& slots) const {
  auto it = terms_.find(slots);
  return it == terms_.end() ? QLaurent() : it->second;
}

void Chain::add_term(const Slots& slots, const QLaurent& c) {
  if (static_cast<int>(slots.size()) != degree_ + 1)
    throw ChainError("tuple of length " + std::to_string(slots.size()) + " added to a degree-" +
                     std::to_string(degree_) + " chain");
  if (c.is_zero() || degenerate(slots)) return;
  auto [it, inserted] = terms_.try_emplace(slots, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Chain Chain::operator-() const {
  Chain r = *this;
  for (auto& [s, c] : r.terms_) c = -c;
  return r;
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.degree_ != degree_ && !o.is_zero()) {
    if (!is_zero()) throw ChainError("adding chains of different degree");
    degree_ = o.degree_;
  }
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) { return *this += -o; }

Chain& Chain::operator*=(const QLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, coeff] : terms_) coeff *= c;
  return *this;
}

Chain Chain::eval_at(const Rational& q0) const {
  return map_coefficients([&](const QLaurent& c) { return QLaurent(c.eval(q0)); });
}

Chain Chain::map_coefficients(const std::function<QLaurent(const QLaurent&)>& f) const {
  Chain r(degree_);
  for (const auto& [s, c] : terms_) r.add_term(s, f(c));
  return r;
}

std::string Chain::str() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [slots, c] : terms_) {
    out += "(" + c.str() + ")";
    for (std::size_t i = 0; i < slots.size(); ++i) out += (i == 0 ? " " : " (x) ") + slots[i].str();
    out += '\n';
  }
  return out;
}

Chain normalize_chain(const std::vector<RawTensor>& raw) {
  if (raw.empty()) return Chain(0);
  const std::size_t width = raw.front().slots.size();
  if (width == 0) throw ChainError("empty tensor");
  Chain out(static_cast<int>(width) - 1);
  Slots slots(width);
  for (const auto& t : raw) {
    if (t.slots.size() != width) throw ChainError("mixed tuple lengths in normalize_chain");
    // depth-first multilinear expansion
    auto expand = [&](auto&& self, std::size_t i, const QLaurent& acc) -> void {
      if (i == width) {
        out.add_term(slots, acc);
        return;
      }
      for (const auto& [mono, c] : t.slots[i].terms()) {
        if (i > 0 && mono.is_unit()) continue;
        slots[i] = mono;
        self(self, i + 1, acc * c);
      }
    };
    if (!t.coeff.is_zero()) expand(expand, 0, t.coeff);
  }
  return out;
}

Chain boundary_b(const Chain& c) {
  const int m = c.degree();
  if (m < 1) throw ChainError("boundary_b needs a chain of degree >= 1");
  Chain out(m - 1);
  Slots target(static_cast<std::size_t>(m));
  for (const auto& [slots, coeff] : c.terms()) {
    for (int j = 0; j <= m; ++j) {
      // j < m: merge slots j, j+1. j == m: wrap-around a_m a_0.
      const bool wrap = j == m;
      NCPoly product = wrap ? monomial_product(slots[m], slots[0]) : monomial_product(slots[j], slots[j + 1]);
      const QLaurent sign = (j % 2 == 0) ? QLaurent(1) : QLaurent(-1);
      std::size_t pos = wrap ? 0 : static_cast<std::size_t>(j);
      // copy the untouched slots
      std::size_t w = 0;
      for (int i = 0; i < m + 1; ++i) {
        if (wrap && i == m) continue;
        if (!wrap && i == j + 1) continue;
        target[w++] = slots[static_cast<std::size_t>(i)];
      }
      for (const auto& [mono, pc] : product.terms()) {
        target[pos] = mono;
        out.add_term(target, sign * coeff * pc);
      }
    }
  }
  return out;
}

std::string_view convention_name(BConvention c) {
  return c == BConvention::PaperDerived ? "paper-derived" : "standard";
}

BConvention parse_convention(std::string_view name) {
  if (name == "paper-derived") return BConvention::PaperDerived;
  if (name == "standard") return BConvention::Standard;
  throw std::invalid_argument("unknown convention '" + std::string(name) + "'");
}

Chain operator_B(const Chain& c, BConvention convention) {
  const int m = c.degree();
  Chain out(m + 1);
  Slots target(static_cast<std::size_t>(m + 2));
  target[0] = BasisMonomial::unit();
  if (convention == BConvention::PaperDerived) {
    const QLaurent scale = m == 0 ? QLaurent(1) : QLaurent(Rational(1, m));
    for (const auto& [slots, coeff] : c.terms()) {
      std::copy(slots.begin(), slots.end(), target.begin() + 1);
      out.add_term(target, scale * coeff);
    }
    return out;
  }
  for (const auto& [slots, coeff] : c.terms()) {
    for (int j = 0; j <= m; ++j) {
      for (int i = 0; i <= m; ++i) target[static_cast<std::size_t>(i + 1)] = slots[static_cast<std::size_t>((i + j) % (m + 1))];
      const bool negative = (m * j) % 2 != 0;
      out.add_term(target, negative ? -coeff : coeff);
    }
  }
  return out;
}

std::vector<std::pair<Slots, QLaurent>> prepend_unit(const Chain& c) {
  std::vector<std::pair<Slots, QLaurent>> raw;
  raw.reserve(c.size());
  for (const auto& [slots, coeff] : c.terms()) {
    Slots s;
    s.reserve(slots.size() + 1);
    s.push_back(BasisMonomial::unit());
    s.insert(s.end(), slots.begin(), slots.end());
    raw.emplace_back(std::move(s), coeff);
  }
  return raw;
}

std::vector<std::pair<Slots, QLaurent>> cyclic_antisymmetrize(
    const std::vector<std::pair<Slots, QLaurent>>& raw, const QLaurent& scale) {
  std::vector<std::pair<Slots, QLaurent>> out;
  for (const auto& [slots, coeff] : raw) {
    const int len = static_cast<int>(slots.size());
    const int m = len - 1;
    for (int j = 0; j <= m; ++j) {
      Slots s(slots.size());
      for (int i = 0; i < len; ++i) s[static_cast<std::size_t>(i)] = slots[static_cast<std::size_t>((i + j) % len)];
      const bool negative = (m * j) % 2 != 0;
      out.emplace_back(std::move(s), negative ? -(scale * coeff) : scale * coeff);
    }
  }
  return out;
}

Chain operator_B_literal(const Chain& c) {
  const int m = c.degree();
  const QLaurent scale = m == 0 ? QLaurent(1) : QLaurent(Rational(1, m));
  Chain out(m + 1);
  for (const auto& [slots, coeff] : cyclic_antisymmetrize(prepend_unit(c), scale)) out.add_term(slots, coeff);
  return out;
}

bool chain_eq(const Chain& a, const Chain& b) {
  return a.degree() == b.degree() && a.terms() == b.terms();
}

}  // namespace qsphere
