#include "qsphere/chern.hpp"

namespace qsphere {

AlgMatrix::AlgMatrix(int size) : size_(size), entries_(static_cast<std::size_t>(size * size)) {
  if (size < 0) throw SizeMismatch("negative matrix size");
}

AlgMatrix AlgMatrix::identity(int size) { return scalar(size, 1); }

AlgMatrix AlgMatrix::scalar(int size, const QLaurent& c) {
  AlgMatrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = NCPoly(c);
  return m;
}

std::size_t AlgMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(i * size_ + j);
}

void AlgMatrix::require_same_size(const AlgMatrix& o) const {
  if (o.size_ != size_)
    throw SizeMismatch("matrix sizes differ: " + std::to_string(size_) + " vs " + std::to_string(o.size_));
}

AlgMatrix& AlgMatrix::operator+=(const AlgMatrix& o) {
  require_same_size(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

AlgMatrix& AlgMatrix::operator-=(const AlgMatrix& o) {
  require_same_size(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) {
  a.require_same_size(b);
  AlgMatrix r(a.size_);
  for (int i = 0; i < a.size_; ++i)
    for (int j = 0; j < a.size_; ++j) {
      NCPoly acc;
      for (int k = 0; k < a.size_; ++k) acc += nf_mul(a(i, k), b(k, j));
      r(i, j) = std::move(acc);
    }
  return r;
}

AlgMatrix operator*(const QLaurent& c, AlgMatrix a) {
  for (auto& entry : a.entries_) entry *= c;
  return a;
}

AlgMatrix AlgMatrix::star() const {
  AlgMatrix r(size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) r(i, j) = qsphere::star((*this)(j, i));
  return r;
}

AlgMatrix AlgMatrix::scalar_shift(const QLaurent& c) const { return *this - scalar(size_, c); }

NCPoly AlgMatrix::trace() const {
  NCPoly t;
  for (int i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

AlgMatrix instanton_idempotent() {
  const NCPoly one(1);
  const NCPoly a = NCPoly::alpha(), as = NCPoly::alpha_star();
  const NCPoly b = NCPoly::beta(), bs = NCPoly::beta_star();
  const NCPoly z = NCPoly::z();
  const QLaurent q = QLaurent::q();

  AlgMatrix e(4);
  e(0, 0) = one + z;
  e(0, 2) = a;
  e(0, 3) = b;
  e(1, 1) = one + z;
  e(1, 2) = -(q * bs);
  e(1, 3) = as;
  e(2, 0) = as;
  e(2, 1) = -(q * b);
  e(2, 2) = one - z;
  e(3, 0) = bs;
  e(3, 1) = a;
  e(3, 3) = one - z;
  return QLaurent(Rational(1, 2)) * e;
}

bool is_idempotent(const AlgMatrix& m) { return m * m == m && m.star() == m; }

Chain generalized_trace(std::span<const AlgMatrix> ms) {
  if (ms.empty()) throw SizeMismatch("generalized_trace needs at least one matrix");
  const int n = ms.front().size();
  for (const auto& m : ms)
    if (m.size() != n) throw SizeMismatch("generalized_trace: matrices of different size");

  const std::size_t width = ms.size();
  Chain out(static_cast<int>(width) - 1);
  std::vector<int> idx(width + 1);
  Slots slots(width);

  // Walk index paths i_0 -> i_1 -> ... -> i_p -> i_0, skipping zero entries
  // early, then expand the chosen entries multilinearly.
  auto expand = [&](auto&& self, std::size_t slot, const QLaurent& acc) -> void {
    if (slot == width) {
      out.add_term(slots, acc);
      return;
    }
    const NCPoly& entry = ms[slot](idx[slot], idx[slot + 1]);
    for (const auto& [mono, c] : entry.terms()) {
      if (slot > 0 && mono.is_unit()) continue;
      slots[slot] = mono;
      self(self, slot + 1, acc * c);
    }
  };
  auto walk = [&](auto&& self, std::size_t slot) -> void {
    if (slot == width) {
      expand(expand, 0, QLaurent(1));
      return;
    }
    for (int next = 0; next < n; ++next) {
      if (slot + 1 == width && next != idx[0]) continue;
      if (ms[slot](idx[slot], next).is_zero()) continue;
      idx[slot + 1] = next;
      self(self, slot + 1);
    }
  };
  for (int start = 0; start < n; ++start) {
    idx[0] = start;
    walk(walk, 0);
  }
  return out;
}

Chain chern_component(const AlgMatrix& e, int n) {
  if (n < 0) throw std::invalid_argument("chern_component: negative index");
  if (!is_idempotent(e)) throw NotIdempotent("chern_component: input is not a selfadjoint idempotent");
  std::vector<AlgMatrix> ms;
  ms.reserve(static_cast<std::size_t>(2 * n + 1));
  ms.push_back(e.scalar_shift(Rational(1, 2)));
  for (int i = 0; i < 2 * n; ++i) ms.push_back(e);
  return generalized_trace(ms);
}

CycleReport verify_cycle(const AlgMatrix& e, int n, BConvention convention) {
  CycleReport r;
  r.n = n;
  r.convention = convention;
  r.lhs = operator_B(chern_component(e, n), convention);
  r.rhs = boundary_b(chern_component(e, n + 1));
  r.difference = r.rhs - r.lhs;
  r.equal = chain_eq(r.lhs, r.rhs);
  return r;
}

}  // namespace qsphere
