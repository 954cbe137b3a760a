#pragma once

#include "qsphere/homology.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace qsphere {

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotIdempotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square matrix with entries in A_q.
class AlgMatrix {
 public:
  explicit AlgMatrix(int size = 0);

  static AlgMatrix identity(int size);
  static AlgMatrix scalar(int size, const QLaurent& c);

  int size() const { return size_; }
  const NCPoly& operator()(int i, int j) const { return entries_[index(i, j)]; }
  NCPoly& operator()(int i, int j) { return entries_[index(i, j)]; }

  AlgMatrix& operator+=(const AlgMatrix& o);
  AlgMatrix& operator-=(const AlgMatrix& o);
  friend AlgMatrix operator+(AlgMatrix a, const AlgMatrix& b) { return a += b; }
  friend AlgMatrix operator-(AlgMatrix a, const AlgMatrix& b) { return a -= b; }
  friend AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b);
  friend AlgMatrix operator*(const QLaurent& c, AlgMatrix a);
  friend bool operator==(const AlgMatrix&, const AlgMatrix&) = default;

  /// Conjugate transpose: (M*)_{ij} = star(M_{ji}).
  AlgMatrix star() const;
  /// M - c * Id
  AlgMatrix scalar_shift(const QLaurent& c) const;
  NCPoly trace() const;

 private:
  std::size_t index(int i, int j) const;
  void require_same_size(const AlgMatrix& o) const;

  int size_;
  std::vector<NCPoly> entries_;
};

/// The 4x4 instanton projection over A_q.
AlgMatrix instanton_idempotent();

/// e^2 == e and e* == e, exactly.
bool is_idempotent(const AlgMatrix& m);

/// Sum over index cycles (i_0 .. i_p) of (M_0)_{i0 i1} (x) (M_1)_{i1 i2} (x) ... (x) (M_p)_{ip i0},
/// expanded into a degree-p normalized chain.
Chain generalized_trace(std::span<const AlgMatrix> ms);

/// ch_n(e) = < (e - 1/2) (x) e (x) ... (x) e >, with 2n copies of e.
Chain chern_component(const AlgMatrix& e, int n);

struct CycleReport {
  int n = 0;
  BConvention convention = BConvention::PaperDerived;
  Chain lhs;  ///< B ch_n
  Chain rhs;  ///< b ch_(n+1)
  Chain difference;  ///< rhs - lhs
  bool equal = false;
};

/// Compares B ch_n(e) with b ch_(n+1)(e).
CycleReport verify_cycle(const AlgMatrix& e, int n, BConvention convention = BConvention::PaperDerived);

}  // namespace qsphere
