#include "qsphere/repsim.hpp"

#include <cctype>
#include <cmath>

namespace qsphere {

const CMatrix& TruncatedRep::op(Generator g) const {
  switch (g) {
    case Generator::AL: return op_alpha;
    case Generator::ALS: return op_alpha_star;
    case Generator::BE: return op_beta;
    case Generator::BES: return op_beta_star;
    case Generator::Z: return op_z;
  }
  return op_z;
}

TruncatedRep build_rep(double qval, Complex lambda, Sign sign, int dim) {
  if (!(qval > -1.0 && qval <= 1.0) || qval == 0.0)
    throw InvalidParameter("q must lie in (-1,0) or (0,1], got " + std::to_string(qval));
  if (std::abs(lambda) > 1.0 + 1e-12) throw InvalidParameter("|lambda| must be <= 1");
  if (dim < 2) throw InvalidParameter("truncation dimension must be >= 2");

  TruncatedRep rep;
  rep.dim = dim;
  rep.qval = qval;
  rep.lambda = lambda;
  rep.sign = sign;
  const auto n = static_cast<Eigen::Index>(dim);
  rep.op_alpha = CMatrix::Zero(n, n);
  rep.op_beta = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double qi = std::pow(qval, static_cast<double>(i));
    rep.op_beta(i, i) = lambda * qi;
    // alpha psi_i = lambda sqrt(1 - q^(2(i+1))) psi_(i+1); dropped at the top level
    if (i + 1 < n) rep.op_alpha(i + 1, i) = lambda * std::sqrt(1.0 - std::pow(qval, 2.0 * static_cast<double>(i + 1)));
  }
  rep.op_alpha_star = rep.op_alpha.adjoint();
  rep.op_beta_star = rep.op_beta.adjoint();
  const double zval = std::sqrt(std::max(0.0, 1.0 - std::norm(lambda)));
  rep.op_z = CMatrix::Identity(n, n) * Complex(sign == Sign::Plus ? zval : -zval);
  return rep;
}

int interior_dim(const TruncatedRep& rep, int word_degree) {
  return std::max(0, rep.dim - std::max(word_degree, 1));
}

double max_column_norm(const CMatrix& m, int cols) {
  double best = 0;
  for (Eigen::Index j = 0; j < std::min<Eigen::Index>(cols, m.cols()); ++j) best = std::max(best, m.col(j).norm());
  return best;
}

namespace {

GeneratorAssignment<CMatrix> matrix_assignment(const TruncatedRep& rep) {
  const auto n = static_cast<Eigen::Index>(rep.dim);
  const double qval = rep.qval;
  return {
      .alpha = rep.op_alpha,
      .beta = rep.op_beta,
      .z = rep.op_z,
      .star = [](const CMatrix& m) -> CMatrix { return m.adjoint(); },
      .scalar = [n, qval](const QLaurent& c) -> CMatrix { return CMatrix::Identity(n, n) * Complex(c.eval(qval)); },
  };
}

}  // namespace

CMatrix rep_evaluate(const TruncatedRep& rep, const NCPoly& x) { return substitute(x, matrix_assignment(rep)); }

CMatrix rep_evaluate(const TruncatedRep& rep, const FreeExpr& x) { return substitute(x, matrix_assignment(rep)); }

CMatrix rep_evaluate(const TruncatedRep& rep, const AlgMatrix& m) {
  const auto n = static_cast<Eigen::Index>(rep.dim);
  const auto s = static_cast<Eigen::Index>(m.size());
  CMatrix out = CMatrix::Zero(s * n, s * n);
  for (Eigen::Index i = 0; i < s; ++i)
    for (Eigen::Index j = 0; j < s; ++j)
      out.block(i * n, j * n, n, n) = rep_evaluate(rep, m(static_cast<int>(i), static_cast<int>(j)));
  return out;
}

OracleErrors oracle_errors(const TruncatedRep& rep, const NCPoly& x, const NCPoly& y) {
  const CMatrix px = rep_evaluate(rep, x), py = rep_evaluate(rep, y);
  const CMatrix pxy = rep_evaluate(rep, nf_mul(x, y));
  OracleErrors out;
  out.product = max_column_norm(pxy - px * py, interior_dim(rep, x.degree() + y.degree())) /
                std::max(1.0, px.norm() * py.norm());
  const int k = interior_dim(rep, x.degree());
  const CMatrix diff = rep_evaluate(rep, star(x)) - px.adjoint();
  out.star = max_column_norm(diff.topLeftCorner(k, k), k) / std::max(1.0, px.norm());
  return out;
}

std::vector<RelationResidual> relation_residuals(const TruncatedRep& rep) {
  // Every relation word has degree <= 2 with at most one alpha letter, so the
  // hard cutoff only shows up on psi_(N-1).
  const int interior = rep.dim - 1;
  std::vector<RelationResidual> out;
  for (const auto& gen : ideal_generators()) {
    CMatrix residual;
    if (gen.expr.is_zero())
      residual = rep.op_z - rep.op_z.adjoint();  // z - z*, collapsed symbolically
    else
      residual = rep_evaluate(rep, gen.expr);
    out.push_back({gen.name, max_column_norm(residual, interior), interior,
                   max_column_norm(residual, rep.dim)});
  }
  return out;
}

CharacterReport character_check(double qval, Complex alpha, Complex beta, double z, double tolerance) {
  CharacterReport r;
  r.qval = qval;
  r.alpha = alpha;
  r.beta = beta;
  r.z = z;
  r.tolerance = tolerance;
  GeneratorAssignment<Complex> h{
      .alpha = alpha,
      .beta = beta,
      .z = Complex(z),
      .star = [](const Complex& c) { return std::conj(c); },
      .scalar = [qval](const QLaurent& c) { return Complex(c.eval(qval)); },
  };
  bool ok = true;
  for (const auto& gen : ideal_generators()) {
    double res = gen.expr.is_zero() ? std::abs(h.z - std::conj(h.z)) : std::abs(substitute(gen.expr, h));
    r.residuals.push_back({gen.name, res});
    ok = ok && res <= tolerance;
  }
  r.sphere_difference = (qval * qval - 1.0) * std::norm(beta);
  r.valid = ok;
  return r;
}

bool is_classical_point(double qval, Complex alpha, Complex beta, double z, double tolerance) {
  const double a2 = std::norm(alpha), b2 = std::norm(beta);
  const double radius = a2 + b2 + z * z - 1.0;
  if (std::abs(qval * qval - 1.0) > tolerance) return std::abs(b2) <= tolerance && std::abs(a2 + z * z - 1.0) <= tolerance;
  if (qval > 0) return std::abs(radius) <= tolerance;
  return std::abs(alpha * beta) <= tolerance && std::abs(radius) <= tolerance;
}

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&] { return InvalidParameter("bad complex number '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();
  auto to_double = [&](const std::string& part) -> double {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != part.size()) throw fail();
    return v;
  };
  if (s.back() != 'i' && s.back() != 'j') return {to_double(s), 0.0};
  s.pop_back();
  // split at the last sign that is not the leading one and not part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, to_double(s)};
  return {to_double(s.substr(0, split)), to_double(s.substr(split))};
}

Sign parse_sign(std::string_view text) {
  if (text == "plus" || text == "+") return Sign::Plus;
  if (text == "minus" || text == "-") return Sign::Minus;
  throw InvalidParameter("sign must be 'plus' or 'minus'");
}

std::string_view sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

}  // namespace qsphere
