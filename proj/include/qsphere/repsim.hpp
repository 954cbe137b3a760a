#pragma once

#include "qsphere/chern.hpp"
#include "qsphere/ncalg.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsphere {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sign { Plus, Minus };

/// pi_{lambda,+-} restricted to span{psi_0 .. psi_(N-1)}; alpha sends psi_(N-1) to zero.
struct TruncatedRep {
  int dim = 0;
  double qval = 0;
  Complex lambda;
  Sign sign = Sign::Plus;
  CMatrix op_alpha;
  CMatrix op_alpha_star;
  CMatrix op_beta;
  CMatrix op_beta_star;
  CMatrix op_z;

  const CMatrix& op(Generator g) const;
};

TruncatedRep build_rep(double qval, Complex lambda, Sign sign, int dim);

/// Operators on span{psi_0..psi_(N-1-d)} are untouched by the truncation for words of degree <= d.
int interior_dim(const TruncatedRep& rep, int word_degree);

/// Maximum column 2-norm over the first `cols` columns.
double max_column_norm(const CMatrix& m, int cols);

struct RelationResidual {
  std::string relation;
  double residual = 0;  ///< on the interior subspace
  int subspace_dim = 0;
  double full_residual = 0;  ///< including the truncation edge; reported only
};

/// The defining relations evaluated in the representation.
std::vector<RelationResidual> relation_residuals(const TruncatedRep& rep);

CMatrix rep_evaluate(const TruncatedRep& rep, const NCPoly& x);
CMatrix rep_evaluate(const TruncatedRep& rep, const FreeExpr& x);
/// Entrywise evaluation of a matrix over A_q: a (size*N) x (size*N) block matrix.
CMatrix rep_evaluate(const TruncatedRep& rep, const AlgMatrix& m);

/// Floating comparison of the symbolic product and involution with their matrix images.
/// Errors are column norms on the interior subspace, divided by
/// max(1, |pi(x)| |pi(y)|) (resp. max(1, |pi(x)|)) in the Frobenius norm, so that
/// large Laurent coefficients at small q do not dominate.
struct OracleErrors {
  double product = 0;  ///< pi(x y) against pi(x) pi(y)
  double star = 0;     ///< pi(x*) against pi(x)^dagger
};
OracleErrors oracle_errors(const TruncatedRep& rep, const NCPoly& x, const NCPoly& y);

struct CharacterResidual {
  std::string relation;
  double residual = 0;
};

struct CharacterReport {
  double qval = 0;
  Complex alpha;
  Complex beta;
  double z = 0;
  double tolerance = 1e-12;
  std::vector<CharacterResidual> residuals;  ///< the ten ideal generators
  /// (alpha* alpha + q^2 beta* beta) - (alpha alpha* + beta* beta) = (q^2 - 1)|beta|^2
  double sphere_difference = 0;
  bool valid = false;
};

/// Evaluates the ideal generators at a scalar point (alpha, beta, z).
CharacterReport character_check(double qval, Complex alpha, Complex beta, double z, double tolerance = 1e-12);

/// Closed-form description of the scalar points, independent of the generator
/// evaluation: (1-q) alpha beta = 0, (1-q) alpha conj(beta) = 0,
/// |alpha|^2 + q^2 |beta|^2 + z^2 = 1 and |alpha|^2 + |beta|^2 + z^2 = 1.
/// For q^2 != 1 this is beta = 0, |alpha|^2 + z^2 = 1.
bool is_classical_point(double qval, Complex alpha, Complex beta, double z, double tolerance = 1e-12);

/// Accepts "0.8", "-1", "0.6+0.8i", "0.3-0.1i", "2i", "-i".
Complex parse_complex(std::string_view text);
Sign parse_sign(std::string_view text);
std::string_view sign_name(Sign s);

}  // namespace qsphere
