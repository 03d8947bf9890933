#ifndef ARREG_TYPES_HPP
#define ARREG_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace arreg {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Thrown when a linear solve meets a singular or numerically rank-deficient
/// system. `what()` names the step that failed so callers can report it.
class SingularSolveError : public std::runtime_error {
 public:
  explicit SingularSolveError(const std::string& step)
      : std::runtime_error("singular or ill-conditioned system in " + step),
        step_(step) {}
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

/// Response series y (length N) and covariate matrix X (N x M).
struct RegressionDataset {
  VectorXd y;
  MatrixXd X;
  bool has_intercept = false;  // column 0 of X is a constant-one column

  Index n() const { return y.size(); }
  Index n_covariates() const { return X.cols(); }
};

/// AR(p) coefficients phi_1..phi_p of Phi(B) = 1 - phi_1 B - ... - phi_p B^p.
struct ARSpec {
  VectorXd phi;

  int order() const { return static_cast<int>(phi.size()); }
};

/// Full estimand: regression coefficients, AR coefficients, innovation scale
/// parameter sigma^2 (squared units of y).
struct ParameterSet {
  VectorXd beta;
  ARSpec ar;
  double sigma2 = 1.0;
};

/// Phi(B)-filtered data for t = p+1..N together with the lagged series the
/// phi-score terms need: lag_y(i, l-1) = y_{t-l} and
/// lag_X[l-1](i, j) = x_{t-l,j} with t = p+1+i.
struct FilteredDataset {
  VectorXd fy;
  MatrixXd fX;
  MatrixXd lag_y;
  std::vector<MatrixXd> lag_X;

  Index n_eff() const { return fy.size(); }
};

/// Lagged cross products of raw residuals: R0[l-1] = sum_t w_t e_t e_{t-l},
/// R[l-1][m-1] = sum_t w_t e_{t-l} e_{t-m}, summed over t = p+1..N.
struct CrossProductPair {
  VectorXd R0;
  MatrixXd R;
};

/// Observed Fisher information, block-diagonal in (beta, phi, sigma).
struct FisherBlocks {
  MatrixXd beta_block;       // M x M
  MatrixXd phi_block;        // p x p
  double sigma_block = 0.0;  // (N-p)/sigma^4

  /// Assembles the dense (M+p+1) x (M+p+1) matrix with zero off-blocks.
  MatrixXd dense() const;
};

/// Checks basic dataset invariants (sizes, finiteness); throws
/// std::invalid_argument on violation.
void validate_dataset(const RegressionDataset& data);

}  // namespace arreg

#endif  // ARREG_TYPES_HPP
