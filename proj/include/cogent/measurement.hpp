#pragma once

#include <Eigen/Dense>
#include <vector>

namespace cogent {

/// Linear measurement operator y = Phi * x. Three concrete kinds are
/// supported: a dense matrix, the identity, and an entry mask (row
/// selection, used for completion problems). Complex ambient spaces are
/// stored as interleaved real pairs, so all operators act on real vectors.
class MeasurementOperator {
 public:
  enum class Kind { Dense, Identity, Mask };

  static MeasurementOperator dense(Eigen::MatrixXd matrix);
  static MeasurementOperator identity(Eigen::Index dim);
  /// Mask revealing `indices` (0-based positions into the ambient vector).
  static MeasurementOperator mask(std::vector<Eigen::Index> indices,
                                  Eigen::Index ambient_dim);

  Kind kind() const { return kind_; }
  Eigen::Index input_dim() const { return input_dim_; }
  Eigen::Index output_dim() const { return output_dim_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd adjoint(const Eigen::VectorXd& r) const;

  /// Spectral norm of Phi^T Phi (the gradient Lipschitz constant of the
  /// quadratic loss). Analytic for identity and mask, power iteration
  /// otherwise.
  double gradient_lipschitz() const;

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const std::vector<Eigen::Index>& indices() const { return indices_; }

 private:
  MeasurementOperator() = default;

  Kind kind_ = Kind::Identity;
  Eigen::Index input_dim_ = 0;
  Eigen::Index output_dim_ = 0;
  Eigen::MatrixXd matrix_;             // Dense only
  std::vector<Eigen::Index> indices_;  // Mask only
};

/// Constrained least-squares recovery instance: minimize
/// 1/2 ||y - Phi x||^2 subject to the atomic-norm bound tau.
struct Problem {
  Eigen::VectorXd y;
  MeasurementOperator phi;
  double tau = 1.0;

  Problem(Eigen::VectorXd y_in, MeasurementOperator phi_in, double tau_in);
};

/// 1/2 ||y - Phi x||^2.
double objective(const Problem& problem, const Eigen::VectorXd& x);

/// Phi^T (Phi x - y).
Eigen::VectorXd gradient(const Problem& problem, const Eigen::VectorXd& x);

}  // namespace cogent
