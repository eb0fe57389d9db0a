#include "cogent/measurement.hpp"

#include <stdexcept>
#include <utility>

#include "cogent/power.hpp"

namespace cogent {

MeasurementOperator MeasurementOperator::dense(Eigen::MatrixXd matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0)
    throw std::invalid_argument("dense operator: empty matrix");
  MeasurementOperator op;
  op.kind_ = Kind::Dense;
  op.input_dim_ = matrix.cols();
  op.output_dim_ = matrix.rows();
  op.matrix_ = std::move(matrix);
  return op;
}

MeasurementOperator MeasurementOperator::identity(Eigen::Index dim) {
  if (dim <= 0) throw std::invalid_argument("identity operator: dim <= 0");
  MeasurementOperator op;
  op.kind_ = Kind::Identity;
  op.input_dim_ = dim;
  op.output_dim_ = dim;
  return op;
}

MeasurementOperator MeasurementOperator::mask(std::vector<Eigen::Index> indices,
                                              Eigen::Index ambient_dim) {
  if (ambient_dim <= 0) throw std::invalid_argument("mask operator: dim <= 0");
  if (indices.empty()) throw std::invalid_argument("mask operator: empty index set");
  std::vector<char> seen(static_cast<std::size_t>(ambient_dim), 0);
  for (Eigen::Index i : indices) {
    if (i < 0 || i >= ambient_dim)
      throw std::invalid_argument("mask operator: index out of range");
    if (seen[static_cast<std::size_t>(i)]++)
      throw std::invalid_argument("mask operator: duplicate index");
  }
  MeasurementOperator op;
  op.kind_ = Kind::Mask;
  op.input_dim_ = ambient_dim;
  op.output_dim_ = static_cast<Eigen::Index>(indices.size());
  op.indices_ = std::move(indices);
  return op;
}

Eigen::VectorXd MeasurementOperator::apply(const Eigen::VectorXd& x) const {
  if (x.size() != input_dim_)
    throw std::invalid_argument("measurement apply: dimension mismatch");
  switch (kind_) {
    case Kind::Dense:
      return matrix_ * x;
    case Kind::Identity:
      return x;
    case Kind::Mask: {
      Eigen::VectorXd out(output_dim_);
      for (Eigen::Index k = 0; k < output_dim_; ++k) out[k] = x[indices_[k]];
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Eigen::VectorXd MeasurementOperator::adjoint(const Eigen::VectorXd& r) const {
  if (r.size() != output_dim_)
    throw std::invalid_argument("measurement adjoint: dimension mismatch");
  switch (kind_) {
    case Kind::Dense:
      return matrix_.transpose() * r;
    case Kind::Identity:
      return r;
    case Kind::Mask: {
      Eigen::VectorXd out = Eigen::VectorXd::Zero(input_dim_);
      for (Eigen::Index k = 0; k < output_dim_; ++k) out[indices_[k]] += r[k];
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

double MeasurementOperator::gradient_lipschitz() const {
  switch (kind_) {
    case Kind::Identity:
    case Kind::Mask:
      // Phi^T Phi is a 0/1 diagonal (mask indices are distinct).
      return 1.0;
    case Kind::Dense: {
      const SingularPair top = top_singular_pair(matrix_);
      return top.sigma * top.sigma;
    }
  }
  throw std::logic_error("unreachable");
}

Problem::Problem(Eigen::VectorXd y_in, MeasurementOperator phi_in, double tau_in)
    : y(std::move(y_in)), phi(std::move(phi_in)), tau(tau_in) {
  if (!(tau > 0.0)) throw std::invalid_argument("problem: tau must be positive");
  if (y.size() != phi.output_dim())
    throw std::invalid_argument("problem: y length does not match operator output");
}

double objective(const Problem& problem, const Eigen::VectorXd& x) {
  return 0.5 * (problem.y - problem.phi.apply(x)).squaredNorm();
}

Eigen::VectorXd gradient(const Problem& problem, const Eigen::VectorXd& x) {
  return problem.phi.adjoint(problem.phi.apply(x) - problem.y);
}

}  // namespace cogent
