#pragma once

#include "cogent/atomic_set.hpp"

namespace cogent {

/// Unit-norm rank-one matrices u v^T on an r x c ambient space (matrices
/// are stored flattened column-major). The forward oracle takes the top
/// singular pair of the negated gradient by power iteration and is
/// therefore inexact, with omega tied to the power-iteration tolerance.
/// Supports re-decomposition of the iterate via SVD.
class RankOneSet final : public AtomicSet {
 public:
  RankOneSet(Eigen::Index rows, Eigen::Index cols);

  Eigen::Index ambient_dim() const override { return rows_ * cols_; }
  double radius() const override { return 1.0; }
  OracleResult forward(const Eigen::VectorXd& gradient) const override;
  Eigen::VectorXd embed(const Atom& atom) const override;
  bool same_atom(const Atom& a, const Atom& b) const override;

  bool can_decompose() const override { return true; }
  /// Full SVD of the matrix represented by x; keeps singular triplets with
  /// sigma > threshold * (sum of singular values).
  Decomposition decompose(const Eigen::VectorXd& x,
                          double threshold) const override;

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  static constexpr double kOracleOmega = 1e-6;

 private:
  Eigen::Index rows_, cols_;
};

}  // namespace cogent
