#pragma once

#include "cogent/atomic_set.hpp"

namespace cogent {

/// Signed canonical basis vectors { +/- e_j }. The forward oracle is exact:
/// it flips the sign of the largest-magnitude gradient entry
/// (lowest index wins ties).
class L1Set final : public AtomicSet {
 public:
  explicit L1Set(Eigen::Index dim);

  Eigen::Index ambient_dim() const override { return dim_; }
  double radius() const override { return 1.0; }
  OracleResult forward(const Eigen::VectorXd& gradient) const override;
  Eigen::VectorXd embed(const Atom& atom) const override;
  void add_scaled(const Atom& atom, double alpha,
                  Eigen::VectorXd& x) const override;
  bool same_atom(const Atom& a, const Atom& b) const override;

 private:
  Eigen::Index dim_;
};

}  // namespace cogent
