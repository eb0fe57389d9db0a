#pragma once

#include "cogent/atomic_set.hpp"

namespace cogent {

/// Vectors with at most two nonzero entries, each +/- 1 (the OSCAR atoms;
/// one-sparse vectors are included). Exact oracle: the two
/// largest-magnitude gradient entries with opposing signs; ties prefer
/// fewer nonzeros. R = sqrt(2).
class OscarSet final : public AtomicSet {
 public:
  explicit OscarSet(Eigen::Index dim);

  Eigen::Index ambient_dim() const override { return dim_; }
  double radius() const override;
  OracleResult forward(const Eigen::VectorXd& gradient) const override;
  Eigen::VectorXd embed(const Atom& atom) const override;
  void add_scaled(const Atom& atom, double alpha,
                  Eigen::VectorXd& x) const override;
  bool same_atom(const Atom& a, const Atom& b) const override;

 private:
  Eigen::Index dim_;
};

}  // namespace cogent
