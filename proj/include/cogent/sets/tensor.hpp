#pragma once

#include <cstdint>

#include "cogent/atomic_set.hpp"

namespace cogent {

/// Symmetric rank-one 3-way tensors { u (x) u (x) u : ||u|| = 1 } on a
/// d x d x d ambient space, flattened with index (i, j, k) ->
/// i + j d + k d^2. The forward oracle symmetrizes the gradient (exact for
/// the linear functional, since the atoms are symmetric) and runs seeded
/// multi-start power iterations; decompose deflates the iterate greedily.
class TensorSet final : public AtomicSet {
 public:
  explicit TensorSet(Eigen::Index dim, std::uint64_t seed = 0x7e45ULL);

  Eigen::Index ambient_dim() const override { return dim_ * dim_ * dim_; }
  double radius() const override { return 1.0; }
  OracleResult forward(const Eigen::VectorXd& gradient) const override;
  Eigen::VectorXd embed(const Atom& atom) const override;
  bool same_atom(const Atom& a, const Atom& b) const override;

  bool can_decompose() const override { return true; }
  /// Greedy power-iteration deflation: extract the dominant symmetric
  /// eigenpair, subtract, repeat until the component drops below
  /// threshold times the running coefficient sum.
  Decomposition decompose(const Eigen::VectorXd& x,
                          double threshold) const override;

  Eigen::Index dim() const { return dim_; }

  /// Dominant symmetric eigenpair of a (flattened) symmetric tensor via
  /// the map u -> normalize(T(., u, u)); multi-start, deterministic.
  /// Returns lambda = <T, u (x) u (x) u> with |lambda| maximal over starts.
  struct EigenPair {
    Eigen::VectorXd u;
    double lambda = 0.0;
  };
  EigenPair dominant_pair(const Eigen::VectorXd& tensor) const;

  static constexpr double kOracleOmega = 1e-3;
  static constexpr int kStarts = 8;
  static constexpr int kPowerIters = 200;
  static constexpr double kPowerTol = 1e-10;

 private:
  Eigen::Index dim_;
  std::uint64_t seed_;
};

/// sym(T): average over the 6 index permutations.
Eigen::VectorXd symmetrize_tensor3(const Eigen::VectorXd& t, Eigen::Index d);

}  // namespace cogent
