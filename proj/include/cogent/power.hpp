#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace cogent {

/// Knobs for the power-iteration kernels. Defaults are the library-wide
/// constants; callers may override per call.
struct PowerOptions {
  int max_iter = 500;
  double tol = 1e-10;        // relative change of the Rayleigh quotient
  std::uint64_t seed = 0x5eedULL;
};

struct SingularPair {
  Eigen::VectorXd u;
  double sigma = 0.0;
  Eigen::VectorXd v;
  int iterations = 0;
};

/// Leading singular triplet of a dense matrix via power iteration on
/// M^T M with a deterministic seeded start. Throws std::invalid_argument
/// on a zero matrix (degenerate gradient; callers substitute a default
/// atom).
SingularPair top_singular_pair(const Eigen::Ref<const Eigen::MatrixXd>& m,
                               const PowerOptions& opts = {});

}  // namespace cogent
