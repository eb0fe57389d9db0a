#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cogent/power.hpp"

namespace cogent {

struct PgResult {
  Eigen::VectorXd coeffs;
  Eigen::VectorXd image;  // columns * coeffs, cached for the caller
  double objective = 0.0;
  int iterations = 0;
};

/// Gradient projection for min_c 1/2 ||y - B c||^2 over { c >= 0,
/// sum(c) <= tau }, warm-started at `c0`. Step size 1/L with L the top
/// eigenvalue of B^T B estimated by power iteration; a backtracking guard
/// keeps the objective nonincreasing across internal iterations, so the
/// result is never worse than the warm start. iters == 0 returns c0.
PgResult projected_gradient(const Eigen::Ref<const Eigen::MatrixXd>& columns,
                            const Eigen::Ref<const Eigen::VectorXd>& y,
                            const Eigen::VectorXd& c0, double tau, int iters,
                            const PowerOptions& power_opts = {},
                            std::vector<double>* trace = nullptr);

}  // namespace cogent
