#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <vector>

namespace cogent {

/// Euclidean projection onto { c >= 0, sum(c) <= tau }. Sort-based,
/// O(n log n). If the nonnegative part of `c` already fits the budget the
/// projection is just the clamp; otherwise the sum constraint is active and
/// the usual simplex threshold applies. Idempotent.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> project_simplex(
    const Eigen::MatrixBase<Derived>& c, typename Derived::Scalar tau) {
  using Scalar = typename Derived::Scalar;
  using Vec = Eigen::Vector<Scalar, Eigen::Dynamic>;

  Vec values = c;
  Vec clamped = values.cwiseMax(Scalar(0));
  if (clamped.sum() <= tau) return clamped;

  // Project onto the face { c >= 0, sum(c) = tau }.
  std::vector<Scalar> sorted(values.data(), values.data() + values.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<Scalar>());
  Scalar cumulative = Scalar(0);
  Scalar theta = Scalar(0);
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cumulative += sorted[j];
    const Scalar candidate = (cumulative - tau) / Scalar(j + 1);
    if (sorted[j] - candidate > Scalar(0)) theta = candidate;
  }
  return (values.array() - theta).cwiseMax(Scalar(0)).matrix();
}

}  // namespace cogent
