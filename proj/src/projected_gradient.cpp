#include "cogent/projected_gradient.hpp"

#include <stdexcept>

#include "cogent/simplex.hpp"

namespace cogent {

PgResult projected_gradient(const Eigen::Ref<const Eigen::MatrixXd>& columns,
                            const Eigen::Ref<const Eigen::VectorXd>& y,
                            const Eigen::VectorXd& c0, double tau, int iters,
                            const PowerOptions& power_opts,
                            std::vector<double>* trace) {
  if (columns.cols() != c0.size())
    throw std::invalid_argument("projected_gradient: coefficient size mismatch");
  if (columns.rows() != y.size())
    throw std::invalid_argument("projected_gradient: column length mismatch");
  if (iters < 0) throw std::invalid_argument("projected_gradient: iters < 0");

  PgResult res;
  res.coeffs = c0;
  res.image = columns * c0;
  res.objective = 0.5 * (y - res.image).squaredNorm();
  if (trace) trace->push_back(res.objective);
  if (iters == 0 || c0.size() == 0) return res;

  double lipschitz = 0.0;
  if (columns.cwiseAbs().maxCoeff() > 0.0) {
    const SingularPair top = top_singular_pair(columns, power_opts);
    lipschitz = top.sigma * top.sigma;
  }
  if (lipschitz == 0.0) return res;  // all-zero columns, objective is constant

  // Slight inflation so the power-iteration estimate is a true upper bound
  // for the descent step.
  double step = 1.0 / (lipschitz * (1.0 + 1e-6));

  for (int it = 0; it < iters; ++it) {
    const Eigen::VectorXd grad = columns.transpose() * (res.image - y);
    Eigen::VectorXd next = project_simplex(res.coeffs - step * grad, tau);
    Eigen::VectorXd next_image = columns * next;
    double next_obj = 0.5 * (y - next_image).squaredNorm();
    int backtracks = 0;
    while (next_obj > res.objective && backtracks < 30) {
      step *= 0.5;
      next = project_simplex(res.coeffs - step * grad, tau);
      next_image = columns * next;
      next_obj = 0.5 * (y - next_image).squaredNorm();
      ++backtracks;
    }
    if (next_obj > res.objective) break;  // stalled at numerical floor
    res.coeffs = std::move(next);
    res.image = std::move(next_image);
    res.objective = next_obj;
    res.iterations = it + 1;
    if (trace) trace->push_back(res.objective);
  }
  return res;
}

}  // namespace cogent
