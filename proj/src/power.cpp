#include "cogent/power.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cogent {

SingularPair top_singular_pair(const Eigen::Ref<const Eigen::MatrixXd>& m,
                               const PowerOptions& opts) {
  const double scale = m.cwiseAbs().maxCoeff();
  if (!(scale > 0.0))
    throw std::invalid_argument("top_singular_pair: zero matrix (degenerate gradient)");

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(m.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gauss(rng);
  v.normalize();

  SingularPair out;
  double rayleigh_prev = 0.0;
  for (int it = 0; it < opts.max_iter; ++it) {
    Eigen::VectorXd w = m * v;
    const double wn = w.norm();
    if (wn == 0.0) {
      // Start vector landed in the kernel; reseed once and continue.
      for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = gauss(rng);
      v.normalize();
      continue;
    }
    Eigen::VectorXd z = m.transpose() * (w / wn);
    const double rayleigh = z.norm();
    v = z / rayleigh;
    out.iterations = it + 1;
    if (std::abs(rayleigh - rayleigh_prev) <= opts.tol * (1.0 + rayleigh)) {
      rayleigh_prev = rayleigh;
      break;
    }
    rayleigh_prev = rayleigh;
  }

  Eigen::VectorXd mv = m * v;
  out.sigma = mv.norm();
  out.u = mv / out.sigma;
  out.v = v;
  return out;
}

}  // namespace cogent
