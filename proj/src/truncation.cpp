#include "cogent/truncation.hpp"

#include <limits>
#include <stdexcept>

#include "cogent/projected_gradient.hpp"

namespace cogent {

namespace detail {

double removal_prediction_core(double f_current,
                               const Eigen::VectorXd& residual,
                               const Atom& atom, double coeff) {
  return f_current + coeff * residual.dot(atom.image) +
         0.5 * coeff * coeff * atom.image_normsq;
}

TruncationOutcome truncate_greedy_core(const Eigen::VectorXd& y_eff,
                                       ActiveSet& as, double tau,
                                       double threshold_f, int reopt_iters) {
  TruncationOutcome out;
  out.objective_after = 0.5 * (y_eff - as.image()).squaredNorm();

  while (as.size() > 1) {
    const Eigen::VectorXd residual = y_eff - as.image();
    const double f_cur = out.objective_after;

    Eigen::Index best = -1;
    double best_prediction = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < as.size(); ++j) {
      const double prediction = removal_prediction_core(
          f_cur, residual, as.atoms()[static_cast<std::size_t>(j)],
          as.coeffs()[j]);
      if (prediction < best_prediction) {
        best_prediction = prediction;
        best = j;
      }
    }

    // Candidate basis: drop the best atom, reoptimize the rest from the
    // truncated warm start (algorithm 2, step 6; gradient projection can
    // only improve on plain removal).
    Eigen::VectorXd warm = as.coeffs();
    for (Eigen::Index j = best; j + 1 < as.size(); ++j) warm[j] = warm[j + 1];
    warm.conservativeResize(as.size() - 1);

    Eigen::MatrixXd columns(as.images().rows(), as.size() - 1);
    Eigen::Index w = 0;
    for (Eigen::Index j = 0; j < as.size(); ++j) {
      if (j == best) continue;
      columns.col(w++) = as.images().col(j);
    }

    const PgResult pg =
        projected_gradient(columns, y_eff, warm, tau, reopt_iters);
    if (pg.objective <= threshold_f) {
      as.remove(best);
      as.set_coeffs_with_image(pg.coeffs, pg.image);
      out.objective_after = pg.objective;
      out.removed_count += 1;
      out.accepted = true;
    } else {
      break;
    }
  }
  return out;
}

TruncationOutcome truncate_redecompose_core(const Eigen::VectorXd& y_eff,
                                            ActiveSet& as,
                                            const MeasurementOperator& phi,
                                            double tau, double threshold_f,
                                            double coeff_threshold) {
  TruncationOutcome out;
  out.objective_after = 0.5 * (y_eff - as.image()).squaredNorm();
  const AtomicSet& set = as.set();
  if (!set.can_decompose() || as.size() == 0) return out;

  Decomposition dec = set.decompose(as.iterate(), coeff_threshold);
  const Eigen::Index count = static_cast<Eigen::Index>(dec.atoms.size());
  if (count == 0 || count >= as.size()) return out;  // not strictly smaller
  if (dec.coeffs.minCoeff() < 0.0 || dec.coeffs.sum() > tau) return out;

  Eigen::MatrixXd columns(y_eff.size(), count);
  for (Eigen::Index j = 0; j < count; ++j) {
    attach_image(dec.atoms[static_cast<std::size_t>(j)], set, phi);
    columns.col(j) = dec.atoms[static_cast<std::size_t>(j)].image;
  }
  Eigen::VectorXd candidate_image = columns * dec.coeffs;
  const double candidate_f = 0.5 * (y_eff - candidate_image).squaredNorm();
  if (candidate_f > threshold_f) return out;

  out.removed_count = static_cast<int>(as.size() - count);
  ActiveSet fresh(set, y_eff.size());
  for (Eigen::Index j = 0; j < count; ++j)
    fresh.add(std::move(dec.atoms[static_cast<std::size_t>(j)]), dec.coeffs[j]);
  fresh.set_image(std::move(candidate_image));
  as = std::move(fresh);
  out.objective_after = candidate_f;
  out.accepted = true;
  return out;
}

}  // namespace detail

double removal_prediction(const Problem& problem, const ActiveSet& as,
                          Eigen::Index atom_index) {
  if (atom_index < 0 || atom_index >= as.size())
    throw std::invalid_argument("removal_prediction: index out of range");
  const Eigen::VectorXd residual = problem.y - as.image();
  const double f_cur = 0.5 * residual.squaredNorm();
  return detail::removal_prediction_core(
      f_cur, residual, as.atoms()[static_cast<std::size_t>(atom_index)],
      as.coeffs()[atom_index]);
}

TruncationOutcome truncate_greedy(const Problem& problem, ActiveSet& as,
                                  double tau, double threshold_f,
                                  int reopt_iters) {
  return detail::truncate_greedy_core(problem.y, as, tau, threshold_f,
                                      reopt_iters);
}

TruncationOutcome truncate_redecompose(const Problem& problem, ActiveSet& as,
                                       double tau, double threshold_f,
                                       double coeff_threshold) {
  return detail::truncate_redecompose_core(problem.y, as, problem.phi, tau,
                                           threshold_f, coeff_threshold);
}

}  // namespace cogent
