#pragma once

#include <Eigen/Dense>

#include "cogent/active_set.hpp"
#include "cogent/measurement.hpp"

namespace cogent {

struct TruncationOutcome {
  int removed_count = 0;
  double objective_after = 0.0;
  bool accepted = false;  // not accepted => the active set is unchanged
};

/// Exact objective after removing one atom from the iterate. For the
/// quadratic loss the expansion has no higher-order terms, so
/// f(x - c_a a) = f(x) - c_a <grad f(x), a> + 1/2 c_a^2 ||Phi a||^2 holds
/// with equality; with r = y - Phi x this reads
/// f + c_a <r, Phi a> + 1/2 c_a^2 ||Phi a||^2.
double removal_prediction(const Problem& problem, const ActiveSet& as,
                          Eigen::Index atom_index);

/// Greedy backward step: repeatedly remove the atom whose removal is
/// predicted to degrade the objective least, reoptimize the remaining
/// coefficients by gradient projection (warm start), and keep going while
/// the objective stays at or below the threshold. A single remaining atom
/// is never removed.
TruncationOutcome truncate_greedy(const Problem& problem, ActiveSet& as,
                                  double tau, double threshold_f,
                                  int reopt_iters);

/// Wholesale re-decomposition backward step: ask the set for a fresh
/// decomposition of the current iterate and adopt it when it is strictly
/// smaller, feasible, and keeps the objective at or below the threshold.
/// Sets without the decompose capability yield a not-accepted outcome.
TruncationOutcome truncate_redecompose(const Problem& problem, ActiveSet& as,
                                       double tau, double threshold_f,
                                       double coeff_threshold = 1e-8);

namespace detail {

// Cores against an effective observation (the deconvolution driver passes
// y minus the other component's image).
double removal_prediction_core(double f_current,
                               const Eigen::VectorXd& residual,
                               const Atom& atom, double coeff);

TruncationOutcome truncate_greedy_core(const Eigen::VectorXd& y_eff,
                                       ActiveSet& as, double tau,
                                       double threshold_f, int reopt_iters);

TruncationOutcome truncate_redecompose_core(const Eigen::VectorXd& y_eff,
                                            ActiveSet& as,
                                            const MeasurementOperator& phi,
                                            double tau, double threshold_f,
                                            double coeff_threshold);

}  // namespace detail

}  // namespace cogent
