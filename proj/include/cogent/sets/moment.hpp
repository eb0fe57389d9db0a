#pragma once

#include <vector>

#include "cogent/atomic_set.hpp"
#include "cogent/measurement.hpp"

namespace cogent {

/// Adaptive frequency grid on [0, 1): sorted, unique within 1e-12.
struct FrequencyGrid {
  std::vector<double> freqs;
  int refinement_level = 0;

  static FrequencyGrid uniform(int points);
  /// Insert keeping the list sorted and unique; returns true if added.
  bool insert(double f);
  bool contains(double f, double tol = 1e-12) const;
  /// Width of the grid cell containing f (neighbors may be 0 / 1 walls).
  double cell_width(double f) const;
};

/// Midpoint refinement: new frequencies midway between each pair of
/// consecutive selected frequencies and between each selected frequency and
/// its current grid neighbors. Monotone: every old point survives.
FrequencyGrid refine_grid(const FrequencyGrid& grid,
                          std::vector<double> selected);

/// Trigonometric moment atoms a(f) = [e^{i(2 pi f t_1 + phi)}, ...] sampled
/// at fixed times, stored as interleaved real pairs (ambient dimension
/// 2 n). The forward oracle sweeps the current grid for the largest
/// Hermitian inner-product modulus and sets the phase in closed form;
/// it is inexact against the continuum of frequencies, with the slack
/// controlled by grid refinement between iterations.
class MomentSet final : public AtomicSet {
 public:
  MomentSet(Eigen::VectorXd sample_times, FrequencyGrid grid,
            double merge_tol);

  Eigen::Index ambient_dim() const override { return 2 * times_.size(); }
  double radius() const override;
  OracleResult forward(const Eigen::VectorXd& gradient) const override;
  Eigen::VectorXd embed(const Atom& atom) const override;
  bool same_atom(const Atom& a, const Atom& b) const override;

  bool can_refine() const override { return true; }
  void refine(const std::vector<Atom>& selected) override;

  bool can_merge() const override { return true; }
  int merge_atoms(const Eigen::VectorXd& y_eff, const MeasurementOperator& phi,
                  ActiveSet& as, double threshold_f,
                  double* f_inout) const override;

  /// Replace clusters of active frequencies within merge_tol by a single
  /// spike at the coefficient-weighted mean frequency, keeping each merge
  /// only if the objective stays at or below threshold_f. Returns the
  /// number of atoms removed.
  int merge_spikes(const Problem& problem, ActiveSet& as, double threshold_f,
                   double merge_tol) const;

  const FrequencyGrid& grid() const { return grid_; }
  const Eigen::VectorXd& sample_times() const { return times_; }
  double merge_tol() const { return merge_tol_; }

  /// Grid sweep against an interleaved-pair vector; returns the best
  /// frequency index and the complex correlation. Also the certificate
  /// used by bound verification on a finer reference grid.
  struct Sweep {
    double freq = 0.0;
    double modulus = 0.0;
    double arg = 0.0;
  };
  Sweep sweep(const Eigen::VectorXd& pairs) const;

  static constexpr double kDeclaredOmega = 0.2;

 private:
  Eigen::VectorXd times_;
  FrequencyGrid grid_;
  double merge_tol_;
};

}  // namespace cogent
