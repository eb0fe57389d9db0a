#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cogent/atom.hpp"
#include "cogent/atomic_set.hpp"
#include "cogent/measurement.hpp"

namespace cogent {

/// The current basis A_t with nonnegative coefficients. The coefficient
/// sum certifies feasibility (sum <= tau implies atomic norm <= tau); the
/// atomic norm itself is never evaluated. Caches the ambient iterate
/// x = sum c_a * a, its measurement image Phi x, and the per-atom image
/// columns used by enhancement and truncation. Borrows the atomic set it
/// draws atoms from; single-writer.
class ActiveSet {
 public:
  ActiveSet(const AtomicSet& set, Eigen::Index measure_dim);

  const AtomicSet& set() const { return *set_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(atoms_.size()); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  const Eigen::VectorXd& iterate() const { return iterate_; }
  const Eigen::VectorXd& image() const { return image_; }
  /// m x k matrix of cached atom images (one column per atom).
  Eigen::Ref<const Eigen::MatrixXd> images() const {
    return images_.leftCols(size());
  }

  double coeff_sum() const { return size() ? coeffs_.sum() : 0.0; }
  bool feasible(double tau, double slack = 1e-12) const;

  /// Scale every coefficient (step 7 of the main loop uses 1 - gamma).
  void scale(double factor);

  /// Append an atom with the given coefficient, merging into an existing
  /// entry when the set reports it as a duplicate. The atom must carry its
  /// measurement image.
  void add(Atom atom, double coeff);

  /// Replace the coefficient vector (same order as atoms()), purge zero
  /// entries, and rebuild the cached iterate and image.
  void set_coeffs(const Eigen::VectorXd& coeffs);

  /// set_coeffs with a caller-supplied image (already equal to
  /// images() * coeffs), keeping objective comparisons bitwise consistent.
  void set_coeffs_with_image(const Eigen::VectorXd& coeffs,
                             Eigen::VectorXd image);

  /// Remove one atom and its coefficient; caches rebuilt.
  void remove(Eigen::Index index);

  /// Recompute iterate and image from scratch (drift control).
  void rebuild();

  /// Drop all atoms with zero coefficient.
  void purge_zero_coeffs();

  /// Overwrite the cached measurement image with a value the caller has
  /// already computed as images() * coeffs().
  void set_image(Eigen::VectorXd image) { image_ = std::move(image); }

 private:
  const AtomicSet* set_;
  std::vector<Atom> atoms_;
  Eigen::VectorXd coeffs_;
  Eigen::VectorXd iterate_;
  Eigen::VectorXd image_;
  Eigen::MatrixXd images_;  // capacity grows geometrically; leftCols(size) live
};

/// Step 7 of the main loop: scale old coefficients by (1 - gamma) and
/// append the new atom with coefficient gamma * tau. gamma = 0 leaves the
/// set unchanged (zero-coefficient append suppressed); gamma = 1 collapses
/// to the single new atom.
void active_set_update(ActiveSet& as, const Atom& atom, double gamma,
                       double tau);

/// Fill atom.image / atom.image_normsq from the measurement operator.
void attach_image(Atom& atom, const AtomicSet& set,
                  const MeasurementOperator& phi);

}  // namespace cogent
