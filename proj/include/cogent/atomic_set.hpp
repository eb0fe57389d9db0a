#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "cogent/atom.hpp"

namespace cogent {

class ActiveSet;
class MeasurementOperator;

/// Quality declaration for a forward oracle: exact, or within relative
/// objective accuracy omega of the true linear minimizer.
struct OracleGuarantee {
  bool exact = true;
  double omega = 0.0;

  static OracleGuarantee make_exact() { return {true, 0.0}; }
  static OracleGuarantee inexact(double omega) { return {false, omega}; }
};

struct OracleResult {
  Atom atom;
  double lin_value = 0.0;  // <gradient, embed(atom)>, always <= 0
  OracleGuarantee guarantee;
};

struct Decomposition {
  std::vector<Atom> atoms;
  Eigen::VectorXd coeffs;  // nonnegative
};

/// Behavioral contract every atomic set implements. Sets are symmetric
/// about the origin; the forward oracle therefore always returns an atom
/// with a nonpositive inner product against the gradient. Oracles must be
/// safe for concurrent read-only calls; grid refinement is a single-writer
/// mutation between solver iterations.
class AtomicSet {
 public:
  virtual ~AtomicSet() = default;

  virtual Eigen::Index ambient_dim() const = 0;

  /// R = max norm over atoms, used in the convergence-bound constants.
  virtual double radius() const = 0;

  /// Atom (approximately) minimizing <gradient, a> over the set. A zero
  /// gradient yields the canonical default atom with lin_value 0.
  virtual OracleResult forward(const Eigen::VectorXd& gradient) const = 0;

  /// Dense ambient representation of an atom of this set. Throws
  /// std::invalid_argument for an atom of a different set.
  virtual Eigen::VectorXd embed(const Atom& atom) const = 0;

  /// x += alpha * embed(atom). Overridden where the embedding is sparse.
  virtual void add_scaled(const Atom& atom, double alpha,
                          Eigen::VectorXd& x) const {
    x += alpha * embed(atom);
  }

  /// Duplicate detection: exact parameter equality for discrete sets,
  /// distance below 1e-9 for continuous parameters.
  virtual bool same_atom(const Atom& a, const Atom& b) const = 0;

  virtual bool can_decompose() const { return false; }
  virtual Decomposition decompose(const Eigen::VectorXd& /*x*/,
                                  double /*threshold*/) const {
    throw std::logic_error("atomic set does not support decompose");
  }

  virtual bool can_refine() const { return false; }
  /// Grid refinement around the currently selected atoms.
  virtual void refine(const std::vector<Atom>& /*selected*/) {}

  virtual bool can_merge() const { return false; }
  /// Set-specific merging of nearby active atoms, accepted only while the
  /// objective stays at or below the threshold. `f_inout` carries the
  /// current objective against `y_eff` and is updated on acceptance.
  /// Returns the number of atoms removed.
  virtual int merge_atoms(const Eigen::VectorXd& /*y_eff*/,
                          const MeasurementOperator& /*phi*/,
                          ActiveSet& /*as*/, double /*threshold_f*/,
                          double* /*f_inout*/) const {
    return 0;
  }
};

}  // namespace cogent
