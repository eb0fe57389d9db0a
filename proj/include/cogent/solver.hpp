#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cogent/active_set.hpp"
#include "cogent/atomic_set.hpp"
#include "cogent/measurement.hpp"

namespace cogent {

enum class Truncation { None, Greedy, Redecompose };

const char* to_string(Truncation mode);
std::optional<Truncation> truncation_from_string(const std::string& name);

struct SolverConfig {
  double eta = 0.4;         // acceptance threshold, (0, 1/2]
  double omega = 0.0;       // forward inexactness budget, [0, 1/4); 0 = exact
  double tol = 1e-8;        // stopping: absolute f and relative decrease
  int max_iter = 500;
  int enhancement_iters = 10;  // 0 disables the optional reoptimization step
  Truncation truncation = Truncation::Greedy;
  std::uint64_t seed = 0;
  double decompose_threshold = 1e-8;  // coefficient cutoff for re-decomposition
  std::optional<Atom> init_atom;      // boundary start x_0 = tau * a_0 when set

  /// Throws std::invalid_argument when outside the admissible ranges
  /// (eta in (0, 1/2]; with omega > 0, eta < 1/3 and omega < 1/4).
  void validate() const;
};

struct IterationRecord {
  int iter = 0;
  double f = 0.0;
  Eigen::Index basis_size = 0;
  double gamma = 0.0;
  int removed = 0;
  double wall_s = 0.0;
};

struct IterationLog {
  std::vector<IterationRecord> rows;

  static constexpr const char* kCsvHeader = "iter,f,basis_size,gamma,removed,wall_s";

  double final_f() const { return rows.empty() ? 0.0 : rows.back().f; }
  Eigen::Index final_basis() const {
    return rows.empty() ? 0 : rows.back().basis_size;
  }
  double min_f() const;
  /// True when f is nonincreasing across rows.
  bool monotone() const;
  void write_csv(std::ostream& os) const;
};

/// Constants of the O(1/T) convergence guarantees. With omega = 0 these
/// are the exact-oracle constants (C1 = eta D + 2 (1-eta) L R^2 tau^2);
/// with omega > 0 the inexact-oracle variants
/// (C1 = (eta + omega (1-eta)) D + 2 (1-eta) L R^2 tau^2). The constructor
/// rejects parameter combinations for which the bound denominator is not
/// positive.
struct ConvergenceBound {
  double lipschitz = 0.0;  // L = ||Phi^T Phi||
  double gap0 = 0.0;       // D = f(x_0) - f*
  double radius = 0.0;     // R = max atom norm
  double tau = 0.0;
  double eta = 0.0;
  double omega = 0.0;
  double c1 = 0.0;
  double c = 0.0;

  ConvergenceBound(double lipschitz, double gap0, double radius, double tau,
                   double eta, double omega = 0.0);
};

/// C / (T + 1); the guarantees are stated for T >= 1 only.
double evaluate_bound(const ConvergenceBound& bound, int t);

/// Closed-form step: clamp(<r, Phi v> / ||Phi v||^2, [0, 1]) with
/// v = tau a - x, r the current residual. Returns 0 when Phi v = 0.
double line_search_on_images(const Eigen::VectorXd& residual,
                             const Eigen::VectorXd& phi_v);

/// Exact line search along x + gamma (tau a - x); the atom must carry its
/// cached image.
double exact_line_search(const Problem& problem, const Eigen::VectorXd& x,
                         const Atom& atom);

/// F = eta f_t + (1 - eta) f_tilde, the largest objective a backward step
/// may leave behind.
double acceptance_threshold(double f_t, double f_tilde, double eta);

/// Relative-accuracy test for an inexact forward step:
/// <grad, tau a - x> <= (1 - omega) certified_min, where certified_min is
/// a valid lower bound on min_a <grad, tau a - x>.
bool check_inexact_condition(const AtomicSet& set,
                             const Eigen::VectorXd& gradient,
                             const Eigen::VectorXd& x, const Atom& candidate,
                             double certified_min, double omega, double tau);

/// Per-iteration hook for instrumentation (bound verification measures the
/// achieved forward inexactness through this).
struct ForwardObserver {
  std::function<void(int iter, const Eigen::VectorXd& gradient,
                     const Eigen::VectorXd& x, const OracleResult& chosen)>
      on_forward;
};

struct SolveResult {
  ActiveSet active_set;
  IterationLog log;
};

namespace detail {

struct StepOutcome {
  double f_after = 0.0;
  double gamma = 0.0;
  int removed = 0;
  bool stationary = false;
};

// One forward / enhance / truncate pass for a single component against an
// effective observation y_eff = y - (image of the other component). Shared
// by the single-set loop and the deconvolution driver.
StepOutcome component_step(const Eigen::VectorXd& y_eff,
                           const MeasurementOperator& phi, AtomicSet& set,
                           ActiveSet& as, double tau, double f_cur,
                           const SolverConfig& cfg, int iter,
                           const ForwardObserver* observer);

}  // namespace detail

/// The full method: forward step with exact line search, optional
/// coefficient reoptimization (enhancement), and a backward step accepted
/// only while the objective stays below F. The iterate is feasible and the
/// objective nonincreasing at every iteration; stops when f <= tol, the
/// relative decrease falls to tol, the forward step is stationary, or
/// max_iter is reached.
SolveResult cogent_solve(const Problem& problem, AtomicSet& set,
                         const SolverConfig& config,
                         const ForwardObserver* observer = nullptr);

/// Plain conditional-gradient baseline: the same loop with enhancement and
/// truncation disabled. With those settings the two solvers produce
/// identical logs by construction.
SolveResult cg_solve(const Problem& problem, AtomicSet& set,
                     const SolverConfig& config,
                     const ForwardObserver* observer = nullptr);

}  // namespace cogent
