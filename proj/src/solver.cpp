#include "cogent/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "cogent/projected_gradient.hpp"
#include "cogent/truncation.hpp"

namespace cogent {

const char* to_string(Truncation mode) {
  switch (mode) {
    case Truncation::None: return "none";
    case Truncation::Greedy: return "greedy";
    case Truncation::Redecompose: return "redecompose";
  }
  return "?";
}

std::optional<Truncation> truncation_from_string(const std::string& name) {
  if (name == "none") return Truncation::None;
  if (name == "greedy") return Truncation::Greedy;
  if (name == "redecompose") return Truncation::Redecompose;
  return std::nullopt;
}

void SolverConfig::validate() const {
  if (!(eta > 0.0 && eta <= 0.5))
    throw std::invalid_argument("config: eta must lie in (0, 1/2]");
  if (omega < 0.0 || omega >= 0.25)
    throw std::invalid_argument("config: omega must lie in [0, 1/4)");
  if (omega > 0.0 && !(eta < 1.0 / 3.0))
    throw std::invalid_argument("config: inexact oracles require eta < 1/3");
  if (!(tol > 0.0)) throw std::invalid_argument("config: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("config: max_iter must be >= 1");
  if (enhancement_iters < 0)
    throw std::invalid_argument("config: enhancement_iters must be >= 0");
}

double IterationLog::min_f() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) best = std::min(best, r.f);
  return best;
}

bool IterationLog::monotone() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].f > rows[i - 1].f) return false;
  return true;
}

void IterationLog::write_csv(std::ostream& os) const {
  os << kCsvHeader << '\n';
  char buf[64];
  for (const auto& r : rows) {
    os << r.iter << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.f);
    os << buf << ',' << r.basis_size << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.gamma);
    os << buf << ',' << r.removed << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.wall_s);
    os << buf << '\n';
  }
}

ConvergenceBound::ConvergenceBound(double lipschitz_in, double gap0_in,
                                   double radius_in, double tau_in,
                                   double eta_in, double omega_in)
    : lipschitz(lipschitz_in),
      gap0(gap0_in),
      radius(radius_in),
      tau(tau_in),
      eta(eta_in),
      omega(omega_in) {
  if (!(lipschitz > 0.0) || !(radius > 0.0) || !(tau > 0.0) || gap0 < 0.0)
    throw std::invalid_argument("bound: need L, R, tau > 0 and D >= 0");
  const double lrt = lipschitz * radius * radius * tau * tau;
  double denom = 0.0;
  if (omega == 0.0) {
    if (!(eta > 0.0 && eta <= 0.5))
      throw std::invalid_argument("bound: eta must lie in (0, 1/2]");
    c1 = eta * gap0 + 2.0 * (1.0 - eta) * lrt;
    denom = (1.0 - eta) * (c1 - lrt);
  } else {
    if (!(eta > 0.0 && eta < 1.0 / 3.0))
      throw std::invalid_argument("bound: inexact case needs eta in (0, 1/3)");
    if (!(omega > 0.0 && omega < 0.25))
      throw std::invalid_argument("bound: inexact case needs omega in (0, 1/4)");
    c1 = (eta + omega * (1.0 - eta)) * gap0 + 2.0 * (1.0 - eta) * lrt;
    denom = (1.0 - eta) * ((1.0 - omega) * c1 - lrt);
  }
  if (!(denom > 0.0))
    throw std::invalid_argument("bound: nonpositive denominator (C1 too small)");
  c = 2.0 * c1 * c1 / denom;
}

double evaluate_bound(const ConvergenceBound& bound, int t) {
  if (t < 1) throw std::invalid_argument("evaluate_bound: stated for T >= 1");
  return bound.c / static_cast<double>(t + 1);
}

double line_search_on_images(const Eigen::VectorXd& residual,
                             const Eigen::VectorXd& phi_v) {
  const double denom = phi_v.squaredNorm();
  if (denom == 0.0) return 0.0;  // objective constant along v
  const double gamma = residual.dot(phi_v) / denom;
  return std::min(1.0, std::max(0.0, gamma));
}

double exact_line_search(const Problem& problem, const Eigen::VectorXd& x,
                         const Atom& atom) {
  if (!atom.has_image())
    throw std::invalid_argument("line search: atom has no cached image");
  const Eigen::VectorXd image = problem.phi.apply(x);
  return line_search_on_images(problem.y - image,
                               problem.tau * atom.image - image);
}

double acceptance_threshold(double f_t, double f_tilde, double eta) {
  return eta * f_t + (1.0 - eta) * f_tilde;
}

bool check_inexact_condition(const AtomicSet& set,
                             const Eigen::VectorXd& gradient,
                             const Eigen::VectorXd& x, const Atom& candidate,
                             double certified_min, double omega, double tau) {
  const double lhs =
      tau * gradient.dot(set.embed(candidate)) - gradient.dot(x);
  return lhs <= (1.0 - omega) * certified_min;
}

namespace detail {

// The objective value carried in and out refers to the same joint residual,
// so monotonicity checks compare like with like. Every sub-step is committed
// only if its freshly computed objective does not exceed the value it must
// not exceed; the cached image is overwritten with exactly the vector the
// accepted objective was computed from.
StepOutcome component_step(const Eigen::VectorXd& y_eff,
                           const MeasurementOperator& phi, AtomicSet& set,
                           ActiveSet& as, double tau, double f_cur,
                           const SolverConfig& cfg, int iter,
                           const ForwardObserver* observer) {
  StepOutcome out;
  out.f_after = f_cur;

  const Eigen::VectorXd grad = phi.adjoint(as.image() - y_eff);
  OracleResult fw = set.forward(grad);
  if (observer && observer->on_forward)
    observer->on_forward(iter, grad, as.iterate(), fw);

  if (fw.lin_value >= -cfg.tol * (1.0 + f_cur)) {
    // Vanishing linearized gap: treat the iterate as stationary.
    out.stationary = true;
    return out;
  }

  attach_image(fw.atom, set, phi);
  const Eigen::VectorXd residual = y_eff - as.image();
  const Eigen::VectorXd phi_v = tau * fw.atom.image - as.image();
  double gamma = line_search_on_images(residual, phi_v);

  double f_tilde = f_cur;
  if (gamma > 0.0) {
    Eigen::VectorXd fw_image = (1.0 - gamma) * as.image() +
                               (gamma * tau) * fw.atom.image;
    const double f_fw = 0.5 * (y_eff - fw_image).squaredNorm();
    if (f_fw <= f_cur) {
      active_set_update(as, fw.atom, gamma, tau);
      as.set_image(std::move(fw_image));
      f_tilde = f_fw;
      out.gamma = gamma;
    }
  }

  if (cfg.enhancement_iters > 0 && as.size() > 0) {
    const PgResult pg = projected_gradient(as.images(), y_eff, as.coeffs(),
                                           tau, cfg.enhancement_iters);
    if (pg.objective < f_tilde) {
      as.set_coeffs_with_image(pg.coeffs, pg.image);
      f_tilde = pg.objective;
    }
  }

  double f_after = f_tilde;
  if (cfg.truncation != Truncation::None && as.size() > 0) {
    // Mathematically F <= f_cur; the min guards the comparison in floating
    // point so logged objectives never increase.
    const double threshold =
        std::min(acceptance_threshold(f_cur, f_tilde, cfg.eta), f_cur);
    TruncationOutcome trunc;
    if (cfg.truncation == Truncation::Greedy)
      trunc = truncate_greedy_core(y_eff, as, tau, threshold,
                                   cfg.enhancement_iters);
    else
      trunc = truncate_redecompose_core(y_eff, as, phi, tau, threshold,
                                        cfg.decompose_threshold);
    if (trunc.accepted) {
      f_after = trunc.objective_after;
      out.removed += trunc.removed_count;
    }
    if (set.can_merge())
      out.removed += set.merge_atoms(y_eff, phi, as, threshold, &f_after);
  }

  out.f_after = f_after;
  return out;
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SolveResult run_main_loop(const Problem& problem, AtomicSet& set,
                          SolverConfig config,
                          const ForwardObserver* observer) {
  config.validate();
  if (problem.phi.input_dim() != set.ambient_dim())
    throw std::invalid_argument("solve: operator/set ambient dimension mismatch");

  const auto start = Clock::now();
  SolveResult res{ActiveSet(set, problem.phi.output_dim()), IterationLog{}};
  ActiveSet& as = res.active_set;

  if (config.init_atom) {
    Atom a0 = *config.init_atom;
    attach_image(a0, set, problem.phi);
    as.add(std::move(a0), problem.tau);
  }

  double f_cur = 0.5 * (problem.y - as.image()).squaredNorm();
  res.log.rows.push_back({0, f_cur, as.size(), 0.0, 0, seconds_since(start)});

  for (int t = 1; t <= config.max_iter; ++t) {
    if (f_cur <= config.tol) break;

    const detail::StepOutcome step = detail::component_step(
        problem.y, problem.phi, set, as, problem.tau, f_cur, config, t,
        observer);
    if (step.stationary) break;

    if (!as.feasible(problem.tau))
      throw std::logic_error("solve: infeasible coefficients");
    if (step.f_after > f_cur)
      throw std::logic_error("solve: objective increased");

    res.log.rows.push_back({t, step.f_after, as.size(), step.gamma,
                            step.removed, seconds_since(start)});

    if (set.can_refine()) set.refine(as.atoms());

    const double decrease = f_cur - step.f_after;
    if (f_cur > 0.0 && decrease / f_cur <= config.tol) {
      f_cur = step.f_after;
      break;
    }
    f_cur = step.f_after;
  }
  return res;
}

}  // namespace

SolveResult cogent_solve(const Problem& problem, AtomicSet& set,
                         const SolverConfig& config,
                         const ForwardObserver* observer) {
  return run_main_loop(problem, set, config, observer);
}

SolveResult cg_solve(const Problem& problem, AtomicSet& set,
                     const SolverConfig& config,
                     const ForwardObserver* observer) {
  SolverConfig cg = config;
  cg.enhancement_iters = 0;
  cg.truncation = Truncation::None;
  return run_main_loop(problem, set, cg, observer);
}

}  // namespace cogent
