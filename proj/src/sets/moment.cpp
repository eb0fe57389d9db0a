#include "cogent/sets/moment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cogent/active_set.hpp"

namespace cogent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const MomentParams& params_of(const Atom& atom) {
  if (const auto* p = std::get_if<MomentParams>(&atom.params)) return *p;
  throw std::invalid_argument("moment set: foreign atom");
}

double wrap_phase(double phi) {
  phi = std::fmod(phi, kTwoPi);
  return phi < 0.0 ? phi + kTwoPi : phi;
}

// Hermitian correlation of the unit atom at frequency f against an
// interleaved-pair vector: sum_k e^{-i 2 pi f t_k} g_k. Plain ordered loop
// so sweeps are bit-reproducible.
std::pair<double, double> correlate(const Eigen::VectorXd& times, double f,
                                    const Eigen::VectorXd& pairs) {
  double re = 0.0, im = 0.0;
  for (Eigen::Index k = 0; k < times.size(); ++k) {
    const double theta = kTwoPi * f * times[k];
    const double c = std::cos(theta), s = std::sin(theta);
    const double gr = pairs[2 * k], gi = pairs[2 * k + 1];
    // conj(e^{i theta}) * (gr + i gi)
    re += c * gr + s * gi;
    im += c * gi - s * gr;
  }
  return {re, im};
}

}  // namespace

FrequencyGrid FrequencyGrid::uniform(int points) {
  if (points < 1) throw std::invalid_argument("frequency grid: points < 1");
  FrequencyGrid g;
  g.freqs.resize(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    g.freqs[static_cast<std::size_t>(i)] = static_cast<double>(i) / points;
  return g;
}

bool FrequencyGrid::insert(double f) {
  if (f < 0.0 || f >= 1.0)
    throw std::invalid_argument("frequency grid: frequency outside [0,1)");
  auto it = std::lower_bound(freqs.begin(), freqs.end(), f);
  if (it != freqs.end() && std::abs(*it - f) <= 1e-12) return false;
  if (it != freqs.begin() && std::abs(*(it - 1) - f) <= 1e-12) return false;
  freqs.insert(it, f);
  return true;
}

bool FrequencyGrid::contains(double f, double tol) const {
  auto it = std::lower_bound(freqs.begin(), freqs.end(), f - tol);
  return it != freqs.end() && std::abs(*it - f) <= tol;
}

double FrequencyGrid::cell_width(double f) const {
  if (freqs.empty()) return 1.0;
  auto it = std::upper_bound(freqs.begin(), freqs.end(), f);
  const double right = it == freqs.end() ? 1.0 : *it;
  const double left = it == freqs.begin() ? 0.0 : *(it - 1);
  return right - left;
}

FrequencyGrid refine_grid(const FrequencyGrid& grid,
                          std::vector<double> selected) {
  FrequencyGrid out = grid;
  if (selected.empty()) return out;
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()),
                 selected.end());

  for (std::size_t i = 0; i + 1 < selected.size(); ++i)
    out.insert(0.5 * (selected[i] + selected[i + 1]));

  // Midpoints toward the existing grid neighbors of each selected point.
  for (double f : selected) {
    auto lo = std::lower_bound(grid.freqs.begin(), grid.freqs.end(), f - 1e-12);
    if (lo != grid.freqs.begin()) out.insert(0.5 * (f + *(lo - 1)));
    auto hi = std::upper_bound(grid.freqs.begin(), grid.freqs.end(), f + 1e-12);
    if (hi != grid.freqs.end()) out.insert(0.5 * (f + *hi));
  }
  out.refinement_level = grid.refinement_level + 1;
  return out;
}

MomentSet::MomentSet(Eigen::VectorXd sample_times, FrequencyGrid grid,
                     double merge_tol)
    : times_(std::move(sample_times)),
      grid_(std::move(grid)),
      merge_tol_(merge_tol) {
  if (times_.size() < 1)
    throw std::invalid_argument("moment set: need sample times");
  if (grid_.freqs.empty())
    throw std::invalid_argument("moment set: empty frequency grid");
}

double MomentSet::radius() const {
  return std::sqrt(static_cast<double>(times_.size()));
}

MomentSet::Sweep MomentSet::sweep(const Eigen::VectorXd& pairs) const {
  Sweep best;
  for (double f : grid_.freqs) {
    const auto [re, im] = correlate(times_, f, pairs);
    const double modulus = std::hypot(re, im);
    if (modulus > best.modulus) {
      best.modulus = modulus;
      best.freq = f;
      best.arg = std::atan2(im, re);
    }
  }
  return best;
}

OracleResult MomentSet::forward(const Eigen::VectorXd& gradient) const {
  if (gradient.size() != ambient_dim())
    throw std::invalid_argument("moment oracle: gradient dimension mismatch");

  OracleResult res;
  res.guarantee = OracleGuarantee::inexact(kDeclaredOmega);
  const Sweep best = sweep(gradient);
  if (best.modulus == 0.0) {
    res.atom.params = MomentParams{grid_.freqs.front(), 0.0};
    res.lin_value = 0.0;
    return res;
  }
  // Phase chosen so Re(e^{-i phi} z) = -|z|.
  res.atom.params = MomentParams{best.freq, wrap_phase(best.arg + std::numbers::pi)};
  res.lin_value = -best.modulus;
  return res;
}

Eigen::VectorXd MomentSet::embed(const Atom& atom) const {
  const MomentParams& p = params_of(atom);
  Eigen::VectorXd x(ambient_dim());
  for (Eigen::Index k = 0; k < times_.size(); ++k) {
    const double theta = kTwoPi * p.freq * times_[k] + p.phase;
    x[2 * k] = std::cos(theta);
    x[2 * k + 1] = std::sin(theta);
  }
  return x;
}

bool MomentSet::same_atom(const Atom& a, const Atom& b) const {
  const MomentParams& pa = params_of(a);
  const MomentParams& pb = params_of(b);
  if (std::abs(pa.freq - pb.freq) > 1e-9) return false;
  const double dphi = std::abs(pa.phase - pb.phase);
  return std::min(dphi, kTwoPi - dphi) <= 1e-9;
}

void MomentSet::refine(const std::vector<Atom>& selected) {
  std::vector<double> freqs;
  freqs.reserve(selected.size());
  for (const Atom& a : selected) freqs.push_back(params_of(a).freq);
  grid_ = refine_grid(grid_, std::move(freqs));
}

int MomentSet::merge_atoms(const Eigen::VectorXd& y_eff,
                           const MeasurementOperator& phi, ActiveSet& as,
                           double threshold_f, double* f_inout) const {
  int removed = 0;
  if (as.size() < 2) return removed;

  // Order the active atoms by frequency and chain-cluster within merge_tol.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(as.size()));
  for (Eigen::Index j = 0; j < as.size(); ++j)
    order[static_cast<std::size_t>(j)] = j;
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return params_of(as.atoms()[static_cast<std::size_t>(a)]).freq <
           params_of(as.atoms()[static_cast<std::size_t>(b)]).freq;
  });

  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size()) {
      const double prev =
          params_of(as.atoms()[static_cast<std::size_t>(order[end - 1])]).freq;
      const double next =
          params_of(as.atoms()[static_cast<std::size_t>(order[end])]).freq;
      if (next - prev > merge_tol_) break;
      ++end;
    }
    const std::size_t cluster_size = end - start;
    if (cluster_size < 2) {
      ++start;
      continue;
    }

    // Tentative replacement: coefficient-weighted mean frequency; complex
    // sum of the spikes, so identical frequencies merge without changing
    // the objective. The coefficient sum never increases (|sum z| <= sum c).
    double coeff_sum = 0.0, mean_freq = 0.0, zr = 0.0, zi = 0.0;
    for (std::size_t s = start; s < end; ++s) {
      const Eigen::Index j = order[s];
      const double c = as.coeffs()[j];
      const MomentParams& p =
          params_of(as.atoms()[static_cast<std::size_t>(j)]);
      coeff_sum += c;
      mean_freq += c * p.freq;
      zr += c * std::cos(p.phase);
      zi += c * std::sin(p.phase);
    }
    if (coeff_sum <= 0.0) {
      start = end;
      continue;
    }
    mean_freq /= coeff_sum;
    const double merged_coeff = std::hypot(zr, zi);

    // Bind the candidate to the set the active set already references (the
    // scratch copy used by merge_spikes must not outlive this call).
    ActiveSet candidate(as.set(), as.image().size());
    for (Eigen::Index j = 0; j < as.size(); ++j) {
      const bool in_cluster =
          std::find(order.begin() + static_cast<std::ptrdiff_t>(start),
                    order.begin() + static_cast<std::ptrdiff_t>(end),
                    j) != order.begin() + static_cast<std::ptrdiff_t>(end);
      if (in_cluster) continue;
      candidate.add(as.atoms()[static_cast<std::size_t>(j)], as.coeffs()[j]);
    }
    if (merged_coeff > 0.0) {
      Atom merged;
      merged.params = MomentParams{mean_freq, wrap_phase(std::atan2(zi, zr))};
      attach_image(merged, as.set(), phi);
      candidate.add(std::move(merged), merged_coeff);
    }

    const double f_candidate =
        0.5 * (y_eff - candidate.image()).squaredNorm();
    if (f_candidate <= threshold_f) {
      removed += static_cast<int>(as.size() - candidate.size());
      as = std::move(candidate);
      if (f_inout) *f_inout = f_candidate;
      // Restart clustering on the modified set.
      if (as.size() < 2) return removed;
      order.resize(static_cast<std::size_t>(as.size()));
      for (Eigen::Index j = 0; j < as.size(); ++j)
        order[static_cast<std::size_t>(j)] = j;
      std::sort(order.begin(), order.end(),
                [&](Eigen::Index a, Eigen::Index b) {
                  return params_of(as.atoms()[static_cast<std::size_t>(a)]).freq <
                         params_of(as.atoms()[static_cast<std::size_t>(b)]).freq;
                });
      start = 0;
    } else {
      start = end;
    }
  }
  return removed;
}

int MomentSet::merge_spikes(const Problem& problem, ActiveSet& as,
                            double threshold_f, double merge_tol) const {
  // Scratch copy carrying the requested tolerance; the candidate sets built
  // inside merge_atoms stay bound to as.set().
  MomentSet scratch(times_, grid_, merge_tol);
  double f = 0.5 * (problem.y - as.image()).squaredNorm();
  return scratch.merge_atoms(problem.y, problem.phi, as, threshold_f, &f);
}

}  // namespace cogent
