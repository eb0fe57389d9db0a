#include "cogent/sets/tensor.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace cogent {

namespace {

const TensorParams& params_of(const Atom& atom) {
  if (const auto* p = std::get_if<TensorParams>(&atom.params)) return *p;
  throw std::invalid_argument("tensor set: foreign atom");
}

// w_i = sum_{j,k} T_ijk u_j u_k, using the d x d slices along the third
// index.
Eigen::VectorXd contract_uu(const Eigen::VectorXd& t, Eigen::Index d,
                            const Eigen::VectorXd& u) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    Eigen::Map<const Eigen::MatrixXd> slice(t.data() + k * d * d, d, d);
    w.noalias() += u[k] * (slice * u);
  }
  return w;
}

double triple_product(const Eigen::VectorXd& t, Eigen::Index d,
                      const Eigen::VectorXd& u) {
  return u.dot(contract_uu(t, d, u));
}

}  // namespace

Eigen::VectorXd symmetrize_tensor3(const Eigen::VectorXd& t, Eigen::Index d) {
  if (t.size() != d * d * d)
    throw std::invalid_argument("symmetrize_tensor3: dimension mismatch");
  Eigen::VectorXd s(t.size());
  auto at = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return t[i + j * d + k * d * d];
  };
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index i = 0; i < d; ++i)
        s[i + j * d + k * d * d] =
            (at(i, j, k) + at(i, k, j) + at(j, i, k) + at(j, k, i) +
             at(k, i, j) + at(k, j, i)) /
            6.0;
  return s;
}

TensorSet::TensorSet(Eigen::Index dim, std::uint64_t seed)
    : dim_(dim), seed_(seed) {
  if (dim < 1) throw std::invalid_argument("tensor set: dim must be >= 1");
}

TensorSet::EigenPair TensorSet::dominant_pair(
    const Eigen::VectorXd& tensor) const {
  EigenPair best;
  std::mt19937_64 rng(seed_);
  std::normal_distribution<double> gauss(0.0, 1.0);

  for (int start = 0; start < kStarts; ++start) {
    Eigen::VectorXd u(dim_);
    for (Eigen::Index i = 0; i < dim_; ++i) u[i] = gauss(rng);
    u.normalize();
    double lambda_prev = 0.0;
    for (int it = 0; it < kPowerIters; ++it) {
      Eigen::VectorXd w = contract_uu(tensor, dim_, u);
      const double wn = w.norm();
      if (wn == 0.0) break;
      u = w / wn;
      const double lambda = triple_product(tensor, dim_, u);
      if (std::abs(lambda - lambda_prev) <= kPowerTol * (1.0 + std::abs(lambda)))
        break;
      lambda_prev = lambda;
    }
    const double lambda = triple_product(tensor, dim_, u);
    if (std::abs(lambda) > std::abs(best.lambda)) {
      best.lambda = lambda;
      best.u = u;
    }
  }
  return best;
}

OracleResult TensorSet::forward(const Eigen::VectorXd& gradient) const {
  if (gradient.size() != ambient_dim())
    throw std::invalid_argument("tensor oracle: gradient dimension mismatch");

  OracleResult res;
  res.guarantee = OracleGuarantee::inexact(kOracleOmega);
  if (gradient.cwiseAbs().maxCoeff() == 0.0) {
    TensorParams p;
    p.u = Eigen::VectorXd::Zero(dim_);
    p.u[0] = 1.0;
    res.atom.params = std::move(p);
    res.lin_value = 0.0;
    return res;
  }

  // <g, u^(x3)> only depends on the symmetric part of g.
  const Eigen::VectorXd sym = symmetrize_tensor3(gradient, dim_);
  EigenPair pair = dominant_pair(sym);
  if (pair.u.size() == 0) {
    TensorParams p;
    p.u = Eigen::VectorXd::Zero(dim_);
    p.u[0] = 1.0;
    res.atom.params = std::move(p);
    res.lin_value = 0.0;
    return res;
  }
  // Odd order: u -> -u negates the atom; orient so the inner product with
  // the gradient is nonpositive.
  TensorParams p;
  p.u = pair.lambda > 0.0 ? Eigen::VectorXd(-pair.u) : pair.u;
  res.atom.params = std::move(p);
  res.lin_value = -std::abs(pair.lambda);
  return res;
}

Eigen::VectorXd TensorSet::embed(const Atom& atom) const {
  const TensorParams& p = params_of(atom);
  if (p.u.size() != dim_)
    throw std::invalid_argument("tensor embed: bad parameter length");
  Eigen::VectorXd x(ambient_dim());
  for (Eigen::Index k = 0; k < dim_; ++k)
    for (Eigen::Index j = 0; j < dim_; ++j)
      for (Eigen::Index i = 0; i < dim_; ++i)
        x[i + j * dim_ + k * dim_ * dim_] = p.u[i] * p.u[j] * p.u[k];
  return x;
}

bool TensorSet::same_atom(const Atom& a, const Atom& b) const {
  const TensorParams& pa = params_of(a);
  const TensorParams& pb = params_of(b);
  return (pa.u - pb.u).norm() <= 1e-9;
}

Decomposition TensorSet::decompose(const Eigen::VectorXd& x,
                                   double threshold) const {
  if (x.size() != ambient_dim())
    throw std::invalid_argument("tensor decompose: dimension mismatch");

  Decomposition dec;
  Eigen::VectorXd residual = symmetrize_tensor3(x, dim_);
  std::vector<double> coeffs;
  double total = 0.0;
  const int max_terms = static_cast<int>(2 * dim_);
  for (int term = 0; term < max_terms; ++term) {
    if (residual.cwiseAbs().maxCoeff() == 0.0) break;
    EigenPair pair = dominant_pair(residual);
    const double magnitude = std::abs(pair.lambda);
    if (pair.u.size() == 0 || magnitude <= threshold * (total + magnitude))
      break;
    // lambda * u^(x3) = |lambda| * (sign(lambda) u)^(x3) for odd order.
    TensorParams p;
    p.u = pair.lambda >= 0.0 ? pair.u : Eigen::VectorXd(-pair.u);
    Atom a;
    a.params = std::move(p);
    Eigen::VectorXd component = embed(a);
    residual -= magnitude * component;
    dec.atoms.push_back(std::move(a));
    coeffs.push_back(magnitude);
    total += magnitude;
  }
  dec.coeffs = Eigen::Map<const Eigen::VectorXd>(
      coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
  return dec;
}

}  // namespace cogent
