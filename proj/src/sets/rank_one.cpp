#include "cogent/sets/rank_one.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cogent/power.hpp"

namespace cogent {

namespace {
const RankOneParams& params_of(const Atom& atom) {
  if (const auto* p = std::get_if<RankOneParams>(&atom.params)) return *p;
  throw std::invalid_argument("rank-one set: foreign atom");
}
}  // namespace

RankOneSet::RankOneSet(Eigen::Index rows, Eigen::Index cols)
    : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("rank-one set: bad shape");
}

OracleResult RankOneSet::forward(const Eigen::VectorXd& gradient) const {
  if (gradient.size() != ambient_dim())
    throw std::invalid_argument("rank-one oracle: gradient dimension mismatch");

  OracleResult res;
  res.guarantee = OracleGuarantee::inexact(kOracleOmega);
  Eigen::Map<const Eigen::MatrixXd> g(gradient.data(), rows_, cols_);
  if (g.cwiseAbs().maxCoeff() == 0.0) {
    RankOneParams p;
    p.u = Eigen::VectorXd::Zero(rows_);
    p.v = Eigen::VectorXd::Zero(cols_);
    p.u[0] = 1.0;
    p.v[0] = 1.0;
    res.atom.params = std::move(p);
    res.lin_value = 0.0;
    return res;
  }
  const SingularPair top = top_singular_pair(-g);
  RankOneParams p;
  p.u = top.u;
  p.v = top.v;
  res.atom.params = std::move(p);
  res.lin_value = -top.sigma;
  return res;
}

Eigen::VectorXd RankOneSet::embed(const Atom& atom) const {
  const RankOneParams& p = params_of(atom);
  Eigen::VectorXd x(ambient_dim());
  Eigen::Map<Eigen::MatrixXd>(x.data(), rows_, cols_) = p.u * p.v.transpose();
  return x;
}

bool RankOneSet::same_atom(const Atom& a, const Atom& b) const {
  const RankOneParams& pa = params_of(a);
  const RankOneParams& pb = params_of(b);
  // u v^T == (-u)(-v)^T, so compare both orientations.
  const double direct = (pa.u - pb.u).norm() + (pa.v - pb.v).norm();
  const double flipped = (pa.u + pb.u).norm() + (pa.v + pb.v).norm();
  return std::min(direct, flipped) <= 1e-9;
}

Decomposition RankOneSet::decompose(const Eigen::VectorXd& x,
                                    double threshold) const {
  if (x.size() != ambient_dim())
    throw std::invalid_argument("rank-one decompose: dimension mismatch");
  Eigen::Map<const Eigen::MatrixXd> m(x.data(), rows_, cols_);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double total = sigma.sum();

  Decomposition dec;
  std::vector<double> kept;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] <= threshold * total) break;  // sorted descending
    RankOneParams p;
    p.u = svd.matrixU().col(i);
    p.v = svd.matrixV().col(i);
    Atom a;
    a.params = std::move(p);
    dec.atoms.push_back(std::move(a));
    kept.push_back(sigma[i]);
  }
  dec.coeffs = Eigen::Map<const Eigen::VectorXd>(
      kept.data(), static_cast<Eigen::Index>(kept.size()));
  return dec;
}

}  // namespace cogent
