#include "cogent/sets/l1.hpp"

#include <cmath>
#include <stdexcept>

namespace cogent {

namespace {
const L1Params& params_of(const Atom& atom) {
  if (const auto* p = std::get_if<L1Params>(&atom.params)) return *p;
  throw std::invalid_argument("l1 set: foreign atom");
}
}  // namespace

L1Set::L1Set(Eigen::Index dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("l1 set: dim must be >= 1");
}

OracleResult L1Set::forward(const Eigen::VectorXd& gradient) const {
  if (gradient.size() != dim_)
    throw std::invalid_argument("l1 oracle: gradient dimension mismatch");
  Eigen::Index best = 0;
  double best_abs = 0.0;
  for (Eigen::Index i = 0; i < dim_; ++i) {
    const double a = std::abs(gradient[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  OracleResult res;
  res.guarantee = OracleGuarantee::make_exact();
  if (best_abs == 0.0) {
    res.atom.params = L1Params{0, +1};
    res.lin_value = 0.0;
    return res;
  }
  const int sign = gradient[best] > 0.0 ? -1 : +1;
  res.atom.params = L1Params{best, sign};
  res.lin_value = -best_abs;
  return res;
}

Eigen::VectorXd L1Set::embed(const Atom& atom) const {
  const L1Params& p = params_of(atom);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim_);
  x[p.index] = static_cast<double>(p.sign);
  return x;
}

void L1Set::add_scaled(const Atom& atom, double alpha,
                       Eigen::VectorXd& x) const {
  const L1Params& p = params_of(atom);
  x[p.index] += alpha * static_cast<double>(p.sign);
}

bool L1Set::same_atom(const Atom& a, const Atom& b) const {
  const L1Params& pa = params_of(a);
  const L1Params& pb = params_of(b);
  return pa.index == pb.index && pa.sign == pb.sign;
}

}  // namespace cogent
