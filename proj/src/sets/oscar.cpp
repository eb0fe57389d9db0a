#include "cogent/sets/oscar.hpp"

#include <cmath>
#include <stdexcept>

namespace cogent {

namespace {
const OscarParams& params_of(const Atom& atom) {
  if (const auto* p = std::get_if<OscarParams>(&atom.params)) return *p;
  throw std::invalid_argument("oscar set: foreign atom");
}
}  // namespace

OscarSet::OscarSet(Eigen::Index dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("oscar set: dim must be >= 1");
}

double OscarSet::radius() const { return dim_ >= 2 ? std::sqrt(2.0) : 1.0; }

OracleResult OscarSet::forward(const Eigen::VectorXd& gradient) const {
  if (gradient.size() != dim_)
    throw std::invalid_argument("oscar oracle: gradient dimension mismatch");

  // Two largest magnitudes, lowest index on ties.
  Eigen::Index first = 0, second = -1;
  double a1 = 0.0, a2 = 0.0;
  for (Eigen::Index i = 0; i < dim_; ++i) {
    const double a = std::abs(gradient[i]);
    if (a > a1) {
      a2 = a1;
      second = first;
      a1 = a;
      first = i;
    } else if (a > a2) {
      a2 = a;
      second = i;
    }
  }

  OracleResult res;
  res.guarantee = OracleGuarantee::make_exact();
  if (a1 == 0.0) {
    res.atom.params = OscarParams{0, -1, +1, +1};
    res.lin_value = 0.0;
    return res;
  }
  const int s1 = gradient[first] > 0.0 ? -1 : +1;
  if (a2 == 0.0 || dim_ < 2) {
    // The second entry contributes nothing; prefer the sparser atom.
    res.atom.params = OscarParams{first, -1, s1, +1};
    res.lin_value = -a1;
    return res;
  }
  const int s2 = gradient[second] > 0.0 ? -1 : +1;
  if (first < second)
    res.atom.params = OscarParams{first, second, s1, s2};
  else
    res.atom.params = OscarParams{second, first, s2, s1};
  res.lin_value = -(a1 + a2);
  return res;
}

Eigen::VectorXd OscarSet::embed(const Atom& atom) const {
  const OscarParams& p = params_of(atom);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim_);
  x[p.i] = static_cast<double>(p.si);
  if (p.j >= 0) x[p.j] = static_cast<double>(p.sj);
  return x;
}

void OscarSet::add_scaled(const Atom& atom, double alpha,
                          Eigen::VectorXd& x) const {
  const OscarParams& p = params_of(atom);
  x[p.i] += alpha * static_cast<double>(p.si);
  if (p.j >= 0) x[p.j] += alpha * static_cast<double>(p.sj);
}

bool OscarSet::same_atom(const Atom& a, const Atom& b) const {
  const OscarParams& pa = params_of(a);
  const OscarParams& pb = params_of(b);
  return pa.i == pb.i && pa.j == pb.j && pa.si == pb.si &&
         (pa.j < 0 || pa.sj == pb.sj);
}

}  // namespace cogent
