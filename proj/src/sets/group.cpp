#include "cogent/sets/group.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cogent {

namespace {
const GroupParams& params_of(const Atom& atom) {
  if (const auto* p = std::get_if<GroupParams>(&atom.params)) return *p;
  throw std::invalid_argument("group set: foreign atom");
}
}  // namespace

GroupStructure GroupStructure::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  GroupStructure gs;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Eigen::Index> group;
    long long idx;
    while (ls >> idx) {
      if (idx < 1) throw std::runtime_error("group file: indices are 1-based");
      group.push_back(static_cast<Eigen::Index>(idx - 1));
    }
    if (!group.empty()) gs.groups.push_back(std::move(group));
  }
  if (gs.groups.empty()) throw std::runtime_error("group file: no groups");
  return gs;
}

Eigen::Index GroupStructure::max_index() const {
  Eigen::Index m = -1;
  for (const auto& g : groups)
    for (Eigen::Index i : g) m = std::max(m, i);
  return m;
}

GroupSet::GroupSet(Eigen::Index dim, GroupStructure structure)
    : dim_(dim), structure_(std::move(structure)) {
  if (structure_.groups.empty())
    throw std::invalid_argument("group set: no groups");
  for (const auto& g : structure_.groups) {
    if (g.empty()) throw std::invalid_argument("group set: empty group");
    for (Eigen::Index i : g)
      if (i < 0 || i >= dim)
        throw std::invalid_argument("group set: index out of range");
  }
}

OracleResult GroupSet::forward(const Eigen::VectorXd& gradient) const {
  if (gradient.size() != dim_)
    throw std::invalid_argument("group oracle: gradient dimension mismatch");

  std::size_t best = 0;
  double best_normsq = -1.0;
  for (std::size_t gi = 0; gi < structure_.groups.size(); ++gi) {
    double normsq = 0.0;
    for (Eigen::Index i : structure_.groups[gi])
      normsq += gradient[i] * gradient[i];
    if (normsq > best_normsq) {
      best_normsq = normsq;
      best = gi;
    }
  }

  OracleResult res;
  res.guarantee = OracleGuarantee::make_exact();
  const auto& group = structure_.groups[best];
  const double norm = std::sqrt(best_normsq);
  GroupParams p;
  p.group = static_cast<Eigen::Index>(best);
  p.direction.resize(static_cast<Eigen::Index>(group.size()));
  if (norm == 0.0) {
    p.group = 0;
    p.direction =
        Eigen::VectorXd::Zero(static_cast<Eigen::Index>(structure_.groups[0].size()));
    p.direction[0] = 1.0;
    res.atom.params = std::move(p);
    res.lin_value = 0.0;
    return res;
  }
  for (std::size_t k = 0; k < group.size(); ++k)
    p.direction[static_cast<Eigen::Index>(k)] = -gradient[group[k]] / norm;
  res.atom.params = std::move(p);
  res.lin_value = -norm;
  return res;
}

Eigen::VectorXd GroupSet::embed(const Atom& atom) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dim_);
  add_scaled(atom, 1.0, x);
  return x;
}

void GroupSet::add_scaled(const Atom& atom, double alpha,
                          Eigen::VectorXd& x) const {
  const GroupParams& p = params_of(atom);
  if (p.group < 0 || p.group >= static_cast<Eigen::Index>(structure_.groups.size()))
    throw std::invalid_argument("group set: bad group id");
  const auto& group = structure_.groups[static_cast<std::size_t>(p.group)];
  if (p.direction.size() != static_cast<Eigen::Index>(group.size()))
    throw std::invalid_argument("group set: direction length mismatch");
  for (std::size_t k = 0; k < group.size(); ++k)
    x[group[k]] += alpha * p.direction[static_cast<Eigen::Index>(k)];
}

bool GroupSet::same_atom(const Atom& a, const Atom& b) const {
  const GroupParams& pa = params_of(a);
  const GroupParams& pb = params_of(b);
  if (pa.group != pb.group) return false;
  return (pa.direction - pb.direction).norm() <= 1e-9;
}

}  // namespace cogent
