#pragma once

#include <string>
#include <vector>

#include "cogent/atomic_set.hpp"

namespace cogent {

/// Collection of (possibly overlapping) index groups over {0, ..., p-1}.
struct GroupStructure {
  std::vector<std::vector<Eigen::Index>> groups;

  /// Text format: one group per line, whitespace-separated 1-based indices.
  static GroupStructure load(const std::string& path);

  Eigen::Index max_index() const;
};

/// Unit Euclidean balls restricted to predefined groups of variables.
/// Exact oracle: the group with the largest gradient norm, direction the
/// negated normalized restricted gradient.
class GroupSet final : public AtomicSet {
 public:
  GroupSet(Eigen::Index dim, GroupStructure structure);

  Eigen::Index ambient_dim() const override { return dim_; }
  double radius() const override { return 1.0; }
  OracleResult forward(const Eigen::VectorXd& gradient) const override;
  Eigen::VectorXd embed(const Atom& atom) const override;
  void add_scaled(const Atom& atom, double alpha,
                  Eigen::VectorXd& x) const override;
  bool same_atom(const Atom& a, const Atom& b) const override;

  const GroupStructure& structure() const { return structure_; }

 private:
  Eigen::Index dim_;
  GroupStructure structure_;
};

}  // namespace cogent
