#pragma once

#include <Eigen/Dense>
#include <utility>
#include <variant>
#include <vector>

namespace cogent {

// Parameter records for the concrete atomic sets. An atom is one basis
// element of its set plus the cached image under the measurement operator.

struct L1Params {
  Eigen::Index index = 0;
  int sign = +1;  // atom = sign * e_index
};

struct GroupParams {
  Eigen::Index group = 0;
  Eigen::VectorXd direction;  // unit vector over the group's indices
};

struct RankOneParams {
  Eigen::VectorXd u;  // atom = u v^T, ||u|| = ||v|| = 1
  Eigen::VectorXd v;
};

struct TensorParams {
  Eigen::VectorXd u;  // atom = u (x) u (x) u, ||u|| = 1
};

struct MomentParams {
  double freq = 0.0;   // in [0, 1)
  double phase = 0.0;  // in [0, 2*pi)
};

struct WaveformParams {
  double p1 = 0.0;  // sawtooth: period alpha_1; gaussian: mean mu
  double p2 = 0.0;  // sawtooth: offset alpha_2; gaussian: width sigma
  int sign = +1;
};

struct OscarParams {
  Eigen::Index i = 0;
  Eigen::Index j = -1;  // -1: one-sparse atom
  int si = +1;
  int sj = +1;
};

struct TreeParams {
  std::vector<std::pair<int, int>> edges;  // spanning tree, i < j
  Eigen::MatrixXd weights;                 // symmetric, unit Frobenius norm
};

struct GridGraphParams {
  int shift = 0;            // cyclic node relabeling
  Eigen::MatrixXd weights;  // symmetric, unit Frobenius norm
};

using AtomParams =
    std::variant<L1Params, GroupParams, RankOneParams, TensorParams,
                 MomentParams, WaveformParams, OscarParams, TreeParams,
                 GridGraphParams>;

struct Atom {
  AtomParams params;
  Eigen::VectorXd image;       // Phi * embed(atom), filled by the solver
  double image_normsq = 0.0;   // ||Phi a||^2, cached for truncation

  bool has_image() const { return image.size() > 0; }
};

}  // namespace cogent
