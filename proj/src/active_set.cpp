#include "cogent/active_set.hpp"

#include <stdexcept>

namespace cogent {

ActiveSet::ActiveSet(const AtomicSet& set, Eigen::Index measure_dim)
    : set_(&set),
      coeffs_(0),
      iterate_(Eigen::VectorXd::Zero(set.ambient_dim())),
      image_(Eigen::VectorXd::Zero(measure_dim)),
      images_(measure_dim, 0) {}

bool ActiveSet::feasible(double tau, double slack) const {
  if (size() == 0) return true;
  return coeffs_.minCoeff() >= 0.0 && coeffs_.sum() <= tau + slack;
}

void ActiveSet::scale(double factor) {
  coeffs_ *= factor;
  iterate_ *= factor;
  image_ *= factor;
}

void ActiveSet::add(Atom atom, double coeff) {
  if (!atom.has_image())
    throw std::invalid_argument("active set: atom has no cached image");
  if (atom.image.size() != image_.size())
    throw std::invalid_argument("active set: image dimension mismatch");

  for (Eigen::Index j = 0; j < size(); ++j) {
    if (set_->same_atom(atoms_[static_cast<std::size_t>(j)], atom)) {
      coeffs_[j] += coeff;
      set_->add_scaled(atoms_[static_cast<std::size_t>(j)], coeff, iterate_);
      image_ += coeff * images_.col(j);
      return;
    }
  }

  const Eigen::Index k = size();
  if (images_.cols() == k) {
    const Eigen::Index grow = std::max<Eigen::Index>(8, 2 * images_.cols());
    images_.conservativeResize(Eigen::NoChange, grow);
  }
  images_.col(k) = atom.image;
  coeffs_.conservativeResize(k + 1);
  coeffs_[k] = coeff;
  set_->add_scaled(atom, coeff, iterate_);
  image_ += coeff * atom.image;
  atoms_.push_back(std::move(atom));
}

void ActiveSet::set_coeffs(const Eigen::VectorXd& coeffs) {
  if (coeffs.size() != size())
    throw std::invalid_argument("active set: coefficient size mismatch");
  coeffs_ = coeffs;
  purge_zero_coeffs();
  rebuild();
}

void ActiveSet::set_coeffs_with_image(const Eigen::VectorXd& coeffs,
                                      Eigen::VectorXd image) {
  set_coeffs(coeffs);
  image_ = std::move(image);
}

void ActiveSet::remove(Eigen::Index index) {
  const Eigen::Index k = size();
  if (index < 0 || index >= k)
    throw std::invalid_argument("active set: remove index out of range");
  for (Eigen::Index j = index; j + 1 < k; ++j) {
    coeffs_[j] = coeffs_[j + 1];
    images_.col(j) = images_.col(j + 1);
  }
  coeffs_.conservativeResize(k - 1);
  atoms_.erase(atoms_.begin() + index);
  rebuild();
}

void ActiveSet::rebuild() {
  iterate_.setZero();
  for (Eigen::Index j = 0; j < size(); ++j)
    set_->add_scaled(atoms_[static_cast<std::size_t>(j)], coeffs_[j], iterate_);
  image_ = size() ? Eigen::VectorXd(images() * coeffs_)
                  : Eigen::VectorXd::Zero(image_.size());
}

void ActiveSet::purge_zero_coeffs() {
  Eigen::Index keep = 0;
  for (Eigen::Index j = 0; j < size(); ++j) {
    if (coeffs_[j] == 0.0) continue;
    if (keep != j) {
      coeffs_[keep] = coeffs_[j];
      images_.col(keep) = images_.col(j);
      atoms_[static_cast<std::size_t>(keep)] =
          std::move(atoms_[static_cast<std::size_t>(j)]);
    }
    ++keep;
  }
  if (keep == size()) return;
  atoms_.resize(static_cast<std::size_t>(keep));
  coeffs_.conservativeResize(keep);
  rebuild();
}

void active_set_update(ActiveSet& as, const Atom& atom, double gamma,
                       double tau) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("active_set_update: gamma outside [0,1]");
  if (gamma == 0.0) return;
  as.scale(1.0 - gamma);
  if (gamma == 1.0) as.purge_zero_coeffs();
  as.add(atom, gamma * tau);
}

void attach_image(Atom& atom, const AtomicSet& set,
                  const MeasurementOperator& phi) {
  atom.image = phi.apply(set.embed(atom));
  atom.image_normsq = atom.image.squaredNorm();
}

}  // namespace cogent
