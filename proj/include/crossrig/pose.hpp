#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "crossrig/error.hpp"

namespace crossrig {

/// Rigid SE(3) transform stored as unit quaternion + translation.
///
/// The quaternion is renormalized and sign-canonicalized (w >= 0) by every
/// constructor, so long composition chains do not drift and equal rotations
/// compare equal componentwise. Matrix forms are deliberately absent from the
/// composition path; rotation_matrix() exists only to feed point transforms.
template <typename Scalar>
class Pose {
public:
  using Quat = Eigen::Quaternion<Scalar>;
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

  Pose() : rotation_(Quat::Identity()), translation_(Vec3::Zero()) {}

  Pose(const Quat& rotation, const Vec3& translation)
      : rotation_(rotation), translation_(translation) {
    const Scalar norm = rotation_.norm();
    if (!(norm > Scalar(1e-12))) {
      throw ValidationError("Pose: quaternion norm is (near) zero");
    }
    rotation_.coeffs() /= norm;
    canonicalize();
  }

  static Pose identity() { return Pose(); }

  static Pose from_translation(const Vec3& t) {
    return Pose(Quat::Identity(), t);
  }

  const Quat& rotation() const { return rotation_; }
  const Vec3& translation() const { return translation_; }

  Eigen::Matrix<Scalar, 3, 3> rotation_matrix() const {
    return rotation_.toRotationMatrix();
  }

  /// Applies the transform to a point: R * p + t.
  Vec3 operator*(const Vec3& p) const { return rotation_ * p + translation_; }

private:
  // Resolve the q/-q ambiguity: force w > 0, and when w == 0 force the first
  // nonzero imaginary component positive.
  void canonicalize() {
    const Scalar w = rotation_.w();
    bool flip = w < Scalar(0);
    if (w == Scalar(0)) {
      const Scalar x = rotation_.x(), y = rotation_.y(), z = rotation_.z();
      flip = x < Scalar(0) || (x == Scalar(0) && (y < Scalar(0) || (y == Scalar(0) && z < Scalar(0))));
    }
    if (flip) {
      rotation_.coeffs() = -rotation_.coeffs();
    }
  }

  Quat rotation_;
  Vec3 translation_;
};

/// Composition in matrix convention: result applies b first, then a.
template <typename Scalar>
Pose<Scalar> compose(const Pose<Scalar>& a, const Pose<Scalar>& b) {
  return Pose<Scalar>(a.rotation() * b.rotation(),
                      a.rotation() * b.translation() + a.translation());
}

template <typename Scalar>
Pose<Scalar> inverse(const Pose<Scalar>& p) {
  const Eigen::Quaternion<Scalar> inv_q = p.rotation().conjugate();
  return Pose<Scalar>(inv_q, inv_q * (-p.translation()));
}

/// Rotation angle in radians between the two poses' orientations.
template <typename Scalar>
Scalar rotation_distance(const Pose<Scalar>& a, const Pose<Scalar>& b) {
  return a.rotation().angularDistance(b.rotation());
}

template <typename Scalar>
Scalar translation_distance(const Pose<Scalar>& a, const Pose<Scalar>& b) {
  return (a.translation() - b.translation()).norm();
}

using Posed = Pose<double>;
using Posef = Pose<float>;

}  // namespace crossrig
