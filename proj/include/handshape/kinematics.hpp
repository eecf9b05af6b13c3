#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Core>

#include "handshape/errors.hpp"
#include "handshape/types.hpp"

namespace handshape {

/// Bone vectors shorter than this are treated as degenerate.
inline constexpr double kDegenerateBoneNorm = 1e-9;

/// Distance between two joint angles: |a - b| mod 2*pi.
/// For angles in [0, pi] this is the plain absolute difference.
template <typename Scalar>
Scalar angular_distance(Scalar a, Scalar b) {
  return std::fmod(std::abs(a - b), Scalar(2) * std::numbers::pi_v<Scalar>);
}

/// Joint angles of a hand, one per vertex landmark in kJointLandmarks order.
///
/// For a chain p -> j -> c the angle at j is the angle between the incoming
/// bone direction (j - p) and the outgoing one (c - j): a straight segment
/// scores 0, a fully folded one approaches pi. The cosine is clamped to
/// [-1, 1] so exactly straight or folded chains do not produce NaN.
template <typename Derived>
AngleVector<typename Derived::Scalar> joint_angles(
    const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(points.rows() == kLandmarkCount && points.cols() == 3);

  AngleVector<Scalar> angles;
  int k = 0;
  for (const auto& chain : kFingerChains) {
    for (int v = 1; v + 1 < static_cast<int>(chain.size()); ++v) {
      const auto prev = points.row(chain[static_cast<size_t>(v - 1)]);
      const auto vertex = points.row(chain[static_cast<size_t>(v)]);
      const auto next = points.row(chain[static_cast<size_t>(v + 1)]);
      const Eigen::Matrix<Scalar, 1, 3> in_bone = vertex - prev;
      const Eigen::Matrix<Scalar, 1, 3> out_bone = next - vertex;
      const Scalar in_norm = in_bone.norm();
      const Scalar out_norm = out_bone.norm();
      if (in_norm <= Scalar(kDegenerateBoneNorm) ||
          out_norm <= Scalar(kDegenerateBoneNorm)) {
        throw DegenerateBone("zero-length bone at joint landmark " +
                             std::to_string(chain[static_cast<size_t>(v)]));
      }
      const Scalar cosine = std::clamp(in_bone.dot(out_bone) / (in_norm * out_norm),
                                       Scalar(-1), Scalar(1));
      angles[k++] = std::acos(cosine);
    }
  }
  return angles;
}

/// Mean per-joint angular distance between two handshapes, in [0, pi].
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar handshape_distance(
    const Eigen::MatrixBase<DerivedA>& h1,
    const Eigen::MatrixBase<DerivedB>& h2) {
  using Scalar = typename DerivedA::Scalar;
  eigen_assert(h1.size() == kJointCount && h2.size() == kJointCount);
  Scalar sum = 0;
  for (int i = 0; i < kJointCount; ++i)
    sum += angular_distance<Scalar>(h1[i], h2[i]);
  return sum / Scalar(kJointCount);
}

}  // namespace handshape
