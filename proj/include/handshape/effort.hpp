#pragma once

#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "handshape/errors.hpp"
#include "handshape/kinematics.hpp"
#include "handshape/types.hpp"

namespace handshape {

/// Thumb joints measured by thumb effort (CMC, MCP, IP vertices).
inline constexpr std::array<int, 3> kThumbJoints = {1, 2, 3};

/// Same-type joint groups across the four fingers: MCP, PIP, DIP rows.
/// Thumb joints are kept out of the groups; their effort is measured
/// against resting hands instead.
inline constexpr std::array<std::array<int, 4>, 3> kJointGroups = {{
    {5, 9, 13, 17},
    {6, 10, 14, 18},
    {7, 11, 15, 19},
}};

inline constexpr double kDefaultThumbEffortWeight = 2.0;

/// Minimum over the resting set of the mean thumb-joint distance to it.
template <typename Scalar>
Scalar thumb_effort(const AngleVector<Scalar>& hand,
                    std::span<const AngleVector<Scalar>> resting) {
  if (resting.empty()) throw EmptyRestingSet("resting hand set is empty");
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (const auto& rest : resting) {
    Scalar sum = 0;
    for (int joint : kThumbJoints) {
      const int i = angle_index(joint);
      sum += angular_distance<Scalar>(hand[i], rest[i]);
    }
    best = std::min(best, sum / Scalar(kThumbJoints.size()));
  }
  return best;
}

/// Sum of pairwise angular distances within each same-type joint group
/// (3 groups x C(4,2) pairs = 18 terms).
template <typename Scalar>
Scalar group_spread(const AngleVector<Scalar>& hand) {
  Scalar sum = 0;
  for (const auto& group : kJointGroups) {
    for (size_t i = 0; i < group.size(); ++i) {
      for (size_t j = i + 1; j < group.size(); ++j) {
        sum += angular_distance<Scalar>(hand[angle_index(group[i])],
                                        hand[angle_index(group[j])]);
      }
    }
  }
  return sum;
}

/// Finger independence: te_weight * TE + within-group pairwise spread.
template <typename Scalar>
EffortScore finger_independence(
    const AngleVector<Scalar>& hand,
    std::span<const AngleVector<Scalar>> resting,
    Scalar te_weight = Scalar(kDefaultThumbEffortWeight)) {
  const Scalar te = thumb_effort(hand, resting);
  EffortScore score;
  score.thumb_effort = static_cast<double>(te);
  score.finger_independence = static_cast<double>(te_weight * te + group_spread(hand));
  return score;
}

/// Letters ordered by ascending mean finger independence, ties alphabetical.
std::vector<std::pair<char, double>> rank_letters_by_effort(
    const std::map<char, double>& mean_fi_by_letter);

}  // namespace handshape
