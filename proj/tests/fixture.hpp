#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "handshape/types.hpp"

namespace handshape::testing {

/// Flexion profile of a synthetic hand, in kJointLandmarks order.
struct Flexions {
  AngleVectord angles = AngleVectord::Zero();
};

/// Build hand landmarks by forward kinematics so that joint_angles of the
/// result reproduces `flexions` (up to floating-point rounding). Every
/// finger lies in the x-y plane; bone lengths are fixed.
LandmarkMatrixd make_hand(const AngleVectord& flexions);

/// Convenience: thumb joints t1..t3, the four fingers share mcp/pip/dip.
AngleVectord uniform_flexions(double t1, double t2, double t3, double mcp,
                              double pip, double dip);

/// Random flexion profile comfortably inside (0, pi).
AngleVectord random_flexions(std::mt19937& rng);

/// 21 random points in [-1,1]^3, resampled until no bone is near zero.
LandmarkMatrixd random_points(std::mt19937& rng);

/// Uniformly random rotation matrix (optionally composed with a reflection).
Eigen::Matrix3d random_rotation(std::mt19937& rng, bool reflect = false);

/// p -> scale * R * p + t applied to all landmarks.
LandmarkMatrixd apply_rigid_motion(const LandmarkMatrixd& points,
                                   const Eigen::Matrix3d& rotation,
                                   const Eigen::Vector3d& translation, double scale);

/// Four relaxed reference poses.
RestingHandSet synthetic_resting_hands();

/// Sequence with the dwell pattern [neutral, p0, p0, p1, p1, ..., neutral2]:
/// every letter pose is held for two identical frames, so the transition
/// inside each hold has exactly zero velocity. Letter poses must be pairwise
/// distinct or holds merge into one plateau.
LandmarkSequence make_letter_sequence(const std::string& id,
                                      const std::vector<AngleVectord>& letter_poses);

/// Random translation-step sequence with `dwell_count` exact-repeat dwells
/// planted at interior, non-adjacent transitions. Non-dwell velocities fall
/// in a band [v, 1.5v] whose width keeps any accidental local minimum less
/// sharp than a planted one, so the planted frames are always the sharpest
/// minima. Returns the planted transition indices in ascending order.
LandmarkSequence make_planted_sequence(std::mt19937& rng, int dwell_count,
                                       std::vector<int>* planted_transitions);

/// Serialize resting hands to the JSON layout parse_resting_hands reads.
void write_resting_hands_json(const std::filesystem::path& path,
                              const RestingHandSet& hands);

/// Synthetic end-to-end inputs: two sequences spelling ABCD and CADB (four
/// letters, two samples each), a toy lexicon, a toy word list, one manual
/// correction and a report config. Config paths are prefixed with
/// `config_path_prefix` and the report writes into `output_dir`.
void write_demo_fixture(const std::filesystem::path& dir,
                        const std::string& config_path_prefix,
                        const std::string& output_dir);

}  // namespace handshape::testing
