#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace handshape {

inline constexpr int kLandmarkCount = 21;
inline constexpr int kJointCount = 15;

/// Landmark positions of one hand observation, row l = (x, y, z) of landmark l.
template <typename Scalar>
using LandmarkMatrix = Eigen::Matrix<Scalar, kLandmarkCount, 3>;

/// Joint angles in radians, one entry per measured joint (see kJointLandmarks).
template <typename Scalar>
using AngleVector = Eigen::Matrix<Scalar, kJointCount, 1>;

using LandmarkMatrixd = LandmarkMatrix<double>;
using AngleVectord = AngleVector<double>;

/// Landmark chains per digit, wrist to fingertip: thumb, index, middle, ring, pinky.
inline constexpr std::array<std::array<int, 5>, 5> kFingerChains = {{
    {0, 1, 2, 3, 4},
    {0, 5, 6, 7, 8},
    {0, 9, 10, 11, 12},
    {0, 13, 14, 15, 16},
    {0, 17, 18, 19, 20},
}};

/// Vertex landmark of each measured joint, in AngleVector order
/// (thumb, index, middle, ring, pinky; proximal to distal within a digit).
inline constexpr std::array<int, kJointCount> kJointLandmarks = {
    1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15, 17, 18, 19};

/// Position of a vertex landmark within an AngleVector; -1 if not a joint vertex.
constexpr int angle_index(int joint_landmark) {
  for (int i = 0; i < kJointCount; ++i)
    if (kJointLandmarks[static_cast<size_t>(i)] == joint_landmark) return i;
  return -1;
}

/// The 24 letters with a static fingerspelling handshape (J and Z need movement).
inline constexpr std::string_view kFsAlphabet = "ABCDEFGHIKLMNOPQRSTUVWXY";

constexpr bool is_fs_letter(char c) {
  return c >= 'A' && c <= 'Y' && c != 'J';
}

struct LandmarkFrame {
  int frame_index = 0;
  LandmarkMatrixd points = LandmarkMatrixd::Zero();
};

struct LandmarkSequence {
  std::string id;
  std::vector<LandmarkFrame> frames;
};

struct RestingHand {
  std::string name;
  LandmarkMatrixd landmarks = LandmarkMatrixd::Zero();
};

/// Reference set of low-effort hand poses; parse_resting_hands guarantees non-empty.
struct RestingHandSet {
  std::vector<RestingHand> hands;
};

enum class LexicalClass { Native, Initialized, Loan };

std::string_view to_string(LexicalClass c);

struct LexiconEntry {
  std::string gloss;
  char handshape = 0;  // uppercase fingerspelling letter, A-Y minus J
  double frequency_rating = 0.0;
  LexicalClass lexical_class = LexicalClass::Native;
};

struct WordCount {
  std::string word;
  long long count = 0;
};

/// Frequency list over lowercase a-z words, counts >= 1, unique words.
struct WordFrequencyList {
  std::map<std::string, long long> entries;
};

struct CorrelationResult {
  double r = 0.0;
  double p_value = 1.0;
  int n = 0;
};

struct EffortScore {
  std::string letter;  // empty when the sample is not letter-labeled
  double thumb_effort = 0.0;
  double finger_independence = 0.0;
};

}  // namespace handshape
