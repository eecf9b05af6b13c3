#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "handshape/types.hpp"

namespace handshape {

/// Per-transition velocities of a sequence; values[t] spans frames t -> t+1
/// (positions in the frame list, not raw frame indices). gap_count reports
/// transitions whose frame_index delta exceeds 1: velocities across such
/// gaps are still taken between the two present frames, never interpolated.
struct VelocitySeries {
  std::vector<double> values;
  int gap_count = 0;
};

/// Sum over the 21 landmarks of the Euclidean displacement between
/// consecutive frames. Requires at least 2 frames.
VelocitySeries transition_velocity(const LandmarkSequence& seq);

struct MinimumCandidate {
  int transition = 0;      // first index of the minimum (run start for plateaus)
  double sharpness = 0.0;  // drop from the left neighbor plus drop from the right
};

/// Interior local minima of a velocity profile. A maximal run of equal
/// values flanked by strictly larger neighbors counts once, at the run's
/// first index; sharpness uses the run's boundary neighbors. Candidates are
/// returned in ascending transition order.
std::vector<MinimumCandidate> find_local_minima(std::span<const double> values);

/// Which frame of the selected transition becomes the letter keyframe.
enum class KeyframeSide { Start, End };

struct AlignedLetter {
  char letter = 0;  // uppercase A-Z
  int frame_index = 0;
  bool corrected = false;
};

struct LetterFrameAlignment {
  std::string sequence_id;
  std::vector<AlignedLetter> letters;  // frame_index strictly increasing
};

/// Align the phrase's letters with the sharpest local minima of the
/// transition-velocity profile, one keyframe per letter. Non-alphabetic
/// phrase characters are skipped; ties in sharpness go to the earlier
/// transition. Throws NotEnoughMinima when the profile has fewer interior
/// minima than the phrase has letters.
LetterFrameAlignment extract_letter_frames(const LandmarkSequence& seq,
                                           std::string_view phrase,
                                           KeyframeSide side = KeyframeSide::Start);

struct AlignmentCorrection {
  int position = 0;  // 0-based index into the alignment
  int new_frame_index = 0;
};

/// Replace frame indices at the given positions and re-validate strict
/// monotonicity. sequence_frame_indices lists the frame_index values that
/// exist in the source sequence; corrections must point at one of them.
LetterFrameAlignment apply_corrections(const LetterFrameAlignment& alignment,
                                       std::span<const AlignmentCorrection> corrections,
                                       std::span<const int> sequence_frame_indices);

}  // namespace handshape
