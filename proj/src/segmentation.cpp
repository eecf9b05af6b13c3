#include "handshape/segmentation.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "handshape/errors.hpp"

namespace handshape {

VelocitySeries transition_velocity(const LandmarkSequence& seq) {
  if (seq.frames.size() < 2) {
    throw TooFewFrames("sequence '" + seq.id + "' has " +
                       std::to_string(seq.frames.size()) +
                       " frames, need at least 2 for velocities");
  }
  VelocitySeries series;
  series.values.reserve(seq.frames.size() - 1);
  for (size_t t = 0; t + 1 < seq.frames.size(); ++t) {
    const LandmarkFrame& a = seq.frames[t];
    const LandmarkFrame& b = seq.frames[t + 1];
    if (b.frame_index - a.frame_index > 1) series.gap_count += 1;
    series.values.push_back((b.points - a.points).rowwise().norm().sum());
  }
  return series;
}

std::vector<MinimumCandidate> find_local_minima(std::span<const double> values) {
  std::vector<MinimumCandidate> minima;
  const size_t m = values.size();
  size_t run_start = 0;
  while (run_start < m) {
    size_t run_end = run_start;
    while (run_end + 1 < m && values[run_end + 1] == values[run_start]) ++run_end;
    const bool interior = run_start > 0 && run_end + 1 < m;
    if (interior && values[run_start - 1] > values[run_start] &&
        values[run_end + 1] > values[run_end]) {
      const double sharpness = (values[run_start - 1] - values[run_start]) +
                               (values[run_end + 1] - values[run_end]);
      minima.push_back(MinimumCandidate{static_cast<int>(run_start), sharpness});
    }
    run_start = run_end + 1;
  }
  return minima;
}

LetterFrameAlignment extract_letter_frames(const LandmarkSequence& seq,
                                           std::string_view phrase,
                                           KeyframeSide side) {
  std::string letters;
  for (char c : phrase) {
    const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper >= 'A' && upper <= 'Z') letters.push_back(upper);
  }
  if (letters.empty()) {
    throw std::invalid_argument("phrase for sequence '" + seq.id +
                                "' contains no letters");
  }

  const VelocitySeries velocity = transition_velocity(seq);
  std::vector<MinimumCandidate> minima = find_local_minima(velocity.values);
  if (minima.size() < letters.size()) {
    throw NotEnoughMinima("sequence '" + seq.id + "': found " +
                          std::to_string(minima.size()) + " local minima for " +
                          std::to_string(letters.size()) + " letters");
  }

  // n sharpest minima; equal sharpness goes to the earlier transition.
  std::stable_sort(minima.begin(), minima.end(),
                   [](const MinimumCandidate& a, const MinimumCandidate& b) {
                     if (a.sharpness != b.sharpness) return a.sharpness > b.sharpness;
                     return a.transition < b.transition;
                   });
  minima.resize(letters.size());
  std::sort(minima.begin(), minima.end(),
            [](const MinimumCandidate& a, const MinimumCandidate& b) {
              return a.transition < b.transition;
            });

  LetterFrameAlignment alignment;
  alignment.sequence_id = seq.id;
  alignment.letters.reserve(letters.size());
  const int offset = side == KeyframeSide::Start ? 0 : 1;
  for (size_t i = 0; i < letters.size(); ++i) {
    const size_t frame_pos = static_cast<size_t>(minima[i].transition + offset);
    alignment.letters.push_back(
        AlignedLetter{letters[i], seq.frames[frame_pos].frame_index, false});
  }
  return alignment;
}

LetterFrameAlignment apply_corrections(const LetterFrameAlignment& alignment,
                                       std::span<const AlignmentCorrection> corrections,
                                       std::span<const int> sequence_frame_indices) {
  LetterFrameAlignment result = alignment;
  for (const auto& correction : corrections) {
    if (correction.position < 0 ||
        correction.position >= static_cast<int>(result.letters.size())) {
      throw PositionOutOfRange("correction position " +
                               std::to_string(correction.position) +
                               " outside alignment of size " +
                               std::to_string(result.letters.size()));
    }
    if (std::find(sequence_frame_indices.begin(), sequence_frame_indices.end(),
                  correction.new_frame_index) == sequence_frame_indices.end()) {
      throw FrameNotInSequence("corrected frame " +
                               std::to_string(correction.new_frame_index) +
                               " does not exist in sequence '" +
                               result.sequence_id + "'");
    }
    auto& entry = result.letters[static_cast<size_t>(correction.position)];
    entry.frame_index = correction.new_frame_index;
    entry.corrected = true;
  }
  for (size_t i = 0; i + 1 < result.letters.size(); ++i) {
    if (result.letters[i].frame_index >= result.letters[i + 1].frame_index) {
      throw NonMonotonicAfterCorrection(
          "sequence '" + result.sequence_id + "': frames " +
          std::to_string(result.letters[i].frame_index) + " and " +
          std::to_string(result.letters[i + 1].frame_index) +
          " are not strictly increasing after corrections");
    }
  }
  return result;
}

}  // namespace handshape
