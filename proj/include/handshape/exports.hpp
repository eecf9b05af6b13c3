#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "handshape/landmark_io.hpp"
#include "handshape/segmentation.hpp"
#include "handshape/types.hpp"
#include "handshape/usage_stats.hpp"

namespace handshape {

/// Inverse of parse_landmark_sequences; coordinates round-trip exactly.
void write_landmark_csv(std::ostream& out, std::span<const LandmarkSequence> sequences);

/// `sequence_id,frame,joint,angle_radians`, joint = vertex landmark index.
void write_angle_csv(std::ostream& out, std::span<const AngleSample> samples);

/// `sequence_id,letter,frame,corrected` with corrected in {0,1}.
void write_alignment_csv(std::ostream& out, std::span<const LetterFrameAlignment> alignments);

struct EffortRow {
  std::string letter;  // may be empty for unlabeled samples
  std::string sample_id;
  double thumb_effort = 0.0;
  double finger_independence = 0.0;
};

/// `letter,sample_id,thumb_effort,finger_independence`.
void write_effort_csv(std::ostream& out, std::span<const EffortRow> rows);

/// `letter,weight` over a-z.
void write_letter_weights_csv(std::ostream& out, const LetterWeights& weights);

/// `letter1,letter2,confusability_bits,min_frequency`; pairs without
/// context mass are skipped.
void write_pair_stats_csv(std::ostream& out, const PairStatistics& stats);

/// `analysis,r,p,n`, one row per named analysis.
void write_correlations_csv(
    std::ostream& out,
    std::span<const std::pair<std::string, CorrelationResult>> rows);

}  // namespace handshape
