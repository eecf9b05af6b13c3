#include "handshape/exports.hpp"

#include <ostream>

#include "handshape/csv.hpp"

namespace handshape {

void write_landmark_csv(std::ostream& out, std::span<const LandmarkSequence> sequences) {
  out << "sequence_id,frame,landmark,x,y,z\n";
  for (const auto& seq : sequences) {
    for (const auto& frame : seq.frames) {
      for (int l = 0; l < kLandmarkCount; ++l) {
        out << seq.id << ',' << frame.frame_index << ',' << l << ','
            << format_double(frame.points(l, 0)) << ','
            << format_double(frame.points(l, 1)) << ','
            << format_double(frame.points(l, 2)) << '\n';
      }
    }
  }
}

void write_angle_csv(std::ostream& out, std::span<const AngleSample> samples) {
  out << "sequence_id,frame,joint,angle_radians\n";
  for (const auto& sample : samples) {
    for (int i = 0; i < kJointCount; ++i) {
      out << sample.sequence_id << ',' << sample.frame_index << ','
          << kJointLandmarks[static_cast<size_t>(i)] << ','
          << format_double(sample.angles[i]) << '\n';
    }
  }
}

void write_alignment_csv(std::ostream& out,
                         std::span<const LetterFrameAlignment> alignments) {
  out << "sequence_id,letter,frame,corrected\n";
  for (const auto& alignment : alignments) {
    for (const auto& entry : alignment.letters) {
      out << alignment.sequence_id << ',' << entry.letter << ',' << entry.frame_index
          << ',' << (entry.corrected ? 1 : 0) << '\n';
    }
  }
}

void write_effort_csv(std::ostream& out, std::span<const EffortRow> rows) {
  out << "letter,sample_id,thumb_effort,finger_independence\n";
  for (const auto& row : rows) {
    out << row.letter << ',' << row.sample_id << ',' << format_double(row.thumb_effort)
        << ',' << format_double(row.finger_independence) << '\n';
  }
}

void write_letter_weights_csv(std::ostream& out, const LetterWeights& weights) {
  out << "letter,weight\n";
  for (int i = 0; i < 26; ++i) {
    out << static_cast<char>('a' + i) << ',' << format_double(weights[static_cast<size_t>(i)])
        << '\n';
  }
}

void write_pair_stats_csv(std::ostream& out, const PairStatistics& stats) {
  out << "letter1,letter2,confusability_bits,min_frequency\n";
  for (const auto& pair : stats.pairs) {
    if (!pair.confusability_bits) continue;
    out << pair.letter1 << ',' << pair.letter2 << ','
        << format_double(*pair.confusability_bits) << ','
        << format_double(pair.min_frequency) << '\n';
  }
}

void write_correlations_csv(
    std::ostream& out,
    std::span<const std::pair<std::string, CorrelationResult>> rows) {
  out << "analysis,r,p,n\n";
  for (const auto& [name, result] : rows) {
    out << name << ',' << format_double(result.r) << ',' << format_double(result.p_value)
        << ',' << result.n << '\n';
  }
}

}  // namespace handshape
