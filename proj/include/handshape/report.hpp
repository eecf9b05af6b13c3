#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "handshape/segmentation.hpp"
#include "handshape/stats.hpp"

namespace handshape {

/// Inputs and knobs of the full analysis pipeline. Paths are taken as
/// given (no resolution against the config file location); corrections
/// is optional and may stay empty.
struct RunConfig {
  std::string landmarks_path;
  std::string phrases_path;
  std::string resting_hands_path;
  std::string lexicon_path;
  std::string word_list_path;
  std::string corrections_path;
  std::string output_dir = "out";

  int top_k = 20000;
  int min_count = 2;
  double te_weight = 2.0;
  KeyframeSide keyframe_side = KeyframeSide::Start;
  HdAggregation hd_aggregation = HdAggregation::CrossProduct;
  bool weighted_contexts = true;
};

/// Parse a flat key=value config ('#' starts a comment) on top of `base`;
/// keys not mentioned keep their base value. Unknown keys are errors so a
/// typo cannot silently fall back to a default.
RunConfig parse_run_config(std::istream& in, std::string_view source_name = "",
                           RunConfig base = {});

struct ReportSummary {
  int sequences = 0;
  int letters_analyzed = 0;
  int pairs_analyzed = 0;
  int pairs_without_mass = 0;
  int lexicon_dropped = 0;
  int skipped_movement_letters = 0;  // J/Z keyframes excluded downstream
  int velocity_gaps = 0;
};

/// Run the whole pipeline and write letters.csv, pairs.csv,
/// correlations.csv and the four scatter CSVs into config.output_dir.
ReportSummary run_report(const RunConfig& config);

}  // namespace handshape
