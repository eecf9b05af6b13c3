#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "handshape/csv.hpp"
#include "handshape/effort.hpp"
#include "handshape/errors.hpp"
#include "handshape/exports.hpp"
#include "handshape/kinematics.hpp"
#include "handshape/landmark_io.hpp"
#include "handshape/report.hpp"
#include "handshape/segmentation.hpp"
#include "handshape/stats.hpp"
#include "handshape/usage_stats.hpp"

namespace hs = handshape;

namespace {

// Exit codes: 1 usage, 2 malformed data, 3 computation/domain error,
// 4 file I/O, 5 unexpected.
constexpr int kExitData = 2;
constexpr int kExitDomain = 3;
constexpr int kExitFile = 4;
constexpr int kExitUnexpected = 5;

hs::KeyframeSide keyframe_side_from(const std::string& value) {
  return value == "end" ? hs::KeyframeSide::End : hs::KeyframeSide::Start;
}

hs::HdAggregation aggregation_from(const std::string& value) {
  return value == "mean_vector" ? hs::HdAggregation::MeanVector
                                : hs::HdAggregation::CrossProduct;
}

std::vector<hs::LetterFrameAlignment> segment_sequences(
    const std::vector<hs::LandmarkSequence>& sequences,
    const std::map<std::string, std::string>& phrases,
    const std::map<std::string, std::vector<hs::AlignmentCorrection>>& corrections,
    hs::KeyframeSide side, int* gap_count) {
  std::vector<hs::LetterFrameAlignment> alignments;
  for (const auto& seq : sequences) {
    const auto phrase = phrases.find(seq.id);
    if (phrase == phrases.end()) {
      throw hs::MissingPhrase("no phrase for sequence '" + seq.id + "'");
    }
    if (gap_count) *gap_count += hs::transition_velocity(seq).gap_count;
    hs::LetterFrameAlignment alignment =
        hs::extract_letter_frames(seq, phrase->second, side);
    const auto it = corrections.find(seq.id);
    if (it != corrections.end()) {
      std::vector<int> frame_indices;
      for (const auto& frame : seq.frames) frame_indices.push_back(frame.frame_index);
      alignment = hs::apply_corrections(alignment, it->second, frame_indices);
    }
    alignments.push_back(std::move(alignment));
  }
  return alignments;
}

// Letter labels per (sequence, frame), movement letters J/Z excluded.
std::map<std::pair<std::string, int>, char> keyframe_letters(
    const std::vector<hs::LetterFrameAlignment>& alignments, int* skipped) {
  std::map<std::pair<std::string, int>, char> letters;
  for (const auto& alignment : alignments) {
    for (const auto& entry : alignment.letters) {
      if (entry.letter == 'J' || entry.letter == 'Z') {
        if (skipped) *skipped += 1;
        continue;
      }
      letters[{alignment.sequence_id, entry.frame_index}] = entry.letter;
    }
  }
  return letters;
}

// Two-column CSV `key,value` (header skipped) for ad-hoc correlations.
std::map<std::string, double> parse_series(const std::string& path) {
  auto in = hs::open_input_file(path);
  std::map<std::string, double> series;
  std::string line;
  int line_no = 0;
  while (hs::read_line(in, line)) {
    ++line_no;
    if (line.empty() || line_no == 1) continue;
    const std::string where = path + " line " + std::to_string(line_no);
    const auto fields = hs::split_fields(line);
    if (fields.size() != 2) throw hs::MalformedRow(where + ": expected 'key,value'");
    if (!series.emplace(fields[0], hs::parse_double_field(fields[1], where)).second) {
      throw hs::MalformedRow(where + ": duplicate key '" + fields[0] + "'");
    }
  }
  return series;
}

int run_segment(const std::string& input, const std::string& phrase_file,
                const std::string& corrections_path, const std::string& side,
                const std::string& out_path) {
  auto landmarks_in = hs::open_input_file(input);
  const auto sequences = hs::parse_landmark_sequences(landmarks_in, input);
  auto phrases_in = hs::open_input_file(phrase_file);
  const auto phrases = hs::parse_phrases(phrases_in, phrase_file);
  std::map<std::string, std::vector<hs::AlignmentCorrection>> corrections;
  if (!corrections_path.empty()) {
    auto corrections_in = hs::open_input_file(corrections_path);
    corrections = hs::parse_corrections(corrections_in, corrections_path);
  }
  int gaps = 0;
  const auto alignments = segment_sequences(sequences, phrases, corrections,
                                            keyframe_side_from(side), &gaps);
  auto out = hs::open_output_file(out_path);
  hs::write_alignment_csv(out, alignments);
  std::cerr << "segmented " << sequences.size() << " sequences";
  if (gaps > 0) std::cerr << " (" << gaps << " frame gaps bridged without interpolation)";
  std::cerr << "\n";
  return 0;
}

int run_angles(const std::string& input, const std::string& out_path) {
  auto landmarks_in = hs::open_input_file(input);
  const auto sequences = hs::parse_landmark_sequences(landmarks_in, input);
  std::vector<hs::AngleSample> samples;
  for (const auto& seq : sequences) {
    for (const auto& frame : seq.frames) {
      samples.push_back(
          hs::AngleSample{seq.id, frame.frame_index, hs::joint_angles(frame.points)});
    }
  }
  auto out = hs::open_output_file(out_path);
  hs::write_angle_csv(out, samples);
  return 0;
}

int run_effort(const std::string& angles_path, const std::string& resting_path,
               const std::string& alignment_path, double te_weight,
               const std::string& out_path) {
  auto angles_in = hs::open_input_file(angles_path);
  const auto samples = hs::parse_angle_table(angles_in, angles_path);
  auto resting_in = hs::open_input_file(resting_path);
  const auto resting_set = hs::parse_resting_hands(resting_in, resting_path);
  std::vector<hs::AngleVectord> resting_angles;
  for (const auto& hand : resting_set.hands) {
    resting_angles.push_back(hs::joint_angles(hand.landmarks));
  }

  std::map<std::pair<std::string, int>, char> letters;
  int skipped = 0;
  const bool aligned_only = !alignment_path.empty();
  if (aligned_only) {
    auto alignment_in = hs::open_input_file(alignment_path);
    letters = keyframe_letters(hs::parse_alignments(alignment_in, alignment_path),
                               &skipped);
  }

  std::vector<hs::EffortRow> rows;
  for (const auto& sample : samples) {
    std::string letter;
    if (aligned_only) {
      const auto it = letters.find({sample.sequence_id, sample.frame_index});
      if (it == letters.end()) continue;
      letter = std::string(1, it->second);
    }
    const hs::EffortScore score =
        hs::finger_independence<double>(sample.angles, resting_angles, te_weight);
    rows.push_back(hs::EffortRow{
        letter, sample.sequence_id + ":" + std::to_string(sample.frame_index),
        score.thumb_effort, score.finger_independence});
  }
  auto out = hs::open_output_file(out_path);
  hs::write_effort_csv(out, rows);
  if (skipped > 0) {
    std::cerr << "excluded " << skipped << " movement-letter (J/Z) keyframes\n";
  }
  return 0;
}

int run_distance(const std::string& angles_path, const std::string& alignment_path,
                 const std::string& aggregation, const std::string& out_path) {
  auto angles_in = hs::open_input_file(angles_path);
  const auto samples = hs::parse_angle_table(angles_in, angles_path);
  auto out = hs::open_output_file(out_path);

  if (alignment_path.empty()) {
    out << "id1,id2,distance_radians\n";
    for (size_t i = 0; i < samples.size(); ++i) {
      for (size_t j = i + 1; j < samples.size(); ++j) {
        out << samples[i].sequence_id << ':' << samples[i].frame_index << ','
            << samples[j].sequence_id << ':' << samples[j].frame_index << ','
            << hs::format_double(
                   hs::handshape_distance(samples[i].angles, samples[j].angles))
            << '\n';
      }
    }
    return 0;
  }

  auto alignment_in = hs::open_input_file(alignment_path);
  const auto letters =
      keyframe_letters(hs::parse_alignments(alignment_in, alignment_path), nullptr);
  std::map<char, std::vector<hs::AngleVectord>> by_letter;
  for (const auto& sample : samples) {
    const auto it = letters.find({sample.sequence_id, sample.frame_index});
    if (it != letters.end()) by_letter[it->second].push_back(sample.angles);
  }
  out << "letter1,letter2,mean_hd\n";
  for (auto it1 = by_letter.begin(); it1 != by_letter.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != by_letter.end(); ++it2) {
      out << it1->first << ',' << it2->first << ','
          << hs::format_double(hs::mean_pair_distance(by_letter, it1->first, it2->first,
                                                      aggregation_from(aggregation)))
          << '\n';
    }
  }
  return 0;
}

int run_usage_letters(const std::string& words_path, int top_k, int min_count,
                      const std::string& out_path) {
  auto words_in = hs::open_input_file(words_path);
  const auto raw = hs::parse_word_counts(words_in, words_path);
  const auto words = hs::prepare_word_list(raw, top_k, min_count);
  auto out = hs::open_output_file(out_path);
  hs::write_letter_weights_csv(out, hs::letter_frequency(words));
  std::cerr << "word list: " << words.entries.size() << " words kept of " << raw.size()
            << " input tokens\n";
  return 0;
}

int run_usage_handshapes(const std::string& lexicon_path, const std::string& out_path) {
  auto lexicon_in = hs::open_input_file(lexicon_path);
  const auto lexicon = hs::parse_lexicon(lexicon_in, lexicon_path);
  auto out = hs::open_output_file(out_path);
  out << "handshape,native,initialized,loan\n";
  for (char letter : hs::kFsAlphabet) {
    out << letter << ','
        << hs::format_double(hs::handshape_frequency(lexicon.entries, letter,
                                                     {hs::LexicalClass::Native}))
        << ','
        << hs::format_double(hs::handshape_frequency(lexicon.entries, letter,
                                                     {hs::LexicalClass::Initialized}))
        << ','
        << hs::format_double(hs::handshape_frequency(lexicon.entries, letter,
                                                     {hs::LexicalClass::Loan}))
        << '\n';
  }
  if (lexicon.dropped > 0) {
    std::cerr << "dropped " << lexicon.dropped << " non-FS-handshape rows\n";
  }
  return 0;
}

int run_usage_confusability(const std::string& words_path, int top_k, int min_count,
                            bool unweighted, const std::string& out_path) {
  auto words_in = hs::open_input_file(words_path);
  const auto raw = hs::parse_word_counts(words_in, words_path);
  const auto words = hs::prepare_word_list(raw, top_k, min_count);
  const auto model = hs::build_context_model(words, !unweighted);
  const auto stats = hs::pair_statistics(model, hs::letter_frequency(words));
  auto out = hs::open_output_file(out_path);
  hs::write_pair_stats_csv(out, stats);
  if (stats.no_mass_count > 0) {
    std::cerr << stats.no_mass_count << " pairs had no context mass and were skipped\n";
  }
  return 0;
}

int run_correlate(const std::string& x_path, const std::string& y_path,
                  const std::string& z_path) {
  const auto x_series = parse_series(x_path);
  const auto y_series = parse_series(y_path);
  std::map<std::string, double> z_series;
  if (!z_path.empty()) z_series = parse_series(z_path);

  std::vector<double> x, y, z;
  for (const auto& [key, value] : x_series) {
    const auto in_y = y_series.find(key);
    if (in_y == y_series.end()) continue;
    if (!z_path.empty()) {
      const auto in_z = z_series.find(key);
      if (in_z == z_series.end()) continue;
      z.push_back(in_z->second);
    }
    x.push_back(value);
    y.push_back(in_y->second);
  }

  const hs::CorrelationResult result =
      z_path.empty() ? hs::pearson(x, y) : hs::partial_correlation(x, y, z);
  std::cout << "r,p,n\n"
            << hs::format_double(result.r) << ',' << hs::format_double(result.p_value)
            << ',' << result.n << "\n";
  return 0;
}

int run_report_command(const std::string& config_path,
                       const std::vector<std::pair<std::string, std::string>>& overrides) {
  auto config_in = hs::open_input_file(config_path);
  hs::RunConfig config = hs::parse_run_config(config_in, config_path);
  if (!overrides.empty()) {
    std::string merged;
    for (const auto& [key, value] : overrides) merged += key + "=" + value + "\n";
    std::istringstream patch(merged);
    config = hs::parse_run_config(patch, "command line", std::move(config));
  }

  const hs::ReportSummary summary = hs::run_report(config);
  std::cerr << "report: " << summary.sequences << " sequences, "
            << summary.letters_analyzed << " letters, " << summary.pairs_analyzed
            << " pairs";
  if (summary.pairs_without_mass > 0) {
    std::cerr << " (" << summary.pairs_without_mass << " pairs without context mass)";
  }
  if (summary.lexicon_dropped > 0) {
    std::cerr << "; dropped " << summary.lexicon_dropped << " lexicon rows";
  }
  if (summary.skipped_movement_letters > 0) {
    std::cerr << "; excluded " << summary.skipped_movement_letters << " J/Z keyframes";
  }
  if (summary.velocity_gaps > 0) {
    std::cerr << "; " << summary.velocity_gaps << " frame gaps";
  }
  std::cerr << "\nwrote " << config.output_dir << "/{letters,pairs,correlations}.csv"
            << " and 4 scatter CSVs\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effort and usage statistics for fingerspelling handshapes"};
  app.require_subcommand(1);

  // segment
  std::string seg_input, seg_phrases, seg_corrections, seg_side = "start", seg_out;
  auto* segment = app.add_subcommand(
      "segment", "Extract one keyframe per fingerspelled letter");
  segment->add_option("--input", seg_input, "Landmark CSV")->required();
  segment->add_option("--phrase-file", seg_phrases, "Phrase TSV (sequence_id<TAB>phrase)")
      ->required();
  segment->add_option("--corrections", seg_corrections, "Manual corrections CSV");
  segment->add_option("--keyframe-side", seg_side, "Keyframe at transition start or end")
      ->check(CLI::IsMember({"start", "end"}));
  segment->add_option("--out", seg_out, "Alignment CSV to write")->required();

  // angles
  std::string ang_input, ang_out;
  auto* angles = app.add_subcommand("angles", "Convert landmarks to joint angles");
  angles->add_option("--input", ang_input, "Landmark CSV")->required();
  angles->add_option("--out", ang_out, "Angle CSV to write")->required();

  // effort
  std::string eff_angles, eff_resting, eff_alignment, eff_out;
  double eff_te_weight = hs::kDefaultThumbEffortWeight;
  auto* effort = app.add_subcommand(
      "effort", "Thumb effort and finger independence per sample");
  effort->add_option("--angles", eff_angles, "Angle CSV")->required();
  effort->add_option("--resting", eff_resting, "Resting hands JSON")->required();
  effort->add_option("--alignment", eff_alignment,
                     "Alignment CSV; restricts samples to letter keyframes");
  effort->add_option("--te-weight", eff_te_weight, "Weight of thumb effort in FI");
  effort->add_option("--out", eff_out, "Effort CSV to write")->required();

  // distance
  std::string dist_angles, dist_alignment, dist_aggregation = "cross_product", dist_out;
  auto* distance = app.add_subcommand("distance", "Pairwise handshape distances");
  distance->add_option("--angles", dist_angles, "Angle CSV")->required();
  distance->add_option("--alignment", dist_alignment,
                       "Alignment CSV; aggregates distances per letter pair");
  distance->add_option("--aggregation", dist_aggregation, "cross_product or mean_vector")
      ->check(CLI::IsMember({"cross_product", "mean_vector"}));
  distance->add_option("--out", dist_out, "Distance CSV to write")->required();

  // usage
  auto* usage = app.add_subcommand("usage", "Usage statistics");
  usage->require_subcommand(1);
  std::string ul_words, ul_out;
  int ul_top_k = 20000, ul_min_count = 2;
  auto* usage_letters = usage->add_subcommand("letters", "English letter frequency");
  usage_letters->add_option("--words", ul_words, "Word-count TSV")->required();
  usage_letters->add_option("--top-k", ul_top_k, "Most frequent types to discard");
  usage_letters->add_option("--min-count", ul_min_count, "Minimum word count kept");
  usage_letters->add_option("--out", ul_out, "Letter frequency CSV")->required();

  std::string uh_lexicon, uh_out;
  auto* usage_handshapes =
      usage->add_subcommand("handshapes", "ASL handshape frequency by lexical class");
  usage_handshapes->add_option("--lexicon", uh_lexicon, "Lexicon CSV")->required();
  usage_handshapes->add_option("--out", uh_out, "Handshape frequency CSV")->required();

  std::string uc_words, uc_out;
  int uc_top_k = 20000, uc_min_count = 2;
  bool uc_unweighted = false;
  auto* usage_conf =
      usage->add_subcommand("confusability", "Letter-pair confusability by context");
  usage_conf->add_option("--words", uc_words, "Word-count TSV")->required();
  usage_conf->add_option("--top-k", uc_top_k, "Most frequent types to discard");
  usage_conf->add_option("--min-count", uc_min_count, "Minimum word count kept");
  usage_conf->add_flag("--unweighted-contexts", uc_unweighted,
                       "Count word types instead of weighting by frequency");
  usage_conf->add_option("--out", uc_out, "Pair statistics CSV")->required();

  // correlate
  std::string cor_x, cor_y, cor_z;
  auto* correlate = app.add_subcommand(
      "correlate", "Pearson or partial correlation of two keyed series");
  correlate->add_option("--x", cor_x, "CSV key,value")->required();
  correlate->add_option("--y", cor_y, "CSV key,value")->required();
  correlate->add_option("--partial", cor_z, "Control series CSV; partials out z");

  // report
  std::string rep_config;
  std::vector<std::pair<std::string, std::string>> rep_overrides;
  std::string rep_landmarks, rep_phrases, rep_resting, rep_lexicon, rep_words,
      rep_corrections, rep_out_dir, rep_side, rep_agg, rep_weighted;
  std::string rep_top_k, rep_min_count, rep_te_weight;
  auto* report = app.add_subcommand("report", "Run the full analysis pipeline");
  report->add_option("--config", rep_config, "key=value config file")->required();
  report->add_option("--landmarks", rep_landmarks, "Override landmarks path");
  report->add_option("--phrases", rep_phrases, "Override phrases path");
  report->add_option("--resting", rep_resting, "Override resting hands path");
  report->add_option("--lexicon", rep_lexicon, "Override lexicon path");
  report->add_option("--words", rep_words, "Override word list path");
  report->add_option("--corrections", rep_corrections, "Override corrections path");
  report->add_option("--out-dir", rep_out_dir, "Override output directory");
  report->add_option("--top-k", rep_top_k, "Override top_k");
  report->add_option("--min-count", rep_min_count, "Override min_count");
  report->add_option("--te-weight", rep_te_weight, "Override te_weight");
  report->add_option("--keyframe-side", rep_side, "Override keyframe_side")
      ->check(CLI::IsMember({"start", "end"}));
  report->add_option("--hd-aggregation", rep_agg, "Override hd_aggregation")
      ->check(CLI::IsMember({"cross_product", "mean_vector"}));
  report->add_option("--weighted-contexts", rep_weighted, "Override weighted_contexts")
      ->check(CLI::IsMember({"true", "false"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (segment->parsed()) {
      return run_segment(seg_input, seg_phrases, seg_corrections, seg_side, seg_out);
    }
    if (angles->parsed()) {
      return run_angles(ang_input, ang_out);
    }
    if (effort->parsed()) {
      return run_effort(eff_angles, eff_resting, eff_alignment, eff_te_weight, eff_out);
    }
    if (distance->parsed()) {
      return run_distance(dist_angles, dist_alignment, dist_aggregation, dist_out);
    }
    if (usage->parsed()) {
      if (usage_letters->parsed()) {
        return run_usage_letters(ul_words, ul_top_k, ul_min_count, ul_out);
      }
      if (usage_handshapes->parsed()) {
        return run_usage_handshapes(uh_lexicon, uh_out);
      }
      return run_usage_confusability(uc_words, uc_top_k, uc_min_count, uc_unweighted,
                                     uc_out);
    }
    if (correlate->parsed()) {
      return run_correlate(cor_x, cor_y, cor_z);
    }
    if (report->parsed()) {
      if (!rep_landmarks.empty()) rep_overrides.emplace_back("landmarks", rep_landmarks);
      if (!rep_phrases.empty()) rep_overrides.emplace_back("phrases", rep_phrases);
      if (!rep_resting.empty()) rep_overrides.emplace_back("resting_hands", rep_resting);
      if (!rep_lexicon.empty()) rep_overrides.emplace_back("lexicon", rep_lexicon);
      if (!rep_words.empty()) rep_overrides.emplace_back("word_list", rep_words);
      if (!rep_corrections.empty())
        rep_overrides.emplace_back("corrections", rep_corrections);
      if (!rep_out_dir.empty()) rep_overrides.emplace_back("output_dir", rep_out_dir);
      if (!rep_top_k.empty()) rep_overrides.emplace_back("top_k", rep_top_k);
      if (!rep_min_count.empty()) rep_overrides.emplace_back("min_count", rep_min_count);
      if (!rep_te_weight.empty()) rep_overrides.emplace_back("te_weight", rep_te_weight);
      if (!rep_side.empty()) rep_overrides.emplace_back("keyframe_side", rep_side);
      if (!rep_agg.empty()) rep_overrides.emplace_back("hd_aggregation", rep_agg);
      if (!rep_weighted.empty())
        rep_overrides.emplace_back("weighted_contexts", rep_weighted);
      return run_report_command(rep_config, rep_overrides);
    }
  } catch (const hs::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const hs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const hs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitUnexpected;
  }
  return 0;
}
