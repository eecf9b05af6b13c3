#include "handshape/report.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <utility>
#include <vector>

#include "handshape/csv.hpp"
#include "handshape/effort.hpp"
#include "handshape/errors.hpp"
#include "handshape/exports.hpp"
#include "handshape/kinematics.hpp"
#include "handshape/landmark_io.hpp"
#include "handshape/usage_stats.hpp"

namespace handshape {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::ofstream open_output(const std::filesystem::path& path) {
  return open_output_file(path.string());
}

}  // namespace

RunConfig parse_run_config(std::istream& in, std::string_view source_name,
                           RunConfig base) {
  RunConfig config = std::move(base);
  std::string line;
  int line_no = 0;
  while (read_line(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    const std::string where =
        std::string(source_name) + " line " + std::to_string(line_no);
    if (eq == std::string::npos) {
      throw ParseError(where + ": expected key=value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));

    if (key == "landmarks") {
      config.landmarks_path = value;
    } else if (key == "phrases") {
      config.phrases_path = value;
    } else if (key == "resting_hands") {
      config.resting_hands_path = value;
    } else if (key == "lexicon") {
      config.lexicon_path = value;
    } else if (key == "word_list") {
      config.word_list_path = value;
    } else if (key == "corrections") {
      config.corrections_path = value;
    } else if (key == "output_dir") {
      config.output_dir = value;
    } else if (key == "top_k") {
      config.top_k = static_cast<int>(parse_int_field(value, where));
      if (config.top_k < 0) throw ParseError(where + ": top_k must be >= 0");
    } else if (key == "min_count") {
      config.min_count = static_cast<int>(parse_int_field(value, where));
      if (config.min_count < 0) throw ParseError(where + ": min_count must be >= 0");
    } else if (key == "te_weight") {
      config.te_weight = parse_double_field(value, where);
    } else if (key == "keyframe_side") {
      if (value == "start") {
        config.keyframe_side = KeyframeSide::Start;
      } else if (value == "end") {
        config.keyframe_side = KeyframeSide::End;
      } else {
        throw ParseError(where + ": keyframe_side must be 'start' or 'end'");
      }
    } else if (key == "hd_aggregation") {
      if (value == "cross_product") {
        config.hd_aggregation = HdAggregation::CrossProduct;
      } else if (value == "mean_vector") {
        config.hd_aggregation = HdAggregation::MeanVector;
      } else {
        throw ParseError(where + ": hd_aggregation must be 'cross_product' or 'mean_vector'");
      }
    } else if (key == "weighted_contexts") {
      if (value == "true") {
        config.weighted_contexts = true;
      } else if (value == "false") {
        config.weighted_contexts = false;
      } else {
        throw ParseError(where + ": weighted_contexts must be 'true' or 'false'");
      }
    } else {
      throw ParseError(where + ": unknown config key '" + key + "'");
    }
  }
  return config;
}

ReportSummary run_report(const RunConfig& config) {
  for (const auto& [path, label] :
       {std::pair{&config.landmarks_path, "landmarks"},
        std::pair{&config.phrases_path, "phrases"},
        std::pair{&config.resting_hands_path, "resting_hands"},
        std::pair{&config.lexicon_path, "lexicon"},
        std::pair{&config.word_list_path, "word_list"}}) {
    if (path->empty()) {
      throw FileError(std::string("config is missing the ") + label + " input path");
    }
  }

  ReportSummary summary;

  auto landmarks_in = open_input_file(config.landmarks_path);
  const auto sequences = parse_landmark_sequences(landmarks_in, config.landmarks_path);
  summary.sequences = static_cast<int>(sequences.size());

  auto phrases_in = open_input_file(config.phrases_path);
  const auto phrases = parse_phrases(phrases_in, config.phrases_path);

  auto resting_in = open_input_file(config.resting_hands_path);
  const auto resting_set = parse_resting_hands(resting_in, config.resting_hands_path);

  auto lexicon_in = open_input_file(config.lexicon_path);
  const auto lexicon = parse_lexicon(lexicon_in, config.lexicon_path);
  summary.lexicon_dropped = lexicon.dropped;

  auto words_in = open_input_file(config.word_list_path);
  const auto raw_words = parse_word_counts(words_in, config.word_list_path);
  const auto words = prepare_word_list(raw_words, config.top_k, config.min_count);

  std::map<std::string, std::vector<AlignmentCorrection>> corrections;
  if (!config.corrections_path.empty()) {
    auto corrections_in = open_input_file(config.corrections_path);
    corrections = parse_corrections(corrections_in, config.corrections_path);
  }

  // Segment every sequence and collect per-letter angle samples. J and Z
  // keyframes are aligned but excluded from the effort/distance analysis.
  std::vector<AngleVectord> resting_angles;
  resting_angles.reserve(resting_set.hands.size());
  for (const auto& hand : resting_set.hands) {
    resting_angles.push_back(joint_angles(hand.landmarks));
  }

  std::map<char, std::vector<AngleVectord>> samples_by_letter;
  std::vector<std::pair<char, double>> fi_samples;
  for (const auto& seq : sequences) {
    const auto phrase = phrases.find(seq.id);
    if (phrase == phrases.end()) {
      throw MissingPhrase("no phrase for sequence '" + seq.id + "' in " +
                          config.phrases_path);
    }
    summary.velocity_gaps += transition_velocity(seq).gap_count;

    LetterFrameAlignment alignment =
        extract_letter_frames(seq, phrase->second, config.keyframe_side);
    const auto it = corrections.find(seq.id);
    if (it != corrections.end()) {
      std::vector<int> frame_indices;
      frame_indices.reserve(seq.frames.size());
      for (const auto& frame : seq.frames) frame_indices.push_back(frame.frame_index);
      alignment = apply_corrections(alignment, it->second, frame_indices);
    }

    std::map<int, const LandmarkFrame*> frames_by_index;
    for (const auto& frame : seq.frames) frames_by_index[frame.frame_index] = &frame;
    for (const auto& aligned : alignment.letters) {
      if (aligned.letter == 'J' || aligned.letter == 'Z') {
        summary.skipped_movement_letters += 1;
        continue;
      }
      const AngleVectord angles =
          joint_angles(frames_by_index.at(aligned.frame_index)->points);
      samples_by_letter[aligned.letter].push_back(angles);
      const EffortScore score = finger_independence<double>(
          angles, resting_angles, config.te_weight);
      fi_samples.emplace_back(aligned.letter, score.finger_independence);
    }
  }

  const std::map<char, double> mean_fi = mean_by_key<char>(fi_samples);
  summary.letters_analyzed = static_cast<int>(mean_fi.size());

  const LetterWeights english_freq = letter_frequency(words);
  const ContextModel context_model = build_context_model(words, config.weighted_contexts);

  // Per-letter usage statistics.
  struct LetterRow {
    char letter;
    double mean_fi;
    double native_freq;
    double foreign_freq;
    double english_freq;
    int sample_count;
  };
  std::vector<LetterRow> letter_rows;
  for (const auto& [letter, fi] : mean_fi) {
    LetterRow row{};
    row.letter = letter;
    row.mean_fi = fi;
    row.native_freq = handshape_frequency(lexicon.entries, letter, {LexicalClass::Native});
    row.foreign_freq = handshape_frequency(
        lexicon.entries, letter, {LexicalClass::Initialized, LexicalClass::Loan});
    row.english_freq =
        english_freq[static_cast<size_t>((letter - 'A'))];
    row.sample_count = static_cast<int>(samples_by_letter.at(letter).size());
    letter_rows.push_back(row);
  }

  // Per-pair statistics over the analyzed letters; pairs where neither
  // letter ever follows a context are excluded from the tables and the
  // correlations.
  struct PairRow {
    char letter1;
    char letter2;
    double confusability;
    double mean_hd;
    double min_frequency;
  };
  std::vector<PairRow> pair_rows;
  for (auto it1 = mean_fi.begin(); it1 != mean_fi.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != mean_fi.end(); ++it2) {
      PairRow row{};
      row.letter1 = it1->first;
      row.letter2 = it2->first;
      try {
        row.confusability = confusability(context_model, row.letter1, row.letter2);
      } catch (const NoPairMass&) {
        summary.pairs_without_mass += 1;
        continue;
      }
      row.mean_hd = mean_pair_distance(samples_by_letter, row.letter1, row.letter2,
                                       config.hd_aggregation);
      row.min_frequency =
          std::min(english_freq[static_cast<size_t>(row.letter1 - 'A')],
                   english_freq[static_cast<size_t>(row.letter2 - 'A')]);
      pair_rows.push_back(row);
    }
  }
  summary.pairs_analyzed = static_cast<int>(pair_rows.size());

  // Correlation summary: the three frequency-vs-effort analyses over
  // letters, then the confusability analyses over pairs.
  std::vector<double> fi_series, native_series, foreign_series, english_series;
  for (const auto& row : letter_rows) {
    fi_series.push_back(row.mean_fi);
    native_series.push_back(row.native_freq);
    foreign_series.push_back(row.foreign_freq);
    english_series.push_back(row.english_freq);
  }
  std::vector<double> conf_series, hd_series, minfreq_series;
  for (const auto& row : pair_rows) {
    conf_series.push_back(row.confusability);
    hd_series.push_back(row.mean_hd);
    minfreq_series.push_back(row.min_frequency);
  }

  std::vector<std::pair<std::string, CorrelationResult>> correlations;
  correlations.emplace_back("native_freq_vs_fi", pearson(native_series, fi_series));
  correlations.emplace_back("foreign_freq_vs_fi", pearson(foreign_series, fi_series));
  correlations.emplace_back("english_freq_vs_fi", pearson(english_series, fi_series));
  correlations.emplace_back("confusability_vs_hd", pearson(conf_series, hd_series));
  correlations.emplace_back("confusability_vs_minfreq",
                            pearson(conf_series, minfreq_series));
  correlations.emplace_back("confusability_vs_hd_partial",
                            partial_correlation(conf_series, hd_series, minfreq_series));

  const std::filesystem::path out_dir(config.output_dir);
  std::filesystem::create_directories(out_dir);

  {
    auto out = open_output(out_dir / "letters.csv");
    out << "letter,mean_fi,asl_native_freq,asl_foreign_freq,english_freq,sample_count\n";
    for (const auto& row : letter_rows) {
      out << row.letter << ',' << format_double(row.mean_fi) << ','
          << format_double(row.native_freq) << ',' << format_double(row.foreign_freq)
          << ',' << format_double(row.english_freq) << ',' << row.sample_count << '\n';
    }
  }
  {
    auto out = open_output(out_dir / "pairs.csv");
    out << "letter1,letter2,confusability_bits,mean_hd,min_frequency\n";
    for (const auto& row : pair_rows) {
      out << row.letter1 << ',' << row.letter2 << ',' << format_double(row.confusability)
          << ',' << format_double(row.mean_hd) << ',' << format_double(row.min_frequency)
          << '\n';
    }
  }
  {
    auto out = open_output(out_dir / "correlations.csv");
    write_correlations_csv(out, correlations);
  }
  {
    auto out = open_output(out_dir / "scatter_native_freq_vs_fi.csv");
    out << "letter,native_freq,mean_fi\n";
    for (const auto& row : letter_rows) {
      out << row.letter << ',' << format_double(row.native_freq) << ','
          << format_double(row.mean_fi) << '\n';
    }
  }
  {
    auto out = open_output(out_dir / "scatter_foreign_freq_vs_fi.csv");
    out << "letter,foreign_freq,mean_fi\n";
    for (const auto& row : letter_rows) {
      out << row.letter << ',' << format_double(row.foreign_freq) << ','
          << format_double(row.mean_fi) << '\n';
    }
  }
  {
    auto out = open_output(out_dir / "scatter_english_freq_vs_fi.csv");
    out << "letter,english_freq,mean_fi\n";
    for (const auto& row : letter_rows) {
      out << row.letter << ',' << format_double(row.english_freq) << ','
          << format_double(row.mean_fi) << '\n';
    }
  }
  {
    auto out = open_output(out_dir / "scatter_confusability_vs_hd.csv");
    out << "letter1,letter2,confusability_bits,mean_hd\n";
    for (const auto& row : pair_rows) {
      out << row.letter1 << ',' << row.letter2 << ','
          << format_double(row.confusability) << ',' << format_double(row.mean_hd)
          << '\n';
    }
  }

  return summary;
}

}  // namespace handshape
