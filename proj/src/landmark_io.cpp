#include "handshape/landmark_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <numbers>
#include <utility>

#include <json.hpp>

#include "handshape/csv.hpp"
#include "handshape/errors.hpp"

namespace handshape {

namespace {

std::string at_line(std::string_view source_name, int line_no) {
  std::string where;
  if (!source_name.empty()) {
    where += source_name;
    where += " ";
  }
  where += "line " + std::to_string(line_no);
  return where;
}

void expect_header(std::istream& in, std::string_view expected,
                   std::string_view source_name) {
  std::string line;
  if (!read_line(in, line) || line != expected) {
    throw MalformedRow(at_line(source_name, 1) + ": expected header '" +
                       std::string(expected) + "'");
  }
}

// Accumulates one sequence's frames; rows of other sequences may interleave.
struct SequenceBuilder {
  LandmarkSequence seq;
  LandmarkFrame current;
  std::array<bool, kLandmarkCount> seen{};
  int seen_count = 0;
  bool in_frame = false;

  void finish_frame(std::string_view where) {
    if (!in_frame) return;
    if (seen_count != kLandmarkCount) {
      throw IncompleteFrame(std::string(where) + ": sequence '" + seq.id +
                            "' frame " + std::to_string(current.frame_index) +
                            " has " + std::to_string(seen_count) +
                            " landmarks, expected 21");
    }
    seq.frames.push_back(current);
    seen.fill(false);
    seen_count = 0;
    in_frame = false;
  }
};

}  // namespace

std::string_view to_string(LexicalClass c) {
  switch (c) {
    case LexicalClass::Native: return "native";
    case LexicalClass::Initialized: return "initialized";
    case LexicalClass::Loan: return "loan";
  }
  return "unknown";
}

std::vector<LandmarkSequence> parse_landmark_sequences(std::istream& source,
                                                       std::string_view source_name) {
  expect_header(source, "sequence_id,frame,landmark,x,y,z", source_name);

  std::map<std::string, SequenceBuilder> builders;
  std::vector<std::string> order;
  std::string line;
  int line_no = 1;
  while (read_line(source, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = at_line(source_name, line_no);
    const auto fields = split_fields(line);
    if (fields.size() != 6) {
      throw MalformedRow(where + ": expected 6 columns, got " +
                         std::to_string(fields.size()));
    }
    const std::string& seq_id = fields[0];
    const long long frame = parse_int_field(fields[1], where);
    const long long landmark = parse_int_field(fields[2], where);
    if (frame < 0) throw MalformedRow(where + ": negative frame index");
    if (landmark < 0 || landmark >= kLandmarkCount) {
      throw MalformedRow(where + ": landmark index out of range 0..20");
    }

    auto it = builders.find(seq_id);
    if (it == builders.end()) {
      it = builders.emplace(seq_id, SequenceBuilder{}).first;
      it->second.seq.id = seq_id;
      order.push_back(seq_id);
    }
    SequenceBuilder& b = it->second;

    if (b.in_frame && frame != b.current.frame_index) {
      const int prev = b.current.frame_index;
      b.finish_frame(where);
      if (frame <= prev) {
        throw NonMonotonicFrames(where + ": sequence '" + seq_id + "' frame " +
                                 std::to_string(frame) + " after frame " +
                                 std::to_string(prev));
      }
    }
    if (!b.in_frame) {
      b.in_frame = true;
      b.current.frame_index = static_cast<int>(frame);
      b.current.points = LandmarkMatrixd::Zero();
    }
    if (b.seen[static_cast<size_t>(landmark)]) {
      throw IncompleteFrame(where + ": duplicate landmark " + std::to_string(landmark) +
                            " in sequence '" + seq_id + "' frame " +
                            std::to_string(frame));
    }
    b.seen[static_cast<size_t>(landmark)] = true;
    b.seen_count += 1;
    for (int c = 0; c < 3; ++c) {
      b.current.points(static_cast<int>(landmark), c) =
          parse_double_field(fields[static_cast<size_t>(3 + c)], where);
    }
  }

  std::vector<LandmarkSequence> result;
  result.reserve(order.size());
  for (const auto& id : order) {
    SequenceBuilder& b = builders.at(id);
    b.finish_frame(std::string(source_name) + " end of input");
    result.push_back(std::move(b.seq));
  }
  return result;
}

RestingHandSet parse_resting_hands(std::istream& source, std::string_view source_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedLandmarks(std::string(source_name) + ": invalid JSON: " + e.what());
  }
  if (!doc.is_array()) {
    throw MalformedLandmarks(std::string(source_name) +
                             ": expected a JSON array of resting hands");
  }
  if (doc.empty()) {
    throw EmptySet(std::string(source_name) + ": resting hand set is empty");
  }

  RestingHandSet set;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("name") || !item.contains("landmarks") ||
        !item["name"].is_string()) {
      throw MalformedLandmarks(std::string(source_name) +
                               ": each entry needs a name and a landmarks array");
    }
    const auto& lm = item["landmarks"];
    if (!lm.is_array() || lm.size() != kLandmarkCount) {
      throw MalformedLandmarks(std::string(source_name) + ": hand '" +
                               item["name"].get<std::string>() + "' has " +
                               std::to_string(lm.size()) + " landmark rows, expected 21");
    }
    RestingHand hand;
    hand.name = item["name"].get<std::string>();
    for (int l = 0; l < kLandmarkCount; ++l) {
      const auto& row = lm[static_cast<size_t>(l)];
      if (!row.is_array() || row.size() != 3) {
        throw MalformedLandmarks(std::string(source_name) + ": hand '" + hand.name +
                                 "' landmark " + std::to_string(l) + " is not [x,y,z]");
      }
      for (int c = 0; c < 3; ++c) {
        const auto& v = row[static_cast<size_t>(c)];
        if (!v.is_number() || !std::isfinite(v.get<double>())) {
          throw MalformedLandmarks(std::string(source_name) + ": hand '" + hand.name +
                                   "' has a non-finite coordinate");
        }
        hand.landmarks(l, c) = v.get<double>();
      }
    }
    set.hands.push_back(std::move(hand));
  }
  return set;
}

LexiconParse parse_lexicon(std::istream& source, std::string_view source_name) {
  expect_header(source, "gloss,handshape,frequency,lexical_class", source_name);

  LexiconParse result;
  std::string line;
  int line_no = 1;
  while (read_line(source, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = at_line(source_name, line_no);
    const auto fields = split_fields(line);
    if (fields.size() != 4) {
      throw MalformedRow(where + ": expected 4 columns, got " +
                         std::to_string(fields.size()));
    }
    const double freq = parse_double_field(fields[2], where);
    if (freq < 0) throw MalformedRow(where + ": negative frequency rating");

    LexicalClass cls;
    if (fields[3] == "native") {
      cls = LexicalClass::Native;
    } else if (fields[3] == "initialized") {
      cls = LexicalClass::Initialized;
    } else if (fields[3] == "loan") {
      cls = LexicalClass::Loan;
    } else {
      throw UnknownLexicalClass(where + ": unknown lexical class '" + fields[3] + "'");
    }

    // Only the 24 static FS handshapes take part in the analysis; real
    // lexicons carry many more labels, so anything else is dropped.
    const std::string& label = fields[1];
    const char upper = label.size() == 1
                           ? static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])))
                           : '\0';
    if (label.size() != 1 || !is_fs_letter(upper)) {
      result.dropped += 1;
      continue;
    }
    result.entries.push_back(LexiconEntry{fields[0], upper, freq, cls});
  }
  return result;
}

std::vector<WordCount> parse_word_counts(std::istream& source,
                                         std::string_view source_name) {
  std::vector<WordCount> tokens;
  std::string line;
  int line_no = 0;
  while (read_line(source, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = at_line(source_name, line_no);
    const auto fields = split_fields(line, '\t');
    if (fields.size() != 2) {
      throw MalformedRow(where + ": expected 'word<TAB>count'");
    }
    const long long count = parse_int_field(fields[1], where);
    if (count < 1) throw MalformedRow(where + ": count must be positive");
    tokens.push_back(WordCount{fields[0], count});
  }
  return tokens;
}

WordFrequencyList prepare_word_list(std::span<const WordCount> tokens, int top_k,
                                    int min_count) {
  if (top_k < 0 || min_count < 0) {
    throw std::invalid_argument("prepare_word_list: negative top_k or min_count");
  }

  std::map<std::string, long long> merged;
  for (const auto& token : tokens) {
    std::string word = token.word;
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    // Words with characters outside a-z are rejected outright: stripping
    // characters would fabricate words that were never in the corpus.
    const bool alphabetic = !word.empty() &&
                            std::all_of(word.begin(), word.end(),
                                        [](char c) { return c >= 'a' && c <= 'z'; });
    if (!alphabetic) continue;
    merged[word] += token.count;
  }

  std::vector<std::pair<std::string, long long>> ranked(merged.begin(), merged.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;  // boundary ties: smaller word lands in the removed set
  });

  WordFrequencyList out;
  const size_t skip = std::min(ranked.size(), static_cast<size_t>(top_k));
  for (size_t i = skip; i < ranked.size(); ++i) {
    if (ranked[i].second >= min_count) out.entries.insert(ranked[i]);
  }
  return out;
}

std::map<std::string, std::string> parse_phrases(std::istream& source,
                                                 std::string_view source_name) {
  std::map<std::string, std::string> phrases;
  std::string line;
  int line_no = 0;
  while (read_line(source, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = at_line(source_name, line_no);
    const auto fields = split_fields(line, '\t');
    if (fields.size() != 2) {
      throw MalformedRow(where + ": expected 'sequence_id<TAB>phrase'");
    }
    if (!phrases.emplace(fields[0], fields[1]).second) {
      throw MalformedRow(where + ": duplicate sequence_id '" + fields[0] + "'");
    }
  }
  return phrases;
}

std::map<std::string, std::vector<AlignmentCorrection>> parse_corrections(
    std::istream& source, std::string_view source_name) {
  expect_header(source, "sequence_id,position,new_frame", source_name);

  std::map<std::string, std::vector<AlignmentCorrection>> corrections;
  std::string line;
  int line_no = 1;
  while (read_line(source, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = at_line(source_name, line_no);
    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw MalformedRow(where + ": expected 3 columns, got " +
                         std::to_string(fields.size()));
    }
    const long long position = parse_int_field(fields[1], where);
    const long long frame = parse_int_field(fields[2], where);
    if (position < 0) throw MalformedRow(where + ": negative position");
    if (frame < 0) throw MalformedRow(where + ": negative frame index");
    corrections[fields[0]].push_back(
        AlignmentCorrection{static_cast<int>(position), static_cast<int>(frame)});
  }
  return corrections;
}

std::vector<AngleSample> parse_angle_table(std::istream& source,
                                           std::string_view source_name) {
  expect_header(source, "sequence_id,frame,joint,angle_radians", source_name);

  std::vector<AngleSample> samples;
  // (sequence, frame) groups must be contiguous; track the open group.
  std::string open_seq;
  int open_frame = -1;
  bool has_open = false;
  AngleVectord angles = AngleVectord::Zero();
  std::array<bool, kJointCount> seen{};
  int seen_count = 0;
  std::map<std::string, int> last_frame;

  auto finish = [&](std::string_view where) {
    if (!has_open) return;
    if (seen_count != kJointCount) {
      throw IncompleteFrame(std::string(where) + ": sequence '" + open_seq +
                            "' frame " + std::to_string(open_frame) + " has " +
                            std::to_string(seen_count) + " joints, expected 15");
    }
    samples.push_back(AngleSample{open_seq, open_frame, angles});
    last_frame[open_seq] = open_frame;
    seen.fill(false);
    seen_count = 0;
    has_open = false;
  };

  std::string line;
  int line_no = 1;
  while (read_line(source, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = at_line(source_name, line_no);
    const auto fields = split_fields(line);
    if (fields.size() != 4) {
      throw MalformedRow(where + ": expected 4 columns, got " +
                         std::to_string(fields.size()));
    }
    const long long frame = parse_int_field(fields[1], where);
    const long long joint = parse_int_field(fields[2], where);
    const double angle = parse_double_field(fields[3], where);
    if (frame < 0) throw MalformedRow(where + ": negative frame index");
    const int idx = angle_index(static_cast<int>(joint));
    if (idx < 0) throw MalformedRow(where + ": not a joint landmark: " + fields[2]);
    if (angle < 0.0 || angle > std::numbers::pi + 1e-9) {
      throw MalformedRow(where + ": angle outside [0, pi]");
    }

    if (has_open && (fields[0] != open_seq || frame != open_frame)) finish(where);
    if (!has_open) {
      const auto it = last_frame.find(fields[0]);
      if (it != last_frame.end() && frame <= it->second) {
        throw NonMonotonicFrames(where + ": sequence '" + fields[0] + "' frame " +
                                 std::to_string(frame) + " after frame " +
                                 std::to_string(it->second));
      }
      open_seq = fields[0];
      open_frame = static_cast<int>(frame);
      has_open = true;
    }
    if (seen[static_cast<size_t>(idx)]) {
      throw IncompleteFrame(where + ": duplicate joint " + fields[2]);
    }
    seen[static_cast<size_t>(idx)] = true;
    seen_count += 1;
    angles[idx] = angle;
  }
  finish(std::string(source_name) + " end of input");
  return samples;
}

std::vector<LetterFrameAlignment> parse_alignments(std::istream& source,
                                                   std::string_view source_name) {
  expect_header(source, "sequence_id,letter,frame,corrected", source_name);

  std::vector<LetterFrameAlignment> alignments;
  std::map<std::string, size_t> index;
  std::string line;
  int line_no = 1;
  while (read_line(source, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = at_line(source_name, line_no);
    const auto fields = split_fields(line);
    if (fields.size() != 4) {
      throw MalformedRow(where + ": expected 4 columns, got " +
                         std::to_string(fields.size()));
    }
    if (fields[1].size() != 1) {
      throw MalformedRow(where + ": letter must be a single character");
    }
    const char letter =
        static_cast<char>(std::toupper(static_cast<unsigned char>(fields[1][0])));
    if (letter < 'A' || letter > 'Z') {
      throw MalformedRow(where + ": letter must be A-Z");
    }
    const long long frame = parse_int_field(fields[2], where);
    if (frame < 0) throw MalformedRow(where + ": negative frame index");
    if (fields[3] != "0" && fields[3] != "1") {
      throw MalformedRow(where + ": corrected must be 0 or 1");
    }

    auto it = index.find(fields[0]);
    if (it == index.end()) {
      it = index.emplace(fields[0], alignments.size()).first;
      alignments.push_back(LetterFrameAlignment{fields[0], {}});
    }
    auto& letters = alignments[it->second].letters;
    if (!letters.empty() && frame <= letters.back().frame_index) {
      throw NonMonotonicFrames(where + ": alignment frames must strictly increase");
    }
    letters.push_back(AlignedLetter{letter, static_cast<int>(frame), fields[3] == "1"});
  }
  return alignments;
}

}  // namespace handshape
