#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "handshape/segmentation.hpp"
#include "handshape/types.hpp"

namespace handshape {

/// Parse landmark sequences from CSV with header
/// `sequence_id,frame,landmark,x,y,z`. Rows of different sequences may
/// interleave; within a sequence frames must appear in strictly increasing
/// order and carry all 21 landmarks. source_name is used in error messages.
std::vector<LandmarkSequence> parse_landmark_sequences(
    std::istream& source, std::string_view source_name = "");

/// Parse a JSON array of {"name": ..., "landmarks": 21 x [x,y,z]} objects.
RestingHandSet parse_resting_hands(std::istream& source,
                                   std::string_view source_name = "");

struct LexiconParse {
  std::vector<LexiconEntry> entries;
  int dropped = 0;  // rows whose handshape is not a static FS letter
};

/// Parse a lexicon CSV with header `gloss,handshape,frequency,lexical_class`.
/// Rows with handshape labels other than the 24 FS letters are dropped and
/// counted, not errors.
LexiconParse parse_lexicon(std::istream& source, std::string_view source_name = "");

/// Parse a raw word-count TSV (`word<TAB>count`, one per line). Words are
/// not filtered here; feed the result to prepare_word_list.
std::vector<WordCount> parse_word_counts(std::istream& source,
                                         std::string_view source_name = "");

/// Corpus filtering: lowercase words, reject any containing characters
/// outside a-z, merge duplicates, drop the top_k most frequent types
/// (boundary ties resolved lexicographically, smaller word removed first),
/// then drop words with count < min_count.
WordFrequencyList prepare_word_list(std::span<const WordCount> tokens,
                                    int top_k = 20000, int min_count = 2);

/// Phrase table TSV: `sequence_id<TAB>phrase`, one per line.
std::map<std::string, std::string> parse_phrases(std::istream& source,
                                                 std::string_view source_name = "");

/// Alignment corrections CSV with header `sequence_id,position,new_frame`.
std::map<std::string, std::vector<AlignmentCorrection>> parse_corrections(
    std::istream& source, std::string_view source_name = "");

struct AngleSample {
  std::string sequence_id;
  int frame_index = 0;
  AngleVectord angles = AngleVectord::Zero();
};

/// Joint-angle table CSV with header `sequence_id,frame,joint,angle_radians`;
/// every (sequence, frame) must carry all 15 joints.
std::vector<AngleSample> parse_angle_table(std::istream& source,
                                           std::string_view source_name = "");

/// Alignment CSV with header `sequence_id,letter,frame,corrected`.
std::vector<LetterFrameAlignment> parse_alignments(std::istream& source,
                                                   std::string_view source_name = "");

}  // namespace handshape
