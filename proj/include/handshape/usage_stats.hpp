#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "handshape/types.hpp"

namespace handshape {

/// Weighted counts of (preceding context, letter) pairs over a word list.
/// Contexts are the 1-4 characters preceding a letter within a word;
/// word-initial letters (empty context) contribute nothing.
struct ContextModel {
  std::map<std::string, std::map<char, double>> counts;  // context -> letter -> weight
  std::map<std::string, double> totals;                  // context -> summed weight
};

/// Per-letter weight over the full a-z range, indexed by `letter - 'a'`.
using LetterWeights = std::array<double, 26>;

/// Sum of frequency ratings of lexicon entries with the given handshape and
/// a lexical class in `classes` (non-empty). Returns 0 when nothing matches.
double handshape_frequency(std::span<const LexiconEntry> lexicon, char handshape,
                           std::initializer_list<LexicalClass> classes);

/// freq(x) = sum over words of (occurrences of x in the word) * word count.
LetterWeights letter_frequency(const WordFrequencyList& words);

/// Build the context model. When weighted, each (context, letter) occurrence
/// adds the word's count; otherwise it adds 1 per word type.
ContextModel build_context_model(const WordFrequencyList& words, bool weighted = true);

/// Conditional entropy H(X|C) in bits of the letter pair {x1, x2} given
/// preceding contexts, restricted to the pair and renormalized; in [0, 1].
/// Throws NoPairMass when neither letter occurs in any context.
double confusability(const ContextModel& model, char x1, char x2);

struct LetterPairStat {
  char letter1 = 0;  // uppercase, letter1 < letter2
  char letter2 = 0;
  std::optional<double> confusability_bits;  // empty when the pair has no mass
  double min_frequency = 0.0;
};

struct PairStatistics {
  std::vector<LetterPairStat> pairs;
  int no_mass_count = 0;
};

/// All unordered letter pairs of the alphabet with confusability and the
/// minimum of the two letter frequencies. The alphabet must not contain
/// J or Z. Pairs without context mass are flagged, not dropped.
PairStatistics pair_statistics(const ContextModel& model, const LetterWeights& freqs,
                               std::string_view alphabet = kFsAlphabet);

}  // namespace handshape
