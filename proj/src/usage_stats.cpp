#include "handshape/usage_stats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "handshape/errors.hpp"

namespace handshape {

namespace {

constexpr int kMaxContextLength = 4;

char to_lower_letter(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

double handshape_frequency(std::span<const LexiconEntry> lexicon, char handshape,
                           std::initializer_list<LexicalClass> classes) {
  if (classes.size() == 0) {
    throw std::invalid_argument("handshape_frequency: empty class filter");
  }
  double sum = 0.0;
  for (const auto& entry : lexicon) {
    if (entry.handshape != handshape) continue;
    if (std::find(classes.begin(), classes.end(), entry.lexical_class) == classes.end())
      continue;
    sum += entry.frequency_rating;
  }
  return sum;
}

LetterWeights letter_frequency(const WordFrequencyList& words) {
  LetterWeights freq{};
  for (const auto& [word, count] : words.entries) {
    for (char c : word) freq[static_cast<size_t>(c - 'a')] += static_cast<double>(count);
  }
  return freq;
}

ContextModel build_context_model(const WordFrequencyList& words, bool weighted) {
  ContextModel model;
  for (const auto& [word, count] : words.entries) {
    const double weight = weighted ? static_cast<double>(count) : 1.0;
    // Position 0 is skipped: its context would be empty, and contexts are
    // 1-4 characters long.
    for (size_t i = 1; i < word.size(); ++i) {
      const size_t start = i > kMaxContextLength ? i - kMaxContextLength : 0;
      const std::string context = word.substr(start, i - start);
      model.counts[context][word[i]] += weight;
      model.totals[context] += weight;
    }
  }
  return model;
}

double confusability(const ContextModel& model, char x1, char x2) {
  x1 = to_lower_letter(x1);
  x2 = to_lower_letter(x2);
  if (x2 < x1) std::swap(x1, x2);  // keep the sum order, and so the result, symmetric

  double mass = 0.0;
  for (const auto& [context, letters] : model.counts) {
    (void)context;
    const auto a = letters.find(x1);
    const auto b = letters.find(x2);
    if (a != letters.end()) mass += a->second;
    if (b != letters.end()) mass += b->second;
  }
  if (mass <= 0.0) {
    throw NoPairMass(std::string("letters '") + x1 + "' and '" + x2 +
                     "' never occur after a context");
  }

  // H(X|C) restricted to the pair and renormalized, 0*log(0) = 0.
  double entropy = 0.0;
  for (const auto& [context, letters] : model.counts) {
    (void)context;
    const double c1 = [&] {
      const auto it = letters.find(x1);
      return it == letters.end() ? 0.0 : it->second;
    }();
    const double c2 = [&] {
      const auto it = letters.find(x2);
      return it == letters.end() ? 0.0 : it->second;
    }();
    const double context_mass = c1 + c2;
    if (context_mass <= 0.0) continue;
    for (const double c : {c1, c2}) {
      if (c <= 0.0) continue;
      const double joint = c / mass;
      const double conditional = c / context_mass;
      entropy -= joint * std::log2(conditional);
    }
  }
  return entropy;
}

PairStatistics pair_statistics(const ContextModel& model, const LetterWeights& freqs,
                               std::string_view alphabet) {
  for (char c : alphabet) {
    if (c == 'J' || c == 'Z' || c == 'j' || c == 'z') {
      throw std::invalid_argument("pair_statistics: alphabet must exclude J and Z");
    }
  }

  PairStatistics stats;
  for (size_t i = 0; i < alphabet.size(); ++i) {
    for (size_t j = i + 1; j < alphabet.size(); ++j) {
      char l1 = alphabet[i];
      char l2 = alphabet[j];
      if (l1 > l2) std::swap(l1, l2);
      LetterPairStat stat;
      stat.letter1 = l1;
      stat.letter2 = l2;
      stat.min_frequency = std::min(freqs[static_cast<size_t>(to_lower_letter(l1) - 'a')],
                                    freqs[static_cast<size_t>(to_lower_letter(l2) - 'a')]);
      try {
        stat.confusability_bits = confusability(model, l1, l2);
      } catch (const NoPairMass&) {
        stats.no_mass_count += 1;
      }
      stats.pairs.push_back(stat);
    }
  }
  return stats;
}

}  // namespace handshape
