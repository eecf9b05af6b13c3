#include "handshape/effort.hpp"

#include <algorithm>

namespace handshape {

std::vector<std::pair<char, double>> rank_letters_by_effort(
    const std::map<char, double>& mean_fi_by_letter) {
  std::vector<std::pair<char, double>> ranked(mean_fi_by_letter.begin(),
                                              mean_fi_by_letter.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return ranked;
}

}  // namespace handshape
