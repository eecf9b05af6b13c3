// Acceptance suite: one self-contained check per criterion, one PASS/FAIL
// line each. Runs on synthetic data only; the CLI binary path is taken
// from argv[1] (or HANDSHAPE_CLI) for the end-to-end determinism check.
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixture.hpp"
#include "handshape/effort.hpp"
#include "handshape/errors.hpp"
#include "handshape/kinematics.hpp"
#include "handshape/segmentation.hpp"
#include "handshape/stats.hpp"
#include "handshape/usage_stats.hpp"
#include "oracles.hpp"

using namespace handshape;
namespace hst = handshape::testing;
namespace fs = std::filesystem;

namespace {

std::string g_cli_binary;

bool rigid_motion_invariance() {
  std::mt19937 rng(20001);
  std::uniform_real_distribution<double> scale_dist(0.2, 5.0);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const LandmarkMatrixd points = hst::random_points(rng);
    const LandmarkMatrixd moved = hst::apply_rigid_motion(
        points, hst::random_rotation(rng, trial % 2 == 1),
        Eigen::Vector3d(shift(rng), shift(rng), shift(rng)), scale_dist(rng));
    const AngleVectord before = joint_angles(points);
    const AngleVectord after = joint_angles(moved);
    for (int i = 0; i < kJointCount; ++i) {
      if (std::abs(after[i] - before[i]) > 1e-9) return false;
    }
  }
  return true;
}

bool hd_pseudometric() {
  std::mt19937 rng(20002);
  for (int trial = 0; trial < 1000; ++trial) {
    const AngleVectord x = hst::random_flexions(rng);
    const AngleVectord y = hst::random_flexions(rng);
    const AngleVectord z = hst::random_flexions(rng);
    if (handshape_distance(x, x) != 0.0) return false;
    if (handshape_distance(x, y) != handshape_distance(y, x)) return false;
    if (handshape_distance(x, z) >
        handshape_distance(x, y) + handshape_distance(y, z) + 1e-12) {
      return false;
    }
  }
  return true;
}

bool fi_decomposition() {
  // exact zero: uniform groups and a thumb identical to a resting hand
  std::mt19937 rng(20003);
  AngleVectord hand = hst::uniform_flexions(0.3, 0.5, 0.4, 0.9, 0.7, 0.5);
  std::vector<AngleVectord> resting = {hst::random_flexions(rng),
                                       hst::random_flexions(rng)};
  resting[1][0] = hand[0];
  resting[1][1] = hand[1];
  resting[1][2] = hand[2];
  const EffortScore zero = finger_independence<double>(hand, resting);
  if (zero.finger_independence != 0.0 || zero.thumb_effort != 0.0) return false;

  for (int trial = 0; trial < 1000; ++trial) {
    const AngleVectord h = hst::random_flexions(rng);
    std::vector<AngleVectord> rest;
    for (int i = 0; i < 4; ++i) rest.push_back(hst::random_flexions(rng));
    const EffortScore score = finger_independence<double>(h, rest);
    double pairwise = 0.0;
    constexpr int groups[3][4] = {{3, 6, 9, 12}, {4, 7, 10, 13}, {5, 8, 11, 14}};
    for (const auto& group : groups) {
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          pairwise += hst::oracle_angular_distance(h[group[i]], h[group[j]]);
        }
      }
    }
    if (std::abs(score.finger_independence - 2.0 * score.thumb_effort - pairwise) >
        1e-12) {
      return false;
    }
  }
  return true;
}

bool segmentation_recovery() {
  std::mt19937 rng(20004);
  std::uniform_int_distribution<int> dwell_count(1, 8);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> planted;
    const LandmarkSequence seq =
        hst::make_planted_sequence(rng, dwell_count(rng), &planted);
    const std::string phrase(planted.size(), 'A');
    const LetterFrameAlignment alignment = extract_letter_frames(seq, phrase);
    if (alignment.letters.size() != planted.size()) return false;
    for (size_t i = 0; i < planted.size(); ++i) {
      if (alignment.letters[i].frame_index != planted[i]) return false;
    }
  }

  // strictly monotone profile: no interior minima anywhere
  LandmarkSequence monotone;
  monotone.id = "monotone";
  LandmarkFrame frame{0, hst::make_hand(hst::uniform_flexions(0.3, 0.3, 0.2, 0.5, 0.5, 0.3))};
  monotone.frames.push_back(frame);
  for (int t = 0; t < 6; ++t) {
    frame.frame_index += 1;
    frame.points.col(0).array() += 0.5 * (t + 1);
    monotone.frames.push_back(frame);
  }
  try {
    extract_letter_frames(monotone, "A");
    return false;
  } catch (const NotEnoughMinima&) {
  }
  return true;
}

bool confusability_extremes() {
  auto words = [](std::initializer_list<std::pair<const char*, long long>> items) {
    WordFrequencyList list;
    for (const auto& [word, count] : items) list.entries[word] = count;
    return list;
  };
  const ContextModel disjoint = build_context_model(words({{"ab", 1}, {"cd", 1}}));
  if (confusability(disjoint, 'b', 'd') != 0.0) return false;

  const ContextModel balanced = build_context_model(words({{"ab", 3}, {"ac", 3}}));
  if (std::abs(confusability(balanced, 'b', 'c') - 1.0) > 1e-12) return false;

  const ContextModel traced =
      build_context_model(words({{"ab", 1}, {"ac", 1}, {"db", 1}}));
  return std::abs(confusability(traced, 'b', 'c') - 2.0 / 3.0) <= 1e-12;
}

bool statistics_oracles() {
  std::mt19937 rng(20005);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto series = [&](size_t n) {
    std::vector<double> v(n);
    for (auto& value : v) value = gauss(rng);
    return v;
  };

  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = series(25);
    const auto y = series(25);
    if (std::abs(pearson(x, y).r - hst::oracle_pearson_r(x, y)) > 1e-12) return false;
  }
  for (const double r : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    for (const int n : {5, 10, 20, 50}) {
      const double df = n - 2;
      const double t = r * std::sqrt(df / (1.0 - r * r));
      if (std::abs(pearson_p_value(r, n) - hst::oracle_t_two_sided_p(t, df)) > 1e-6) {
        return false;
      }
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = series(16);
    const auto y = series(16);
    const auto z = series(16);
    if (std::abs(partial_correlation(x, y, z).r - hst::oracle_partial_r(x, y, z)) >
        1e-10) {
      return false;
    }
  }
  return true;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool end_to_end_determinism() {
  if (g_cli_binary.empty()) {
    std::cerr << "  (no CLI binary given: pass it as argv[1] or set HANDSHAPE_CLI)\n";
    return false;
  }
  const fs::path tmp = fs::temp_directory_path() / "handshape_acceptance";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  hst::write_demo_fixture(tmp, tmp.string() + "/", (tmp / "out1").string());

  auto run = [&](const std::string& out_dir) {
    const std::string command = g_cli_binary + " report --config " +
                                (tmp / "config.txt").string() + " --out-dir " +
                                out_dir + " >" + (tmp / "log.txt").string() + " 2>&1";
    return WEXITSTATUS(std::system(command.c_str())) == 0;
  };
  if (!run((tmp / "out1").string()) || !run((tmp / "out2").string())) {
    std::cerr << "  (report run failed: " << slurp(tmp / "log.txt") << ")\n";
    return false;
  }

  bool identical = true;
  for (const char* name :
       {"letters.csv", "pairs.csv", "correlations.csv", "scatter_native_freq_vs_fi.csv",
        "scatter_foreign_freq_vs_fi.csv", "scatter_english_freq_vs_fi.csv",
        "scatter_confusability_vs_hd.csv"}) {
    const std::string a = slurp(tmp / "out1" / name);
    const std::string b = slurp(tmp / "out2" / name);
    if (a.empty() || a != b) identical = false;
  }
  fs::remove_all(tmp);
  return identical;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    g_cli_binary = argv[1];
  } else if (const char* env = std::getenv("HANDSHAPE_CLI")) {
    g_cli_binary = env;
  }

  const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
      {"joint angles invariant under rotation/translation/reflection/scale (1e-9)",
       rigid_motion_invariance},
      {"handshape distance is a pseudometric on 1000 random triples",
       hd_pseudometric},
      {"FI zero case exact and FI - 2*TE equals the pairwise sum (1e-12)",
       fi_decomposition},
      {"500 planted-dwell sequences recovered exactly; monotone profiles rejected",
       segmentation_recovery},
      {"confusability extremes: disjoint 0, balanced 1, traced fixture 2/3 (1e-12)",
       confusability_extremes},
      {"pearson r (1e-12), p vs t-CDF integration (1e-6), partial r (1e-10)",
       statistics_oracles},
      {"two report runs produce byte-identical outputs", end_to_end_determinism},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const bool ok = criteria[i].second();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
              << criteria[i].first << "\n";
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
