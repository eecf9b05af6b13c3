#include "fixture.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <Eigen/Geometry>
#include <json.hpp>

#include "handshape/csv.hpp"
#include "handshape/exports.hpp"
#include "handshape/kinematics.hpp"

namespace handshape::testing {

namespace {

constexpr std::array<double, 5> kBaseAngles = {-0.9, -0.25, 0.0, 0.25, 0.5};
constexpr std::array<std::array<double, 4>, 5> kBoneLengths = {{
    {0.40, 0.35, 0.30, 0.25},  // thumb
    {0.50, 0.40, 0.30, 0.25},  // index
    {0.52, 0.42, 0.32, 0.26},  // middle
    {0.50, 0.40, 0.30, 0.25},  // ring
    {0.45, 0.35, 0.27, 0.22},  // pinky
}};

}  // namespace

LandmarkMatrixd make_hand(const AngleVectord& flexions) {
  LandmarkMatrixd points = LandmarkMatrixd::Zero();
  points.row(0).setZero();  // wrist at origin
  for (int finger = 0; finger < 5; ++finger) {
    double direction = kBaseAngles[static_cast<size_t>(finger)];
    Eigen::Vector3d pos = Eigen::Vector3d::Zero();
    for (int bone = 0; bone < 4; ++bone) {
      if (bone > 0) direction += flexions[finger * 3 + bone - 1];
      pos += kBoneLengths[static_cast<size_t>(finger)][static_cast<size_t>(bone)] *
             Eigen::Vector3d(std::cos(direction), std::sin(direction), 0.0);
      points.row(kFingerChains[static_cast<size_t>(finger)][static_cast<size_t>(bone + 1)]) =
          pos;
    }
  }
  return points;
}

AngleVectord uniform_flexions(double t1, double t2, double t3, double mcp,
                              double pip, double dip) {
  AngleVectord f;
  f << t1, t2, t3, mcp, pip, dip, mcp, pip, dip, mcp, pip, dip, mcp, pip, dip;
  return f;
}

AngleVectord random_flexions(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(0.05, std::numbers::pi - 0.1);
  AngleVectord f;
  for (int i = 0; i < kJointCount; ++i) f[i] = dist(rng);
  return f;
}

LandmarkMatrixd random_points(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  while (true) {
    LandmarkMatrixd points;
    for (int l = 0; l < kLandmarkCount; ++l) {
      for (int c = 0; c < 3; ++c) points(l, c) = dist(rng);
    }
    bool ok = true;
    for (const auto& chain : kFingerChains) {
      for (size_t s = 0; s + 1 < chain.size() && ok; ++s) {
        ok = (points.row(chain[s + 1]) - points.row(chain[s])).norm() > 1e-6;
      }
    }
    if (ok) return points;
  }
}

Eigen::Matrix3d random_rotation(std::mt19937& rng, bool reflect) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Quaterniond q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  q.normalize();
  Eigen::Matrix3d rotation = q.toRotationMatrix();
  if (reflect) rotation.col(2) *= -1.0;
  return rotation;
}

LandmarkMatrixd apply_rigid_motion(const LandmarkMatrixd& points,
                                   const Eigen::Matrix3d& rotation,
                                   const Eigen::Vector3d& translation, double scale) {
  LandmarkMatrixd out;
  for (int l = 0; l < kLandmarkCount; ++l) {
    out.row(l) = (scale * (rotation * points.row(l).transpose()) + translation)
                     .transpose();
  }
  return out;
}

RestingHandSet synthetic_resting_hands() {
  RestingHandSet set;
  set.hands.push_back(
      {"open_frontal", make_hand(uniform_flexions(0.20, 0.25, 0.15, 0.12, 0.15, 0.08))});
  set.hands.push_back(
      {"relaxed_frontal", make_hand(uniform_flexions(0.25, 0.30, 0.20, 0.35, 0.45, 0.25))});
  set.hands.push_back(
      {"relaxed_side", make_hand(uniform_flexions(0.30, 0.35, 0.25, 0.45, 0.55, 0.30))});
  set.hands.push_back(
      {"curled_side", make_hand(uniform_flexions(0.35, 0.40, 0.30, 0.60, 0.70, 0.40))});
  return set;
}

LandmarkSequence make_letter_sequence(const std::string& id,
                                      const std::vector<AngleVectord>& letter_poses) {
  LandmarkSequence seq;
  seq.id = id;
  int frame_index = 0;
  auto push = [&](const LandmarkMatrixd& points) {
    seq.frames.push_back(LandmarkFrame{frame_index++, points});
  };
  push(make_hand(uniform_flexions(0.40, 0.35, 0.25, 0.40, 0.45, 0.25)));
  for (const auto& pose : letter_poses) {
    const LandmarkMatrixd hand = make_hand(pose);
    push(hand);
    push(hand);  // exact repeat: zero-velocity dwell
  }
  push(make_hand(uniform_flexions(0.35, 0.30, 0.20, 0.30, 0.40, 0.20)));
  return seq;
}

LandmarkSequence make_planted_sequence(std::mt19937& rng, int dwell_count,
                                       std::vector<int>* planted_transitions) {
  std::uniform_real_distribution<double> step(1.0, 1.5);
  std::uniform_int_distribution<int> extra_moves(1, 3);
  std::normal_distribution<double> gauss(0.0, 1.0);

  LandmarkSequence seq;
  seq.id = "planted";
  seq.frames.push_back(LandmarkFrame{0, make_hand(uniform_flexions(0.3, 0.3, 0.2, 0.5, 0.5, 0.3))});
  planted_transitions->clear();

  auto move = [&] {
    Eigen::Vector3d direction(gauss(rng), gauss(rng), gauss(rng));
    direction.normalize();
    const double velocity = step(rng);  // total over 21 landmarks
    LandmarkFrame next = seq.frames.back();
    next.frame_index += 1;
    next.points.rowwise() += (velocity / kLandmarkCount * direction).transpose();
    seq.frames.push_back(next);
  };
  auto dwell = [&] {
    LandmarkFrame next = seq.frames.back();
    next.frame_index += 1;
    seq.frames.push_back(next);
  };

  move();  // a dwell may not sit at the first transition
  for (int d = 0; d < dwell_count; ++d) {
    planted_transitions->push_back(static_cast<int>(seq.frames.size()) - 1);
    dwell();
    const int moves = extra_moves(rng);  // keeps dwells non-adjacent
    for (int m = 0; m < moves; ++m) move();
  }
  move();  // nor at the last transition
  return seq;
}

void write_resting_hands_json(const std::filesystem::path& path,
                              const RestingHandSet& hands) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& hand : hands.hands) {
    nlohmann::json rows = nlohmann::json::array();
    for (int l = 0; l < kLandmarkCount; ++l) {
      rows.push_back({hand.landmarks(l, 0), hand.landmarks(l, 1), hand.landmarks(l, 2)});
    }
    doc.push_back({{"name", hand.name}, {"landmarks", rows}});
  }
  std::ofstream out(path);
  out << doc.dump(2) << "\n";
}

namespace {

AngleVectord letter_pose(char letter, double jitter) {
  AngleVectord f;
  switch (letter) {
    case 'A':  // fist-like, everything folded evenly
      f = uniform_flexions(0.10, 0.12, 0.08, 1.20, 1.00, 0.60);
      break;
    case 'B':  // flat hand, thumb across the palm
      f = uniform_flexions(0.55, 0.45, 0.35, 0.06, 0.05, 0.03);
      break;
    case 'C':  // evenly curved
      f = uniform_flexions(0.32, 0.28, 0.22, 0.55, 0.50, 0.32);
      break;
    default:  // 'D': index extended, the rest curled
      f << 0.20, 0.50, 0.30, 0.05, 0.04, 0.03, 1.10, 1.00, 0.70, 1.15, 1.05, 0.72,
          1.20, 1.10, 0.75;
      break;
  }
  f.array() += jitter;
  return f;
}

}  // namespace

void write_demo_fixture(const std::filesystem::path& dir,
                        const std::string& config_path_prefix,
                        const std::string& output_dir) {
  std::filesystem::create_directories(dir);

  const std::string phrase1 = "ABCD";
  const std::string phrase2 = "CADB";
  std::vector<LandmarkSequence> sequences;
  std::vector<AngleVectord> poses1, poses2;
  for (char c : phrase1) poses1.push_back(letter_pose(c, 0.0));
  for (char c : phrase2) poses2.push_back(letter_pose(c, 0.02));
  sequences.push_back(make_letter_sequence("seq1", poses1));
  sequences.push_back(make_letter_sequence("seq2", poses2));
  {
    std::ofstream out(dir / "landmarks.csv");
    write_landmark_csv(out, sequences);
  }
  {
    std::ofstream out(dir / "phrases.tsv");
    out << "seq1\t" << phrase1 << "\nseq2\t" << phrase2 << "\n";
  }
  write_resting_hands_json(dir / "resting_hands.json", synthetic_resting_hands());
  {
    std::ofstream out(dir / "lexicon.csv");
    out << "gloss,handshape,frequency,lexical_class\n"
           "APPLE,A,5.5,native\n"
           "ANCHOR,A,3.1,native\n"
           "AREA,A,2.2,initialized\n"
           "BALL,B,4.8,native\n"
           "BOX,B,1.9,loan\n"
           "CAT,C,3.7,native\n"
           "CLASS,C,4.2,initialized\n"
           "DOG,D,1.4,native\n"
           "DOOR,D,0.8,initialized\n"
           "JUMP,J,2,native\n";  // dropped: J has no static handshape
  }
  {
    std::ofstream out(dir / "words.tsv");
    out << "the\t1000\n"   // removed by top_k=2
           "of\t800\n"     // removed by top_k=2
           "abc\t40\n"
           "bad\t30\n"
           "cab\t25\n"
           "dab\t20\n"
           "ad\t15\n"
           "bc\t12\n"
           "cd\t10\n"
           "ab\t9\n"
           "ac\t8\n"
           "bd\t7\n"
           "da\t6\n"
           "ca\t5\n"
           "db\t4\n"
           "abcd\t3\n"
           "dc\t2\n"
           "qux\t1\n"      // removed by min_count=2
           "x-ray\t5\n";   // rejected: not all a-z
  }
  {
    std::ofstream out(dir / "corrections.csv");
    // A's keyframe in seq1 moves to the second frame of the same hold.
    out << "sequence_id,position,new_frame\nseq1,0,2\n";
  }
  {
    std::ofstream out(dir / "config.txt");
    out << "# demo analysis configuration\n"
        << "landmarks = " << config_path_prefix << "landmarks.csv\n"
        << "phrases = " << config_path_prefix << "phrases.tsv\n"
        << "resting_hands = " << config_path_prefix << "resting_hands.json\n"
        << "lexicon = " << config_path_prefix << "lexicon.csv\n"
        << "word_list = " << config_path_prefix << "words.tsv\n"
        << "corrections = " << config_path_prefix << "corrections.csv\n"
        << "output_dir = " << output_dir << "\n"
        << "top_k = 2\n"
        << "min_count = 2\n"
        << "te_weight = 2\n"
        << "keyframe_side = start\n"
        << "hd_aggregation = cross_product\n"
        << "weighted_contexts = true\n";
  }
}

}  // namespace handshape::testing
