#pragma once

// Longest noncrossing spanning tree. For each guess (a, b) of the optimum's
// longest edge two radial trees Ta and Tb are built; every star is a
// guess-independent candidate. The longest noncrossing candidate wins.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "longtree/geom.hpp"
#include "longtree/trees.hpp"

namespace longtree {

struct NcstParams {
  double delta = 0.519;
  double d = 0.0;  // 1 / (2 delta)
  double omega = 0.16;
  double beta_hat = 0.44;
  double alpha_hat = 0.0;
  double ab_len = 1.0;
  double lambda = 0.0;  // ellipse E1 sum
  double gamma = 0.0;   // ellipse E2 sum
};

/// Constants for a guess of length ab_len in the diameter-1 frame.
/// Throws std::invalid_argument unless 0 < ab_len <= 1 + 1e-9.
[[nodiscard]] NcstParams ncst_params(double ab_len);

enum class Strip { left, middle, right };

struct PointRegions {
  bool in_L = false;       // D(a,1) ∩ D(b,1)
  bool in_Lprime = false;  // D(a,|ab|) ∩ D(b,|ab|)
  bool in_E1 = false;
  bool in_E2 = false;
  bool in_Q = false;  // L \ E1
  bool in_M = false;  // L ∩ E2, middle strip
  Strip strip = Strip::middle;
};

/// Region predicates in the frame a = (0,0), b = (|ab|,0), diameter 1.
/// Points on the strip lines x = omega|ab| and x = (1-omega)|ab| are middle.
class RegionClassifier {
 public:
  explicit RegionClassifier(double ab_len);

  [[nodiscard]] const NcstParams& params() const { return params_; }
  [[nodiscard]] Strip strip(Point p) const;
  [[nodiscard]] PointRegions label(Point p) const;

 private:
  NcstParams params_;
};

struct Classification {
  RegionClassifier classifier;
  FramedPoints framed;
  std::vector<PointRegions> labels;
  double alpha = 0.0;       // fraction in L \ E2
  double beta = 0.0;        // fraction in M
  double beta_prime = 0.0;  // fraction in the middle strip
  std::size_t q_count = 0;
};

/// Frames pts so that a = (0,0), b lies on the positive x-axis and the
/// diameter of pts is 1, then labels every point.
[[nodiscard]] Classification classify_points(std::span<const Point> pts, std::size_t a,
                                             std::size_t b);

enum class NcstTag { star, path, Ta, Tb };

[[nodiscard]] std::string to_string(NcstTag tag);

struct NcstCandidate {
  Tree tree;
  NcstTag tag = NcstTag::star;
  std::optional<std::size_t> center;  // stars
  std::optional<IndexPair> guess;     // Ta / Tb, as (a, b) with a < b
  bool noncrossing = false;
  double length = 0.0;

  [[nodiscard]] std::string label() const;
};

/// Radial tree rooted at a: right-strip points join a, left-strip points
/// join the far end of the red ray bounding their wedge, middle-strip points
/// join a visible tree vertex. noncrossing records full validation.
[[nodiscard]] NcstCandidate build_Ta(std::span<const Point> pts, std::size_t a, std::size_t b);

/// build_Ta with the roles of a and b exchanged.
[[nodiscard]] NcstCandidate build_Tb(std::span<const Point> pts, std::size_t a, std::size_t b);

/// Lexicographic (x, y) path; noncrossing for distinct points.
[[nodiscard]] Tree monotone_path(std::span<const Point> pts);

struct NcstOptions {
  /// Skip guesses shorter than d times the diameter; the stars cover them.
  bool prune = true;
};

struct NcstReport {
  NcstCandidate best;
  IndexPair diametral{0, 0};
  double diameter = 0.0;
  double upper_bound = 0.0;  // (n - 1) * diameter
  double best_star_length = 0.0;
  std::size_t guesses_tried = 0;
  std::size_t guesses_pruned = 0;
};

/// OpenMP-parallel over guesses; deterministic max keyed by
/// (length, tag order, guess order). Throws std::invalid_argument for n < 2
/// and InputError for coincident points.
[[nodiscard]] NcstReport solve_ncst(std::span<const Point> pts, const NcstOptions& opts = {});

/// Serial reference with the identical candidate set and tie-break.
[[nodiscard]] NcstReport solve_ncst_serial(std::span<const Point> pts,
                                           const NcstOptions& opts = {});

struct LemmaDiagnostics {
  NcstParams params;
  std::size_t q_points = 0;
  std::size_t m_points = 0;
  /// min over q in Q of min(|aq|,|bq|) - (lambda - 1); positive when the
  /// distance lemma holds. Absent when Q holds no point.
  std::optional<double> q_distance_margin;
  /// min over q in Q and p in P ∪ {Fermat point of a,b,q} of
  /// |pa| + |pb| + |pq| - 3 delta.
  std::optional<double> steiner_margin;
  /// min over M-points q' and p in P with q'p not crossing ab of
  /// f1(d) - |q'p|. Meaningful only when f1_precondition holds.
  std::optional<double> f1_margin;
  bool f1_precondition = false;  // P ∩ Q empty and d <= |ab| <= 1
};

[[nodiscard]] LemmaDiagnostics lemma_diagnostics(std::span<const Point> pts, std::size_t a,
                                                 std::size_t b);

}  // namespace longtree
