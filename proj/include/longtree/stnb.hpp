#pragma once

// Longest spanning tree with neighborhoods: the best of three spanning stars
// and one double-star built around a bichromatic diametral pair (a, b).

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "longtree/geom.hpp"
#include "longtree/neighborhoods.hpp"
#include "longtree/trees.hpp"

namespace longtree {

enum class StnbCandidate { S1, S2, S3, D, exact };

[[nodiscard]] std::string_view to_string(StnbCandidate c);

/// One representative per neighborhood and a spanning tree over them. Tree
/// vertex i is the representative of neighborhood i.
struct StnbSolution {
  std::vector<std::size_t> representatives;  // flattened vertex index per neighborhood
  Tree tree;
  StnbCandidate candidate = StnbCandidate::D;
  double length = 0.0;

  [[nodiscard]] std::vector<Point> points(const NeighborhoodSet& nbs) const;
};

struct StnbParams {
  double delta = 0.524;
  double omega = 0.0;        // 6 delta / sqrt(3) - 1
  double ellipse_sum = 0.0;  // omega + 2 delta
  double lens_radius = 0.0;  // 2 delta
};

[[nodiscard]] StnbParams stnb_params(double delta = 0.524);

/// Edge ab plus, for every other neighborhood, the longer of a->p_i and b->q_i
/// where p_i, q_i are its vertices farthest from a and b. Ties attach to a.
[[nodiscard]] StnbSolution build_double_star(const NeighborhoodSet& nbs, std::size_t a,
                                             std::size_t b);

/// Star from `center` to its farthest vertex in every other neighborhood;
/// the center represents its own neighborhood.
[[nodiscard]] StnbSolution longest_spanning_star_nb(const NeighborhoodSet& nbs, std::size_t center,
                                                    StnbCandidate tag = StnbCandidate::S3);

struct StnbReport {
  StnbSolution solution;
  IndexPair diametral;  // (a, b) as flattened indices, a < b
  double ab_len = 0.0;
  double upper_bound = 0.0;  // (n - 1) |ab|
  std::size_t a_prime = 0;
  std::size_t b_prime = 0;
  std::size_t c = 0;
  std::array<double, 4> candidate_lengths{};  // S1, S2, S3, D

  [[nodiscard]] double bound_ratio() const { return solution.length / upper_bound; }
};

[[nodiscard]] StnbReport solve_stnb(const NeighborhoodSet& nbs);

struct StnbVertexRegions {
  bool in_L = false;
  bool in_L1 = false;
  bool in_L2 = false;
  bool in_Lprime = false;
  bool in_E = false;
  bool in_Q = false;
};

/// Region memberships of a point in the frame a = (0,0), b = (1,0).
[[nodiscard]] StnbVertexRegions classify_stnb_point(Point p, const StnbParams& params);

struct StnbRegionReport {
  StnbParams params;
  FramedPoints framed;  // flattened vertices in the unit frame of (a, b)
  IndexPair diametral;
  std::vector<StnbVertexRegions> vertices;
  std::size_t neighborhoods_inside_Lprime = 0;  // entirely in the interior of L'
  bool any_in_Q = false;
  double aa_prime = 0.0;  // |aa'| in the unit frame
  double bb_prime = 0.0;
};

[[nodiscard]] StnbRegionReport stnb_region_report(const NeighborhoodSet& nbs);

}  // namespace longtree
