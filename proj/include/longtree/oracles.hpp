#pragma once

// Exact brute-force references for small instances.

#include <cstddef>
#include <functional>
#include <span>

#include "longtree/geom.hpp"
#include "longtree/neighborhoods.hpp"
#include "longtree/stnb.hpp"
#include "longtree/trees.hpp"

namespace longtree {

inline constexpr std::size_t kDefaultNcstOracleMaxN = 9;
inline constexpr std::size_t kDefaultStnbOracleMaxAssignments = 1'000'000;

/// Longest noncrossing spanning tree by depth-first edge selection in
/// descending length order, with an optimistic-length bound. Among trees
/// of exactly equal length the lexicographically smallest
/// sorted edge list wins. Throws GuardError when n > max_n.
[[nodiscard]] Tree exact_ncst(std::span<const Point> pts, std::size_t max_n = kDefaultNcstOracleMaxN);

/// Same search, parallel over the choice of first (longest) edge.
[[nodiscard]] Tree exact_ncst_parallel(std::span<const Point> pts,
                                       std::size_t max_n = kDefaultNcstOracleMaxN);

/// Every labeled tree on n vertices (Prüfer decoding), n^(n-2) of them.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& visit);

/// Best noncrossing tree by full unpruned enumeration (n <= 7 is practical).
[[nodiscard]] Tree enumerate_ncst(std::span<const Point> pts);

/// Longest spanning tree with neighborhoods over every representative
/// assignment. Ties go to the smallest assignment in mixed-radix order.
/// Throws GuardError when the assignment count exceeds max_assignments.
[[nodiscard]] StnbSolution exact_stnb(const NeighborhoodSet& nbs,
                                      std::size_t max_assignments = kDefaultStnbOracleMaxAssignments);

/// OpenMP-parallel over assignments with the identical tie-break.
[[nodiscard]] StnbSolution exact_stnb_parallel(
    const NeighborhoodSet& nbs, std::size_t max_assignments = kDefaultStnbOracleMaxAssignments);

/// Best solution whose tree contains the edge between flattened vertices u
/// and v (from different neighborhoods), which are fixed as representatives.
[[nodiscard]] StnbSolution exact_stnb_with_edge(
    const NeighborhoodSet& nbs, std::size_t u, std::size_t v,
    std::size_t max_assignments = kDefaultStnbOracleMaxAssignments);

struct RatioRecord {
  double approx_length = 0.0;
  double oracle_length = 0.0;
  double ratio = 0.0;        // approx / oracle
  double upper_bound = 0.0;  // (n - 1) * diameter or bichromatic diameter
  double bound_ratio = 0.0;  // approx / upper_bound
};

/// Both trees must span pts. Throws InputError on a mismatch.
[[nodiscard]] RatioRecord exact_max_st_ratio(std::span<const Point> pts, const Tree& approx,
                                             const Tree& oracle);

[[nodiscard]] RatioRecord exact_max_st_ratio(const NeighborhoodSet& nbs, const StnbSolution& approx,
                                             const StnbSolution& oracle);

}  // namespace longtree
