#pragma once

// Seeded measurement suites over generated instances. They report raw
// minima, margins and counts; thresholds are applied by the caller.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "longtree/io.hpp"

namespace longtree {

struct RatioSummary {
  std::size_t instances = 0;
  std::size_t invalid_outputs = 0;  // failed spanning, noncrossing or representative checks
  double min_ratio = 1.0;
  double mean_ratio = 0.0;
  std::string worst;  // generator description of the minimizing instance
};

/// Instance k: kind cycles uniform_square, uniform_disk, two_cluster;
/// n cycles 5, 6, 7, 8; seed is seed + k.
[[nodiscard]] RatioSummary ncst_ratio_suite(std::uint64_t seed, std::size_t count = 200);

/// Instance k: random_neighborhoods with n cycling 3, 4, 5 and at most four
/// vertices per neighborhood; seed is seed + k.
[[nodiscard]] RatioSummary stnb_ratio_suite(std::uint64_t seed, std::size_t count = 200);

struct PropertySummary {
  std::string name;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double min_margin = 0.0;  // smallest slack observed; negative means violated
};

struct LemmaSuiteSizes {
  std::size_t double_star_instances = 500;
  std::size_t two_star_pairs = 10'000;
  std::size_t steiner_samples = 10'000;
  std::size_t fermat_triples = 10'000;
};

/// double_star_dominance, double_star_edge_floor, two_star, steiner_stnb,
/// steiner_ncst, fermat_lower, fermat_upper.
[[nodiscard]] std::vector<PropertySummary> lemma_suite(std::uint64_t seed, const LemmaSuiteSizes& sizes = {});

struct AdversarialSummary {
  std::size_t two_cluster_n = 0;
  double two_cluster_ratio = 0.0;  // best star / max spanning tree
  std::size_t diam_n = 0;
  double diam_epsilon = 0.0;
  double diam_forced_length = 0.0;  // best tree through p0 p2
  double diam_optimum = 0.0;
  double diam_ratio = 0.0;
  double diam_bound = 0.0;  // (n + 1) / (2n - 6)
};

[[nodiscard]] AdversarialSummary adversarial_suite(std::uint64_t seed, std::size_t n = 100);

struct OracleConsistency {
  std::size_t ncst_instances = 0;
  std::size_t ncst_mismatches = 0;
  std::size_t stnb_instances = 0;
  std::size_t stnb_mismatches = 0;
};

/// Pruned search against full enumeration for n <= max_n, and the
/// neighborhood oracle on singleton inputs against max_spanning_tree.
[[nodiscard]] OracleConsistency oracle_consistency_suite(std::uint64_t seed, std::size_t per_n = 20,
                                                          std::size_t max_n = 6);

[[nodiscard]] Json to_json(const RatioSummary& s);
[[nodiscard]] Json to_json(const PropertySummary& s);
[[nodiscard]] Json to_json(const AdversarialSummary& s);

/// Bench report bodies for `longtree bench`.
[[nodiscard]] Json paper_constants_report();
[[nodiscard]] Json ratios_report(std::uint64_t seed, std::size_t count);
[[nodiscard]] Json lemmas_report(std::uint64_t seed);

}  // namespace longtree
