#pragma once

// Tree records and metrics for solver outputs, and the consistency checks
// behind `longtree check`.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "longtree/io.hpp"
#include "longtree/ncst.hpp"
#include "longtree/stnb.hpp"

namespace longtree {

[[nodiscard]] TreeRecord ncst_record(std::span<const Point> pts, const NcstReport& rep);
[[nodiscard]] TreeRecord stnb_record(const NeighborhoodSet& nbs, const StnbReport& rep);

/// Tree over pts with its length; algorithm/candidate set by the caller.
[[nodiscard]] TreeRecord plain_record(std::span<const Point> pts, const Tree& t, std::string algorithm,
                                      std::string candidate);
[[nodiscard]] TreeRecord stnb_solution_record(const NeighborhoodSet& nbs, const StnbSolution& sol,
                                              std::string algorithm);

[[nodiscard]] Json ncst_metrics(const NcstReport& rep);
[[nodiscard]] Json stnb_metrics(const StnbReport& rep);

struct CheckOutcome {
  std::vector<std::string> problems;
  bool noncrossing = false;

  [[nodiscard]] bool ok() const { return problems.empty(); }
};

/// Spanning-tree validity, stored length, and the optional constraints:
/// with `points` the tree vertices must equal them and the tree must be
/// noncrossing; with `nbs` every color must be represented exactly once by
/// one of its own vertices.
[[nodiscard]] CheckOutcome check_tree(const TreeRecord& rec, const std::vector<Point>* points,
                                      const NeighborhoodSet* nbs);

}  // namespace longtree
