#include "longtree/report.hpp"

#include <cmath>

namespace longtree {

TreeRecord plain_record(std::span<const Point> pts, const Tree& t, std::string algorithm,
                        std::string candidate) {
  TreeRecord rec;
  rec.algorithm = std::move(algorithm);
  rec.candidate = std::move(candidate);
  rec.points.assign(pts.begin(), pts.end());
  rec.edges = t.sorted_edges();
  rec.length = tree_length(t, pts);
  return rec;
}

Json ncst_metrics(const NcstReport& rep) {
  Json m;
  m["length"] = rep.best.length;
  m["candidate"] = rep.best.label();
  m["diameter"] = rep.diameter;
  m["diametral_pair"] = {rep.diametral.first, rep.diametral.second};
  m["upper_bound"] = rep.upper_bound;
  m["bound_ratio"] = rep.upper_bound > 0.0 ? rep.best.length / rep.upper_bound : 1.0;
  m["best_star_length"] = rep.best_star_length;
  if (rep.best.guess) m["guess"] = {rep.best.guess->first, rep.best.guess->second};
  m["guesses_tried"] = rep.guesses_tried;
  m["guesses_pruned"] = rep.guesses_pruned;
  return m;
}

TreeRecord ncst_record(std::span<const Point> pts, const NcstReport& rep) {
  TreeRecord rec = plain_record(pts, rep.best.tree, "ncst", to_string(rep.best.tag));
  rec.guess = rep.best.guess;
  rec.metrics = ncst_metrics(rep);
  return rec;
}

TreeRecord stnb_solution_record(const NeighborhoodSet& nbs, const StnbSolution& sol, std::string algorithm) {
  const auto pts = sol.points(nbs);
  TreeRecord rec = plain_record(pts, sol.tree, std::move(algorithm), std::string(to_string(sol.candidate)));
  std::vector<Representative> reps;
  for (std::size_t i = 0; i < sol.representatives.size(); ++i) {
    reps.push_back({nbs.neighborhood(i).color, sol.representatives[i]});
  }
  rec.representatives = std::move(reps);
  return rec;
}

Json stnb_metrics(const StnbReport& rep) {
  Json m;
  m["length"] = rep.solution.length;
  m["candidate"] = to_string(rep.solution.candidate);
  m["bichromatic_diameter"] = rep.ab_len;
  m["diametral_pair"] = {rep.diametral.first, rep.diametral.second};
  m["upper_bound"] = rep.upper_bound;
  m["bound_ratio"] = rep.bound_ratio();
  m["a_prime"] = rep.a_prime;
  m["b_prime"] = rep.b_prime;
  m["c"] = rep.c;
  Json lens;
  const char* names[] = {"S1", "S2", "S3", "D"};
  for (std::size_t k = 0; k < 4; ++k) lens[names[k]] = rep.candidate_lengths[k];
  m["candidate_lengths"] = lens;
  return m;
}

TreeRecord stnb_record(const NeighborhoodSet& nbs, const StnbReport& rep) {
  TreeRecord rec = stnb_solution_record(nbs, rep.solution, "stnb");
  rec.metrics = stnb_metrics(rep);
  return rec;
}

CheckOutcome check_tree(const TreeRecord& rec, const std::vector<Point>* points, const NeighborhoodSet* nbs) {
  CheckOutcome out;
  const Tree t = rec.tree();
  if (auto err = validate_spanning_tree(t, rec.points)) {
    out.problems.push_back(*err);
    return out;
  }
  const double len = tree_length(t, rec.points);
  if (std::abs(len - rec.length) > kMetricTolerance * std::max(1.0, len)) {
    out.problems.push_back("stored length " + format_double(rec.length) + " differs from " + format_double(len));
  }
  const auto crossing = is_noncrossing(t, rec.points);
  out.noncrossing = crossing.noncrossing;
  if (points) {
    if (*points != rec.points) out.problems.push_back("tree points differ from the point file");
    if (!crossing.noncrossing) {
      const auto [e, f] = *crossing.first_crossing;
      out.problems.push_back("edges (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") and (" +
                             std::to_string(f.i) + "," + std::to_string(f.j) + ") cross");
    }
  }
  if (nbs) {
    if (!rec.representatives) {
      out.problems.push_back("tree has no representatives");
      return out;
    }
    const auto& reps = *rec.representatives;
    std::vector<int> hits(nbs->size(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const std::size_t nb = nbs->find_color(reps[i].color);
      if (nb == nbs->size()) {
        out.problems.push_back("unknown color " + std::to_string(reps[i].color));
        continue;
      }
      ++hits[nb];
      const std::size_t v = reps[i].vertex;
      if (v >= nbs->vertex_count() || nbs->owner(v) != nb) {
        out.problems.push_back("vertex " + std::to_string(v) + " is not in color " + std::to_string(reps[i].color));
      } else if (!(nbs->point(v) == rec.points[i])) {
        out.problems.push_back("point " + std::to_string(i) + " differs from vertex " + std::to_string(v));
      }
    }
    for (std::size_t nb = 0; nb < nbs->size(); ++nb) {
      if (hits[nb] != 1) {
        out.problems.push_back("color " + std::to_string(nbs->neighborhood(nb).color) + " represented " +
                               std::to_string(hits[nb]) + " times");
      }
    }
  }
  return out;
}

}  // namespace longtree
