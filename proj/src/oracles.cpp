#include "longtree/oracles.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bitset>
#include <limits>

#include <omp.h>

#include "longtree/error.hpp"

namespace longtree {

namespace {

constexpr std::size_t kMaxOracleVertices = 16;
constexpr std::size_t kMaxOracleEdges = kMaxOracleVertices * (kMaxOracleVertices - 1) / 2;
using EdgeMask = std::bitset<kMaxOracleEdges>;

// Best tree under the key (length, then smaller sorted edge list). Length is
// always summed over the sorted edge list so equal trees compare equal.
struct Incumbent {
  double length = -1.0;
  std::vector<Edge> edges;

  void offer(double len, std::vector<Edge> sorted) {
    if (len > length || (len == length && sorted < edges)) {
      length = len;
      edges = std::move(sorted);
    }
  }

  void merge(const Incumbent& o) {
    if (o.length >= 0.0) offer(o.length, o.edges);
  }
};

double canonical_length(const std::vector<Edge>& sorted, std::span<const Point> pts) {
  double total = 0.0;
  for (const Edge& e : sorted) total += dist(pts[e.i], pts[e.j]);
  return total;
}

class NcstSearch {
 public:
  explicit NcstSearch(std::span<const Point> pts) : pts_(pts), n_(pts.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) edges_.emplace_back(i, j);
    }
    std::sort(edges_.begin(), edges_.end(), [&](const Edge& x, const Edge& y) {
      const double lx = dist2(pts[x.i], pts[x.j]), ly = dist2(pts[y.i], pts[y.j]);
      return lx != ly ? lx > ly : x < y;
    });
    for (const Edge& e : edges_) lengths_.push_back(dist(pts[e.i], pts[e.j]));
    crossing_.resize(edges_.size());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Segment sk{pts[edges_[k].i], pts[edges_[k].j]};
      for (std::size_t l = k + 1; l < edges_.size(); ++l) {
        const Segment sl{pts[edges_[l].i], pts[edges_[l].j]};
        if (segments_cross(sk, sl)) {
          crossing_[k].set(l);
          crossing_[l].set(k);
        }
      }
    }
  }

  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

  /// Search rooted at a forced first edge (or the empty forest when
  /// first == edge_count()).
  void run(std::size_t first, Incumbent& local, std::atomic<double>& shared_floor) {
    State s;
    for (std::size_t v = 0; v < n_; ++v) s.parent[v] = static_cast<unsigned char>(v);
    if (first == edges_.size()) {
      dfs(0, s, local, shared_floor);
      return;
    }
    include(s, first);
    dfs(first + 1, s, local, shared_floor);
  }

 private:
  struct State {
    std::array<unsigned char, kMaxOracleVertices> parent{};
    EdgeMask chosen;
    EdgeMask forbidden;
    std::size_t count = 0;
    double length = 0.0;
  };

  static unsigned char find(const State& s, unsigned char v) {
    while (s.parent[v] != v) v = s.parent[v];
    return v;
  }

  [[nodiscard]] bool admissible(const State& s, std::size_t k) const {
    if (s.forbidden.test(k)) return false;
    return find(s, static_cast<unsigned char>(edges_[k].i)) !=
           find(s, static_cast<unsigned char>(edges_[k].j));
  }

  void include(State& s, std::size_t k) const {
    const unsigned char ru = find(s, static_cast<unsigned char>(edges_[k].i));
    const unsigned char rv = find(s, static_cast<unsigned char>(edges_[k].j));
    s.parent[std::max(ru, rv)] = std::min(ru, rv);
    s.chosen.set(k);
    s.forbidden |= crossing_[k];
    ++s.count;
    s.length += lengths_[k];
  }

  void record(const State& s, Incumbent& local, std::atomic<double>& shared_floor) const {
    std::vector<Edge> sorted;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (s.chosen.test(k)) sorted.push_back(edges_[k]);
    }
    std::sort(sorted.begin(), sorted.end());
    const double len = canonical_length(sorted, pts_);
    local.offer(len, std::move(sorted));
    double cur = shared_floor.load(std::memory_order_relaxed);
    while (len > cur && !shared_floor.compare_exchange_weak(cur, len, std::memory_order_relaxed)) {
    }
  }

  void dfs(std::size_t k, State& s, Incumbent& local, std::atomic<double>& shared_floor) const {
    const std::size_t need = n_ - 1 - s.count;
    if (need == 0) {
      record(s, local, shared_floor);
      return;
    }
    // Optimistic completion: the `need` longest admissible edges remaining.
    double bound = s.length;
    std::size_t next = edges_.size();
    std::size_t taken = 0;
    for (std::size_t l = k; l < edges_.size() && taken < need; ++l) {
      if (!admissible(s, l)) continue;
      if (next == edges_.size()) next = l;
      bound += lengths_[l];
      ++taken;
    }
    if (taken < need) return;
    const double floor = shared_floor.load(std::memory_order_relaxed);
    if (bound < floor - 1e-9 * std::max(1.0, floor)) return;

    State with = s;
    include(with, next);
    dfs(next + 1, with, local, shared_floor);
    dfs(next + 1, s, local, shared_floor);
  }

  std::span<const Point> pts_;
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<double> lengths_;
  std::vector<EdgeMask> crossing_;
};

void check_ncst_input(std::span<const Point> pts, std::size_t max_n) {
  if (pts.size() < 2) throw std::invalid_argument("too few points");
  if (pts.size() > std::min(max_n, kMaxOracleVertices)) throw GuardError();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) throw InputError("duplicate points");
    }
  }
}

// A noncrossing star (if any) primes the pruning floor.
double star_floor(std::span<const Point> pts) {
  double best = 0.0;
  for (std::size_t c = 0; c < pts.size(); ++c) {
    const Tree t = star(pts, c);
    const double len = star_length(pts, c);
    if (len > best && is_noncrossing(t, pts).noncrossing) best = len;
  }
  return best;
}

}  // namespace

Tree exact_ncst(std::span<const Point> pts, std::size_t max_n) {
  check_ncst_input(pts, max_n);
  NcstSearch search(pts);
  Incumbent best;
  std::atomic<double> floor{star_floor(pts)};
  search.run(search.edge_count(), best, floor);
  return Tree(pts.size(), best.edges);
}

Tree exact_ncst_parallel(std::span<const Point> pts, std::size_t max_n) {
  check_ncst_input(pts, max_n);
  NcstSearch search(pts);
  Incumbent best;
  std::atomic<double> floor{star_floor(pts)};
  const auto first_edges = static_cast<std::ptrdiff_t>(search.edge_count() - (pts.size() - 2));
#pragma omp parallel
  {
    Incumbent local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::ptrdiff_t k = 0; k < first_edges; ++k) {
      search.run(static_cast<std::size_t>(k), local, floor);
    }
#pragma omp critical(longtree_oracle_merge)
    best.merge(local);
  }
  return Tree(pts.size(), best.edges);
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& visit) {
  if (n == 0) return;
  if (n == 1) {
    visit(Tree(1));
    return;
  }
  if (n == 2) {
    visit(Tree(2, {Edge(0, 1)}));
    return;
  }
  std::vector<std::size_t> code(n - 2, 0);
  std::vector<std::size_t> degree(n);
  while (true) {
    std::fill(degree.begin(), degree.end(), 1);
    for (const std::size_t c : code) ++degree[c];
    Tree t(n);
    for (const std::size_t c : code) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      t.add_edge(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    std::size_t u = n, v = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (degree[k] == 1) (u == n ? u : v) = k;
    }
    t.add_edge(u, v);
    visit(t);

    std::size_t pos = 0;
    while (pos < code.size() && ++code[pos] == n) code[pos++] = 0;
    if (pos == code.size()) break;
  }
}

Tree enumerate_ncst(std::span<const Point> pts) {
  Incumbent best;
  for_each_labeled_tree(pts.size(), [&](const Tree& t) {
    if (!is_noncrossing(t, pts).noncrossing) return;
    auto sorted = t.sorted_edges();
    const double len = canonical_length(sorted, pts);
    best.offer(len, std::move(sorted));
  });
  return Tree(pts.size(), best.edges);
}

namespace {

std::size_t assignment_count(const NeighborhoodSet& nbs, std::size_t max_assignments) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < nbs.size(); ++i) {
    const std::size_t c = nbs.count(i);
    if (total > max_assignments / c) throw GuardError();
    total *= c;
  }
  if (total > max_assignments) throw GuardError();
  return total;
}

struct Assignment {
  double length = -1.0;
  std::size_t index = 0;

  [[nodiscard]] bool better_than(const Assignment& o) const {
    if (length != o.length) return length > o.length;
    return index < o.index;
  }
};

// Mixed radix, neighborhood 0 least significant.
std::vector<std::size_t> decode(const NeighborhoodSet& nbs, std::size_t index) {
  std::vector<std::size_t> reps(nbs.size());
  for (std::size_t i = 0; i < nbs.size(); ++i) {
    reps[i] = nbs.begin(i) + index % nbs.count(i);
    index /= nbs.count(i);
  }
  return reps;
}

double assignment_length(const NeighborhoodSet& nbs, std::size_t index, std::vector<Point>& scratch) {
  const auto reps = decode(nbs, index);
  scratch.clear();
  for (const std::size_t k : reps) scratch.push_back(nbs.point(k));
  const Tree t = max_spanning_tree(scratch);
  return tree_length(t, scratch);
}

StnbSolution materialize(const NeighborhoodSet& nbs, std::size_t index) {
  StnbSolution sol;
  sol.candidate = StnbCandidate::exact;
  sol.representatives = decode(nbs, index);
  const auto pts = sol.points(nbs);
  sol.tree = max_spanning_tree(pts);
  sol.length = tree_length(sol.tree, pts);
  return sol;
}

}  // namespace

StnbSolution exact_stnb(const NeighborhoodSet& nbs, std::size_t max_assignments) {
  const std::size_t total = assignment_count(nbs, max_assignments);
  Assignment best;
  std::vector<Point> scratch;
  for (std::size_t t = 0; t < total; ++t) {
    const Assignment cand{assignment_length(nbs, t, scratch), t};
    if (best.length < 0.0 || cand.better_than(best)) best = cand;
  }
  return materialize(nbs, best.index);
}

StnbSolution exact_stnb_parallel(const NeighborhoodSet& nbs, std::size_t max_assignments) {
  const auto total = static_cast<std::ptrdiff_t>(assignment_count(nbs, max_assignments));
  Assignment best;
#pragma omp parallel
  {
    Assignment local;
    std::vector<Point> scratch;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t t = 0; t < total; ++t) {
      const Assignment cand{assignment_length(nbs, static_cast<std::size_t>(t), scratch),
                            static_cast<std::size_t>(t)};
      if (local.length < 0.0 || cand.better_than(local)) local = cand;
    }
#pragma omp critical(longtree_stnb_oracle_merge)
    {
      if (local.length >= 0.0 && (best.length < 0.0 || local.better_than(best))) best = local;
    }
  }
  return materialize(nbs, best.index);
}

StnbSolution exact_stnb_with_edge(const NeighborhoodSet& nbs, std::size_t u, std::size_t v,
                                  std::size_t max_assignments) {
  if (u >= nbs.vertex_count() || v >= nbs.vertex_count()) throw std::out_of_range("forced edge vertex");
  const std::size_t nu = nbs.owner(u);
  const std::size_t nv = nbs.owner(v);
  if (nu == nv) throw InputError("forced edge inside one neighborhood");
  std::size_t total = 1;
  for (std::size_t i = 0; i < nbs.size(); ++i) {
    if (i == nu || i == nv) continue;
    if (total > max_assignments / nbs.count(i)) throw GuardError();
    total *= nbs.count(i);
  }
  StnbSolution best;
  best.length = -1.0;
  std::vector<Point> pts(nbs.size());
  std::vector<std::size_t> reps(nbs.size());
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    for (std::size_t i = 0; i < nbs.size(); ++i) {
      if (i == nu) {
        reps[i] = u;
      } else if (i == nv) {
        reps[i] = v;
      } else {
        reps[i] = nbs.begin(i) + rest % nbs.count(i);
        rest /= nbs.count(i);
      }
      pts[i] = nbs.point(reps[i]);
    }
    Tree tree = max_spanning_tree_with_edge(pts, nu, nv);
    const double len = tree_length(tree, pts);
    if (len > best.length) {
      best.representatives = reps;
      best.tree = std::move(tree);
      best.length = len;
    }
  }
  best.candidate = StnbCandidate::exact;
  return best;
}

RatioRecord exact_max_st_ratio(std::span<const Point> pts, const Tree& approx, const Tree& oracle) {
  if (validate_spanning_tree(approx, pts) || validate_spanning_tree(oracle, pts)) {
    throw InputError("tree does not span the instance");
  }
  RatioRecord r;
  r.approx_length = tree_length(approx, pts);
  r.oracle_length = tree_length(oracle, pts);
  r.ratio = r.oracle_length > 0.0 ? r.approx_length / r.oracle_length : 1.0;
  if (pts.size() >= 2) {
    const auto [u, v] = diametral_pair(pts);
    r.upper_bound = static_cast<double>(pts.size() - 1) * dist(pts[u], pts[v]);
  }
  r.bound_ratio = r.upper_bound > 0.0 ? r.approx_length / r.upper_bound : 1.0;
  return r;
}

RatioRecord exact_max_st_ratio(const NeighborhoodSet& nbs, const StnbSolution& approx,
                               const StnbSolution& oracle) {
  for (const StnbSolution* s : {&approx, &oracle}) {
    if (s->representatives.size() != nbs.size()) throw InputError("representative count mismatch");
    for (std::size_t i = 0; i < nbs.size(); ++i) {
      const std::size_t k = s->representatives[i];
      if (k >= nbs.vertex_count() || nbs.owner(k) != i) throw InputError("representative mismatch");
    }
    if (validate_spanning_tree(s->tree, s->points(nbs))) throw InputError("tree does not span");
  }
  RatioRecord r;
  r.approx_length = tree_length(approx.tree, approx.points(nbs));
  r.oracle_length = tree_length(oracle.tree, oracle.points(nbs));
  r.ratio = r.oracle_length > 0.0 ? r.approx_length / r.oracle_length : 1.0;
  const auto [a, b] = bichromatic_diametral_pair(nbs.points(), nbs.colors());
  r.upper_bound = static_cast<double>(nbs.size() - 1) * dist(nbs.point(a), nbs.point(b));
  r.bound_ratio = r.upper_bound > 0.0 ? r.approx_length / r.upper_bound : 1.0;
  return r;
}

}  // namespace longtree
