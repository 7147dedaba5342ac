// Serial reference vs OpenMP kernel timings. Each pair is also checked for
// identical output.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "longtree/geom.hpp"
#include "longtree/instances.hpp"
#include "longtree/ncst.hpp"
#include "longtree/oracles.hpp"
#include "longtree/stnb.hpp"

namespace lt = longtree;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %10.6f s  parallel %10.6f s  speedup %6.2fx  %s\n", name.c_str(), serial, parallel,
              serial / parallel, same ? "same" : "DIFFERENT");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  const auto big = lt::generate_points({lt::GenKind::uniform_square, 4000, 7, std::nullopt, std::nullopt});
  {
    lt::IndexPair s, p;
    const double ts = seconds([&] { s = lt::diametral_pair_serial(big); }, 3);
    const double tp = seconds([&] { p = lt::diametral_pair(big); }, 3);
    row("diametral_pair n=4000", ts, tp, s == p);
  }
  {
    std::vector<long long> colors(big.size());
    for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<long long>(i % 50);
    lt::IndexPair s, p;
    const double ts = seconds([&] { s = lt::bichromatic_diametral_pair_serial(big, colors); }, 3);
    const double tp = seconds([&] { p = lt::bichromatic_diametral_pair(big, colors); }, 3);
    row("bichromatic_pair n=4000", ts, tp, s == p);
  }
  {
    const auto pts = lt::generate_points({lt::GenKind::uniform_disk, 60, 11, std::nullopt, std::nullopt});
    lt::NcstOptions all;
    all.prune = false;
    lt::NcstReport s, p;
    const double ts = seconds([&] { s = lt::solve_ncst_serial(pts, all); }, 1);
    const double tp = seconds([&] { p = lt::solve_ncst(pts, all); }, 1);
    row("solve_ncst n=60 no-prune", ts, tp, s.best.tree.sorted_edges() == p.best.tree.sorted_edges());
  }
  {
    const auto pts = lt::generate_points({lt::GenKind::uniform_square, 10, 5, std::nullopt, std::nullopt});
    lt::Tree s, p;
    const double ts = seconds([&] { s = lt::exact_ncst(pts, 10); }, 1);
    const double tp = seconds([&] { p = lt::exact_ncst_parallel(pts, 10); }, 1);
    row("exact_ncst n=10", ts, tp, s.sorted_edges() == p.sorted_edges());
  }
  {
    lt::GenSpec spec{lt::GenKind::random_neighborhoods, 9, 3, std::nullopt, 5};
    const lt::NeighborhoodSet nbs = lt::generate_neighborhoods(spec);
    lt::StnbSolution s, p;
    const double ts = seconds([&] { s = lt::exact_stnb(nbs, 10'000'000); }, 1);
    const double tp = seconds([&] { p = lt::exact_stnb_parallel(nbs, 10'000'000); }, 1);
    row("exact_stnb n=9", ts, tp, s.representatives == p.representatives);
  }
  return 0;
}
