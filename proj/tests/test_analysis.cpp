#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "longtree/analysis.hpp"
#include "longtree/instances.hpp"
#include "longtree/ncst.hpp"

using namespace longtree;

TEST_CASE("lf edge cap") {
  const double lf = lf_length(0.524);
  CHECK(std::abs(lf - 0.9464) < 5e-4);
  CHECK(lf < 0.95);
  CHECK(lf == doctest::Approx(0.9464013270375472).epsilon(1e-13));
  CHECK_THROWS_AS(lf_length(0.4), std::domain_error);
}

TEST_CASE("f1 and f2") {
  const double d = ncst_params(1.0).d;
  CHECK(std::abs(f1(d) - 0.913117) < 1e-5);
  CHECK(f1(d) < 0.914);
  CHECK(f1(d) == doctest::Approx(0.9131165017967983).epsilon(1e-13));
  for (int k = 0; k < 100; ++k) {
    const double ab = d + (1.0 - d) * k / 99.0;
    CHECK(f1(ab) >= f2(ab));
    CHECK(f1(ab) <= f1(d) + 1e-12);
    CHECK(c1b_length(ab) <= f1(ab));
  }
  CHECK(f1(1.0) == doctest::Approx(c1b_length(1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(f1(0.5), std::domain_error);
  CHECK_THROWS_AS(f2(1.1), std::domain_error);
  CHECK_NOTHROW(f1(d - 1e-10));
}

TEST_CASE("identity suite") {
  const ConstantsReport rep = identity_suite(50);
  CHECK(rep.max_abs_residual() < 1e-9);
  CHECK(rep.f1_at.size() == 50);
  CHECK(rep.f2_at.size() == 50);
  CHECK(rep.star_bound_margin > 0);
  CHECK(rep.star_bound_margin == doctest::Approx(0.5 / 0.963 - 0.519).epsilon(1e-12));
  CHECK(rep.omega_stnb == doctest::Approx(0.8151892463321835).epsilon(1e-14));
  CHECK_FALSE(rep.identity_residuals.empty());
}

TEST_CASE("M to L∩E1 edges that avoid ab stay below f1(d)") {
  const NcstParams p = ncst_params(ncst_params(1.0).d);
  const double ab = p.ab_len;
  const RegionClassifier rc(ab);
  const Point a{0, 0}, b{ab, 0};
  Rng rng(2024);
  auto sample = [&](auto accept) {
    for (;;) {
      const Point q{rng.uniform(ab - 1, 1), rng.uniform(-1, 1)};
      if (accept(rc.label(q))) return q;
    }
  };
  auto crosses_ab = [&](Point u, Point v) {
    if ((u.y > 0) == (v.y > 0) || u.y == 0 || v.y == 0) return false;
    const double x = u.x + (v.x - u.x) * (u.y / (u.y - v.y));
    return x > a.x && x < b.x;
  };
  double worst = 0;
  int kept = 0;
  for (int k = 0; k < 100000; ++k) {
    const Point m = sample([](const PointRegions& r) { return r.in_M; });
    const Point q = sample([](const PointRegions& r) { return r.in_L && r.in_E1; });
    if (crosses_ab(m, q)) continue;
    ++kept;
    worst = std::max(worst, dist(m, q));
  }
  CHECK(kept > 10000);
  CHECK(worst <= f1(ab) + 1e-6);
  MESSAGE("longest sampled edge ", worst, " against f1(d) = ", f1(ab));
}
