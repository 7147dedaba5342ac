// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "longtree/analysis.hpp"
#include "longtree/ncst.hpp"
#include "longtree/stnb.hpp"
#include "longtree/suites.hpp"

using namespace longtree;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, double seconds, const std::string& detail) {
  std::printf("%s criterion %d %s (%.2fs): %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), seconds,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
void run(int id, const std::string& name, double budget_seconds, F body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (s > budget_seconds) {
    ok = false;
    detail += " [over time budget]";
  }
  report(id, name, ok, s, detail);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

}  // namespace

int main() {
  constexpr std::uint64_t kSeed = 1;

  run(1, "constant reproduction", 1.0, [](std::string& detail) {
    const double lf = lf_length(0.524);
    const double f = f1(1.0 / (2 * 0.519));
    const double w = 6 * 0.524 / std::sqrt(3.0) - 1;
    detail = fmt("lf=%.10f f1(d)=%.10f omega=%.10f", lf, f, w);
    return lf >= 0.9459 && lf <= 0.9469 && lf < 0.95 && f >= 0.913107 && f <= 0.913127 && f < 0.914 &&
           w >= 0.8147 && w <= 0.8157;
  });

  run(2, "identity suite", 1.0, [](std::string& detail) {
    const ConstantsReport rep = identity_suite(50);
    detail = fmt("max residual=%.3e over %zu identities, 0.5/0.963-0.519=%.6f", rep.max_abs_residual(),
                 rep.identity_residuals.size(), rep.star_bound_margin);
    return rep.max_abs_residual() < 1e-9 && 0.5 / 0.963 > 0.519 && rep.star_bound_margin > 0;
  });

  run(3, "ratio guarantee noncrossing", 300.0, [](std::string& detail) {
    const RatioSummary s = ncst_ratio_suite(kSeed, 200);
    detail = fmt("instances=%zu invalid=%zu min=%.6f mean=%.6f worst=%s", s.instances, s.invalid_outputs,
                 s.min_ratio, s.mean_ratio, s.worst.c_str());
    return s.instances == 200 && s.invalid_outputs == 0 && s.min_ratio >= 0.519;
  });

  run(4, "ratio guarantee neighborhoods", 300.0, [](std::string& detail) {
    const RatioSummary s = stnb_ratio_suite(kSeed, 200);
    detail = fmt("instances=%zu invalid=%zu min=%.6f mean=%.6f worst=%s", s.instances, s.invalid_outputs,
                 s.min_ratio, s.mean_ratio, s.worst.c_str());
    return s.instances == 200 && s.invalid_outputs == 0 && s.min_ratio >= 0.524;
  });

  run(5, "lemma property suites", 120.0, [](std::string& detail) {
    const auto props = lemma_suite(kSeed);
    bool ok = props.size() == 7;
    for (const PropertySummary& p : props) {
      detail += fmt("%s %zu/%zu min=%.3e; ", p.name.c_str(), p.samples - p.violations, p.samples, p.min_margin);
      ok = ok && p.violations == 0 && p.samples > 0;
    }
    return ok;
  });

  run(6, "adversarial reproductions", 10.0, [](std::string& detail) {
    const AdversarialSummary a = adversarial_suite(kSeed, 100);
    const double n = static_cast<double>(a.two_cluster_n);
    detail = fmt("two_cluster n=%zu ratio=%.6f in [0.5, %.6f]; diam n=%zu eps=%.4f forced=%.6f opt=%.6f "
                 "ratio=%.6f bound=%.6f",
                 a.two_cluster_n, a.two_cluster_ratio, 0.5 + 3 / n, a.diam_n, a.diam_epsilon,
                 a.diam_forced_length, a.diam_optimum, a.diam_ratio, a.diam_bound);
    return a.two_cluster_ratio >= 0.5 && a.two_cluster_ratio <= 0.5 + 3 / n &&
           a.diam_ratio <= a.diam_bound + 1e-9;
  });

  run(7, "oracle self-consistency", 60.0, [](std::string& detail) {
    const OracleConsistency c = oracle_consistency_suite(kSeed);
    detail = fmt("ncst %zu/%zu match, singleton stnb %zu/%zu match", c.ncst_instances - c.ncst_mismatches,
                 c.ncst_instances, c.stnb_instances - c.stnb_mismatches, c.stnb_instances);
    return c.ncst_mismatches == 0 && c.stnb_mismatches == 0 && c.ncst_instances > 0 && c.stnb_instances > 0;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
