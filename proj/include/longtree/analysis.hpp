#pragma once

// Closed-form constants from the approximation-ratio analyses: the edge cap
// |lf| of the neighborhood algorithm, the two M-edge bounds f1 and f2 of the
// noncrossing algorithm, and the algebraic identities the ratios rest on.

#include <string>
#include <utility>
#include <vector>

namespace longtree {

/// Distance from the lowest point l of D(a,delta) ∩ D(b,delta) to the top
/// intersection f of the circles |xb| = 2 delta and |xa| = omega, with
/// a = (0,0), b = (1,0), omega = 6 delta / sqrt(3) - 1.
/// Throws std::domain_error if an inner square root goes negative.
[[nodiscard]] double lf_length(double delta);

/// Bound on |c1 z1| over |ab| in [d, 1]; c1 is the top point of the line
/// x = omega |ab| on the ellipse |xa| + |xb| = gamma.
[[nodiscard]] double f1(double ab_len);

/// |c2 z2|, from c2 = (omega |ab|, 0) to the top point of
/// ∂D(a,1) ∩ ∂D(b, lambda - 1).
[[nodiscard]] double f2(double ab_len);

/// |c1 b|, the first ingredient of f1.
[[nodiscard]] double c1b_length(double ab_len);

struct ConstantsReport {
  double lf_len = 0.0;
  double omega_stnb = 0.0;
  double f1_at_d = 0.0;
  std::vector<std::pair<double, double>> f1_at;  // (|ab|, f1)
  std::vector<std::pair<double, double>> f2_at;  // (|ab|, f2)
  std::vector<std::pair<std::string, double>> identity_residuals;
  double star_bound_margin = 0.0;  // 0.5 / 0.963 - 0.519, must be positive

  [[nodiscard]] double max_abs_residual() const;
};

/// Evaluates every constant and identity; `samples` points of |ab| in [d, 1].
[[nodiscard]] ConstantsReport identity_suite(int samples = 50);

}  // namespace longtree
