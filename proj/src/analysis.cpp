#include "longtree/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "longtree/ncst.hpp"
#include "longtree/stnb.hpp"

namespace longtree {

namespace {

double checked_sqrt(double v, const char* what) {
  if (v < 0.0) throw std::domain_error(what);
  return std::sqrt(v);
}

void require_ab_range(double ab_len) {
  const double d = ncst_params(1.0).d;
  if (ab_len < d - 1e-9 || ab_len > 1.0 + 1e-9) throw std::domain_error("|ab| outside [d, 1]");
}

}  // namespace

double lf_length(double delta) {
  const double omega = stnb_params(delta).omega;
  const double w2 = omega * omega;
  const double d2 = delta * delta;
  const double dx = (w2 - 4.0 * d2) / 2.0;
  const double half = (1.0 + w2 - 4.0 * d2) / 2.0;
  const double fy = checked_sqrt(w2 - half * half, "lf: circles do not meet");
  const double ly = checked_sqrt(d2 - 0.25, "lf: lens L' is empty");
  return std::sqrt(dx * dx + (fy + ly) * (fy + ly));
}

double c1b_length(double ab_len) {
  const NcstParams p = ncst_params(ab_len);
  const double g = p.gamma;
  const double ab = ab_len;
  const double half_offset = ab / 2.0 - p.omega * ab;
  const double along = (1.0 - p.omega) * (1.0 - p.omega) * ab * ab;
  const double across = (g * g - ab * ab) / (g * g) * ((g / 2.0) * (g / 2.0) - half_offset * half_offset);
  return checked_sqrt(along + across, "c1b");
}

double f1(double ab_len) {
  require_ab_range(ab_len);
  const double omega = ncst_params(ab_len).omega;
  const double c1b = c1b_length(ab_len);
  return c1b + (1.0 - ab_len) * c1b / ((1.0 - omega) * ab_len);
}

double f2(double ab_len) {
  require_ab_range(ab_len);
  const NcstParams p = ncst_params(ab_len);
  const double r = p.lambda - 1.0;
  const double zx = (1.0 + ab_len * ab_len - r * r) / (2.0 * ab_len);
  const double dx = zx - p.omega * ab_len;
  return checked_sqrt(dx * dx + 1.0 - zx * zx, "f2");
}

double ConstantsReport::max_abs_residual() const {
  double worst = 0.0;
  for (const auto& [name, value] : identity_residuals) worst = std::max(worst, std::abs(value));
  return worst;
}

ConstantsReport identity_suite(int samples) {
  ConstantsReport rep;
  const StnbParams sp = stnb_params();
  const NcstParams unit = ncst_params(1.0);
  rep.lf_len = lf_length(sp.delta);
  rep.omega_stnb = sp.omega;
  rep.f1_at_d = f1(unit.d);

  rep.identity_residuals.emplace_back("steiner_stnb",
                                      std::sqrt(3.0) / 2.0 * (sp.omega + 1.0) - 3.0 * sp.delta);
  rep.identity_residuals.emplace_back(
      "alpha_beta",
      (2.0 - 3.0 * unit.omega + (unit.omega - 1.0) * (unit.alpha_hat + unit.beta_hat)) / 2.0 -
          unit.delta);
  for (int k = 0; k < samples; ++k) {
    const double t = samples == 1 ? 0.0 : static_cast<double>(k) / (samples - 1);
    const double ab = unit.d + t * (1.0 - unit.d);
    const NcstParams p = ncst_params(ab);
    rep.identity_residuals.emplace_back(
        "alpha@" + std::to_string(ab),
        (ab + p.alpha_hat * (p.gamma - ab)) / (2.0 * ab) - p.delta);
    rep.f1_at.emplace_back(ab, f1(ab));
    rep.f2_at.emplace_back(ab, f2(ab));
  }
  rep.star_bound_margin = 0.5 / 0.963 - unit.delta;
  return rep;
}

}  // namespace longtree
