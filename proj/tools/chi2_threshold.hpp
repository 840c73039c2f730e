#pragma once

#include <cmath>
#include <string>

#include "proflik/errors.hpp"
#include "proflik/specfun.hpp"

namespace proflik::cli {

// Half chi-square quantiles for the full-likelihood sampling threshold.
// dof 1 and 2 come from the library; the 3- and 4-parameter models use the
// closed-form chi-square CDFs
//   F_3(x) = erf(sqrt(x/2)) - sqrt(2x/pi) e^{-x/2}
//   F_4(x) = 1 - e^{-x/2} (1 + x/2)
// inverted by bisection.
inline double chi2_quantile_halved_small_dof(double q, int dof) {
  if (dof == 1 || dof == 2) return specfun::chi2_quantile_halved(q, dof);
  if (dof != 3 && dof != 4)
    throw DomainError("sampling threshold: unsupported degrees of freedom " +
                      std::to_string(dof));
  if (!(q > 0.0 && q < 1.0))
    throw DomainError("sampling threshold: quantile level must lie inside (0,1)");

  auto cdf = [dof](double x) {
    if (dof == 3)
      return specfun::erf(std::sqrt(0.5 * x)) -
             std::sqrt(2.0 * x / 3.14159265358979323846) * std::exp(-0.5 * x);
    return 1.0 - std::exp(-0.5 * x) * (1.0 + 0.5 * x);
  };
  double lo = 0.0, hi = 200.0;
  while (hi - lo > 1e-12 * (1.0 + hi)) {
    const double mid = 0.5 * (lo + hi);
    (cdf(mid) < q ? lo : hi) = mid;
  }
  return 0.25 * (lo + hi);  // quantile / 2
}

}  // namespace proflik::cli
