#include "mmslab/sigma.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mmslab/errors.hpp"

namespace mms {

double sigma(double K, double N, double t, double theta) {
  if (!(N >= 1.0) || !std::isfinite(N)) throw ValidationError("sigma: N must be >= 1");
  if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("sigma: t must lie in [0,1]");
  if (!(theta >= 0.0) || !std::isfinite(theta)) throw ValidationError("sigma: theta must be >= 0");
  if (!std::isfinite(K)) throw ValidationError("sigma: K must be finite");

  const long double k = K, n = N, tt = t, th = theta;
  const long double kt2 = k * th * th;
  const long double pi = std::numbers::pi_v<long double>;
  if (kt2 >= n * pi * pi) return std::numeric_limits<double>::infinity();
  if (kt2 == 0.0L) return t;
  if (kt2 > 0.0L) {
    const long double x = th * std::sqrt(k / n);
    return static_cast<double>(std::sin(tt * x) / std::sin(x));
  }
  const long double x = th * std::sqrt(-k / n);
  if (x < 40.0L) return static_cast<double>(std::sinh(tt * x) / std::sinh(x));
  // sinh(tx)/sinh(x) = e^{(t-1)x} (1 - e^{-2tx}) / (1 - e^{-2x}), overflow-free.
  return static_cast<double>(std::exp((tt - 1.0L) * x) * -std::expm1(-2.0L * tt * x) / -std::expm1(-2.0L * x));
}

}  // namespace mms
