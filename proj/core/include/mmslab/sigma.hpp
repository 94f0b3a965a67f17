#pragma once

namespace mms {

/// Distortion coefficient sigma^{(t)}_{K,N}(theta):
///   +inf                                      if K theta^2 >= N pi^2
///   sin(t theta sqrt(K/N)) / sin(theta sqrt(K/N))    if 0 < K theta^2 < N pi^2
///   t                                         if K theta^2 = 0
///   sinh(t theta sqrt(-K/N)) / sinh(theta sqrt(-K/N)) if K theta^2 < 0
/// Evaluated in extended precision. Throws ValidationError unless N >= 1,
/// t in [0,1] and theta >= 0.
double sigma(double K, double N, double t, double theta);

}  // namespace mms
