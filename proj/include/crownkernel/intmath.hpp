#pragma once

#include <cstdint>

namespace crownkernel {

// Exact integer square roots; demand terms round up so demands never shrink.
long long isqrt_floor(long long x);
long long isqrt_ceil(long long x);

// value > 2 * mu^{3/2}, compared exactly as value^2 > 4 * mu^3.
bool exceeds_two_mu_pow15(long long value, long long mu);

// value < 3 * mu * (k + sqrt(mu) * w), i.e. value - 3*mu*k < 3*w*mu^{3/2}.
bool below_three_mu_bound(long long value, long long mu, long long k, long long w);

// value <= 3 * (p^2 + p^{3/2} * pl), compared exactly.
bool within_wvi_kernel_bound(long long value, long long p, long long pl);

} // namespace crownkernel
