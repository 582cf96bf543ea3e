#include "crownkernel/intmath.hpp"

#include <stdexcept>

namespace crownkernel {

long long isqrt_floor(long long x) {
  if (x < 0) throw std::invalid_argument("isqrt of negative");
  if (x < 2) return x;
  long long r = static_cast<long long>(__builtin_sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

long long isqrt_ceil(long long x) {
  long long f = isqrt_floor(x);
  return f * f == x ? f : f + 1;
}

bool exceeds_two_mu_pow15(long long value, long long mu) {
  if (value <= 0) return false;
  __int128 lhs = static_cast<__int128>(value) * value;
  __int128 rhs = static_cast<__int128>(4) * mu * mu * mu;
  return lhs > rhs;
}

bool below_three_mu_bound(long long value, long long mu, long long k, long long w) {
  __int128 rest = static_cast<__int128>(value) - static_cast<__int128>(3) * mu * k;
  if (rest <= 0) return true;
  __int128 lhs = rest * rest;
  __int128 rhs = static_cast<__int128>(9) * w * w * mu * mu * mu;
  return lhs < rhs;
}

bool within_wvi_kernel_bound(long long value, long long p, long long pl) {
  __int128 rest = static_cast<__int128>(value) - static_cast<__int128>(3) * p * p;
  if (rest <= 0) return true;
  __int128 lhs = rest * rest;
  __int128 rhs = static_cast<__int128>(9) * pl * pl * p * p * p;
  return lhs <= rhs;
}

} // namespace crownkernel
