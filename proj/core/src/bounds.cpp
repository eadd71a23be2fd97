#include "islrc/bounds.hpp"

namespace islrc {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void require_positive(std::initializer_list<long long> vals) {
  for (long long v : vals)
    if (v < 1) throw std::invalid_argument("arguments must be positive");
}

}  // namespace

long long bound_singleton_locality(long long n, long long k, long long r) {
  require_positive({n, k, r});
  return n - k - ceil_div(k, r) + 2;
}

long long bound_one_parity_repair(long long n, long long k, long long r, long long t) {
  require_positive({n, k, r, t});
  return n - k - ceil_div(k * t, r) + t + 1;
}

long long bound_wang_zhang(long long n, long long k, long long r, long long t) {
  require_positive({n, k, r, t});
  return n - k - ceil_div(t * (k - 1) + 1, t * (r - 1) + 1) + 2;
}

Rational bound_rate_product(long long r, long long t) {
  require_positive({r, t});
  Rational prod(1);
  for (long long j = 1; j <= t; ++j)
    prod = prod * (Rational(1) + Rational(1, j * r));
  return prod.reciprocal();
}

long long bound_distance_floorsum(long long n, long long k, long long r, long long t) {
  require_positive({n, k, r, t});
  long long sum = 0;
  long long power = 1;
  for (long long i = 0; i <= t; ++i) {
    sum += (k - 1) / power;
    if (power > k) break;  // remaining terms are zero
    power *= r;
  }
  return n - sum;
}

Rational bound_rate_prakash(long long r) {
  require_positive({r});
  return Rational(r, r + 2);
}

long long bound_length(long long k, long long r, long long t) {
  require_positive({k, r, t});
  return k + ceil_div(k * t, r);
}

Rational bound_rate_corollary(long long k, long long r, long long t) {
  require_positive({k, r, t});
  if ((k * t) % r == 0) return Rational(r, r + t);
  return Rational(k, k + ceil_div(k * t, r));
}

BoundsReport classify(const CodeParams& params) {
  const long long n = params.n, k = params.k, d = params.d, r = params.r, t = params.t;
  if (!(0 < k && k < n)) throw std::invalid_argument("need 0 < k < n");
  if (d < 1 || r < 1 || r > k || t < 1) throw std::invalid_argument("invalid code parameters");
  BoundsReport rep;
  rep.params = params;
  rep.d_singleton_locality = bound_singleton_locality(n, k, r);
  rep.d_one_parity_repair = bound_one_parity_repair(n, k, r, t);
  rep.d_wang_zhang = bound_wang_zhang(n, k, r, t);
  rep.d_floorsum = bound_distance_floorsum(n, k, r, t);
  rep.rate_product = bound_rate_product(r, t);
  rep.rate_prakash = bound_rate_prakash(r);
  rep.rate_corollary = bound_rate_corollary(k, r, t);
  rep.length_bound = bound_length(k, r, t);
  rep.distance_optimal = (d == rep.d_one_parity_repair);
  rep.rate_optimal = (n == rep.length_bound);
  rep.meets_lower = (d >= t + 1);
  return rep;
}

}  // namespace islrc
