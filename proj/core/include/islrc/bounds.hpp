#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "islrc/constructions.hpp"

namespace islrc {

// Exact fraction on 64-bit integers, always normalized with positive
// denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
  Rational operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  Rational reciprocal() const { return Rational(den, num); }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

struct BoundsReport {
  CodeParams params;
  long long d_singleton_locality;  // n - k - ceil(k/r) + 2
  long long d_one_parity_repair;   // n - k - ceil(kt/r) + t + 1
  long long d_wang_zhang;          // n - k - ceil((t(k-1)+1)/(t(r-1)+1)) + 2
  long long d_floorsum;            // n - sum_{i=0}^{t} floor((k-1)/r^i)
  Rational rate_product;           // 1 / prod_{j=1}^{t} (1 + 1/(j r))
  Rational rate_prakash;           // r / (r + 2), t = 2 regime
  Rational rate_corollary;         // k / (k + ceil(kt/r)); r/(r+t) when r | kt
  long long length_bound;          // n >= k + ceil(kt/r)
  bool distance_optimal;           // d equals the one-parity repair bound
  bool rate_optimal;               // n equals the length bound
  bool meets_lower;                // d >= t + 1
};

long long bound_singleton_locality(long long n, long long k, long long r);
long long bound_one_parity_repair(long long n, long long k, long long r, long long t);
long long bound_wang_zhang(long long n, long long k, long long r, long long t);
Rational bound_rate_product(long long r, long long t);
long long bound_distance_floorsum(long long n, long long k, long long r, long long t);
Rational bound_rate_prakash(long long r);
long long bound_length(long long k, long long r, long long t);
Rational bound_rate_corollary(long long k, long long r, long long t);

BoundsReport classify(const CodeParams& params);

}  // namespace islrc
