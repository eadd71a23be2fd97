#include "islrc/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace islrc {

namespace {

// Polynomials over GF(p): coefficient vectors, constant term first,
// trailing zeros trimmed.

std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_trim(out);
}

// Remainder of a by monic b.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b,
                          int p) {
  a = poly_trim(a);
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    int lead = a.back();
    size_t shift = a.size() - 1 - db;
    for (size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p * p) % p;
    }
    a = poly_trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  std::vector<int> f = poly_trim(poly);
  if (f.size() < 2) return false;
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  // Enumerate every monic divisor candidate of degree 1..deg-1.
  for (int d = 1; d < deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> g(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec make_field(int p, int m,
                     std::optional<std::vector<int>> reduction_poly) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime: " + std::to_string(p));
  if (m < 1) throw std::invalid_argument("m must be positive");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
  }

  FieldSpec f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = static_cast<int>(q);

  if (m > 1) {
    if (reduction_poly) {
      std::vector<int> rp = *reduction_poly;
      if (static_cast<int>(rp.size()) != m + 1 || rp.back() != 1)
        throw std::invalid_argument("reduction polynomial must be monic of degree m");
      for (int c : rp)
        if (c < 0 || c >= p) throw std::invalid_argument("reduction polynomial coefficient out of range");
      if (!is_irreducible(rp, p))
        throw std::invalid_argument("reduction polynomial is reducible");
      f.reduction_poly_ = std::move(rp);
    } else {
      // Smallest coefficient tuple (c0, c1, ..., c_{m-1}), compared from the
      // constant term upward.
      long long count = q;
      bool found = false;
      for (long long code = 0; code < count && !found; ++code) {
        std::vector<int> rp(m + 1, 0);
        long long c = code;
        for (int i = m - 1; i >= 0; --i) {
          rp[i] = static_cast<int>(c % p);
          c /= p;
        }
        rp[m] = 1;
        if (is_irreducible(rp, p)) {
          f.reduction_poly_ = std::move(rp);
          found = true;
        }
      }
      if (!found) throw std::logic_error("no irreducible polynomial found");
    }
  } else if (reduction_poly && !reduction_poly->empty()) {
    throw std::invalid_argument("reduction polynomial not used when m == 1");
  }

  if (f.q_ <= 256) {
    const int n = f.q_;
    f.add_tab_.resize(static_cast<size_t>(n) * n);
    f.mul_tab_.resize(static_cast<size_t>(n) * n);
    f.inv_tab_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        f.add_tab_[static_cast<size_t>(a) * n + b] = f.add_raw(static_cast<Elem>(a), static_cast<Elem>(b));
        Elem prod = f.mul_raw(static_cast<Elem>(a), static_cast<Elem>(b));
        f.mul_tab_[static_cast<size_t>(a) * n + b] = prod;
        if (prod == 1) f.inv_tab_[a] = static_cast<Elem>(b);
      }
    }
  }
  return f;
}

Field make_field_shared(int p, int m,
                        std::optional<std::vector<int>> reduction_poly) {
  return std::make_shared<const FieldSpec>(make_field(p, m, std::move(reduction_poly)));
}

std::vector<int> FieldSpec::to_digits(Elem a) const {
  std::vector<int> d(m_);
  int v = a;
  for (int i = 0; i < m_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Elem FieldSpec::from_digits(const std::vector<int>& digits) const {
  int v = 0;
  for (int i = m_ - 1; i >= 0; --i) v = v * p_ + digits[i];
  return static_cast<Elem>(v);
}

Elem FieldSpec::add_raw(Elem a, Elem b) const {
  int out = 0, mult = 1;
  int va = a, vb = b;
  for (int i = 0; i < m_; ++i) {
    out += ((va + vb) % p_) * mult;
    va /= p_;
    vb /= p_;
    mult *= p_;
  }
  return static_cast<Elem>(out);
}

Elem FieldSpec::mul_raw(Elem a, Elem b) const {
  if (m_ == 1) return static_cast<Elem>((a * b) % p_);
  std::vector<int> pa = to_digits(a), pb = to_digits(b);
  std::vector<int> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
  std::vector<int> rem(prod.begin(), prod.end());
  // Reduce by the monic reduction polynomial.
  for (int i = 2 * m_ - 2; i >= m_; --i) {
    int lead = rem[i];
    if (lead == 0) continue;
    for (int j = 0; j <= m_; ++j) {
      int idx = i - m_ + j;
      rem[idx] = ((rem[idx] - lead * reduction_poly_[j]) % p_ + p_ * p_) % p_;
    }
  }
  rem.resize(m_);
  return from_digits(rem);
}

Elem FieldSpec::add(Elem a, Elem b) const {
  if (!add_tab_.empty()) return add_tab_[static_cast<size_t>(a) * q_ + b];
  return add_raw(a, b);
}

Elem FieldSpec::neg(Elem a) const {
  int out = 0, mult = 1;
  int va = a;
  for (int i = 0; i < m_; ++i) {
    out += ((p_ - va % p_) % p_) * mult;
    va /= p_;
    mult *= p_;
  }
  return static_cast<Elem>(out);
}

Elem FieldSpec::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldSpec::mul(Elem a, Elem b) const {
  if (!mul_tab_.empty()) return mul_tab_[static_cast<size_t>(a) * q_ + b];
  return mul_raw(a, b);
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!inv_tab_.empty()) return inv_tab_[a];
  for (int b = 1; b < q_; ++b)
    if (mul(a, static_cast<Elem>(b)) == 1) return static_cast<Elem>(b);
  throw std::logic_error("no inverse found");
}

CayleyTable cayley_add_table(const FieldSpec& f) {
  CayleyTable t{TableKind::Additive, f.q(), {}};
  t.entries.resize(static_cast<size_t>(f.q()) * f.q());
  for (int i = 0; i < f.q(); ++i)
    for (int j = 0; j < f.q(); ++j)
      t.entries[static_cast<size_t>(i) * f.q() + j] = f.add(static_cast<Elem>(i), static_cast<Elem>(j));
  return t;
}

CayleyTable cayley_mul_table(const FieldSpec& f) {
  CayleyTable t{TableKind::Multiplicative, f.q(), {}};
  t.entries.resize(static_cast<size_t>(f.q()) * f.q());
  for (int i = 0; i < f.q(); ++i)
    for (int j = 0; j < f.q(); ++j)
      t.entries[static_cast<size_t>(i) * f.q() + j] = f.mul(static_cast<Elem>(i), static_cast<Elem>(j));
  return t;
}

}  // namespace islrc
