#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace islrc {

// Field elements are stored as integer indices in [0, q). The index encodes
// the polynomial coefficients as base-p digits, constant term in the least
// significant digit. Index 0 is the additive identity, index 1 the
// multiplicative identity.
using Elem = std::uint16_t;

constexpr int kMaxFieldOrder = 1 << 16;

// A concrete GF(p^m) with full arithmetic. Immutable after construction;
// all operations are pure and safe for concurrent use.
class FieldSpec {
 public:
  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  // Coefficients of the monic reduction polynomial, constant term first,
  // length m+1. Empty when m == 1.
  const std::vector<int>& reduction_poly() const { return reduction_poly_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws on a == 0

  std::vector<int> to_digits(Elem a) const;
  Elem from_digits(const std::vector<int>& digits) const;

  bool operator==(const FieldSpec& other) const {
    return p_ == other.p_ && m_ == other.m_ &&
           reduction_poly_ == other.reduction_poly_;
  }

  friend FieldSpec make_field(int p, int m,
                              std::optional<std::vector<int>> reduction_poly);

 private:
  FieldSpec() = default;

  Elem add_raw(Elem a, Elem b) const;
  Elem mul_raw(Elem a, Elem b) const;

  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<int> reduction_poly_;

  // Dense operation tables, built at construction for small q.
  std::vector<Elem> add_tab_;
  std::vector<Elem> mul_tab_;
  std::vector<Elem> inv_tab_;
};

using Field = std::shared_ptr<const FieldSpec>;

// Builds GF(p^m). When reduction_poly is absent and m > 1, the
// lexicographically smallest monic irreducible polynomial of degree m over
// GF(p) is selected, comparing coefficients from the constant term upward.
// Throws std::invalid_argument on non-prime p, q > 2^16, or a reducible /
// wrong-degree polynomial.
FieldSpec make_field(int p, int m,
                     std::optional<std::vector<int>> reduction_poly = {});

Field make_field_shared(int p, int m,
                        std::optional<std::vector<int>> reduction_poly = {});

enum class TableKind { Additive, Multiplicative };

// Full q-by-q operation table, both axes in ascending element order. The
// multiplicative table includes the zero row and column.
struct CayleyTable {
  TableKind kind;
  int q;
  std::vector<Elem> entries;  // row-major

  Elem at(int i, int j) const { return entries[static_cast<size_t>(i) * q + j]; }
};

CayleyTable cayley_add_table(const FieldSpec& f);
CayleyTable cayley_mul_table(const FieldSpec& f);

bool is_prime(int n);

// Irreducibility over GF(p) by trial division against every lower-degree
// monic polynomial. Coefficients constant term first.
bool is_irreducible(const std::vector<int>& poly, int p);

}  // namespace islrc
