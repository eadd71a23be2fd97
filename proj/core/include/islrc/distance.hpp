#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "islrc/lrc_core.hpp"

namespace islrc {

enum class DistanceMethod { Enumeration, SubsetSearch, Hybrid };
enum class DistanceStatus {
  Exact,           // d determined exactly
  LowerBoundOnly,  // all subsets up to w_max independent: d > w_max
  BudgetExceeded,  // search aborted, nothing certified at this budget
};

struct DistanceCertificate {
  DistanceStatus status = DistanceStatus::Exact;
  int d = 0;               // exact distance (Exact) or 0
  int lower_evidence = 0;  // all column subsets of this size are independent
  std::vector<Elem> witness;       // weight-d codeword in the null space of H
  std::vector<int> dependent_cols; // its support: a dependent column subset
  DistanceMethod method = DistanceMethod::Enumeration;
  long long work = 0;  // messages enumerated or subset nodes visited
};

struct DistanceOptions {
  long long enum_cap = 1LL << 28;       // max number of messages
  long long subset_budget = 100'000'000;  // max subset nodes
  int workers = 0;                      // 0 = hardware concurrency
};

// Thrown by certify_distance when the claim is refuted; carries the witness
// (a lighter codeword, or the independence evidence that rules the claim out).
class ClaimRefuted : public std::runtime_error {
 public:
  ClaimRefuted(std::string what, DistanceCertificate evidence)
      : std::runtime_error(std::move(what)), evidence(std::move(evidence)) {}
  DistanceCertificate evidence;
};

// G = [I_k | -P^T]; satisfies G H^T = 0.
GfMatrix generator_from_check(const StandardParityCheck& c);

// Exact distance by sweeping all q^k - 1 nonzero messages in mixed-radix
// Gray order, so successive codewords differ by one generator-row multiple.
// Throws std::invalid_argument when q^k exceeds the cap.
DistanceCertificate min_distance_enumerate(const StandardParityCheck& c,
                                           const DistanceOptions& opts = {});

// Checks every column subset of H of size <= w_max for linear dependence.
// Returns the exact distance when a dependent set exists in range, otherwise
// a lower-bound-only certificate (d > w_max).
DistanceCertificate min_distance_subsets(const StandardParityCheck& c, int w_max,
                                         const DistanceOptions& opts = {});

// Certifies d(C) == claimed_d: subset search up to claimed_d - 1 for the
// lower bound, then a weight-claimed_d codeword (generator rows first, then
// two-row combinations, then full subset search). Throws ClaimRefuted.
DistanceCertificate certify_distance(const StandardParityCheck& c, int claimed_d,
                                     const DistanceOptions& opts = {});

// True iff every t-subset of H's columns is linearly independent (d >= t+1).
bool check_t_columns_independent(const StandardParityCheck& c, int t,
                                 const DistanceOptions& opts = {});

// Exact distance of an arbitrary (not necessarily standard-form) parity
// check matrix, by enumerating the null space. Throws when the null space
// is trivial (zero-dimensional code).
DistanceCertificate min_distance_of_check(const GfMatrix& h,
                                          const DistanceOptions& opts = {});

}  // namespace islrc
