#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "islrc/gf_matrix.hpp"

namespace islrc {

// A code given by a standard-form parity check matrix H = [P | I_{n-k}],
// with the first l rows of P designated as the locality-bearing block P1.
class StandardParityCheck {
 public:
  StandardParityCheck(GfMatrix h, int l);

  const GfMatrix& H() const { return h_; }
  int n() const { return h_.cols(); }
  int k() const { return h_.cols() - h_.rows(); }
  int parity_count() const { return h_.rows(); }
  int l() const { return l_; }
  const Field& field() const { return h_.field(); }

  // The P block (columns 0..k-1), its designated top rows, and the rest.
  GfMatrix P() const;
  GfMatrix P1() const;  // requires l > 0

 private:
  GfMatrix h_;
  int l_;
};

// Coordinates from which one information symbol is linearly recoverable.
// Contains exactly one parity coordinate (index >= k).
struct RepairSet {
  int info_coord;
  std::vector<int> coords;
  int parity_row;  // generating P1 row
};

struct LocalGroup {
  std::vector<int> coords;  // repair set together with its repaired coordinate
  int parity_row;
};

struct IslrcCertificate {
  bool passed = false;
  int r_requested = 0;
  int t_requested = 0;
  int r_observed = 0;  // max P1 row weight
  int t_observed = 0;  // min P1 column weight
  std::optional<std::pair<int, int>> violating_rows;  // |support overlap| >= 2
  std::vector<std::vector<RepairSet>> repair_sets;    // indexed by info coordinate
  std::vector<LocalGroup> local_groups;
  std::optional<GfMatrix> membership;  // P1 transpose, binary codes only
};

// Evaluates the locality/availability conditions on P1: every row weight
// at most r, every column weight at least t, and any two row supports
// meeting in at most one position. On pass, extracts the repair sets,
// local groups, and (for binary codes) the membership matrix.
IslrcCertificate check_islrc(const StandardParityCheck& c, int r, int t);

// One group per P1 row. The certificate overload rejects failed runs.
std::vector<LocalGroup> local_groups(const StandardParityCheck& c);
std::vector<LocalGroup> local_groups(const StandardParityCheck& c,
                                     const IslrcCertificate& cert);

// R = P1 transpose, the k-by-l information-to-group incidence. Binary only.
GfMatrix membership_matrix(const StandardParityCheck& c);

// Minimum number of locality rows: ceil(k*t / r).
long long min_local_rows(long long k, long long r, long long t);

// Auto selection of l: the rows of P with weight <= r, which must form a
// prefix of P under the first-l-rows convention.
int suggest_l(const GfMatrix& h, int r);

}  // namespace islrc
