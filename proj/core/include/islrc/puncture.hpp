#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "islrc/distance.hpp"
#include "islrc/lrc_core.hpp"

namespace islrc {

enum class PunctureClass { Mds, AlmostMds, Degenerate, Other };

std::string to_string(PunctureClass c);

struct PunctureReport {
  std::vector<int> deleted_rows;
  int gamma = 0;  // number of deleted columns
  GfMatrix h_sub;
  std::vector<int> kept_rows;
  std::vector<int> kept_cols;
  int rank = 0;
  int sub_dim = 0;                 // n_sub - rank
  std::optional<int> sub_distance; // absent when sub_dim == 0
  std::optional<int> singleton_defect;
  PunctureClass classification = PunctureClass::Other;
};

// Deletes the given P1 rows and every column covered by their supports
// (including their identity columns), then ranks and classifies the
// remaining code: MDS at defect 0, almost-MDS at defect 1, degenerate when
// the sub-code has dimension 0.
PunctureReport puncture(const StandardParityCheck& c,
                        const std::vector<int>& deleted_rows,
                        const DistanceOptions& opts = {});

// Union of the H-row supports of the given P1 rows.
std::vector<int> covered_columns(const StandardParityCheck& c,
                                 const std::vector<int>& rows);

// The P1 rows whose support contains the given information column.
std::vector<int> rows_covering(const StandardParityCheck& c, int info_col);

struct PunctureSuiteEntry {
  PunctureReport report;
  bool row_count_ok = false;   // kept rows == d-1 (size-1 deletions: d)
  bool full_rank = false;
  bool distance_ok = false;    // sub_distance == d on non-degenerate runs
};

struct PunctureSuiteSummary {
  int certified_d = 0;
  std::uint64_t seed = 0;
  std::vector<PunctureSuiteEntry> entries;
  int degenerate_count = 0;
  bool all_passed = false;
};

// Evaluates a collection of deletion choices of sizes ceil(kt/r)-t and
// ceil(kt/r)-t-1 against the expected row counts, full row rank, and
// MDS / almost-MDS classification. Degenerate instances are tallied, not
// failed. Requires ceil(kt/r) > t.
PunctureSuiteSummary puncture_suite(const StandardParityCheck& c, int r, int t,
                                    int certified_d,
                                    const std::vector<std::vector<int>>& deletions,
                                    const DistanceOptions& opts = {});

// Seeded random deletion sets of both supported sizes, `count` of each.
std::vector<std::vector<int>> random_deletions(const StandardParityCheck& c,
                                               int r, int t, int count,
                                               std::uint64_t seed);

}  // namespace islrc
