#include "islrc/puncture.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace islrc {

std::string to_string(PunctureClass c) {
  switch (c) {
    case PunctureClass::Mds: return "MDS";
    case PunctureClass::AlmostMds: return "almost-MDS";
    case PunctureClass::Degenerate: return "degenerate";
    case PunctureClass::Other: return "other";
  }
  return "other";
}

std::vector<int> covered_columns(const StandardParityCheck& c,
                                 const std::vector<int>& rows) {
  std::set<int> cols;
  for (int r : rows) {
    if (r < 0 || r >= c.l()) throw std::out_of_range("deleted row index not in P1");
    for (int j : c.H().row_support(r)) cols.insert(j);
  }
  return {cols.begin(), cols.end()};
}

std::vector<int> rows_covering(const StandardParityCheck& c, int info_col) {
  if (info_col < 0 || info_col >= c.k()) throw std::out_of_range("information column index");
  std::vector<int> rows;
  for (int i = 0; i < c.l(); ++i)
    if (c.H().at(i, info_col) != 0) rows.push_back(i);
  return rows;
}

PunctureReport puncture(const StandardParityCheck& c,
                        const std::vector<int>& deleted_rows,
                        const DistanceOptions& opts) {
  std::vector<int> cols = covered_columns(c, deleted_rows);
  Submatrix sub = delete_rows_cols(c.H(), deleted_rows, cols);

  PunctureReport rep{deleted_rows, static_cast<int>(cols.size()),
                     std::move(sub.mat), std::move(sub.kept_rows),
                     std::move(sub.kept_cols)};
  std::sort(rep.deleted_rows.begin(), rep.deleted_rows.end());
  rep.rank = rep.h_sub.rank();
  rep.sub_dim = rep.h_sub.cols() - rep.rank;
  if (rep.sub_dim == 0) {
    rep.classification = PunctureClass::Degenerate;
    return rep;
  }
  DistanceCertificate dist = min_distance_of_check(rep.h_sub, opts);
  rep.sub_distance = dist.d;
  int defect = rep.h_sub.cols() - rep.sub_dim + 1 - dist.d;
  rep.singleton_defect = defect;
  rep.classification = defect == 0   ? PunctureClass::Mds
                       : defect == 1 ? PunctureClass::AlmostMds
                                     : PunctureClass::Other;
  return rep;
}

PunctureSuiteSummary puncture_suite(const StandardParityCheck& c, int r, int t,
                                    int certified_d,
                                    const std::vector<std::vector<int>>& deletions,
                                    const DistanceOptions& opts) {
  const long long rows_needed = min_local_rows(c.k(), r, t);
  if (rows_needed <= t)
    throw std::invalid_argument("requires ceil(kt/r) > t");
  const size_t size_mds = static_cast<size_t>(rows_needed - t);
  const size_t size_amds = size_mds - 1;

  PunctureSuiteSummary summary;
  summary.certified_d = certified_d;
  summary.all_passed = true;
  for (const auto& del : deletions) {
    if (del.size() != size_mds && del.size() != size_amds)
      throw std::invalid_argument("deletion set size must be ceil(kt/r)-t or one less");
    PunctureSuiteEntry entry{puncture(c, del, opts)};
    const bool large = del.size() == size_mds;
    const int expected_rows = large ? certified_d - 1 : certified_d;
    entry.row_count_ok = entry.report.h_sub.rows() == expected_rows &&
                         entry.report.h_sub.cols() >= expected_rows;
    entry.full_rank = entry.report.rank == entry.report.h_sub.rows();
    if (entry.report.classification == PunctureClass::Degenerate) {
      ++summary.degenerate_count;
      entry.distance_ok = true;
    } else {
      const PunctureClass expected_class =
          large ? PunctureClass::Mds : PunctureClass::AlmostMds;
      entry.distance_ok = entry.report.sub_distance == certified_d &&
                          entry.report.classification == expected_class;
    }
    if (!entry.row_count_ok || !entry.full_rank || !entry.distance_ok)
      summary.all_passed = false;
    summary.entries.push_back(std::move(entry));
  }
  return summary;
}

std::vector<std::vector<int>> random_deletions(const StandardParityCheck& c,
                                               int r, int t, int count,
                                               std::uint64_t seed) {
  const long long rows_needed = min_local_rows(c.k(), r, t);
  if (rows_needed <= t) throw std::invalid_argument("requires ceil(kt/r) > t");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> out;
  for (int size : {static_cast<int>(rows_needed - t), static_cast<int>(rows_needed - t - 1)}) {
    for (int i = 0; i < count; ++i) {
      std::vector<int> all(c.l());
      for (int j = 0; j < c.l(); ++j) all[j] = j;
      // Partial Fisher-Yates with explicit modulo draw, reproducible by seed.
      for (int j = 0; j < size; ++j) {
        int pick = j + static_cast<int>(rng() % static_cast<std::uint64_t>(c.l() - j));
        std::swap(all[j], all[pick]);
      }
      all.resize(size);
      std::sort(all.begin(), all.end());
      out.push_back(std::move(all));
    }
  }
  return out;
}

}  // namespace islrc
