#include "islrc/lrc_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace islrc {

StandardParityCheck::StandardParityCheck(GfMatrix h, int l)
    : h_(std::move(h)), l_(l) {
  const int nk = h_.rows();
  const int n = h_.cols();
  if (n <= nk) throw std::invalid_argument("H must have more columns than rows");
  if (l < 0 || l > nk) throw std::invalid_argument("l out of range");
  const int k = n - nk;
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j)
      if (h_.at(i, k + j) != (i == j ? 1 : 0))
        throw std::invalid_argument("columns k..n-1 do not form an identity block");
}

GfMatrix StandardParityCheck::P() const {
  std::vector<int> drop_cols;
  for (int j = k(); j < n(); ++j) drop_cols.push_back(j);
  return delete_rows_cols(h_, {}, drop_cols).mat;
}

GfMatrix StandardParityCheck::P1() const {
  if (l_ == 0) throw std::domain_error("no rows designated as P1");
  std::vector<int> drop_rows;
  for (int i = l_; i < parity_count(); ++i) drop_rows.push_back(i);
  std::vector<int> drop_cols;
  for (int j = k(); j < n(); ++j) drop_cols.push_back(j);
  return delete_rows_cols(h_, drop_rows, drop_cols).mat;
}

IslrcCertificate check_islrc(const StandardParityCheck& c, int r, int t) {
  if (r < 1 || t < 1) throw std::invalid_argument("r and t must be positive");
  IslrcCertificate cert;
  cert.r_requested = r;
  cert.t_requested = t;
  if (c.l() == 0) {
    cert.t_observed = 0;
    cert.passed = false;
    return cert;
  }

  const GfMatrix p1 = c.P1();
  const int k = c.k();

  std::vector<Support> row_supports(c.l());
  for (int i = 0; i < c.l(); ++i) {
    row_supports[i] = p1.row_support(i);
    cert.r_observed = std::max(cert.r_observed, static_cast<int>(row_supports[i].size()));
  }
  cert.t_observed = k > 0 ? c.n() : 0;
  for (int j = 0; j < k; ++j)
    cert.t_observed = std::min(cert.t_observed, p1.col_weight(j));

  for (int i = 0; i < c.l() && !cert.violating_rows; ++i) {
    for (int j = i + 1; j < c.l(); ++j) {
      std::vector<int> common;
      std::set_intersection(row_supports[i].begin(), row_supports[i].end(),
                            row_supports[j].begin(), row_supports[j].end(),
                            std::back_inserter(common));
      if (common.size() >= 2) {
        cert.violating_rows = {i, j};
        break;
      }
    }
  }

  cert.passed = cert.r_observed <= r && cert.t_observed >= t && !cert.violating_rows;
  if (!cert.passed) return cert;

  cert.repair_sets.resize(k);
  for (int row = 0; row < c.l(); ++row) {
    for (int i : row_supports[row]) {
      RepairSet rs;
      rs.info_coord = i;
      rs.parity_row = row;
      for (int j : row_supports[row])
        if (j != i) rs.coords.push_back(j);
      rs.coords.push_back(k + row);
      cert.repair_sets[i].push_back(std::move(rs));
    }
  }

  // Condition (iii) guarantees disjointness outside {i}; re-verify.
  for (int i = 0; i < k; ++i) {
    const auto& sets = cert.repair_sets[i];
    for (size_t a = 0; a < sets.size(); ++a)
      for (size_t b = a + 1; b < sets.size(); ++b) {
        std::vector<int> common;
        std::set_intersection(sets[a].coords.begin(), sets[a].coords.end(),
                              sets[b].coords.begin(), sets[b].coords.end(),
                              std::back_inserter(common));
        if (!common.empty())
          throw std::logic_error("repair sets overlap despite row-support condition");
      }
  }

  cert.local_groups = local_groups(c);
  if (c.field()->q() == 2) cert.membership = membership_matrix(c);
  return cert;
}

std::vector<LocalGroup> local_groups(const StandardParityCheck& c) {
  const GfMatrix p1 = c.P1();
  std::vector<LocalGroup> groups;
  groups.reserve(c.l());
  for (int row = 0; row < c.l(); ++row) {
    LocalGroup g;
    g.parity_row = row;
    g.coords = p1.row_support(row);
    g.coords.push_back(c.k() + row);
    groups.push_back(std::move(g));
  }
  return groups;
}

std::vector<LocalGroup> local_groups(const StandardParityCheck& c,
                                     const IslrcCertificate& cert) {
  if (!cert.passed) throw std::invalid_argument("certificate did not pass");
  return local_groups(c);
}

GfMatrix membership_matrix(const StandardParityCheck& c) {
  if (c.field()->q() != 2)
    throw std::domain_error("membership matrix is defined for binary codes only");
  return c.P1().transpose();
}

long long min_local_rows(long long k, long long r, long long t) {
  if (k < 1 || r < 1 || t < 1) throw std::invalid_argument("arguments must be positive");
  return (k * t + r - 1) / r;
}

int suggest_l(const GfMatrix& h, int r) {
  const int nk = h.rows();
  const int k = h.cols() - nk;
  if (k <= 0) throw std::invalid_argument("not a standard parity check shape");
  int l = 0;
  while (l < nk) {
    int w = 0;
    for (int j = 0; j < k; ++j)
      if (h.at(l, j) != 0) ++w;
    if (w > r) break;
    ++l;
  }
  // Remaining rows must all exceed r, otherwise the weight-<=r rows are not
  // a prefix and the first-l convention cannot represent them.
  for (int i = l; i < nk; ++i) {
    int w = 0;
    for (int j = 0; j < k; ++j)
      if (h.at(i, j) != 0) ++w;
    if (w <= r)
      throw std::invalid_argument("rows of weight <= r are not contiguous at the top of P");
  }
  return l;
}

}  // namespace islrc
