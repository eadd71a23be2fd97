#include "islrc/repair_sim.hpp"

#include <random>
#include <stdexcept>

namespace islrc {

std::vector<Elem> encode(const std::vector<Elem>& message,
                         const StandardParityCheck& code) {
  if (static_cast<int>(message.size()) != code.k())
    throw std::invalid_argument("message length must equal k");
  const FieldSpec& f = *code.field();
  for (Elem e : message)
    if (e >= f.q()) throw std::invalid_argument("message symbol out of field range");
  std::vector<Elem> cw(code.n(), 0);
  for (int j = 0; j < code.k(); ++j) cw[j] = message[j];
  // Parity row i enforces sum_j H[i][j] c_j = 0 with identity at column k+i.
  const GfMatrix& h = code.H();
  for (int i = 0; i < code.parity_count(); ++i) {
    Elem acc = 0;
    for (int j = 0; j < code.k(); ++j)
      acc = f.add(acc, f.mul(h.at(i, j), message[j]));
    cw[code.k() + i] = f.neg(acc);
  }
  return cw;
}

ShardStore::ShardStore(const StandardParityCheck& code,
                       const IslrcCertificate& cert,
                       const std::vector<Elem>& message)
    : code_(code), cert_(cert) {
  if (!cert_.passed) throw std::invalid_argument("certificate did not pass");
  original_ = encode(message, code_);
  nodes_.assign(original_.begin(), original_.end());
}

Elem ShardStore::value(int i) const {
  if (!nodes_[i]) throw std::domain_error("coordinate is erased");
  return *nodes_[i];
}

void ShardStore::erase(const std::vector<int>& coords) {
  for (int c : coords) {
    if (c < 0 || c >= n()) throw std::out_of_range("coordinate");
    nodes_[c].reset();
  }
}

Elem ShardStore::solve_from_set(const RepairSet& rs, int i) const {
  const FieldSpec& f = *code_.field();
  const GfMatrix& h = code_.H();
  const int row = rs.parity_row;
  Elem acc = 0;
  for (int j : rs.coords)
    acc = f.add(acc, f.mul(h.at(row, j), *nodes_[j]));
  return f.neg(f.mul(acc, f.inv(h.at(row, i))));
}

RepairTrace ShardStore::repair_info(int i) {
  if (i < 0 || i >= n()) throw std::out_of_range("coordinate");
  if (i >= code_.k())
    throw std::invalid_argument("locality guarantees apply to information coordinates only");
  RepairTrace trace;
  trace.coord = i;
  for (const RepairSet& rs : cert_.repair_sets[i]) {
    bool live = true;
    for (int j : rs.coords)
      if (!nodes_[j]) { live = false; break; }
    if (!live) continue;
    trace.repair_set = rs.coords;
    trace.reads = rs.coords;
    trace.recovered = solve_from_set(rs, i);
    trace.success = true;
    nodes_[i] = trace.recovered;
    return trace;
  }
  throw std::runtime_error("unrepairable at locality: all repair sets are blocked");
}

std::vector<Elem> ShardStore::parallel_read(int i) const {
  if (i < 0 || i >= code_.k())
    throw std::invalid_argument("locality guarantees apply to information coordinates only");
  std::vector<Elem> values;
  for (const RepairSet& rs : cert_.repair_sets[i]) {
    for (int j : rs.coords)
      if (!nodes_[j]) throw std::runtime_error("repair set member erased");
    values.push_back(solve_from_set(rs, i));
  }
  return values;
}

CampaignStats campaign(const StandardParityCheck& code, std::uint64_t seed,
                       long long trials, bool keep_traces) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  IslrcCertificate cert = check_islrc(code, code.n(), 1);
  if (!cert.passed) throw std::invalid_argument("code has no usable locality structure");

  const FieldSpec& f = *code.field();
  CampaignStats stats;
  stats.seed = seed;
  stats.trials = trials;
  long long total_reads = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    // Per-trial stream, so results do not depend on how trials are batched.
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
    std::vector<Elem> message(code.k());
    for (Elem& e : message) e = static_cast<Elem>(rng() % f.q());
    int target = static_cast<int>(rng() % static_cast<std::uint64_t>(code.k()));

    ShardStore store(code, cert, message);
    Elem expected = store.value(target);
    store.erase({target});
    ++stats.attempted;
    RepairTrace trace = store.repair_info(target);
    if (trace.success && trace.recovered == expected) ++stats.succeeded;
    total_reads += static_cast<long long>(trace.reads.size());
    stats.max_reads = std::max(stats.max_reads, static_cast<int>(trace.reads.size()));
    if (keep_traces) stats.traces.push_back(std::move(trace));
  }
  stats.mean_reads = stats.attempted ? static_cast<double>(total_reads) / stats.attempted : 0.0;
  return stats;
}

}  // namespace islrc
