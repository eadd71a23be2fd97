#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "islrc/distance.hpp"
#include "islrc/lrc_core.hpp"

namespace islrc {

struct RepairTrace {
  int coord = -1;
  std::vector<int> repair_set;
  std::vector<int> reads;  // node indices read, at most r
  Elem recovered = 0;
  bool success = false;
};

// One coordinate per simulated node. Live slots always hold the original
// codeword values; the pristine codeword is retained separately for audit.
class ShardStore {
 public:
  ShardStore(const StandardParityCheck& code, const IslrcCertificate& cert,
             const std::vector<Elem>& message);

  const StandardParityCheck& code() const { return code_; }
  int n() const { return code_.n(); }
  bool erased(int i) const { return !nodes_[i].has_value(); }
  Elem value(int i) const;
  const std::vector<Elem>& audit_codeword() const { return original_; }

  void erase(const std::vector<int>& coords);

  // Restores information coordinate i from its lowest-indexed fully live
  // repair set and writes the value back.
  RepairTrace repair_info(int i);

  // Reads coordinate i independently through each of its t disjoint repair
  // sets; all values must agree with the stored symbol.
  std::vector<Elem> parallel_read(int i) const;

 private:
  Elem solve_from_set(const RepairSet& rs, int i) const;

  StandardParityCheck code_;
  IslrcCertificate cert_;
  std::vector<std::optional<Elem>> nodes_;
  std::vector<Elem> original_;
};

// message * G with systematic prefix equal to the message.
std::vector<Elem> encode(const std::vector<Elem>& message,
                         const StandardParityCheck& code);

struct CampaignStats {
  std::uint64_t seed = 0;
  long long trials = 0;
  long long attempted = 0;
  long long succeeded = 0;
  double mean_reads = 0.0;
  int max_reads = 0;
  std::vector<RepairTrace> traces;  // filled only when requested
};

// Seeded single-information-coordinate erasure per trial; output is
// bit-identical for a given seed regardless of worker count.
CampaignStats campaign(const StandardParityCheck& code, std::uint64_t seed,
                       long long trials, bool keep_traces = false);

}  // namespace islrc
