// islrc: construct, verify, and stress-test (n,k,r,t) information-symbol
// locally repairable codes given by standard parity check matrices [P | I].
//
// Exit codes: 0 success / claim verified, 1 refuted claim or failed
// certificate, 2 usage or input-format error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "islrc/bounds.hpp"
#include "islrc/constructions.hpp"
#include "islrc/distance.hpp"
#include "islrc/puncture.hpp"
#include "islrc/repair_sim.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace islrc;

constexpr const char* kVersion = "1.0.0";

json certificate_json(const IslrcCertificate& cert) {
  json j;
  j["passed"] = cert.passed;
  j["r_requested"] = cert.r_requested;
  j["t_requested"] = cert.t_requested;
  j["r_observed"] = cert.r_observed;
  j["t_observed"] = cert.t_observed;
  if (cert.violating_rows) {
    j["violating_rows"] = {cert.violating_rows->first, cert.violating_rows->second};
  }
  if (cert.passed) {
    j["local_group_count"] = cert.local_groups.size();
    json groups = json::array();
    for (const auto& g : cert.local_groups)
      groups.push_back({{"parity_row", g.parity_row}, {"coords", g.coords}});
    j["local_groups"] = std::move(groups);
    json repair = json::array();
    for (size_t i = 0; i < cert.repair_sets.size(); ++i) {
      json sets = json::array();
      for (const auto& rs : cert.repair_sets[i])
        sets.push_back({{"parity_row", rs.parity_row}, {"coords", rs.coords}});
      repair.push_back({{"info_coord", i}, {"sets", std::move(sets)}});
    }
    j["repair_sets"] = std::move(repair);
    j["has_membership_matrix"] = cert.membership.has_value();
  }
  return j;
}

std::string matrix_text(const GfMatrix& m) {
  std::ostringstream oss;
  write_matrix(oss, m);
  return oss.str();
}

json distance_json(const DistanceCertificate& cert) {
  json j;
  switch (cert.status) {
    case DistanceStatus::Exact: j["status"] = "exact"; break;
    case DistanceStatus::LowerBoundOnly: j["status"] = "lower-bound-only"; break;
    case DistanceStatus::BudgetExceeded: j["status"] = "budget-exceeded"; break;
  }
  if (cert.status == DistanceStatus::Exact) {
    j["d"] = cert.d;
    j["lower_evidence"] = cert.lower_evidence;
    j["dependent_cols"] = cert.dependent_cols;
    j["witness"] = cert.witness;
  } else if (cert.status == DistanceStatus::LowerBoundOnly) {
    j["lower_evidence"] = cert.lower_evidence;
    j["d_greater_than"] = cert.lower_evidence;
  }
  switch (cert.method) {
    case DistanceMethod::Enumeration: j["method"] = "enumeration"; break;
    case DistanceMethod::SubsetSearch: j["method"] = "subset-search"; break;
    case DistanceMethod::Hybrid: j["method"] = "hybrid"; break;
  }
  j["work"] = cert.work;
  return j;
}

json puncture_json(const PunctureReport& rep) {
  json j;
  j["deleted_rows"] = rep.deleted_rows;
  j["gamma"] = rep.gamma;
  j["rows"] = rep.h_sub.rows();
  j["cols"] = rep.h_sub.cols();
  j["rank"] = rep.rank;
  j["sub_dim"] = rep.sub_dim;
  if (rep.sub_distance) j["sub_distance"] = *rep.sub_distance;
  if (rep.singleton_defect) j["singleton_defect"] = *rep.singleton_defect;
  j["classification"] = to_string(rep.classification);
  j["h_sub"] = matrix_text(rep.h_sub);
  return j;
}

struct ReportPrinter {
  json inputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const std::string& command, json results) const {
    json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["results"] = std::move(results);
    report["tool_version"] = kVersion;
    report["elapsed_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << report.dump(2) << '\n';
  }
};

StandardParityCheck load_check(const std::string& path, int l) {
  GfMatrix h = read_matrix_file(path);
  if (l < 0) l = h.rows();
  return StandardParityCheck(std::move(h), l);
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream iss(s);
  std::string tok;
  while (std::getline(iss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

FillSpec fill_from_flags(int fill_q, int fill_elem, bool fill_random,
                         std::uint64_t seed) {
  if (fill_q == 0) return {};
  Field f = [&] {
    int p = 2, v = fill_q, m = 0;
    while (v % p != 0 && p <= v) ++p;
    while (v % p == 0) { v /= p; ++m; }
    if (v != 1) throw CLI::ValidationError("--fill-q must be a prime power");
    return make_field_shared(p, m);
  }();
  if (fill_random) return FillSpec::random(std::move(f), seed);
  return FillSpec::uniform(std::move(f), static_cast<Elem>(fill_elem));
}

int run(int argc, char** argv) {
  CLI::App app{"(n,k,r,t) IS-LRC construction, verification, and stress tools"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "worker threads (0 = all cores)");

  // construct
  auto* construct = app.add_subcommand("construct", "emit a constructed parity check matrix");
  int construction = 1, p = 2, m = 1;
  int fill_q = 0, fill_elem = 1;
  bool fill_random = false;
  std::uint64_t seed = 0;
  std::string output;
  construct->add_option("-c,--construction", construction, "construction id")
      ->check(CLI::IsMember({1, 2}))->required();
  construct->add_option("-p", p, "prime")->required();
  construct->add_option("-m", m, "field exponent")->default_val(1);
  construct->add_option("--fill-q", fill_q, "target field order for nonzero fill");
  construct->add_option("--fill-elem", fill_elem, "uniform fill element");
  construct->add_flag("--fill-random", fill_random, "independent random nonzero fill");
  construct->add_option("--seed", seed, "seed for random fill");
  construct->add_option("-o,--output", output, "matrix file (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "check the locality/availability certificate");
  std::string matrix_path;
  int opt_l = -1, opt_r = 0, opt_t = 0;
  verify->add_option("matrix", matrix_path, "matrix file")->required();
  verify->add_option("--l", opt_l, "rows designated as P1 (default: all)");
  verify->add_option("--r", opt_r, "locality")->required();
  verify->add_option("--t", opt_t, "availability")->required();

  // distance / certify
  auto* distance = app.add_subcommand("distance", "exact minimum distance");
  std::string dist_path, mode = "auto";
  int claim = 0, wmax = 0;
  long long enum_cap = 1LL << 28, subset_budget = 100'000'000;
  distance->add_option("matrix", dist_path, "matrix file")->required();
  distance->add_option("--mode", mode, "enumerate | subsets | auto")
      ->check(CLI::IsMember({"enumerate", "subsets", "auto"}));
  distance->add_option("--claim", claim, "certify this distance");
  distance->add_option("--wmax", wmax, "subset-search depth");
  distance->add_option("--enum-cap", enum_cap, "max messages to enumerate");
  distance->add_option("--subset-budget", subset_budget, "max subset nodes");

  auto* certify = app.add_subcommand("certify", "certify a claimed distance");
  std::string cert_path;
  int cert_claim = 0;
  certify->add_option("matrix", cert_path, "matrix file")->required();
  certify->add_option("--claim", cert_claim, "claimed distance")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "bound calculators and optimality classification");
  CodeParams params;
  bounds->add_option("--n", params.n)->required();
  bounds->add_option("--k", params.k)->required();
  bounds->add_option("--d", params.d)->required();
  bounds->add_option("--r", params.r)->required();
  bounds->add_option("--t", params.t)->required();

  // puncture
  auto* puncture_cmd = app.add_subcommand("puncture", "row/column deletion and MDS classification");
  std::string punct_path, rows_arg;
  int punct_l = -1, punct_r = 0, punct_t = 0, punct_d = 0, suite_count = 0;
  std::uint64_t punct_seed = 0;
  puncture_cmd->add_option("matrix", punct_path, "matrix file")->required();
  puncture_cmd->add_option("--l", punct_l, "rows designated as P1 (default: all)");
  puncture_cmd->add_option("--rows", rows_arg, "comma-separated P1 row indices to delete");
  puncture_cmd->add_option("--suite", suite_count, "run this many seeded random deletions of each size");
  puncture_cmd->add_option("--r", punct_r, "locality (suite mode)");
  puncture_cmd->add_option("--t", punct_t, "availability (suite mode)");
  puncture_cmd->add_option("--d", punct_d, "certified distance (suite mode)");
  puncture_cmd->add_option("--seed", punct_seed, "seed for suite deletions");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "shard-store repair campaign");
  std::string sim_path;
  int sim_l = -1, sim_c = 0, sim_p = 0, sim_m = 1;
  std::uint64_t sim_seed = 0;
  long long trials = 1000;
  bool trace = false;
  simulate->add_option("--matrix", sim_path, "matrix file");
  simulate->add_option("--l", sim_l, "rows designated as P1 (default: all)");
  simulate->add_option("-c,--construction", sim_c, "construction id (alternative to --matrix)");
  simulate->add_option("-p", sim_p, "prime for the construction");
  simulate->add_option("-m", sim_m, "field exponent for the construction");
  simulate->add_option("--seed", sim_seed, "campaign seed");
  simulate->add_option("--trials", trials, "number of erasure trials");
  simulate->add_flag("--trace", trace, "emit one line per trial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  DistanceOptions dopts;
  dopts.workers = workers;

  if (*construct) {
    ReportPrinter rp;
    rp.inputs = {{"construction", construction}, {"p", p}, {"m", m},
                 {"fill_q", fill_q}, {"fill_elem", fill_elem},
                 {"fill_random", fill_random}, {"seed", seed}, {"output", output}};
    FillSpec fill = fill_from_flags(fill_q, fill_elem, fill_random, seed);
    ConstructedCode code = construction == 1 ? construct1(p, m, fill)
                                             : construct2(p, m, fill);
    const std::string header = construction_header(code);
    if (output.empty()) {
      std::cout << "# " << header << '\n';
      write_matrix(std::cout, code.check.H());
      return 0;
    }
    write_matrix_file(output, code.check.H(), header);
    json results = {{"header", header}, {"n", code.declared.n}, {"k", code.declared.k},
                    {"r", code.declared.r}, {"t", code.declared.t},
                    {"d_claimed", code.declared.d}, {"q", code.declared.q},
                    {"fill", code.fill}, {"file", output}};
    if (fill.mode != FillSpec::Mode::None) {
      // Fill variants are re-certified before being reported optimal.
      DistanceCertificate dc = certify_distance(code.check, code.declared.d, dopts);
      results["distance_certified"] = dc.d;
    }
    rp.emit("construct", std::move(results));
    return 0;
  }

  if (*verify) {
    ReportPrinter rp;
    rp.inputs = {{"matrix", matrix_path}, {"l", opt_l}, {"r", opt_r}, {"t", opt_t}};
    GfMatrix h = read_matrix_file(matrix_path);
    int l = opt_l >= 0 ? opt_l : suggest_l(h, opt_r);
    StandardParityCheck code(std::move(h), l);
    IslrcCertificate cert = check_islrc(code, opt_r, opt_t);
    rp.emit("verify", certificate_json(cert));
    return cert.passed ? 0 : 1;
  }

  if (*distance) {
    ReportPrinter rp;
    rp.inputs = {{"matrix", dist_path}, {"mode", mode}, {"claim", claim},
                 {"wmax", wmax}, {"enum_cap", enum_cap},
                 {"subset_budget", subset_budget}};
    dopts.enum_cap = enum_cap;
    dopts.subset_budget = subset_budget;
    StandardParityCheck code = load_check(dist_path, -1);
    if (claim > 0) {
      try {
        DistanceCertificate cert = certify_distance(code, claim, dopts);
        rp.emit("distance", distance_json(cert));
        return 0;
      } catch (const ClaimRefuted& e) {
        json results = distance_json(e.evidence);
        results["refuted"] = true;
        results["reason"] = e.what();
        rp.emit("distance", std::move(results));
        return 1;
      }
    }
    DistanceCertificate cert =
        mode == "subsets"
            ? min_distance_subsets(code, wmax > 0 ? wmax : code.n(), dopts)
        : mode == "enumerate" ? min_distance_enumerate(code, dopts)
                              : [&] {
                                  try {
                                    return min_distance_enumerate(code, dopts);
                                  } catch (const std::invalid_argument&) {
                                    return min_distance_subsets(
                                        code, wmax > 0 ? wmax : code.n(), dopts);
                                  }
                                }();
    rp.emit("distance", distance_json(cert));
    return cert.status == DistanceStatus::BudgetExceeded ? 1 : 0;
  }

  if (*certify) {
    ReportPrinter rp;
    rp.inputs = {{"matrix", cert_path}, {"claim", cert_claim}};
    StandardParityCheck code = load_check(cert_path, -1);
    try {
      DistanceCertificate cert = certify_distance(code, cert_claim, dopts);
      rp.emit("certify", distance_json(cert));
      return 0;
    } catch (const ClaimRefuted& e) {
      json results = distance_json(e.evidence);
      results["refuted"] = true;
      results["reason"] = e.what();
      rp.emit("certify", std::move(results));
      return 1;
    }
  }

  if (*bounds) {
    ReportPrinter rp;
    rp.inputs = {{"n", params.n}, {"k", params.k}, {"d", params.d},
                 {"r", params.r}, {"t", params.t}};
    params.q = 2;  // bounds are field-size-free
    BoundsReport rep = classify(params);
    json results;
    results["d_singleton_locality"] = rep.d_singleton_locality;
    results["d_one_parity_repair"] = rep.d_one_parity_repair;
    results["d_wang_zhang"] = rep.d_wang_zhang;
    results["d_floorsum"] = rep.d_floorsum;
    results["rate_product"] = rep.rate_product.str();
    results["rate_prakash"] = rep.rate_prakash.str();
    results["rate_corollary"] = rep.rate_corollary.str();
    results["length_bound"] = rep.length_bound;
    results["distance_optimal"] = rep.distance_optimal;
    results["rate_optimal"] = rep.rate_optimal;
    results["meets_lower"] = rep.meets_lower;
    rp.emit("bounds", std::move(results));
    return 0;
  }

  if (*puncture_cmd) {
    ReportPrinter rp;
    rp.inputs = {{"matrix", punct_path}, {"l", punct_l}, {"rows", rows_arg},
                 {"suite", suite_count}, {"r", punct_r}, {"t", punct_t},
                 {"d", punct_d}, {"seed", punct_seed}};
    StandardParityCheck code = load_check(punct_path, punct_l);
    if (suite_count > 0) {
      if (punct_r < 1 || punct_t < 1 || punct_d < 1)
        throw CLI::ValidationError("--suite requires --r, --t, and --d");
      auto deletions = random_deletions(code, punct_r, punct_t, suite_count, punct_seed);
      PunctureSuiteSummary summary =
          puncture_suite(code, punct_r, punct_t, punct_d, deletions, dopts);
      json entries = json::array();
      for (const auto& e : summary.entries) {
        json ej = puncture_json(e.report);
        ej.erase("h_sub");
        ej["row_count_ok"] = e.row_count_ok;
        ej["full_rank"] = e.full_rank;
        ej["distance_ok"] = e.distance_ok;
        entries.push_back(std::move(ej));
      }
      json results = {{"seed", summary.seed}, {"certified_d", summary.certified_d},
                      {"degenerate_count", summary.degenerate_count},
                      {"all_passed", summary.all_passed}, {"entries", std::move(entries)}};
      rp.emit("puncture", std::move(results));
      return summary.all_passed ? 0 : 1;
    }
    if (rows_arg.empty()) throw CLI::ValidationError("need --rows or --suite");
    PunctureReport rep = puncture(code, parse_index_list(rows_arg), dopts);
    rp.emit("puncture", puncture_json(rep));
    return 0;
  }

  if (*simulate) {
    ReportPrinter rp;
    rp.inputs = {{"matrix", sim_path}, {"l", sim_l}, {"construction", sim_c},
                 {"p", sim_p}, {"m", sim_m}, {"seed", sim_seed}, {"trials", trials}};
    std::optional<StandardParityCheck> code;
    if (!sim_path.empty()) {
      code = load_check(sim_path, sim_l);
    } else if (sim_c == 1 || sim_c == 2) {
      ConstructedCode cc = sim_c == 1 ? construct1(sim_p, sim_m) : construct2(sim_p, sim_m);
      code = std::move(cc.check);
    } else {
      throw CLI::ValidationError("need --matrix or a construction selector");
    }
    CampaignStats stats = campaign(*code, sim_seed, trials, trace);
    if (trace) {
      for (size_t i = 0; i < stats.traces.size(); ++i) {
        const RepairTrace& t = stats.traces[i];
        std::cerr << "trial " << i << " erased " << t.coord << " set [";
        for (size_t j = 0; j < t.repair_set.size(); ++j)
          std::cerr << (j ? "," : "") << t.repair_set[j];
        std::cerr << "] reads " << t.reads.size() << '\n';
      }
    }
    json results = {{"seed", stats.seed}, {"trials", stats.trials},
                    {"attempted", stats.attempted}, {"succeeded", stats.succeeded},
                    {"mean_reads", stats.mean_reads}, {"max_reads", stats.max_reads}};
    rp.emit("simulate", std::move(results));
    return stats.succeeded == stats.attempted ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
