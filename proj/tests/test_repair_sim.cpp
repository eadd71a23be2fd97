#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "islrc/constructions.hpp"
#include "islrc/repair_sim.hpp"

using namespace islrc;

namespace {

IslrcCertificate certified(const ConstructedCode& code) {
  IslrcCertificate cert = check_islrc(code.check, code.declared.r, code.declared.t);
  REQUIRE(cert.passed);
  return cert;
}

}  // namespace

TEST_CASE("encode") {
  ConstructedCode code = construct1(2, 1);
  std::vector<Elem> cw = encode({1, 0, 0, 0}, code.check);
  CHECK(cw == std::vector<Elem>{1, 0, 0, 0, 1, 0, 1, 0});
  CHECK(encode({0, 0, 0, 0}, code.check) == std::vector<Elem>(8, 0));
  CHECK_THROWS_AS(encode({1, 0, 0}, code.check), std::invalid_argument);
  CHECK_THROWS_AS(encode({1, 0, 0, 2}, code.check), std::invalid_argument);
}

TEST_CASE("codewords satisfy H c = 0") {
  ConstructedCode code = construct1(5, 1);
  const FieldSpec& f = *code.check.field();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Elem> msg(code.check.k());
    for (Elem& e : msg) e = static_cast<Elem>(rng() % f.q());
    std::vector<Elem> cw = encode(msg, code.check);
    for (int j = 0; j < code.check.k(); ++j) CHECK(cw[j] == msg[j]);
    for (int i = 0; i < code.check.H().rows(); ++i) {
      Elem acc = 0;
      for (int j = 0; j < code.check.n(); ++j)
        acc = f.add(acc, f.mul(code.check.H().at(i, j), cw[j]));
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("repair after a single erasure") {
  ConstructedCode code = construct1(2, 1);
  IslrcCertificate cert = certified(code);

  SUBCASE("lowest-indexed live repair set is used") {
    ShardStore store(code.check, cert, {1, 1, 0, 1});
    Elem expected = store.value(0);
    store.erase({0});
    CHECK(store.erased(0));
    RepairTrace trace = store.repair_info(0);
    CHECK(trace.success);
    CHECK(trace.recovered == expected);
    CHECK(trace.reads == std::vector<int>{2, 4});
    CHECK_FALSE(store.erased(0));
    CHECK(store.value(0) == expected);
  }

  SUBCASE("falls back to the second repair set") {
    ShardStore store(code.check, cert, {1, 1, 0, 1});
    Elem expected = store.value(0);
    store.erase({0, 2});
    RepairTrace trace = store.repair_info(0);
    CHECK(trace.recovered == expected);
    CHECK(trace.reads == std::vector<int>{3, 6});
  }

  SUBCASE("parity coordinates are out of contract") {
    ShardStore store(code.check, cert, {1, 1, 0, 1});
    CHECK_THROWS_AS(store.repair_info(5), std::invalid_argument);
  }

  SUBCASE("all repair sets blocked") {
    ShardStore store(code.check, cert, {1, 1, 0, 1});
    store.erase({0, 2, 3});
    CHECK_THROWS_AS(store.repair_info(0), std::runtime_error);
  }
}

TEST_CASE("exhaustive repair sweep on small codes") {
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}}) {
    ConstructedCode code = construct1(p, m);
    IslrcCertificate cert = certified(code);
    const FieldSpec& f = *code.check.field();
    const int k = code.check.k();
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= f.q();
    REQUIRE(total <= (1 << 16));
    for (long long msg_code = 0; msg_code < total; ++msg_code) {
      std::vector<Elem> msg(k);
      long long v = msg_code;
      for (int i = 0; i < k; ++i) {
        msg[i] = static_cast<Elem>(v % f.q());
        v /= f.q();
      }
      for (int i = 0; i < k; ++i) {
        for (size_t s = 0; s < cert.repair_sets[i].size(); ++s) {
          ShardStore store(code.check, cert, msg);
          Elem expected = store.value(i);
          // Block the earlier sets so set s is the one exercised.
          std::vector<int> blocked{i};
          for (size_t before = 0; before < s; ++before)
            blocked.push_back(cert.repair_sets[i][before].coords.front());
          store.erase(blocked);
          RepairTrace trace = store.repair_info(i);
          CHECK(trace.recovered == expected);
          CHECK(static_cast<int>(trace.reads.size()) <= code.declared.r);
        }
      }
    }
  }
}

TEST_CASE("parallel read returns t agreeing values over disjoint sets") {
  ConstructedCode code = construct1(5, 1);
  IslrcCertificate cert = certified(code);
  std::vector<Elem> msg(code.check.k());
  std::mt19937_64 rng(17);
  for (Elem& e : msg) e = static_cast<Elem>(rng() % code.check.field()->q());
  ShardStore store(code.check, cert, msg);

  std::vector<Elem> values = store.parallel_read(0);
  CHECK(values.size() == 5);
  for (Elem v : values) CHECK(v == store.value(0));

  std::set<int> touched;
  for (const RepairSet& rs : cert.repair_sets[0])
    for (int j : rs.coords) CHECK(touched.insert(j).second);
  CHECK(touched.size() == 25);
}

TEST_CASE("parallel read on the degenerate t = 1 code") {
  Field gf2 = make_field_shared(2, 1);
  StandardParityCheck c = assemble_H(GfMatrix::identity(gf2, 3), 3);
  IslrcCertificate cert = check_islrc(c, 1, 1);
  REQUIRE(cert.passed);
  ShardStore store(c, cert, {1, 0, 1});
  std::vector<Elem> values = store.parallel_read(0);
  CHECK(values == std::vector<Elem>{1});
}

TEST_CASE("campaigns are deterministic and always succeed") {
  ConstructedCode code = construct1(2, 1);
  CampaignStats a = campaign(code.check, 5, 500);
  CampaignStats b = campaign(code.check, 5, 500);
  CHECK(a.succeeded == 500);
  CHECK(a.attempted == b.attempted);
  CHECK(a.succeeded == b.succeeded);
  CHECK(a.mean_reads == b.mean_reads);
  CHECK(a.max_reads == b.max_reads);
  CHECK(a.max_reads <= code.declared.r);

  CampaignStats c = campaign(code.check, 6, 500);
  CHECK(c.succeeded == 500);  // different seed, same guarantee

  CHECK_THROWS_AS(campaign(code.check, 0, 0), std::invalid_argument);
}

TEST_CASE("audit codeword is never mutated") {
  ConstructedCode code = construct1(2, 1);
  IslrcCertificate cert = certified(code);
  ShardStore store(code.check, cert, {1, 0, 1, 1});
  std::vector<Elem> before = store.audit_codeword();
  store.erase({2});
  store.repair_info(2);
  CHECK(store.audit_codeword() == before);
  for (int i = 0; i < store.n(); ++i) CHECK(store.value(i) == before[i]);
}
