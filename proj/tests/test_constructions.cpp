#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "islrc/constructions.hpp"

using namespace islrc;

namespace {

// Frozen reference blocks: positions of each field element in the GF(5)
// additive table.
const int kM0[5][5] = {{1, 0, 0, 0, 0},
                       {0, 0, 0, 0, 1},
                       {0, 0, 0, 1, 0},
                       {0, 0, 1, 0, 0},
                       {0, 1, 0, 0, 0}};
const int kM1[5][5] = {{0, 1, 0, 0, 0},
                       {1, 0, 0, 0, 0},
                       {0, 0, 0, 0, 1},
                       {0, 0, 0, 1, 0},
                       {0, 0, 1, 0, 0}};
const int kM2[5][5] = {{0, 0, 1, 0, 0},
                       {0, 1, 0, 0, 0},
                       {1, 0, 0, 0, 0},
                       {0, 0, 0, 0, 1},
                       {0, 0, 0, 1, 0}};
const int kM3[5][5] = {{0, 0, 0, 1, 0},
                       {0, 0, 1, 0, 0},
                       {0, 1, 0, 0, 0},
                       {1, 0, 0, 0, 0},
                       {0, 0, 0, 0, 1}};
const int kM4[5][5] = {{0, 0, 0, 0, 1},
                       {0, 0, 0, 1, 0},
                       {0, 0, 1, 0, 0},
                       {0, 1, 0, 0, 0},
                       {1, 0, 0, 0, 0}};

using Block = const int (*)[5];

void check_block(const GfMatrix& p1, int bi, int bj, Block expected) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(p1.at(bi * 5 + i, bj * 5 + j) == expected[i][j]);
}

int max_pairwise_intersection(const GfMatrix& p1) {
  int worst = 0;
  for (int i = 0; i < p1.rows(); ++i)
    for (int j = i + 1; j < p1.rows(); ++j) {
      Support a = p1.row_support(i), b = p1.row_support(j);
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      worst = std::max(worst, static_cast<int>(common.size()));
    }
  return worst;
}

}  // namespace

TEST_CASE("indicator blocks match the frozen GF(5) reference") {
  FieldSpec gf5 = make_field(5, 1);
  GfMatrix m0 = indicator_block(gf5, 0);
  GfMatrix m3 = indicator_block(gf5, 3);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(m0.at(i, j) == kM0[i][j]);
      CHECK(m3.at(i, j) == kM3[i][j]);
    }

  FieldSpec gf2 = make_field(2, 1);
  GfMatrix m1 = indicator_block(gf2, 1);
  CHECK(m1.at(0, 0) == 0);
  CHECK(m1.at(0, 1) == 1);
  CHECK(m1.at(1, 0) == 1);
  CHECK(m1.at(1, 1) == 0);
}

TEST_CASE("indicator blocks are permutation matrices") {
  for (auto [p, m] : {std::pair{2, 2}, {3, 1}, {7, 1}}) {
    FieldSpec f = make_field(p, m);
    for (int c = 0; c < f.q(); ++c) {
      GfMatrix block = indicator_block(f, static_cast<Elem>(c));
      for (int i = 0; i < f.q(); ++i) {
        CHECK(block.row_weight(i) == 1);
        CHECK(block.col_weight(i) == 1);
      }
    }
  }
}

TEST_CASE("construct1(5,1) reproduces the frozen (50,25) block layout") {
  ConstructedCode code = construct1(5, 1);
  CHECK(code.declared.n == 50);
  CHECK(code.declared.k == 25);
  CHECK(code.declared.r == 5);
  CHECK(code.declared.t == 5);
  CHECK(code.declared.d == 6);
  CHECK(code.check.l() == 25);

  GfMatrix p1 = code.check.P1();
  Block expected[5][5] = {{kM0, kM0, kM0, kM0, kM0},
                          {kM0, kM1, kM2, kM3, kM4},
                          {kM0, kM2, kM4, kM1, kM3},
                          {kM0, kM3, kM1, kM4, kM2},
                          {kM0, kM4, kM3, kM2, kM1}};
  for (int bi = 0; bi < 5; ++bi)
    for (int bj = 0; bj < 5; ++bj) check_block(p1, bi, bj, expected[bi][bj]);
}

TEST_CASE("construct1(2,1) assembled by hand") {
  ConstructedCode code = construct1(2, 1);
  CHECK(code.declared.n == 8);
  CHECK(code.declared.k == 4);
  CHECK(code.declared.r == 2);
  CHECK(code.declared.t == 2);
  CHECK(code.declared.d == 3);
  const int expected[4][4] = {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
  GfMatrix p1 = code.check.P1();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(p1.at(i, j) == expected[i][j]);
}

TEST_CASE("construct1(3,1) declared parameters") {
  ConstructedCode code = construct1(3, 1);
  CHECK(code.declared.n == 18);
  CHECK(code.declared.k == 9);
  CHECK(code.declared.r == 3);
  CHECK(code.declared.t == 3);
  CHECK(code.declared.d == 4);
}

TEST_CASE("construct2 parameters and structure") {
  ConstructedCode c51 = construct2(5, 1);
  CHECK(c51.declared.n == 62);
  CHECK(c51.declared.k == 31);
  CHECK(c51.declared.r == 6);
  CHECK(c51.declared.t == 6);
  CHECK(c51.declared.d == 7);
  GfMatrix p1 = c51.check.P1();
  CHECK(p1.rows() == 31);
  CHECK(p1.cols() == 31);
  // Top row: ones across the first 6 columns, zeros after.
  for (int j = 0; j < 31; ++j) CHECK(p1.at(0, j) == (j < 6 ? 1 : 0));
  // Bottom-right lower block is the construct1(5,1) P1.
  GfMatrix inner = construct1(5, 1).check.P1();
  for (int i = 0; i < 25; ++i)
    for (int j = 0; j < 25; ++j) CHECK(p1.at(6 + i, 6 + j) == inner.at(i, j));

  ConstructedCode c21 = construct2(2, 1);
  CHECK(c21.declared.n == 14);
  CHECK(c21.declared.k == 7);
  CHECK(c21.declared.r == 3);
  CHECK(c21.declared.t == 3);
  CHECK(c21.declared.d == 4);
  GfMatrix f7 = c21.check.P1();
  for (int i = 0; i < 7; ++i) {
    CHECK(f7.row_weight(i) == 3);
    CHECK(f7.col_weight(i) == 3);
  }

  ConstructedCode c31 = construct2(3, 1);
  CHECK(c31.declared.n == 26);
  CHECK(c31.declared.k == 13);
  CHECK(c31.declared.r == 4);
  CHECK(c31.declared.t == 4);
  CHECK(c31.declared.d == 5);
}

TEST_CASE("assemble_H cases") {
  Field gf2 = make_field_shared(2, 1);
  ConstructedCode code = construct1(5, 1);
  StandardParityCheck h = assemble_H(code.check.P1(), 25);
  CHECK(h.H().rows() == 25);
  CHECK(h.H().cols() == 50);

  StandardParityCheck no_locality = assemble_H(GfMatrix::zero(gf2, 2, 3), 0);
  CHECK(no_locality.n() == 5);
  CHECK(no_locality.k() == 3);
  CHECK(no_locality.l() == 0);

  StandardParityCheck c2 = assemble_H(construct2(2, 1).check.P1(), 7);
  CHECK(c2.H().rows() == 7);
  CHECK(c2.H().cols() == 14);
  CHECK_THROWS_AS(assemble_H(GfMatrix::zero(gf2, 2, 3), 3), std::invalid_argument);
}

TEST_CASE("structural invariants of both families") {
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
    int g = 1;
    for (int i = 0; i < m; ++i) g *= p;

    ConstructedCode c1 = construct1(p, m);
    GfMatrix p1 = c1.check.P1();
    for (int i = 0; i < p1.rows(); ++i) CHECK(p1.row_weight(i) == g);
    for (int j = 0; j < p1.cols(); ++j) CHECK(p1.col_weight(j) == g);
    CHECK(max_pairwise_intersection(p1) <= 1);
    CHECK(2 * c1.declared.k == c1.declared.n);  // rate 1/2

    // Rows of one block row form a parallel class covering all k columns.
    for (int br = 0; br < g; ++br) {
      std::vector<bool> covered(p1.cols(), false);
      for (int i = br * g; i < (br + 1) * g; ++i)
        for (int j : p1.row_support(i)) {
          CHECK_FALSE(covered[j]);
          covered[j] = true;
        }
      for (int j = 0; j < p1.cols(); ++j) CHECK(covered[j]);
    }

    ConstructedCode c2 = construct2(p, m);
    GfMatrix q1 = c2.check.P1();
    for (int i = 0; i < q1.rows(); ++i) CHECK(q1.row_weight(i) == g + 1);
    for (int j = 0; j < q1.cols(); ++j) CHECK(q1.col_weight(j) == g + 1);
    CHECK(max_pairwise_intersection(q1) <= 1);
    CHECK(2 * c2.declared.k == c2.declared.n);
  }
}

TEST_CASE("fill preserves the support pattern and the certificate") {
  Field gf5 = make_field_shared(5, 1);
  ConstructedCode plain = construct1(3, 1);
  for (const FillSpec& fill :
       {FillSpec::uniform(gf5, 2), FillSpec::random(gf5, 42)}) {
    ConstructedCode filled = construct1(3, 1, fill);
    CHECK(filled.declared.q == 5);
    GfMatrix a = plain.check.P1(), b = filled.check.P1();
    for (int i = 0; i < a.rows(); ++i) CHECK(a.row_support(i) == b.row_support(i));

    IslrcCertificate ca = check_islrc(plain.check, 3, 3);
    IslrcCertificate cb = check_islrc(filled.check, 3, 3);
    CHECK(ca.passed);
    CHECK(cb.passed);
    CHECK(ca.r_observed == cb.r_observed);
    CHECK(ca.t_observed == cb.t_observed);
    REQUIRE(ca.repair_sets.size() == cb.repair_sets.size());
    for (size_t i = 0; i < ca.repair_sets.size(); ++i) {
      REQUIRE(ca.repair_sets[i].size() == cb.repair_sets[i].size());
      for (size_t s = 0; s < ca.repair_sets[i].size(); ++s)
        CHECK(ca.repair_sets[i][s].coords == cb.repair_sets[i][s].coords);
    }
  }
}

TEST_CASE("fill with seeded randomness is reproducible") {
  Field gf4 = make_field_shared(2, 2);
  ConstructedCode a = construct1(2, 1, FillSpec::random(gf4, 7));
  ConstructedCode b = construct1(2, 1, FillSpec::random(gf4, 7));
  ConstructedCode c = construct1(2, 1, FillSpec::random(gf4, 8));
  CHECK(a.check.H() == b.check.H());
  CHECK_FALSE(a.check.H() == c.check.H());
}

TEST_CASE("fill errors") {
  Field gf4 = make_field_shared(2, 2);
  CHECK_THROWS_AS(construct1(2, 1, FillSpec::uniform(gf4, 0)), std::invalid_argument);
  CHECK_THROWS_AS(construct1(2, 1, FillSpec::uniform(gf4, 4)), std::invalid_argument);
  CHECK_THROWS_AS(construct1(101, 1), std::invalid_argument);  // size cap
}

TEST_CASE("construction header format") {
  ConstructedCode code = construct1(5, 1);
  CHECK(construction_header(code) ==
        "construction=1 p=5 m=1 n=50 k=25 r=5 t=5 d_claimed=6 q=2");
}
