#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "islrc/constructions.hpp"
#include "islrc/puncture.hpp"

using namespace islrc;

TEST_CASE("covered columns and pencils on the (8,4) code") {
  ConstructedCode code = construct1(2, 1);
  CHECK(covered_columns(code.check, {1, 3}) == std::vector<int>{1, 2, 3, 5, 7});
  CHECK(covered_columns(code.check, {3}) == std::vector<int>{1, 2, 7});
  CHECK(rows_covering(code.check, 0) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(covered_columns(code.check, {4}), std::out_of_range);
  CHECK_THROWS_AS(rows_covering(code.check, 4), std::out_of_range);
}

TEST_CASE("(8,4) deletion {1,3} gives the [3,1,3] MDS code") {
  ConstructedCode code = construct1(2, 1);
  PunctureReport rep = puncture(code.check, {1, 3});
  CHECK(rep.gamma == 5);
  REQUIRE(rep.h_sub.rows() == 2);
  REQUIRE(rep.h_sub.cols() == 3);
  const int expected[2][3] = {{1, 1, 0}, {1, 0, 1}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(rep.h_sub.at(i, j) == expected[i][j]);
  CHECK(rep.rank == 2);
  CHECK(rep.sub_dim == 1);
  CHECK(rep.sub_distance == 3);
  CHECK(rep.singleton_defect == 0);
  CHECK(rep.classification == PunctureClass::Mds);
}

TEST_CASE("(8,4) deletion {3} gives the [5,2,3] almost-MDS code") {
  ConstructedCode code = construct1(2, 1);
  PunctureReport rep = puncture(code.check, {3});
  CHECK(rep.gamma == 3);
  REQUIRE(rep.h_sub.rows() == 3);
  REQUIRE(rep.h_sub.cols() == 5);
  const int expected[3][5] = {{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 1, 0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) CHECK(rep.h_sub.at(i, j) == expected[i][j]);
  CHECK(rep.rank == 3);
  CHECK(rep.sub_dim == 2);
  CHECK(rep.sub_distance == 3);
  CHECK(rep.singleton_defect == 1);
  CHECK(rep.classification == PunctureClass::AlmostMds);
}

TEST_CASE("(8,4) deletion {0,1} is degenerate") {
  ConstructedCode code = construct1(2, 1);
  PunctureReport rep = puncture(code.check, {0, 1});
  CHECK(rep.h_sub == GfMatrix::identity(code.check.field(), 2));
  CHECK(rep.sub_dim == 0);
  CHECK_FALSE(rep.sub_distance.has_value());
  CHECK(rep.classification == PunctureClass::Degenerate);
}

TEST_CASE("degenerate deletions are exactly the info-covering ones") {
  ConstructedCode code = construct1(2, 1);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      PunctureReport rep = puncture(code.check, {a, b});
      std::set<int> info_cols;
      for (int j : covered_columns(code.check, {a, b}))
        if (j < code.check.k()) info_cols.insert(j);
      bool covers_all = info_cols.size() == static_cast<size_t>(code.check.k());
      CHECK((rep.classification == PunctureClass::Degenerate) == covers_all);
    }
}

TEST_CASE("kept identity columns force full row rank") {
  ConstructedCode code = construct1(3, 1);
  for (std::vector<int> del : {std::vector<int>{0}, {1, 5}, {0, 2, 7}}) {
    PunctureReport rep = puncture(code.check, del);
    CHECK(rep.rank == rep.h_sub.rows());
  }
}

TEST_CASE("puncture suite on the (8,4) code") {
  ConstructedCode code = construct1(2, 1);
  // ceil(kt/r) - t = 2 and 1.
  std::vector<std::vector<int>> deletions = {{1, 3}, {0, 1}, {3}, {0}};
  PunctureSuiteSummary summary = puncture_suite(code.check, 2, 2, 3, deletions);
  CHECK(summary.entries.size() == 4);
  CHECK(summary.all_passed);
  CHECK(summary.degenerate_count == 1);  // {0,1} covers every info column
  CHECK(summary.entries[0].report.classification == PunctureClass::Mds);
  CHECK(summary.entries[2].report.classification == PunctureClass::AlmostMds);

  CHECK_THROWS_AS(puncture_suite(code.check, 2, 2, 3, {{0, 1, 2}}),
                  std::invalid_argument);  // wrong deletion size
  // ceil(kt/r) = t here, so no deletion size is admissible.
  ConstructedCode tight = construct1(2, 1);
  CHECK_THROWS_AS(puncture_suite(tight.check, 4, 2, 3, {}), std::invalid_argument);
}

TEST_CASE("random deletions are seeded and well-formed") {
  ConstructedCode code = construct1(5, 1);
  auto a = random_deletions(code.check, 5, 5, 10, 3);
  auto b = random_deletions(code.check, 5, 5, 10, 3);
  auto c = random_deletions(code.check, 5, 5, 10, 4);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  REQUIRE(a.size() == 20);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].size() == (i < 10 ? 20u : 19u));
    std::set<int> uniq(a[i].begin(), a[i].end());
    CHECK(uniq.size() == a[i].size());
    for (int row : a[i]) {
      CHECK(row >= 0);
      CHECK(row < 25);
    }
  }
}

TEST_CASE("pencil complement deletions on the (50,25) code") {
  // For one information column j: deleting the 20 rows outside the pencil
  // through j leaves the 5 covering rows on 6 columns, a [6,1,6] MDS code.
  ConstructedCode code = construct1(5, 1);
  const int j = 7;
  std::vector<int> pencil = rows_covering(code.check, j);
  REQUIRE(pencil.size() == 5);
  std::vector<int> complement;
  for (int row = 0; row < 25; ++row)
    if (std::find(pencil.begin(), pencil.end(), row) == pencil.end())
      complement.push_back(row);
  PunctureReport rep = puncture(code.check, complement);
  CHECK(rep.h_sub.rows() == 5);
  CHECK(rep.h_sub.cols() == 6);
  CHECK(rep.rank == 5);
  CHECK(rep.sub_dim == 1);
  CHECK(rep.sub_distance == 6);
  CHECK(rep.classification == PunctureClass::Mds);
}
