#include <gtest/gtest.h>

#include "levymax/error.hpp"
#include "levymax/golden.hpp"

using namespace levymax;

TEST(Golden, TableShapes) {
  EXPECT_EQ(golden_table(1).cells.size(), 25u);
  EXPECT_EQ(golden_table(2).cells.size(), 25u);
  EXPECT_EQ(golden_table(3).cells.size(), 125u);
  EXPECT_EQ(golden_table(3).active().size(), 110u);
  EXPECT_THROW(golden_table(4), Error);
}

TEST(Golden, PrintedDigits) {
  const auto& t1 = golden_table(1);
  EXPECT_EQ(t1.cells[0].value, 0.0528532412024316);
  EXPECT_EQ(t1.cells[0].a1, -0.075);
  EXPECT_EQ(t1.cells[0].a2, 0.025);
  EXPECT_EQ(t1.cells[24].value, 0.92632726895684);
  EXPECT_EQ(t1.cells[3].err_gwr, 1.6e-05);
  const auto& t3 = golden_table(3);
  EXPECT_EQ(t3.cells[0].value, 0.0426345508873718);
  EXPECT_EQ(t3.cells[124].value, 0.296919211526691);
}

TEST(Golden, ExclusionsAndTolerances) {
  const auto& t3 = golden_table(3);
  for (const auto& c : t3.cells) {
    bool dup = c.T == 5.0 && c.a2 > 0.03 && c.a2 < 0.15;
    EXPECT_EQ(c.excluded, dup) << c.provenance;
    EXPECT_EQ(c.tol, c.T == 15.0 ? 1e-8 : 1e-9);
  }
}

TEST(Golden, TableTwoSharesBlockValues) {
  const auto& t2 = golden_table(2);
  const auto& t3 = golden_table(3);
  for (int i = 0; i < 25; ++i) EXPECT_EQ(t2.cells[i].value, t3.cells[25 + i].value);
}

TEST(Golden, ProvenanceNamesTableRowColumn) {
  for (int id : {1, 2, 3})
    for (const auto& c : golden_table(id).cells) {
      EXPECT_NE(c.provenance.find("Table"), std::string::npos);
      EXPECT_NE(c.provenance.find("row"), std::string::npos);
      EXPECT_NE(c.provenance.find("column"), std::string::npos);
    }
}

TEST(Golden, ModelCalibration) {
  auto m = golden_table(1).model();
  EXPECT_NEAR(m.second_moment(), 0.1, 1e-15);
  EXPECT_EQ(m.profile.nu, 0.2);
}
