#include "lahkit/recurrences.hpp"
#include "lahkit/transition.hpp"

#include <gtest/gtest.h>

using namespace lahkit;

namespace {

Polynomial P(std::vector<long long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return Polynomial(std::move(v));
}

}  // namespace

TEST(RowPolyHL, Examples) {
  EXPECT_EQ(row_poly_hl(1, Level{5}), P({0, 1}));
  EXPECT_EQ(row_poly_hl(4, Level{2}), P({0, 576, 536, 56, 1}));
  EXPECT_EQ(row_poly_hl(3, Level{3}), P({0, 216, 72, 1}));
  EXPECT_THROW(row_poly_hl(0, Level{2}), ParameterError);
}

TEST(RowPolyHL, StepExamples) {
  EXPECT_EQ(row_poly_hl_step(P({0, 1}), 1, Level{1}), P({0, 2, 1}));
  EXPECT_EQ(row_poly_hl_step(P({0, 1}), 1, Level{2}), P({0, 4, 1}));
  EXPECT_EQ(row_poly_hl_step(P({0, 4, 1}), 2, Level{2}), P({0, 36, 20, 1}));
}

TEST(QPoly, Examples) {
  EXPECT_EQ(q_poly(1, Level{4}), P({0, 0, 1}));
  EXPECT_EQ(q_poly(2, Level{2}), P({0, 0, 0, 4, 1}));
  EXPECT_EQ(q_poly(3, Level{2}), P({0, 0, 0, 0, 36, 20, 1}));
  EXPECT_EQ(q_step(P({0, 0, 1}), 1, Level{2}), P({0, 0, 0, 4, 1}));
  EXPECT_EQ(q_step(P({0, 0, 1}), 1, Level{1}), P({0, 0, 0, 2, 1}));
  EXPECT_EQ(q_step(q_poly(2, Level{2}), 2, Level{2}), q_poly(3, Level{2}));
}

TEST(APoly, Examples) {
  EXPECT_EQ(a_poly(1, Level{2}, PolyForm::definition), P({0, 0, 4}));
  EXPECT_EQ(a_poly(1, Level{1}, PolyForm::definition), P({0, 0, 2}));
  EXPECT_EQ(a_poly(2, Level{2}, PolyForm::definition), P({0, 0, 0, 36, 16}));
  EXPECT_EQ(a_poly(2, Level{2}, PolyForm::derivative), P({0, 0, 0, 36, 16}));
}

TEST(LahOrderPoly, Examples) {
  EXPECT_EQ(lah_order_poly(4, Level{2}), P({0, 100, 140, 28, 1}));
  EXPECT_EQ(lah_order_poly(1, Level{9}), P({0, 1}));
  EXPECT_EQ(lah_order_poly(3, Level{3}), P({0, 18, 18, 1}));
  EXPECT_EQ(lah_order_poly_step(P({0, 1}), 1, Level{2}), P({0, 2, 1}));
  EXPECT_EQ(lah_order_poly_step(P({0, 2, 1}), 2, Level{2}), P({0, 10, 10, 1}));
  EXPECT_EQ(lah_order_poly_step(P({0, 1}), 1, Level{4}), P({0, 2, 1}));
}

TEST(BPoly, Examples) {
  EXPECT_EQ(b_poly(1, Level{3}, PolyForm::definition), P({0, 1}));
  EXPECT_EQ(b_poly(2, Level{2}, PolyForm::definition), P({0, 2, 4}));
  EXPECT_EQ(b_poly(2, Level{2}, PolyForm::derivative), P({0, 2, 4}));
}

TEST(LRRowPoly, Examples) {
  EXPECT_EQ(lr_row_poly(4, Level{2}, 1), P({0, 576, 536, 56, 1}));
  EXPECT_EQ(lr_row_poly(2, Level{3}, 2), P({0, 0, 1}));
  EXPECT_EQ(lr_row_poly(3, Level{1}, 2), P({0, 0, 4, 1}));
  EXPECT_THROW(lr_row_poly(1, Level{1}, 2), ParameterError);
  EXPECT_EQ(lr_row_poly_step(P({0, 0, 1}), 2, Level{1}), P({0, 0, 4, 1}));
}

TEST(Recurrences, StepsMatchDirectConstruction) {
  for (unsigned s = 1; s <= 4; ++s) {
    const Level lv{s};
    for (std::size_t n = 1; n <= 8; ++n) {
      EXPECT_EQ(q_step(q_poly(n, lv), n, lv), row_poly_hl(n + 1, lv).shifted_up(n + 1));
      EXPECT_EQ(row_poly_hl_step(row_poly_hl(n, lv), n, lv), row_poly_hl(n + 1, lv));
      EXPECT_EQ(lah_order_poly_step(lah_order_poly(n, lv), n, lv), lah_order_poly(n + 1, lv));
      EXPECT_EQ(a_poly(n, lv, PolyForm::definition), a_poly(n, lv, PolyForm::derivative));
      EXPECT_EQ(b_poly(n, lv, PolyForm::definition), b_poly(n, lv, PolyForm::derivative));
      for (std::size_t r = 0; r <= std::min<std::size_t>(n, 3); ++r) {
        EXPECT_EQ(lr_row_poly_step(lr_row_poly(n, lv, r), n, lv), lr_row_poly(n + 1, lv, r));
      }
    }
  }
}

TEST(Recurrences, FactorialExpansionsUseStirlingRows) {
  for (unsigned s = 1; s <= 3; ++s) {
    const Level lv{s};
    for (std::size_t n = 0; n <= 8; ++n) {
      auto rise = factorial_poly(FactorialKind::rising, n, lv);
      for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(rise.coeff(k), stirling1_hl(n, k, lv).value());
      auto power = convert(Polynomial::monomial(n), BasisTag::falling(lv));
      for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(power.coeff(k), stirling2_hl(n, k, lv).value());
      Polynomial sum;
      for (std::size_t k = 0; k <= n; ++k)
        sum += power.coeff(k) * factorial_poly(FactorialKind::falling, k, lv);
      EXPECT_EQ(sum, Polynomial::monomial(n));
    }
  }
}
