#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ck;
using namespace ckt;

TEST(Oracle, ExpNilpotent) {
  SparseMatrix x(3);
  x.add(0, 1, Q(1));
  x.add(1, 2, Q(1));
  const PolyMatrix e = exp_nilpotent(x);
  EXPECT_EQ(e.degree(), 2);
  EXPECT_EQ(e.coeff(0, 0, 0), Q(1));
  EXPECT_EQ(e.coeff(0, 1, 1), Q(1));
  EXPECT_EQ(e.coeff(0, 2, 2), Q(1, 2));
  EXPECT_EQ(e.coeff(0, 2, 1), Q(0));
  SparseMatrix y(2);
  y.add(0, 1, Q(1));
  y.add(1, 0, Q(1));
  EXPECT_THROW(exp_nilpotent(y), std::invalid_argument);
}

TEST(Oracle, LeadingTermsA) {
  const auto s = sys(Type::A, 4);
  for (int i = 1; i <= 2; ++i) {
    const Expansion e = s_i_expansion(s, i);
    Scalar r;
    EXPECT_TRUE(proportional(e.leading, xi_symbol(s, i), &r)) << i;
    EXPECT_EQ(r, Q(1));
  }
}

TEST(Oracle, OddOrder) {
  const OracleReport r = oracle_compare(sys(Type::D, 3), 1);
  EXPECT_EQ(r.order, 2);
  EXPECT_TRUE(r.passed()) << r.detail;
}

TEST(Oracle, AllWithinBudget) {
  for (auto [t, n] : {std::pair{Type::A, 5}, {Type::C, 3}, {Type::B, 3}, {Type::D, 4}}) {
    const auto s = sys(t, n);
    for (int i = 1; i <= cascade_size(t, n); ++i) {
      const OracleReport r = oracle_compare(s, i);
      EXPECT_TRUE(r.passed()) << s->name() << " i=" << i << " " << r.detail;
      if (t == Type::A) EXPECT_EQ(r.scalar, Q(1));
    }
  }
}

TEST(Oracle, Proportional) {
  const auto s = sys(Type::A, 3);
  Scalar r;
  EXPECT_TRUE(proportional(var(s, "e1-e3").scaled(Q(-3)), var(s, "e1-e3"), &r));
  EXPECT_EQ(r, Q(-3));
  EXPECT_FALSE(proportional(var(s, "e1-e3"), var(s, "e1-e2")));
}
