#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ck;
using namespace ckt;

TEST(Generators, TypeA) {
  const auto s = sys(Type::A, 4);
  EXPECT_EQ(delta_symbol(s, 1), var(s, "e1-e4"));
  EXPECT_EQ(delta_symbol(s, 2), var(s, "e1-e3") * var(s, "e2-e4") - var(s, "e1-e4") * var(s, "e2-e3"));
  EXPECT_EQ(generator_label(Type::A, 2), "delta:2");
}

TEST(Generators, TypeC) {
  const auto s = sys(Type::C, 2);
  EXPECT_EQ(delta_symbol(s, 1), var(s, "2e1").scaled(Q(2)));
  EXPECT_EQ(delta_symbol(s, 2),
            var(s, "e1+e2") * var(s, "e1+e2") - (var(s, "2e1") * var(s, "2e2")).scaled(Q(4)));
}

TEST(Generators, Pfaffians) {
  const auto s = sys(Type::D, 4);
  EXPECT_EQ(xi_symbol(s, 2), var(s, "e1+e2"));
  EXPECT_EQ(xi_symbol(s, 4), var(s, "e1+e2") * var(s, "e3+e4") - var(s, "e1+e3") * var(s, "e2+e4") +
                                 var(s, "e1+e4") * var(s, "e2+e3"));
  EXPECT_EQ(generator_label(Type::D, 4), "p:4");
  EXPECT_EQ(generator_label(Type::B, 3), "d:3");
}

TEST(Generators, OddReadings) {
  const auto s = sys(Type::D, 5);
  const SymPoly a = odd_formula_symbol(s, 1, OddReading::adjugate);
  EXPECT_EQ(odd_formula_symbol(s, 1, OddReading::literal), odd_formula_symbol(s, 1, OddReading::cofactor));
  EXPECT_TRUE(proportional(a, odd_formula_symbol(s, 1, OddReading::literal)));
  EXPECT_EQ(default_odd_reading(), OddReading::adjugate);
  EXPECT_TRUE(is_central(symmetrize(odd_formula_symbol(s, 3, OddReading::adjugate))));
  EXPECT_FALSE(is_central(symmetrize(odd_formula_symbol(s, 3, OddReading::literal))));
}

TEST(Generators, Bordered) {
  EXPECT_TRUE(is_bordered(Type::D, 4, 3));
  EXPECT_FALSE(is_bordered(Type::D, 5, 3));
  EXPECT_TRUE(is_bordered(Type::B, 3, 3));
  EXPECT_FALSE(is_bordered(Type::B, 4, 3));
  const auto s = sys(Type::D, 4);
  EXPECT_TRUE(is_central(d_i(s, 3).element));
}

TEST(Generators, Centrality) {
  for (auto [t, n] : {std::pair{Type::A, 5}, {Type::C, 3}, {Type::B, 3}, {Type::D, 4}, {Type::B, 4}}) {
    const auto s = sys(t, n);
    const int m = cascade_size(t, n);
    for (int i = 1; i <= m; ++i) EXPECT_TRUE(is_central(canonical_generator(s, i))) << s->name() << " " << i;
  }
}

TEST(Generators, CommutatorTables) {
  const auto s = sys(Type::A, 4);
  EXPECT_TRUE(in_cascade(*s, R("e1-e4")));
  EXPECT_FALSE(in_cascade(*s, R("e1-e2")));
  const auto A = a_set(*s, R("e1-e3"));
  EXPECT_FALSE(A.empty());
  for (const Root& g : A) {
    const auto sum = root_sum(*s, R("e1-e3"), g);
    ASSERT_TRUE(sum.has_value());
    const UeaElement lhs = commutator(delta_alpha(s, R("e1-e3")), UeaElement::gen(s, g));
    EXPECT_EQ(lhs, delta_alpha(s, *sum).scaled(Scalar::ratio(commutator_expected_sign(*s, R("e1-e3")), 1)));
  }
  EXPECT_FALSE(root_sum(*s, R("e1-e2"), R("e1-e3")).has_value());
}

TEST(Generators, UMatrix) {
  const auto s = sys(Type::A, 3);
  const UMatrix U(s);
  EXPECT_EQ(U.sym(1, 3), var(s, "e1-e3"));
  EXPECT_THROW(U.minor({1, 1}, {2, 3}), std::invalid_argument);
}
