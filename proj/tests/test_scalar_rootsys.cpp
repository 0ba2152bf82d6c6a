#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ck;
using namespace ckt;

TEST(Scalar, Sqrt2Arithmetic) {
  const Scalar r = Scalar::sqrt2();
  EXPECT_EQ(r * r, Scalar(2));
  EXPECT_EQ(r.inverse() * r, Scalar(1));
  EXPECT_EQ((Scalar(1) + r) * (Scalar(1) - r), Scalar(-1));
  EXPECT_EQ(Scalar(mpq_class(3), mpq_class(-2)).sign(), 1);  // 3 > 2 sqrt2
  EXPECT_EQ(Scalar(mpq_class(2), mpq_class(-2)).sign(), -1);
  EXPECT_THROW(Scalar().inverse(), std::domain_error);
  EXPECT_EQ(Q(2, 4), Q(1, 2));
  EXPECT_EQ(Q(-3, 2).pow(3), Q(-27, 8));
}

TEST(RootSystem, SizesAndNames) {
  EXPECT_EQ(sys(Type::A, 4)->name(), "A3");
  EXPECT_EQ(sys(Type::A, 4)->size(), 6);
  EXPECT_EQ(sys(Type::B, 3)->size(), 9);
  EXPECT_EQ(sys(Type::C, 3)->size(), 9);
  EXPECT_EQ(sys(Type::D, 4)->size(), 12);
  EXPECT_EQ(sys(Type::B, 2)->dim(), 5);
  EXPECT_EQ(sys(Type::C, 2)->dim(), 4);
  EXPECT_THROW(sys(Type::A, 1), std::invalid_argument);
  EXPECT_THROW(sys(Type::D, 1), std::invalid_argument);
}

TEST(RootSystem, RootParsing) {
  EXPECT_EQ(R("e1-e2"), Root::diff(1, 2));
  EXPECT_EQ(R("e2+e5"), Root::sum(2, 5));
  EXPECT_EQ(R("e3"), Root::short_(3));
  EXPECT_EQ(R("2e4"), Root::long_(4));
  EXPECT_EQ(R("2e4").str(), "2e4");
  EXPECT_THROW(R("e2-e1"), std::invalid_argument);
  EXPECT_THROW(R("x"), std::invalid_argument);
}

TEST(RootSystem, RootVectorsA) {
  auto s = sys(Type::A, 4);
  const SparseMatrix& x = root_vector(*s, R("e1-e2"));
  ASSERT_EQ(x.entries().size(), 1u);
  EXPECT_EQ(x.at(s->pos(1), s->pos(2)), Scalar(1));
}

TEST(RootSystem, RootVectorsC) {
  auto s = sys(Type::C, 2);
  const SparseMatrix& x = root_vector(*s, R("2e1"));
  ASSERT_EQ(x.entries().size(), 1u);
  EXPECT_EQ(x.at(s->pos(1), s->pos(-1)), Scalar(1));
}

TEST(RootSystem, ShortRootVectorIsUpperTriangular) {
  // sqrt2 (e_{1,0} - e_{0,-1}); the transposed placement would leave n.
  auto s = sys(Type::B, 2);
  const SparseMatrix& x = root_vector(*s, R("e1"));
  ASSERT_EQ(x.entries().size(), 2u);
  EXPECT_EQ(x.at(s->pos(1), s->pos(0)), Scalar::sqrt2());
  EXPECT_EQ(x.at(s->pos(0), s->pos(-1)), -Scalar::sqrt2());
  for (const auto& [k, v] : x.entries()) EXPECT_LT(k.first, k.second);
}

TEST(RootSystem, Brackets) {
  auto a = sys(Type::A, 4);
  auto b1 = bracket_basis(*a, R("e1-e2"), R("e2-e3"));
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1.at(R("e1-e3")), Scalar(1));
  EXPECT_TRUE(bracket_basis(*a, R("e1-e2"), R("e3-e4")).empty());
  auto c = sys(Type::C, 2);
  auto b2 = bracket_basis(*c, R("e1-e2"), R("2e2"));
  ASSERT_EQ(b2.size(), 1u);
  EXPECT_EQ(b2.at(R("e1+e2")), Scalar(1));
}

TEST(RootSystem, DualScales) {
  EXPECT_EQ(dual_scale(*sys(Type::A, 4), R("e1-e3")), Scalar(1));
  EXPECT_EQ(dual_scale(*sys(Type::B, 2), R("e2")), Q(1, 4));
  EXPECT_EQ(dual_scale(*sys(Type::D, 4), R("e1+e2")), Q(1, 2));
  EXPECT_EQ(dual_scale(*sys(Type::C, 3), R("2e2")), Scalar(1));
  EXPECT_EQ(dual_scale(*sys(Type::C, 3), R("e1-e2")), Q(1, 2));
}

TEST(RootSystem, WeightW0Omega) {
  auto w = weight_w0_omega(*sys(Type::A, 4), 2);
  EXPECT_EQ(w.weight, (std::vector<mpq_class>{1, 1, -1, -1}));
  EXPECT_EQ(w.k, 1);
  EXPECT_EQ(weight_w0_omega(*sys(Type::C, 3), 2).weight, (std::vector<mpq_class>{2, 2, 0}));
  EXPECT_EQ(weight_w0_omega(*sys(Type::A, 3), 1).weight, (std::vector<mpq_class>{1, 0, -1}));
  EXPECT_THROW(weight_w0_omega(*sys(Type::A, 4), 3), std::out_of_range);
}

TEST(RootSystem, RealizationUpToRankFive) {
  for (Type t : {Type::A, Type::B, Type::C, Type::D})
    for (int n = (t == Type::B || t == Type::C) ? 1 : 2; n <= 5; ++n) {
      const Check c = check_realization(sys(t, n));
      EXPECT_TRUE(c.passed) << c.system << ": " << c.data.dump();
    }
}

TEST(RootSystem, DecomposeRejectsNonNilradical) {
  auto s = sys(Type::A, 3);
  SparseMatrix low(s->dim());
  low.add(s->pos(2), s->pos(1), Scalar(1));
  EXPECT_THROW(s->decompose(low), std::logic_error);
}
