#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ck;
using namespace ckt;

namespace {

UeaElement random_element(const SystemPtr& s, Rng& rng, int terms, int max_deg) {
  UeaElement u(s);
  std::uniform_int_distribution<int> id(0, s->size() - 1), deg(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    UeaElement m = UeaElement::constant(s, random_nonzero(rng));
    for (int d = deg(rng); d > 0; --d) m = m * UeaElement::gen(s, id(rng));
    u += m;
  }
  return u;
}

}  // namespace

TEST(Uea, BasicBracket) {
  const auto s = sys(Type::A, 3);
  const UeaElement a = UeaElement::gen(s, R("e1-e2")), b = UeaElement::gen(s, R("e2-e3"));
  EXPECT_EQ(commutator(a, b), UeaElement::gen(s, R("e1-e3")));
  EXPECT_EQ(commutator(b, a), -UeaElement::gen(s, R("e1-e3")));
  EXPECT_EQ(a * b - b * a, UeaElement::gen(s, R("e1-e3")));
}

TEST(Uea, CommutatorRoutesAgree) {
  Rng rng(7);
  for (auto [t, n] : {std::pair{Type::A, 4}, {Type::B, 3}, {Type::C, 3}, {Type::D, 4}}) {
    const auto s = sys(t, n);
    for (int k = 0; k < 10; ++k) {
      const UeaElement a = random_element(s, rng, 3, 3), b = random_element(s, rng, 3, 2);
      EXPECT_EQ(commutator(a, b), commutator_direct(a, b)) << s->name();
    }
  }
}

TEST(Uea, Associativity) {
  Rng rng(11);
  const auto s = sys(Type::C, 3);
  for (int k = 0; k < 10; ++k) {
    const UeaElement a = random_element(s, rng, 2, 2), b = random_element(s, rng, 2, 2),
                     c = random_element(s, rng, 2, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Uea, SymmetrizeAndWords) {
  const auto s = sys(Type::A, 3);
  const SymPoly p = var(s, "e1-e2") * var(s, "e2-e3");
  const UeaElement a = UeaElement::gen(s, R("e1-e2")), b = UeaElement::gen(s, R("e2-e3"));
  EXPECT_EQ(symmetrize(p), (a * b + b * a).scaled(Q(1, 2)));
  EXPECT_THROW(commuting_words(p), std::invalid_argument);
  const SymPoly q = var(s, "e1-e3") * var(s, "e1-e2");
  EXPECT_EQ(commuting_words(q), symmetrize(q));
  EXPECT_TRUE(factors_commute(*s, q.terms().begin()->first));
}

TEST(Uea, Centrality) {
  const auto s = sys(Type::A, 3);
  EXPECT_TRUE(is_central(UeaElement::gen(s, R("e1-e3"))));
  EXPECT_FALSE(is_central(UeaElement::gen(s, R("e1-e2"))));
  EXPECT_GE(first_noncentral(UeaElement::gen(s, R("e1-e2"))), 0);
  EXPECT_EQ(first_noncentral(UeaElement::constant(s, Q(3))), -1);
}

TEST(Uea, CenterBasisBudget) {
  EXPECT_THROW(center_basis_upto(sys(Type::A, 6), 2), std::length_error);
  EXPECT_THROW(center_basis_upto(sys(Type::A, 3), 6), std::length_error);
  const auto basis = center_basis_upto(sys(Type::A, 3), 2);
  // 1, e13, e13^2
  EXPECT_EQ(basis.size(), 3u);
}

TEST(Uea, Evaluation) {
  const auto s = sys(Type::A, 3);
  const SymPoly p = var(s, "e1-e2") * var(s, "e2-e3") + SymPoly::constant(s, Q(2));
  LinearForm f;
  f.set(R("e1-e2"), Q(3));
  f.set(R("e2-e3"), Q(-1, 2));
  EXPECT_EQ(eval_sym(p, f), Q(1, 2));
  EXPECT_EQ(monomials_of_degree({0, 1}, 2).size(), 3u);
}
