#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ck;
using namespace ckt;

TEST(Forms, CScalarsExamples) {
  const ScalarSequence a = c_scalars(sys(Type::A, 4), {Q(3), Q(5)});
  EXPECT_EQ(a.c, (std::vector<Scalar>{Q(1), Q(3), Q(-15)}));
  const ScalarSequence c = c_scalars(sys(Type::C, 2), {Q(1), Q(1)});
  EXPECT_EQ(c.c[1], Q(2));
  EXPECT_EQ(c.c[2], Q(-4));
  const ScalarSequence z = c_scalars(sys(Type::A, 4), {Q(0), Q(2)});
  EXPECT_EQ(z.c[1], Q(0));
  EXPECT_EQ(z.c[2], Q(0));
}

TEST(Forms, DerivedFactors) {
  EXPECT_EQ(derived_factors(sys(Type::A, 8)), (std::vector<Scalar>{Q(1), Q(1), Q(-1), Q(-1), Q(1)}));
  EXPECT_EQ(derived_factors(sys(Type::C, 4)), (std::vector<Scalar>{Q(1), Q(2), Q(-4), Q(-8), Q(16)}));
  const ScalarSequence a = c_scalars(sys(Type::A, 8), {Q(1), Q(1), Q(1), Q(1)});
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(a.s[k], Q(a.antidiagonal_sign[k]));
}

TEST(Forms, Reconstruct) {
  const auto s = sys(Type::A, 4);
  EXPECT_EQ(reconstruct_xi(s, {Q(1), Q(3), Q(-15)}), (std::vector<Scalar>{Q(3), Q(5)}));
  EXPECT_THROW(reconstruct_xi(s, {Q(1), Q(0), Q(2)}), std::domain_error);
  for (auto [t, n] : {std::pair{Type::A, 6}, {Type::C, 4}}) {
    const Check r = check_roundtrip(sys(t, n), 5, 50);
    EXPECT_TRUE(r.passed) << r.data.dump();
  }
}

TEST(Forms, ProductFormulaExponents) {
  const std::vector<Scalar> t{Q(2), Q(3)};
  EXPECT_EQ(eval_product_formula(*sys(Type::A, 4), 2, t).exponents, (std::vector<int>{1, 1}));
  EXPECT_EQ(eval_product_formula(*sys(Type::C, 2), 1, t).exponents, (std::vector<int>{1, 0}));
  EXPECT_EQ(eval_product_formula(*sys(Type::A, 2), 1, {Q(7)}).exponents, (std::vector<int>{1}));
  EXPECT_EQ(eval_product_formula(*sys(Type::A, 4), 2, t).value, Q(6));
  for (auto [tp, n] : {std::pair{Type::A, 6}, {Type::C, 3}, {Type::B, 4}, {Type::D, 4}}) {
    const Check c = check_product_formula(sys(tp, n), 3);
    EXPECT_TRUE(c.passed) << c.system << " " << c.data.dump();
  }
}

TEST(Forms, DEval) {
  for (int h = 1; h <= 3; ++h) {
    const Check c = check_d_eval(h, 9);
    EXPECT_TRUE(c.passed) << c.data.dump();
  }
}

TEST(Forms, Polarization) {
  for (auto [t, n] : {std::pair{Type::A, 5}, {Type::A, 4}, {Type::C, 3}}) {
    const auto s = sys(t, n);
    std::vector<Scalar> xi(cascade_size(t, n), Q(1));
    const LinearForm f = cascade_form(*s, xi);
    const PolarizationReport r = check_polarization(*s, polarization_roots(*s), f);
    EXPECT_TRUE(r.passed()) << s->name();
    EXPECT_EQ(r.dimension, r.expected_dimension);
    EXPECT_FALSE(check_polarization(*s, s->roots(), f).isotropic);
    EXPECT_FALSE(check_polarization(*s, {}, LinearForm{}).maximal);
  }
}

TEST(Forms, PolarizationInfinite) {
  Rng rng(3);
  for (int n = 2; n <= 7; ++n) {
    const Truncation tr = truncate(Type::A, OrderSpec::outside_in(), [&] {
      std::vector<int> M;
      for (int a = 1; a <= n; ++a) M.push_back(a);
      return M;
    }());
    const LinearForm f = cascade_form(*tr.sys, random_kostant(rng, cascade_size(Type::A, n)));
    EXPECT_TRUE(check_polarization(*tr.sys, polarization_roots_infinite(tr), f).passed()) << n;
  }
  const Truncation t4 = truncate(Type::A, OrderSpec::outside_in(), {1, 2, 3, 4});
  const LinearForm f4 = cascade_form(*t4.sys, {Q(1), Q(1)});
  EXPECT_FALSE(check_polarization(*t4.sys, polarization_roots_infinite(t4, true), f4).passed());
  for (auto [t, n] : {std::pair{Type::A, 6}, {Type::C, 3}}) {
    const Check c = check_polarization(sys(t, n), 4);
    EXPECT_TRUE(c.passed) << c.data.dump();
  }
}

TEST(Forms, WeylPairs) {
  for (auto [t, n, count] : {std::tuple{Type::A, 3, 1}, {Type::A, 2, 0}, {Type::A, 5, 4}, {Type::C, 2, 1}, {Type::C, 3, 3}}) {
    const auto s = sys(t, n);
    std::vector<Scalar> xi(cascade_size(t, n), Q(1));
    const WeylReport r = weyl_pairs(s, c_scalars(s, xi).c);
    EXPECT_TRUE(r.passed()) << s->name() << " " << r.first_failure;
    EXPECT_EQ(static_cast<int>(r.pairs.size()), count) << s->name();
    EXPECT_EQ(r.sign_deviations, 0);
    for (const auto& p : r.pairs) EXPECT_EQ(p.observed_sign, p.stated_sign);
  }
}

TEST(Forms, Stability) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_TRUE(stability(Type::A, n, std::vector<Scalar>(4, Q(2))).passed()) << n;
    EXPECT_TRUE(stability(Type::C, n, std::vector<Scalar>(8, Q(3))).passed()) << n;
  }
}
