#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ck;
using namespace ckt;

TEST(Json, RootRoundtrip) {
  for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
    const auto s = sys(t, 4);
    for (const Root& r : s->roots()) EXPECT_EQ(root_from_json(to_json(r)), r);
  }
  EXPECT_THROW(root_from_json(json{{"kind", "odd"}, {"i", 1}}), std::invalid_argument);
}

TEST(Json, ScalarRoundtrip) {
  for (const Scalar& x : {Q(0), Q(-7, 3), Q(12, 5)}) EXPECT_EQ(scalar_from_json(to_json(x)), x);
}

TEST(Json, SymPolyRoundtrip) {
  for (auto [t, n] : {std::pair{Type::A, 5}, {Type::C, 3}, {Type::D, 4}, {Type::B, 3}}) {
    const auto s = sys(t, n);
    for (int i = 1; i <= cascade_size(t, n); ++i) {
      const SymPoly p = xi_symbol(s, i);
      EXPECT_EQ(sympoly_from_json(s, to_json(p)), p) << s->name() << " " << i;
    }
  }
}

TEST(Json, CascadeShape) {
  const OrderSpec o = OrderSpec::outside_in();
  const json j = to_json(cascade_steps(Type::A, o, 2), o);
  EXPECT_EQ(j.at("order"), "outside-in");
  EXPECT_EQ(j.at("steps").size(), 2u);
  EXPECT_EQ(j.at("steps")[0].at("beta_text"), "e1-e2");
}

TEST(Verify, DeterministicReports) {
  const auto s = sys(Type::A, 5);
  const std::string a = verify_suite(s, 42).to_json().dump();
  const std::string b = verify_suite(s, 42).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_TRUE(verify_suite(s, 42).passed());
  const Report c = verify_suite(sys(Type::C, 3), 1);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.first_failure(), nullptr);
}

TEST(Verify, RandomKostant) {
  Rng rng(1);
  for (const Scalar& x : random_kostant(rng, 20)) EXPECT_FALSE(x == Q(0));
}

TEST(Verify, RenderText) {
  const json j = {{"a", 1}, {"b", {{"c", "x"}}}, {"d", json::array({json{{"e", 2}}})}};
  EXPECT_EQ(render_text(j), "a: 1\nb.c: x\nd[0].e: 2\n");
}
