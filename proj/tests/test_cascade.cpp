#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ck;
using namespace ckt;

namespace {

std::vector<std::string> strs(const std::vector<Root>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::vector<std::string> eps(const Cascade& c, const OrderSpec& o) {
  std::vector<std::string> out;
  for (const auto& b : c.betas()) out.push_back(b.eps_str(o));
  return out;
}

}  // namespace

TEST(Cascade, FiniteCascades) {
  EXPECT_EQ(strs(finite_cascade(Type::A, 4)), (std::vector<std::string>{"e1-e4", "e2-e3"}));
  EXPECT_EQ(strs(finite_cascade(Type::C, 3)), (std::vector<std::string>{"2e1", "2e2", "2e3"}));
  EXPECT_EQ(strs(finite_cascade(Type::B, 3)), (std::vector<std::string>{"e1-e2", "e1+e2", "e3"}));
  EXPECT_EQ(strs(finite_cascade(Type::D, 5)), (std::vector<std::string>{"e1-e2", "e1+e2", "e3-e4", "e3+e4"}));
}

TEST(Cascade, Sizes) {
  EXPECT_EQ(cascade_size(Type::A, 5), 2);
  EXPECT_EQ(cascade_size(Type::A, 6), 3);
  EXPECT_EQ(cascade_size(Type::B, 5), 5);
  EXPECT_EQ(cascade_size(Type::C, 4), 4);
  EXPECT_EQ(cascade_size(Type::D, 4), 4);
  EXPECT_EQ(cascade_size(Type::D, 5), 4);
  for (Type t : {Type::A, Type::B, Type::C, Type::D})
    for (int n = 2; n <= 8; ++n) EXPECT_EQ(static_cast<int>(finite_cascade(t, n).size()), cascade_size(t, n));
}

TEST(Cascade, BPrime) {
  EXPECT_EQ(b_prime(Type::A, 5), finite_cascade(Type::A, 5));
  EXPECT_EQ(strs(b_prime(Type::A, 4)), (std::vector<std::string>{"e1-e4"}));
  EXPECT_EQ(strs(b_prime(Type::C, 3)), (std::vector<std::string>{"2e1", "2e2"}));
}

TEST(Cascade, OuterOrderExamples) {
  const OrderSpec oi = OrderSpec::outside_in();
  EXPECT_EQ(eps(cascade_steps(Type::A, oi, 3), oi), (std::vector<std::string>{"e1-e2", "e3-e4", "e5-e6"}));
  const Cascade nat = cascade_steps(Type::A, OrderSpec::natural(), 5);
  EXPECT_TRUE(nat.steps.empty());
  EXPECT_TRUE(nat.exhausted);
  const OrderSpec n = OrderSpec::natural();
  EXPECT_EQ(eps(cascade_steps(Type::C, n, 3), n), (std::vector<std::string>{"2e1", "2e2", "2e3"}));
  EXPECT_EQ(eps(cascade_steps(Type::B, n, 3), n), (std::vector<std::string>{"e1+e2", "e3+e4", "e5+e6"}));
  EXPECT_EQ(eps(cascade_steps(Type::D, n, 2), n), (std::vector<std::string>{"e1+e2", "e3+e4"}));
  const OrderSpec p = OrderSpec::parse("prefix:1;tail:increasing");
  EXPECT_TRUE(cascade_steps(Type::A, p, 3).steps.empty());
}

TEST(Cascade, GoldensAndAgreement) {
  const Check g = check_cascade_goldens();
  EXPECT_TRUE(g.passed) << g.data.dump();
  for (Type t : {Type::A, Type::B, Type::C, Type::D})
    for (int n = 2; n <= 8; ++n) {
      const Check c = check_cascade_agreement(t, n);
      EXPECT_TRUE(c.passed) << c.system << " " << c.data.dump();
    }
}

TEST(Cascade, MonotonePrefixAndOrthogonality) {
  const std::vector<std::pair<Type, OrderSpec>> cases = {
      {Type::A, OrderSpec::outside_in()},
      {Type::A, OrderSpec::parse("prefix:4,2;tail:outside-in")},
      {Type::C, OrderSpec::natural()},
      {Type::B, OrderSpec::parse("prefix:3,-1;tail:increasing")},
      {Type::D, OrderSpec::natural()},
  };
  for (const auto& [t, o] : cases) {
    Cascade prev = cascade_steps(t, o, 0);
    for (int k = 1; k <= 5; ++k) {
      const Cascade cur = cascade_steps(t, o, k);
      ASSERT_GE(cur.steps.size(), prev.steps.size());
      for (size_t s = 0; s < prev.steps.size(); ++s) EXPECT_EQ(cur.steps[s].beta, prev.steps[s].beta);
      for (size_t s = 1; s < cur.steps.size(); ++s)
        EXPECT_TRUE(std::includes(cur.steps[s].N_k.begin(), cur.steps[s].N_k.end(), cur.steps[s - 1].N_k.begin(),
                                  cur.steps[s - 1].N_k.end()));
      prev = cur;
    }
    if (prev.steps.empty()) continue;
    const Truncation tr = truncate(t, o, prev.steps.back().N_k);
    std::vector<Root> roots;
    for (const auto& b : prev.betas()) roots.push_back(tr.to_finite(b));
    EXPECT_TRUE(strongly_orthogonal(*tr.sys, roots)) << o.str();
  }
}

TEST(Cascade, Truncation) {
  const Truncation id = truncate(Type::A, OrderSpec::natural(), {1, 2, 3});
  EXPECT_EQ(id.labels, (std::vector<int>{1, 2, 3}));
  const Truncation sw = truncate(Type::A, OrderSpec::parse("prefix:1,3,2;tail:increasing"), {1, 2, 3});
  EXPECT_EQ(sw.labels, (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(sw.to_theta(R("e2-e3")).str(), "t3-t2");
  const Truncation c = truncate(Type::C, OrderSpec::natural(), {5, 2});
  EXPECT_EQ(c.labels, (std::vector<int>{2, 5}));
  EXPECT_EQ(c.to_finite(c.to_theta(R("e1+e2"))), R("e1+e2"));
  EXPECT_THROW(truncate(Type::A, OrderSpec::natural(), {}), std::invalid_argument);
  EXPECT_THROW(truncate(Type::A, OrderSpec::natural(), {1, 1}), std::invalid_argument);
}

TEST(Cascade, OrderDsl) {
  for (const std::string s : {"natural", "outside-in", "prefix:1,3,5;tail:decreasing", "prefix:2;tail:outside-in"})
    EXPECT_EQ(OrderSpec::parse(s).str(), s);
  EXPECT_THROW(OrderSpec::parse("prefix:0"), std::invalid_argument);
  EXPECT_THROW(OrderSpec::parse("bogus"), std::invalid_argument);
  EXPECT_FALSE(validate_order(Type::A, OrderSpec::parse("prefix:-1;tail:increasing")).empty());
  EXPECT_THROW(OrderSpec::parse("prefix:1,1;tail:increasing"), std::invalid_argument);
  EXPECT_TRUE(validate_order(Type::C, OrderSpec::parse("prefix:-2;tail:increasing")).empty());
  const OrderSpec oi = OrderSpec::outside_in();
  EXPECT_TRUE(oi.higher(1, 3));
  EXPECT_TRUE(oi.higher(3, 4));
  EXPECT_TRUE(oi.higher(4, 2));
}
