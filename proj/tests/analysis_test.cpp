#include <gtest/gtest.h>

#include "support/testing.hpp"
#include "termrw/analysis.hpp"

namespace termrw {
namespace {

using namespace termrw::testing;

TEST(NormalizeTest, Examples) {
  auto r = nf(rules({{"f(x)", "x"}}), parse("f(f(a))"), 10);
  EXPECT_EQ(r.final_term, parse("a"));
  EXPECT_EQ(r.steps, 2u);
  EXPECT_TRUE(r.reached_normal_form);

  r = nf(rules({{"f(x)", "x"}}), parse("a"), 0);
  EXPECT_EQ(r.final_term, parse("a"));
  EXPECT_EQ(r.steps, 0u);
  EXPECT_TRUE(r.reached_normal_form);

  r = nf(rules({{"a", "f(a)"}}), parse("a"), 5);
  EXPECT_EQ(r.final_term, parse("f(f(f(f(f(a)))))"));
  EXPECT_EQ(r.steps, 5u);
  EXPECT_FALSE(r.reached_normal_form);
}

TEST(NormalizeTest, LeftmostInnermostChoice) {
  // both a's are innermost; the left one goes first
  const auto rs = rules({{"a", "b"}});
  auto r = nf(rs, parse("h(a,a)"), 1);
  EXPECT_EQ(r.final_term, parse("h(b,a)"));
  EXPECT_FALSE(r.reached_normal_form);
}

// Replays each step through rewrite_step and checks the chosen reduct.
TEST(NormalizeTest, ReplayOnRandomSystems) {
  Generator gen(71);
  for (int i = 0; i < 500; ++i) {
    const auto rs = gen.valid_rules(1 + gen.below(3), 2);
    const auto t = gen.term(3);
    const std::size_t fuel = gen.below(8);
    const auto r = nf(rs, t, fuel);
    EXPECT_EQ(r, nf(rs, t, fuel));
    EXPECT_LE(r.steps, fuel);
    T cur = t;
    for (std::size_t s = 0; s < r.steps; ++s) {
      const auto inner = rewrite_step(rs, cur, Strategy::Innermost);
      ASSERT_FALSE(inner.empty());
      cur = inner.front().result;
    }
    EXPECT_EQ(cur, r.final_term);
    EXPECT_EQ(r.reached_normal_form, is_normal_form(rs, cur));
  }
}

using Verdict = ConfluenceVerdict<std::string, std::string>;

TEST(LocalConfluenceTest, Joinable) {
  const auto v = check_local_confluence(
      rules({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}}), 10);
  EXPECT_TRUE(std::holds_alternative<LocallyConfluent>(v));
}

TEST(LocalConfluenceTest, Witness) {
  const auto v = check_local_confluence(rules({{"f(a)", "b"}, {"a", "c"}}), 10);
  const auto* no = std::get_if<NotConfluent<std::string, std::string>>(&v);
  ASSERT_NE(no, nullptr);
  const auto c = canonical_names(no->witness);
  EXPECT_EQ(to_string(c.left), "f(c)");
  EXPECT_EQ(to_string(c.right), "b");
  EXPECT_EQ(to_string(no->nf_left), "f(c)");
  EXPECT_EQ(to_string(no->nf_right), "b");
}

TEST(LocalConfluenceTest, FuelExhaustion) {
  const auto v = check_local_confluence(rules({{"a", "f(a)"}, {"a", "b"}}), 50);
  const auto* u = std::get_if<Unknown>(&v);
  ASSERT_NE(u, nullptr);
  // (f(a), b) and its mirror (b, f(a)) both diverge on the f(a) side
  EXPECT_EQ(u->unresolved, 2u);
}

TEST(LocalConfluenceTest, OverlapFreeSystemsNeedNoFuel) {
  EXPECT_TRUE(std::holds_alternative<LocallyConfluent>(
      check_local_confluence(std::vector<R>{}, 0)));
  EXPECT_TRUE(std::holds_alternative<LocallyConfluent>(
      check_local_confluence(rules({{"g(x)", "x"}, {"h(x)", "a"}}), 0)));
}

TEST(LocalConfluenceTest, SelfOverlapIsJoinable) {
  EXPECT_TRUE(std::holds_alternative<LocallyConfluent>(
      check_local_confluence(rules({{"f(f(x))", "f(x)"}}), 10)));
}

TEST(LocalConfluenceTest, WitnessPreferredOverUnknown) {
  // the first pair diverges, a later one has distinct normal forms
  const auto v = check_local_confluence(
      rules({{"a", "f(a)"}, {"a", "b"}, {"g(c)", "d"}, {"c", "e"}}), 20);
  EXPECT_TRUE((std::holds_alternative<NotConfluent<std::string, std::string>>(v)));
}

TEST(LocalConfluenceTest, MonotoneInFuel) {
  Generator gen(72);
  for (int i = 0; i < 300; ++i) {
    const auto rs = gen.valid_rules(1 + gen.below(3), 2);
    const auto low = check_local_confluence(rs, 3);
    const auto high = check_local_confluence(rs, 30);
    if (std::holds_alternative<LocallyConfluent>(low)) {
      EXPECT_TRUE(std::holds_alternative<LocallyConfluent>(high));
    }
    if (std::holds_alternative<NotConfluent<std::string, std::string>>(low)) {
      EXPECT_FALSE(std::holds_alternative<LocallyConfluent>(high));
    }
  }
}

}  // namespace
}  // namespace termrw
