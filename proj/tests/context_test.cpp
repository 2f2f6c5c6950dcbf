#include <gtest/gtest.h>

#include "support/testing.hpp"
#include "termrw/context.hpp"

namespace termrw {
namespace {

using namespace termrw::testing;
using C = Context<std::string, std::string>;

TEST(ContextTest, OfTerm) {
  const auto t = parse("f(a,b)");
  EXPECT_TRUE(of_term(t, {}).is_hole());
  EXPECT_EQ(of_term(t, {1}), C::wrap("f", {F("a")}, C::hole(), {}));
  EXPECT_EQ(to_string(of_term(t, {1})), "f(a,[])");
  EXPECT_THROW(of_term(t, {0, 0}), InvalidPosition);
}

TEST(ContextTest, Plug) {
  EXPECT_EQ(plug(C::hole(), parse("g(x)")), parse("g(x)"));
  EXPECT_EQ(plug(C::wrap("f", {F("a")}, C::hole(), {}), F("b")), parse("f(a,b)"));
}

TEST(ContextTest, HolePosition) {
  EXPECT_EQ(hole_position(C::hole()), Position{});
  EXPECT_EQ(hole_position(C::wrap("f", {F("a")}, C::hole(), {})), (Position{1}));
  const auto nested =
      C::wrap("g", {}, C::wrap("f", {}, C::hole(), {F("b")}), {});
  EXPECT_EQ(hole_position(nested), (Position{0, 0}));
  EXPECT_EQ(to_string(nested), "g(f([],b))");
}

TEST(ContextTest, Laws) {
  Generator gen(21);
  for (int i = 0; i < 2000; ++i) {
    const auto t = gen.term(4);
    const auto p = gen.position_in(t);
    const auto s = gen.term(2);
    const auto c = of_term(t, p);
    EXPECT_EQ(hole_position(c), p);
    EXPECT_EQ(plug(c, subterm_at(t, p)), t);
    EXPECT_EQ(plug(c, s), replace_at(t, p, s));
    EXPECT_EQ(of_term(plug(c, s), hole_position(c)), c);
  }
}

}  // namespace
}  // namespace termrw
