#include <gtest/gtest.h>

#include "support/testing.hpp"
#include "termrw/substitution.hpp"
#include "termrw/term.hpp"

namespace termrw {
namespace {

using namespace termrw::testing;

std::size_t count_nodes(const T& t) {
  return fold(
      t, [](const std::string&) -> std::size_t { return 1; },
      [](const std::string&, std::vector<std::size_t> cs) {
        std::size_t n = 1;
        for (auto c : cs) n += c;
        return n;
      });
}

TEST(TermTest, Fold) {
  EXPECT_EQ(count_nodes(parse("x")), 1u);
  EXPECT_EQ(count_nodes(parse("g(a)")), 2u);
  EXPECT_EQ(count_nodes(parse("g(g(x))")), 3u);
}

TEST(TermTest, MapSymbols) {
  const auto id = [](const std::string& s) { return s; };
  EXPECT_EQ(map_symbols(parse("x"), id, id), parse("x"));
  EXPECT_EQ(map_symbols(parse("f(x,a)"), [](const std::string& v) { return v + "'"; },
                        id),
            F("f", {V("x'"), F("a")}));
  // Changing both namespaces to integers keeps the shape.
  const auto t = parse("f(g(x),f(y,a))");
  const auto u = map_symbols(t, [](const std::string& v) { return int(v[0]); },
                             [](const std::string& f) { return f.size(); });
  EXPECT_EQ(size(u), size(t));
  EXPECT_EQ(positions(u), positions(t));
}

TEST(TermTest, VarsAndFuns) {
  EXPECT_TRUE(vars(parse("a")).empty());
  EXPECT_EQ(vars(parse("f(x,x)")), (std::vector<std::string>{"x", "x"}));
  EXPECT_EQ(vars(parse("f(g(y),x)")), (std::vector<std::string>{"y", "x"}));
  EXPECT_TRUE(funs(parse("x")).empty());
  EXPECT_EQ(funs(parse("f(a,x)")), (std::vector<std::string>{"f", "a"}));
  EXPECT_EQ(funs(parse("g(g(x))")), (std::vector<std::string>{"g", "g"}));
}

TEST(TermTest, Positions) {
  EXPECT_EQ(positions(parse("a")), (std::vector<Position>{{}}));
  EXPECT_EQ(positions(parse("f(g(a),x)")),
            (std::vector<Position>{{}, {0}, {0, 0}, {1}}));
}

TEST(TermTest, SubtermAt) {
  const auto t = parse("f(g(a),x)");
  EXPECT_EQ(subterm_at(t, {0}), parse("g(a)"));
  EXPECT_EQ(subterm_at(t, {}), t);
  EXPECT_THROW(subterm_at(parse("f(a,b)"), {2}), InvalidPosition);
  EXPECT_THROW(subterm_at(parse("f(x,b)"), {0, 0}), InvalidPosition);
}

TEST(TermTest, ReplaceAt) {
  EXPECT_EQ(replace_at(parse("f(a,b)"), {1}, V("x")), parse("f(a,x)"));
  EXPECT_EQ(replace_at(parse("f(a,b)"), {}, parse("g(y)")), parse("g(y)"));
  EXPECT_THROW(replace_at(parse("f(a,b)"), {2}, V("x")), InvalidPosition);
}

TEST(TermTest, GroundAndLinear) {
  EXPECT_TRUE(is_ground(parse("f(a,g(b))")));
  EXPECT_FALSE(is_ground(parse("f(a,x)")));
  EXPECT_TRUE(is_linear(parse("f(x,y)")));
  EXPECT_FALSE(is_linear(parse("f(x,x)")));
}

TEST(TermTest, InstanceAndVariant) {
  EXPECT_TRUE(is_instance_of(parse("f(a,b)"), parse("f(x,y)")));
  EXPECT_FALSE(is_instance_of(parse("f(x,y)"), parse("f(a,b)")));
  EXPECT_TRUE(is_variant_of(parse("f(x,y)"), parse("f(y,x)")));
  EXPECT_FALSE(is_variant_of(parse("f(x,x)"), parse("f(x,y)")));
}

// Brute force over all renamings {x,y} -> {x,y} for the non-variant example.
TEST(TermTest, NonVariantByExhaustiveRenaming) {
  const auto s = parse("f(x,x)");
  const auto t = parse("f(x,y)");
  const std::vector<std::string> vs{"x", "y"};
  bool any = false;
  for (const auto& rx : vs) {
    for (const auto& ry : vs) {
      if (rx == ry) continue;  // not a bijection
      Binding b{{"x", V(rx)}, {"y", V(ry)}};
      if (oracle_apply(b, s) == t) any = true;
    }
  }
  EXPECT_FALSE(any);
}

TEST(TermTest, Rendering) {
  EXPECT_EQ(to_string(parse("f(g(a),x)")), "f(g(a),x)");
  EXPECT_EQ(to_string(parse("a()")), "a");
}

TEST(TermTest, PropertyLaws) {
  Generator gen(11);
  for (int i = 0; i < 2000; ++i) {
    const auto t = gen.term(4);
    const auto ps = positions(t);
    EXPECT_EQ(ps.size(), size(t));
    if (is_ground(t)) EXPECT_TRUE(is_linear(t));
    const auto p = gen.position_in(t);
    const auto s = gen.term(2);
    EXPECT_EQ(replace_at(t, p, subterm_at(t, p)), t);
    EXPECT_EQ(subterm_at(replace_at(t, p, s), p), s);
    // prefix-closed and sibling-complete
    for (const auto& q : ps) {
      if (q.is_root()) continue;
      Position parent(std::vector<std::size_t>(q.begin(), q.end() - 1));
      EXPECT_TRUE(is_position_of(t, parent));
      for (std::size_t j = 0; j < q[q.size() - 1]; ++j) {
        EXPECT_TRUE(is_position_of(t, parent.child(j)));
      }
    }
    // variant-ship is reflexive and symmetric
    const auto u = gen.term(2);
    EXPECT_TRUE(is_variant_of(t, t));
    EXPECT_EQ(is_variant_of(t, u), is_variant_of(u, t));
  }
}

TEST(TermTest, VariantTransitivityOnRenamings) {
  Generator gen(12);
  const auto swap = [](const std::string& v) {
    return v == "x" ? std::string("y") : v == "y" ? std::string("x") : v;
  };
  const auto shift = [](const std::string& v) { return v + "1"; };
  for (int i = 0; i < 500; ++i) {
    const auto t = gen.term(3);
    const auto u = map_vars(t, swap);
    const auto w = map_vars(u, shift);
    ASSERT_TRUE(is_variant_of(t, u));
    ASSERT_TRUE(is_variant_of(u, w));
    EXPECT_TRUE(is_variant_of(t, w));
  }
}

}  // namespace
}  // namespace termrw
