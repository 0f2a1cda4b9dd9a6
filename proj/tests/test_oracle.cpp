#include <catch2/catch_amalgamated.hpp>

#include "odag/oracle.hpp"

using namespace odag;

namespace {
const GroupParams m3{3}, m5{5};
Word W(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("bfs ball radii and distances") {
  Ball b0 = bfs_ball(m3, 0);
  CHECK(b0.elems.size() == 1);

  Ball b1 = bfs_ball(m3, 1);
  CHECK(b1.elems.size() == 5);  // 1, x, x^-1, y, y^-1 all distinct

  Ball b3 = bfs_ball(m3, 3);
  CHECK(b3.distance(central_form(W("y^3"), m3)) == 2);   // y^3 = x^2
  CHECK(b3.distance(central_form(W("y^4"), m3)) == 3);   // y x^2
  CHECK(b3.distance(central_form(W("x y"), m3)) == 2);
  CHECK_FALSE(b3.distance(central_form(W("y^2 x^2 y"), m3)).has_value());

  Ball c3 = bfs_ball(m5, 3);
  CHECK(c3.distance(central_form(W("x y^-3"), m5)) == 3);  // x^-1 y^2
  CHECK(c3.distance(central_form(W("y^-3"), m5)) == 3);
}

TEST_CASE("reduced word enumeration") {
  long long count = 0;
  for_each_reduced_word(5, [&](const Word&) {
    ++count;
    return true;
  });
  CHECK(count == 485);  // 1 + 4 + 12 + 36 + 108 + 324

  count = 0;
  std::vector<std::string> first;
  for_each_reduced_word(2, [&](const Word& w) {
    first.push_back(format_word(w));
    return ++count < 7;
  });
  CHECK(count == 7);
  CHECK(first == std::vector<std::string>{"1", "x", "x^-1", "y", "y^-1",
                                          "x^2", "x y"});
}

TEST_CASE("brute twisted witness search") {
  // y^-3 x^-1 and y^2 x differ by the central Delta: shortest witness x^2
  auto w = brute_twisted_witness(W("y^-3 x^-1"), W("y^2 x"), m5, 3);
  REQUIRE(w.has_value());
  CHECK(*w == W("x^2"));
  CHECK(word_equals(W("y^2 x"),
                    concat(rev(*w), concat(W("y^-3 x^-1"), *w)), m5));

  // chi parities differ: no witness at any length
  CHECK_FALSE(brute_twisted_witness(W("x"), W("y"), m3, 4).has_value());
}

TEST_CASE("twisted reach") {
  auto reach = twisted_reach(W("1"), m3, 2);
  CHECK(reach.count(central_form(W("1"), m3)) == 1);
  CHECK(reach.count(central_form(W("x^2"), m3)) == 1);   // w = x
  CHECK(reach.count(central_form(W("y^2"), m3)) == 1);   // w = y
  CHECK(reach.count(central_form(W("x"), m3)) == 0);     // chi parity
}

TEST_CASE("conjugation reach") {
  auto reach = conj_reach(W("x y"), m3, 3);
  CHECK(reach.count(central_form(W("y x"), m3)) == 1);
  CHECK(reach.count(central_form(W("y"), m3)) == 0);  // chi differs
}

TEST_CASE("brute minimal twisted class of x y x^-1 y at m=3") {
  auto cls = brute_minimal_class(W("x y x^-1 y"), m3, 8);
  CHECK(cls.size() == 12);
  long long minlen = -1;
  Ball ball = bfs_ball(m3, 4);
  for (const auto& e : cls) {
    auto d = ball.distance(e);
    REQUIRE(d.has_value());
    if (minlen < 0) minlen = *d;
    CHECK(*d == minlen);
  }
  CHECK(minlen == 4);
}
