#include <catch2/catch_amalgamated.hpp>

#include "odag/words.hpp"

using namespace odag;

TEST_CASE("parse and format round-trip") {
  for (const char* s :
       {"1", "x", "y", "x^-1", "y^-3", "x y^-3 x^-1", "y^2 x^4 y^-2",
        "x y x^-1 y^-1", "y^15 x^-7"}) {
    Word w = parse_word(s);
    CHECK(format_word(w) == (std::string_view(s) == "1" ? "1" : s));
    CHECK(parse_word(format_word(w)) == w);
  }
}

TEST_CASE("parse accepts uppercase inverses and caret forms") {
  CHECK(parse_word("X^3") == parse_word("x^-3"));
  CHECK(parse_word("XX") == parse_word("x^-2"));
  CHECK(parse_word("xyY x^2") == parse_word("x x^2"));
  CHECK(parse_word("  x  y ") == parse_word("xy"));
  CHECK(parse_word("y^+2") == parse_word("yy"));
  CHECK(parse_word("") == Word{});
}

TEST_CASE("parse rejects garbage") {
  CHECK_THROWS_AS(parse_word("z"), parse_error);
  CHECK_THROWS_AS(parse_word("x^"), parse_error);
  CHECK_THROWS_AS(parse_word("x^-"), parse_error);
  CHECK_THROWS_AS(parse_word("x^99999999999999999999"), parse_error);
  CHECK_THROWS_AS(parse_word("x+2"), parse_error);
}

TEST_CASE("free reduction is a construction invariant") {
  Word w = parse_word("x x^-1");
  CHECK(w.empty());
  w = parse_word("x y y^-1 x");
  CHECK(w == parse_word("x^2"));
  CHECK(w.runs() == 1);
  CHECK(w.length() == 2);
  Word u = concat(parse_word("x y^2"), parse_word("y^-2 x^-1"));
  CHECK(u.empty());
}

TEST_CASE("invert, rev, phi") {
  Word w = parse_word("x y^-3 x^-1");
  CHECK(invert(w) == parse_word("x y^3 x^-1"));
  CHECK(rev(w) == parse_word("x^-1 y^-3 x"));
  CHECK(apply_phi(w) == parse_word("x^-1 y^3 x"));
  // rev(w) and phi(w)^-1 agree letter by letter
  CHECK(rev(w) == invert(apply_phi(w)));
  CHECK(concat(w, invert(w)).empty());
}

TEST_CASE("length and split") {
  Word w = parse_word("x y^-3 x^-1");
  CHECK(w.length() == 5);
  auto [l0, r0] = split_at(w, 0);
  CHECK(l0.empty());
  CHECK(r0 == w);
  auto [l2, r2] = split_at(w, 2);  // splits inside the y-run
  CHECK(l2 == parse_word("x y^-1"));
  CHECK(r2 == parse_word("y^-2 x^-1"));
  CHECK(concat(l2, r2) == w);
  auto [l5, r5] = split_at(w, 5);
  CHECK(l5 == w);
  CHECK(r5.empty());
  CHECK_THROWS_AS(split_at(w, 6), std::out_of_range);
}

TEST_CASE("chi homomorphism") {
  GroupParams p(5);
  CHECK(chi(parse_word("x"), p) == 5);
  CHECK(chi(parse_word("y"), p) == 2);
  CHECK(chi(parse_word("x^2"), p) == 10);   // Delta
  CHECK(chi(parse_word("y^5"), p) == 10);   // Delta again
  Word u = parse_word("x y^-3"), v = parse_word("y^2 x^-1");
  CHECK(chi(concat(u, v), p) == chi(u, p) + chi(v, p));
  CHECK(chi(apply_phi(u), p) == -chi(u, p));
}

TEST_CASE("group parameter validation") {
  CHECK_THROWS_AS(GroupParams(2), param_error);
  CHECK_THROWS_AS(GroupParams(1), param_error);
  CHECK_THROWS_AS(GroupParams(-3), param_error);
  CHECK_THROWS_AS(GroupParams(4), param_error);
  CHECK(GroupParams(3).k() == 1);
  CHECK(GroupParams(7).k() == 3);
}

TEST_CASE("checked arithmetic refuses to wrap") {
  long long big = (1LL << 62);
  CHECK_THROWS_AS(checked_add(big, big), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 4), std::overflow_error);
  Word w;
  w.push(Gen::X, big);
  Word v;
  v.push(Gen::X, big);
  CHECK_THROWS_AS(concat(w, v), std::overflow_error);
}
