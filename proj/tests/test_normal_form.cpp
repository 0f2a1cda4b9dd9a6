#include <catch2/catch_amalgamated.hpp>

#include "odag/normal_form.hpp"
#include "odag/oracle.hpp"

using namespace odag;

namespace {
const GroupParams m3{3}, m5{5}, m7{7};

Word W(const char* s) { return parse_word(s); }

std::string geo(const char* s, const GroupParams& p) {
  return format_word(geodesic(W(s), p));
}
}  // namespace

TEST_CASE("central form reduces the quotient and tracks the center") {
  CentralForm cf = central_form(W("x^2"), m3);
  CHECK(cf.q.empty());
  CHECK(cf.c == 1);

  cf = central_form(W("x y^-1"), m3);
  CHECK(format_word(cf.q) == "x y^2");
  CHECK(cf.c == -1);

  cf = central_form(W("y^3"), m3);
  CHECK(cf.q.empty());
  CHECK(cf.c == 1);

  cf = central_form(W("x^-1 y^5 x"), m5);  // = y^5 = Delta
  CHECK(cf.q.empty());
  CHECK(cf.c == 1);

  CHECK(central_form(W("x^3 y^7 x^-2 y^-7"), m7).q ==
        central_form(W("x"), m7).q);
}

TEST_CASE("defining relation and centrality of Delta") {
  for (const GroupParams& p : {m3, m5, m7}) {
    Word delta_x = W("x^2");
    Word delta_y;
    delta_y.push(Gen::Y, p.m);
    CHECK(word_equals(delta_x, delta_y, p));
    for (const char* s : {"x", "y", "x y^-2", "y^2 x^-1 y"}) {
      CHECK(word_equals(concat(W(s), delta_x), concat(delta_x, W(s)), p));
      CHECK(word_equals(concat(W(s), delta_y), concat(delta_y, W(s)), p));
    }
  }
}

TEST_CASE("garside form of small words") {
  GarsideForm g = garside_normal_form(W("y^4"), m3);
  CHECK(g.a == std::vector<long long>{0});
  CHECK(g.b == std::vector<long long>{1});
  CHECK(g.c == 1);
  CHECK(format_word(g.to_word()) == "y x^2");

  g = garside_normal_form(W("x y^-1"), m3);
  CHECK(g.a == std::vector<long long>{1});
  CHECK(g.b == std::vector<long long>{2});
  CHECK(g.c == -1);

  // the rendered form always spells the same element
  for (const char* s : {"x^3 y^-4", "y^2 x y^2 x", "x^-5 y^7 x^2 y^-2"})
    for (const GroupParams& p : {m3, m5, m7})
      CHECK(word_equals(garside_normal_form(W(s), p).to_word(), W(s), p));
}

TEST_CASE("geodesics of pinned examples") {
  CHECK(geo("x y^-3", m5) == "x^-1 y^2");
  CHECK(geo("y^-3 x^-1", m5) == "y^-3 x^-1");
  CHECK(geo("x y^-1 x^-1 y", m3) == "x y^-1 x^-1 y");
  CHECK(geo("x^-1 y^5 x", m5) == "x^2");
  CHECK(geo("y^4", m3) == "y x^2");
  CHECK(geo("y^4", m5) == "y^-1 x^2");
  CHECK(geo("y^2", m5) == "y^2");
  CHECK(geo("y^-3", m5) == "y^-3");  // beats y^2 x^-2 by one letter
  CHECK(geo("x^2 y", m3) == "y x^2");
  CHECK(geo("x y^2 x y^2", m3) == "x y^2 x y^2");
  CHECK(geo("x y^2 x^-1 y", m5) == "x^-1 y^2 x y");
  CHECK(geo("1", m3) == "1");
  CHECK(geo("x^-7", m3) == "x^-7");
}

TEST_CASE("geodesic types of pinned examples") {
  auto ty = [](const char* s, const GroupParams& p) {
    return std::string(to_string(classify(geodesic(W(s), p), p)));
  };
  CHECK(ty("y^4", m3) == "1");
  CHECK(ty("y^4", m5) == "1");
  CHECK(ty("y^-4", m3) == "2");
  CHECK(ty("x y^2 x y^2", m3) == "3+");
  CHECK(ty("x^-1 y^-2 x^-1 y^-2", m3) == "3-");
  CHECK(ty("y", m5) == "3+&3-");
  CHECK(ty("y", m3) == "y-power");
  CHECK(ty("y^2", m5) == "y-power");
  CHECK(ty("x y^-3", m5) == "30-U");
  CHECK(ty("x y^-2 x y", m5) == "30+U");
  CHECK(ty("x y^-2 x y^3", m5) == "30+N");
  CHECK(ty("x^-1 y^2 x^-1 y^-3", m5) == "30-N");
  CHECK(ty("x y^-1 x^-1 y", m3) == "30*");
  CHECK(ty("x^3", m3) == "x-power");
  CHECK(ty("x^2", m3) == "central");
  CHECK(ty("1", m3) == "trivial");

  CHECK_THROWS_AS(classify(W("x^2 y^3"), m3), std::invalid_argument);
  CHECK_THROWS_AS(classify(W("y^4"), m3), std::invalid_argument);
}

namespace {

// Independent re-derivation of the table row from the word's shape, used to
// cross-check classify() over whole balls.
std::optional<GeodesicType> row_of(const Word& w, const GroupParams& p) {
  long long kk = p.k();
  if (w.empty()) return GeodesicType::Trivial;
  if (w.runs() == 1) {
    auto s = w.syllables()[0];
    if (s.gen == Gen::X)
      return s.exp % 2 ? GeodesicType::XPower : GeodesicType::Central;
    return std::llabs(s.exp) < kk ? GeodesicType::T3PlusCapMinus
                                  : GeodesicType::YPower;
  }
  auto [f, c] = detail::delta_split(w);
  if (c > 0) return GeodesicType::T1;
  if (c < 0) return GeodesicType::T2;
  if (f.runs() <= 1) return std::nullopt;
  bool pos = false, neg = false;
  std::set<long long> bs;
  for (auto s : f.syllables())
    if (s.gen == Gen::X)
      (s.exp > 0 ? pos : neg) = true;
    else
      bs.insert(s.exp);
  auto has = [&](long long b) { return bs.count(b) > 0; };
  bool big_pos = has(kk + 1), big_neg = has(-(kk + 1));
  if (pos && neg) return GeodesicType::T30Star;
  if (pos && has(-kk) && big_pos) return GeodesicType::T30PlusN;
  if (pos && has(-kk)) return GeodesicType::T30PlusU;
  if (pos) return GeodesicType::T3Plus;
  if (has(kk) && big_neg) return GeodesicType::T30MinusN;
  if (has(kk)) return GeodesicType::T30MinusU;
  return GeodesicType::T3Minus;
}

void sweep(const GroupParams& p, long long len) {
  Ball ball = bfs_ball(p, len);
  long long inspected = 0;
  for_each_reduced_word(len, [&](const Word& w) {
    ++inspected;
    CentralForm cf = central_form(w, p);
    Word g = geodesic(w, p);

    // element preserved, truly shortest, stable under re-normalization
    REQUIRE(central_form(g, p) == cf);
    auto dist = ball.distance(cf);
    REQUIRE(dist.has_value());
    REQUIRE(g.length() == *dist);
    REQUIRE(geodesic(g, p) == g);

    // free part satisfies the run-shape conditions
    auto [f, c] = detail::delta_split(g);
    REQUIRE(run_shape_geodesic(f, p));

    // classification agrees with the independent row predicate
    GeodesicType t = classify(g, p);
    auto expect = row_of(g, p);
    REQUIRE(expect.has_value());
    REQUIRE(t == *expect);

    // garside form spells the same element
    REQUIRE(central_form(garside_normal_form(w, p).to_word(), p) == cf);
    return true;
  });
  // 1 + sum_{d=1..len} 4 * 3^(d-1) freely reduced words
  long long expected = 1, layer = 4;
  for (long long d = 1; d <= len; ++d, layer *= 3) expected += layer;
  CHECK(inspected == expected);
}

}  // namespace

TEST_CASE("exhaustive geodesic sweep, m=3") { sweep(m3, 5); }
TEST_CASE("exhaustive geodesic sweep, m=5") { sweep(m5, 5); }
TEST_CASE("exhaustive geodesic sweep, m=7") { sweep(m7, 4); }

TEST_CASE("geodesics of large pure powers") {
  // y^17 at m=3: chi = 34, best spelling y^2 Delta^5
  Word g = geodesic(W("y^17"), m3);
  CHECK(word_equals(g, W("y^17"), m3));
  CHECK(g == W("y^2 x^10"));
  CHECK(geodesic_length(W("y^17"), m3) == 12);

  CHECK(geodesic(W("x^40"), m5) == W("x^40"));
  CHECK(geodesic(W("y^-12"), m5) == W("y^-2 x^-4"));
  CHECK(word_equals(W("y^-12"), W("y^-2 x^-4"), m5));
}

TEST_CASE("run extremes") {
  RunExtremes r = run_extremes(W("x y^3 x^-1 y^-2"));
  CHECK(r.pos_x == 1);
  CHECK(r.neg_x == 1);
  CHECK(r.pos_y == 3);
  CHECK(r.neg_y == 2);
  CHECK_FALSE(run_shape_geodesic(W("x y^3 x^-1 y^-2"), m5));
  CHECK(run_shape_geodesic(W("x y^3 x y^-2"), m5));
  CHECK_FALSE(run_shape_geodesic(W("x y^2 x^-1 y^-2"), m3));
}
