#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gen.hpp"
#include "trunkforge/compose.hpp"

using namespace trunkforge;

namespace {
MorseWord snake(std::vector<int> xs) { return realize_profile(WidthProfile(std::move(xs))); }
}  // namespace

TEST_CASE("stacking two round unknots is the round unknot") {
  MorseWord u = parse_word("u1 n1");
  CHECK(to_string(stack(u, u)) == "u1 n1");
  StackIdentities ids = stack_identities(u, u);
  CHECK(ids.bridge == 1);
  CHECK(ids.width == 2);
  CHECK(ids.trunk == 2);
}

TEST_CASE("stacking glues profiles over the shared boundary") {
  MorseWord a = snake({2, 4, 2});
  MorseWord b = snake({2, 4, 6, 4, 2});
  MorseWord s = stack(a, b);
  CHECK(components(s) == 1);
  CHECK(profile(s).entries() == std::vector<int>{2, 4, 2, 4, 6, 4, 2});

  InvariantReport r = report(s);
  CHECK(r.width == 24);
  CHECK(r.bridge == 4);
  CHECK(r.trunk == 6);

  // the three invariants are order-independent even though the words differ
  MorseWord s2 = stack(b, a);
  CHECK(profile(s2).entries() == std::vector<int>{2, 4, 6, 4, 2, 4, 2});
  InvariantReport r2 = report(s2);
  CHECK(r2.width == r.width);
  CHECK(r2.bridge == r.bridge);
  CHECK(r2.trunk == r.trunk);
  CHECK(to_string(s2) != to_string(s));
}

TEST_CASE("stack identities on a snake pair") {
  StackIdentities ids = stack_identities(snake({2, 4, 2, 4, 2}), snake({2, 4, 2}));
  CHECK(ids.bridge == 4);  // 3 + 2 - 1
  CHECK(ids.width == 20);  // 14 + 8 - 2
  CHECK(ids.trunk == 4);
}

TEST_CASE("stack rejects links") {
  MorseWord link = parse_word("u1 u1 n1 n1");
  MorseWord u = parse_word("u1 n1");
  CHECK_THROWS_AS(stack(link, u), MultiComponentError);
  CHECK_THROWS_AS(stack(u, link), MultiComponentError);
}

TEST_CASE("stacking is associative at the profile level") {
  std::mt19937_64 rng(808);
  for (int i = 0; i < 50; ++i) {
    MorseWord a = testgen::random_snake(rng, 4, 12);
    MorseWord b = testgen::random_snake(rng, 4, 12);
    MorseWord c = testgen::random_snake(rng, 4, 12);
    CHECK(profile(stack(stack(a, b), c)) == profile(stack(a, stack(b, c))));
  }
}

TEST_CASE("stack identities hold on random snake pairs") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 100; ++i) {
    MorseWord a = testgen::random_snake(rng);
    MorseWord b = testgen::random_snake(rng);
    InvariantReport ra = report(a);
    InvariantReport rb = report(b);
    StackIdentities ids = stack_identities(a, b);  // throws if any identity fails
    CHECK(ids.trunk == std::max(ra.trunk, rb.trunk));
    CHECK(ids.width == ra.width + rb.width - 2);
    CHECK(ids.bridge == ra.bridge + rb.bridge - 1);
  }
}

TEST_CASE("stack identities hold for crossing-bearing knots") {
  MorseWord k1 = parse_word("u1 u3 p2 p2 m1 p2 n1 n1");
  MorseWord k2 = parse_word("u1 u2 u3 p1 p1 p1 m2 p1 p1 p1 m2 n3 n2 n1");
  StackIdentities ids = stack_identities(k1, k2);
  CHECK(ids.bridge == 4);
  CHECK(ids.width == 24);
  CHECK(ids.trunk == 6);
}

TEST_CASE("scale_profile multiplies levels entrywise") {
  CHECK(scale_profile(WidthProfile({2}), 1) == std::vector<int>{2});
  std::vector<int> doubled = scale_profile(WidthProfile({2, 4, 2}), 2);
  CHECK(doubled == std::vector<int>{4, 8, 4});
  CHECK(*std::max_element(doubled.begin(), doubled.end()) == 8);
  CHECK(scale_profile(WidthProfile({2, 4, 6, 4, 2}), 3) == std::vector<int>{6, 12, 18, 12, 6});
  CHECK_THROWS_AS(scale_profile(WidthProfile({2}), 0), ValidationError);
}
