#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "gen.hpp"
#include "trunkforge/invariants.hpp"
#include "trunkforge/moves.hpp"
#include "trunkforge/profile.hpp"

using namespace trunkforge;

namespace {

bool has_kind(const std::vector<Move>& moves, MoveKind k) {
  return std::any_of(moves.begin(), moves.end(), [&](const Move& m) { return m.kind == k; });
}

std::vector<Move> of_kind(const std::vector<Move>& moves, MoveKind k) {
  std::vector<Move> out;
  for (const Move& m : moves)
    if (m.kind == k) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("enumerate_moves on the round unknot") {
  std::vector<Move> moves = enumerate_moves(parse_word("u1 n1"));
  CHECK(!has_kind(moves, MoveKind::ZigzagCancel));
  CHECK(has_kind(moves, MoveKind::ZigzagInsert));
  // the only count-2 gap admits two cup positions per side
  CHECK(of_kind(moves, MoveKind::ZigzagInsert).size() == 4);
}

TEST_CASE("zigzag cancel collapses a capped cup") {
  MorseWord w = parse_word("u1 u2 n1 n1");
  std::vector<Move> cancels = of_kind(enumerate_moves(w), MoveKind::ZigzagCancel);
  REQUIRE(cancels.size() == 1);
  CHECK(cancels[0].index == 1);  // events 2,3 in 1-based speak
  CHECK(to_string(apply_move(w, cancels[0])) == "u1 n1");
}

TEST_CASE("reid2 cancel finds opposite crossings at one position") {
  MorseWord w = parse_word("u1 p1 m1 n1");
  std::vector<Move> cancels = of_kind(enumerate_moves(w), MoveKind::ReidIICancel);
  REQUIRE(cancels.size() == 1);
  CHECK(cancels[0].index == 1);
  CHECK(to_string(apply_move(w, cancels[0])) == "u1 n1");
}

TEST_CASE("far commute exchanges disjoint cups and reindexes") {
  MorseWord w = parse_word("u1 u3 n2 n1");
  REQUIRE(components(w) == 1);
  std::vector<Move> far = of_kind(enumerate_moves(w), MoveKind::FarCommute);
  REQUIRE(std::any_of(far.begin(), far.end(), [](const Move& m) { return m.index == 0; }));
  MorseWord swapped = apply_move(w, Move{MoveKind::FarCommute, 0});
  CHECK(to_string(swapped) == "u1 u1 n2 n1");
  CHECK(components(swapped) == 1);
  CHECK(profile(swapped) == profile(w));  // two ascents: values unchanged
}

TEST_CASE("far commute can move a cap below a cup and change the profile") {
  MorseWord w = parse_word("u1 u2 u4 n1 n1 n1");  // profile 2,4,6,4,2
  MorseWord lowered = apply_move(w, Move{MoveKind::FarCommute, 2});
  CHECK(profile(lowered).entries() == std::vector<int>{2, 4, 2, 4, 2});
  CHECK(width(profile(lowered)) == width(profile(w)) - 4);
}

TEST_CASE("extremum twist adds and removes kinks") {
  MorseWord kinked = parse_word("u1 p1 n1");
  // both the cup-side and the cap-side pattern match the single crossing
  std::vector<Move> removes = of_kind(enumerate_moves(kinked), MoveKind::ExtremumTwist);
  std::erase_if(removes, [](const Move& m) { return m.aux != 0; });
  REQUIRE(removes.size() == 2);
  CHECK(to_string(apply_move(kinked, removes[0])) == "u1 n1");
  CHECK(to_string(apply_move(kinked, removes[1])) == "u1 n1");

  MorseWord u = parse_word("u1 n1");
  CHECK(to_string(apply_move(u, Move{MoveKind::ExtremumTwist, 0, 1, +1})) == "u1 p1 n1");
  CHECK(to_string(apply_move(u, Move{MoveKind::ExtremumTwist, 1, 1, -1})) == "u1 m1 n1");
}

TEST_CASE("crossing slide carries a crossing past an extremum arm, flipping sign") {
  MorseWord w = parse_word("u1 u1 p2 n1 n1");
  MorseWord slid = apply_move(w, Move{MoveKind::CrossingSlide, 1});
  CHECK(to_string(slid) == "u1 u2 m1 n1 n1");
  CHECK(components(slid) == 1);
  // involution
  CHECK(apply_move(slid, Move{MoveKind::CrossingSlide, 1}) == w);
}

TEST_CASE("reid3 rewrites a uniform braid triple") {
  MorseWord w = parse_word("u1 u2 u3 p1 p2 p1 n1 n1 n1");
  REQUIRE(components(w) == 1);
  MorseWord moved = apply_move(w, Move{MoveKind::ReidIII, 3});
  CHECK(to_string(moved) == "u1 u2 u3 p2 p1 p2 n1 n1 n1");
  CHECK(components(moved) == 1);
  CHECK(apply_move(moved, Move{MoveKind::ReidIII, 3}) == w);
  // mixed signs do not match
  MorseWord mixed = parse_word("u1 u2 u3 p1 m2 p1 n1 n1 n1");
  CHECK(!has_kind(enumerate_moves(mixed), MoveKind::ReidIII));
}

TEST_CASE("inapplicable moves are rejected") {
  MorseWord u = parse_word("u1 n1");
  CHECK_THROWS_AS(apply_move(u, Move{MoveKind::ZigzagCancel, 0}), InapplicableMoveError);
  CHECK_THROWS_AS(apply_move(u, Move{MoveKind::FarCommute, 0}), InapplicableMoveError);
  CHECK_THROWS_AS(apply_move(u, Move{MoveKind::ZigzagInsert, 0, 1, +1}), InapplicableMoveError);
  CHECK_THROWS_AS(apply_move(u, Move{MoveKind::ReidIII, 5}), InapplicableMoveError);
}

TEST_CASE("move safety: every enumerated move preserves validity and components") {
  std::mt19937_64 rng(2025);
  for (int i = 0; i < 150; ++i) {
    MorseWord w = testgen::random_word(rng);
    const int comp = components(w);
    for (const Move& m : enumerate_moves(w)) {
      MorseWord next = apply_move(w, m);  // constructor revalidates
      CHECK(components(next) == comp);
    }
  }
}

TEST_CASE("insert moves round-trip through their cancels") {
  std::mt19937_64 rng(99999);
  for (int i = 0; i < 60; ++i) {
    MorseWord w = testgen::random_word(rng, 4, 8);
    for (const Move& m : enumerate_moves(w)) {
      if (m.kind == MoveKind::ZigzagInsert) {
        MorseWord inserted = apply_move(w, m);
        CHECK(apply_move(inserted, Move{MoveKind::ZigzagCancel, m.index}) == w);
      } else if (m.kind == MoveKind::ReidIIInsert) {
        MorseWord inserted = apply_move(w, m);
        CHECK(apply_move(inserted, Move{MoveKind::ReidIICancel, m.index}) == w);
      } else if (m.kind == MoveKind::ExtremumTwist && m.aux != 0) {
        MorseWord kinked = apply_move(w, m);
        CHECK(apply_move(kinked, Move{MoveKind::ExtremumTwist, m.index}) == w);
      }
    }
  }
}

TEST_CASE("cancel moves round-trip through re-insertion") {
  std::mt19937_64 rng(4711);
  for (int i = 0; i < 60; ++i) {
    MorseWord w = testgen::random_word(rng);
    for (const Move& m : enumerate_moves(w)) {
      if (m.kind == MoveKind::ZigzagCancel) {
        const Event cup = w.events()[m.index];
        const Event cap = w.events()[m.index + 1];
        MorseWord cancelled = apply_move(w, m);
        Move undo{MoveKind::ZigzagInsert, m.index, cup.pos, cap.pos < cup.pos ? -1 : +1};
        CHECK(apply_move(cancelled, undo) == w);
      } else if (m.kind == MoveKind::FarCommute) {
        // Exchanging back at the same index restores the word, except that a
        // cup landing exactly on a cap's scar slot has two preimages (pair
        // born left or right of the capped strands); the rule picks the
        // right-hand one, and both preimages exchange to the same word.
        MorseWord swapped = apply_move(w, m);
        MorseWord back = apply_move(swapped, m);
        const Event& sa = swapped.events()[m.index];
        const Event& sb = swapped.events()[m.index + 1];
        if (sa.kind == EventKind::Cap && sb.kind == EventKind::Cup && sb.pos == sa.pos)
          CHECK(apply_move(back, m) == swapped);
        else
          CHECK(back == w);
      }
    }
  }
}

TEST_CASE("canonical form is deterministic, idempotent, and never lex-increases") {
  std::mt19937_64 rng(321);
  for (int i = 0; i < 80; ++i) {
    MorseWord w = testgen::random_word(rng);
    std::string key = canonical_key(w);
    CHECK(canonical_key(w) == key);
    MorseWord c = canonical_form(w);  // construction revalidates
    CHECK(to_string(c) == key);
    CHECK(canonical_key(c) == key);
    CHECK(key <= to_string(w));
    CHECK(c.size() == w.size());
    CHECK(components(c) == components(w));
  }
  // height-exchange variants the pass reorders itself collapse to one key
  CHECK(canonical_key(parse_word("u1 u3 n2 n1")) == canonical_key(parse_word("u1 u1 n2 n1")));
}

TEST_CASE("move text round-trips") {
  std::mt19937_64 rng(60601);
  for (int i = 0; i < 40; ++i) {
    MorseWord w = testgen::random_word(rng);
    for (const Move& m : enumerate_moves(w)) {
      CHECK(parse_move(move_text(m)) == m);
    }
  }
  CHECK(move_text(Move{MoveKind::ZigzagInsert, 3, 2, -1}) == "zigzag-insert @4 pos=2 side=left");
  CHECK_THROWS_AS(parse_move("zigzag-sideways @1"), Error);
}

TEST_CASE("enumeration order is deterministic and sorted") {
  std::mt19937_64 rng(808080);
  for (int i = 0; i < 40; ++i) {
    MorseWord w = testgen::random_word(rng);
    std::vector<Move> a = enumerate_moves(w);
    std::vector<Move> b = enumerate_moves(w);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end(), [](const Move& x, const Move& y) {
      return std::tie(x.index, x.kind, x.pos, x.aux) < std::tie(y.index, y.kind, y.pos, y.aux);
    }));
  }
}
