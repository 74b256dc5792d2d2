#pragma once

// Seeded generators for property tests. Everything here is driven by a
// caller-owned mt19937_64 so each test fixes its own seed.

#include <random>
#include <vector>

#include "trunkforge/morse.hpp"
#include "trunkforge/profile.hpp"

namespace testgen {

using trunkforge::Event;
using trunkforge::EventKind;
using trunkforge::MorseWord;
using trunkforge::WidthProfile;

// Random valid profile: a +-2 walk from 2 back to 2 staying >= 2.
inline WidthProfile random_profile(std::mt19937_64& rng, int max_pairs = 8, int max_width = 20) {
  const int pairs = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_pairs));
  int steps = 2 * (pairs - 1);  // profile length 2*pairs - 1
  std::vector<int> xs{2};
  int x = 2;
  while (steps > 0) {
    const int h = (x - 2) / 2;  // down-steps needed to close
    const bool can_up = h + 1 <= steps - 1 && x + 2 <= max_width;
    const bool can_down = h >= 1;
    const bool up = can_up && (!can_down || rng() % 2 == 0);
    x += up ? 2 : -2;
    xs.push_back(x);
    --steps;
  }
  return WidthProfile(std::move(xs));
}

// Random valid closed word, possibly a link (may even pass through count 0).
inline MorseWord random_word(std::mt19937_64& rng, int max_cups = 5, int max_width = 10,
                             int crossing_percent = 45) {
  std::vector<Event> ev;
  const int want_cups = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_cups));
  int c = 0;
  int cups = 0;
  while (true) {
    if (c == 0) {
      if (cups >= want_cups) break;
      ev.push_back(Event{EventKind::Cup, 1});
      c = 2;
      ++cups;
      continue;
    }
    const int roll = static_cast<int>(rng() % 100);
    if (cups < want_cups && c + 2 <= max_width && roll < 30) {
      ev.push_back(Event{EventKind::Cup, 1 + static_cast<int>(rng() % static_cast<unsigned>(c + 1))});
      c += 2;
      ++cups;
    } else if (roll < 30 + crossing_percent && c >= 2) {
      EventKind k = rng() % 2 == 0 ? EventKind::CrossPos : EventKind::CrossNeg;
      ev.push_back(Event{k, 1 + static_cast<int>(rng() % static_cast<unsigned>(c - 1))});
    } else {
      ev.push_back(Event{EventKind::Cap, 1 + static_cast<int>(rng() % static_cast<unsigned>(c - 1))});
      c -= 2;
    }
  }
  return MorseWord(std::move(ev));
}

// Random single-component word.
inline MorseWord random_knot(std::mt19937_64& rng, int max_cups = 5, int max_width = 10) {
  for (int tries = 0; tries < 1000; ++tries) {
    MorseWord w = random_word(rng, max_cups, max_width);
    if (trunkforge::components(w) == 1) return w;
  }
  throw std::logic_error("random_knot failed to produce a knot");
}

// Crossing-free single-component word with a random profile.
inline MorseWord random_snake(std::mt19937_64& rng, int max_pairs = 8, int max_width = 20) {
  return trunkforge::realize_profile(random_profile(rng, max_pairs, max_width));
}

}  // namespace testgen
