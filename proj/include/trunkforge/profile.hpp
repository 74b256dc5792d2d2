#pragma once

// Width profiles: the sequence of level-set widths read off between
// consecutive extremal events of a Morse word.

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "trunkforge/errors.hpp"
#include "trunkforge/morse.hpp"

namespace trunkforge {

// The widths x_1..x_p of the regular levels between consecutive critical
// points. Valid profiles are nonempty, all entries positive and even,
// start and end at 2, and step by exactly +-2.
class WidthProfile {
 public:
  explicit WidthProfile(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ValidationError("empty profile", 1);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      int x = entries_[i];
      if (x < 2 || x % 2 != 0)
        throw ValidationError("profile entry " + std::to_string(x) + " not a positive even width",
                              static_cast<int>(i) + 1);
      if (i > 0 && std::abs(x - entries_[i - 1]) != 2)
        throw ValidationError("profile step " + std::to_string(entries_[i - 1]) + " -> " +
                                  std::to_string(x) + " is not +-2",
                              static_cast<int>(i) + 1);
    }
    if (entries_.front() != 2 || entries_.back() != 2)
      throw ValidationError("profile must start and end at 2", 1);
  }

  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const WidthProfile&, const WidthProfile&) = default;

 private:
  std::vector<int> entries_;
};

// Level widths of a word: the strand count in the gap after each extremal
// event except the last. Crossings do not bound gaps. Rejects words with
// more than one component unless allow_links is set; split links are always
// rejected (they contain a width-0 level).
inline WidthProfile profile(const MorseWord& w, bool allow_links = false) {
  if (!allow_links) {
    int n = components(w);
    if (n != 1)
      throw MultiComponentError("word has " + std::to_string(n) + " components", n);
  }
  const int extremals = w.cups() + w.caps();
  std::vector<int> xs;
  xs.reserve(static_cast<std::size_t>(extremals));
  int c = 0;
  int seen = 0;
  for (const Event& e : w.events()) {
    c += count_delta(e);
    if (is_extremum(e)) {
      ++seen;
      if (seen < extremals) xs.push_back(c);
    }
  }
  return WidthProfile(std::move(xs));
}

// Crossing-free single-component realization of a profile: each ascent cups
// next to the leftmost strand, each descent caps the two leftmost strands.
// The chain of merges keeps everything one component.
inline MorseWord realize_profile(const WidthProfile& prof) {
  const std::vector<int>& xs = prof.entries();
  std::vector<Event> events;
  events.reserve(xs.size() + 1);
  events.push_back(Event{EventKind::Cup, 1});
  for (std::size_t i = 1; i < xs.size(); ++i)
    events.push_back(xs[i] > xs[i - 1] ? Event{EventKind::Cup, 2} : Event{EventKind::Cap, 1});
  events.push_back(Event{EventKind::Cap, 1});
  MorseWord w(std::move(events));
  if (components(w) != 1)
    throw InternalError("snake realization produced " + std::to_string(components(w)) +
                        " components");
  return w;
}

}  // namespace trunkforge
