#pragma once

// Morse words: closed knot/link diagrams encoded as bottom-to-top sequences
// of elementary events. Event order is the complete height data; no numeric
// height function is ever stored.

#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trunkforge/errors.hpp"

namespace trunkforge {

enum class EventKind : std::uint8_t { Cup, Cap, CrossPos, CrossNeg };

// One elementary slice of a diagram: a local minimum (cup), a local maximum
// (cap), or a signed crossing of the strands at pos, pos+1. Positions are
// 1-indexed from the left; a cup at pos inserts two new strands at pos, pos+1.
struct Event {
  EventKind kind;
  int pos;

  friend bool operator==(const Event&, const Event&) = default;
};

constexpr bool is_extremum(const Event& e) {
  return e.kind == EventKind::Cup || e.kind == EventKind::Cap;
}

constexpr bool is_crossing(const Event& e) {
  return e.kind == EventKind::CrossPos || e.kind == EventKind::CrossNeg;
}

constexpr int count_delta(const Event& e) {
  switch (e.kind) {
    case EventKind::Cup: return 2;
    case EventKind::Cap: return -2;
    default: return 0;
  }
}

inline char token_letter(EventKind k) {
  switch (k) {
    case EventKind::Cup: return 'u';
    case EventKind::Cap: return 'n';
    case EventKind::CrossPos: return 'p';
    default: return 'm';
  }
}

inline std::string token(const Event& e) {
  return token_letter(e.kind) + std::to_string(e.pos);
}

// Checks slice legality of an event against the running strand count.
constexpr bool event_legal(const Event& e, int count) {
  if (e.pos < 1) return false;
  if (e.kind == EventKind::Cup) return e.pos <= count + 1;
  return e.pos + 1 <= count;  // cap or crossing needs strands pos, pos+1
}

// A validated closed diagram. Immutable after construction; every instance
// satisfies: strand count starts at 0, every event is legal at its slice,
// and the count returns to 0 after the last event.
class MorseWord {
 public:
  explicit MorseWord(std::vector<Event> events) : events_(std::move(events)) {
    if (events_.empty()) throw ValidationError("empty word: a closed diagram needs events", 1);
    int count = 0;
    for (std::size_t i = 0; i < events_.size(); ++i) {
      const Event& e = events_[i];
      if (!event_legal(e, count))
        throw ValidationError("illegal event " + token(e) + " at strand count " +
                                  std::to_string(count),
                              static_cast<int>(i) + 1);
      count += count_delta(e);
    }
    if (count != 0)
      throw ValidationError("word ends with " + std::to_string(count) + " open strands",
                            static_cast<int>(events_.size()) + 1);
  }

  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  int cups() const {
    int n = 0;
    for (const Event& e : events_) n += e.kind == EventKind::Cup;
    return n;
  }
  int caps() const {
    int n = 0;
    for (const Event& e : events_) n += e.kind == EventKind::Cap;
    return n;
  }

  friend bool operator==(const MorseWord&, const MorseWord&) = default;

 private:
  std::vector<Event> events_;
};

inline std::string to_string(const MorseWord& w) {
  std::string out;
  for (const Event& e : w.events()) {
    if (!out.empty()) out += ' ';
    out += token(e);
  }
  return out;
}

// Strand count before each event and after the last: size() + 1 entries.
inline std::vector<int> slice_counts(const MorseWord& w) {
  std::vector<int> counts;
  counts.reserve(w.size() + 1);
  int c = 0;
  counts.push_back(c);
  for (const Event& e : w.events()) {
    c += count_delta(e);
    counts.push_back(c);
  }
  return counts;
}

// Token grammar: [unpm][1-9][0-9]*, whitespace separated; '#' starts a
// comment to end of line.
inline MorseWord parse_word(std::string_view text) {
  std::vector<Event> events;
  int token_index = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#')
      ++i;
    std::string_view tok = text.substr(start, i - start);
    ++token_index;

    EventKind kind;
    switch (tok[0]) {
      case 'u': kind = EventKind::Cup; break;
      case 'n': kind = EventKind::Cap; break;
      case 'p': kind = EventKind::CrossPos; break;
      case 'm': kind = EventKind::CrossNeg; break;
      default:
        throw LexError("unknown token '" + std::string(tok) + "'", token_index);
    }
    std::string_view digits = tok.substr(1);
    if (digits.empty() || digits[0] == '0' || digits.size() > 9)
      throw LexError("bad position in token '" + std::string(tok) + "'", token_index);
    int pos = 0;
    for (char d : digits) {
      if (d < '0' || d > '9')
        throw LexError("bad position in token '" + std::string(tok) + "'", token_index);
      pos = pos * 10 + (d - '0');
    }
    events.push_back(Event{kind, pos});
  }
  return MorseWord(std::move(events));
}

// Number of circle components. Each cup opens an arc; crossings permute
// strand identities; each cap either merges two arcs or closes one.
inline int components(const MorseWord& w) {
  const int n_cups = w.cups();
  std::vector<int> parent(static_cast<std::size_t>(n_cups));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<int> strands;
  strands.reserve(16);
  int next_arc = 0;
  int closures = 0;
  for (const Event& e : w.events()) {
    const std::size_t at = static_cast<std::size_t>(e.pos - 1);
    switch (e.kind) {
      case EventKind::Cup:
        strands.insert(strands.begin() + at, 2, next_arc);
        ++next_arc;
        break;
      case EventKind::CrossPos:
      case EventKind::CrossNeg:
        std::swap(strands[at], strands[at + 1]);
        break;
      case EventKind::Cap: {
        int a = find(strands[at]);
        int b = find(strands[at + 1]);
        if (a == b)
          ++closures;
        else
          parent[a] = b;
        strands.erase(strands.begin() + at, strands.begin() + at + 2);
        break;
      }
    }
  }
  return closures;
}

}  // namespace trunkforge
