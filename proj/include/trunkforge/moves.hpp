#pragma once

// Knot-type-preserving rewriting moves on Morse words. The move set is
// heuristic coverage of height isotopy, not a complete calculus: searches
// built on it produce upper bounds and orbit-restricted minima only.
//
//   ZigzagCancel / ZigzagInsert  remove/create a cup capped with a neighbor
//                                (a vertical finger in one strand)
//   FarCommute                   exchange the heights of two adjacent events
//                                with disjoint supports, reindexing positions
//   ReidIICancel / ReidIIInsert  opposite crossings at one position
//   ReidIII                      braid triple s_i s_j s_i -> s_j s_i s_j,
//                                |i-j| = 1, uniform sign
//   ExtremumTwist                add/remove a kink on an extremum's own pair
//   CrossingSlide                carry a crossing around an adjacent extremum
//                                arm; the position-based sign flips

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trunkforge/errors.hpp"
#include "trunkforge/morse.hpp"

namespace trunkforge {

enum class MoveKind : std::uint8_t {
  ZigzagCancel,
  ZigzagInsert,
  FarCommute,
  ReidIICancel,
  ReidIIInsert,
  ReidIII,
  ExtremumTwist,
  CrossingSlide,
};

// index is the 0-based event index of the pattern start, or the gap index
// (0..size, "insert before event index") for insert kinds.
// pos/aux per kind:
//   ZigzagInsert:  pos = cup position, aux = -1 cap left / +1 cap right
//   ReidIIInsert:  pos = crossing position, aux = +1 pos-then-neg / -1 reverse
//   ExtremumTwist: aux = 0 remove adjacent kink; aux = +-1 add kink of that
//                  sign at the extremum at index (pos = extremum position)
//   others:        pos = aux = 0
struct Move {
  MoveKind kind;
  int index;
  int pos = 0;
  int aux = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

inline Event flip_sign(const Event& e) {
  return Event{e.kind == EventKind::CrossPos ? EventKind::CrossNeg : EventKind::CrossPos, e.pos};
}

// Exchange rule for adjacent events a (below) and b (above). Returns the
// swapped pair (b', a') with positions reindexed, or nullopt when the
// supports interfere. A cup shifts positions >= pos up by two going up; a
// cap shifts positions >= pos+2 down by two; crossings shift nothing.
// One corner is two-to-one: a cup sitting exactly on a cap's scar slot
// (cap(i) then cup(i)) has two preimages, with the new pair born left or
// right of the capped strands; the rule resolves to the right-hand one.
inline std::optional<std::pair<Event, Event>> try_commute(const Event& a, const Event& b) {
  const int i = a.pos;
  const int j = b.pos;
  using K = EventKind;
  auto pair = [](Event x, Event y) { return std::optional<std::pair<Event, Event>>({x, y}); };

  if (a.kind == K::Cup) {
    if (b.kind == K::Cup) {
      if (j <= i) return pair({K::Cup, j}, {K::Cup, i + 2});
      if (j >= i + 2) return pair({K::Cup, j - 2}, {K::Cup, i});
      return std::nullopt;  // j == i+1 nests inside a's pair
    }
    // b needs strands {j, j+1} clear of a's new pair {i, i+1}
    if (j <= i - 2) return pair({b.kind, j}, {K::Cup, b.kind == K::Cap ? i - 2 : i});
    if (j >= i + 2) return pair({b.kind, j - 2}, {K::Cup, i});
    return std::nullopt;
  }
  if (a.kind == K::Cap) {
    if (b.kind == K::Cup) {
      // a cup above a cap never interferes; only the slot reindexes
      if (j <= i - 1) return pair({K::Cup, j}, {K::Cap, i + 2});
      return pair({K::Cup, j + 2}, {K::Cap, i});
    }
    // pre-cap coordinates of b's strands must be adjacent: j == i-1 splits
    // them around the removed pair
    if (j <= i - 2) return pair({b.kind, j}, {K::Cap, b.kind == K::Cap ? i - 2 : i});
    if (j >= i) return pair({b.kind, j + 2}, {K::Cap, i});
    return std::nullopt;
  }
  // a is a crossing on strands {i, i+1}
  if (b.kind == K::Cup) {
    if (j <= i) return pair({K::Cup, j}, {a.kind, i + 2});
    if (j >= i + 2) return pair({K::Cup, j}, {a.kind, i});
    return std::nullopt;  // j == i+1 inserts between the crossing strands
  }
  if (b.kind == K::Cap) {
    if (j <= i - 2) return pair({K::Cap, j}, {a.kind, i - 2});
    if (j >= i + 2) return pair({K::Cap, j}, {a.kind, i});
    return std::nullopt;
  }
  if (std::abs(i - j) >= 2) return pair(b, a);
  return std::nullopt;
}

namespace detail {

inline bool zigzag_cancel_at(const Event& a, const Event& b) {
  return a.kind == EventKind::Cup && b.kind == EventKind::Cap && std::abs(a.pos - b.pos) == 1;
}

inline bool reid2_cancel_at(const Event& a, const Event& b) {
  return is_crossing(a) && is_crossing(b) && a.pos == b.pos && a.kind != b.kind;
}

inline bool twist_remove_at(const Event& a, const Event& b) {
  return (a.kind == EventKind::Cup && is_crossing(b) && b.pos == a.pos) ||
         (is_crossing(a) && b.kind == EventKind::Cap && a.pos == b.pos);
}

inline bool slide_at(const Event& a, const Event& b) {
  return (a.kind == EventKind::Cup && is_crossing(b) && std::abs(b.pos - a.pos) == 1) ||
         (is_crossing(a) && b.kind == EventKind::Cap && std::abs(b.pos - a.pos) == 1);
}

inline bool reid3_at(const Event& a, const Event& b, const Event& c) {
  return is_crossing(a) && b.kind == a.kind && c.kind == a.kind && a.pos == c.pos &&
         std::abs(a.pos - b.pos) == 1;
}

inline bool move_order(const Move& x, const Move& y) {
  return std::tie(x.index, x.kind, x.pos, x.aux) < std::tie(y.index, y.kind, y.pos, y.aux);
}

}  // namespace detail

// All applicable moves in deterministic (index, kind, pos, aux) order.
// Insert moves are bounded to positions within the current strand range and
// a single zigzag height, which keeps the list finite.
inline std::vector<Move> enumerate_moves(const MorseWord& w) {
  const std::vector<Event>& ev = w.events();
  const int n = static_cast<int>(ev.size());
  const std::vector<int> counts = slice_counts(w);
  std::vector<Move> out;

  for (int t = 0; t + 1 < n; ++t) {
    const Event& a = ev[t];
    const Event& b = ev[t + 1];
    if (detail::zigzag_cancel_at(a, b)) out.push_back({MoveKind::ZigzagCancel, t});
    if (try_commute(a, b)) out.push_back({MoveKind::FarCommute, t});
    if (detail::reid2_cancel_at(a, b)) out.push_back({MoveKind::ReidIICancel, t});
    if (detail::twist_remove_at(a, b)) out.push_back({MoveKind::ExtremumTwist, t});
    if (detail::slide_at(a, b)) out.push_back({MoveKind::CrossingSlide, t});
  }
  for (int t = 0; t + 2 < n; ++t)
    if (detail::reid3_at(ev[t], ev[t + 1], ev[t + 2])) out.push_back({MoveKind::ReidIII, t});
  for (int t = 0; t < n; ++t)
    if (is_extremum(ev[t])) {
      out.push_back({MoveKind::ExtremumTwist, t, ev[t].pos, +1});
      out.push_back({MoveKind::ExtremumTwist, t, ev[t].pos, -1});
    }
  for (int g = 0; g <= n; ++g) {
    const int c = counts[g];
    for (int i = 1; i <= c; ++i) out.push_back({MoveKind::ZigzagInsert, g, i, +1});
    for (int i = 2; i <= c + 1; ++i) out.push_back({MoveKind::ZigzagInsert, g, i, -1});
    for (int i = 1; i + 1 <= c; ++i) {
      out.push_back({MoveKind::ReidIIInsert, g, i, +1});
      out.push_back({MoveKind::ReidIIInsert, g, i, -1});
    }
  }
  std::sort(out.begin(), out.end(), detail::move_order);
  return out;
}

inline MorseWord apply_move(const MorseWord& w, const Move& m) {
  const std::vector<Event>& ev = w.events();
  const int n = static_cast<int>(ev.size());
  auto fail = [](const std::string& why) -> MorseWord { throw InapplicableMoveError(why); };
  const int t = m.index;

  auto need_pair = [&] {
    if (t < 0 || t + 1 >= n) throw InapplicableMoveError("event index out of range");
  };
  std::vector<Event> out;
  out.reserve(ev.size() + 2);

  switch (m.kind) {
    case MoveKind::ZigzagCancel: {
      need_pair();
      if (!detail::zigzag_cancel_at(ev[t], ev[t + 1])) return fail("no zigzag at index");
      out.assign(ev.begin(), ev.end());
      out.erase(out.begin() + t, out.begin() + t + 2);
      break;
    }
    case MoveKind::ZigzagInsert: {
      if (t < 0 || t > n) return fail("gap index out of range");
      const int c = slice_counts(w)[t];
      const bool left = m.aux < 0;
      if (left ? (m.pos < 2 || m.pos > c + 1) : (m.pos < 1 || m.pos > c))
        return fail("zigzag position out of range");
      out.assign(ev.begin(), ev.end());
      out.insert(out.begin() + t,
                 {Event{EventKind::Cup, m.pos}, Event{EventKind::Cap, m.pos + (left ? -1 : 1)}});
      break;
    }
    case MoveKind::FarCommute: {
      need_pair();
      auto sw = try_commute(ev[t], ev[t + 1]);
      if (!sw) return fail("events do not far-commute");
      out.assign(ev.begin(), ev.end());
      out[t] = sw->first;
      out[t + 1] = sw->second;
      break;
    }
    case MoveKind::ReidIICancel: {
      need_pair();
      if (!detail::reid2_cancel_at(ev[t], ev[t + 1])) return fail("no opposite crossing pair");
      out.assign(ev.begin(), ev.end());
      out.erase(out.begin() + t, out.begin() + t + 2);
      break;
    }
    case MoveKind::ReidIIInsert: {
      if (t < 0 || t > n) return fail("gap index out of range");
      const int c = slice_counts(w)[t];
      if (m.pos < 1 || m.pos + 1 > c) return fail("crossing position out of range");
      EventKind first = m.aux >= 0 ? EventKind::CrossPos : EventKind::CrossNeg;
      EventKind second = m.aux >= 0 ? EventKind::CrossNeg : EventKind::CrossPos;
      out.assign(ev.begin(), ev.end());
      out.insert(out.begin() + t, {Event{first, m.pos}, Event{second, m.pos}});
      break;
    }
    case MoveKind::ReidIII: {
      if (t < 0 || t + 2 >= n) return fail("event index out of range");
      if (!detail::reid3_at(ev[t], ev[t + 1], ev[t + 2])) return fail("no braid triple");
      out.assign(ev.begin(), ev.end());
      std::swap(out[t].pos, out[t + 1].pos);
      out[t + 2].pos = out[t].pos;
      break;
    }
    case MoveKind::ExtremumTwist: {
      if (m.aux == 0) {
        need_pair();
        if (!detail::twist_remove_at(ev[t], ev[t + 1])) return fail("no kink at index");
        out.assign(ev.begin(), ev.end());
        out.erase(out.begin() + (ev[t].kind == EventKind::Cup ? t + 1 : t));
      } else {
        if (t < 0 || t >= n || !is_extremum(ev[t]) || ev[t].pos != m.pos)
          return fail("no extremum at index");
        EventKind sign = m.aux > 0 ? EventKind::CrossPos : EventKind::CrossNeg;
        out.assign(ev.begin(), ev.end());
        out.insert(out.begin() + (ev[t].kind == EventKind::Cup ? t + 1 : t), Event{sign, m.pos});
      }
      break;
    }
    case MoveKind::CrossingSlide: {
      need_pair();
      const Event& a = ev[t];
      const Event& b = ev[t + 1];
      if (!detail::slide_at(a, b)) return fail("no slidable crossing at index");
      out.assign(ev.begin(), ev.end());
      if (a.kind == EventKind::Cup) {
        out[t] = Event{EventKind::Cup, b.pos};
        out[t + 1] = flip_sign(Event{b.kind, a.pos});
      } else {
        out[t] = flip_sign(Event{a.kind, b.pos});
        out[t + 1] = Event{EventKind::Cap, a.pos};
      }
      break;
    }
  }
  return MorseWord(std::move(out));
}

// Lexicographic reduction by far-commutation: exchange adjacent events
// whenever the exchange lowers the token string, repeated to a fixpoint.
// Every valid exchange strictly lowers the whole-word token string, and the
// commutation class of a word is finite, so this terminates. Used as the
// deduplication key for search frontiers; it is deterministic, though not
// guaranteed to be the global class minimum.
inline std::vector<Event> canonical_events(std::vector<Event> ev) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t t = 0; t + 1 < ev.size(); ++t) {
      auto sw = try_commute(ev[t], ev[t + 1]);
      if (!sw) continue;
      std::string cur = token(ev[t]) + ' ' + token(ev[t + 1]) + ' ';
      std::string alt = token(sw->first) + ' ' + token(sw->second) + ' ';
      if (alt < cur) {
        ev[t] = sw->first;
        ev[t + 1] = sw->second;
        changed = true;
      }
    }
  }
  return ev;
}

inline MorseWord canonical_form(const MorseWord& w) {
  return MorseWord(canonical_events(w.events()));
}

inline std::string canonical_key(const MorseWord& w) {
  std::string out;
  for (const Event& e : canonical_events(w.events())) {
    if (!out.empty()) out += ' ';
    out += token(e);
  }
  return out;
}

// Stable text form, one move per line; indices are 1-based in text.
inline std::string move_text(const Move& m) {
  auto at = [&] { return " @" + std::to_string(m.index + 1); };
  switch (m.kind) {
    case MoveKind::ZigzagCancel: return "zigzag-cancel" + at();
    case MoveKind::ZigzagInsert:
      return "zigzag-insert" + at() + " pos=" + std::to_string(m.pos) +
             (m.aux < 0 ? " side=left" : " side=right");
    case MoveKind::FarCommute: return "far-commute" + at();
    case MoveKind::ReidIICancel: return "reid2-cancel" + at();
    case MoveKind::ReidIIInsert:
      return "reid2-insert" + at() + " pos=" + std::to_string(m.pos) +
             (m.aux >= 0 ? " order=pm" : " order=mp");
    case MoveKind::ReidIII: return "reid3" + at();
    case MoveKind::ExtremumTwist:
      if (m.aux == 0) return "twist-remove" + at();
      return "twist-add" + at() + " pos=" + std::to_string(m.pos) +
             (m.aux > 0 ? " sign=+" : " sign=-");
    default: return "slide" + at();
  }
}

inline Move parse_move(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) parts.push_back(line.substr(start, i - start));
  }
  if (parts.empty()) throw Error("empty move line");

  auto want_int = [&](std::string_view s, std::string_view prefix) -> int {
    if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix)
      throw Error("bad move field '" + std::string(s) + "'");
    int v = 0;
    for (char c : s.substr(prefix.size())) {
      if (c < '0' || c > '9') throw Error("bad move field '" + std::string(s) + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };

  Move m{MoveKind::ZigzagCancel, 0, 0, 0};
  std::string_view kind = parts[0];
  std::size_t next = 2;
  if (parts.size() < 2) throw Error("move line missing index");
  m.index = want_int(parts[1], "@") - 1;

  if (kind == "zigzag-cancel") m.kind = MoveKind::ZigzagCancel;
  else if (kind == "far-commute") m.kind = MoveKind::FarCommute;
  else if (kind == "reid2-cancel") m.kind = MoveKind::ReidIICancel;
  else if (kind == "reid3") m.kind = MoveKind::ReidIII;
  else if (kind == "slide") m.kind = MoveKind::CrossingSlide;
  else if (kind == "twist-remove") m.kind = MoveKind::ExtremumTwist;
  else if (kind == "zigzag-insert") {
    m.kind = MoveKind::ZigzagInsert;
    m.pos = want_int(parts.at(next++), "pos=");
    std::string_view side = parts.at(next++);
    if (side == "side=left") m.aux = -1;
    else if (side == "side=right") m.aux = +1;
    else throw Error("bad zigzag side '" + std::string(side) + "'");
  } else if (kind == "reid2-insert") {
    m.kind = MoveKind::ReidIIInsert;
    m.pos = want_int(parts.at(next++), "pos=");
    std::string_view order = parts.at(next++);
    if (order == "order=pm") m.aux = +1;
    else if (order == "order=mp") m.aux = -1;
    else throw Error("bad crossing order '" + std::string(order) + "'");
  } else if (kind == "twist-add") {
    m.kind = MoveKind::ExtremumTwist;
    m.pos = want_int(parts.at(next++), "pos=");
    std::string_view sign = parts.at(next++);
    if (sign == "sign=+") m.aux = +1;
    else if (sign == "sign=-") m.aux = -1;
    else throw Error("bad twist sign '" + std::string(sign) + "'");
  } else {
    throw Error("unknown move kind '" + std::string(kind) + "'");
  }
  return m;
}

inline std::string trace_text(const std::vector<Move>& trace) {
  std::string out;
  for (const Move& m : trace) out += move_text(m) + "\n";
  return out;
}

inline std::vector<Move> parse_trace(std::string_view text) {
  std::vector<Move> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) {
      if (start > text.size()) break;
      continue;
    }
    out.push_back(parse_move(line));
  }
  return out;
}

}  // namespace trunkforge
