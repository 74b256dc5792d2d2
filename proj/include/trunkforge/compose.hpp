#pragma once

// Connected-sum stacking: place one embedding above another and splice the
// top maximum of the lower word to the bottom minimum of the upper word.

#include <algorithm>
#include <string>
#include <vector>

#include "trunkforge/errors.hpp"
#include "trunkforge/invariants.hpp"
#include "trunkforge/morse.hpp"
#include "trunkforge/profile.hpp"

namespace trunkforge {

namespace detail {

inline void require_knot(const MorseWord& w, const char* which) {
  int n = components(w);
  if (n != 1)
    throw MultiComponentError(std::string(which) + " has " + std::to_string(n) + " components",
                              n);
}

}  // namespace detail

// k1 with its final cap removed, then k2 with its initial cup removed. Both
// removed events sit at position 1 by the closed-word invariants, so the two
// open strands splice directly with no renumbering. The result glues the
// profiles over the shared boundary width 2.
inline MorseWord stack(const MorseWord& k1, const MorseWord& k2) {
  detail::require_knot(k1, "first word");
  detail::require_knot(k2, "second word");
  std::vector<Event> events(k1.events().begin(), k1.events().end() - 1);
  events.insert(events.end(), k2.events().begin() + 1, k2.events().end());
  return MorseWord(std::move(events));
}

// The three identities realized with equality by the stacked embedding.
struct StackIdentities {
  int bridge;       // b1 + b2 - 1
  long long width;  // w1 + w2 - 2
  int trunk;        // max(tr1, tr2)
};

inline StackIdentities stack_identities(const MorseWord& k1, const MorseWord& k2) {
  InvariantReport r1 = report(k1);
  InvariantReport r2 = report(k2);
  InvariantReport rs = report(stack(k1, k2));
  if (rs.bridge != r1.bridge + r2.bridge - 1)
    throw InternalError("stacked bridge " + std::to_string(rs.bridge) + " != " +
                        std::to_string(r1.bridge + r2.bridge - 1));
  if (rs.width != r1.width + r2.width - 2)
    throw InternalError("stacked width " + std::to_string(rs.width) + " != " +
                        std::to_string(r1.width + r2.width - 2));
  if (rs.trunk != std::max(r1.trunk, r2.trunk))
    throw InternalError("stacked trunk " + std::to_string(rs.trunk) + " != max(" +
                        std::to_string(r1.trunk) + "," + std::to_string(r2.trunk) + ")");
  return StackIdentities{rs.bridge, rs.width, rs.trunk};
}

// Entrywise n-fold scaling of a profile, the level data of an n-strand
// satellite. For n > 1 the result is not a knot profile (it no longer starts
// at 2), so it is returned as a plain level sequence.
inline std::vector<int> scale_profile(const WidthProfile& prof, int n) {
  if (n < 1) throw ValidationError("scale factor must be positive", 1);
  std::vector<int> out;
  out.reserve(prof.size());
  for (int x : prof.entries()) out.push_back(x * n);
  return out;
}

}  // namespace trunkforge
