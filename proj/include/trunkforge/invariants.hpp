#pragma once

// Width, trunk, bridge number, and thick/thin level decompositions.
//
// Every invariant is computed by two independent routes: directly from the
// level profile, and from the thick/thin decomposition via
//   width  = (sum a_i^2 - sum b_j^2) / 2
//   bridge = (sum a_i   - sum b_j) / 2
// report() always runs both and refuses to return if they disagree.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "trunkforge/errors.hpp"
#include "trunkforge/morse.hpp"
#include "trunkforge/profile.hpp"

namespace trunkforge {

// Alternating thick widths a_1..a_n and thin widths b_1..b_{n-1} of a
// profile. A single-level profile has one thick entry and no thin entries.
class ThickThinDecomposition {
 public:
  ThickThinDecomposition(std::vector<int> thick, std::vector<int> thin)
      : thick_(std::move(thick)), thin_(std::move(thin)) {
    if (thick_.empty()) throw ValidationError("decomposition needs at least one thick level", 1);
    if (thin_.size() + 1 != thick_.size())
      throw ValidationError("need exactly one fewer thin level than thick levels", 1);
    for (std::size_t i = 0; i < thick_.size(); ++i) {
      int a = thick_[i];
      int floor = thick_.size() >= 2 ? 4 : 2;
      if (a < floor || a % 2 != 0)
        throw ValidationError("thick width " + std::to_string(a) + " out of range",
                              static_cast<int>(i) + 1);
    }
    for (std::size_t j = 0; j < thin_.size(); ++j) {
      int b = thin_[j];
      if (b < 2 || b % 2 != 0)
        throw ValidationError("thin width " + std::to_string(b) + " out of range",
                              static_cast<int>(j) + 1);
      if (b >= thick_[j] || b >= thick_[j + 1])
        throw ValidationError("thin width " + std::to_string(b) +
                                  " not below its neighboring thick widths",
                              static_cast<int>(j) + 1);
    }
  }

  const std::vector<int>& thick() const { return thick_; }
  const std::vector<int>& thin() const { return thin_; }

  friend bool operator==(const ThickThinDecomposition&, const ThickThinDecomposition&) = default;

 private:
  std::vector<int> thick_;
  std::vector<int> thin_;
};

// Thick levels are strict local maxima of the profile padded with virtual 0
// at both ends, thin levels strict local minima (pads excluded). The +-2
// steps make ties impossible.
inline ThickThinDecomposition thick_thin(const WidthProfile& prof) {
  const std::vector<int>& xs = prof.entries();
  std::vector<int> thick, thin;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    int prev = i == 0 ? 0 : xs[i - 1];
    int next = i + 1 == xs.size() ? 0 : xs[i + 1];
    if (xs[i] > prev && xs[i] > next) thick.push_back(xs[i]);
    if (xs[i] < prev && xs[i] < next) thin.push_back(xs[i]);
  }
  return ThickThinDecomposition(std::move(thick), std::move(thin));
}

inline long long width(const WidthProfile& prof) {
  long long w = 0;
  for (int x : prof.entries()) w += x;
  return w;
}

inline int trunk(const WidthProfile& prof) {
  return *std::max_element(prof.entries().begin(), prof.entries().end());
}

inline int bridge(const WidthProfile& prof) {
  return (static_cast<int>(prof.size()) + 1) / 2;
}

inline int bridge(const MorseWord& w) { return w.caps(); }

inline long long width(const ThickThinDecomposition& d) {
  long long s = 0;
  for (int a : d.thick()) s += static_cast<long long>(a) * a;
  for (int b : d.thin()) s -= static_cast<long long>(b) * b;
  return s / 2;
}

inline int bridge(const ThickThinDecomposition& d) {
  int s = 0;
  for (int a : d.thick()) s += a;
  for (int b : d.thin()) s -= b;
  return s / 2;
}

inline int trunk(const ThickThinDecomposition& d) {
  return *std::max_element(d.thick().begin(), d.thick().end());
}

// Inverse of thick_thin: monotone runs 2 up to a_1, down to b_1, up to a_2,
// ..., down to 2, in steps of 2.
inline WidthProfile expand(const ThickThinDecomposition& d) {
  std::vector<int> xs;
  int cur = 2;
  xs.push_back(cur);
  for (std::size_t i = 0; i < d.thick().size(); ++i) {
    for (; cur < d.thick()[i]; ) xs.push_back(cur += 2);
    int down_to = i < d.thin().size() ? d.thin()[i] : 2;
    for (; cur > down_to; ) xs.push_back(cur -= 2);
  }
  return WidthProfile(std::move(xs));
}

struct InvariantReport {
  long long width;
  int bridge;
  int trunk;
  ThickThinDecomposition decomposition;
  WidthProfile profile;
};

namespace detail {

inline void check_routes_agree(long long w_direct, long long w_formula, int b_direct,
                               int b_formula, int tr_direct, int tr_formula) {
  if (w_direct != w_formula)
    throw InternalError("width routes disagree: profile sum " + std::to_string(w_direct) +
                        " vs level formula " + std::to_string(w_formula));
  if (b_direct != b_formula)
    throw InternalError("bridge routes disagree: " + std::to_string(b_direct) + " vs " +
                        std::to_string(b_formula));
  if (tr_direct != tr_formula)
    throw InternalError("trunk routes disagree: " + std::to_string(tr_direct) + " vs " +
                        std::to_string(tr_formula));
}

}  // namespace detail

// Full report for a word, cross-checked by both routes.
inline InvariantReport report(const MorseWord& w, bool allow_links = false) {
  WidthProfile prof = profile(w, allow_links);
  ThickThinDecomposition d = thick_thin(prof);
  long long wd = width(prof);
  int bd = bridge(prof);
  int tr = trunk(prof);
  detail::check_routes_agree(wd, width(d), bd, bridge(d), tr, trunk(d));
  if (bd != bridge(w))
    throw InternalError("cap count " + std::to_string(bridge(w)) +
                        " does not match profile bridge " + std::to_string(bd));
  return InvariantReport{wd, bd, tr, std::move(d), std::move(prof)};
}

// Report for a stored decomposition, via its expansion.
inline InvariantReport report(const ThickThinDecomposition& d) {
  WidthProfile prof = expand(d);
  long long wd = width(prof);
  int bd = bridge(prof);
  int tr = trunk(prof);
  detail::check_routes_agree(wd, width(d), bd, bridge(d), tr, trunk(d));
  if (!(thick_thin(prof) == d))
    throw InternalError("expand/thick_thin round trip failed");
  return InvariantReport{wd, bd, tr, d, std::move(prof)};
}

}  // namespace trunkforge
