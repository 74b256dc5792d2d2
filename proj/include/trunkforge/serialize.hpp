#pragma once

// Stable text and JSON forms of reports. Keys are emitted in sorted order in
// both formats so output is diffable.

#include <json.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trunkforge/errors.hpp"
#include "trunkforge/invariants.hpp"

namespace trunkforge {

inline std::string format_int_list(std::span<const int> xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

// Comma-separated integers, e.g. "2,4,2". Whitespace around items allowed.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) return out;
  while (true) {
    skip_ws();
    bool neg = i < text.size() && text[i] == '-';
    if (neg) ++i;
    if (i == text.size() || text[i] < '0' || text[i] > '9')
      throw Error("bad integer list '" + std::string(text) + "'");
    long long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000) throw Error("integer out of range in list");
      ++i;
    }
    out.push_back(static_cast<int>(neg ? -v : v));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw Error("bad integer list '" + std::string(text) + "'");
    ++i;
  }
  return out;
}

inline std::string report_text(const InvariantReport& r) {
  std::string out;
  out += "bridge=" + std::to_string(r.bridge) + "\n";
  out += "profile=" + format_int_list(r.profile.entries()) + "\n";
  out += "thick=" + format_int_list(r.decomposition.thick()) + "\n";
  out += "thin=" + format_int_list(r.decomposition.thin()) + "\n";
  out += "trunk=" + std::to_string(r.trunk) + "\n";
  out += "width=" + std::to_string(r.width) + "\n";
  return out;
}

inline nlohmann::json report_json(const InvariantReport& r) {
  return nlohmann::json{{"bridge", r.bridge},
                        {"profile", r.profile.entries()},
                        {"thick", r.decomposition.thick()},
                        {"thin", r.decomposition.thin()},
                        {"trunk", r.trunk},
                        {"width", r.width}};
}

}  // namespace trunkforge
