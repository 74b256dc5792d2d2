#pragma once

// Named knots with recorded invariant facts. The catalog lives in a data
// file (one stanza per entry) so it can be reviewed and extended without
// recompiling; every entry is re-validated against its stored facts on load.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trunkforge/errors.hpp"
#include "trunkforge/invariants.hpp"
#include "trunkforge/morse.hpp"
#include "trunkforge/profile.hpp"
#include "trunkforge/serialize.hpp"

namespace trunkforge {

enum class InvariantKey : std::uint8_t { Width, Bridge, Trunk };

inline std::string_view invariant_key_name(InvariantKey k) {
  switch (k) {
    case InvariantKey::Width: return "w";
    case InvariantKey::Bridge: return "b";
    default: return "tr";
  }
}

struct KnownFact {
  InvariantKey key;
  long long value;
  std::string source;
};

struct CatalogEntry {
  std::string name;
  std::optional<MorseWord> word;
  std::optional<ThickThinDecomposition> decomposition;
  std::vector<KnownFact> facts;
  std::string notes;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline KnownFact parse_fact(std::string_view value, const std::string& entry_name) {
  auto fail = [&](const std::string& why) -> KnownFact {
    throw Error("catalog entry '" + entry_name + "': bad fact '" + std::string(value) + "': " + why);
  };
  std::size_t eq = value.find('=');
  if (eq == std::string_view::npos) return fail("missing '='");
  std::string_view key_text = trim(value.substr(0, eq));
  InvariantKey key;
  if (key_text == "w")
    key = InvariantKey::Width;
  else if (key_text == "b")
    key = InvariantKey::Bridge;
  else if (key_text == "tr")
    key = InvariantKey::Trunk;
  else
    return fail("key must be w, b, or tr");

  std::string_view rest = value.substr(eq + 1);
  std::string source;
  std::size_t src = rest.find("src=");
  if (src != std::string_view::npos) {
    source = std::string(trim(rest.substr(src + 4)));
    rest = rest.substr(0, src);
  }
  rest = trim(rest);
  if (rest.empty()) return fail("missing value");
  long long v = 0;
  for (char c : rest) {
    if (c < '0' || c > '9') return fail("value must be a nonnegative integer");
    v = v * 10 + (c - '0');
    if (v > 1'000'000'000'000LL) return fail("value out of range");
  }
  return KnownFact{key, v, std::move(source)};
}

inline long long fact_lhs(const InvariantReport& r, InvariantKey k) {
  switch (k) {
    case InvariantKey::Width: return r.width;
    case InvariantKey::Bridge: return r.bridge;
    default: return r.trunk;
  }
}

inline void validate_entry(const CatalogEntry& e) {
  if (!e.word && !e.decomposition && e.facts.empty())
    throw Error("catalog entry '" + e.name + "' carries no word, no levels, and no facts");
  auto check_facts = [&](const InvariantReport& r, const char* route) {
    for (const KnownFact& f : e.facts) {
      long long got = fact_lhs(r, f.key);
      if (got != f.value)
        throw Error("catalog entry '" + e.name + "': " + std::string(invariant_key_name(f.key)) +
                    " recomputed via " + route + " gives " + std::to_string(got) +
                    ", recorded fact says " + std::to_string(f.value));
    }
  };
  if (e.word) check_facts(report(*e.word), "word");
  if (e.decomposition) check_facts(report(*e.decomposition), "levels");
  if (e.word && e.decomposition && !(thick_thin(profile(*e.word)) == *e.decomposition))
    throw Error("catalog entry '" + e.name + "': stored levels disagree with the word's profile");
}

}  // namespace detail

class Catalog {
 public:
  static Catalog parse(std::string_view text) {
    Catalog cat;
    std::optional<CatalogEntry> current;
    std::optional<std::vector<int>> thick, thin;

    auto flush = [&]() {
      if (!current) return;
      if (thin && !thick)
        throw Error("catalog entry '" + current->name + "': thin levels without thick levels");
      if (thick)
        current->decomposition = ThickThinDecomposition(std::move(*thick),
                                                        thin ? std::move(*thin) : std::vector<int>{});
      detail::validate_entry(*current);
      for (const CatalogEntry& prev : cat.entries_)
        if (prev.name == current->name)
          throw Error("duplicate catalog entry '" + current->name + "'");
      cat.entries_.push_back(std::move(*current));
      current.reset();
      thick.reset();
      thin.reset();
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = detail::trim(text.substr(start, end - start));
      start = end + 1;
      ++line_no;
      if (line.empty() || line.front() == '#') continue;

      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos)
        throw Error("catalog line " + std::to_string(line_no) + ": expected 'field: value'");
      std::string_view field = detail::trim(line.substr(0, colon));
      std::string_view value = detail::trim(line.substr(colon + 1));

      if (field == "name") {
        flush();
        if (value.empty()) throw Error("catalog line " + std::to_string(line_no) + ": empty name");
        current = CatalogEntry{std::string(value), std::nullopt, std::nullopt, {}, ""};
        continue;
      }
      if (!current)
        throw Error("catalog line " + std::to_string(line_no) + ": field before any 'name:'");
      if (field == "word") {
        current->word = parse_word(value);
      } else if (field == "thick") {
        thick = parse_int_list(value);
      } else if (field == "thin") {
        thin = parse_int_list(value);
      } else if (field == "fact") {
        current->facts.push_back(detail::parse_fact(value, current->name));
      } else if (field == "notes") {
        if (!current->notes.empty()) current->notes += '\n';
        current->notes += std::string(value);
      } else {
        throw Error("catalog line " + std::to_string(line_no) + ": unknown field '" +
                    std::string(field) + "'");
      }
    }
    flush();
    return cat;
  }

  static Catalog load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

  const CatalogEntry& get(std::string_view name) const {
    for (const CatalogEntry& e : entries_)
      if (e.name == name) return e;
    throw UnknownNameError("no catalog entry named '" + std::string(name) + "'");
  }

  bool contains(std::string_view name) const {
    for (const CatalogEntry& e : entries_)
      if (e.name == name) return true;
    return false;
  }

  const std::vector<CatalogEntry>& entries() const { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;
};

// Crossing-free realization of the entry's level profile. This is an unknot
// with the same profile, suitable for pipeline tests; it is not the entry's
// knot.
inline MorseWord snake_realization(const CatalogEntry& e) {
  if (e.decomposition) return realize_profile(expand(*e.decomposition));
  if (e.word) return realize_profile(profile(*e.word));
  throw Error("catalog entry '" + e.name + "' has no level data to realize");
}

// Resolution order: TRUNKFORGE_CATALOG env var, then the compiled-in default.
inline std::string default_catalog_path() {
  if (const char* env = std::getenv("TRUNKFORGE_CATALOG")) return env;
#ifdef TRUNKFORGE_DEFAULT_CATALOG
  return TRUNKFORGE_DEFAULT_CATALOG;
#else
  return "data/catalog.txt";
#endif
}

inline Catalog load_default_catalog() { return Catalog::load_file(default_catalog_path()); }

}  // namespace trunkforge
