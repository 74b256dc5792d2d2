#pragma once

// Seeded search over the move orbit of a word, minimizing width, trunk,
// bridge count, or (trunk, width) lexicographically. All strategies are
// deterministic for a fixed (word, config, seed).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "trunkforge/errors.hpp"
#include "trunkforge/invariants.hpp"
#include "trunkforge/morse.hpp"
#include "trunkforge/moves.hpp"
#include "trunkforge/profile.hpp"

namespace trunkforge {

enum class Objective : std::uint8_t { Width, Trunk, Bridge, TrunkThenWidth };

// (primary, secondary), compared lexicographically. Secondary is 0 except
// for TrunkThenWidth.
using ObjectiveValue = std::pair<long long, long long>;

inline ObjectiveValue evaluate(const MorseWord& w, Objective obj) {
  WidthProfile p = profile(w, /*allow_links=*/true);
  switch (obj) {
    case Objective::Width: return {width(p), 0};
    case Objective::Trunk: return {trunk(p), 0};
    case Objective::Bridge: return {bridge(p), 0};
    default: return {trunk(p), width(p)};
  }
}

// The unconditional floor of each objective over closed single-component
// words: every profile contains the level 2, so nothing can beat these.
inline ObjectiveValue objective_floor(Objective obj) {
  switch (obj) {
    case Objective::Width: return {2, 0};
    case Objective::Trunk: return {2, 0};
    case Objective::Bridge: return {1, 0};
    default: return {2, 2};
  }
}

struct BfsStrategy {
  int depth = 3;
  std::size_t node_cap = 1'000'000;
};

struct GreedyStrategy {
  int max_steps = 100;
};

struct AnnealStrategy {
  double t0 = 4.0;
  double decay = 0.995;
  int steps = 2000;
};

struct SearchConfig {
  Objective objective = Objective::Width;
  std::variant<BfsStrategy, GreedyStrategy, AnnealStrategy> strategy = BfsStrategy{};
  std::uint64_t seed = 0;
};

struct SearchResult {
  MorseWord best;
  ObjectiveValue best_value;
  std::vector<Move> trace;  // replays start -> best
  bool budget_hit = false;
  std::size_t explored = 1;
};

namespace detail {

struct BfsNode {
  MorseWord word;
  int parent;
  Move via;
  int depth;
  ObjectiveValue value;
};

inline SearchResult search_bfs(const MorseWord& start, Objective obj, const BfsStrategy& strat) {
  const ObjectiveValue floor = objective_floor(obj);
  std::vector<BfsNode> nodes;
  nodes.push_back({start, -1, Move{MoveKind::ZigzagCancel, 0}, 0, evaluate(start, obj)});
  std::unordered_set<std::string> seen{canonical_key(start)};
  std::size_t best = 0;
  bool budget = false;
  bool done = nodes[0].value <= floor;

  for (std::size_t qi = 0; !done && qi < nodes.size(); ++qi) {
    const int depth = nodes[qi].depth;
    if (depth >= strat.depth) continue;
    const MorseWord cur = nodes[qi].word;
    for (const Move& m : enumerate_moves(cur)) {
      MorseWord child = apply_move(cur, m);
      if (!seen.insert(canonical_key(child)).second) continue;
      ObjectiveValue v = evaluate(child, obj);
      nodes.push_back({std::move(child), static_cast<int>(qi), m, depth + 1, v});
      if (v < nodes[best].value) best = nodes.size() - 1;
      if (nodes[best].value <= floor) {
        done = true;
        break;
      }
      if (nodes.size() > strat.node_cap) {
        budget = true;
        done = true;
        break;
      }
    }
  }

  std::vector<Move> trace;
  for (std::size_t at = best; nodes[at].parent >= 0; at = static_cast<std::size_t>(nodes[at].parent))
    trace.push_back(nodes[at].via);
  std::reverse(trace.begin(), trace.end());
  return SearchResult{nodes[best].word, nodes[best].value, std::move(trace), budget, nodes.size()};
}

inline SearchResult search_greedy(const MorseWord& start, Objective obj,
                                  const GreedyStrategy& strat) {
  MorseWord cur = start;
  ObjectiveValue cur_v = evaluate(cur, obj);
  std::vector<Move> trace;
  std::size_t explored = 1;
  int steps = 0;
  for (; steps < strat.max_steps; ++steps) {
    std::optional<Move> best_move;
    std::optional<MorseWord> best_child;
    ObjectiveValue best_v = cur_v;
    for (const Move& m : enumerate_moves(cur)) {
      MorseWord child = apply_move(cur, m);
      ++explored;
      ObjectiveValue v = evaluate(child, obj);
      if (v < best_v) {  // strict: ties keep the earliest move
        best_v = v;
        best_move = m;
        best_child = std::move(child);
      }
    }
    if (!best_move) break;
    cur = std::move(*best_child);
    cur_v = best_v;
    trace.push_back(*best_move);
  }

  bool budget = false;
  if (steps == strat.max_steps) {
    for (const Move& m : enumerate_moves(cur))
      if (evaluate(apply_move(cur, m), obj) < cur_v) {
        budget = true;  // stopped while still improving
        break;
      }
  }
  return SearchResult{std::move(cur), cur_v, std::move(trace), budget, explored};
}

inline SearchResult search_anneal(const MorseWord& start, Objective obj,
                                  const AnnealStrategy& strat, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng] { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
  auto scalar = [](const ObjectiveValue& v) {
    return static_cast<double>(v.first) * 1e6 + static_cast<double>(v.second);
  };

  MorseWord cur = start;
  ObjectiveValue cur_v = evaluate(cur, obj);
  MorseWord best = cur;
  ObjectiveValue best_v = cur_v;
  std::vector<Move> accepted;
  std::size_t best_len = 0;
  std::size_t explored = 1;

  double temp = strat.t0;
  for (int step = 0; step < strat.steps; ++step, temp *= strat.decay) {
    std::vector<Move> moves = enumerate_moves(cur);
    if (moves.empty()) break;
    const Move& m = moves[rng() % moves.size()];
    MorseWord child = apply_move(cur, m);
    ++explored;
    ObjectiveValue v = evaluate(child, obj);
    double delta = scalar(v) - scalar(cur_v);
    if (delta <= 0.0 || (temp > 0.0 && uniform01() < std::exp(-delta / temp))) {
      cur = std::move(child);
      cur_v = v;
      accepted.push_back(m);
      if (v < best_v) {
        best = cur;
        best_v = v;
        best_len = accepted.size();
      }
    }
  }
  accepted.resize(best_len);
  return SearchResult{std::move(best), best_v, std::move(accepted), false, explored};
}

}  // namespace detail

inline SearchResult search(const MorseWord& start, const SearchConfig& cfg) {
  int n = components(start);
  if (n != 1) throw MultiComponentError("search requires a knot, got " + std::to_string(n) +
                                        " components", n);
  return std::visit(
      [&](const auto& strat) -> SearchResult {
        using T = std::decay_t<decltype(strat)>;
        if constexpr (std::is_same_v<T, BfsStrategy>)
          return detail::search_bfs(start, cfg.objective, strat);
        else if constexpr (std::is_same_v<T, GreedyStrategy>)
          return detail::search_greedy(start, cfg.objective, strat);
        else
          return detail::search_anneal(start, cfg.objective, strat, cfg.seed);
      },
      cfg.strategy);
}

// Exact minimum of the objective over every word generated by breadth-first
// expansion to the given depth, with canonical-form deduplication. Depth
// counts applied moves; words identified by the commutation quotient are
// expanded once, each generated word is evaluated before deduplication.
// Throws BudgetExceededError if the frontier outgrows node_cap.
inline ObjectiveValue orbit_min(const MorseWord& start, int depth, Objective obj,
                                std::size_t node_cap = 1'000'000) {
  const ObjectiveValue floor = objective_floor(obj);
  std::unordered_set<std::string> seen{canonical_key(start)};
  std::vector<MorseWord> frontier{start};
  ObjectiveValue best = evaluate(start, obj);
  std::size_t total = 1;

  for (int d = 0; d < depth && !frontier.empty() && best > floor; ++d) {
    std::vector<MorseWord> next;
    for (const MorseWord& cur : frontier) {
      for (const Move& m : enumerate_moves(cur)) {
        MorseWord child = apply_move(cur, m);
        if (!seen.insert(canonical_key(child)).second) continue;
        ObjectiveValue v = evaluate(child, obj);
        if (v < best) best = v;
        if (best <= floor) return best;
        if (++total > node_cap)
          throw BudgetExceededError("orbit enumeration exceeded " + std::to_string(node_cap) +
                                    " words at depth " + std::to_string(d + 1));
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return best;
}

}  // namespace trunkforge
