// trunkforge: Morse-word knot invariants, connected-sum stacking, level
// decompositions, move search, and diagram rendering.
//
// Exit codes: 0 success, 2 input error, 3 link rejected, 4 budget cap hit
// (always for orbit-min, for search only with --strict).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "trunkforge/trunkforge.hpp"

using namespace trunkforge;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitLink = 3;
constexpr int kExitBudget = 4;

struct ExitWith {
  int code;
};

// Shared way of naming a knot on the command line: an inline word, a word
// file, or a catalog entry.
struct KnotInput {
  std::string word;
  std::string file;
  std::string catalog_name;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("-w,--word", word, "inline Morse word, e.g. 'u1 u2 n1 n1'");
    cmd->add_option("-i,--input", file, "file containing a Morse word");
    cmd->add_option("-c,--catalog", catalog_name, "catalog entry name");
  }

  MorseWord resolve() const {
    int given = !word.empty() + !file.empty() + !catalog_name.empty();
    if (given != 1) throw Error("give exactly one of --word, --input, --catalog");
    if (!word.empty()) return parse_word(word);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error("cannot open '" + file + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      return parse_word(buf.str());
    }
    Catalog cat = load_default_catalog();
    const CatalogEntry& e = cat.get(catalog_name);
    if (e.word) return *e.word;
    if (e.decomposition)
      throw Error("catalog entry '" + catalog_name +
                  "' stores levels only; use 'trunkforge catalog " + catalog_name +
                  " --snake' for an unknotted realization");
    throw Error("catalog entry '" + catalog_name + "' records facts only");
  }
};

// A name-or-word positional: catalog names win, anything else must parse.
MorseWord resolve_name_or_word(const std::string& text, const Catalog& cat) {
  if (cat.contains(text)) {
    const CatalogEntry& e = cat.get(text);
    if (!e.word) throw Error("catalog entry '" + text + "' has no stored word");
    return *e.word;
  }
  return parse_word(text);
}

void emit(const std::string& format, const InvariantReport& r,
          const std::optional<std::string>& word = std::nullopt) {
  if (format == "json") {
    json j = report_json(r);
    if (word) j["word"] = *word;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << report_text(r);
    if (word) std::cout << "word=" << *word << "\n";
  }
}

Objective parse_objective(const std::string& name) {
  if (name == "width") return Objective::Width;
  if (name == "trunk") return Objective::Trunk;
  if (name == "bridge") return Objective::Bridge;
  if (name == "trunk-width") return Objective::TrunkThenWidth;
  throw Error("unknown objective '" + name + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Morse-word knot invariants: width, bridge number, and trunk"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // invariants
  auto* inv = app.add_subcommand("invariants", "compute width, bridge, trunk, and levels");
  KnotInput inv_in;
  inv_in.add_flags(inv);
  std::string inv_thick, inv_thin;
  inv->add_option("--thick", inv_thick, "thick level widths, comma separated");
  inv->add_option("--thin", inv_thin, "thin level widths, comma separated");
  bool allow_links = false;
  inv->add_flag("--allow-links", allow_links, "accept non-split multi-component words");
  inv->callback([&] {
    if (!inv_thick.empty()) {
      ThickThinDecomposition d(parse_int_list(inv_thick), parse_int_list(inv_thin));
      emit(format, report(d));
      return;
    }
    emit(format, report(inv_in.resolve(), allow_links));
  });

  // stack
  auto* stk = app.add_subcommand("stack", "stack one knot on another (connected sum)");
  std::vector<std::string> stack_args;
  stk->add_option("knots", stack_args, "two catalog names or inline words")
      ->expected(2)
      ->required();
  stk->callback([&] {
    Catalog cat = load_default_catalog();
    MorseWord k1 = resolve_name_or_word(stack_args[0], cat);
    MorseWord k2 = resolve_name_or_word(stack_args[1], cat);
    MorseWord s = stack(k1, k2);
    stack_identities(k1, k2);  // cross-check the composition
    emit(format, report(s), to_string(s));
  });

  // expand
  auto* exp = app.add_subcommand("expand", "interpolate a profile from thick/thin levels");
  std::string exp_thick, exp_thin;
  exp->add_option("--thick", exp_thick)->required();
  exp->add_option("--thin", exp_thin);
  exp->callback([&] {
    ThickThinDecomposition d(parse_int_list(exp_thick), parse_int_list(exp_thin));
    WidthProfile p = expand(d);
    if (format == "json")
      std::cout << json{{"profile", p.entries()}}.dump() << "\n";
    else
      std::cout << "profile=" << format_int_list(p.entries()) << "\n";
  });

  // realize
  auto* rea = app.add_subcommand("realize", "crossing-free word with a given profile");
  std::string rea_profile;
  rea->add_option("--profile", rea_profile, "profile entries, comma separated")->required();
  rea->callback([&] {
    MorseWord w = realize_profile(WidthProfile(parse_int_list(rea_profile)));
    if (format == "json")
      std::cout << json{{"word", to_string(w)}}.dump() << "\n";
    else
      std::cout << "word=" << to_string(w) << "\n";
  });

  // search
  auto* sea = app.add_subcommand("search", "minimize an objective over knot-preserving moves");
  KnotInput sea_in;
  sea_in.add_flags(sea);
  std::string objective = "width", strategy = "bfs", trace_out;
  int depth = 3, max_steps = 100, anneal_steps = 2000;
  double t0 = 4.0, decay = 0.995;
  std::uint64_t seed = 0;
  std::size_t node_cap = 1'000'000;
  bool strict = false;
  sea->add_option("--objective", objective)->check(CLI::IsMember({"width", "trunk", "bridge", "trunk-width"}));
  sea->add_option("--strategy", strategy)->check(CLI::IsMember({"bfs", "greedy", "anneal"}));
  sea->add_option("--depth", depth, "bfs depth");
  sea->add_option("--max-steps", max_steps, "greedy step budget");
  sea->add_option("--steps", anneal_steps, "annealing step budget");
  sea->add_option("--t0", t0, "annealing start temperature");
  sea->add_option("--decay", decay, "annealing temperature decay per step");
  sea->add_option("--seed", seed, "random seed (fixes all randomness)");
  sea->add_option("--node-cap", node_cap, "bfs node cap");
  sea->add_flag("--strict", strict, "exit 4 if a budget cap was hit");
  sea->add_option("--trace-out", trace_out, "write the move trace to this file");
  sea->callback([&] {
    SearchConfig cfg;
    cfg.objective = parse_objective(objective);
    cfg.seed = seed;
    if (strategy == "bfs")
      cfg.strategy = BfsStrategy{depth, node_cap};
    else if (strategy == "greedy")
      cfg.strategy = GreedyStrategy{max_steps};
    else
      cfg.strategy = AnnealStrategy{t0, decay, anneal_steps};
    SearchResult r = search(sea_in.resolve(), cfg);
    InvariantReport rep = report(r.best);
    if (format == "json") {
      json j = report_json(rep);
      j["word"] = to_string(r.best);
      j["budget_hit"] = r.budget_hit;
      j["trace"] = json::array();
      for (const Move& m : r.trace) j["trace"].push_back(move_text(m));
      std::cout << j.dump() << "\n";
    } else {
      emit(format, rep, to_string(r.best));
      std::cout << "budget_hit=" << (r.budget_hit ? "true" : "false") << "\n";
      if (trace_out.empty()) std::cout << "trace:\n" << trace_text(r.trace);
    }
    if (!trace_out.empty()) {
      std::ofstream out(trace_out);
      if (!out) throw Error("cannot write '" + trace_out + "'");
      out << trace_text(r.trace);
    }
    if (strict && r.budget_hit) throw ExitWith{kExitBudget};
  });

  // orbit-min
  auto* orb = app.add_subcommand("orbit-min", "exact objective minimum over a bounded move orbit");
  KnotInput orb_in;
  orb_in.add_flags(orb);
  std::string orb_objective = "width";
  int orb_depth = 2;
  std::size_t orb_cap = 1'000'000;
  orb->add_option("--objective", orb_objective)
      ->check(CLI::IsMember({"width", "trunk", "bridge", "trunk-width"}));
  orb->add_option("--depth", orb_depth);
  orb->add_option("--node-cap", orb_cap);
  orb->callback([&] {
    ObjectiveValue v = orbit_min(orb_in.resolve(), orb_depth, parse_objective(orb_objective), orb_cap);
    std::string shown = orb_objective == "trunk-width"
                            ? std::to_string(v.first) + "," + std::to_string(v.second)
                            : std::to_string(v.first);
    if (format == "json")
      std::cout << json{{"min", shown}, {"objective", orb_objective}}.dump() << "\n";
    else
      std::cout << "min=" << shown << "\n";
  });

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "list catalog entries or show one");
  std::string cat_name;
  bool snake = false;
  cat_cmd->add_option("name", cat_name, "entry to show (all when omitted)");
  cat_cmd->add_flag("--snake", snake, "also print an unknotted realization of the profile");
  cat_cmd->callback([&] {
    Catalog cat = load_default_catalog();
    if (cat_name.empty()) {
      for (const CatalogEntry& e : cat.entries()) {
        std::cout << e.name;
        for (const KnownFact& f : e.facts)
          std::cout << " " << invariant_key_name(f.key) << "=" << f.value;
        std::cout << "\n";
      }
      return;
    }
    const CatalogEntry& e = cat.get(cat_name);
    std::cout << "name=" << e.name << "\n";
    if (e.word) std::cout << "word=" << to_string(*e.word) << "\n";
    if (e.decomposition) {
      std::cout << "thick=" << format_int_list(e.decomposition->thick()) << "\n";
      std::cout << "thin=" << format_int_list(e.decomposition->thin()) << "\n";
    }
    for (const KnownFact& f : e.facts)
      std::cout << "fact: " << invariant_key_name(f.key) << "=" << f.value
                << (f.source.empty() ? "" : " src=" + f.source) << "\n";
    if (!e.notes.empty()) std::cout << "notes: " << e.notes << "\n";
    if (snake)
      std::cout << "snake=" << to_string(snake_realization(e)) << "  # unknot with this profile\n";
  });

  // render
  auto* ren = app.add_subcommand("render", "draw a word as ascii art or svg");
  KnotInput ren_in;
  ren_in.add_flags(ren);
  std::string ren_format = "ascii", out_path;
  ren->add_option("--format", ren_format)->check(CLI::IsMember({"ascii", "svg"}));
  ren->add_option("-o,--out", out_path, "write to file instead of stdout");
  ren->callback([&] {
    MorseWord w = ren_in.resolve();
    std::string art = ren_format == "svg" ? render_svg(w) : render_ascii(w);
    if (out_path.empty()) {
      std::cout << art;
    } else {
      std::ofstream out(out_path);
      if (!out) throw Error("cannot write '" + out_path + "'");
      out << art;
    }
  });

  // reproduce-paper
  auto* repro = app.add_subcommand(
      "reproduce-paper", "recompute every published value shipped in the catalog");
  repro->callback([&] {
    Catalog cat = load_default_catalog();
    int bad = 0;
    auto row = [&](const std::string& name, const std::string& inv, long long got,
                   long long want) {
      bool ok = got == want;
      bad += !ok;
      std::printf("%-4s %-12s %-3s got=%-6lld want=%-6lld\n", ok ? "ok" : "FAIL", name.c_str(),
                  inv.c_str(), got, want);
    };
    for (const char* name : {"4_1", "8_5", "4_1#8_5"}) {
      const CatalogEntry& e = cat.get(name);
      InvariantReport r = report(*e.word);
      for (const KnownFact& f : e.facts)
        row(name, std::string(invariant_key_name(f.key)),
            f.key == InvariantKey::Width ? r.width
            : f.key == InvariantKey::Bridge ? r.bridge
                                            : r.trunk,
            f.value);
    }
    for (const char* name : {"k_2_1_3_7", "k'_2_1_3_7", "k_4_1_3_3", "k'_4_1_3_3"}) {
      const CatalogEntry& e = cat.get(name);
      InvariantReport r = report(*e.decomposition);
      for (const KnownFact& f : e.facts)
        row(name, std::string(invariant_key_name(f.key)),
            f.key == InvariantKey::Width ? r.width
            : f.key == InvariantKey::Bridge ? r.bridge
                                            : r.trunk,
            f.value);
    }
    if (bad == 0)
      std::printf("all values reproduced\n");
    else
      std::printf("%d value(s) failed\n", bad);
    if (bad) throw ExitWith{1};
  });

  // let the global --format appear after a subcommand name too
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const MultiComponentError& e) {
    std::cerr << "error: " << e.what() << " (pass --allow-links to accept links)\n";
    return kExitLink;
  } catch (const ValidationError& e) {
    std::cerr << "error at event " << e.event_index << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const LexError& e) {
    std::cerr << "error at token " << e.token_index << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UnknownNameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
