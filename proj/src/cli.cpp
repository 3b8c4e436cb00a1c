#include "braidforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "braidforge/error.hpp"
#include "braidforge/isomap.hpp"
#include "braidforge/render.hpp"

namespace braidforge::cli {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || v == 0 || value.front() == '-') {
    throw Error("config key " + key + " needs a positive integer, got \"" + value + "\"");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

void apply_config_text(Config& c, const std::string& text) {
  std::stringstream ss(text);
  int line_no = 0;
  for (std::string line; std::getline(ss, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(line_no) + " has no '='");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "sign_convention") {
      c.sign_convention = parse_sign_convention(value);
    } else if (key == "targets") {
      c.targets = split_list(value);
    } else if (key == "caps.summit_set") {
      c.caps.max_summit_set = parse_count(key, value);
    } else if (key == "caps.cycling") {
      c.caps.max_cycling = parse_count(key, value);
    } else if (key == "caps.generators") {
      c.generator_cap = static_cast<int>(parse_count(key, value));
    } else if (key == "caps.moves") {
      c.max_moves = parse_count(key, value);
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(parse_count(key, value));
    } else if (key == "seed") {
      c.seed = std::stoull(value);
    } else {
      throw Error("unknown config key \"" + key + "\"");
    }
  }
}

void apply_config_file(Config& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(c, ss.str());
}

std::vector<FiniteTarget> resolve_targets(const std::vector<std::string>& names) {
  std::vector<FiniteTarget> out;
  const auto builtin = builtin_target_names();
  for (const auto& name : names) {
    if (std::find(builtin.begin(), builtin.end(), name) != builtin.end()) {
      out.push_back(builtin_target(name));
    } else if (name.find('/') != std::string::npos || name.find('.') != std::string::npos) {
      out.push_back(load_target_file(name));
    } else {
      throw Error("unknown target \"" + name + "\"");
    }
  }
  return out;
}

namespace {

struct Context {
  explicit Context(std::ostream& o) : out(o) {}

  Config config;
  std::ostream& out;
  std::optional<int> strands;
  std::string format;
  std::string sign_convention;
  std::string targets;
  std::size_t caps_summit = 0, caps_cycling = 0, caps_moves = 0;
  int caps_generators = 0;
  unsigned threads = 0;
  std::optional<std::uint64_t> seed;

  // Command-line flags override the config file.
  // Bad settings are reported as usage errors.
  void finalize() {
    try {
      if (!sign_convention.empty()) config.sign_convention = parse_sign_convention(sign_convention);
      if (!targets.empty()) config.targets = split_list(targets);
      resolve_targets(config.targets);
    } catch (const Error& e) {
      throw CLI::ValidationError("config", e.what());
    }
    if (caps_summit) config.caps.max_summit_set = caps_summit;
    if (caps_cycling) config.caps.max_cycling = caps_cycling;
    if (caps_moves) config.max_moves = caps_moves;
    if (caps_generators) config.generator_cap = caps_generators;
    if (threads) config.threads = threads;
    if (seed) config.seed = *seed;
  }

  BraidWord word(const std::string& text) const { return parse_word(text, strands); }

  LinkingGraph graph(const BraidWord& w) const { return build_graph(w, config.sign_convention); }

  Presentation presentation(const BraidWord& w) const {
    return presentation_of(w, config.sign_convention);
  }

  HomCountOptions hom_options() const {
    HomCountOptions o;
    o.generator_cap = config.generator_cap;
    o.threads = config.threads;
    return o;
  }

  void emit(const nlohmann::json& j) const { out << j.dump(2) << '\n'; }

  void require_format(std::initializer_list<std::string_view> allowed) {
    if (format.empty()) {
      format = std::string(*allowed.begin());
      return;
    }
    for (auto a : allowed) {
      if (format == a) return;
    }
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw CLI::ValidationError("--format", "expected one of: " + list);
  }
};

nlohmann::json hom_counts_json(const Context& ctx, const Presentation& p, bool up_to_conjugacy) {
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json classes = nlohmann::json::object();
  for (const auto& t : resolve_targets(ctx.config.targets)) {
    HomCountOptions o = ctx.hom_options();
    o.up_to_conjugacy = up_to_conjugacy;
    const HomCount h = hom_count(p, t, o);
    counts[t.name()] = h.count;
    if (h.up_to_conjugacy) classes[t.name()] = *h.up_to_conjugacy;
  }
  nlohmann::json j{{"hom_counts", counts}};
  if (up_to_conjugacy) j["hom_counts_up_to_conjugacy"] = classes;
  return j;
}

struct Invariants {
  Abelianization ab;
  std::vector<std::uint64_t> counts;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants_of(const Context& ctx, const BraidWord& w,
                         const std::vector<FiniteTarget>& targets) {
  const Presentation p = ctx.presentation(w);
  Invariants inv{abelianization(p), {}};
  for (const auto& t : targets) inv.counts.push_back(hom_count(p, t, ctx.hom_options()).count);
  return inv;
}

int cmd_verify(Context& ctx, const BraidWord& start, std::size_t steps) {
  const auto targets = resolve_targets(ctx.config.targets);
  std::mt19937_64 rng(ctx.config.seed);
  const Invariants base = invariants_of(ctx, start, targets);
  CheckOptions check;
  check.generator_cap = ctx.config.generator_cap;

  BraidWord w = start;
  std::map<std::string, std::size_t> kinds;
  std::size_t map_violations = 0, invariant_changes = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<WordMove> moves;
    for (const auto& m : enumerate_moves(w)) {
      // Keep the strand count within two of the start.
      if (m.kind == MoveKind::MarkovStab && w.strands() >= start.strands() + 2) continue;
      moves.push_back(m);
    }
    const WordMove m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    const GeneratorMap map = map_for_move(w, m, ctx.config.sign_convention);
    const MapReport report = check_map(map, targets, check);
    const BraidWord next = apply_move(w, m);
    const bool same = invariants_of(ctx, next, targets) == base;
    ++kinds[std::string(to_string(m.kind))];
    map_violations += report.violation_count;
    invariant_changes += !same;
    if ((!same || !report.consistent()) && failures.size() < 10) {
      failures.push_back({{"step", step + 1},
                          {"word", serialize_word(w)},
                          {"move", format_move(m)},
                          {"invariants_changed", !same},
                          {"map", map_report_json(report)}});
    }
    w = next;
  }
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t k = 0; k < targets.size(); ++k) counts[targets[k].name()] = base.counts[k];
  const bool stable = map_violations == 0 && invariant_changes == 0;
  ctx.emit({{"word", word_json(start)},
            {"seed", ctx.config.seed},
            {"moves", steps},
            {"move_kinds", kinds},
            {"final_word", word_json(w)},
            {"abelianization", abelianization_json(base.ab)},
            {"hom_counts", counts},
            {"invariant_changes", invariant_changes},
            {"map_violations", map_violations},
            {"status", stable ? "stable" : "unstable"},
            {"failures", failures}});
  return stable ? kExitOk : kExitDomain;
}

int dispatch(CLI::App& app, Context& ctx, const std::vector<std::string>& words,
             const std::string& script, std::size_t verify_moves, const std::string& what,
             bool svg, bool dot, bool up_to_conjugacy) {
  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  ctx.finalize();

  auto one = [&] {
    // Unquoted letters arrive as separate tokens.
    std::string text;
    for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
    return ctx.word(text);
  };
  auto two = [&] {
    if (words.size() != 2) throw CLI::ValidationError(name, "expects exactly two words");
    return std::make_pair(ctx.word(words[0]), ctx.word(words[1]));
  };

  if (name == "parse") {
    ctx.require_format({"json", "plain"});
    const BraidWord w = one();
    if (ctx.format == "plain") {
      ctx.out << serialize_word(w) << '\n';
    } else {
      ctx.emit(word_json(w));
    }
  } else if (name == "bricks") {
    ctx.require_format({"json", "plain", "svg"});
    const BraidWord w = one();
    const BrickDiagram d(w);
    if (ctx.format == "svg") {
      ctx.out << render_svg(ctx.graph(w), RenderWhat::Bricks);
    } else if (ctx.format == "plain") {
      for (const auto& b : d.bricks()) {
        ctx.out << 's' << b.id + 1 << " column " << b.column << " [" << b.lo + 1 << ',' << b.hi + 1
                << "]\n";
      }
    } else {
      ctx.emit(bricks_json(d));
    }
  } else if (name == "graph") {
    ctx.require_format({"json", "dot", "svg"});
    const LinkingGraph g = ctx.graph(one());
    if (ctx.format == "json") {
      ctx.emit(graph_json(g));
    } else {
      ctx.out << render(g, RenderWhat::Graph, ctx.format == "svg" ? RenderFormat::Svg : RenderFormat::Dot);
    }
  } else if (name == "present") {
    ctx.require_format({"plain", "gap-style", "json"});
    const Presentation p = ctx.presentation(one());
    ctx.out << serialize(p, parse_presentation_format(ctx.format));
    if (ctx.format == "plain") ctx.out << '\n';
  } else if (name == "nf") {
    ctx.require_format({"json", "plain"});
    const NormalForm nf = normal_form(one());
    if (ctx.format == "plain") {
      ctx.out << nf.to_string() << '\n';
    } else {
      ctx.emit(normal_form_json(nf));
    }
  } else if (name == "conj") {
    ctx.require_format({"json"});
    const auto [a, b] = two();
    ctx.emit({{"a", word_json(a)}, {"b", word_json(b)}, {"conjugate", are_conjugate(a, b, ctx.config.caps)}});
  } else if (name == "summit") {
    ctx.require_format({"json"});
    const SummitData s = summit(normal_form(one()), ctx.config.caps);
    nlohmann::json set = nlohmann::json::array();
    for (const auto& nf : s.summit_set) set.push_back(normal_form_json(nf));
    ctx.emit({{"summit_power", s.summit_power}, {"size", s.summit_set.size()}, {"summit_set", set}});
  } else if (name == "halftwist") {
    ctx.require_format({"json"});
    const BraidWord w = one();
    const int k = summit_power(w, ctx.config.caps);
    ctx.emit({{"word", word_json(w)}, {"summit_power", k}, {"contains_half_twist", k >= 1}});
  } else if (name == "moveseq") {
    ctx.require_format({"json", "plain"});
    const auto [a, b] = two();
    MoveSequenceOptions o;
    o.caps = ctx.config.caps;
    o.max_moves = ctx.config.max_moves;
    const MoveSequence s = conjugacy_move_sequence(a, b, o);
    if (ctx.format == "plain") {
      for (const auto& m : s.moves) ctx.out << format_move(m) << '\n';
    } else {
      ctx.emit({{"a", word_json(a)},
                {"b", word_json(b)},
                {"method", s.method},
                {"length", s.moves.size()},
                {"moves", moves_json(s.moves)}});
    }
  } else if (name == "invariants") {
    ctx.require_format({"json"});
    const Presentation p = ctx.presentation(one());
    nlohmann::json j = hom_counts_json(ctx, p, up_to_conjugacy);
    j["abelianization"] = abelianization_json(abelianization(p));
    j["generators"] = p.generators();
    ctx.emit(j);
  } else if (name == "isocheck") {
    ctx.require_format({"json"});
    const auto [a, b] = two();
    std::vector<WordMove> moves;
    std::string method = "script";
    if (!script.empty()) {
      moves = parse_move_script(script, a);
    } else {
      MoveSequenceOptions o;
      o.caps = ctx.config.caps;
      o.max_moves = ctx.config.max_moves;
      const MoveSequence s = conjugacy_move_sequence(a, b, o);
      moves = s.moves;
      method = s.method;
    }
    if (apply_moves(a, moves) != b) throw Error("the move script does not turn the first word into the second");
    const GeneratorMap m = map_for_moves(a, moves, ctx.config.sign_convention);
    CheckOptions check;
    check.generator_cap = ctx.config.generator_cap;
    const MapReport r = check_map(m, resolve_targets(ctx.config.targets), check);
    ctx.emit({{"moves", moves_json(moves)},
              {"moves_from", method},
              {"map", generator_map_json(m)},
              {"report", map_report_json(r)}});
    return r.consistent() ? kExitOk : kExitDomain;
  } else if (name == "verify") {
    ctx.require_format({"json"});
    return cmd_verify(ctx, one(), verify_moves);
  } else if (name == "render") {
    if (svg && dot) throw CLI::ValidationError("render", "--svg and --dot exclude each other");
    if (ctx.format.empty()) ctx.format = dot ? "dot" : "svg";
    ctx.require_format({"svg", "dot"});
    const LinkingGraph g = ctx.graph(one());
    ctx.out << render(g, parse_render_what(what), ctx.format == "svg" ? RenderFormat::Svg : RenderFormat::Dot);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx(out);
  std::vector<std::string> words;
  std::string script, what = "both";
  std::size_t verify_moves = 100;
  bool svg = false, dot = false, up_to_conjugacy = false;

  CLI::App app{"Secondary braid group presentations from positive braid words", "braidforge"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();
  app.add_option("--strands,-n", ctx.strands, "Strand count (default: max index + 1)")
      ->check(CLI::Range(2, 64));
  app.add_option("--format,-f", ctx.format, "json, plain, gap-style, svg or dot (per command)");
  app.add_option("--sign-convention", ctx.sign_convention, "right-positive or left-positive");
  app.add_option("--targets", ctx.targets, "Comma-separated finite targets (S3,S4,S5,D4,D5,D6,Q8 or table files)");
  app.add_option("--caps.summit-set", ctx.caps_summit, "Maximum super summit set size");
  app.add_option("--caps.cycling", ctx.caps_cycling, "Maximum cycling/decycling steps");
  app.add_option("--caps.generators", ctx.caps_generators, "Maximum generators for hom counting");
  app.add_option("--caps.moves", ctx.caps_moves, "Maximum length of a move sequence");
  app.add_option("--threads", ctx.threads, "Worker threads for hom counting (0: all cores)");
  app.add_option("--seed", ctx.seed, "Seed for randomized commands (default 1)");
  app.fallthrough();

  struct Spec {
    const char* name;
    const char* help;
    int words;
  };
  const Spec specs[] = {
      {"parse", "Parse and normalise a word", 1},
      {"bricks", "List the brick diagram", 1},
      {"graph", "Linking graph with regions and signs", 1},
      {"present", "Presentation of the secondary braid group", 1},
      {"nf", "Left normal form", 1},
      {"conj", "Decide conjugacy of two words", 2},
      {"summit", "Summit power and super summit set", 1},
      {"halftwist", "Whether the conjugacy class contains a half twist", 1},
      {"moveseq", "Moves turning one conjugate word into another", 2},
      {"invariants", "Abelianization and hom counts", 1},
      {"isocheck", "Check the generator map along a move script", 2},
      {"verify", "Random move walk checking every invariant", 1},
      {"render", "SVG or DOT drawing", 1},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("words", words, s.words == 1 ? "Braid word" : "Two braid words")
        ->required()
        ->expected(s.words, s.words == 1 ? CLI::detail::expected_max_vector_size : 2);
    const std::string n = s.name;
    if (n == "isocheck") sub->add_option("--script", script, "Moves such as \"ElemConjRight BraidRel@2\"");
    if (n == "verify") sub->add_option("--moves", verify_moves, "Number of random moves");
    if (n == "invariants") sub->add_flag("--up-to-conjugacy", up_to_conjugacy, "Also count up to target conjugacy");
    if (n == "render") {
      sub->add_flag("--svg", svg, "SVG output (default)");
      sub->add_flag("--dot", dot, "DOT output");
      sub->add_option("--what", what, "bricks, graph or both")->check(CLI::IsMember({"bricks", "graph", "both"}));
    }
  }

  try {
    if (const char* path = std::getenv("BRAIDFORGE_CONFIG"); path && *path) {
      apply_config_file(ctx.config, path);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<const char*> argv{"braidforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    return dispatch(app, ctx, words, script, verify_moves, what, svg, dot, up_to_conjugacy);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace braidforge::cli
