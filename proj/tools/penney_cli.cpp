// Command-line front end: every analysis prints JSON by default, CSV for
// tables and DOT for beater graphs. Exit codes: 2 usage, 3 budget, 4 math.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "penney/cyclic.hpp"
#include "penney/errors.hpp"
#include "penney/game.hpp"
#include "penney/genfunc.hpp"
#include "penney/oracle.hpp"
#include "penney/pattern.hpp"

#ifndef PENNEY_VERSION
#define PENNEY_VERSION "0.1.0"
#endif

using json = nlohmann::ordered_json;
using namespace penney;

namespace {

struct Options {
  std::string group = "S:2";
  std::string format = "json";
  std::string alphabet;
  std::size_t threads = 0;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t oracle_budget = OracleBudget{}.max_total_strings;
  bool decimal = false;
  bool verify = false;

  std::string word, pattern, p1, p2;
  std::vector<std::string> patterns;
  std::size_t length = 0;
  std::size_t series = 10;
  std::size_t n = 10;
  bool all = false;
  bool check = false;
  std::uint64_t trials = 100000;
  std::uint64_t seed = OracleBudget{}.rng_seed;
};

/// Output of one subcommand: JSON always, plus optional CSV rows and DOT text.
struct Output {
  json result;
  std::vector<std::vector<std::string>> csv;  // first row is the header
  std::string dot;
};

struct Context {
  Options& opt;
  GroupPtr group;
  std::string symbols;

  Pattern parse(const std::string& text) const {
    if (text.empty()) throw InvalidArgument("missing pattern argument");
    return Pattern(group, parse_word(text, group->degree(), symbols));
  }
  std::string show(const Pattern& p) const { return p.display(symbols); }
  std::string show_word(const Word& w) const { return format_word(w, symbols); }
  // Exhaustive scans default to every core; simulations default to one.
  std::size_t threads(bool scan = false) const {
    if (opt.threads > 0) return opt.threads;
    return scan ? std::max<unsigned>(1, std::thread::hardware_concurrency()) : 1;
  }
};

json rational_list(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

json rf_json(const RationalFunction& f) {
  return {{"num", rational_list(f.num().coefficients())},
          {"den", rational_list(f.den().coefficients())},
          {"text", f.to_string()}};
}

/// Adds "<key>_decimal" next to an exact value when --decimal is on.
void put(json& obj, const Options& opt, const std::string& key, const Rational& x) {
  obj[key] = to_string(x);
  if (opt.decimal) obj[key + "_decimal"] = to_decimal(x);
}

std::string choose_symbols(const Options& opt, const PermutationGroup& g,
                           const std::vector<std::string>& inputs) {
  if (!opt.alphabet.empty()) {
    if (opt.alphabet.size() < g.degree()) {
      throw InvalidArgument("--alphabet has fewer symbols than the group has letters");
    }
    return opt.alphabet;
  }
  for (const auto& text : inputs) {
    if (!text.empty()) return detect_symbols(text, g.degree());
  }
  if (g.degree() == 2 && g.order() == 1) return std::string(kCoinSymbols);
  return std::string(kDefaultSymbols);
}

json config_json(const Options& opt, const std::string& command) {
  json c;
  c["command"] = command;
  c["group"] = opt.group;
  c["format"] = opt.format;
  if (!opt.alphabet.empty()) c["alphabet"] = opt.alphabet;
  if (!opt.word.empty()) c["word"] = opt.word;
  if (!opt.pattern.empty()) c["pattern"] = opt.pattern;
  if (!opt.p1.empty()) c["p1"] = opt.p1;
  if (!opt.p2.empty()) c["p2"] = opt.p2;
  if (!opt.patterns.empty()) c["patterns"] = opt.patterns;
  if (opt.length) c["length"] = opt.length;
  c["budget"] = opt.budget;
  c["oracle_budget"] = opt.oracle_budget;
  c["threads"] = opt.threads;
  c["trials"] = opt.trials;
  c["seed"] = opt.seed;
  c["n"] = opt.n;
  c["series"] = opt.series;
  c["all"] = opt.all;
  c["check"] = opt.check;
  c["verify"] = opt.verify;
  c["decimal"] = opt.decimal;
  return c;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// --- subcommands -------------------------------------------------------------

Output cmd_orbits(const Context& ctx) {
  const Word w = parse_word(ctx.opt.word, ctx.group->degree(), ctx.symbols);
  Output out;
  json orbit = json::array();
  out.csv.push_back({"word"});
  for (const auto& v : ctx.group->orbit(w)) {
    orbit.push_back(ctx.show_word(v));
    out.csv.push_back({ctx.show_word(v)});
  }
  Pattern p(ctx.group, w);
  out.result = {{"word", ctx.show_word(w)},
                {"pattern", p.to_string(ctx.symbols)},
                {"orbit_size", p.orbit_size()},
                {"stabilizer_order", p.stabilizer_order()},
                {"group_order", ctx.group->order()},
                {"orbit", orbit}};
  return out;
}

Output cmd_patterns(const Context& ctx) {
  Output out;
  json list = json::array();
  out.csv.push_back({"pattern", "orbit_size", "stabilizer_order", "cln", "wait", "overlap"});
  for (const auto& p : enumerate_patterns(ctx.group, ctx.opt.length, ctx.opt.budget)) {
    Rational cln = cln_pattern(p, p);
    Rational wait = wait_time(p);
    json row{{"pattern", ctx.show(p)},
             {"orbit_size", p.orbit_size()},
             {"stabilizer_order", p.stabilizer_order()}};
    put(row, ctx.opt, "cln", cln);
    put(row, ctx.opt, "wait", wait);
    row["overlap"] = to_string(classify_overlap(p));
    list.push_back(row);
    out.csv.push_back({ctx.show(p), std::to_string(p.orbit_size()),
                       std::to_string(p.stabilizer_order()), to_string(cln), to_string(wait),
                       to_string(classify_overlap(p))});
  }
  out.result = {{"count", list.size()}, {"patterns", list}};
  return out;
}

Output cmd_correlate(const Context& ctx) {
  Pattern a = ctx.parse(ctx.opt.p1);
  Pattern b = ctx.parse(ctx.opt.p2.empty() ? ctx.opt.p1 : ctx.opt.p2);
  auto c = correlate_patterns(a, b);
  Output out;
  json entries = json::array();
  for (auto e : c.entries) entries.push_back(e);
  out.result = {{"p1", ctx.show(a)},
                {"p2", ctx.show(b)},
                {"q", ctx.group->degree()},
                {"entries", entries},
                {"normalized", rational_list(c.normalized)}};
  if (ctx.opt.verify) {
    out.result["orbit_sum_agrees"] = correlate_patterns_orbit_sum(a, b).entries == c.entries;
  }
  out.csv.push_back({"i", "entry", "normalized"});
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    out.csv.push_back({std::to_string(i), std::to_string(c.entries[i]), to_string(c.normalized[i])});
  }
  return out;
}

Output cmd_cln(const Context& ctx) {
  Pattern a = ctx.parse(ctx.opt.p1);
  Pattern b = ctx.parse(ctx.opt.p2.empty() ? ctx.opt.p1 : ctx.opt.p2);
  Output out;
  out.result = {{"p1", ctx.show(a)}, {"p2", ctx.show(b)}};
  put(out.result, ctx.opt, "cln", cln_pattern(a, b));
  if (a == b) {
    json periods = json::array();
    for (auto s : pattern_periods(a)) periods.push_back(s);
    out.result["periods"] = periods;
    out.result["overlap"] = to_string(classify_overlap(a));
  }
  out.csv = {{"p1", "p2", "cln"}, {ctx.show(a), ctx.show(b), to_string(cln_pattern(a, b))}};
  return out;
}

Output cmd_wait(const Context& ctx) {
  Pattern p = ctx.parse(ctx.opt.pattern);
  Output out;
  out.result = {{"pattern", ctx.show(p)}, {"orbit_size", p.orbit_size()}};
  put(out.result, ctx.opt, "cln", cln_pattern(p, p));
  put(out.result, ctx.opt, "wait", wait_time(p));
  if (ctx.opt.verify) {
    auto sim = simulate_wait(p, ctx.opt.trials, ctx.opt.seed, ctx.threads());
    out.result["simulated"] = {{"trials", sim.trials},
                               {"mean_approx", sim.mean_length()},
                               {"standard_error_approx", sim.length_standard_error()}};
  }
  out.csv = {{"pattern", "wait"}, {ctx.show(p), to_string(wait_time(p))}};
  return out;
}

json report_json(const Context& ctx, const GameReport& r) {
  json j{{"p1", ctx.show(r.p1)}, {"p2", ctx.show(r.p2)}};
  put(j, ctx.opt, "alice_win_probability", r.alice_win_probability);
  put(j, ctx.opt, "bob_win_probability", r.bob_win_probability());
  j["alice_odds"] = odds_label(r.alice_odds);
  j["bob_odds"] = odds_label(r.bob_odds());
  put(j, ctx.opt, "expected_length", r.expected_length);
  put(j, ctx.opt, "wait1", r.wait1);
  put(j, ctx.opt, "wait2", r.wait2);
  j["genfunc_verified"] = r.genfunc_verified;
  return j;
}

Output cmd_odds(const Context& ctx) {
  Pattern a = ctx.parse(ctx.opt.p1);
  Output out;
  out.csv.push_back({"p1", "p2", "bob_odds", "alice_win_probability", "expected_length"});
  if (ctx.opt.all) {
    json table = json::array();
    for (const auto& b : enumerate_patterns(ctx.group, a.length(), ctx.opt.budget)) {
      if (b == a) continue;
      json row;
      try {
        GameReport r = odds(a, b, ctx.opt.verify);
        row = report_json(ctx, r);
        out.csv.push_back({ctx.show(a), ctx.show(b), odds_label(r.bob_odds()),
                           to_string(r.alice_win_probability), to_string(r.expected_length)});
      } catch (const Error& e) {
        if (e.error_class() != ErrorClass::Degenerate) throw;
        row = {{"p1", ctx.show(a)}, {"p2", ctx.show(b)}, {"skipped", e.kind()}};
      }
      table.push_back(row);
    }
    out.result = {{"p1", ctx.show(a)}, {"matchups", table}};
    return out;
  }
  Pattern b = ctx.parse(ctx.opt.p2);
  GameReport r = odds(a, b, true);
  out.result = report_json(ctx, r);
  if (ctx.opt.verify) {
    auto sim = simulate_game(a, b, ctx.opt.trials, ctx.opt.seed, ctx.threads());
    out.result["simulated"] = {{"trials", sim.trials},
                               {"alice_frequency_approx", sim.win_frequency(0)},
                               {"alice_standard_error_approx", sim.win_standard_error(0)},
                               {"mean_length_approx", sim.mean_length()},
                               {"length_standard_error_approx", sim.length_standard_error()}};
  }
  out.csv.push_back({ctx.show(a), ctx.show(b), odds_label(r.bob_odds()),
                     to_string(r.alice_win_probability), to_string(r.expected_length)});
  return out;
}

Output cmd_genfunc(const Context& ctx) {
  std::vector<Pattern> set;
  for (const auto& text : ctx.opt.patterns) set.push_back(ctx.parse(text));
  if (set.empty()) throw InvalidArgument("genfunc needs at least one --pattern");
  if (set.size() > 8) throw InvalidArgument("genfunc accepts at most 8 patterns");
  auto sol = solve_patterns(set);
  Output out;
  json first, series;
  series["avoiding"] = rational_list(series_coefficients(sol.avoiding, ctx.opt.series));
  out.csv.push_back({"n", "avoiding"});
  for (std::size_t j = 0; j < set.size(); ++j) {
    first[ctx.show(set[j])] = rf_json(sol.first_occurrence[j]);
    series[ctx.show(set[j])] =
        rational_list(series_coefficients(sol.first_occurrence[j], ctx.opt.series));
    out.csv.front().push_back(ctx.show(set[j]));
  }
  for (std::size_t n = 0; n <= ctx.opt.series; ++n) {
    std::vector<std::string> row{std::to_string(n), series["avoiding"][n].get<std::string>()};
    for (const auto& p : set) row.push_back(series[ctx.show(p)][n].get<std::string>());
    out.csv.push_back(row);
  }
  out.result = {{"avoiding", rf_json(sol.avoiding)}, {"first", first}, {"series", series}};
  return out;
}

json beater_json(const Context& ctx, const Beater& b) {
  json ties = json::array();
  for (const auto& t : b.ties) ties.push_back(ctx.show(t));
  json j{{"pattern", ctx.show(b.pattern)}, {"odds", odds_label(b.bob_odds)}};
  put(j, ctx.opt, "bob_odds", b.bob_odds);
  j["ties"] = ties;
  return j;
}

Output cmd_beater(const Context& ctx) {
  Pattern a = ctx.parse(ctx.opt.pattern);
  Output out;
  auto best = best_beater(a, ctx.opt.budget);
  out.result = {{"p1", ctx.show(a)}, {"tie_break", "lexicographically least pattern"}};
  out.result["best"] = best ? beater_json(ctx, *best) : json(nullptr);
  out.csv.push_back({"p1", "best", "odds"});
  if (best) out.csv.push_back({ctx.show(a), ctx.show(best->pattern), odds_label(best->bob_odds)});
  if (a.length() >= 2) {
    json family = json::array();
    bool in_family = false;
    for (const auto& c : bob_shift_candidates(a)) {
      json row{{"pattern", ctx.show(c)}};
      try {
        row["odds"] = odds_label(bob_odds(a, c));
      } catch (const Error& e) {
        if (e.error_class() != ErrorClass::Degenerate) throw;
        row["skipped"] = e.kind();
      }
      family.push_back(row);
      if (best && std::find(best->ties.begin(), best->ties.end(), c) != best->ties.end()) {
        in_family = true;
      }
    }
    out.result["shift_family"] = family;
    out.result["best_in_shift_family"] = in_family;
    auto pick = bob_pick_heuristic(a);
    out.result["heuristic_pick"] = pick ? json(ctx.show(*pick)) : json(nullptr);
  }
  return out;
}

Output cmd_graph(const Context& ctx) {
  auto graph = beater_graph(ctx.group, ctx.opt.length, ctx.opt.budget, ctx.threads(true));
  Output out;
  json nodes = json::array(), edges = json::array();
  out.csv.push_back({"from", "to", "odds"});
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    nodes.push_back(ctx.show(graph.nodes[i]));
    if (!graph.edges[i]) continue;
    json e = beater_json(ctx, *graph.edges[i]);
    e["from"] = ctx.show(graph.nodes[i]);
    edges.push_back(e);
    out.csv.push_back({ctx.show(graph.nodes[i]), ctx.show(graph.edges[i]->pattern),
                       odds_label(graph.edges[i]->bob_odds)});
  }
  out.result = {{"nodes", nodes}, {"edges", edges}, {"tie_break", "lexicographically least pattern"}};
  if (auto cycle = find_nontransitive_cycle(graph)) {
    json cn = json::array(), cl = json::array();
    for (const auto& p : cycle->nodes) cn.push_back(ctx.show(p));
    for (const auto& l : cycle->labels) cl.push_back(odds_label(l));
    out.result["cycle"] = {{"nodes", cn}, {"labels", cl}, {"non_transitive", cycle->non_transitive}};
  } else {
    out.result["cycle"] = nullptr;
  }
  out.dot = graph.to_dot(ctx.symbols);
  return out;
}

Output cmd_signature(const Context& ctx) {
  Pattern p = ctx.parse(ctx.opt.pattern);
  Word sig = signature(p);
  Output out;
  json residues = json::array();
  for (Letter x : sig) residues.push_back(x);
  out.result = {{"pattern", ctx.show(p)},
                {"signature", format_word(sig, ctx.symbols)},
                {"residues", residues}};
  out.csv = {{"pattern", "signature"}, {ctx.show(p), format_word(sig, ctx.symbols)}};
  if (ctx.opt.check) {
    OracleBudget budget;
    budget.max_total_strings = ctx.opt.oracle_budget;
    json counts = json::array();
    bool all = true;
    for (std::size_t n = 0; n <= ctx.opt.n; ++n) {
      auto r = count_identity_check(p, n, budget);
      all = all && r.holds;
      counts.push_back({{"n", n},
                        {"pattern_avoiding", r.pattern_avoiding},
                        {"signature_avoiding", r.signature_avoiding},
                        {"pattern_first", r.pattern_first},
                        {"signature_first", r.signature_first},
                        {"holds", r.holds}});
    }
    auto c = cln_identity_check(p, p);
    out.result["count_identity"] = {{"holds", all}, {"rows", counts}};
    out.result["cln_identity"] = {{"pattern_cln", to_string(c.pattern_cln)},
                                  {"signature_cln", to_string(c.signature_cln)},
                                  {"cln_holds", c.cln_holds},
                                  {"entries_hold", c.entries_hold},
                                  {"genfunc_holds", c.genfunc_holds}};
  }
  return out;
}

Output cmd_oracle(const Context& ctx) {
  std::vector<Pattern> set{ctx.parse(ctx.opt.p1)};
  if (!ctx.opt.p2.empty()) set.push_back(ctx.parse(ctx.opt.p2));
  OracleBudget budget;
  budget.max_total_strings = ctx.opt.oracle_budget;
  auto sol = solve_patterns(set);
  auto counts = brute_counts(orbit_groups(set), ctx.group->degree(), ctx.opt.n, budget);
  auto avoid = series_coefficients(sol.avoiding, ctx.opt.n);
  std::vector<std::vector<Rational>> first;
  for (const auto& f : sol.first_occurrence) first.push_back(series_coefficients(f, ctx.opt.n));

  Output out;
  json rows = json::array();
  bool agree = true;
  std::vector<std::string> header{"n", "avoiding_exact", "avoiding_brute"};
  for (const auto& p : set) {
    header.push_back(ctx.show(p) + "_exact");
    header.push_back(ctx.show(p) + "_brute");
  }
  out.csv.push_back(header);
  for (std::size_t n = 0; n <= ctx.opt.n; ++n) {
    json row{{"n", n}, {"avoiding_exact", to_string(avoid[n])}, {"avoiding_brute", counts.avoiding[n]}};
    std::vector<std::string> line{std::to_string(n), to_string(avoid[n]),
                                  std::to_string(counts.avoiding[n])};
    agree = agree && avoid[n] == Rational(static_cast<unsigned long>(counts.avoiding[n]));
    for (std::size_t j = 0; j < set.size(); ++j) {
      row[ctx.show(set[j]) + "_exact"] = to_string(first[j][n]);
      row[ctx.show(set[j]) + "_brute"] = counts.first[j][n];
      line.push_back(to_string(first[j][n]));
      line.push_back(std::to_string(counts.first[j][n]));
      agree = agree && first[j][n] == Rational(static_cast<unsigned long>(counts.first[j][n]));
    }
    rows.push_back(row);
    out.csv.push_back(line);
  }
  out.result = {{"counts", rows}, {"series_match_brute_force", agree}};

  if (ctx.opt.trials > 0) {
    if (set.size() == 2) {
      GameReport r = odds(set[0], set[1], false);
      auto sim = simulate_game(set[0], set[1], ctx.opt.trials, ctx.opt.seed, ctx.threads());
      json s{{"trials", sim.trials}};
      put(s, ctx.opt, "alice_win_probability_exact", r.alice_win_probability);
      s["alice_frequency_approx"] = sim.win_frequency(0);
      s["alice_standard_error_approx"] = sim.win_standard_error(0);
      put(s, ctx.opt, "expected_length_exact", r.expected_length);
      s["mean_length_approx"] = sim.mean_length();
      s["length_standard_error_approx"] = sim.length_standard_error();
      out.result["simulation"] = s;
    } else {
      auto sim = simulate_wait(set[0], ctx.opt.trials, ctx.opt.seed, ctx.threads());
      json s{{"trials", sim.trials}};
      put(s, ctx.opt, "wait_exact", wait_time(set[0]));
      s["mean_approx"] = sim.mean_length();
      s["standard_error_approx"] = sim.length_standard_error();
      out.result["simulation"] = s;
    }
  }
  return out;
}

Output cmd_mincln(const Context& ctx) {
  auto r = min_cln_search(ctx.group, ctx.opt.length, ctx.opt.budget);
  Output out;
  json w = json::array();
  out.csv.push_back({"pattern", "cln"});
  for (const auto& p : r.witnesses) {
    w.push_back(ctx.show(p));
    out.csv.push_back({ctx.show(p), to_string(r.value)});
  }
  out.result = {{"value", to_string(r.value)},
                {"witnesses", w},
                {"bound_low", to_string(r.bound_low)},
                {"bound_high", to_string(r.bound_high)}};
  return out;
}

Output cmd_extremal(const Context& ctx) {
  auto e = extremal_wait(ctx.group, ctx.opt.length, ctx.opt.budget);
  auto list = [&](const std::vector<Pattern>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(ctx.show(p));
    return a;
  };
  Output out;
  json max{{"patterns", list(e.max_patterns)}};
  put(max, ctx.opt, "value", e.max_value);
  put(max, ctx.opt, "predicted", e.predicted_max);
  json min{{"patterns", list(e.min_patterns)}};
  put(min, ctx.opt, "value", e.min_value);
  if (e.predicted_min) {
    put(min, ctx.opt, "predicted", *e.predicted_min);
  } else {
    min["predicted"] = nullptr;
  }
  out.result = {{"max", max}, {"min", min}};
  out.csv = {{"kind", "value", "predicted"},
             {"max", to_string(e.max_value), to_string(e.predicted_max)},
             {"min", to_string(e.min_value), e.predicted_min ? to_string(*e.predicted_min) : ""}};
  return out;
}

Output cmd_advantage(const Context& ctx) {
  auto r = alice_advantage_check(ctx.group, ctx.opt.length, ctx.opt.budget);
  Output out;
  json table = json::array();
  out.csv.push_back({"p2", "bob_odds"});
  for (const auto& [p, o] : r.bob_odds) {
    table.push_back({{"p2", ctx.show(p)}, {"bob_odds", odds_label(o)}});
    out.csv.push_back({ctx.show(p), odds_label(o)});
  }
  out.result = {{"alice", ctx.show(r.alice)}, {"holds", true}, {"bob_odds", table}};
  return out;
}

int exit_code(ErrorClass c) {
  switch (c) {
    case ErrorClass::Usage: return 2;
    case ErrorClass::Budget: return 3;
    case ErrorClass::Degenerate: return 4;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Penney's game on words and group-action patterns"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PENNEY_VERSION);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", opt.group, "Group spec: S:q, Z:q, T:q, P:AxB, G:q:(cycles)");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_option("--alphabet", opt.alphabet, "Display/parse symbols, one per letter");
    sub->add_option("--threads", opt.threads, "Worker threads; 0 means all cores for graph and 1 for simulations");
    sub->add_option("--budget", opt.budget, "Cap on q^length for exhaustive pattern scans");
    sub->add_flag("--decimal", opt.decimal, "Add approximate 12-digit decimal fields");
  };

  struct Command {
    CLI::App* app;
    std::function<Output(const Context&)> run;
    std::vector<std::string*> inputs;
  };
  std::vector<Command> commands;
  auto add = [&](const std::string& name, const std::string& help,
                 std::function<Output(const Context&)> run, std::vector<std::string*> inputs) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    commands.push_back({sub, std::move(run), std::move(inputs)});
    return sub;
  };

  auto* s = add("orbits", "Orbit of a word", cmd_orbits, {&opt.word});
  s->add_option("--word", opt.word)->required();

  s = add("patterns", "All patterns of a length", cmd_patterns, {});
  s->add_option("--length", opt.length)->required();

  s = add("correlate", "Pattern correlation vector", cmd_correlate, {&opt.p1, &opt.p2});
  s->add_option("--p1", opt.p1)->required();
  s->add_option("--p2", opt.p2, "Defaults to --p1");
  s->add_flag("--verify", opt.verify, "Also compute the orbit-sum form");

  s = add("cln", "Conway leading number", cmd_cln, {&opt.p1, &opt.p2});
  s->add_option("--p1", opt.p1)->required();
  s->add_option("--p2", opt.p2, "Defaults to --p1");

  s = add("wait", "Expected wait time", cmd_wait, {&opt.pattern});
  s->add_option("--pattern", opt.pattern)->required();
  s->add_flag("--verify", opt.verify, "Add a Monte Carlo estimate");
  s->add_option("--trials", opt.trials);
  s->add_option("--seed", opt.seed);

  s = add("odds", "Odds of a matchup, or of p1 against every pattern with --all", cmd_odds,
          {&opt.p1, &opt.p2});
  s->add_option("--p1", opt.p1)->required();
  s->add_option("--p2", opt.p2);
  s->add_option("--length", opt.length, "Accepted for symmetry; the length of --p1 is used");
  s->add_flag("--all", opt.all);
  s->add_flag("--verify", opt.verify, "Cross-check with generating functions and simulation");
  s->add_option("--trials", opt.trials);
  s->add_option("--seed", opt.seed);

  s = add("genfunc", "Generating functions of a reduced pattern set", cmd_genfunc, {});
  s->add_option("--pattern", opt.patterns, "Repeat for each member")->required();
  s->add_option("--series", opt.series, "Highest series coefficient to print");

  s = add("beater", "Best beater of a pattern", cmd_beater, {&opt.pattern});
  s->add_option("--pattern", opt.pattern)->required();

  s = add("graph", "Beater graph of all patterns of a length", cmd_graph, {});
  s->add_option("--length", opt.length)->required();

  s = add("signature", "Adjacency signature under Z_q", cmd_signature, {&opt.pattern});
  s->add_option("--pattern", opt.pattern)->required();
  s->add_flag("--check", opt.check, "Verify the cyclic reduction identities");
  s->add_option("--n", opt.n, "Largest length for the count identity");
  s->add_option("--oracle-budget", opt.oracle_budget);

  s = add("oracle", "Exact counts against brute force and simulation", cmd_oracle,
          {&opt.p1, &opt.p2});
  s->add_option("--p1", opt.p1)->required();
  s->add_option("--p2", opt.p2);
  s->add_option("--n", opt.n, "Largest string length to count");
  s->add_option("--trials", opt.trials, "0 skips the simulation");
  s->add_option("--seed", opt.seed);
  s->add_option("--oracle-budget", opt.oracle_budget);

  s = add("mincln", "Minimum autocorrelation CLN over a length", cmd_mincln, {});
  s->add_option("--length", opt.length)->required();

  s = add("extremal", "Largest and smallest wait times over a length", cmd_extremal, {});
  s->add_option("--length", opt.length)->required();

  s = add("advantage", "Check that a1..al beats every other pattern under S_q", cmd_advantage, {});
  s->add_option("--length", opt.length)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& c : commands) {
    if (!c.app->parsed()) continue;
    const std::string name = c.app->get_name();
    json envelope{{"version", PENNEY_VERSION}, {"config", config_json(opt, name)}};
    try {
      auto group = make_group(opt.group);
      std::vector<std::string> inputs;
      for (auto* in : c.inputs) inputs.push_back(*in);
      for (const auto& p : opt.patterns) inputs.push_back(p);
      Context ctx{opt, group, choose_symbols(opt, *group, inputs)};
      Output out = c.run(ctx);
      if (opt.format == "dot") {
        if (out.dot.empty()) throw InvalidArgument("--format dot is only available for graph");
        std::cout << "// version " << PENNEY_VERSION << "; config " << envelope["config"].dump()
                  << "\n"
                  << out.dot;
      } else if (opt.format == "csv") {
        std::cout << "# version " << PENNEY_VERSION << "; config " << envelope["config"].dump()
                  << "\n";
        for (const auto& row : out.csv) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << (i ? "," : "") << csv_escape(row[i]);
          }
          std::cout << "\n";
        }
      } else {
        envelope["result"] = out.result;
        std::cout << envelope.dump(2) << "\n";
      }
      return 0;
    } catch (const Error& e) {
      envelope["error"] = {{"kind", e.kind()}, {"message", e.what()}};
      std::cout << envelope.dump(2) << "\n";
      std::cerr << "error: " << e.what() << "\n";
      return exit_code(e.error_class());
    }
  }
  return 2;
}
