#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <thread>
#include <vector>

#include "penney/cyclic.hpp"
#include "penney/errors.hpp"
#include "penney/game.hpp"
#include "penney/genfunc.hpp"
#include "penney/oracle.hpp"
#include "penney/pattern.hpp"

namespace py = pybind11;
using namespace penney;

namespace {

// Rationals cross the boundary as "a/b" strings; the Python layer turns them
// into fractions.Fraction.
std::vector<std::string> strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

py::dict rf_dict(const RationalFunction& f) {
  py::dict d;
  d["num"] = strings(f.num().coefficients());
  d["den"] = strings(f.den().coefficients());
  return d;
}

/// Group plus the symbol set used to read and print words.
struct Session {
  GroupPtr group;
  std::string symbols;

  Session(const std::string& spec, const std::vector<std::string>& inputs, const std::string& alphabet)
      : group(make_group(spec)) {
    if (!alphabet.empty()) {
      symbols = alphabet;
    } else if (!inputs.empty() && !inputs.front().empty()) {
      symbols = detect_symbols(inputs.front(), group->degree());
    } else {
      symbols = group->degree() == 2 && group->order() == 1 ? std::string(kCoinSymbols)
                                                            : std::string(kDefaultSymbols);
    }
  }

  Pattern pattern(const std::string& text) const {
    return Pattern(group, parse_word(text, group->degree(), symbols));
  }
  std::vector<Pattern> patterns(const std::vector<std::string>& texts) const {
    std::vector<Pattern> out;
    for (const auto& t : texts) out.push_back(pattern(t));
    return out;
  }
  std::string show(const Pattern& p) const { return p.display(symbols); }
};

std::size_t default_threads() { return std::max<unsigned>(1, std::thread::hardware_concurrency()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Penney's game on words and group-action patterns";

  static py::exception<Error> base(m, "PenneyError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::reinterpret_borrow<py::object>(base.ptr());
      py::object err = type(std::string(e.kind()) + ": " + e.what());
      err.attr("kind") = e.kind();
      PyErr_SetObject(base.ptr(), err.ptr());
    }
  });

  m.def("orbit", [](const std::string& group, const std::string& word, const std::string& alphabet) {
    Session s(group, {word}, alphabet);
    std::vector<std::string> out;
    for (const auto& w : s.group->orbit(parse_word(word, s.group->degree(), s.symbols))) {
      out.push_back(format_word(w, s.symbols));
    }
    return out;
  }, py::arg("group"), py::arg("word"), py::arg("alphabet") = "");

  m.def("canonical", [](const std::string& group, const std::string& word, const std::string& alphabet) {
    Session s(group, {word}, alphabet);
    return s.show(s.pattern(word));
  }, py::arg("group"), py::arg("word"), py::arg("alphabet") = "");

  m.def("patterns", [](const std::string& group, std::size_t length, const std::string& alphabet) {
    Session s(group, {}, alphabet);
    std::vector<std::string> out;
    for (const auto& p : enumerate_patterns(s.group, length)) out.push_back(s.show(p));
    return out;
  }, py::arg("group"), py::arg("length"), py::arg("alphabet") = "");

  m.def("correlation", [](const std::string& group, const std::string& p1, const std::string& p2,
                          const std::string& alphabet) {
    Session s(group, {p1, p2}, alphabet);
    return correlate_patterns(s.pattern(p1), s.pattern(p2)).entries;
  }, py::arg("group"), py::arg("p1"), py::arg("p2"), py::arg("alphabet") = "");

  m.def("cln", [](const std::string& group, const std::string& p1, const std::string& p2,
                  const std::string& alphabet) {
    Session s(group, {p1, p2}, alphabet);
    return to_string(cln_pattern(s.pattern(p1), s.pattern(p2)));
  }, py::arg("group"), py::arg("p1"), py::arg("p2"), py::arg("alphabet") = "");

  m.def("wait_time", [](const std::string& group, const std::string& pattern, const std::string& alphabet) {
    Session s(group, {pattern}, alphabet);
    return to_string(wait_time(s.pattern(pattern)));
  }, py::arg("group"), py::arg("pattern"), py::arg("alphabet") = "");

  m.def("odds", [](const std::string& group, const std::string& p1, const std::string& p2, bool verify,
                   const std::string& alphabet) {
    Session s(group, {p1, p2}, alphabet);
    GameReport r = odds(s.pattern(p1), s.pattern(p2), verify);
    py::dict d;
    d["p1"] = s.show(r.p1);
    d["p2"] = s.show(r.p2);
    d["alice_win_probability"] = to_string(r.alice_win_probability);
    d["bob_odds"] = to_string(r.bob_odds());
    d["expected_length"] = to_string(r.expected_length);
    d["wait1"] = to_string(r.wait1);
    d["wait2"] = to_string(r.wait2);
    d["genfunc_verified"] = r.genfunc_verified;
    return d;
  }, py::arg("group"), py::arg("p1"), py::arg("p2"), py::arg("verify") = true, py::arg("alphabet") = "");

  m.def("best_beater", [](const std::string& group, const std::string& pattern, const std::string& alphabet)
            -> py::object {
    Session s(group, {pattern}, alphabet);
    auto b = best_beater(s.pattern(pattern));
    if (!b) return py::none();
    std::vector<std::string> ties;
    for (const auto& t : b->ties) ties.push_back(s.show(t));
    py::dict d;
    d["pattern"] = s.show(b->pattern);
    d["bob_odds"] = to_string(b->bob_odds);
    d["ties"] = ties;
    return std::move(d);
  }, py::arg("group"), py::arg("pattern"), py::arg("alphabet") = "");

  m.def("beater_graph", [](const std::string& group, std::size_t length, std::size_t threads,
                           const std::string& alphabet) {
    Session s(group, {}, alphabet);
    auto g = beater_graph(s.group, length, kDefaultEnumerationBudget, threads ? threads : default_threads());
    py::dict d;
    std::vector<std::string> nodes;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      nodes.push_back(s.show(g.nodes[i]));
      if (g.edges[i]) edges.emplace_back(s.show(g.nodes[i]), s.show(g.edges[i]->pattern), to_string(g.edges[i]->bob_odds));
    }
    d["nodes"] = nodes;
    d["edges"] = edges;
    if (auto c = find_nontransitive_cycle(g)) {
      std::vector<std::string> cn;
      for (const auto& p : c->nodes) cn.push_back(s.show(p));
      d["cycle"] = cn;
      d["cycle_odds"] = strings(c->labels);
    } else {
      d["cycle"] = py::none();
    }
    d["dot"] = g.to_dot(s.symbols);
    return d;
  }, py::arg("group"), py::arg("length"), py::arg("threads") = 0, py::arg("alphabet") = "");

  m.def("generating_functions", [](const std::string& group, const std::vector<std::string>& patterns,
                                   const std::string& alphabet) {
    Session s(group, patterns, alphabet);
    auto sol = solve_patterns(s.patterns(patterns));
    py::dict d;
    d["avoiding"] = rf_dict(sol.avoiding);
    py::list first;
    for (const auto& f : sol.first_occurrence) first.append(rf_dict(f));
    d["first"] = first;
    return d;
  }, py::arg("group"), py::arg("patterns"), py::arg("alphabet") = "");

  m.def("series", [](const std::string& group, const std::vector<std::string>& patterns, std::size_t n,
                     const std::string& alphabet) {
    Session s(group, patterns, alphabet);
    auto sol = solve_patterns(s.patterns(patterns));
    py::dict d;
    d["avoiding"] = strings(series_coefficients(sol.avoiding, n));
    py::list first;
    for (const auto& f : sol.first_occurrence) first.append(strings(series_coefficients(f, n)));
    d["first"] = first;
    return d;
  }, py::arg("group"), py::arg("patterns"), py::arg("n"), py::arg("alphabet") = "");

  m.def("brute_counts", [](const std::string& group, const std::vector<std::string>& patterns, std::size_t n,
                           const std::string& alphabet) {
    Session s(group, patterns, alphabet);
    auto c = brute_counts(orbit_groups(s.patterns(patterns)), s.group->degree(), n);
    py::dict d;
    d["avoiding"] = c.avoiding;
    d["first"] = c.first;
    return d;
  }, py::arg("group"), py::arg("patterns"), py::arg("n"), py::arg("alphabet") = "");

  m.def("simulate_game", [](const std::string& group, const std::string& p1, const std::string& p2,
                            std::uint64_t trials, std::uint64_t seed, const std::string& alphabet) {
    Session s(group, {p1, p2}, alphabet);
    auto r = simulate_game(s.pattern(p1), s.pattern(p2), trials, seed, default_threads());
    py::dict d;
    d["trials"] = r.trials;
    d["wins"] = r.wins;
    d["alice_frequency"] = r.win_frequency(0);
    d["alice_standard_error"] = r.win_standard_error(0);
    d["mean_length"] = r.mean_length();
    return d;
  }, py::arg("group"), py::arg("p1"), py::arg("p2"), py::arg("trials"), py::arg("seed"),
     py::arg("alphabet") = "");

  m.def("simulate_wait", [](const std::string& group, const std::string& pattern, std::uint64_t trials,
                            std::uint64_t seed, const std::string& alphabet) {
    Session s(group, {pattern}, alphabet);
    auto r = simulate_wait(s.pattern(pattern), trials, seed, default_threads());
    return py::make_tuple(r.mean_length(), r.length_standard_error());
  }, py::arg("group"), py::arg("pattern"), py::arg("trials"), py::arg("seed"), py::arg("alphabet") = "");

  m.def("signature", [](const std::string& group, const std::string& pattern, const std::string& alphabet) {
    Session s(group, {pattern}, alphabet);
    return format_word(signature(s.pattern(pattern)), s.symbols);
  }, py::arg("group"), py::arg("pattern"), py::arg("alphabet") = "");

  m.def("min_cln", [](const std::string& group, std::size_t length, const std::string& alphabet) {
    Session s(group, {}, alphabet);
    auto r = min_cln_search(s.group, length);
    std::vector<std::string> w;
    for (const auto& p : r.witnesses) w.push_back(s.show(p));
    return py::make_tuple(to_string(r.value), w);
  }, py::arg("group"), py::arg("length"), py::arg("alphabet") = "");
}
