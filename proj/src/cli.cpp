#include "qwords/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwords/checks.hpp"
#include "qwords/langs.hpp"
#include "qwords/quotient.hpp"
#include "qwords/series.hpp"
#include "qwords/words.hpp"

namespace qwords::cli {

namespace {

// The shell hands over `""` as an empty argument; accept the literal too.
std::string word_text(const std::string& arg) { return arg == "\"\"" ? std::string() : arg; }

/// The given alphabet, or the sorted union of the symbols of `words`.
Alphabet resolve_alphabet(const std::string& given, const std::vector<std::string>& words) {
  if (!given.empty()) return Alphabet(given);
  std::string all;
  for (const auto& w : words) all += word_text(w);
  // Only empty words: any one-letter alphabet gives the same answers.
  if (all.empty()) return Alphabet("0");
  return Alphabet::inferred(all);
}

ResidueRing make_ring(std::uint32_t p, const std::string& modulus) {
  return ResidueRing(PrimeModulus(p), parse_qpoly(modulus));
}

ResiduePoly canonical_residue(const std::string& text, const ResidueRing& ring) {
  const QPoly poly = parse_qpoly(text);
  ResiduePoly r = reduce(poly, ring);
  if (r.lift() != poly) {
    throw PreconditionError("target '" + text + "' is not a reduced residue: use degree < " +
                            std::to_string(ring.degree()) + " and coefficients in [0, " + std::to_string(ring.p()) +
                            ")");
  }
  return r;
}

void write_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw Error("failed writing '" + path + "'");
}

std::string show(const Word& w) { return w.empty() ? std::string("\"\"") : w.str(); }

struct Options {
  std::string alphabet;
  std::string u, v;
  std::size_t m = 0, r = 0;
  std::string alpha = "suffix";
  std::uint32_t p = 0;
  std::string modulus;
  std::string target;
  std::size_t degree = 0;
  bool count = false, list = false, table = false;
  bool minimize = false;
  std::string dot_path, json_path;
  std::vector<std::string> polys;
  std::string suite;
};

int cmd_classes(const Options& o, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(o.alphabet, {o.u});
  const CongruenceSpec spec(Word(alphabet, word_text(o.u)), make_ring(o.p, o.modulus));
  const QuotientMonoid m = enumerate_quotient(spec);
  if (o.list) {
    for (const auto& c : m.classes()) out << describe_class(c) << '\n';
  } else if (o.table) {
    nlohmann::ordered_json j;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : m.classes()) {
      nlohmann::ordered_json entry;
      entry["representative"] = c.representative.str();
      auto residues = nlohmann::ordered_json::array();
      for (const auto& r : c.key.residues) residues.push_back(to_string(r));
      entry["residues"] = std::move(residues);
      entry["length"] = {{"saturated", c.key.length.saturated}, {"value", c.key.length.value}};
      classes.push_back(std::move(entry));
    }
    j["classes"] = std::move(classes);
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m.product(i, k));
      rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else {
    out << m.size() << '\n';
  }
  return 0;
}

int cmd_automaton(const Options& o, std::ostream& out) {
  const Alphabet alphabet = resolve_alphabet(o.alphabet, {o.v});
  const ResidueRing ring = make_ring(o.p, o.modulus);
  const LanguageSpec spec(Word(alphabet, word_text(o.v)), canonical_residue(o.target, ring));
  Dfa dfa = build_dfa(spec);
  if (o.minimize) dfa = minimize(dfa);
  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(dfa), out);
  if (!o.json_path.empty()) write_file(o.json_path, to_json(dfa), out);
  if (o.dot_path != "-" && o.json_path != "-") {
    const auto finals = std::count(dfa.finals().begin(), dfa.finals().end(), true);
    out << "states: " << dfa.size() << '\n'
        << "finals: " << finals << '\n'
        << "permutation: " << (is_permutation_automaton(dfa) ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  std::map<char, QPoly> polys;
  std::string symbols;
  for (const auto& item : o.polys) {
    const auto eq = item.find('=');
    if (eq != 1) throw ParseError("expected <symbol>=<polynomial>, got '" + item + "'");
    const char symbol = item[0];
    if (polys.count(symbol)) throw ParseError(std::string("symbol '") + symbol + "' given twice");
    polys[symbol] = parse_qpoly(item.substr(2));
    symbols.push_back(symbol);
  }
  const Alphabet alphabet = o.alphabet.empty() ? Alphabet::inferred(symbols) : Alphabet(o.alphabet);
  out << show(reconstruct(polys, alphabet)) << '\n';
  return 0;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto report = run_check(o.suite);
  if (!report) {
    std::string names;
    for (const auto& n : check_suite_names()) names += (names.empty() ? "" : ", ") + n;
    err << "unknown suite '" << o.suite << "' (expected one of: " << names << ")\n";
    return 2;
  }
  out << report->name << ": " << (report->passed ? "pass" : "FAIL") << " (" << report->cases << " cases)\n";
  if (!report->passed) out << "counterexample: " << report->counterexample << '\n';
  return report->passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-deformed binomial coefficients of words and their automata", "qwords"};
  app.require_subcommand(1);
  Options o;

  auto* qbin = app.add_subcommand("qbin", "q-binomial coefficient of two words");
  qbin->add_option("u", o.u, "upper word")->required();
  qbin->add_option("v", o.v, "lower word")->required();
  qbin->add_option("--alphabet", o.alphabet, "ordered alphabet (default: symbols of the words)");

  auto* gauss = app.add_subcommand("gauss", "Gaussian binomial [m choose r]_q");
  gauss->add_option("m", o.m)->required();
  gauss->add_option("r", o.r)->required();

  auto* shuffle = app.add_subcommand("shuffle", "q-shuffle of two words");
  shuffle->add_option("u", o.u)->required();
  shuffle->add_option("v", o.v)->required();
  shuffle->add_option("--alphabet", o.alphabet);

  auto* infiltrate = app.add_subcommand("infiltrate", "q-infiltration of two words");
  infiltrate->add_option("u", o.u)->required();
  infiltrate->add_option("v", o.v)->required();
  infiltrate->add_option("--alpha", o.alpha, "merge exponent rule")
      ->check(CLI::IsMember({"one", "suffix"}))
      ->capture_default_str();
  infiltrate->add_option("--alphabet", o.alphabet);

  auto* classes = app.add_subcommand("classes", "congruence classes of the (u, M) congruence");
  classes->add_option("--u", o.u, "non-empty word")->required();
  classes->add_option("--p", o.p, "prime")->required();
  classes->add_option("--mod", o.modulus, "modulus polynomial")->required();
  classes->add_option("--alphabet", o.alphabet);
  auto* count = classes->add_flag("--count", o.count, "print the number of classes (default)");
  auto* list = classes->add_flag("--list", o.list, "print representative, residues and length tag per class");
  auto* table = classes->add_flag("--table", o.table, "print classes and multiplication table as JSON");
  count->excludes(list)->excludes(table);
  list->excludes(table);

  auto* automaton = app.add_subcommand("automaton", "automaton of qbin(w, v) = R mod M");
  automaton->add_option("--v", o.v)->required();
  automaton->add_option("--p", o.p)->required();
  automaton->add_option("--mod", o.modulus)->required();
  automaton->add_option("--r", o.target, "target residue")->required();
  automaton->add_option("--alphabet", o.alphabet);
  automaton->add_flag("--minimize", o.minimize);
  automaton->add_option("--dot", o.dot_path, "write Graphviz to a file ('-' for stdout)");
  automaton->add_option("--json", o.json_path, "write JSON to a file ('-' for stdout)");

  auto* decompose = app.add_subcommand("decompose", "residues R with R(1) = r modulo (q-1)^d");
  decompose->add_option("--v", o.v)->required();
  decompose->add_option("--p", o.p)->required();
  decompose->add_option("--r", o.r)->required();
  decompose->add_option("--d", o.degree)->required();
  decompose->add_option("--alphabet", o.alphabet);

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "rebuild a word from its letter polynomials");
  reconstruct_cmd->add_option("--poly", o.polys, "<symbol>=<polynomial>, repeatable")->required();
  reconstruct_cmd->add_option("--alphabet", o.alphabet);

  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("suite", o.suite, "vandermonde | mmsss | shuffle-assoc | reciprocity | key-soundness")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (qbin->parsed()) {
      const Alphabet a = resolve_alphabet(o.alphabet, {o.u, o.v});
      out << qbinom(Word(a, word_text(o.u)), Word(a, word_text(o.v))) << '\n';
    } else if (gauss->parsed()) {
      out << gauss_binomial(o.m, o.r) << '\n';
    } else if (shuffle->parsed()) {
      const Alphabet a = resolve_alphabet(o.alphabet, {o.u, o.v});
      out << to_string(qshuffle(Word(a, word_text(o.u)), Word(a, word_text(o.v))));
    } else if (infiltrate->parsed()) {
      const Alphabet a = resolve_alphabet(o.alphabet, {o.u, o.v});
      const AlphaRule rule = o.alpha == "one" ? AlphaRule::constant_one() : AlphaRule::suffix_length();
      out << to_string(qinfiltrate(Word(a, word_text(o.u)), Word(a, word_text(o.v)), rule));
    } else if (classes->parsed()) {
      return cmd_classes(o, out);
    } else if (automaton->parsed()) {
      return cmd_automaton(o, out);
    } else if (decompose->parsed()) {
      const Alphabet a = resolve_alphabet(o.alphabet, {o.v});
      const auto dec = eilenberg_decompose(Word(a, word_text(o.v)), static_cast<Residue>(o.r), PrimeModulus(o.p),
                                           o.degree);
      for (const auto& part : dec.parts) out << part << '\n';
    } else if (reconstruct_cmd->parsed()) {
      return cmd_reconstruct(o, out);
    } else if (check->parsed()) {
      return cmd_check(o, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qwords::cli
