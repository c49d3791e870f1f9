#include "qwords/langs.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qwords/quotient.hpp"

namespace qwords {

bool membership(const Word& w, const LanguageSpec& spec) {
  require_same_alphabet(w, spec.v());
  return reduce(qbinom(w, spec.v()), spec.ring()) == spec.target();
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(Alphabet alphabet, std::vector<std::vector<std::size_t>> transitions, std::size_t initial,
         std::vector<bool> finals)
    : alphabet_(std::move(alphabet)), delta_(std::move(transitions)), initial_(initial), finals_(std::move(finals)) {
  const std::size_t n = delta_.size();
  if (n == 0) throw PreconditionError("an automaton needs at least one state");
  if (initial_ >= n) throw PreconditionError("initial state out of range");
  if (finals_.size() != n) throw PreconditionError("final-state flags must cover every state");
  for (const auto& row : delta_) {
    if (row.size() != alphabet_.size()) throw PreconditionError("transition table is not total");
    for (std::size_t t : row) {
      if (t >= n) throw PreconditionError("transition target out of range");
    }
  }
}

std::size_t Dfa::run(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) throw AlphabetMismatch("word and automaton use different alphabets");
  std::size_t s = initial_;
  for (Letter a : w.letters()) s = delta_[s][a];
  return s;
}

Dfa Dfa::with_finals(std::vector<bool> finals) const { return Dfa(alphabet_, delta_, initial_, std::move(finals)); }

Dfa build_dfa(const Word& v, const ResidueRing& ring, std::span<const ResiduePoly> targets) {
  for (const auto& t : targets) {
    if (!(t.ring() == ring)) throw PreconditionError("target residue belongs to another ring");
  }
  if (v.empty()) {
    // qbin(w, epsilon) = 1 for every w.
    const bool accept = std::find(targets.begin(), targets.end(), ring.one()) != targets.end();
    return Dfa(v.alphabet(), {std::vector<std::size_t>(v.alphabet().size(), 0)}, 0, {accept});
  }
  const CongruenceSpec spec(v, ring);
  const QuotientMonoid m = enumerate_quotient(spec);
  const auto& fs = spec.factors();
  const auto at_v = static_cast<std::size_t>(std::find(fs.begin(), fs.end(), v) - fs.begin());

  std::vector<std::vector<std::size_t>> delta(m.size());
  std::vector<bool> finals(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    delta[c].resize(v.alphabet().size());
    for (std::size_t a = 0; a < delta[c].size(); ++a) delta[c][a] = m.transition(c, static_cast<Letter>(a));
    const auto& r = m.classes()[c].key.residues[at_v];
    finals[c] = std::find(targets.begin(), targets.end(), r) != targets.end();
  }
  return Dfa(v.alphabet(), std::move(delta), m.identity(), std::move(finals));
}

Dfa build_dfa(const LanguageSpec& spec) { return build_dfa(spec.v(), spec.ring(), std::span(&spec.target(), 1)); }

Dfa trim(const Dfa& d) {
  const std::size_t letters = d.alphabet().size();
  std::vector<std::size_t> order;
  std::vector<std::optional<std::size_t>> renumber(d.size());
  renumber[d.initial()] = 0;
  order.push_back(d.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < letters; ++a) {
      const std::size_t t = d.next(order[i], static_cast<Letter>(a));
      if (!renumber[t]) {
        renumber[t] = order.size();
        order.push_back(t);
      }
    }
  }
  std::vector<std::vector<std::size_t>> delta(order.size(), std::vector<std::size_t>(letters));
  std::vector<bool> finals(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < letters; ++a) delta[i][a] = *renumber[d.next(order[i], static_cast<Letter>(a))];
    finals[i] = d.is_final(order[i]);
  }
  return Dfa(d.alphabet(), std::move(delta), 0, std::move(finals));
}

Dfa minimize(const Dfa& input) {
  const Dfa d = trim(input);
  const std::size_t n = d.size();
  const std::size_t letters = d.alphabet().size();

  std::vector<std::size_t> block(n);
  for (std::size_t s = 0; s < n; ++s) block[s] = d.is_final(s) ? 1 : 0;
  std::size_t blocks = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{block[s]};
      for (std::size_t a = 0; a < letters; ++a) sig.push_back(block[d.next(s, static_cast<Letter>(a))]);
      refined[s] = signatures.try_emplace(std::move(sig), signatures.size()).first->second;
    }
    block = std::move(refined);
    if (signatures.size() == blocks) break;
    blocks = signatures.size();
  }

  std::vector<std::vector<std::size_t>> delta(blocks, std::vector<std::size_t>(letters));
  std::vector<bool> finals(blocks);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t a = 0; a < letters; ++a) delta[block[s]][a] = block[d.next(s, static_cast<Letter>(a))];
    finals[block[s]] = d.is_final(s);
  }
  return trim(Dfa(d.alphabet(), std::move(delta), block[d.initial()], std::move(finals)));
}

bool is_permutation_automaton(const Dfa& input) {
  const Dfa d = trim(input);
  std::vector<char> hit(d.size());
  for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t s = 0; s < d.size(); ++s) {
      const std::size_t t = d.next(s, static_cast<Letter>(a));
      if (hit[t]) return false;
      hit[t] = 1;
    }
  }
  return true;
}

std::size_t transition_monoid_size(const Dfa& d, std::size_t limit) {
  using Map = std::vector<std::size_t>;
  std::vector<Map> generators;
  for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
    Map g(d.size());
    for (std::size_t s = 0; s < d.size(); ++s) g[s] = d.next(s, static_cast<Letter>(a));
    generators.push_back(std::move(g));
  }
  Map identity(d.size());
  for (std::size_t s = 0; s < d.size(); ++s) identity[s] = s;

  std::set<Map> seen{identity};
  std::queue<Map> frontier;
  frontier.push(identity);
  while (!frontier.empty()) {
    const Map f = std::move(frontier.front());
    frontier.pop();
    for (const auto& g : generators) {
      Map h(d.size());
      for (std::size_t s = 0; s < d.size(); ++s) h[s] = g[f[s]];
      if (seen.insert(h).second) {
        if (seen.size() > limit) throw Error("transition monoid exceeds " + std::to_string(limit) + " elements");
        frontier.push(std::move(h));
      }
    }
  }
  return seen.size();
}

// ---------------------------------------------------------------------------
// Decomposition

Decomposition eilenberg_decompose(const Word& v, Residue r, PrimeModulus p, std::size_t d) {
  if (d == 0) throw PreconditionError("decomposition degree must be at least 1");
  if (r >= p.value()) throw PreconditionError("residue r must lie in [0, p)");
  QPoly modulus = QPoly::one();
  const QPoly q_minus_one{-1, 1};
  for (std::size_t i = 0; i < d; ++i) modulus *= q_minus_one;
  ResidueRing ring(p, modulus);
  std::vector<ResiduePoly> parts;
  for (auto& e : ring.elements()) {
    if (e.evaluate_at_one() == r) parts.push_back(std::move(e));
  }
  return Decomposition{v, r, std::move(ring), std::move(parts)};
}

Dfa build_union_dfa(const Decomposition& dec) { return build_dfa(dec.v, dec.ring, dec.parts); }

// ---------------------------------------------------------------------------
// Morphisms

bool dfa_quotient_check(const Dfa& big, const Dfa& small, std::span<const std::size_t> mapping) {
  if (!(big.alphabet() == small.alphabet())) return false;
  if (mapping.size() != big.size()) return false;
  for (std::size_t t : mapping) {
    if (t >= small.size()) return false;
  }
  if (mapping[big.initial()] != small.initial()) return false;
  for (std::size_t s = 0; s < big.size(); ++s) {
    if (big.is_final(s) != small.is_final(mapping[s])) return false;
    for (std::size_t a = 0; a < big.alphabet().size(); ++a) {
      const auto letter = static_cast<Letter>(a);
      if (mapping[big.next(s, letter)] != small.next(mapping[s], letter)) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_quotient_map(const Dfa& big, const Dfa& small) {
  if (!(big.alphabet() == small.alphabet())) return std::nullopt;
  std::vector<std::optional<std::size_t>> partial(big.size());
  std::queue<std::size_t> frontier;
  partial[big.initial()] = small.initial();
  frontier.push(big.initial());
  while (!frontier.empty()) {
    const std::size_t s = frontier.front();
    frontier.pop();
    for (std::size_t a = 0; a < big.alphabet().size(); ++a) {
      const auto letter = static_cast<Letter>(a);
      const std::size_t t = big.next(s, letter);
      const std::size_t image = small.next(*partial[s], letter);
      if (!partial[t]) {
        partial[t] = image;
        frontier.push(t);
      } else if (*partial[t] != image) {
        return std::nullopt;
      }
    }
  }
  std::vector<std::size_t> mapping;
  for (const auto& m : partial) {
    if (!m) return std::nullopt;
    mapping.push_back(*m);
  }
  if (!dfa_quotient_check(big, small, mapping)) return std::nullopt;
  return mapping;
}

std::vector<std::optional<Word>> access_words(const Dfa& d) {
  std::vector<std::optional<Word>> words(d.size());
  std::queue<std::size_t> frontier;
  words[d.initial()] = Word(d.alphabet());
  frontier.push(d.initial());
  while (!frontier.empty()) {
    const std::size_t s = frontier.front();
    frontier.pop();
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
      const std::size_t t = d.next(s, static_cast<Letter>(a));
      if (words[t]) continue;
      Word w = *words[s];
      w.push_back(static_cast<Letter>(a));
      words[t] = std::move(w);
      frontier.push(t);
    }
  }
  return words;
}

bool are_isomorphic(const Dfa& a, const Dfa& b) {
  if (a.size() != b.size() || !(a.alphabet() == b.alphabet())) return false;
  const Dfa ta = trim(a), tb = trim(b);
  if (ta.size() != a.size() || tb.size() != b.size()) {
    return false;  // unreachable states have no canonical numbering
  }
  return ta.transitions() == tb.transitions() && ta.finals() == tb.finals();
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string dot_escape(char c) {
  if (c == '"' || c == '\\') return std::string{'\\', c};
  return std::string{c};
}

std::string dot_unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) ++i;
    out.push_back(s[i]);
  }
  return out;
}

struct RawDfa {
  std::optional<std::string> alphabet;
  std::size_t states = 0;
  std::optional<std::size_t> initial;
  std::vector<std::size_t> finals;
  std::vector<std::tuple<std::size_t, char, std::size_t>> edges;
};

Dfa assemble(const RawDfa& raw) {
  std::string symbols;
  if (raw.alphabet) {
    symbols = *raw.alphabet;
  } else {
    for (const auto& [from, c, to] : raw.edges) symbols.push_back(c);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  }
  if (symbols.empty()) throw ParseError("automaton has no alphabet");
  if (!raw.initial) throw ParseError("automaton has no initial state");
  const Alphabet alphabet(symbols);
  std::vector<std::vector<std::optional<std::size_t>>> partial(
      raw.states, std::vector<std::optional<std::size_t>>(alphabet.size()));
  for (const auto& [from, c, to] : raw.edges) {
    if (from >= raw.states || to >= raw.states) throw ParseError("transition refers to an unknown state");
    auto& slot = partial[from][alphabet.letter(c)];
    if (slot && *slot != to) throw ParseError("automaton is not deterministic");
    slot = to;
  }
  std::vector<std::vector<std::size_t>> delta(raw.states, std::vector<std::size_t>(alphabet.size()));
  for (std::size_t s = 0; s < raw.states; ++s) {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (!partial[s][a]) throw ParseError("automaton is not complete");
      delta[s][a] = *partial[s][a];
    }
  }
  std::vector<bool> finals(raw.states, false);
  for (std::size_t f : raw.finals) {
    if (f >= raw.states) throw ParseError("final state out of range");
    finals[f] = true;
  }
  return Dfa(alphabet, std::move(delta), *raw.initial, std::move(finals));
}

}  // namespace

std::string to_dot(const Dfa& d) {
  std::ostringstream os;
  os << "digraph dfa {\n";
  os << "  rankdir=LR;\n";
  os << "  comment=\"";
  for (char c : d.alphabet().symbols()) os << dot_escape(c);
  os << "\";\n";
  os << "  __start [shape=point];\n";
  for (std::size_t s = 0; s < d.size(); ++s) {
    os << "  " << s << " [shape=" << (d.is_final(s) ? "doublecircle" : "circle") << "];\n";
  }
  os << "  __start -> " << d.initial() << ";\n";
  for (std::size_t s = 0; s < d.size(); ++s) {
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
      const auto letter = static_cast<Letter>(a);
      os << "  " << s << " -> " << d.next(s, letter) << " [label=\"" << dot_escape(d.alphabet().symbol(letter))
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

Dfa dfa_from_dot(std::string_view text) {
  static const std::regex comment_re(R"re(^\s*comment\s*=\s*"((?:[^"\\]|\\.)*)"\s*;?\s*$)re");
  static const std::regex node_re(R"re(^\s*(\d+)\s*\[\s*shape\s*=\s*(doublecircle|circle)\s*\]\s*;?\s*$)re");
  static const std::regex start_re(R"re(^\s*__start\s*->\s*(\d+)\s*;?\s*$)re");
  static const std::regex edge_re(R"re(^\s*(\d+)\s*->\s*(\d+)\s*\[\s*label\s*=\s*"((?:[^"\\]|\\.)*)"\s*\]\s*;?\s*$)re");

  RawDfa raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::smatch m;
  bool opened = false;
  while (std::getline(in, line)) {
    if (!opened) {
      if (line.find("digraph") != std::string::npos) opened = true;
      continue;
    }
    if (std::regex_match(line, m, comment_re)) {
      raw.alphabet = dot_unescape(m[1]);
    } else if (std::regex_match(line, m, node_re)) {
      const std::size_t s = std::stoul(m[1]);
      raw.states = std::max(raw.states, s + 1);
      if (m[2] == "doublecircle") raw.finals.push_back(s);
    } else if (std::regex_match(line, m, start_re)) {
      raw.initial = std::stoul(m[1]);
    } else if (std::regex_match(line, m, edge_re)) {
      const std::string label = dot_unescape(m[3]);
      if (label.size() != 1) throw ParseError("edge label must be a single symbol: '" + label + "'");
      raw.edges.emplace_back(std::stoul(m[1]), label[0], std::stoul(m[2]));
    }
  }
  if (!opened) throw ParseError("no digraph found");
  for (const auto& [from, c, to] : raw.edges) raw.states = std::max({raw.states, from + 1, to + 1});
  return assemble(raw);
}

std::string to_json(const Dfa& d) {
  nlohmann::ordered_json j;
  j["alphabet"] = d.alphabet().symbols();
  auto states = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < d.size(); ++s) states.push_back(s);
  j["states"] = std::move(states);
  j["initial"] = d.initial();
  auto finals = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < d.size(); ++s) {
    if (d.is_final(s)) finals.push_back(s);
  }
  j["finals"] = std::move(finals);
  auto transitions = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < d.size(); ++s) {
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
      const auto letter = static_cast<Letter>(a);
      transitions.push_back({s, std::string(1, d.alphabet().symbol(letter)), d.next(s, letter)});
    }
  }
  j["transitions"] = std::move(transitions);
  return j.dump(2) + "\n";
}

Dfa dfa_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RawDfa raw;
    if (j.contains("alphabet")) raw.alphabet = j.at("alphabet").get<std::string>();
    const auto& states = j.at("states");
    if (states.is_number_unsigned()) {
      raw.states = states.get<std::size_t>();
    } else {
      for (const auto& s : states) raw.states = std::max(raw.states, s.get<std::size_t>() + 1);
    }
    raw.initial = j.at("initial").get<std::size_t>();
    for (const auto& f : j.at("finals")) raw.finals.push_back(f.get<std::size_t>());
    for (const auto& t : j.at("transitions")) {
      const auto symbol = t.at(1).get<std::string>();
      if (symbol.size() != 1) throw ParseError("transition symbol must be a single character");
      raw.edges.emplace_back(t.at(0).get<std::size_t>(), symbol[0], t.at(2).get<std::size_t>());
    }
    return assemble(raw);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed automaton JSON: ") + e.what());
  }
}

}  // namespace qwords
