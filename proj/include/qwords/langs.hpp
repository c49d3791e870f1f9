#pragma once

/*
 * Languages L(v, R, M) = { w : qbin(w, v) = R in F_p[q]/<M> }, their
 * automata, and the split of the classical mod-p subword languages into
 * such languages for M = (q - 1)^d.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwords/qpoly.hpp"
#include "qwords/words.hpp"

namespace qwords {

class LanguageSpec {
 public:
  /// The ring is the ring of `target`.
  LanguageSpec(Word v, ResiduePoly target) : v_(std::move(v)), target_(std::move(target)) {}

  const Word& v() const noexcept { return v_; }
  const ResidueRing& ring() const noexcept { return target_.ring(); }
  const ResiduePoly& target() const noexcept { return target_; }
  const Alphabet& alphabet() const noexcept { return v_.alphabet(); }

 private:
  Word v_;
  ResiduePoly target_;
};

bool membership(const Word& w, const LanguageSpec& spec);

/// Complete deterministic automaton over an alphabet. States are 0..size()-1.
class Dfa {
 public:
  /// transitions[s][a] for every state s and letter a. Throws
  /// PreconditionError on a partial or out-of-range table.
  Dfa(Alphabet alphabet, std::vector<std::vector<std::size_t>> transitions, std::size_t initial,
      std::vector<bool> finals);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return delta_.size(); }
  std::size_t initial() const noexcept { return initial_; }
  bool is_final(std::size_t s) const { return finals_.at(s); }
  const std::vector<bool>& finals() const noexcept { return finals_; }
  std::size_t next(std::size_t s, Letter a) const { return delta_[s][a]; }
  const std::vector<std::vector<std::size_t>>& transitions() const noexcept { return delta_; }

  std::size_t run(const Word& w) const;
  bool accepts(const Word& w) const { return finals_[run(w)]; }

  /// Same transitions, new accepting set.
  Dfa with_finals(std::vector<bool> finals) const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<std::size_t>> delta_;
  std::size_t initial_;
  std::vector<bool> finals_;
};

/// States are the classes of the congruence for u = v; accepting classes
/// are those whose residue at v lies in `targets`. An empty v yields the
/// one-state automaton.
Dfa build_dfa(const Word& v, const ResidueRing& ring, std::span<const ResiduePoly> targets);
Dfa build_dfa(const LanguageSpec& spec);

/// Restriction to the states reachable from the initial state, renumbered in
/// breadth-first order (letters in alphabet order).
Dfa trim(const Dfa& d);
/// Moore partition refinement from the final/non-final split, then
/// breadth-first renumbering; equal languages give identical results.
Dfa minimize(const Dfa& d);
/// Every letter acts bijectively on the reachable states.
bool is_permutation_automaton(const Dfa& d);
/// Size of the monoid of state maps generated by the letters, identity
/// included. Throws Error beyond `limit` elements.
std::size_t transition_monoid_size(const Dfa& d, std::size_t limit = 1'000'000);

struct Decomposition {
  Word v;
  Residue r;
  ResidueRing ring;  // F_p[q]/<(q - 1)^d>
  /// Every R with R(1) = r mod p, in base-p order.
  std::vector<ResiduePoly> parts;
};

/// Requires d >= 1 and r < p.
Decomposition eilenberg_decompose(const Word& v, Residue r, PrimeModulus p, std::size_t d);
/// The automaton of the union of the parts, i.e. of binom(w, v) = r mod p.
Dfa build_union_dfa(const Decomposition& dec);

/// The map commutes with the transitions, sends initial to initial and final
/// states exactly onto final states.
bool dfa_quotient_check(const Dfa& big, const Dfa& small, std::span<const std::size_t> mapping);
/// The unique candidate map obtained by running both automata in lockstep,
/// provided it passes dfa_quotient_check. Unreachable states of `big` are
/// not covered.
std::optional<std::vector<std::size_t>> find_quotient_map(const Dfa& big, const Dfa& small);
/// Shortlex-least word reaching each reachable state (nullopt elsewhere).
std::vector<std::optional<Word>> access_words(const Dfa& d);
/// Equal up to a renumbering of states. Automata with unreachable states
/// never compare isomorphic.
bool are_isomorphic(const Dfa& a, const Dfa& b);

/// Graphviz text: `__start -> <initial>`, doublecircle finals, one labeled
/// edge per transition.
std::string to_dot(const Dfa& d);
Dfa dfa_from_dot(std::string_view text);
/// {"alphabet", "states", "initial", "finals", "transitions": [[from, symbol, to], ...]}.
std::string to_json(const Dfa& d);
/// Accepts the to_json layout, or a state count under "states"; "alphabet" is optional and otherwise inferred
/// from the transition symbols.
Dfa dfa_from_json(std::string_view text);

}  // namespace qwords
