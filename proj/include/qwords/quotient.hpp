#pragma once

/*
 * The (u, M)-binomial equivalence, its coarsest refining congruence and the
 * finite quotient monoid A* / congruence.
 *
 * Two words are congruent when
 *   - qbin(w1, f) = qbin(w2, f) in K = F_p[q]/<M> for every factor f of u,
 *   - q^|w1| = q^|w2| in K, and
 *   - |w1| = |w2|, or both words are saturated: val(qbin(w, v)) + |w| - |v| >= val(M)
 *     for every v such that av is a factor of u for some letter a.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qwords/qpoly.hpp"
#include "qwords/words.hpp"

namespace qwords {

class CongruenceSpec {
 public:
  /// u must be non-empty; the alphabet is the alphabet of u.
  CongruenceSpec(Word u, ResidueRing ring);

  const Word& u() const noexcept { return u_; }
  const ResidueRing& ring() const noexcept { return ring_; }
  const Alphabet& alphabet() const noexcept { return u_.alphabet(); }
  /// Non-empty factors of u in shortlex order; the residue tuple of a key
  /// follows this order.
  const std::vector<Word>& factors() const noexcept { return factors_; }
  /// ind(q) and per(q) in K.
  const IndexPeriod& q_index_period() const noexcept { return q_ip_; }

  /// n if n < ind(q), otherwise ind(q) + ((n - ind(q)) mod per(q)).
  std::size_t canonical_length(std::size_t n) const noexcept;

  /// Saturation test from the residues of a word (in factors() order) and
  /// its length.
  bool saturated(const std::vector<ResiduePoly>& residues, std::size_t length) const;

 private:
  friend class QuotientBuilder;
  Word u_;
  ResidueRing ring_;
  std::vector<Word> factors_;
  // Indices into factors_ of the non-empty v with av in Fac(u).
  std::vector<std::size_t> saturation_factors_;
  IndexPeriod q_ip_;
};

struct LengthTag {
  bool saturated = false;
  /// Exact length when unsaturated, canonical length when saturated.
  std::size_t value = 0;
  friend bool operator==(const LengthTag&, const LengthTag&) = default;
};

struct ClassKey {
  std::vector<ResiduePoly> residues;
  LengthTag length;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

struct ClassKeyHash {
  std::size_t operator()(const ClassKey& k) const noexcept;
};

ClassKey class_key(const Word& w, const CongruenceSpec& spec);

/// The congruence evaluated literally from its three defining conditions.
bool related(const Word& w1, const Word& w2, const CongruenceSpec& spec);
/// The (u, M)-binomial equivalence alone (first condition only).
bool binomially_equivalent(const Word& w1, const Word& w2, const CongruenceSpec& spec);

struct QuotientClass {
  ClassKey key;
  /// Shortlex-least member.
  Word representative;
};

class QuotientMonoid {
 public:
  const CongruenceSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<QuotientClass>& classes() const noexcept { return classes_; }
  /// Index of [epsilon]; always 0.
  std::size_t identity() const noexcept { return 0; }
  std::size_t transition(std::size_t c, Letter a) const { return transitions_[c][a]; }
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  std::optional<std::size_t> find(const ClassKey& key) const;
  /// Index of the class of w.
  std::size_t class_of(const Word& w) const;

 private:
  friend class QuotientBuilder;
  explicit QuotientMonoid(CongruenceSpec spec) : spec_(std::move(spec)) {}
  CongruenceSpec spec_;
  std::vector<QuotientClass> classes_;
  std::vector<std::vector<std::size_t>> transitions_;
  std::vector<std::size_t> table_;  // row-major size() x size()
  std::unordered_map<ClassKey, std::size_t, ClassKeyHash> index_;
};

struct EnumerationOptions {
  /// Longest representative accepted before giving up; 0 selects the class
  /// count bound, which no breadth-first depth can exceed.
  std::size_t max_length = 0;
};

/// #K^(#Fac(u) - 1) * (per(q) + ind(q) + |u| + val(M)).
Integer class_count_bound(const CongruenceSpec& spec);

/// Breadth-first enumeration of A* in shortlex order. Classes are numbered by
/// discovery, so class i has the i-th smallest representative.
QuotientMonoid enumerate_quotient(const CongruenceSpec& spec, EnumerationOptions options = {});

bool is_group(const QuotientMonoid& m);
/// Least k >= 1 with x^k = identity, or nullopt when x is not invertible.
std::vector<std::optional<std::size_t>> element_orders(const QuotientMonoid& m);
/// Elements with a two-sided inverse.
std::vector<bool> invertible_elements(const QuotientMonoid& m);
/// Every element order divides per(q) p^|u|. Throws unless q is a unit.
bool exponent_check(const QuotientMonoid& m);

/// Human-readable `rep<TAB>r_1,r_2,...<TAB>exact:n|cyclic:n` line.
std::string describe_class(const QuotientClass& c);

}  // namespace qwords
