#pragma once

/*
 * Finite words over ordered alphabets and their q-deformed binomial
 * coefficients.
 */

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwords/error.hpp"
#include "qwords/qpoly.hpp"

namespace qwords {

/// Index of a symbol in its alphabet; also its rank in shortlex order.
using Letter = std::uint8_t;

/// Non-empty finite ordered set of single-character symbols.
class Alphabet {
 public:
  /// Symbols in the given order. Throws on duplicates or an empty set.
  explicit Alphabet(std::string_view ordered_symbols);
  /// The distinct symbols of `text`, in code-point order.
  static Alphabet inferred(std::string_view text);

  std::size_t size() const noexcept { return impl_->symbols.size(); }
  char symbol(Letter a) const { return impl_->symbols.at(a); }
  const std::string& symbols() const noexcept { return impl_->symbols; }
  bool contains(char c) const noexcept { return impl_->rank[static_cast<unsigned char>(c)] >= 0; }
  /// Throws AlphabetMismatch when `c` is not a symbol.
  Letter letter(char c) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.impl_ == b.impl_ || a.impl_->symbols == b.impl_->symbols;
  }

 private:
  struct Impl {
    std::string symbols;
    std::array<int, 256> rank;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Finite sequence of letters of an alphabet. Ordered by shortlex.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  /// Throws AlphabetMismatch on a symbol outside the alphabet.
  Word(Alphabet alphabet, std::string_view text);
  Word(Alphabet alphabet, std::vector<Letter> letters);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::string str() const;
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word reversed() const;
  void push_back(Letter a) { letters_.push_back(a); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_ && a.alphabet_ == b.alphabet_;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Throws AlphabetMismatch unless both words share an alphabet.
void require_same_alphabet(const Word& a, const Word& b);

/// Every word of length exactly n, in lexicographic order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t n);
/// Every word of length at most n, in shortlex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t n);

/// v is a scattered subword (resp. prefix, suffix) of u.
bool is_subword(const Word& v, const Word& u);
bool is_prefix(const Word& v, const Word& u);
bool is_suffix(const Word& v, const Word& u);
/// Classical binomial coefficient: occurrences of v as a scattered subword of u.
Integer subword_count(const Word& u, const Word& v);

/// Strictly increasing positions i_1 < ... < i_k of u spelling v.
struct Occurrence {
  std::vector<std::size_t> positions;
};
std::vector<Occurrence> occurrences(const Word& u, const Word& v);

/// The q-binomial coefficient of words, by forward dynamic programming over
/// the prefixes of v.
QPoly qbinom(const Word& u, const Word& v);

/// Independent evaluation of qbinom: each occurrence of v in
/// u = u_0 a_1 u_1 ... a_k u_k contributes q^(sum_i i |u_i|).
/// Exponential in |u|; meant for short words.
QPoly qbinom_oracle(const Word& u, const Word& v);

/// sum over u = u_1 u_2 of q^(|u_1|(|y|-|u_2|)) qbin(x,u_1) qbin(y,u_2).
QPoly vandermonde_split(const Word& x, const Word& y, const Word& u);

/// k-fold factorization sum for qbin(x_1 ... x_k, u); requires k >= 2.
QPoly multi_split(std::span<const Word> xs, const Word& u);

/// Two polynomials that should be equal.
struct PolyPair {
  QPoly lhs;
  QPoly rhs;
  bool equal() const { return lhs == rhs; }
};

/// (qbin(u,v), q^(|v|(|u|-|v|)) qbin(rev u, rev v)(1/q)).
PolyPair reversal_identity_check(const Word& u, const Word& v);

/// ([|u|-|x| choose k-|x|]_q qbin(u,x), sum_{t in A^k} qbin(u,t) qbin(t,x)).
/// Requires |u| >= k >= |x|. A is the alphabet of u.
PolyPair mmsss_identity(const Word& u, const Word& x, std::size_t k);

/// sum over v in A^n of qbin(u, v), A the alphabet of u.
QPoly sum_over_subwords(const Word& u, std::size_t n);
/// sum over u in A^n of qbin(u, v).
QPoly sum_over_superwords(const Word& v, std::size_t n, const Alphabet& alphabet);

/// Rebuilds u from the polynomials qbin(u, a), a in the alphabet. Missing
/// symbols are read as the zero polynomial.
Word reconstruct(const std::map<char, QPoly>& letter_polys, const Alphabet& alphabet);

/// The polynomials (qbin(u, a))_a consumed by reconstruct.
std::map<char, QPoly> letter_polynomials(const Word& u);

/// All distinct factors of u including the empty word, in shortlex order.
std::vector<Word> factors(const Word& u);

}  // namespace qwords
