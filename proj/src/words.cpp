#include "qwords/words.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace qwords {

// ---------------------------------------------------------------------------
// Alphabet / Word

Alphabet::Alphabet(std::string_view ordered_symbols) {
  if (ordered_symbols.empty()) throw PreconditionError("alphabet must be non-empty");
  if (ordered_symbols.size() > 256) throw PreconditionError("alphabet too large");
  Impl impl{std::string(ordered_symbols), {}};
  impl.rank.fill(-1);
  for (std::size_t i = 0; i < ordered_symbols.size(); ++i) {
    auto& slot = impl.rank[static_cast<unsigned char>(ordered_symbols[i])];
    if (slot >= 0) {
      throw PreconditionError(std::string("duplicate alphabet symbol '") + ordered_symbols[i] + "'");
    }
    slot = static_cast<int>(i);
  }
  impl_ = std::make_shared<const Impl>(std::move(impl));
}

Alphabet Alphabet::inferred(std::string_view text) {
  std::string symbols(text);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  return Alphabet(symbols);
}

Letter Alphabet::letter(char c) const {
  const int r = impl_->rank[static_cast<unsigned char>(c)];
  if (r < 0) {
    throw AlphabetMismatch(std::string("symbol '") + c + "' is not in alphabet {" + symbols() + "}");
  }
  return static_cast<Letter>(r);
}

Word::Word(Alphabet alphabet, std::string_view text) : alphabet_(std::move(alphabet)) {
  letters_.reserve(text.size());
  for (char c : text) letters_.push_back(alphabet_.letter(c));
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (a >= alphabet_.size()) throw AlphabetMismatch("letter index outside the alphabet");
  }
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter a : letters_) s.push_back(alphabet_.symbol(a));
  return s;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + pos, letters_.begin() + pos + len);
  return out;
}

Word Word::reversed() const {
  Word out = *this;
  std::reverse(out.letters_.begin(), out.letters_.end());
  return out;
}

Word& Word::operator+=(const Word& other) {
  require_same_alphabet(*this, other);
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
  return a.alphabet_.symbols() <=> b.alphabet_.symbols();
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return w.empty() ? os << "\"\"" : os << w.str();
}

void require_same_alphabet(const Word& a, const Word& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw AlphabetMismatch("words over different alphabets {" + a.alphabet().symbols() + "} and {" +
                           b.alphabet().symbols() + "}");
  }
}

std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t n) {
  std::vector<Word> out;
  std::vector<Letter> digits(n, 0);
  const auto k = alphabet.size();
  while (true) {
    out.emplace_back(alphabet, digits);
    std::size_t i = n;
    while (i > 0 && ++digits[i - 1] == k) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto level = words_of_length(alphabet, len);
    std::move(level.begin(), level.end(), std::back_inserter(out));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subwords

bool is_subword(const Word& v, const Word& u) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < u.size() && j < v.size(); ++i) {
    if (u[i] == v[j]) ++j;
  }
  return j == v.size();
}

bool is_prefix(const Word& v, const Word& u) {
  return v.size() <= u.size() && std::equal(v.letters().begin(), v.letters().end(), u.letters().begin());
}

bool is_suffix(const Word& v, const Word& u) {
  return v.size() <= u.size() &&
         std::equal(v.letters().begin(), v.letters().end(), u.letters().end() - static_cast<long>(v.size()));
}

Integer subword_count(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  std::vector<Integer> dp(v.size() + 1, Integer(0));
  dp[0] = 1;
  for (Letter a : u.letters()) {
    for (std::size_t j = v.size(); j >= 1; --j) {
      if (v[j - 1] == a) dp[j] += dp[j - 1];
    }
  }
  return dp[v.size()];
}

std::vector<Occurrence> occurrences(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  std::vector<Occurrence> out;
  std::vector<std::size_t> positions;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    const std::size_t j = positions.size();
    if (j == v.size()) {
      out.push_back(Occurrence{positions});
      return;
    }
    // Leave room for the remaining letters of v.
    for (std::size_t i = start; i + (v.size() - j) <= u.size(); ++i) {
      if (u[i] != v[j]) continue;
      positions.push_back(i);
      self(self, i + 1);
      positions.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

// ---------------------------------------------------------------------------
// q-binomials

QPoly qbinom(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  const std::size_t k = v.size();
  if (k > u.size()) return {};
  // dp[j] = qbin(current prefix of u, v_1 ... v_j); appending a letter a uses
  //   qbin(wa, xb) = qbin(w, xb) q^|xb| + [a = b] qbin(w, x).
  std::vector<QPoly> dp(k + 1);
  dp[0] = QPoly::one();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Letter a = u[i];
    // Only prefixes no longer than i+1 can be non-zero so far.
    for (std::size_t j = std::min(k, i + 1); j >= 1; --j) {
      dp[j].shift(j);
      if (v[j - 1] == a) dp[j] += dp[j - 1];
    }
  }
  return dp[k];
}

QPoly qbinom_oracle(const Word& u, const Word& v) {
  std::vector<Integer> counts;
  const std::size_t n = u.size();
  const std::size_t k = v.size();
  for (const auto& occ : occurrences(u, v)) {
    // |u_i| is the gap after the i-th chosen letter (u_k runs to the end).
    std::size_t exponent = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const std::size_t next = (i < k) ? occ.positions[i] : n;
      exponent += i * (next - occ.positions[i - 1] - 1);
    }
    if (counts.size() <= exponent) counts.resize(exponent + 1, Integer(0));
    counts[exponent] += 1;
  }
  return QPoly(std::move(counts));
}

QPoly vandermonde_split(const Word& x, const Word& y, const Word& u) {
  require_same_alphabet(x, u);
  require_same_alphabet(y, u);
  QPoly total;
  for (std::size_t j = 0; j <= u.size(); ++j) {
    const Word u1 = u.prefix(j);
    const Word u2 = u.substr(j);
    if (u2.size() > y.size()) continue;  // qbin(y, u2) = 0
    QPoly term = qbinom(x, u1) * qbinom(y, u2);
    term.shift(u1.size() * (y.size() - u2.size()));
    total += term;
  }
  return total;
}

QPoly multi_split(std::span<const Word> xs, const Word& u) {
  const std::size_t k = xs.size();
  if (k < 2) throw PreconditionError("multi_split needs at least two factors");
  for (const auto& x : xs) require_same_alphabet(x, u);

  // tail_x[i] = |x_{i+1} ... x_k| (0-based: words after index i).
  std::vector<std::size_t> tail_x(k, 0);
  for (std::size_t i = k - 1; i-- > 0;) tail_x[i] = tail_x[i + 1] + xs[i + 1].size();

  QPoly total;
  std::vector<std::size_t> cuts{0};
  auto recurse = [&](auto&& self, std::size_t i, QPoly acc, std::size_t exponent) -> void {
    const std::size_t start = cuts.back();
    if (i == k - 1) {
      const Word part = u.substr(start);
      if (part.size() > xs[i].size()) return;
      acc *= qbinom(xs[i], part);
      if (acc.is_zero()) return;
      acc.shift(exponent);
      total += acc;
      return;
    }
    for (std::size_t end = start; end <= u.size(); ++end) {
      const Word part = u.substr(start, end - start);
      if (part.size() > xs[i].size()) break;
      const std::size_t tail_u = u.size() - end;
      if (tail_u > tail_x[i]) continue;  // later factors cannot absorb the rest
      QPoly next = acc * qbinom(xs[i], part);
      if (next.is_zero()) continue;
      cuts.push_back(end);
      self(self, i + 1, std::move(next), exponent + part.size() * (tail_x[i] - tail_u));
      cuts.pop_back();
    }
  };
  recurse(recurse, 0, QPoly::one(), 0);
  return total;
}

PolyPair reversal_identity_check(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  PolyPair out{qbinom(u, v), {}};
  if (v.size() <= u.size()) {
    out.rhs = qbinom(u.reversed(), v.reversed()).reversed(v.size() * (u.size() - v.size()));
  }
  return out;
}

PolyPair mmsss_identity(const Word& u, const Word& x, std::size_t k) {
  require_same_alphabet(u, x);
  if (!(u.size() >= k && k >= x.size())) {
    throw PreconditionError("mmsss_identity requires |u| >= k >= |x|");
  }
  PolyPair out;
  out.lhs = gauss_binomial(u.size() - x.size(), k - x.size()) * qbinom(u, x);
  for (const auto& t : words_of_length(u.alphabet(), k)) {
    QPoly left = qbinom(u, t);
    if (left.is_zero()) continue;
    out.rhs += left * qbinom(t, x);
  }
  return out;
}

QPoly sum_over_subwords(const Word& u, std::size_t n) {
  QPoly total;
  if (n > u.size()) return total;
  for (const auto& v : words_of_length(u.alphabet(), n)) total += qbinom(u, v);
  return total;
}

QPoly sum_over_superwords(const Word& v, std::size_t n, const Alphabet& alphabet) {
  if (!(v.alphabet() == alphabet)) throw AlphabetMismatch("word is not over the given alphabet");
  QPoly total;
  if (n < v.size()) return total;
  for (const auto& u : words_of_length(alphabet, n)) total += qbinom(u, v);
  return total;
}

Word reconstruct(const std::map<char, QPoly>& letter_polys, const Alphabet& alphabet) {
  std::size_t length = 0;
  for (const auto& [symbol, poly] : letter_polys) {
    alphabet.letter(symbol);
    for (const auto& c : poly.coeffs()) {
      if (c != 0 && c != 1) {
        throw PreconditionError(std::string("coefficient ") + c.str() + " of letter '" + symbol +
                                "' is not 0 or 1");
      }
      if (c == 1) ++length;
    }
  }
  std::vector<int> slots(length, -1);
  for (const auto& [symbol, poly] : letter_polys) {
    const Letter a = alphabet.letter(symbol);
    const auto c = poly.coeffs();
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (c[e] == 0) continue;
      // Exponents are positions counted from the right, starting at 0.
      if (e >= length) {
        throw PreconditionError("position q^" + std::to_string(e) + " leaves a gap in a word of length " +
                                std::to_string(length));
      }
      int& slot = slots[length - 1 - e];
      if (slot >= 0) throw PreconditionError("two letters claim position q^" + std::to_string(e));
      slot = a;
    }
  }
  std::vector<Letter> letters;
  letters.reserve(length);
  for (int s : slots) {
    if (s < 0) throw PreconditionError("unclaimed position in reconstruction");
    letters.push_back(static_cast<Letter>(s));
  }
  return Word(alphabet, std::move(letters));
}

std::map<char, QPoly> letter_polynomials(const Word& u) {
  std::map<char, QPoly> out;
  for (std::size_t i = 0; i < u.alphabet().size(); ++i) {
    const auto a = static_cast<Letter>(i);
    out[u.alphabet().symbol(a)] = qbinom(u, Word(u.alphabet(), std::vector<Letter>{a}));
  }
  return out;
}

std::vector<Word> factors(const Word& u) {
  std::set<Word> seen;
  for (std::size_t i = 0; i <= u.size(); ++i) {
    for (std::size_t len = 0; i + len <= u.size(); ++len) seen.insert(u.substr(i, len));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace qwords
