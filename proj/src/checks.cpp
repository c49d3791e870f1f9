#include "qwords/checks.hpp"

#include <random>
#include <sstream>

#include "qwords/quotient.hpp"
#include "qwords/series.hpp"
#include "qwords/words.hpp"

namespace qwords {

namespace {

const Alphabet& binary() {
  static const Alphabet a("01");
  return a;
}

Word random_word(std::mt19937& rng, const Alphabet& alphabet, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> sym(0, static_cast<int>(alphabet.size()) - 1);
  const std::size_t n = len(rng);
  std::vector<Letter> letters(n);
  for (auto& a : letters) a = static_cast<Letter>(sym(rng));
  return Word(alphabet, std::move(letters));
}

// A random scattered subword of w of length at most max_length.
Word random_subword(std::mt19937& rng, const Word& w, std::size_t max_length) {
  std::bernoulli_distribution keep(0.5);
  std::vector<Letter> letters;
  for (Letter a : w.letters()) {
    if (letters.size() < max_length && keep(rng)) letters.push_back(a);
  }
  return Word(w.alphabet(), std::move(letters));
}

std::string show(const Word& w) { return w.empty() ? std::string("\"\"") : w.str(); }

void fail(CheckReport& r, const std::string& what) {
  if (r.passed) r.counterexample = what;
  r.passed = false;
}

}  // namespace

CheckReport check_vandermonde(std::size_t instances, unsigned seed) {
  CheckReport r{"vandermonde", true, 0, {}};
  std::mt19937 rng(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    const Word x = random_word(rng, binary(), 8);
    const Word y = random_word(rng, binary(), 8);
    const Word xy = x + y;
    const Word u = (i % 2 == 0) ? random_subword(rng, xy, 8) : random_word(rng, binary(), 8);
    ++r.cases;
    if (vandermonde_split(x, y, u) != qbinom(xy, u)) {
      fail(r, "x=" + show(x) + " y=" + show(y) + " u=" + show(u));
    }

    std::vector<Word> parts{random_word(rng, binary(), 8), random_word(rng, binary(), 8),
                            random_word(rng, binary(), 8)};
    const Word whole = parts[0] + parts[1] + parts[2];
    const Word v = (i % 2 == 0) ? random_subword(rng, whole, 8) : random_word(rng, binary(), 8);
    ++r.cases;
    if (multi_split(parts, v) != qbinom(whole, v)) {
      fail(r, "x1=" + show(parts[0]) + " x2=" + show(parts[1]) + " x3=" + show(parts[2]) + " u=" + show(v));
    }
  }
  return r;
}

CheckReport check_mmsss(std::size_t max_length) {
  CheckReport r{"mmsss", true, 0, {}};
  for (const auto& u : words_up_to(binary(), max_length)) {
    for (const auto& x : words_up_to(binary(), u.size())) {
      for (std::size_t k = x.size(); k <= u.size(); ++k) {
        ++r.cases;
        if (!mmsss_identity(u, x, k).equal()) {
          fail(r, "u=" + show(u) + " x=" + show(x) + " k=" + std::to_string(k));
        }
      }
    }
  }
  return r;
}

CheckReport check_shuffle_assoc(std::size_t max_total) {
  CheckReport r{"shuffle-assoc", true, 0, {}};
  for (std::size_t n = 0; n <= max_total; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; i + j <= n; ++j) {
        const std::size_t k = n - i - j;
        const auto xs = words_of_length(binary(), i);
        const auto ys = words_of_length(binary(), j);
        const auto zs = words_of_length(binary(), k);
        for (const auto& x : xs) {
          for (const auto& y : ys) {
            const NcPoly xy = qshuffle(x, y);
            for (const auto& z : zs) {
              ++r.cases;
              const NcPoly left = qshuffle_series(xy, NcPoly::monomial(z));
              const NcPoly right = qshuffle_series(NcPoly::monomial(x), qshuffle(y, z));
              if (left != right) fail(r, "x=" + show(x) + " y=" + show(y) + " z=" + show(z));
            }
          }
        }
      }
    }
  }
  return r;
}

CheckReport check_reciprocity(std::size_t max_length) {
  CheckReport r{"reciprocity", true, 0, {}};
  const auto words = words_up_to(binary(), max_length);
  for (const auto& u : words) {
    for (const auto& v : words) {
      ++r.cases;
      const NcPoly uv = qshuffle(u, v);
      const NcPoly vu = qshuffle(v, u);
      bool ok = uv.size() == vu.size();
      for (const auto& [w, c] : uv.terms()) {
        if (!ok) break;
        ok = vu.coefficient(w).reversed(u.size() * v.size()) == c;
      }
      if (!ok) fail(r, "u=" + show(u) + " v=" + show(v));
    }
  }
  return r;
}

CheckReport check_key_soundness(std::size_t max_length) {
  CheckReport r{"key-soundness", true, 0, {}};
  struct Regime {
    const char* u;
    std::uint32_t p;
    QPoly modulus;
  };
  const std::vector<Regime> regimes{
      {"01", 2, QPoly{1, 0, 1}},     // q invertible
      {"01", 2, QPoly{0, 0, 1}},     // q nilpotent
      {"010", 2, QPoly{0, 1, 0, 1}}, // q neither invertible nor nilpotent
      {"01", 3, QPoly{1, -2, 1}},    // (q - 1)^2
  };
  const auto words = words_up_to(binary(), max_length);
  for (const auto& regime : regimes) {
    const CongruenceSpec spec(Word(binary(), regime.u), ResidueRing(PrimeModulus(regime.p), regime.modulus));
    std::vector<ClassKey> keys;
    keys.reserve(words.size());
    for (const auto& w : words) keys.push_back(class_key(w, spec));
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i; j < words.size(); ++j) {
        ++r.cases;
        if ((keys[i] == keys[j]) != related(words[i], words[j], spec)) {
          fail(r, "u=" + std::string(regime.u) + " p=" + std::to_string(regime.p) + " M=" +
                      to_string(spec.ring().modulus()) + " w1=" + show(words[i]) + " w2=" + show(words[j]));
        }
      }
    }
  }
  return r;
}

std::vector<std::string> check_suite_names() {
  return {"vandermonde", "mmsss", "shuffle-assoc", "reciprocity", "key-soundness"};
}

std::optional<CheckReport> run_check(std::string_view suite) {
  if (suite == "vandermonde") return check_vandermonde();
  if (suite == "mmsss") return check_mmsss();
  if (suite == "shuffle-assoc") return check_shuffle_assoc();
  if (suite == "reciprocity") return check_reciprocity();
  if (suite == "key-soundness") return check_key_soundness();
  return std::nullopt;
}

}  // namespace qwords
