#include <gtest/gtest.h>

#include <random>

#include "qwords/words.hpp"

using namespace qwords;

namespace {

const Alphabet bin("01");
const Alphabet tern("012");

Word W(const char* s, const Alphabet& a = bin) { return Word(a, s); }
QPoly P(const char* text) { return parse_qpoly(text); }

}  // namespace

TEST(Alphabet, Construction) {
  EXPECT_THROW(Alphabet(""), PreconditionError);
  EXPECT_THROW(Alphabet("aba"), PreconditionError);
  EXPECT_EQ(Alphabet::inferred("banana").symbols(), "abn");
  const Alphabet rev("ba");
  EXPECT_EQ(rev.letter('b'), 0);
  EXPECT_THROW(rev.letter('c'), AlphabetMismatch);
  EXPECT_THROW(Word(bin, "012"), AlphabetMismatch);
}

TEST(Word, ShortlexOrder) {
  EXPECT_LT(W("1"), W("00"));
  EXPECT_LT(W("01"), W("10"));
  EXPECT_LT(Word(bin), W("0"));
  const Alphabet rev("10");
  EXPECT_LT(Word(rev, "1"), Word(rev, "0"));
  const auto all = words_up_to(bin, 3);
  EXPECT_EQ(all.size(), 15u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Word, Basics) {
  const Word w = W("0110");
  EXPECT_EQ(w.reversed(), W("0110"));
  EXPECT_EQ(W("011").reversed(), W("110"));
  EXPECT_EQ(w.substr(1, 2), W("11"));
  EXPECT_EQ(W("01") + W("10"), w);
  EXPECT_TRUE(is_prefix(W("01"), w));
  EXPECT_TRUE(is_suffix(W("10"), w));
  EXPECT_TRUE(is_subword(W("00"), w));
  EXPECT_FALSE(is_subword(W("000"), w));
  EXPECT_THROW(require_same_alphabet(W("0"), Word(tern, "0")), AlphabetMismatch);
}

TEST(QBinom, KnownValues) {
  EXPECT_EQ(to_string(qbinom(W("0100110"), W("011"))), "q^10+q^9+q^6+q^4+q^3");
  const Word u(tern, "01001201021");
  EXPECT_EQ(to_string(qbinom(u, Word(tern, "0"))), "q^10+q^8+q^7+q^4+q^2");
  EXPECT_EQ(to_string(qbinom(W("0110011"), W("01"))), "q^10+q^9+q^6+q^5+q^3+2*q^2+q");
  EXPECT_EQ(qbinom(W("01101"), W("01")), P("q^6+q^5+q^3+1"));
  EXPECT_EQ(qbinom(W("0110"), W("0")), P("q^3+1"));
  EXPECT_EQ(qbinom(W("0110"), W("1")), P("q^2+q"));
}

TEST(QBinom, Trivial) {
  const Alphabet abc("abc");
  EXPECT_EQ(qbinom(Word(abc, "abc"), Word(abc)), QPoly::one());
  EXPECT_TRUE(qbinom(Word(bin), W("0")).is_zero());
  EXPECT_EQ(qbinom_oracle(W("0110011"), W("01")), qbinom(W("0110011"), W("01")));
  EXPECT_THROW(qbinom(W("0"), Word(tern, "0")), AlphabetMismatch);
}

TEST(QBinom, UnaryAlphabetIsGauss) {
  const Alphabet one("a");
  for (std::size_t m = 0; m <= 9; ++m) {
    for (std::size_t r = 0; r <= m + 1; ++r) {
      EXPECT_EQ(qbinom(Word(one, std::string(m, 'a')), Word(one, std::string(r, 'a'))), gauss_binomial(m, r));
    }
  }
}

TEST(QBinom, Occurrences) {
  const auto occ = occurrences(W("0100110"), W("011"));
  EXPECT_EQ(occ.size(), 5u);
  for (const auto& o : occ) {
    ASSERT_EQ(o.positions.size(), 3u);
    EXPECT_LT(o.positions[0], o.positions[1]);
    EXPECT_LT(o.positions[1], o.positions[2]);
  }
  EXPECT_EQ(subword_count(W("0100110"), W("011")), 5);
}

TEST(Properties, DegenerationAtOne) {
  for (const auto& u : words_up_to(bin, 10)) {
    for (const auto& v : words_up_to(bin, u.size())) {
      ASSERT_EQ(qbinom(u, v).evaluate(1), subword_count(u, v)) << u << " " << v;
    }
  }
}

TEST(Properties, OracleEquivalenceAndZeroCharacterization) {
  for (const auto& u : words_up_to(bin, 8)) {
    for (const auto& v : words_up_to(bin, 4)) {
      const QPoly value = qbinom(u, v);
      ASSERT_EQ(value, qbinom_oracle(u, v)) << u << " " << v;
      ASSERT_EQ(value.is_zero(), !is_subword(v, u)) << u << " " << v;
    }
  }
}

TEST(Properties, DegreeAndExtremeCoefficients) {
  for (const auto& u : words_up_to(bin, 8)) {
    for (const auto& v : words_up_to(bin, u.size())) {
      const QPoly value = qbinom(u, v);
      if (value.is_zero()) continue;
      const std::size_t top = v.size() * (u.size() - v.size());
      ASSERT_LE(*value.degree(), top);
      ASSERT_EQ(value.coefficient(*value.degree()), 1);
      ASSERT_EQ(value.coefficient(*valuation(value)), 1);
      ASSERT_EQ(value.coefficient(0) == 1, is_suffix(v, u)) << u << " " << v;
      ASSERT_EQ(value.coefficient(top) == 1, is_prefix(v, u)) << u << " " << v;
      const QPoly gauss = gauss_binomial(u.size(), v.size());
      for (std::size_t i = 0; i <= top; ++i) ASSERT_LE(value.coefficient(i), gauss.coefficient(i));
    }
  }
}

TEST(Vandermonde, Examples) {
  EXPECT_EQ(vandermonde_split(W("0100"), W("110"), W("011")), P("q^10+q^9+q^6+q^4+q^3"));
  EXPECT_EQ(vandermonde_split(Word(bin), W("110"), W("11")), qbinom(W("110"), W("11")));
  EXPECT_EQ(vandermonde_split(W("01"), W("10"), W("00")), qbinom_oracle(W("0110"), W("00")));
}

TEST(MultiSplit, Examples) {
  std::vector<Word> letters;
  for (char c : std::string("0100110")) letters.push_back(Word(bin, std::string(1, c)));
  EXPECT_EQ(multi_split(letters, W("011")), qbinom(W("0100110"), W("011")));
  const std::vector<Word> pair{W("0110"), Word(bin)};
  EXPECT_EQ(multi_split(pair, W("01")), qbinom(W("0110"), W("01")));
  const std::vector<Word> three{W("01"), W("00"), W("11")};
  EXPECT_EQ(multi_split(three, W("011")), qbinom_oracle(W("010011"), W("011")));
  EXPECT_THROW(multi_split(std::vector<Word>{W("0")}, W("0")), PreconditionError);
}

TEST(Properties, RandomSplits) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(0, 8), bit(0, 1), parts(2, 4);
  auto random_word = [&](int max) {
    std::string s(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, max)(rng)), '0');
    for (auto& c : s) c = static_cast<char>('0' + bit(rng));
    return Word(bin, s);
  };
  for (int i = 0; i < 200; ++i) {
    const Word x = random_word(8), y = random_word(8), u = random_word(8);
    ASSERT_EQ(vandermonde_split(x, y, u), qbinom(x + y, u)) << x << " " << y << " " << u;
    std::vector<Word> xs(static_cast<std::size_t>(parts(rng)), Word(bin));
    Word whole(bin);
    for (auto& piece : xs) {
      piece = random_word(8 / static_cast<int>(xs.size()) + 1);
      whole += piece;
    }
    const Word v = random_word(std::min<int>(8, static_cast<int>(whole.size())));
    ASSERT_EQ(multi_split(xs, v), qbinom(whole, v)) << whole << " " << v;
  }
}

TEST(Reversal, ExamplesAndProperty) {
  const auto pair = reversal_identity_check(W("01101"), W("01"));
  EXPECT_EQ(pair.lhs, P("q^6+q^5+q^3+1"));
  EXPECT_TRUE(pair.equal());
  EXPECT_EQ(reversal_identity_check(W("0110"), W("0110")).lhs, QPoly::one());
  EXPECT_TRUE(reversal_identity_check(W("0110"), W("00")).equal());
  for (const auto& u : words_up_to(bin, 8)) {
    for (const auto& v : words_up_to(bin, u.size())) ASSERT_TRUE(reversal_identity_check(u, v).equal()) << u << v;
  }
}

TEST(Mmsss, ExamplesAndProperty) {
  EXPECT_TRUE(mmsss_identity(W("0110"), W("1"), 2).equal());
  const auto same = mmsss_identity(W("0110"), W("01"), 2);
  EXPECT_EQ(same.lhs, qbinom(W("0110"), W("01")));
  EXPECT_TRUE(same.equal());
  EXPECT_TRUE(mmsss_identity(W("0100110"), W("01"), 3).equal());
  EXPECT_THROW(mmsss_identity(W("01"), W("0"), 3), PreconditionError);
  for (const auto& u : words_up_to(bin, 6)) {
    for (const auto& x : words_up_to(bin, std::min<std::size_t>(2, u.size()))) {
      for (std::size_t k = x.size(); k <= u.size(); ++k) ASSERT_TRUE(mmsss_identity(u, x, k).equal()) << u << x << k;
    }
  }
}

TEST(SumIdentities, KnownValues) {
  EXPECT_EQ(sum_over_subwords(W("011010"), 3), gauss_binomial(6, 3));
  EXPECT_EQ(to_string(sum_over_subwords(W("011010"), 3)), "q^9+q^8+2*q^7+3*q^6+3*q^5+3*q^4+3*q^3+2*q^2+q+1");
  EXPECT_EQ(sum_over_superwords(W("01"), 5, bin), gauss_binomial(5, 2) * Integer(8));
  EXPECT_EQ(to_string(sum_over_superwords(W("01"), 5, bin)), "8*q^6+8*q^5+16*q^4+16*q^3+16*q^2+8*q+8");
  EXPECT_EQ(sum_over_subwords(W("0110"), 0), QPoly::one());
}

TEST(SumIdentities, GeneralShape) {
  for (const auto& u : words_up_to(tern, 4)) {
    for (std::size_t n = 0; n <= u.size(); ++n) EXPECT_EQ(sum_over_subwords(u, n), gauss_binomial(u.size(), n));
  }
  for (const auto& v : words_up_to(tern, 2)) {
    for (std::size_t n = v.size(); n <= 5; ++n) {
      Integer scale = 1;
      for (std::size_t i = v.size(); i < n; ++i) scale *= 3;
      EXPECT_EQ(sum_over_superwords(v, n, tern), gauss_binomial(n, v.size()) * scale);
    }
  }
}

TEST(Reconstruct, Examples) {
  EXPECT_EQ(reconstruct({{'0', P("q^3+1")}, {'1', P("q^2+q")}}, bin), W("0110"));
  EXPECT_EQ(reconstruct({{'0', QPoly{}}, {'1', QPoly{}}}, bin), Word(bin));
  const Word u(tern, "01001201021");
  EXPECT_EQ(reconstruct(letter_polynomials(u), tern), u);
}

TEST(Reconstruct, Errors) {
  EXPECT_THROW(reconstruct({{'0', P("2*q")}}, bin), PreconditionError);
  EXPECT_THROW(reconstruct({{'0', P("q+1")}, {'1', P("q")}}, bin), PreconditionError);
  EXPECT_THROW(reconstruct({{'0', P("q^2+1")}}, bin), PreconditionError);
  EXPECT_THROW(reconstruct({{'7', P("1")}}, bin), AlphabetMismatch);
}

TEST(Properties, ReconstructionRoundTrip) {
  for (const auto& u : words_up_to(tern, 8)) ASSERT_EQ(reconstruct(letter_polynomials(u), tern), u);
}

TEST(Factors, Examples) {
  EXPECT_EQ(factors(W("01")), (std::vector<Word>{Word(bin), W("0"), W("1"), W("01")}));
  EXPECT_EQ(factors(Word(bin)), std::vector<Word>{Word(bin)});
  EXPECT_EQ(factors(W("010")), (std::vector<Word>{Word(bin), W("0"), W("1"), W("01"), W("10"), W("010")}));
}
