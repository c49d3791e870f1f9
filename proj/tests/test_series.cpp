#include <gtest/gtest.h>

#include "qwords/checks.hpp"
#include "qwords/series.hpp"

using namespace qwords;

namespace {

const Alphabet bin("01");
const Alphabet tern("012");

Word W(const char* s, const Alphabet& a = bin) { return Word(a, s); }
QPoly P(const char* text) { return parse_qpoly(text); }

NcPoly S(std::initializer_list<std::pair<const char*, const char*>> terms, const Alphabet& a = bin) {
  NcPoly s;
  for (const auto& [w, c] : terms) s.add(Word(a, w), P(c));
  return s;
}

// q-shuffle by enumerating the positions taken by u in the result; each
// letter of u is weighted by the letters of v to its left.
NcPoly shuffle_by_positions(const Word& u, const Word& v) {
  const std::size_t n = u.size() + v.size();
  NcPoly out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != u.size()) continue;
    std::vector<Letter> letters;
    std::size_t i = 0, j = 0, exponent = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (mask >> pos & 1) {
        letters.push_back(u[i++]);
        exponent += j;
      } else {
        letters.push_back(v[j++]);
      }
    }
    out.add(Word(u.alphabet(), std::move(letters)), QPoly::monomial(1, exponent));
  }
  return out;
}

// Classical shuffle multiplicities.
std::map<Word, Integer> classical_shuffle(const Word& u, const Word& v) {
  std::map<Word, Integer> out;
  if (u.empty()) {
    out[v] = 1;
    return out;
  }
  if (v.empty()) {
    out[u] = 1;
    return out;
  }
  for (const auto& [w, c] : classical_shuffle(u.prefix(u.size() - 1), v)) {
    Word x = w;
    x.push_back(u[u.size() - 1]);
    out[x] += c;
  }
  for (const auto& [w, c] : classical_shuffle(u, v.prefix(v.size() - 1))) {
    Word x = w;
    x.push_back(v[v.size() - 1]);
    out[x] += c;
  }
  return out;
}

QPoly cfl_sum(const Word& f, const Word& g, const Word& h, const AlphaRule& rule) {
  QPoly total;
  const NcPoly product = qinfiltrate(f, g, rule);
  for (const auto& [w, c] : product.terms()) total += c * qbinom(h, w);
  return total;
}

}  // namespace

TEST(NcPoly, Basics) {
  NcPoly s = NcPoly::monomial(W("01"), P("q+1"));
  s.add(W("01"), P("-q-1"));
  EXPECT_TRUE(s.is_zero());
  s.add(W("1"), P("2"));
  EXPECT_EQ(s.coefficient(W("1")), P("2"));
  EXPECT_TRUE(s.coefficient(W("0")).is_zero());
  EXPECT_EQ((s + s).coefficient(W("1")), P("4"));
  EXPECT_TRUE((s - s).is_zero());
}

TEST(NcPoly, TextRoundTrip) {
  const NcPoly s = S({{"", "q^2+1"}, {"10", "3*q"}, {"0", "1"}});
  EXPECT_EQ(to_string(s), "\"\" : q^2+1\n0 : 1\n10 : 3*q\n");
  EXPECT_EQ(parse_ncpoly(to_string(s), bin), s);
  EXPECT_EQ(to_string(NcPoly{}), "");
  EXPECT_THROW(parse_ncpoly("01 q", bin), ParseError);
  for (const auto& u : words_up_to(bin, 3)) {
    for (const auto& v : words_up_to(bin, 3)) {
      const NcPoly product = qinfiltrate(u, v, AlphaRule::suffix_length());
      ASSERT_EQ(parse_ncpoly(to_string(product), bin), product);
    }
  }
}

TEST(QShuffle, KnownValues) {
  EXPECT_EQ(to_string(qshuffle(W("010"), W("0"))), "0010 : q^3+q^2\n0100 : q+1\n");
  EXPECT_EQ(qshuffle(W("010"), W("00")),
            S({{"01000", "1+q+q^2"}, {"00100", "q^2+2*q^3+q^4"}, {"00010", "q^4+q^5+q^6"}}));
  EXPECT_EQ(qshuffle(W("0110"), Word(bin)), NcPoly::monomial(W("0110")));
  EXPECT_EQ(qshuffle(Word(bin), W("0110")), NcPoly::monomial(W("0110")));
  EXPECT_THROW(qshuffle(W("0"), W("0", tern)), AlphabetMismatch);
}

TEST(QShuffle, Bilinear) {
  EXPECT_EQ(qshuffle_series(NcPoly::monomial(W("010")), NcPoly::monomial(W("0"))), qshuffle(W("010"), W("0")));
  EXPECT_TRUE(qshuffle_series(S({{"01", "q"}}), NcPoly{}).is_zero());
  const NcPoly sum = S({{"0", "1"}, {"1", "1"}});
  EXPECT_EQ(qshuffle_series(sum, NcPoly::monomial(W("0"))), qshuffle(W("0"), W("0")) + qshuffle(W("1"), W("0")));
  EXPECT_EQ(qshuffle_series(sum, NcPoly::monomial(W("0"))), S({{"00", "q+1"}, {"01", "q"}, {"10", "1"}}));
}

TEST(QShuffle, PositionOracle) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (const auto& u : words_of_length(bin, k)) {
        for (const auto& v : words_of_length(bin, n - k)) {
          ASSERT_EQ(qshuffle(u, v), shuffle_by_positions(u, v)) << u << " " << v;
        }
      }
    }
  }
}

TEST(QShuffle, DegenerationAtOne) {
  for (const auto& u : words_up_to(bin, 4)) {
    for (const auto& v : words_up_to(bin, 4)) {
      const NcPoly product = qshuffle(u, v);
      const auto classical = classical_shuffle(u, v);
      ASSERT_EQ(product.size(), classical.size());
      for (const auto& [w, c] : classical) ASSERT_EQ(product.coefficient(w).evaluate(1), c) << u << " " << v;
      for (const auto& [w, c] : product.terms()) ASSERT_EQ(w.size(), u.size() + v.size());
    }
  }
}

TEST(QShuffle, Associativity) {
  const auto report = check_shuffle_assoc(9);
  EXPECT_TRUE(report.passed) << report.counterexample;
  EXPECT_GT(report.cases, 40000u);
}

TEST(QShuffle, Reciprocity) {
  const auto report = check_reciprocity(4);
  EXPECT_TRUE(report.passed) << report.counterexample;
  EXPECT_EQ(report.cases, 31u * 31u);
}

TEST(QShuffle, CoefficientAgainstQBinom) {
  const auto a = shuffle_coefficient_vs_qbinom(W("0"), W("010"), 3);
  EXPECT_EQ(a.lhs, P("1+q^2"));
  EXPECT_EQ(a.rhs, P("1+q^2"));
  const auto b = shuffle_coefficient_vs_qbinom(W("0110"), W("0110"), 4);
  EXPECT_EQ(b.lhs, QPoly::one());
  EXPECT_TRUE(b.equal());
  EXPECT_TRUE(shuffle_coefficient_vs_qbinom(W("01"), W("0100110"), 7).equal());
  EXPECT_THROW(shuffle_coefficient_vs_qbinom(W("01"), W("0100110"), 6), PreconditionError);
  for (const auto& w : words_up_to(bin, 5)) {
    for (const auto& u : words_up_to(bin, 3)) ASSERT_TRUE(shuffle_coefficient_vs_qbinom(u, w, 5).equal()) << u << w;
  }
}

TEST(QInfiltration, KnownValues) {
  EXPECT_EQ(to_string(qinfiltrate(W("010"), W("0"), AlphaRule::suffix_length())),
            "010 : q^3+q\n0010 : q^3+q^2\n0100 : q+1\n");
  EXPECT_EQ(qinfiltrate(W("0110"), Word(bin), AlphaRule::suffix_length()), NcPoly::monomial(W("0110")));
  EXPECT_EQ(qinfiltrate(Word(bin), W("01"), AlphaRule::constant_one()), NcPoly::monomial(W("01")));
}

// The constant rule, applied literally to the recursion, gives q + q^3 on 010.
TEST(QInfiltration, ConstantRuleOn010) {
  const NcPoly product = qinfiltrate(W("010"), W("0"), AlphaRule::constant_one());
  EXPECT_EQ(product.coefficient(W("0100")), P("q+1"));
  EXPECT_EQ(product.coefficient(W("0010")), P("q^3+q^2"));
  EXPECT_EQ(product.coefficient(W("010")), P("q^3+q"));
}

TEST(QInfiltration, CustomRule) {
  const auto custom = AlphaRule::custom([](const Word&, const Word& vb) { return vb.size(); });
  for (const auto& u : words_up_to(bin, 3)) {
    for (const auto& v : words_up_to(bin, 3)) {
      ASSERT_EQ(qinfiltrate(u, v, custom), qinfiltrate(u, v, AlphaRule::suffix_length()));
    }
  }
  const auto seen = std::make_shared<std::vector<std::pair<std::string, std::string>>>();
  const auto spy = AlphaRule::custom([seen](const Word& a, const Word& b) {
    seen->emplace_back(a.str(), b.str());
    return std::size_t{0};
  });
  qinfiltrate(W("0"), W("0"), spy);
  ASSERT_EQ(seen->size(), 1u);
  EXPECT_EQ(seen->front(), std::make_pair(std::string("0"), std::string("0")));
}

TEST(QInfiltration, SeriesBilinear) {
  const auto rule = AlphaRule::suffix_length();
  const NcPoly s = S({{"0", "q"}, {"1", "1"}});
  NcPoly expected;
  const NcPoly zero_zero = qinfiltrate(W("0"), W("0"), rule);
  for (const auto& [w, c] : zero_zero.terms()) expected.add(w, c.shifted(1));
  expected += qinfiltrate(W("1"), W("0"), rule);
  EXPECT_EQ(qinfiltrate_series(s, NcPoly::monomial(W("0")), rule), expected);
}

TEST(QInfiltration, Decomposition) {
  for (const auto& rule : {AlphaRule::constant_one(), AlphaRule::suffix_length()}) {
    const auto split = infiltration_shuffle_decomposition(W("010"), W("0"), rule);
    EXPECT_TRUE(split.top_difference.is_zero());
    EXPECT_EQ(split.remainder.size(), 1u);
    const auto single = infiltration_shuffle_decomposition(W("0"), W("0"), rule);
    EXPECT_EQ(single.remainder, NcPoly::monomial(W("0"), QPoly::monomial(1, rule(W("0"), W("0")))));
    EXPECT_TRUE(infiltration_shuffle_decomposition(W("01", tern), W("2", tern), rule).remainder.is_zero());
  }
  EXPECT_EQ(infiltration_shuffle_decomposition(W("010"), W("0"), AlphaRule::suffix_length()).remainder,
            S({{"010", "q^3+q"}}));

  for (const auto& u : words_up_to(tern, 3)) {
    for (const auto& v : words_up_to(tern, 3)) {
      const auto split = infiltration_shuffle_decomposition(u, v, AlphaRule::suffix_length());
      ASSERT_TRUE(split.top_difference.is_zero());
      bool shared = false;
      for (Letter a : u.letters()) {
        for (Letter b : v.letters()) shared = shared || a == b;
      }
      ASSERT_EQ(split.remainder.is_zero(), !shared) << u << " " << v;
      for (const auto& [w, c] : split.remainder.terms()) ASSERT_LT(w.size(), u.size() + v.size());
    }
  }
}

TEST(QInfiltration, NotAssociative) {
  const Word f = W("01"), g = W("0"), h = W("01");
  for (const auto& rule : {AlphaRule::constant_one(), AlphaRule::suffix_length()}) {
    const NcPoly left = qinfiltrate_series(qinfiltrate(f, g, rule), NcPoly::monomial(h), rule);
    const NcPoly right = qinfiltrate_series(NcPoly::monomial(f), qinfiltrate(g, h, rule), rule);
    const QPoly l = left.coefficient(W("01")), r = right.coefficient(W("01"));
    EXPECT_NE(l, r);
    const std::size_t a00 = rule(W("0"), W("0")), a0101 = rule(W("01"), W("01"));
    EXPECT_EQ(l, QPoly::monomial(1, 1 + 2 * a00 + a0101));
    EXPECT_EQ(r, QPoly::monomial(1, 2 * a00 + a0101));
  }
}

TEST(QInfiltration, ChenFoxLyndonFails) {
  const Word h = W("01010"), f = W("010"), g = W("1");
  const QPoly product = qbinom(h, f) * qbinom(h, g);
  EXPECT_EQ(to_string(product), "q^9+2*q^7+2*q^5+2*q^3+q");
  for (const auto& rule : {AlphaRule::constant_one(), AlphaRule::suffix_length()}) {
    const QPoly sum = cfl_sum(f, g, h, rule);
    EXPECT_NE(sum, product);
    bool consecutive = false;
    for (std::size_t i = 0; i + 1 < sum.coeffs().size(); ++i) {
      consecutive = consecutive || (sum.coeffs()[i] != 0 && sum.coeffs()[i + 1] != 0);
    }
    EXPECT_TRUE(consecutive) << to_string(sum);
  }
  EXPECT_EQ(cfl_sum(f, g, h, AlphaRule::suffix_length()), P("q^8+q^6+3*q^4+2*q^3+q^2"));
}

TEST(Diagonal, Examples) {
  EXPECT_EQ(diagonal_coefficient(W("010"), W("0"), DiagonalOrder::uv), P("q+q^3"));
  EXPECT_EQ(diagonal_coefficient(W("0110"), Word(bin), DiagonalOrder::uv), QPoly::one());
  EXPECT_EQ(diagonal_coefficient(W("0110"), Word(bin), DiagonalOrder::vu), QPoly::one());
  EXPECT_EQ(diagonal_coefficient(W("0110"), W("01"), DiagonalOrder::uv), qbinom(W("0110"), W("01")).shifted(3));
  EXPECT_THROW(diagonal_coefficient(W("0"), W("01"), DiagonalOrder::uv), PreconditionError);
}

TEST(Diagonal, ClosedForms) {
  for (const auto& u : words_up_to(bin, 6)) {
    for (const auto& v : words_up_to(bin, u.size())) {
      const std::size_t k = v.size();
      const QPoly base = qbinom(u, v);
      ASSERT_EQ(diagonal_coefficient(u, v, DiagonalOrder::uv), base.shifted(k * (k + 1) / 2)) << u << " " << v;
      ASSERT_EQ(diagonal_coefficient(u, v, DiagonalOrder::vu),
                base.reversed(k * (u.size() - k)).shifted(k * (k + 1) / 2))
          << u << " " << v;
    }
  }
}
