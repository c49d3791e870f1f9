#pragma once

/*
 * Finitely supported noncommutative polynomials N[q]<A*> with the q-shuffle
 * and the q-infiltration family.
 */

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "qwords/qpoly.hpp"
#include "qwords/words.hpp"

namespace qwords {

/// Map from words to polynomial coefficients. No word maps to zero; terms are
/// kept in shortlex order.
class NcPoly {
 public:
  using Terms = std::map<Word, QPoly>;

  NcPoly() = default;
  /// The monomial c.w.
  static NcPoly monomial(const Word& w, const QPoly& c = QPoly::one());

  void add(const Word& w, const QPoly& c);
  /// <s, w>; zero when w is outside the support.
  QPoly coefficient(const Word& w) const;
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Terms whose word has length exactly n.
  NcPoly restricted_to_length(std::size_t n) const;

  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  Terms terms_;
};

/// One line per support word, `<word> : <polynomial>`, shortlex order. The
/// empty word is written `""`; the zero series is the empty string.
std::string to_string(const NcPoly& s);
std::ostream& operator<<(std::ostream& os, const NcPoly& s);
NcPoly parse_ncpoly(std::string_view text, const Alphabet& alphabet);

/// Exponent map alpha(ua, vb) of the merging term of the q-infiltration. It
/// is evaluated on the non-empty prefixes peeled by the recursion.
class AlphaRule {
 public:
  enum class Kind { constant_one, suffix_length, custom };
  using Function = std::function<std::size_t(const Word&, const Word&)>;

  /// alpha = 1.
  static AlphaRule constant_one() { return AlphaRule(Kind::constant_one, {}); }
  /// alpha(ua, vb) = |vb|, the rule of the distinguished q-infiltration.
  static AlphaRule suffix_length() { return AlphaRule(Kind::suffix_length, {}); }
  /// Any pure function of the two arguments.
  static AlphaRule custom(Function f) { return AlphaRule(Kind::custom, std::move(f)); }

  Kind kind() const noexcept { return kind_; }
  std::size_t operator()(const Word& ua, const Word& vb) const;

 private:
  AlphaRule(Kind kind, Function f) : kind_(kind), f_(std::move(f)) {}
  Kind kind_;
  Function f_;
};

/// u q-shuffle v:  ua * vb = q^|vb| (u * vb) a + (ua * v) b,  u * e = e * u = u.
NcPoly qshuffle(const Word& u, const Word& v);
/// Bilinear extension to polynomials.
NcPoly qshuffle_series(const NcPoly& s, const NcPoly& t);

/// (sum over x in A^{<=truncation} of <x q-shuffle u, w>, qbin(w, u)), A the
/// alphabet of w. Requires truncation >= |w|.
PolyPair shuffle_coefficient_vs_qbinom(const Word& u, const Word& w, std::size_t truncation);

/// u q-infiltrate v:  ua ^ vb = q^|vb| (u ^ vb) a + (ua ^ v) b
///                              + q^alpha(ua,vb) [a = b] (u ^ v) a.
NcPoly qinfiltrate(const Word& u, const Word& v, const AlphaRule& alpha);
/// Bilinear extension to polynomials.
NcPoly qinfiltrate_series(const NcPoly& s, const NcPoly& t, const AlphaRule& alpha);

struct InfiltrationSplit {
  /// (u ^ v restricted to length |u|+|v|) - (u q-shuffle v); always zero.
  NcPoly top_difference;
  /// P_{u,v} = u ^ v - u q-shuffle v.
  NcPoly remainder;
};
InfiltrationSplit infiltration_shuffle_decomposition(const Word& u, const Word& v, const AlphaRule& alpha);

enum class DiagonalOrder { uv, vu };
/// <u ^ v, u> (uv) or <v ^ u, u> (vu) for the suffix-length rule; requires |u| >= |v|.
QPoly diagonal_coefficient(const Word& u, const Word& v, DiagonalOrder order);

}  // namespace qwords
