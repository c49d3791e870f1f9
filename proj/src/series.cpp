#include "qwords/series.hpp"

#include <sstream>

namespace qwords {

// ---------------------------------------------------------------------------
// NcPoly

NcPoly NcPoly::monomial(const Word& w, const QPoly& c) {
  NcPoly s;
  s.add(w, c);
  return s;
}

void NcPoly::add(const Word& w, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPoly NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QPoly{} : it->second;
}

NcPoly NcPoly::restricted_to_length(std::size_t n) const {
  NcPoly out;
  for (const auto& [w, c] : terms_) {
    if (w.size() == n) out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

std::string to_string(const NcPoly& s) {
  std::ostringstream os;
  for (const auto& [w, c] : s.terms()) os << w << " : " << to_string(c) << '\n';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NcPoly& s) { return os << to_string(s); }

NcPoly parse_ncpoly(std::string_view text, const Alphabet& alphabet) {
  NcPoly out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<word> : <polynomial>' in '" + line + "'");
    std::string word = line.substr(0, colon);
    const auto first = word.find_first_not_of(" \t");
    const auto last = word.find_last_not_of(" \t");
    word = first == std::string::npos ? std::string() : word.substr(first, last - first + 1);
    if (word == "\"\"") word.clear();
    out.add(Word(alphabet, word), parse_qpoly(line.substr(colon + 1)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products

std::size_t AlphaRule::operator()(const Word& ua, const Word& vb) const {
  switch (kind_) {
    case Kind::constant_one:
      return 1;
    case Kind::suffix_length:
      return vb.size();
    case Kind::custom:
      return f_(ua, vb);
  }
  return 0;
}

namespace {

/// acc += q^k (s . a): every word of s gets the letter a appended.
void add_appended(NcPoly& acc, const NcPoly& s, Letter a, std::size_t k) {
  for (const auto& [w, c] : s.terms()) {
    Word extended = w;
    extended.push_back(a);
    acc.add(extended, c.shifted(k));
  }
}

/// Shared bottom-up evaluation of the shuffle/infiltration recurrences over
/// prefix pairs (u_1..u_i, v_1..v_j). `merge` is null for the shuffle.
NcPoly product_table(const Word& u, const Word& v, const AlphaRule* merge) {
  require_same_alphabet(u, v);
  const std::size_t n = u.size(), m = v.size();
  std::vector<NcPoly> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = NcPoly::monomial(v.prefix(j));
  for (std::size_t i = 1; i <= n; ++i) {
    const Letter a = u[i - 1];
    const Word ua = u.prefix(i);
    cur[0] = NcPoly::monomial(ua);
    for (std::size_t j = 1; j <= m; ++j) {
      const Letter b = v[j - 1];
      NcPoly cell;
      add_appended(cell, prev[j], a, j);     // q^|vb| (u * vb) a
      add_appended(cell, cur[j - 1], b, 0);  // (ua * v) b
      if (merge != nullptr && a == b) {
        add_appended(cell, prev[j - 1], a, (*merge)(ua, v.prefix(j)));
      }
      cur[j] = std::move(cell);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace

NcPoly qshuffle(const Word& u, const Word& v) { return product_table(u, v, nullptr); }

NcPoly qshuffle_series(const NcPoly& s, const NcPoly& t) {
  NcPoly out;
  for (const auto& [u, cu] : s.terms()) {
    for (const auto& [v, cv] : t.terms()) {
      const QPoly factor = cu * cv;
      const NcPoly product = qshuffle(u, v);
      for (const auto& [w, c] : product.terms()) out.add(w, factor * c);
    }
  }
  return out;
}

PolyPair shuffle_coefficient_vs_qbinom(const Word& u, const Word& w, std::size_t truncation) {
  require_same_alphabet(u, w);
  if (truncation < w.size()) throw PreconditionError("truncation must be at least |w|");
  PolyPair out;
  for (const auto& x : words_up_to(w.alphabet(), truncation)) {
    if (x.size() + u.size() < w.size()) continue;
    out.lhs += qshuffle(x, u).coefficient(w);
  }
  out.rhs = qbinom(w, u);
  return out;
}

NcPoly qinfiltrate(const Word& u, const Word& v, const AlphaRule& alpha) { return product_table(u, v, &alpha); }

NcPoly qinfiltrate_series(const NcPoly& s, const NcPoly& t, const AlphaRule& alpha) {
  NcPoly out;
  for (const auto& [u, cu] : s.terms()) {
    for (const auto& [v, cv] : t.terms()) {
      const QPoly factor = cu * cv;
      const NcPoly product = qinfiltrate(u, v, alpha);
      for (const auto& [w, c] : product.terms()) out.add(w, factor * c);
    }
  }
  return out;
}

InfiltrationSplit infiltration_shuffle_decomposition(const Word& u, const Word& v, const AlphaRule& alpha) {
  const NcPoly infiltration = qinfiltrate(u, v, alpha);
  const NcPoly shuffle = qshuffle(u, v);
  return InfiltrationSplit{infiltration.restricted_to_length(u.size() + v.size()) - shuffle,
                           infiltration - shuffle};
}

QPoly diagonal_coefficient(const Word& u, const Word& v, DiagonalOrder order) {
  require_same_alphabet(u, v);
  if (u.size() < v.size()) throw PreconditionError("diagonal_coefficient requires |u| >= |v|");
  const auto rule = AlphaRule::suffix_length();
  const NcPoly product = order == DiagonalOrder::uv ? qinfiltrate(u, v, rule) : qinfiltrate(v, u, rule);
  return product.coefficient(u);
}

}  // namespace qwords
