#include "qwords/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <unordered_map>

namespace qwords {

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

QPoly QPoly::monomial(const Integer& c, std::size_t exponent) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(exponent + 1, Integer(0));
    p.coeffs_.back() = c;
  }
  return p;
}

void QPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> QPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer QPoly::coefficient(std::size_t e) const {
  return e < coeffs_.size() ? coeffs_[e] : Integer(0);
}

Integer QPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::reversed(std::size_t top) const {
  if (is_zero()) return {};
  if (coeffs_.size() > top + 1) {
    throw PreconditionError("reversed: degree exceeds the reversal degree");
  }
  std::vector<Integer> out(top + 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[top - i] = coeffs_[i];
  return QPoly(std::move(out));
}

QPoly& QPoly::shift(std::size_t k) {
  if (k != 0 && !coeffs_.empty()) coeffs_.insert(coeffs_.begin(), k, Integer(0));
  return *this;
}

QPoly QPoly::shifted(std::size_t k) const {
  QPoly out = *this;
  out.shift(k);
  return out;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  canonicalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  canonicalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly& QPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
  } else {
    for (auto& x : coeffs_) x *= c;
  }
  return *this;
}

QPoly operator-(QPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

QPoly poly_add(const QPoly& a, const QPoly& b) { return a + b; }
QPoly poly_mul(const QPoly& a, const QPoly& b) { return a * b; }
QPoly poly_scale(const QPoly& a, const Integer& c) { return a * c; }

std::optional<std::size_t> valuation(const QPoly& p) {
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) return i;
  }
  return std::nullopt;
}

QPoly gauss_binomial(std::size_t m, std::size_t r) {
  if (r > m) return {};
  // row[l] = [k choose l]_q, advanced from k to k+1 by the q-Pascal identity
  //   [k+1 choose l+1] = [k choose l+1] q^(l+1) + [k choose l].
  std::vector<QPoly> row(r + 1);
  row[0] = QPoly::one();
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = std::min(r, k + 1); l >= 1; --l) {
      row[l].shift(l);
      row[l] += row[l - 1];
    }
  }
  return row[r];
}

// ---------------------------------------------------------------------------
// Text format

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const Integer magnitude = negative ? Integer(-c[i]) : c[i];
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (i == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) {
      out += magnitude.str();
      out += '*';
    }
    out += 'q';
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << to_string(p); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
  }

  QPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<Integer> acc;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, exponent] = term();
      if (negative) coef = -coef;
      if (acc.size() <= exponent) acc.resize(exponent + 1, Integer(0));
      acc[exponent] += coef;
    }
    return QPoly(std::move(acc));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed polynomial '" + s_ + "': " + what);
  }

  std::optional<std::string> digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    return s_.substr(start, pos_ - start);
  }

  std::pair<Integer, std::size_t> term() {
    Integer coef = 1;
    const auto c = digits();
    if (c) coef = Integer(*c);
    if (pos_ < s_.size() && s_[pos_] == '*') {
      if (!c) fail("'*' without a coefficient");
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] != 'q') fail("expected 'q' after '*'");
    }
    if (pos_ < s_.size() && s_[pos_] == 'q') {
      ++pos_;
      std::size_t exponent = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        const auto e = digits();
        if (!e) fail("expected exponent after '^'");
        if (e->size() > 6) fail("exponent too large");
        exponent = std::stoul(*e);
      }
      return {coef, exponent};
    }
    if (!c) fail("expected a term");
    return {coef, 0};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_qpoly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// PrimeModulus

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
}

Residue PrimeModulus::inverse(Residue a) const {
  a %= p_;
  if (a == 0) throw PreconditionError("0 has no inverse mod p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

// ---------------------------------------------------------------------------
// ResidueRing

namespace {

Residue reduce_integer(const Integer& c, std::uint32_t p) {
  Integer r = c % p;
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

}  // namespace

ResidueRing::ResidueRing(PrimeModulus p, const QPoly& modulus) {
  std::vector<Residue> m;
  for (const auto& c : modulus.coeffs()) m.push_back(reduce_integer(c, p.value()));
  while (!m.empty() && m.back() == 0) m.pop_back();
  if (m.size() < 2) {
    throw PreconditionError("modulus must have degree >= 1 over F_" + std::to_string(p.value()));
  }
  std::vector<Integer> as_integers(m.begin(), m.end());
  std::size_t val = 0;
  while (m[val] == 0) ++val;
  const Residue lead_inverse = p.inverse(m.back());
  impl_ = std::make_shared<const Impl>(
      Impl{p, std::move(m), QPoly(std::move(as_integers)), lead_inverse, val});
}

Integer ResidueRing::order() const {
  Integer n = 1;
  for (std::size_t i = 0; i < degree(); ++i) n *= p();
  return n;
}

bool operator==(const ResidueRing& a, const ResidueRing& b) {
  return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
}

void ResidueRing::reduce_in_place(std::vector<std::uint64_t>& c) const {
  const std::uint64_t p = impl_->p.value();
  const auto& m = impl_->modulus;
  const std::size_t d = degree();
  for (auto& x : c) x %= p;
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    const std::uint64_t factor = c[i] * impl_->lead_inverse % p;
    for (std::size_t j = 0; j <= d; ++j) {
      const std::uint64_t sub = factor * m[j] % p;
      auto& slot = c[i - d + j];
      slot = (slot + p - sub) % p;
    }
  }
  c.resize(d, 0);
}

ResiduePoly ResidueRing::element(std::span<const std::uint64_t> coeffs) const {
  std::vector<std::uint64_t> c(coeffs.begin(), coeffs.end());
  reduce_in_place(c);
  return ResiduePoly(*this, std::vector<Residue>(c.begin(), c.end()));
}

ResiduePoly ResidueRing::zero() const { return ResiduePoly(*this, std::vector<Residue>(degree(), 0)); }

ResiduePoly ResidueRing::one() const {
  const std::uint64_t c = 1;
  return element(std::span(&c, 1));
}

ResiduePoly ResidueRing::q() const {
  const std::uint64_t c[2] = {0, 1};
  return element(c);
}

std::vector<ResiduePoly> ResidueRing::elements() const {
  const std::size_t d = degree();
  std::vector<ResiduePoly> out;
  std::vector<Residue> digits(d, 0);
  while (true) {
    out.push_back(ResiduePoly(*this, digits));
    std::size_t i = 0;
    while (i < d && ++digits[i] == p()) digits[i++] = 0;
    if (i == d) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// ResiduePoly

bool ResiduePoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

QPoly ResiduePoly::lift() const { return QPoly(std::vector<Integer>(coeffs_.begin(), coeffs_.end())); }

Residue ResiduePoly::evaluate_at_one() const {
  std::uint64_t s = 0;
  for (Residue c : coeffs_) s = (s + c) % ring_.p();
  return static_cast<Residue>(s);
}

ResiduePoly ResiduePoly::times_q_power(std::size_t k) const {
  const std::uint64_t p = ring_.p();
  const auto& m = ring_.impl_->modulus;
  const std::size_t d = coeffs_.size();
  std::vector<Residue> c = coeffs_;
  for (std::size_t step = 0; step < k; ++step) {
    const std::uint64_t top = c[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) c[i] = c[i - 1];
    c[0] = 0;
    if (top != 0) {
      const std::uint64_t factor = top * ring_.impl_->lead_inverse % p;
      for (std::size_t j = 0; j < d; ++j) {
        c[j] = static_cast<Residue>((c[j] + p - factor * m[j] % p) % p);
      }
    }
  }
  return ResiduePoly(ring_, std::move(c));
}

ResiduePoly ResiduePoly::pow(std::size_t n) const {
  ResiduePoly result = ring_.one();
  ResiduePoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

namespace {

void require_same_ring(const ResiduePoly& a, const ResiduePoly& b) {
  if (!(a.ring() == b.ring())) throw PreconditionError("residues belong to different rings");
}

}  // namespace

ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b) {
  require_same_ring(a, b);
  std::vector<Residue> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs_[i] + b.coeffs_[i]) % a.ring_.p();
  return ResiduePoly(a.ring_, std::move(c));
}

ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b) {
  require_same_ring(a, b);
  const Residue p = a.ring_.p();
  std::vector<Residue> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs_[i] + p - b.coeffs_[i]) % p;
  return ResiduePoly(a.ring_, std::move(c));
}

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
  require_same_ring(a, b);
  const std::uint64_t p = a.ring_.p();
  const std::size_t d = a.coeffs_.size();
  std::vector<std::uint64_t> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % p;
    }
  }
  return a.ring_.element(prod);
}

bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
  return a.coeffs_ == b.coeffs_ && a.ring_ == b.ring_;
}

std::string to_string(const ResiduePoly& r) { return to_string(r.lift()); }
std::ostream& operator<<(std::ostream& os, const ResiduePoly& r) { return os << to_string(r); }

std::optional<std::size_t> valuation(const ResiduePoly& r) {
  const auto c = r.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) return i;
  }
  return std::nullopt;
}

ResiduePoly reduce(const QPoly& p, const ResidueRing& ring) {
  std::vector<std::uint64_t> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(reduce_integer(x, ring.p()));
  return ring.element(c);
}

FpDivision divide_mod_p(const QPoly& dividend, const QPoly& divisor, PrimeModulus prime) {
  const std::uint64_t p = prime.value();
  std::vector<std::uint64_t> rem, den;
  for (const auto& c : dividend.coeffs()) rem.push_back(reduce_integer(c, prime.value()));
  for (const auto& c : divisor.coeffs()) den.push_back(reduce_integer(c, prime.value()));
  while (!den.empty() && den.back() == 0) den.pop_back();
  if (den.empty()) throw PreconditionError("division by zero polynomial mod p");
  const std::size_t dd = den.size() - 1;
  const std::uint64_t lead_inv = prime.inverse(static_cast<Residue>(den.back()));
  std::vector<Integer> quotient(rem.size() > dd ? rem.size() - dd : 0, Integer(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const std::uint64_t factor = rem[i] * lead_inv % p;
    quotient[i - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) {
      auto& slot = rem[i - dd + j];
      slot = (slot + p - factor * den[j] % p) % p;
    }
  }
  if (rem.size() > dd) rem.resize(dd);
  return FpDivision{QPoly(std::move(quotient)), QPoly(std::vector<Integer>(rem.begin(), rem.end()))};
}

IndexPeriod index_period(const ResiduePoly& x) {
  std::unordered_map<ResiduePoly, std::size_t, ResiduePolyHash> seen;
  ResiduePoly power = x.ring().one();
  for (std::size_t n = 0;; ++n) {
    auto [it, inserted] = seen.emplace(power, n);
    if (!inserted) return IndexPeriod{it->second, n - it->second};
    power = power * x;
  }
}

bool is_unit(const ResiduePoly& x) { return index_period(x).index == 0; }

std::optional<QMinusOnePower> is_power_of_q_minus_one(const ResidueRing& ring) {
  const QPoly q_minus_one{static_cast<long long>(ring.p()) - 1, 1};
  QPoly current = ring.modulus();
  std::size_t exponent = 0;
  while (current.degree().value_or(0) > 0) {
    auto [quotient, remainder] = divide_mod_p(current, q_minus_one, ring.prime());
    if (!remainder.is_zero()) return std::nullopt;
    current = std::move(quotient);
    ++exponent;
  }
  return QMinusOnePower{static_cast<Residue>(current.coefficient(0)), exponent};
}

std::size_t ResiduePolyHash::operator()(const ResiduePoly& r) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Residue c : r.coeffs()) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

}  // namespace qwords
