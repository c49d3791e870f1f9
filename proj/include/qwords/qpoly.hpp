#pragma once

/*
 * Exact univariate polynomials in q.
 *
 * QPoly carries unbounded integer coefficients (the home of every q-binomial
 * value). ResidueRing / ResiduePoly model the finite ring F_p[q]/<M> in which
 * those values are reduced when building congruences and automata.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qwords/error.hpp"

namespace qwords {

using Integer = boost::multiprecision::cpp_int;

/// Polynomial in q with integer coefficients, stored densely by ascending
/// exponent. The zero polynomial is the empty vector; otherwise the last
/// coefficient is non-zero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> coeffs);
  QPoly(std::initializer_list<long long> coeffs);

  static QPoly one() { return monomial(1, 0); }
  static QPoly constant(const Integer& c) { return monomial(c, 0); }
  static QPoly monomial(const Integer& c, std::size_t exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// [q^e]P; zero outside the stored range.
  Integer coefficient(std::size_t e) const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  Integer evaluate(const Integer& x) const;

  /// q^top * P(1/q). Requires deg P <= top.
  QPoly reversed(std::size_t top) const;

  /// Multiply by q^k in place.
  QPoly& shift(std::size_t k);
  QPoly shifted(std::size_t k) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  QPoly& operator*=(const Integer& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Integer& c) { return a *= c; }
  friend QPoly operator*(const Integer& c, QPoly a) { return a *= c; }
  friend QPoly operator-(QPoly a);

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void canonicalize();
  std::vector<Integer> coeffs_;
};

QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_scale(const QPoly& a, const Integer& c);

/// Largest power of q dividing P; nullopt stands for +infinity (P = 0).
std::optional<std::size_t> valuation(const QPoly& p);

/// Gaussian binomial [m choose r]_q via the q-Pascal recurrence; zero when r > m.
QPoly gauss_binomial(std::size_t m, std::size_t r);

/// Text form: terms in descending exponent joined by '+', e.g. `q^10+2*q^2+q+1`.
std::string to_string(const QPoly& p);
std::ostream& operator<<(std::ostream& os, const QPoly& p);
/// Inverse of to_string; also accepts whitespace, unordered and repeated terms,
/// and '-' separators.
QPoly parse_qpoly(std::string_view text);

// ---------------------------------------------------------------------------
// Finite residue rings F_p[q]/<M>

using Residue = std::uint32_t;

class PrimeModulus {
 public:
  /// Throws PreconditionError unless p is prime.
  explicit PrimeModulus(std::uint32_t p);
  std::uint32_t value() const noexcept { return p_; }
  Residue inverse(Residue a) const;
  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

class ResiduePoly;

/// The ring K = F_p[q]/<M> of order p^d, d = deg M >= 1.
/// Cheap to copy; copies share the same immutable state.
class ResidueRing {
 public:
  /// Coefficients of `modulus` are reduced mod p first; the result must have
  /// degree >= 1.
  ResidueRing(PrimeModulus p, const QPoly& modulus);

  PrimeModulus prime() const noexcept { return impl_->p; }
  std::uint32_t p() const noexcept { return impl_->p.value(); }
  /// M with coefficients in [0, p).
  const QPoly& modulus() const noexcept { return impl_->modulus_poly; }
  std::size_t degree() const noexcept { return impl_->modulus.size() - 1; }
  /// val(M); also the index of q in K.
  std::size_t modulus_valuation() const noexcept { return impl_->valuation; }
  /// p^d.
  Integer order() const;

  ResiduePoly zero() const;
  ResiduePoly one() const;
  ResiduePoly q() const;
  /// Interpret `coeffs` (ascending, any length) as an element of F_p[q] and reduce.
  ResiduePoly element(std::span<const std::uint64_t> coeffs) const;
  /// Every element of K, ordered by the base-p integer c_0 + c_1 p + ...
  std::vector<ResiduePoly> elements() const;

  friend bool operator==(const ResidueRing& a, const ResidueRing& b);

 private:
  friend class ResiduePoly;
  struct Impl {
    PrimeModulus p;
    std::vector<Residue> modulus;  // length d+1
    QPoly modulus_poly;
    Residue lead_inverse;
    std::size_t valuation;
  };
  // Reduces `c` modulo M in place; afterwards c.size() == d.
  void reduce_in_place(std::vector<std::uint64_t>& c) const;

  std::shared_ptr<const Impl> impl_;
};

/// An element of F_p[q]/<M>: exactly d coefficients in [0, p), ascending.
class ResiduePoly {
 public:
  const ResidueRing& ring() const noexcept { return ring_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;
  /// Representative of degree < d with coefficients in [0, p).
  QPoly lift() const;
  /// R(1) mod p.
  Residue evaluate_at_one() const;

  ResiduePoly times_q_power(std::size_t k) const;
  ResiduePoly pow(std::size_t n) const;

  friend ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b);
  friend ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b);
  friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
  friend bool operator==(const ResiduePoly& a, const ResiduePoly& b);

 private:
  friend class ResidueRing;
  ResiduePoly(ResidueRing ring, std::vector<Residue> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

  ResidueRing ring_;
  std::vector<Residue> coeffs_;
};

std::string to_string(const ResiduePoly& r);
std::ostream& operator<<(std::ostream& os, const ResiduePoly& r);

std::optional<std::size_t> valuation(const ResiduePoly& r);

/// Remainder of (P mod p) divided by M in F_p[q].
ResiduePoly reduce(const QPoly& p, const ResidueRing& ring);

struct FpDivision {
  QPoly quotient;
  QPoly remainder;
};
/// Euclidean division in F_p[q]; both outputs have coefficients in [0, p).
FpDivision divide_mod_p(const QPoly& dividend, const QPoly& divisor, PrimeModulus p);

struct IndexPeriod {
  std::size_t index = 0;
  std::size_t period = 1;
  friend bool operator==(const IndexPeriod&, const IndexPeriod&) = default;
};

/// Least i >= 0, k >= 1 with x^i = x^(i+k).
IndexPeriod index_period(const ResiduePoly& x);
bool is_unit(const ResiduePoly& x);

struct QMinusOnePower {
  Residue scale;         // a
  std::size_t exponent;  // d
};
/// Some(a, d) iff M = a (q - 1)^d over F_p.
std::optional<QMinusOnePower> is_power_of_q_minus_one(const ResidueRing& ring);

struct ResiduePolyHash {
  std::size_t operator()(const ResiduePoly& r) const noexcept;
};

}  // namespace qwords
