#include "qwords/quotient.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace qwords {

CongruenceSpec::CongruenceSpec(Word u, ResidueRing ring) : u_(std::move(u)), ring_(std::move(ring)) {
  if (u_.empty()) throw PreconditionError("the congruence word u must be non-empty");
  for (const auto& f : qwords::factors(u_)) {
    if (!f.empty()) factors_.push_back(f);
  }
  // Suffixes v of factors av; the empty v is handled separately.
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Word& f = factors_[i];
    if (f.size() < 2) continue;
    const Word v = f.substr(1);
    const auto it = std::find(factors_.begin(), factors_.end(), v);
    const auto idx = static_cast<std::size_t>(it - factors_.begin());
    if (std::find(saturation_factors_.begin(), saturation_factors_.end(), idx) == saturation_factors_.end()) {
      saturation_factors_.push_back(idx);
    }
  }
  std::sort(saturation_factors_.begin(), saturation_factors_.end());
  q_ip_ = index_period(ring_.q());
}

std::size_t CongruenceSpec::canonical_length(std::size_t n) const noexcept {
  if (n < q_ip_.index) return n;
  return q_ip_.index + (n - q_ip_.index) % q_ip_.period;
}

bool CongruenceSpec::saturated(const std::vector<ResiduePoly>& residues, std::size_t length) const {
  const std::size_t target = ring_.modulus_valuation();
  // v = epsilon: qbin(w, epsilon) = 1 has valuation 0.
  if (length < target) return false;
  for (std::size_t idx : saturation_factors_) {
    const auto val = valuation(residues[idx]);
    // A residue of valuation >= val(M) (or zero) means the true valuation is too.
    if (!val || *val >= target) continue;
    if (*val + length < target + factors_[idx].size()) return false;
  }
  return true;
}

std::size_t ClassKeyHash::operator()(const ClassKey& k) const noexcept {
  std::size_t h = k.length.value * 2 + (k.length.saturated ? 1 : 0);
  ResiduePolyHash rh;
  for (const auto& r : k.residues) h = (h * 0x9e3779b97f4a7c15ull) ^ rh(r);
  return h;
}

namespace {

LengthTag make_tag(const CongruenceSpec& spec, const std::vector<ResiduePoly>& residues, std::size_t length) {
  if (spec.saturated(residues, length)) return LengthTag{true, spec.canonical_length(length)};
  return LengthTag{false, length};
}

}  // namespace

ClassKey class_key(const Word& w, const CongruenceSpec& spec) {
  if (!(w.alphabet() == spec.alphabet())) throw AlphabetMismatch("word and congruence use different alphabets");
  ClassKey key;
  key.residues.reserve(spec.factors().size());
  for (const auto& f : spec.factors()) key.residues.push_back(reduce(qbinom(w, f), spec.ring()));
  key.length = make_tag(spec, key.residues, w.size());
  return key;
}

bool binomially_equivalent(const Word& w1, const Word& w2, const CongruenceSpec& spec) {
  require_same_alphabet(w1, w2);
  for (const auto& f : spec.factors()) {
    if (!(reduce(qbinom(w1, f), spec.ring()) == reduce(qbinom(w2, f), spec.ring()))) return false;
  }
  return true;
}

namespace {

bool literally_saturated(const Word& w, const CongruenceSpec& spec) {
  const std::size_t target = spec.ring().modulus_valuation();
  for (const auto& f : factors(spec.u())) {
    if (f.empty()) continue;
    const Word v = f.substr(1);
    const auto val = valuation(qbinom(w, v));
    if (!val) continue;
    if (*val + w.size() < target + v.size()) return false;
  }
  return true;
}

}  // namespace

bool related(const Word& w1, const Word& w2, const CongruenceSpec& spec) {
  if (!binomially_equivalent(w1, w2, spec)) return false;
  const ResiduePoly q = spec.ring().q();
  if (!(q.pow(w1.size()) == q.pow(w2.size()))) return false;
  if (w1.size() == w2.size()) return true;
  return literally_saturated(w1, spec) && literally_saturated(w2, spec);
}

// ---------------------------------------------------------------------------
// Enumeration

class QuotientBuilder {
 public:
  explicit QuotientBuilder(const CongruenceSpec& spec) : spec_(spec) {
    const auto& fs = spec.factors();
    for (const auto& f : fs) {
      FactorShape shape;
      shape.length = f.size();
      shape.last = f[f.size() - 1];
      if (f.size() > 1) {
        const Word head = f.prefix(f.size() - 1);
        shape.head = static_cast<std::size_t>(std::find(fs.begin(), fs.end(), head) - fs.begin());
      }
      shapes_.push_back(shape);
    }
  }

  QuotientMonoid run(std::size_t max_length) {
    QuotientMonoid m(spec_);
    const std::size_t letters = spec_.alphabet().size();

    std::vector<ResiduePoly> start(shapes_.size(), spec_.ring().zero());
    State init{std::move(start), 0};
    add_class(m, init, Word(spec_.alphabet()));

    // Classes are appended in discovery order, which is shortlex order of
    // their representatives because letters are tried in increasing order.
    for (std::size_t c = 0; c < m.classes_.size(); ++c) {
      std::vector<std::size_t> row(letters);
      for (std::size_t a = 0; a < letters; ++a) {
        const auto letter = static_cast<Letter>(a);
        State next = step(states_[c], letter);
        ClassKey key{next.residues, make_tag(spec_, next.residues, next.length)};
        const auto it = m.index_.find(key);
        if (it != m.index_.end()) {
          row[a] = it->second;
          continue;
        }
        Word rep = m.classes_[c].representative;
        rep.push_back(letter);
        if (rep.size() > max_length) {
          throw Error("quotient enumeration exceeded the word-length guard of " + std::to_string(max_length));
        }
        row[a] = add_class(m, next, std::move(rep), std::move(key));
      }
      m.transitions_.push_back(std::move(row));
    }

    const std::size_t n = m.classes_.size();
    m.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t c = i;
        for (Letter a : m.classes_[j].representative.letters()) c = m.transitions_[c][a];
        m.table_[i * n + j] = c;
      }
    }
    return m;
  }

 private:
  struct FactorShape {
    std::size_t length = 0;
    Letter last = 0;
    std::optional<std::size_t> head;  // index of the factor minus its last letter
  };
  struct State {
    std::vector<ResiduePoly> residues;
    std::size_t length;
  };

  // qbin(wa, xb) = q^|xb| qbin(w, xb) + [a = b] qbin(w, x).
  State step(const State& s, Letter a) const {
    State out{{}, s.length + 1};
    out.residues.reserve(shapes_.size());
    for (std::size_t i = 0; i < shapes_.size(); ++i) {
      ResiduePoly r = s.residues[i].times_q_power(shapes_[i].length);
      if (shapes_[i].last == a) r = r + (shapes_[i].head ? s.residues[*shapes_[i].head] : spec_.ring().one());
      out.residues.push_back(std::move(r));
    }
    return out;
  }

  std::size_t add_class(QuotientMonoid& m, const State& s, Word rep) {
    ClassKey key{s.residues, make_tag(spec_, s.residues, s.length)};
    return add_class(m, s, std::move(rep), std::move(key));
  }

  std::size_t add_class(QuotientMonoid& m, const State& s, Word rep, ClassKey key) {
    const std::size_t idx = m.classes_.size();
    m.index_.emplace(key, idx);
    m.classes_.push_back(QuotientClass{std::move(key), std::move(rep)});
    states_.push_back(s);
    return idx;
  }

  const CongruenceSpec& spec_;
  std::vector<FactorShape> shapes_;
  std::vector<State> states_;
};

std::optional<std::size_t> QuotientMonoid::find(const ClassKey& key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t QuotientMonoid::class_of(const Word& w) const {
  if (!(w.alphabet() == spec_.alphabet())) throw AlphabetMismatch("word and quotient use different alphabets");
  std::size_t c = identity();
  for (Letter a : w.letters()) c = transition(c, a);
  return c;
}

Integer class_count_bound(const CongruenceSpec& spec) {
  const auto& ip = spec.q_index_period();
  Integer bound = boost::multiprecision::pow(spec.ring().order(), static_cast<unsigned>(spec.factors().size()));
  return bound * (ip.period + ip.index + spec.u().size() + spec.ring().modulus_valuation());
}

QuotientMonoid enumerate_quotient(const CongruenceSpec& spec, EnumerationOptions options) {
  std::size_t guard = options.max_length;
  if (guard == 0) {
    // Breadth-first depth is below the number of classes, hence below the bound.
    const Integer bound = class_count_bound(spec);
    const Integer cap = std::numeric_limits<std::size_t>::max();
    guard = bound > cap ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(bound);
  }
  return QuotientBuilder(spec).run(guard);
}

bool is_group(const QuotientMonoid& m) {
  const std::size_t n = m.size();
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t c = m.product(i, j);
      if (seen[c]) return false;
      seen[c] = 1;
    }
  }
  return true;
}

std::vector<std::optional<std::size_t>> element_orders(const QuotientMonoid& m) {
  const std::size_t n = m.size();
  std::vector<std::optional<std::size_t>> orders(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t power = x;
    for (std::size_t k = 1; k <= n; ++k) {
      if (power == m.identity()) {
        orders[x] = k;
        break;
      }
      power = m.product(power, x);
    }
  }
  return orders;
}

std::vector<bool> invertible_elements(const QuotientMonoid& m) {
  const std::size_t n = m.size();
  std::vector<bool> out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (m.product(x, y) == m.identity() && m.product(y, x) == m.identity()) {
        out[x] = true;
        break;
      }
    }
  }
  return out;
}

bool exponent_check(const QuotientMonoid& m) {
  const auto& spec = m.spec();
  if (!is_unit(spec.ring().q())) throw PreconditionError("exponent_check requires q to be a unit");
  const Integer exponent = spec.q_index_period().period *
                           boost::multiprecision::pow(Integer(spec.ring().p()), static_cast<unsigned>(spec.u().size()));
  for (const auto& order : element_orders(m)) {
    if (!order || exponent % *order != 0) return false;
  }
  return true;
}

std::string describe_class(const QuotientClass& c) {
  std::ostringstream os;
  os << c.representative << '\t';
  for (std::size_t i = 0; i < c.key.residues.size(); ++i) {
    if (i) os << ',';
    os << c.key.residues[i];
  }
  os << '\t' << (c.key.length.saturated ? "cyclic:" : "exact:") << c.key.length.value;
  return os.str();
}

}  // namespace qwords
