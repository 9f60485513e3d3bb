#pragma once

// Sparse multivariate Laurent polynomials over Z in the variables
// t, e^{alpha_1}, ..., e^{alpha_n}.  This is the group algebra R[Lambda]
// (R = Z[t, t^-1]) of the type-A root lattice written in simple-root
// coordinates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klschubert {

/// Largest rank supported by the packed exponent keys.
inline constexpr int kMaxRank = 6;

/// Integer vector in simple-root coordinates.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(int rank) : c_(static_cast<std::size_t>(rank), 0) {}
  LatticeVector(std::initializer_list<int> c) : c_(c) {}
  explicit LatticeVector(std::vector<int> c) : c_(std::move(c)) {}

  static LatticeVector simple_root(int rank, int i) {
    LatticeVector v(rank);
    v[i - 1] = 1;
    return v;
  }

  int rank() const { return static_cast<int>(c_.size()); }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
  }

  LatticeVector operator-() const {
    LatticeVector r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  LatticeVector& operator+=(const LatticeVector& o) {
    check_rank(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) { return *this += -o; }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '[';
    for (std::size_t i = 0; i < v.c_.size(); ++i) os << (i ? "," : "") << v.c_[i];
    return os << ']';
  }

 private:
  void check_rank(const LatticeVector& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("lattice vectors of different rank");
  }
  std::vector<int> c_;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

}  // namespace detail

/// Monomial exponent vector packed into 16-bit biased fields.  Field 0 holds
/// the t-exponent; lattice coordinate i sits in field kMaxRank - i, so the
/// unsigned order of keys is lexicographic in (lattice vector, t-exponent).
class MonomialKey {
 public:
  using Raw = unsigned __int128;
  static constexpr int kFieldBits = 16;
  static constexpr int kFields = kMaxRank + 1;
  static constexpr std::int64_t kBias = std::int64_t{1} << (kFieldBits - 1);

  constexpr MonomialKey() : raw_(bias_all()) {}

  static MonomialKey make(int t_exp, const LatticeVector& lattice) {
    if (lattice.rank() > kMaxRank) throw std::invalid_argument("rank exceeds kMaxRank");
    MonomialKey k;
    k.set_field(0, t_exp);
    for (int i = 0; i < lattice.rank(); ++i) k.set_field(kMaxRank - i, lattice[i]);
    return k;
  }
  static MonomialKey t_power(int t_exp) {
    MonomialKey k;
    k.set_field(0, t_exp);
    return k;
  }

  int field(int f) const {
    return static_cast<int>(static_cast<std::int64_t>((raw_ >> (kFieldBits * f)) & 0xFFFF) - kBias);
  }
  int t_exp() const { return field(0); }
  int lattice(int i) const { return field(kMaxRank - i); }
  LatticeVector lattice_vector(int rank) const {
    LatticeVector v(rank);
    for (int i = 0; i < rank; ++i) v[i] = lattice(i);
    return v;
  }
  bool is_one() const { return raw_ == bias_all(); }

  friend MonomialKey operator*(MonomialKey a, MonomialKey b) {
    MonomialKey r;
    r.raw_ = a.raw_ + b.raw_ - bias_all();
    return r;
  }
  MonomialKey inverse() const {
    MonomialKey r;
    r.raw_ = bias_all() + bias_all() - raw_;
    return r;
  }
  /// Componentwise a >= b.
  bool divisible_by(MonomialKey b) const {
    for (int f = 0; f < kFields; ++f)
      if (field(f) < b.field(f)) return false;
    return true;
  }
  static MonomialKey componentwise_min(MonomialKey a, MonomialKey b) {
    MonomialKey r;
    for (int f = 0; f < kFields; ++f) r.set_field(f, std::min(a.field(f), b.field(f)));
    return r;
  }
  static MonomialKey componentwise_max(MonomialKey a, MonomialKey b) {
    MonomialKey r;
    for (int f = 0; f < kFields; ++f) r.set_field(f, std::max(a.field(f), b.field(f)));
    return r;
  }

  Raw raw() const { return raw_; }
  friend bool operator==(MonomialKey a, MonomialKey b) { return a.raw_ == b.raw_; }
  friend bool operator<(MonomialKey a, MonomialKey b) { return a.raw_ < b.raw_; }

 private:
  static constexpr Raw bias_all() {
    Raw r = 0;
    for (int f = 0; f < kFields; ++f) r |= static_cast<Raw>(kBias) << (kFieldBits * f);
    return r;
  }
  void set_field(int f, int value) {
    if (value <= -kBias || value >= kBias) throw std::overflow_error("exponent out of range");
    const Raw mask = static_cast<Raw>(0xFFFF) << (kFieldBits * f);
    raw_ = (raw_ & ~mask) | (static_cast<Raw>(value + kBias) << (kFieldBits * f));
  }
  Raw raw_;
};

struct Term {
  MonomialKey key;
  std::int64_t coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Laurent polynomial in t only, the coefficient ring R = Z[t, t^-1].
struct LaurentT {
  int lo = 0;                        // exponent of coeffs[0]
  std::vector<std::int64_t> coeffs;  // dense, no trailing/leading zeros
  friend bool operator==(const LaurentT&, const LaurentT&) = default;
};

/// Element of R[Lambda]: sparse, terms sorted by key, no zero coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::int64_t c) {
    if (c != 0) terms_.push_back({MonomialKey{}, c});
  }
  static LaurentPolynomial monomial(MonomialKey k, std::int64_t c = 1) {
    LaurentPolynomial p;
    if (c != 0) p.terms_.push_back({k, c});
    return p;
  }
  static LaurentPolynomial t_power(int e, std::int64_t c = 1) { return monomial(MonomialKey::t_power(e), c); }
  static LaurentPolynomial exponential(const LatticeVector& v, std::int64_t c = 1) {
    return monomial(MonomialKey::make(0, v), c);
  }
  /// Builds from unsorted terms, combining duplicates.
  static LaurentPolynomial from_terms(std::vector<Term> terms) {
    LaurentPolynomial p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key.is_one()); }
  const Term& leading() const { return terms_.back(); }
  const Term& trailing() const { return terms_.front(); }

  /// True iff no e^lambda with lambda != 0 occurs.
  bool is_t_only() const {
    for (const auto& tm : terms_)
      for (int i = 0; i < kMaxRank; ++i)
        if (tm.key.lattice(i) != 0) return false;
    return true;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r(*this);
    for (auto& tm : r.terms_) tm.coeff = -tm.coeff;
    return r;
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return merge(a, b, 1);
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return merge(a, b, -1);
  }
  LaurentPolynomial& operator+=(const LaurentPolynomial& b) { return *this = *this + b; }
  LaurentPolynomial& operator-=(const LaurentPolynomial& b) { return *this = *this - b; }

  LaurentPolynomial times_term(MonomialKey k, std::int64_t c) const {
    LaurentPolynomial r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& tm : terms_) r.terms_.push_back({tm.key * k, detail::checked_mul(tm.coeff, c)});
    return r;  // multiplication by a monomial preserves the order
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.times_term(a.terms_[0].key, a.terms_[0].coeff);
    if (b.size() == 1) return a.times_term(b.terms_[0].key, b.terms_[0].coeff);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back({x.key * y.key, detail::checked_mul(x.coeff, y.coeff)});
    return from_terms(std::move(out));
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& b) { return *this = *this * b; }

  LaurentPolynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    LaurentPolynomial r(1), base(*this);
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  std::int64_t content() const {
    std::int64_t g = 0;
    for (const auto& tm : terms_) g = std::gcd(g, tm.coeff < 0 ? -tm.coeff : tm.coeff);
    return g;
  }
  LaurentPolynomial divide_integer(std::int64_t d) const {
    LaurentPolynomial r(*this);
    for (auto& tm : r.terms_) {
      if (tm.coeff % d != 0) throw std::domain_error("inexact integer division");
      tm.coeff /= d;
    }
    return r;
  }
  /// Componentwise minimum of all exponent vectors.
  MonomialKey min_exponents() const {
    MonomialKey m = terms_.front().key;
    for (const auto& tm : terms_) m = MonomialKey::componentwise_min(m, tm.key);
    return m;
  }
  MonomialKey max_exponents() const {
    MonomialKey m = terms_.front().key;
    for (const auto& tm : terms_) m = MonomialKey::componentwise_max(m, tm.key);
    return m;
  }

  /// Exact quotient this / divisor in the Laurent ring, or nullopt.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

  /// Applies a linear map to lattice exponents; t is fixed.
  template <class Map>
  LaurentPolynomial map_lattice(int rank, Map&& map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& tm : terms_) {
      LatticeVector v = map(tm.key.lattice_vector(rank));
      out.push_back({MonomialKey::make(tm.key.t_exp(), v), tm.coeff});
    }
    return from_terms(std::move(out));
  }

  /// Deterministic structural hash (independent of addresses).
  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    for (const auto& tm : terms_) {
      mix(static_cast<std::uint64_t>(tm.key.raw()));
      mix(static_cast<std::uint64_t>(tm.key.raw() >> 64));
      mix(static_cast<std::uint64_t>(tm.coeff));
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const Term& x, const Term& y) {
                                          if (!(x.key == y.key)) return x.key < y.key;
                                          return x.coeff < y.coeff;
                                        });
  }

  /// Groups terms by lattice exponent; the t-parts are the ScalarT coefficients.
  std::vector<std::pair<LatticeVector, LaurentT>> by_lattice(int rank) const;

  std::string to_string(int rank) const;

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      MonomialKey k = terms_[r].key;
      std::int64_t c = 0;
      while (r < terms_.size() && terms_[r].key == k) c = detail::checked_add(c, terms_[r++].coeff);
      if (c != 0) terms_[w++] = {k, c};
    }
    terms_.resize(w);
  }

  static LaurentPolynomial merge(const LaurentPolynomial& a, const LaurentPolynomial& b, int sign) {
    LaurentPolynomial r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].key < b.terms_[j].key)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].key < a.terms_[i].key) {
        r.terms_.push_back({b.terms_[j].key, sign * b.terms_[j].coeff});
        ++j;
      } else {
        std::int64_t c = detail::checked_add(a.terms_[i].coeff, sign * b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].key, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using GroupAlgebraElement = LaurentPolynomial;

inline std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPolynomial{};
  if (divisor.is_monomial()) {
    const Term& d = divisor.terms_[0];
    LaurentPolynomial q;
    q.terms_.reserve(terms_.size());
    for (const auto& tm : terms_) {
      if (tm.coeff % d.coeff != 0) return std::nullopt;
      q.terms_.push_back({tm.key * d.key.inverse(), tm.coeff / d.coeff});
    }
    return q;
  }
  // Shift both into the polynomial ring; the divisor shift has no variable
  // factors, so any Laurent quotient is a polynomial after the shift.
  const MonomialKey fshift = min_exponents().inverse();
  const MonomialKey gshift = divisor.min_exponents().inverse();
  LaurentPolynomial r = times_term(fshift, 1);
  const LaurentPolynomial g = divisor.times_term(gshift, 1);

  // Cheap rejections: per-variable degree and trailing term.
  if (!r.max_exponents().divisible_by(g.max_exponents())) return std::nullopt;
  if (!r.trailing().key.divisible_by(g.trailing().key) || r.trailing().coeff % g.trailing().coeff != 0)
    return std::nullopt;

  const Term lg = g.leading();
  std::vector<Term> quotient;
  std::map<MonomialKey, std::int64_t> rem;
  for (const auto& tm : r.terms_) rem.emplace_hint(rem.end(), tm.key, tm.coeff);
  while (!rem.empty()) {
    const auto [lk, lc] = *rem.rbegin();
    if (!lk.divisible_by(lg.key) || lc % lg.coeff != 0) return std::nullopt;
    const MonomialKey qk = lk * lg.key.inverse();
    const std::int64_t qc = lc / lg.coeff;
    quotient.push_back({qk, qc});
    for (const auto& tm : g.terms_) {
      auto [it, fresh] = rem.try_emplace(tm.key * qk, 0);
      it->second = detail::checked_add(it->second, -detail::checked_mul(tm.coeff, qc));
      if (it->second == 0) rem.erase(it);
    }
  }
  std::reverse(quotient.begin(), quotient.end());
  LaurentPolynomial q;
  q.terms_ = std::move(quotient);
  // undo shifts: this = q * divisor  =>  q_true = q * fshift^-1 * gshift
  return q.times_term(fshift.inverse() * gshift, 1);
}

inline std::vector<std::pair<LatticeVector, LaurentT>> LaurentPolynomial::by_lattice(int rank) const {
  std::vector<std::pair<LatticeVector, LaurentT>> out;
  for (std::size_t i = 0; i < terms_.size();) {
    LatticeVector v = terms_[i].key.lattice_vector(rank);
    std::size_t j = i;
    while (j < terms_.size() && terms_[j].key.lattice_vector(rank) == v) ++j;
    LaurentT s;
    s.lo = terms_[i].key.t_exp();
    const int hi = terms_[j - 1].key.t_exp();
    s.coeffs.assign(static_cast<std::size_t>(hi - s.lo + 1), 0);
    for (std::size_t k = i; k < j; ++k) s.coeffs[static_cast<std::size_t>(terms_[k].key.t_exp() - s.lo)] = terms_[k].coeff;
    out.emplace_back(std::move(v), std::move(s));
    i = j;
  }
  return out;
}

inline std::string LaurentPolynomial::to_string(int rank) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& tm : terms_) {
    std::int64_t c = tm.coeff;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    const int te = tm.key.t_exp();
    const LatticeVector v = tm.key.lattice_vector(rank);
    std::vector<std::string> parts;
    if (c != 1 || (te == 0 && v.is_zero())) parts.push_back(std::to_string(c));
    if (te == 1) parts.push_back("t");
    else if (te != 0) parts.push_back("t^" + std::to_string(te));
    if (!v.is_zero()) {
      std::ostringstream e;
      e << "e" << v;
      parts.push_back(e.str());
    }
    for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
  }
  return os.str();
}

}  // namespace klschubert
