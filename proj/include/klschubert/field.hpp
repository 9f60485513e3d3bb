#pragma once

// Exact elements of Q = Frac(Z[t^{+-1}][Lambda]).
//
// A value is stored as   (cofactor / d) * prod_i f_i^{e_i}
// where the cofactor is an integer Laurent polynomial, d > 0 is an integer
// coprime to the cofactor content, and the f_i are normalized primitive
// polynomials (no monomial content, positive leading coefficient, content 1)
// with nonzero integer exponents.  Products keep everything factored; sums
// pull out the common factor multiset and expand the rest into the
// cofactor.  Equality is decided by exact subtraction.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klschubert/polynomial.hpp"

namespace klschubert {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in the fraction field") {}
};

namespace detail {

/// A normalized non-monomial polynomial, shared between values.
struct Factor {
  std::shared_ptr<const LaurentPolynomial> poly;
  std::size_t hash = 0;
  int exponent = 0;

  const LaurentPolynomial& p() const { return *poly; }
  static bool same(const Factor& a, const Factor& b) {
    return a.hash == b.hash && (a.poly == b.poly || *a.poly == *b.poly);
  }
  static bool before(const Factor& a, const Factor& b) {
    if (a.hash != b.hash) return a.hash < b.hash;
    return *a.poly < *b.poly;
  }
};

/// Splits p = unit * content * primitive, where unit = sign * monomial.
struct Normalized {
  LaurentPolynomial unit;   // +-monomial times integer content
  std::optional<LaurentPolynomial> primitive;  // nullopt when p is a monomial
};

inline Normalized normalize(const LaurentPolynomial& p) {
  if (p.is_zero()) throw DivisionByZero();
  if (p.is_monomial()) return {p, std::nullopt};
  const MonomialKey shift = p.min_exponents();
  std::int64_t c = p.content();
  if (p.leading().coeff < 0) c = -c;
  LaurentPolynomial prim = p.times_term(shift.inverse(), 1).divide_integer(c);
  return {LaurentPolynomial::monomial(shift, c), std::move(prim)};
}

inline std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace detail

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::int64_t c) : cof_(c) {}  // NOLINT(google-explicit-constructor)

  /// The element p; non-monomial polynomials are kept as a single factor.
  static FieldElement from_polynomial(const LaurentPolynomial& p) {
    FieldElement r;
    if (p.is_zero()) return r;
    auto n = detail::normalize(p);
    r.cof_ = std::move(n.unit);
    if (n.primitive) r.factors_.push_back(make_factor(std::move(*n.primitive), 1));
    return r;
  }
  /// num / den, with den != 0.
  static FieldElement fraction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    return from_polynomial(num) / from_polynomial(den);
  }
  static FieldElement t_power(int e) { return from_polynomial(LaurentPolynomial::t_power(e)); }
  static FieldElement exponential(const LatticeVector& v) {
    return from_polynomial(LaurentPolynomial::exponential(v));
  }

  bool is_zero() const { return cof_.is_zero(); }
  bool is_one() const { return factors_.empty() && d_ == 1 && cof_ == LaurentPolynomial(1); }

  /// Expanded numerator and denominator (denominator includes the integer d).
  LaurentPolynomial numerator() const {
    LaurentPolynomial n = cof_;
    for (const auto& f : factors_)
      if (f.exponent > 0) n *= f.p().pow(f.exponent);
    return n;
  }
  LaurentPolynomial denominator() const {
    LaurentPolynomial n(d_);
    for (const auto& f : factors_)
      if (f.exponent < 0) n *= f.p().pow(-f.exponent);
    return n;
  }
  /// True iff the value lies in Z[t, t^-1] (used for Hecke-subalgebra tests).
  bool is_laurent_in_t() const {
    if (d_ != 1) return false;
    for (const auto& f : factors_)
      if (f.exponent < 0) return false;
    return numerator().is_t_only();
  }
  std::size_t factor_count() const { return factors_.size(); }

  FieldElement operator-() const {
    FieldElement r(*this);
    r.cof_ = -r.cof_;
    return r;
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FieldElement r;
    r.cof_ = a.cof_ * b.cof_;
    r.d_ = detail::checked_mul(a.d_, b.d_);
    r.factors_ = merge_factors(a.factors_, b.factors_, 1);
    r.reduce();
    return r;
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  FieldElement inverse() const {
    if (is_zero()) throw DivisionByZero();
    FieldElement r;
    r.factors_ = factors_;
    for (auto& f : r.factors_) f.exponent = -f.exponent;
    auto n = detail::normalize(cof_);
    // unit = sign * c * monomial
    const Term& u = n.unit.terms()[0];
    const std::int64_t c = u.coeff;
    r.cof_ = LaurentPolynomial::monomial(u.key.inverse(), c < 0 ? -d_ : d_);
    r.d_ = detail::abs64(c);
    if (n.primitive) {
      // Try to split the new denominator against factors we already carry.
      LaurentPolynomial rest = std::move(*n.primitive);
      std::vector<detail::Factor> split;
      for (const auto& f : factors_) {
        while (!rest.is_monomial()) {
          auto q = rest.divide_exact(f.p());
          if (!q) break;
          rest = std::move(*q);
          split.push_back({f.poly, f.hash, -1});
        }
      }
      if (!rest.is_monomial()) {
        auto m = detail::normalize(rest);
        r.cof_ = r.cof_.times_term(m.unit.terms()[0].key.inverse(), 1);
        // m.unit content is +-1 here since rest is primitive.
        if (m.unit.terms()[0].coeff < 0) r.cof_ = -r.cof_;
        if (m.primitive) split.push_back(make_factor(std::move(*m.primitive), -1));
      } else {
        const Term& t = rest.terms()[0];
        r.cof_ = r.cof_.times_term(t.key.inverse(), 1);
        if (t.coeff < 0) r.cof_ = -r.cof_;
      }
      std::sort(split.begin(), split.end(), detail::Factor::before);
      r.factors_ = merge_factors(r.factors_, split, 1);
    }
    r.reduce_integers();
    return r;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b, 1); }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return add(a, b, -1); }
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

  /// Semantic equality.
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.d_ == b.d_ && a.cof_ == b.cof_ && a.factors_.size() == b.factors_.size()) {
      bool same = true;
      for (std::size_t i = 0; i < a.factors_.size() && same; ++i)
        same = detail::Factor::same(a.factors_[i], b.factors_[i]) && a.factors_[i].exponent == b.factors_[i].exponent;
      if (same) return true;
    }
    return (a - b).is_zero();
  }

  FieldElement pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r(1), base(*this);
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  /// Applies a lattice automorphism (t fixed) as a field automorphism.
  template <class Map>
  FieldElement map_lattice(int rank, Map&& map) const {
    if (is_zero()) return {};
    FieldElement r;
    r.d_ = d_;
    r.cof_ = cof_.map_lattice(rank, map);
    std::vector<detail::Factor> fs;
    fs.reserve(factors_.size());
    for (const auto& f : factors_) {
      auto n = detail::normalize(f.p().map_lattice(rank, map));
      // unit is +-monomial (content 1); unit^e moves into the cofactor
      const Term& u = n.unit.terms()[0];
      MonomialKey k = f.exponent > 0 ? u.key : u.key.inverse();
      MonomialKey acc;
      for (int i = 0; i < std::abs(f.exponent); ++i) acc = acc * k;
      r.cof_ = r.cof_.times_term(acc, (u.coeff < 0 && (f.exponent % 2 != 0)) ? -1 : 1);
      fs.push_back(make_factor(std::move(*n.primitive), f.exponent));
    }
    std::sort(fs.begin(), fs.end(), detail::Factor::before);
    r.factors_ = merge_factors({}, fs, 1);
    return r;
  }

  const LaurentPolynomial& cofactor() const { return cof_; }
  std::int64_t integer_denominator() const { return d_; }
  /// Visits (polynomial, exponent) for every stored factor.
  template <class Fn>
  void for_each_factor(Fn&& fn) const {
    for (const auto& f : factors_) fn(f.p(), f.exponent);
  }

  std::string to_string(int rank) const {
    LaurentPolynomial n = numerator();
    LaurentPolynomial d = denominator();
    if (d == LaurentPolynomial(1)) return n.to_string(rank);
    if (d.trailing().coeff < 0) {
      n = -n;
      d = -d;
    }
    return "(" + n.to_string(rank) + ")/(" + d.to_string(rank) + ")";
  }

 private:
  static detail::Factor make_factor(LaurentPolynomial p, int e) {
    const std::size_t h = p.hash();
    return {std::make_shared<const LaurentPolynomial>(std::move(p)), h, e};
  }

  /// Merge sorted factor lists, adding sign*exponents of b; drops zeros.
  static std::vector<detail::Factor> merge_factors(const std::vector<detail::Factor>& a,
                                                   const std::vector<detail::Factor>& b, int sign) {
    std::vector<detail::Factor> r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && detail::Factor::before(a[i], b[j]))) {
        r.push_back(a[i++]);
      } else if (i == a.size() || detail::Factor::before(b[j], a[i])) {
        detail::Factor f = b[j++];
        f.exponent *= sign;
        if (!r.empty() && detail::Factor::same(r.back(), f)) r.back().exponent += f.exponent;
        else r.push_back(f);
      } else {
        detail::Factor f = a[i++];
        f.exponent += sign * b[j++].exponent;
        r.push_back(f);
      }
      if (r.back().exponent == 0) r.pop_back();
    }
    return r;
  }

  static FieldElement add(const FieldElement& a, const FieldElement& b, int sign) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return sign > 0 ? b : -b;
    // Common factor g_f = min(e_a, e_b) over the union of factors.
    std::vector<detail::Factor> common;
    std::vector<detail::Factor> rest_a, rest_b;  // positive leftovers
    std::size_t i = 0, j = 0;
    const auto& fa = a.factors_;
    const auto& fb = b.factors_;
    auto take = [&](const detail::Factor& f, int ea, int eb) {
      const int g = std::min(ea, eb);
      if (g != 0) common.push_back({f.poly, f.hash, g});
      if (ea - g > 0) rest_a.push_back({f.poly, f.hash, ea - g});
      if (eb - g > 0) rest_b.push_back({f.poly, f.hash, eb - g});
    };
    while (i < fa.size() || j < fb.size()) {
      if (j == fb.size() || (i < fa.size() && detail::Factor::before(fa[i], fb[j]))) {
        take(fa[i], fa[i].exponent, 0);
        ++i;
      } else if (i == fa.size() || detail::Factor::before(fb[j], fa[i])) {
        take(fb[j], 0, fb[j].exponent);
        ++j;
      } else {
        take(fa[i], fa[i].exponent, fb[j].exponent);
        ++i;
        ++j;
      }
    }
    const std::int64_t l = std::lcm(a.d_, b.d_);
    LaurentPolynomial na = a.cof_.times_term(MonomialKey{}, l / a.d_);
    for (const auto& f : rest_a) na *= f.p().pow(f.exponent);
    LaurentPolynomial nb = b.cof_.times_term(MonomialKey{}, l / b.d_);
    for (const auto& f : rest_b) nb *= f.p().pow(f.exponent);
    FieldElement r;
    r.cof_ = sign > 0 ? na + nb : na - nb;
    if (r.cof_.is_zero()) return {};
    r.d_ = l;
    r.factors_ = std::move(common);
    r.reduce();
    return r;
  }

  void reduce_integers() {
    if (cof_.is_zero()) {
      factors_.clear();
      d_ = 1;
      return;
    }
    const std::int64_t g = std::gcd(cof_.content(), d_);
    if (g > 1) {
      cof_ = cof_.divide_integer(g);
      d_ /= g;
    }
  }

  /// Cancels denominator factors dividing the cofactor, and integer content.
  void reduce() {
    reduce_integers();
    if (cof_.is_zero() || cof_.is_monomial()) return;
    for (auto& f : factors_) {
      while (f.exponent < 0) {
        auto q = cof_.divide_exact(f.p());
        if (!q) break;
        cof_ = std::move(*q);
        ++f.exponent;
        if (cof_.is_monomial()) break;
      }
      if (cof_.is_monomial()) break;
    }
    factors_.erase(std::remove_if(factors_.begin(), factors_.end(), [](const detail::Factor& f) { return f.exponent == 0; }),
                   factors_.end());
  }

  LaurentPolynomial cof_;
  std::int64_t d_ = 1;
  std::vector<detail::Factor> factors_;  // sorted by Factor::before
};

}  // namespace klschubert
