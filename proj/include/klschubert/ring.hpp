#pragma once

// Scalar backends for the twisted group algebra.
//
// ExactRing      exact FieldElement arithmetic.
// SampledRing    the values of a scalar at every point of the W-orbit of one
//                random point (t, e^{alpha_i}) modulo the prime 2^61 - 1.
//                The Weyl action permutes the orbit, so all operations of
//                the algebra survive specialization.  Used for fast
//                probabilistic checking.

#include <array>
#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "klschubert/field.hpp"
#include "klschubert/weyl.hpp"

namespace klschubert {

enum class Theory { multiplicative, hyperbolic };

inline const char* theory_name(Theory th) { return th == Theory::multiplicative ? "m" : "h"; }

template <class R>
concept ScalarRing = requires(const R& r, const typename R::value_type& a, ElemId w, const LatticeVector& v) {
  { r.group() } -> std::same_as<const WeylGroup&>;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.integer(std::int64_t{}) } -> std::same_as<typename R::value_type>;
  { r.t_power(0) } -> std::same_as<typename R::value_type>;
  { r.exponential(v) } -> std::same_as<typename R::value_type>;
  { r.act(w, a) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.is_hecke_scalar(a) } -> std::same_as<bool>;
  { a + a } -> std::same_as<typename R::value_type>;
  { a - a } -> std::same_as<typename R::value_type>;
  { a * a } -> std::same_as<typename R::value_type>;
  { a / a } -> std::same_as<typename R::value_type>;
  { -a } -> std::same_as<typename R::value_type>;
  { a == a } -> std::same_as<bool>;
};

class ExactRing {
 public:
  using value_type = FieldElement;
  static constexpr bool is_exact = true;

  explicit ExactRing(const WeylGroup& G) : G_(&G) {}

  const WeylGroup& group() const { return *G_; }
  int rank() const { return G_->rank(); }
  value_type zero() const { return {}; }
  value_type one() const { return value_type(1); }
  value_type integer(std::int64_t c) const { return value_type(c); }
  value_type t_power(int e) const { return FieldElement::t_power(e); }
  value_type exponential(const LatticeVector& v) const { return FieldElement::exponential(v); }
  value_type act(ElemId w, const value_type& a) const {
    if (w == G_->identity()) return a;
    return a.map_lattice(rank(), [&](const LatticeVector& v) { return G_->act(w, v); });
  }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  /// Membership in the coefficient ring Z[t, t^-1].
  bool is_hecke_scalar(const value_type& a) const { return a.is_laurent_in_t(); }

 private:
  const WeylGroup* G_;
};

/// Arithmetic modulo 2^61 - 1.
namespace modp {
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  return add(lo, hi);
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t inv(std::uint64_t a) {
  if (a == 0) throw DivisionByZero();
  return pow(a, kPrime - 2);
}
inline std::uint64_t from_int(std::int64_t c) {
  const std::uint64_t m = static_cast<std::uint64_t>(c < 0 ? -(c % static_cast<std::int64_t>(kPrime)) : c % static_cast<std::int64_t>(kPrime));
  return c < 0 ? sub(0, m) : m;
}
}  // namespace modp

/// Values of a scalar along the orbit: entry v holds (v . a)(p).
class SampledValue {
 public:
  SampledValue() = default;
  explicit SampledValue(std::vector<std::uint64_t> v) : v_(std::move(v)) {}

  const std::vector<std::uint64_t>& values() const { return v_; }
  bool is_zero() const {
    for (auto x : v_)
      if (x) return false;
    return true;
  }

  friend SampledValue operator+(const SampledValue& a, const SampledValue& b) { return zip(a, b, modp::add); }
  friend SampledValue operator-(const SampledValue& a, const SampledValue& b) { return zip(a, b, modp::sub); }
  friend SampledValue operator*(const SampledValue& a, const SampledValue& b) {
    if (a.v_.empty() || b.v_.empty()) return {};
    return zip(a, b, modp::mul);
  }
  friend SampledValue operator/(const SampledValue& a, const SampledValue& b) {
    if (b.v_.empty()) throw DivisionByZero();
    std::vector<std::uint64_t> r(b.v_.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (b.v_[i] == 0) throw DivisionByZero();
      r[i] = modp::mul(a.v_.empty() ? 0 : a.v_[i], modp::inv(b.v_[i]));
    }
    return SampledValue(std::move(r));
  }
  SampledValue operator-() const { return SampledValue() - *this; }
  SampledValue& operator+=(const SampledValue& b) { return *this = *this + b; }
  SampledValue& operator-=(const SampledValue& b) { return *this = *this - b; }
  SampledValue& operator*=(const SampledValue& b) { return *this = *this * b; }
  SampledValue& operator/=(const SampledValue& b) { return *this = *this / b; }
  friend bool operator==(const SampledValue& a, const SampledValue& b) { return (a - b).is_zero(); }

 private:
  template <class Op>
  static SampledValue zip(const SampledValue& a, const SampledValue& b, Op op) {
    const std::size_t n = std::max(a.v_.size(), b.v_.size());
    std::vector<std::uint64_t> r(n);
    for (std::size_t i = 0; i < n; ++i)
      r[i] = op(a.v_.empty() ? 0 : a.v_[i], b.v_.empty() ? 0 : b.v_[i]);
    return SampledValue(std::move(r));
  }
  std::vector<std::uint64_t> v_;  // empty means zero
};

class SampledRing {
 public:
  using value_type = SampledValue;
  static constexpr bool is_exact = false;

  SampledRing(const WeylGroup& G, std::uint64_t seed) : G_(&G) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> d(2, modp::kPrime - 2);
    t_ = d(rng);
    e_.resize(static_cast<std::size_t>(G.rank()));
    for (auto& x : e_) x = d(rng);
  }

  const WeylGroup& group() const { return *G_; }
  int rank() const { return G_->rank(); }
  std::uint64_t t_value() const { return t_; }
  value_type zero() const { return SampledValue(std::vector<std::uint64_t>(G_->size(), 0)); }
  value_type one() const { return integer(1); }
  value_type integer(std::int64_t c) const {
    return SampledValue(std::vector<std::uint64_t>(G_->size(), modp::from_int(c)));
  }
  value_type t_power(int e) const {
    std::uint64_t x = e >= 0 ? modp::pow(t_, static_cast<std::uint64_t>(e)) : modp::inv(modp::pow(t_, static_cast<std::uint64_t>(-e)));
    return SampledValue(std::vector<std::uint64_t>(G_->size(), x));
  }
  value_type exponential(const LatticeVector& lambda) const {
    std::vector<std::uint64_t> r(G_->size());
    for (ElemId v = 0; v < G_->size(); ++v) r[v] = point_value(G_->act(v, lambda));
    return SampledValue(std::move(r));
  }
  /// (w.a) sampled: entry v is (v.(w.a))(p) = ((vw).a)(p).
  value_type act(ElemId w, const value_type& a) const {
    if (a.values().empty()) return a;
    std::vector<std::uint64_t> r(G_->size());
    for (ElemId v = 0; v < G_->size(); ++v) r[v] = a.values()[G_->mul(v, w)];
    return SampledValue(std::move(r));
  }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  /// W-invariance along the orbit; a necessary condition for lying in Z[t^{+-1}].
  bool is_hecke_scalar(const value_type& a) const {
    const auto& v = a.values();
    for (auto x : v)
      if (x != v.front()) return false;
    return true;
  }

  /// Specializes an exact value; throws DivisionByZero if a denominator vanishes.
  value_type sample(const FieldElement& a) const {
    std::vector<std::uint64_t> r(G_->size());
    for (ElemId v = 0; v < G_->size(); ++v) {
      auto eval = [&](const LaurentPolynomial& p) {
        std::uint64_t s = 0;
        for (const auto& tm : p.terms()) {
          LatticeVector lam = G_->act(v, tm.key.lattice_vector(rank()));
          std::uint64_t x = modp::mul(modp::from_int(tm.coeff), point_value(lam));
          const int te = tm.key.t_exp();
          x = modp::mul(x, te >= 0 ? modp::pow(t_, static_cast<std::uint64_t>(te)) : modp::inv(modp::pow(t_, static_cast<std::uint64_t>(-te))));
          s = modp::add(s, x);
        }
        return s;
      };
      std::uint64_t num = eval(a.cofactor());
      std::uint64_t den = modp::from_int(a.integer_denominator());
      a.for_each_factor([&](const LaurentPolynomial& f, int e) {
        const std::uint64_t x = eval(f);
        for (int i = 0; i < std::abs(e); ++i) {
          if (e > 0) num = modp::mul(num, x);
          else den = modp::mul(den, x);
        }
      });
      r[v] = modp::mul(num, modp::inv(den));
    }
    return SampledValue(std::move(r));
  }

 private:
  std::uint64_t point_value(const LatticeVector& lam) const {
    std::uint64_t x = 1;
    for (int i = 0; i < rank(); ++i) {
      const int c = lam[i];
      const std::uint64_t b = c >= 0 ? e_[static_cast<std::size_t>(i)] : modp::inv(e_[static_cast<std::size_t>(i)]);
      x = modp::mul(x, modp::pow(b, static_cast<std::uint64_t>(c >= 0 ? c : -c)));
    }
    return x;
  }

  const WeylGroup* G_;
  std::uint64_t t_ = 0;
  std::vector<std::uint64_t> e_;
};

static_assert(ScalarRing<ExactRing>);
static_assert(ScalarRing<SampledRing>);

// ---------------------------------------------------------------------------
// Distinguished scalars.

/// mu = t + t^-1.
template <ScalarRing R>
typename R::value_type mu(const R& r) {
  return r.t_power(1) + r.t_power(-1);
}

/// mu^k for any integer k.
template <ScalarRing R>
typename R::value_type mu_power(const R& r, int k) {
  typename R::value_type m = mu(r), acc = r.one();
  for (int i = 0; i < std::abs(k); ++i) acc = acc * m;
  return k >= 0 ? acc : r.one() / acc;
}

/// Multiplicative first Chern class x^m_lambda = 1 - e^{-lambda}.
template <ScalarRing R>
typename R::value_type chern_mult(const R& r, const LatticeVector& lambda) {
  return r.one() - r.exponential(-lambda);
}

/// Hyperbolic first Chern class, realized as (t^2+1)(1-e^{-lambda})/(t^2-e^{-lambda}),
/// the preimage of x^m_lambda under g(x) = (1-t^2)x/(x-(t^2+1)).
template <ScalarRing R>
typename R::value_type embed_hyperbolic_chern(const R& r, const LatticeVector& lambda) {
  if (lambda.is_zero()) return r.zero();
  const auto t2 = r.t_power(2);
  return (t2 + r.one()) * chern_mult(r, lambda) / (t2 - r.exponential(-lambda));
}

template <ScalarRing R>
typename R::value_type chern(const R& r, Theory th, const LatticeVector& lambda) {
  return th == Theory::multiplicative ? chern_mult(r, lambda) : embed_hyperbolic_chern(r, lambda);
}

/// The formal group laws F_m(x,y) = x+y-xy and F_h(x,y) = (x+y-xy)/(1-mu^-2 xy).
template <ScalarRing R>
typename R::value_type fgl_mult(const R&, const typename R::value_type& x, const typename R::value_type& y) {
  return x + y - x * y;
}
template <ScalarRing R>
typename R::value_type fgl_hyp(const R& r, const typename R::value_type& x, const typename R::value_type& y) {
  return (x + y - x * y) / (r.one() - mu_power(r, -2) * x * y);
}

/// g(x) = (1 - t^2) x / (x - (t^2 + 1)).
template <ScalarRing R>
typename R::value_type hyperbolic_to_mult(const R& r, const typename R::value_type& x) {
  const auto t2 = r.t_power(2);
  return (r.one() - t2) * x / (x - (t2 + r.one()));
}

/// x_J = prod over negative roots of Sigma_J of x_alpha.
template <ScalarRing R>
typename R::value_type x_parabolic(const R& r, Theory th, const ParabolicSubset& J) {
  auto acc = r.one();
  for (const auto& b : r.group().positive_roots(J)) acc = acc * chern(r, th, -b);
  return acc;
}
template <ScalarRing R>
typename R::value_type x_full(const R& r, Theory th) {
  return x_parabolic(r, th, ParabolicSubset::full(r.rank()));
}
/// x_{Pi/J} = x_Pi / x_J.
template <ScalarRing R>
typename R::value_type x_relative(const R& r, Theory th, const ParabolicSubset& J) {
  auto acc = r.one();
  const auto inside = r.group().positive_roots(J);
  for (const auto& b : r.group().positive_roots())
    if (std::find(inside.begin(), inside.end(), b) == inside.end()) acc = acc * chern(r, th, -b);
  return acc;
}

/// prod_{alpha > 0} (t - t^-1 e^{-alpha}).
template <ScalarRing R>
typename R::value_type kdual_scalar(const R& r) {
  auto acc = r.one();
  for (const auto& b : r.group().positive_roots()) acc = acc * (r.t_power(1) - r.t_power(-1) * r.exponential(-b));
  return acc;
}

}  // namespace klschubert
