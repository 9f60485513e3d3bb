#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include "klschubert/billey.hpp"
#include "klschubert/temperley_lieb.hpp"

namespace klschubert {

/// Everything tied to one rank: group, KL table, scalar ring and Hecke algebra.
template <ScalarRing R>
class Context {
 public:
  template <class... RingArgs>
  explicit Context(int rank, RingArgs&&... args)
      : group_(rank), kl_(group_), ring_(group_, std::forward<RingArgs>(args)...), hecke_(ring_, kl_), hyp_(hecke_), tl_(group_) {}
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const WeylGroup& group() const { return group_; }
  const KLTable& kl() const { return kl_; }
  const R& ring() const { return ring_; }
  const HeckeAlgebra<R>& hecke() const { return hecke_; }
  const HyperbolicClasses<R>& hyperbolic() const { return hyp_; }
  const TemperleyLieb& temperley_lieb() const { return tl_; }

  /// Rewriter for J-compatible words, built once per J.
  const DemazureRewriter& rewriter(const ParabolicSubset& J) const {
    std::lock_guard lk(mu_);
    auto it = rewriters_.find(J.indices());
    if (it == rewriters_.end()) it = rewriters_.emplace(J.indices(), std::make_unique<DemazureRewriter>(group_, J)).first;
    return *it->second;
  }

 private:
  WeylGroup group_;
  KLTable kl_;
  R ring_;
  HeckeAlgebra<R> hecke_;
  HyperbolicClasses<R> hyp_;
  TemperleyLieb tl_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, std::unique_ptr<DemazureRewriter>> rewriters_;
};

/// Human-readable scalar.
inline std::string describe(const ExactRing& r, const FieldElement& a) { return a.to_string(r.rank()); }
inline std::string describe(const SampledRing&, const SampledValue& a) {
  if (a.is_zero()) return "0";
  return "<sampled " + std::to_string(a.values().front()) + " mod 2^61-1>";
}

// ---------------------------------------------------------------------------
// Random inputs for property checks.

template <ScalarRing R>
typename R::value_type random_scalar(const R& r, std::mt19937_64& rng, bool with_denominator = true) {
  std::uniform_int_distribution<int> coef(-3, 3), texp(-2, 2), lat(-1, 1), nterms(1, 3), coin(0, 2);
  auto acc = r.zero();
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    int c = 0;
    while (c == 0) c = coef(rng);
    LatticeVector v(r.rank());
    for (int j = 0; j < r.rank(); ++j) v[j] = lat(rng);
    acc = acc + r.integer(c) * r.t_power(texp(rng)) * r.exponential(v);
  }
  if (with_denominator && coin(rng) == 0) {
    const auto& roots = r.group().positive_roots();
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    acc = acc / chern_mult(r, roots[pick(rng)]);
  }
  if (r.is_zero(acc)) acc = r.one();
  return acc;
}

template <ScalarRing R>
TwistedElement<R> random_twisted(const R& r, std::mt19937_64& rng, Theory th = Theory::multiplicative, int terms = 2) {
  TwistedElement<R> z(r, th);
  for (int i = 0; i < terms; ++i)
    z += random_scalar(r, rng) * TwistedElement<R>::delta(r, r.group().random_element(rng), th);
  return z;
}

template <ScalarRing R>
DualClass<R> random_class(const R& r, std::mt19937_64& rng, Theory th = Theory::multiplicative) {
  DualClass<R> f(r, th);
  for (ElemId w = 0; w < r.group().size(); ++w) f[w] = random_scalar(r, rng, false);
  return f;
}

/// Random element of the Hecke algebra: Laurent combinations of gamma^-_w.
template <ScalarRing R>
TwistedElement<R> random_hecke(const HeckeAlgebra<R>& H, std::mt19937_64& rng, int terms = 2) {
  const R& r = H.ring();
  std::uniform_int_distribution<int> coef(-2, 2), texp(-2, 2);
  TwistedElement<R> z(r, Theory::multiplicative);
  for (int i = 0; i < terms; ++i) {
    int c = 0;
    while (c == 0) c = coef(rng);
    z += (r.integer(c) * r.t_power(texp(rng))) * H.gamma(H.group().random_element(rng), Sign::minus);
  }
  return z;
}

}  // namespace klschubert
