#pragma once

// Hecke algebra inside Q_W: Demazure-Lusztig operators, KL bases, involutions,
// push-pull elements, basis changes and the Temperley-Lieb projection.

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "klschubert/klpoly.hpp"
#include "klschubert/linalg.hpp"
#include "klschubert/twisted.hpp"

namespace klschubert {

enum class Sign { plus, minus };
enum class Basis { delta, tau, gamma_minus, gamma_plus, gamma_hat_minus };
enum class PushPull { full, relative };

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::delta: return "delta";
    case Basis::tau: return "tau";
    case Basis::gamma_minus: return "gamma-minus";
    case Basis::gamma_plus: return "gamma-plus";
    case Basis::gamma_hat_minus: return "gamma-hat-minus";
  }
  return "?";
}

class NotInHeckeAlgebra : public std::invalid_argument {
 public:
  NotInHeckeAlgebra() : std::invalid_argument("element is not in the Hecke subalgebra") {}
};

template <ScalarRing R>
class HeckeAlgebra {
 public:
  using V = typename R::value_type;
  using Elem = TwistedElement<R>;
  using Coefficients = std::map<ElemId, V>;

  HeckeAlgebra(const R& r, const KLTable& kl) : r_(&r), kl_(&kl) {
    if (&kl.group() != &r.group()) throw std::invalid_argument("KL table and ring use different groups");
  }
  HeckeAlgebra(const HeckeAlgebra&) = delete;
  HeckeAlgebra& operator=(const HeckeAlgebra&) = delete;

  const R& ring() const { return *r_; }
  const WeylGroup& group() const { return r_->group(); }
  const KLTable& kl() const { return *kl_; }

  Elem delta(ElemId w, Theory th = Theory::multiplicative) const { return Elem::delta(*r_, w, th); }
  Elem unit(Theory th = Theory::multiplicative) const { return Elem::unit(*r_, th); }
  Elem scalar(const V& a, Theory th = Theory::multiplicative) const { return Elem::scalar(*r_, a, th); }

  /// tau_alpha = (t^-1 - t)/(1 - e^-alpha) + (t - t^-1 e^-alpha)/(1 - e^-alpha) delta_alpha
  Elem tau(int i) const {
    const R& r = *r_;
    const LatticeVector a = group().simple_root(i);
    const V den = chern_mult(r, a);
    const V c0 = (r.t_power(-1) - r.t_power(1)) / den;
    const V c1 = (r.t_power(1) - r.t_power(-1) * r.exponential(-a)) / den;
    return Elem(r, Theory::multiplicative, {{group().identity(), c0}, {group().simple(i), c1}});
  }

  /// tau_w along the canonical word (independent of the word by the braid relations).
  Elem tau_element(ElemId w) const {
    if (auto hit = lookup(tau_cache_, w)) return *hit;
    Elem out = unit();
    if (w != group().identity()) {
      const Word& word = group().canonical_word(w);
      const ElemId prefix = group().mul(w, group().simple(word.back()));
      out = tau_element(prefix) * tau(word.back());
    }
    return publish(tau_cache_, w, std::move(out));
  }

  /// gamma^+_i = tau_i + t, gamma^-_i = tau_i - t^-1.
  Elem gamma_simple(int i, Sign s) const {
    return tau(i) + scalar(s == Sign::plus ? r_->t_power(1) : -r_->t_power(-1));
  }

  /// gamma^+_v = sum_{w<=v} t^{l(v)-l(w)} P_{w,v}(t^-2) tau_w
  /// gamma^-_v = sum_{w<=v} (-1)^{l(w)+l(v)} t^{l(w)-l(v)} P_{w,v}(t^2) tau_w
  Elem gamma(ElemId v, Sign s) const {
    auto& cache = s == Sign::plus ? gamma_plus_cache_ : gamma_minus_cache_;
    if (auto hit = lookup(cache, v)) return *hit;
    const R& r = *r_;
    const WeylGroup& G = group();
    Elem out(r, Theory::multiplicative);
    for (ElemId w = 0; w < G.size(); ++w) {
      if (!G.bruhat_leq(w, v)) continue;
      const int d = G.length(v) - G.length(w);
      V c = s == Sign::plus ? r.t_power(d) * substitute(r, (*kl_)(w, v), r.t_power(-2))
                            : r.t_power(-d) * substitute(r, (*kl_)(w, v), r.t_power(2));
      if (s == Sign::minus && d % 2) c = -c;
      out += c * tau_element(w);
    }
    return publish(cache, v, std::move(out));
  }

  /// Ordered product of simple gammas along a word.
  Elem gamma_hat(const Word& word, Sign s) const {
    const auto key = std::make_pair(word, s == Sign::plus);
    {
      std::lock_guard lk(mu_);
      auto it = hat_cache_.find(key);
      if (it != hat_cache_.end()) return it->second;
    }
    Elem out = unit();
    if (!word.empty()) {
      const Word prefix(word.begin(), word.end() - 1);
      out = gamma_hat(prefix, s) * gamma_simple(word.back(), s);
    }
    std::lock_guard lk(mu_);
    return hat_cache_.try_emplace(key, std::move(out)).first->second;
  }

  /// a_{w0} = prod_{alpha>0}(t - t^-1 e^-alpha) / w0(x_Pi^m).
  V a_w0() const { return kdual_scalar(*r_) / r_->act(group().longest(), x_full(*r_, Theory::multiplicative)); }

  /// Basis element indexed by u, leading term at delta_u.
  Elem basis_element(Basis b, ElemId u, const std::vector<Word>* words = nullptr) const {
    switch (b) {
      case Basis::delta: return delta(u);
      case Basis::tau: return tau_element(u);
      case Basis::gamma_minus: return gamma(u, Sign::minus);
      case Basis::gamma_plus: return gamma(u, Sign::plus);
      case Basis::gamma_hat_minus:
        return gamma_hat(words ? (*words)[u] : group().canonical_word(u), Sign::minus);
    }
    throw std::invalid_argument("unknown basis");
  }

  /// Coefficients of z in a Bruhat-triangular basis, eliminating from the top length down.
  Coefficients expand(const Elem& z, Basis b, const std::vector<Word>* words = nullptr) const {
    Coefficients out;
    Elem rest = z;
    while (!rest.is_zero()) {
      const auto& [u, lead] = *rest.terms().rbegin();  // ElemId order refines length
      const Elem B = basis_element(b, u, words).retag(z.theory());
      const V c = lead / B.at(u);
      out.emplace(u, c);
      rest -= c * B;
    }
    return out;
  }

  Elem recombine(const Coefficients& c, Basis b, Theory th = Theory::multiplicative,
                 const std::vector<Word>* words = nullptr) const {
    Elem out(*r_, th);
    for (const auto& [u, a] : c) out += a * basis_element(b, u, words).retag(th);
    return out;
  }

  /// Membership in the Z[t^+-1]-span of the tau_w.
  bool in_hecke(const Elem& z) const {
    for (const auto& [u, a] : expand(z, Basis::tau))
      if (!r_->is_hecke_scalar(a)) return false;
    return true;
  }

  /// The anti-involution tau_w -> tau_{w^-1}, t -> t.
  Elem anti_involution_i(const Elem& z) const {
    Coefficients mirrored;
    for (const auto& [u, a] : expand(z, Basis::tau)) {
      if (!r_->is_hecke_scalar(a)) throw NotInHeckeAlgebra();
      mirrored.emplace(group().inverse(u), a);
    }
    return recombine(mirrored, Basis::tau, z.theory());
  }

  /// iota(p delta_w) = delta_{w^-1} p w(x_Pi)/x_Pi
  Elem iota(const Elem& z) const {
    const R& r = *r_;
    const V xpi = x_full(r, z.theory());
    typename Elem::map_type out;
    for (const auto& [w, p] : z.terms()) {
      const ElemId wi = group().inverse(w);
      out.emplace(wi, r.act(wi, p * r.act(w, xpi) / xpi));
    }
    return Elem(r, z.theory(), std::move(out));
  }

  /// Y_J = sum_{w in W_J} delta_w (1/x_J); Y_{Pi/J} = sum_{w in W^J} delta_w (1/x_{Pi/J}).
  Elem push_pull(const ParabolicSubset& J, PushPull mode, Theory th) const {
    const R& r = *r_;
    const CosetData cd = group().coset_data(J);
    const V inv = r.one() / (mode == PushPull::full ? x_parabolic(r, th, J) : x_relative(r, th, J));
    typename Elem::map_type out;
    for (ElemId w : mode == PushPull::full ? cd.parabolic : cd.min_left) out.emplace(w, r.act(w, inv));
    return Elem(r, th, std::move(out));
  }
  /// Y_{Pi/J} with an arbitrary set of left-coset representatives.
  Elem push_pull_relative(const ParabolicSubset& J, const std::vector<ElemId>& reps, Theory th) const {
    const R& r = *r_;
    const V inv = r.one() / x_relative(r, th, J);
    typename Elem::map_type out;
    for (ElemId w : reps) out.emplace(w, r.act(w, inv));
    return Elem(r, th, std::move(out));
  }

  /// Some z with z g = y, or nullopt.
  std::optional<Elem> solve_right_factor(const Elem& y, const Elem& g) const {
    const R& r = *r_;
    const WeylGroup& G = group();
    const std::size_t n = G.size();
    // (z_v delta_v)(g_u delta_u) = z_v v(g_u) delta_{vu}
    std::vector<std::vector<V>> A(n, std::vector<V>(n, r.zero()));
    std::vector<V> b(n, r.zero());
    for (ElemId v = 0; v < n; ++v)
      for (const auto& [u, gu] : g.terms()) {
        const ElemId x = G.mul(v, u);
        A[x][v] = A[x][v] + r.act(v, gu);
      }
    for (const auto& [x, yx] : y.terms()) b[x] = yx;
    auto sol = solve_linear(r, std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    typename Elem::map_type out;
    for (ElemId v = 0; v < n; ++v) out.emplace(v, (*sol)[v]);
    return Elem(r, y.theory(), std::move(out));
  }

  /// Image in TL = H/I: gamma^- coefficients with the non-fully-commutative terms dropped.
  Coefficients tl_project(const Elem& z) const {
    Coefficients out;
    for (const auto& [u, a] : expand(z, Basis::gamma_minus)) {
      if (!r_->is_hecke_scalar(a)) throw NotInHeckeAlgebra();
      if (group().is_fully_commutative(u)) out.emplace(u, a);
    }
    return out;
  }

 private:
  using Cache = std::map<ElemId, Elem>;
  std::optional<Elem> lookup(const Cache& c, ElemId k) const {
    std::lock_guard lk(mu_);
    auto it = c.find(k);
    if (it == c.end()) return std::nullopt;
    return it->second;
  }
  Elem publish(Cache& c, ElemId k, Elem v) const {
    std::lock_guard lk(mu_);
    return c.try_emplace(k, std::move(v)).first->second;
  }

  const R* r_;
  const KLTable* kl_;
  mutable std::mutex mu_;
  mutable Cache tau_cache_, gamma_plus_cache_, gamma_minus_cache_;
  mutable std::map<std::pair<Word, bool>, Elem> hat_cache_;
};

}  // namespace klschubert
