#pragma once

// Hyperbolic operators X_alpha, Y_alpha, the map psi, KL-Schubert classes and
// the coefficients b^h, b-hat^h.

#include <optional>
#include <string>
#include <vector>

#include "klschubert/localization.hpp"

namespace klschubert {

enum class ClassVariant { c, ctilde, c_parabolic, ctilde_parabolic, dual };

inline ClassVariant parse_variant(const std::string& s) {
  if (s == "c") return ClassVariant::c;
  if (s == "ctilde") return ClassVariant::ctilde;
  if (s == "cj") return ClassVariant::c_parabolic;
  if (s == "ctildej") return ClassVariant::ctilde_parabolic;
  if (s == "dual") return ClassVariant::dual;
  throw std::invalid_argument("unknown class variant '" + s + "' (c, ctilde, cj, ctildej, dual)");
}

/// X_i = (1/x_i)(delta_i - 1) in the hyperbolic theory.
template <ScalarRing R>
TwistedElement<R> op_X(const R& r, int i) {
  const auto inv = r.one() / embed_hyperbolic_chern(r, r.group().simple_root(i));
  return TwistedElement<R>(r, Theory::hyperbolic, {{r.group().identity(), -inv}, {r.group().simple(i), inv}});
}
/// Y_i = 1 + X_i.
template <ScalarRing R>
TwistedElement<R> op_Y(const R& r, int i) {
  return TwistedElement<R>::unit(r, Theory::hyperbolic) + op_X(r, i);
}
/// X_{i1} ... X_{ik}.
template <ScalarRing R>
TwistedElement<R> op_X_word(const R& r, const Word& word) {
  auto out = TwistedElement<R>::unit(r, Theory::hyperbolic);
  for (int i : word) out *= op_X(r, i);
  return out;
}

/// psi: with x^h embedded as the preimage of x^m, psi fixes every coefficient.
template <ScalarRing R>
TwistedElement<R> psi(const TwistedElement<R>& z) {
  if (z.theory() != Theory::multiplicative) throw std::invalid_argument("psi expects a multiplicative element");
  return z.retag(Theory::hyperbolic);
}

template <ScalarRing R>
class HyperbolicClasses {
 public:
  using V = typename R::value_type;
  using Class = DualClass<R>;

  explicit HyperbolicClasses(const HeckeAlgebra<R>& H) : H_(&H) {}

  const HeckeAlgebra<R>& hecke() const { return *H_; }
  const R& ring() const { return H_->ring(); }
  const WeylGroup& group() const { return H_->group(); }

  V mu_of(ElemId w) const { return mu_power(ring(), group().length(w)); }

  /// C_w = mu_w^-1 psi(gamma^-_w) (.) pt_e
  Class c(ElemId w) const {
    return mu_power(ring(), -group().length(w)) *
           odot(psi(H_->gamma(w, Sign::minus)), point_class(ring(), group().identity(), Theory::hyperbolic));
  }
  /// C~_u = mu_{u^-1 w0}^-1 psi(gamma^+_{u^-1 w0}) . pt_w0
  Class ctilde(ElemId u) const {
    const ElemId x = group().mul(group().inverse(u), group().longest());
    return mu_power(ring(), -group().length(x)) *
           bullet(psi(H_->gamma(x, Sign::plus)), point_class(ring(), group().longest(), Theory::hyperbolic));
  }
  /// C^J_w = mu_w^-1 Y^h_J . (psi(gamma^-_w) (.) pt_e), w in W^J
  Class c_parabolic(ElemId w, const ParabolicSubset& J) const {
    require_min_left(w, J);
    return pushforward(*H_, c(w), J, Pushforward::to_parabolic);
  }
  Class ctilde_parabolic(ElemId u, const ParabolicSubset& J) const {
    require_min_left(u, J);
    return ctilde(u);
  }
  /// psi(gamma^-_u)^* = sum_v b_{v,u} f_v
  Class dual(ElemId u) const {
    Class f(ring(), Theory::hyperbolic);
    for (ElemId v = 0; v < group().size(); ++v) {
      const auto row = b_row(v, Basis::gamma_minus, nullptr);
      auto it = row.find(u);
      if (it != row.end()) f[v] = it->second;
    }
    return f;
  }

  Class kl_class(ElemId w, ClassVariant variant, const std::optional<ParabolicSubset>& J) const {
    switch (variant) {
      case ClassVariant::c: return c(w);
      case ClassVariant::ctilde: return ctilde(w);
      case ClassVariant::c_parabolic: return c_parabolic(w, need(J));
      case ClassVariant::ctilde_parabolic: return ctilde_parabolic(w, need(J));
      case ClassVariant::dual: return dual(w);
    }
    throw std::invalid_argument("unknown class variant");
  }

  /// delta^h_w = sum_u b^h_{w,u} psi(gamma^-_u) (basis gamma_minus), or
  /// sum_u b-hat^h_{w,I_u} psi(gamma-hat^-_{I_u}) (basis gamma_hat_minus with J-compatible words).
  std::map<ElemId, V> b_row(ElemId w, Basis basis, const std::vector<Word>* words) const {
    return H_->expand(H_->delta(w, Theory::hyperbolic), basis, words);
  }
  V b_coefficient(ElemId w, ElemId u, Basis basis, const std::vector<Word>* words) const {
    const auto row = b_row(w, basis, words);
    auto it = row.find(u);
    return it == row.end() ? ring().zero() : it->second;
  }

 private:
  static const ParabolicSubset& need(const std::optional<ParabolicSubset>& J) {
    if (!J) throw std::invalid_argument("parabolic class variants need J");
    return *J;
  }
  void require_min_left(ElemId w, const ParabolicSubset& J) const {
    if (!group().coset_data(J).in_min_left(w))
      throw std::invalid_argument(group().element(w).to_string() + " is not a minimal coset representative for J=" + J.to_string());
  }
  const HeckeAlgebra<R>* H_;
};

/// Y^h_Pi . (a b), or Y^h_{Pi/J} . (a b) when J is given.
template <ScalarRing R>
DualClass<R> hyperbolic_pairing(const HeckeAlgebra<R>& H, const DualClass<R>& a, const DualClass<R>& b,
                                const std::optional<ParabolicSubset>& J) {
  if (J) return pushforward(H, a * b, *J, Pushforward::relative);
  return pushforward(H, a * b, ParabolicSubset::full(H.group().rank()), Pushforward::to_point);
}

}  // namespace klschubert
