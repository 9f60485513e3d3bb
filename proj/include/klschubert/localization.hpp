#pragma once

// Localized classes in (Q_W)^*: point classes, push-forwards, invariants and
// the K-theoretic duality pairings.

#include <random>
#include <string>
#include <vector>

#include "klschubert/hecke.hpp"

namespace klschubert {

enum class Pushforward { to_parabolic, to_point, relative };

/// pt_w = w(x_Pi) f_w, which equals delta_w (.) pt_e.
template <ScalarRing R>
DualClass<R> point_class(const R& r, ElemId w, Theory th) {
  DualClass<R> f(r, th);
  f[w] = r.act(w, x_full(r, th));
  return f;
}

/// delta_w . f = f for every w in W_J, checked on the generators.
template <ScalarRing R>
bool is_invariant(const DualClass<R>& f, const ParabolicSubset& J) {
  const R& r = f.ring();
  for (int j : J.indices()) {
    const auto s = TwistedElement<R>::delta(r, r.group().simple(j), f.theory());
    if (!(bullet(s, f) == f)) return false;
  }
  return true;
}

template <ScalarRing R>
DualClass<R> pushforward(const HeckeAlgebra<R>& H, const DualClass<R>& f, const ParabolicSubset& J, Pushforward mode) {
  switch (mode) {
    case Pushforward::to_parabolic: return bullet(H.push_pull(J, PushPull::full, f.theory()), f);
    case Pushforward::to_point:
      return bullet(H.push_pull(ParabolicSubset::full(H.group().rank()), PushPull::full, f.theory()), f);
    case Pushforward::relative:
      if (!is_invariant(f, J)) throw std::invalid_argument("relative push-forward needs a W_J-invariant class");
      return bullet(H.push_pull(J, PushPull::relative, f.theory()), f);
  }
  throw std::invalid_argument("unknown push-forward mode");
}

/// g_w = sum_{v in W_J} f_{wv}, w in W^J.
template <ScalarRing R>
std::vector<DualClass<R>> invariant_basis(const R& r, const ParabolicSubset& J, Theory th) {
  const WeylGroup& G = r.group();
  const CosetData cd = G.coset_data(J);
  std::vector<DualClass<R>> out;
  for (ElemId w : cd.min_left) {
    DualClass<R> g(r, th);
    for (ElemId v : cd.parabolic) g[G.mul(w, v)] = r.one();
    out.push_back(std::move(g));
  }
  return out;
}

/// Coordinates of f in the g_w basis (ordered as W^J), or nullopt if f is not in the span.
template <ScalarRing R>
std::optional<std::vector<typename R::value_type>> invariant_coordinates(const DualClass<R>& f, const ParabolicSubset& J) {
  const R& r = f.ring();
  const CosetData cd = r.group().coset_data(J);
  std::vector<typename R::value_type> c;
  for (ElemId w : cd.min_left) c.push_back(f[w]);
  DualClass<R> back(r, f.theory());
  const auto basis = invariant_basis(r, J, f.theory());
  for (std::size_t k = 0; k < basis.size(); ++k) back = back + c[k] * basis[k];
  if (!(back == f)) return std::nullopt;
  return c;
}

/// A pairing matrix whose entries are classes; the dualities assert each is a multiple of the unit.
template <ScalarRing R>
struct PairingMatrix {
  std::vector<ElemId> rows, cols;
  std::vector<std::vector<DualClass<R>>> entries;
};

/// Y_Pi . ((gamma^-_w (.) pt_e) (gamma^+_{v^-1 w0} . pt_w0)).
template <ScalarRing R>
DualClass<R> kdual_entry(const HeckeAlgebra<R>& H, ElemId w, ElemId v) {
  const R& r = H.ring();
  const WeylGroup& G = H.group();
  const auto th = Theory::multiplicative;
  const auto lhs = odot(H.gamma(w, Sign::minus), point_class(r, G.identity(), th));
  const auto rhs = bullet(H.gamma(G.mul(G.inverse(v), G.longest()), Sign::plus), point_class(r, G.longest(), th));
  return pushforward(H, lhs * rhs, ParabolicSubset::full(G.rank()), Pushforward::to_point);
}

/// Y_{Pi/J} . ((Y_J . (gamma^-_w (.) pt_e)) (gamma^+_{u^-1 w0} . pt_w0)), w, u in W^J.
template <ScalarRing R>
DualClass<R> kdual_parabolic_entry(const HeckeAlgebra<R>& H, const ParabolicSubset& J, ElemId w, ElemId u) {
  const R& r = H.ring();
  const WeylGroup& G = H.group();
  const auto th = Theory::multiplicative;
  const auto lhs = pushforward(H, odot(H.gamma(w, Sign::minus), point_class(r, G.identity(), th)), J, Pushforward::to_parabolic);
  const auto rhs = bullet(H.gamma(G.mul(G.inverse(u), G.longest()), Sign::plus), point_class(r, G.longest(), th));
  return pushforward(H, lhs * rhs, J, Pushforward::relative);
}

template <ScalarRing R>
PairingMatrix<R> kdual_matrix(const HeckeAlgebra<R>& H, const std::optional<ParabolicSubset>& J) {
  PairingMatrix<R> m;
  const WeylGroup& G = H.group();
  if (J) m.rows = G.coset_data(*J).min_left;
  else
    for (ElemId w = 0; w < G.size(); ++w) m.rows.push_back(w);
  m.cols = m.rows;
  for (ElemId w : m.rows) {
    m.entries.emplace_back();
    for (ElemId v : m.cols) m.entries.back().push_back(J ? kdual_parabolic_entry(H, *J, w, v) : kdual_entry(H, w, v));
  }
  return m;
}

/// Checks every entry equals delta_{row,col} * scalar * unit; returns a description of the first mismatch.
template <ScalarRing R>
std::optional<std::string> check_diagonal(const PairingMatrix<R>& m, const typename R::value_type& scalar) {
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      const auto& e = m.entries[i][j];
      const auto& r = e.ring();
      const auto expect = m.rows[i] == m.cols[j] ? scalar * DualClass<R>::unit(r, e.theory()) : DualClass<R>(r, e.theory());
      if (!(e == expect))
        return "entry (" + r.group().element(m.rows[i]).to_string() + ", " + r.group().element(m.cols[j]).to_string() + ")";
    }
  return std::nullopt;
}

}  // namespace klschubert
