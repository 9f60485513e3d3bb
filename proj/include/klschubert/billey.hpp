#pragma once

// Free formal Demazure module with central coefficients: rewriting of X-words
// into the basis X_{I_v}, root polynomials and the Billey-type coefficients.

#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "klschubert/hyperbolic.hpp"

namespace klschubert {

/// Polynomial in nu = mu^-2 with integer coefficients.
using NuPolynomial = IntPolynomial;

/// Rewrites X-words into the basis {X_{I_v}} for a fixed choice of reduced words I_v,
/// using X_i^2 = -X_i, commutations, and X_j X_i X_j = X_i X_j X_i + mu^-2 (X_j - X_i).
class DemazureRewriter {
 public:
  using Expansion = std::map<ElemId, NuPolynomial>;

  DemazureRewriter(const WeylGroup& G, std::vector<Word> chosen) : G_(&G), chosen_(std::move(chosen)) {
    if (chosen_.size() != G.size()) throw std::invalid_argument("need one chosen word per element");
    for (ElemId w = 0; w < G.size(); ++w)
      if (G.element_of_word(chosen_[w]) != w || !G.is_reduced(chosen_[w]))
        throw std::invalid_argument("chosen word " + word_to_string(chosen_[w]) + " is not a reduced word of its element");
  }
  /// Basis words J-compatible for J.
  DemazureRewriter(const WeylGroup& G, const ParabolicSubset& J) : DemazureRewriter(G, G.j_compatible_words(J)) {}

  const WeylGroup& group() const { return *G_; }
  const std::vector<Word>& chosen_words() const { return chosen_; }

  Expansion expand(const Word& word) const {
    {
      std::lock_guard lk(mu_);
      auto it = memo_.find(word);
      if (it != memo_.end()) return it->second;
    }
    Expansion out = compute(word);
    std::lock_guard lk(mu_);
    return memo_.try_emplace(word, std::move(out)).first->second;
  }

 private:
  static NuPolynomial nu() { return NuPolynomial({0, 1}); }

  static void accumulate(Expansion& acc, const Expansion& e, const NuPolynomial& scale) {
    for (const auto& [v, c] : e) {
      NuPolynomial& slot = acc[v];
      slot += c * scale;
      if (slot.is_zero()) acc.erase(v);
    }
  }

  Expansion compute(const Word& word) const {
    for (int i : word)
      if (i < 1 || i > G_->rank()) throw std::invalid_argument("letter out of range in X-word");
    if (word.empty()) return {{G_->identity(), NuPolynomial::one()}};
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (word[k] == word[k + 1]) {
        Word shorter = word;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(k));
        Expansion out;
        accumulate(out, expand(shorter), NuPolynomial::one().scaled(-1));
        return out;
      }
    const bool reduced = G_->is_reduced(word);
    const ElemId w = G_->element_of_word(word);
    if (reduced && word == chosen_[w]) return {{w, NuPolynomial::one()}};
    // Shortest move sequence to the chosen word (reduced) or to a word with a square (not reduced).
    const auto path = search(word, reduced ? &chosen_[w] : nullptr);
    Expansion out;
    for (const auto& step : path.corrections) {
      // X_{A jij B} = X_{A iji B} + mu^-2 X_{A j B} - mu^-2 X_{A i B}
      accumulate(out, expand(step.plus), nu());
      accumulate(out, expand(step.minus), nu().scaled(-1));
    }
    accumulate(out, expand(path.target), NuPolynomial::one());
    return out;
  }

  struct Correction {
    Word plus, minus;
  };
  struct Path {
    Word target;
    std::vector<Correction> corrections;
  };

  static bool has_square(const Word& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] == w[k + 1]) return true;
    return false;
  }

  Path search(const Word& start, const Word* goal) const {
    std::map<Word, std::pair<Word, std::size_t>> parent;  // word -> (previous word, move position)
    std::deque<Word> queue{start};
    parent.emplace(start, std::make_pair(Word{}, std::size_t(-1)));
    while (!queue.empty()) {
      Word cur = std::move(queue.front());
      queue.pop_front();
      if (goal ? cur == *goal : has_square(cur)) return trace(parent, start, cur);
      for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
        const int a = cur[k], b = cur[k + 1];
        Word next = cur;
        if (std::abs(a - b) > 1) std::swap(next[k], next[k + 1]);
        else if (std::abs(a - b) == 1 && k + 2 < cur.size() && cur[k + 2] == a) {
          next[k] = b;
          next[k + 1] = a;
          next[k + 2] = b;
        } else continue;
        if (parent.try_emplace(next, std::make_pair(cur, k)).second) queue.push_back(std::move(next));
      }
    }
    throw std::logic_error("rewriting search failed for " + word_to_string(start));
  }

  static Path trace(const std::map<Word, std::pair<Word, std::size_t>>& parent, const Word& start, Word end) {
    Path p;
    p.target = end;
    while (end != start) {
      const auto& [prev, k] = parent.at(end);
      if (std::abs(prev[k] - prev[k + 1]) == 1) {
        // prev has (j,i,j) at k and was rewritten to (i,j,i)
        const int j = prev[k], i = prev[k + 1];
        Correction c;
        c.plus = prev;
        c.plus.erase(c.plus.begin() + static_cast<std::ptrdiff_t>(k), c.plus.begin() + static_cast<std::ptrdiff_t>(k + 3));
        c.minus = c.plus;
        c.plus.insert(c.plus.begin() + static_cast<std::ptrdiff_t>(k), j);
        c.minus.insert(c.minus.begin() + static_cast<std::ptrdiff_t>(k), i);
        p.corrections.push_back(std::move(c));
      }
      end = prev;
    }
    return p;
  }

  const WeylGroup* G_;
  std::vector<Word> chosen_;
  mutable std::mutex mu_;
  mutable std::map<Word, Expansion> memo_;
};

template <ScalarRing R>
typename R::value_type nu_value(const R& r, const NuPolynomial& p) {
  return substitute(r, p, mu_power(r, -2));
}

/// Element of the free module: coefficients of X_{I_v}, treated as central scalars.
template <ScalarRing R>
class FreeDemazureElement {
 public:
  using V = typename R::value_type;
  using map_type = std::map<ElemId, V>;

  FreeDemazureElement(const R& r, const DemazureRewriter& rw) : r_(&r), rw_(&rw) {}
  FreeDemazureElement(const R& r, const DemazureRewriter& rw, map_type c) : r_(&r), rw_(&rw), c_(std::move(c)) { prune(); }

  static FreeDemazureElement unit(const R& r, const DemazureRewriter& rw) {
    return FreeDemazureElement(r, rw, {{r.group().identity(), r.one()}});
  }
  /// The X-word, expanded in the basis.
  static FreeDemazureElement word(const R& r, const DemazureRewriter& rw, const Word& w) {
    map_type c;
    for (const auto& [v, p] : rw.expand(w)) c.emplace(v, nu_value(r, p));
    return FreeDemazureElement(r, rw, std::move(c));
  }

  const map_type& terms() const { return c_; }
  V at(ElemId v) const {
    auto it = c_.find(v);
    return it == c_.end() ? r_->zero() : it->second;
  }

  friend FreeDemazureElement operator+(FreeDemazureElement a, const FreeDemazureElement& b) {
    for (const auto& [v, x] : b.c_) {
      auto [it, fresh] = a.c_.try_emplace(v, x);
      if (!fresh) it->second = it->second + x;
    }
    a.prune();
    return a;
  }
  friend FreeDemazureElement operator*(const V& s, FreeDemazureElement a) {
    for (auto& [v, x] : a.c_) x = s * x;
    a.prune();
    return a;
  }
  /// Bilinear, scalars central: X_{I_v} X_{I_u} is the expansion of I_v ++ I_u.
  friend FreeDemazureElement operator*(const FreeDemazureElement& a, const FreeDemazureElement& b) {
    const auto& words = a.rw_->chosen_words();
    map_type out;
    for (const auto& [v, x] : a.c_)
      for (const auto& [u, y] : b.c_) {
        Word w = words[v];
        w.insert(w.end(), words[u].begin(), words[u].end());
        const V xy = x * y;
        for (const auto& [z, p] : a.rw_->expand(w)) {
          const V term = xy * nu_value(*a.r_, p);
          auto [it, fresh] = out.try_emplace(z, term);
          if (!fresh) it->second = it->second + term;
        }
      }
    return FreeDemazureElement(*a.r_, *a.rw_, std::move(out));
  }
  friend bool operator==(const FreeDemazureElement& a, const FreeDemazureElement& b) {
    std::set<ElemId> keys;
    for (const auto& kv : a.c_) keys.insert(kv.first);
    for (const auto& kv : b.c_) keys.insert(kv.first);
    for (ElemId k : keys)
      if (!(a.at(k) == b.at(k))) return false;
    return true;
  }

 private:
  void prune() {
    for (auto it = c_.begin(); it != c_.end();) it = r_->is_zero(it->second) ? c_.erase(it) : std::next(it);
  }
  const R* r_;
  const DemazureRewriter* rw_;
  map_type c_;
};

/// R_I = prod_j (1 + x_{beta_j} X_{i_j}), x = hyperbolic Chern class.
template <ScalarRing R>
FreeDemazureElement<R> root_polynomial(const R& r, const DemazureRewriter& rw, const Word& I) {
  const auto betas = r.group().prefix_roots(I);
  auto acc = FreeDemazureElement<R>::unit(r, rw);
  for (std::size_t j = 0; j < I.size(); ++j) {
    const auto step = FreeDemazureElement<R>::unit(r, rw) +
                      embed_hyperbolic_chern(r, betas[j]) * FreeDemazureElement<R>::word(r, rw, {I[j]});
    acc = acc * step;
  }
  return acc;
}

/// One subword's share of the X_{I_u} coefficient of R_I.
struct SubwordTerm {
  std::vector<bool> mask;         // which letters of I are used
  NuPolynomial coefficient;       // structure constant of the subword at u
  std::vector<LatticeVector> roots;  // the beta_j of the used letters
};

inline std::string subword_label(const Word& I, const std::vector<bool>& mask) {
  std::string s = "(";
  for (std::size_t j = 0; j < I.size(); ++j) {
    if (j) s += ",";
    s += mask[j] ? "s" + std::to_string(I[j]) : "-";
  }
  return s + ")";
}

/// Subwords of I whose X-word has a nonzero X_{I_u} coefficient, in mask order.
inline std::vector<SubwordTerm> subword_terms(const DemazureRewriter& rw, const Word& I, ElemId u) {
  const WeylGroup& G = rw.group();
  const auto betas = G.prefix_roots(I);
  if (I.size() > 20) throw std::invalid_argument("word too long for subword enumeration");
  std::vector<SubwordTerm> out;
  const std::size_t k = I.size();
  for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
    SubwordTerm t;
    t.mask.resize(k);
    Word sub;
    for (std::size_t j = 0; j < k; ++j)
      if (bits >> (k - 1 - j) & 1) {
        t.mask[j] = true;
        sub.push_back(I[j]);
        t.roots.push_back(betas[j]);
      }
    const auto e = rw.expand(sub);
    auto it = e.find(u);
    if (it == e.end()) continue;
    t.coefficient = it->second;
    out.push_back(std::move(t));
  }
  return out;
}

template <ScalarRing R>
typename R::value_type subword_value(const R& r, const SubwordTerm& t) {
  auto v = nu_value(r, t.coefficient);
  for (const auto& b : t.roots) v = v * embed_hyperbolic_chern(r, b);
  return v;
}

/// b-hat'^h_{w,I_u}: the X_{I_u} coefficient of the root polynomial of the chosen word of w.
template <ScalarRing R>
typename R::value_type billey_coefficient(const R& r, const DemazureRewriter& rw, ElemId w, ElemId u,
                                          const ParabolicSubset& J) {
  if (!r.group().coset_data(J).in_min_left(u))
    throw std::invalid_argument(r.group().element(u).to_string() + " is not a minimal coset representative for J=" + J.to_string());
  return root_polynomial(r, rw, rw.chosen_words()[w]).at(u);
}

/// mu_u b-hat^h_{w,I_u}, with b-hat^h from the delta -> psi(gamma-hat^-) triangular solve.
/// This is the restriction C~^J_u|_w.
template <ScalarRing R>
typename R::value_type restriction(const HeckeAlgebra<R>& H, ElemId u, ElemId w, const ParabolicSubset& J) {
  const WeylGroup& G = H.group();
  if (!G.coset_data(J).in_min_left(u))
    throw std::invalid_argument(G.element(u).to_string() + " is not a minimal coset representative for J=" + J.to_string());
  const auto words = G.j_compatible_words(J);
  const HyperbolicClasses<R> hyp(H);
  return hyp.mu_of(u) * hyp.b_coefficient(w, u, Basis::gamma_hat_minus, &words);
}

}  // namespace klschubert
