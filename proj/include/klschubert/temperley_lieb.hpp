#pragma once

// Temperley-Lieb algebra on E-words: E_i^2 = -mu E_i, E_i E_j E_i = E_i for
// |i-j| = 1, E_i E_j = E_j E_i otherwise.  Monomials normalize to (-mu)^k E_{I_w}
// with w fully commutative.

#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "klschubert/ring.hpp"

namespace klschubert {

struct TLMonomial {
  int mu_power = 0;  // exponent of (-mu)
  ElemId element = 0;
};

class TemperleyLieb {
 public:
  explicit TemperleyLieb(const WeylGroup& G) : G_(&G) {}
  const WeylGroup& group() const { return *G_; }

  TLMonomial normalize(const Word& word) const {
    {
      std::lock_guard lk(mu_);
      auto it = memo_.find(word);
      if (it != memo_.end()) return it->second;
    }
    TLMonomial out = compute(word);
    std::lock_guard lk(mu_);
    return memo_.try_emplace(word, out).first->second;
  }

  /// Product in TL with coefficients indexed by fully commutative elements.
  template <ScalarRing R>
  std::map<ElemId, typename R::value_type> multiply(const R& r, const std::map<ElemId, typename R::value_type>& a,
                                                    const std::map<ElemId, typename R::value_type>& b) const {
    std::map<ElemId, typename R::value_type> out;
    const auto m = -mu(r);
    for (const auto& [w, x] : a)
      for (const auto& [v, y] : b) {
        Word word = G_->canonical_word(w);
        const Word& wv = G_->canonical_word(v);
        word.insert(word.end(), wv.begin(), wv.end());
        const TLMonomial n = normalize(word);
        auto c = x * y;
        for (int k = 0; k < n.mu_power; ++k) c = c * m;
        auto [it, fresh] = out.try_emplace(n.element, c);
        if (!fresh) it->second = it->second + c;
      }
    for (auto it = out.begin(); it != out.end();) it = r.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  TLMonomial compute(const Word& word) const {
    // search the commutation class for a square or an (i, i+-1, i) factor
    std::set<Word> seen{word};
    std::deque<Word> queue{word};
    while (!queue.empty()) {
      const Word cur = std::move(queue.front());
      queue.pop_front();
      for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
        if (cur[k] == cur[k + 1]) {
          Word shorter = cur;
          shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(k));
          TLMonomial m = normalize(shorter);
          ++m.mu_power;
          return m;
        }
        if (k + 2 < cur.size() && cur[k] == cur[k + 2] && std::abs(cur[k] - cur[k + 1]) == 1) {
          Word shorter = cur;
          shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(k + 1), shorter.begin() + static_cast<std::ptrdiff_t>(k + 3));
          return normalize(shorter);
        }
      }
      for (std::size_t k = 0; k + 1 < cur.size(); ++k)
        if (std::abs(cur[k] - cur[k + 1]) > 1) {
          Word next = cur;
          std::swap(next[k], next[k + 1]);
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    const ElemId w = G_->element_of_word(word);
    if (!G_->is_reduced(word) || !G_->is_fully_commutative(w))
      throw std::logic_error("TL normal form reached a non-fully-commutative word " + word_to_string(word));
    return {0, w};
  }

  const WeylGroup* G_;
  mutable std::mutex mu_;
  mutable std::map<Word, TLMonomial> memo_;
};

}  // namespace klschubert
