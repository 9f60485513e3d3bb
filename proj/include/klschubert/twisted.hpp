#pragma once

// The twisted group algebra Q_W (delta basis) and its dual (Q_W)^* (f basis).

#include <map>
#include <stdexcept>
#include <vector>

#include "klschubert/ring.hpp"

namespace klschubert {

template <ScalarRing R>
class TwistedElement {
 public:
  using value_type = typename R::value_type;
  using map_type = std::map<ElemId, value_type>;

  TwistedElement(const R& r, Theory th) : r_(&r), th_(th) {}
  TwistedElement(const R& r, Theory th, map_type c) : r_(&r), th_(th), c_(std::move(c)) { prune(); }

  static TwistedElement delta(const R& r, ElemId w, Theory th = Theory::multiplicative) {
    return TwistedElement(r, th, map_type{{w, r.one()}});
  }
  static TwistedElement scalar(const R& r, const value_type& a, Theory th = Theory::multiplicative) {
    return TwistedElement(r, th, map_type{{r.group().identity(), a}});
  }
  static TwistedElement unit(const R& r, Theory th = Theory::multiplicative) { return delta(r, r.group().identity(), th); }

  const R& ring() const { return *r_; }
  Theory theory() const { return th_; }
  const map_type& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  /// delta_w coefficient, the restriction z|_w.
  value_type at(ElemId w) const {
    auto it = c_.find(w);
    return it == c_.end() ? r_->zero() : it->second;
  }
  /// Same coefficients under the other theory tag; this is psi on the embedded field.
  TwistedElement retag(Theory th) const { return TwistedElement(*r_, th, c_); }

  TwistedElement& operator+=(const TwistedElement& o) {
    check(o);
    for (const auto& [w, a] : o.c_) {
      auto [it, fresh] = c_.try_emplace(w, a);
      if (!fresh) {
        it->second = it->second + a;
        if (r_->is_zero(it->second)) c_.erase(it);
      }
    }
    return *this;
  }
  TwistedElement& operator-=(const TwistedElement& o) { return *this += -o; }
  TwistedElement operator-() const {
    TwistedElement r = *this;
    for (auto& [w, a] : r.c_) a = -a;
    return r;
  }
  friend TwistedElement operator+(TwistedElement a, const TwistedElement& b) { return a += b; }
  friend TwistedElement operator-(TwistedElement a, const TwistedElement& b) { return a -= b; }

  /// (a delta_w)(b delta_v) = a w(b) delta_{wv}
  friend TwistedElement operator*(const TwistedElement& a, const TwistedElement& b) {
    a.check(b);
    const R& r = *a.r_;
    map_type out;
    for (const auto& [w, x] : a.c_)
      for (const auto& [v, y] : b.c_) {
        value_type term = x * r.act(w, y);
        const ElemId wv = r.group().mul(w, v);
        auto [it, fresh] = out.try_emplace(wv, std::move(term));
        if (!fresh) it->second = it->second + term;
      }
    return TwistedElement(r, a.th_, std::move(out));
  }
  /// Left multiplication by a scalar a (a delta_e).
  friend TwistedElement operator*(const value_type& a, const TwistedElement& z) {
    TwistedElement r = z;
    for (auto& [w, x] : r.c_) x = a * x;
    r.prune();
    return r;
  }
  /// Right multiplication by a scalar: z a = sum c_w w(a) delta_w.
  TwistedElement times_scalar_right(const value_type& a) const {
    TwistedElement r = *this;
    for (auto& [w, x] : r.c_) x = x * r_->act(w, a);
    r.prune();
    return r;
  }
  TwistedElement& operator*=(const TwistedElement& o) { return *this = *this * o; }

  friend bool operator==(const TwistedElement& a, const TwistedElement& b) {
    if (a.th_ != b.th_) return false;
    return (a - b).is_zero();
  }

 private:
  void check(const TwistedElement& o) const {
    if (th_ != o.th_) throw std::invalid_argument("mixing elements of different theories");
  }
  void prune() {
    for (auto it = c_.begin(); it != c_.end();) it = r_->is_zero(it->second) ? c_.erase(it) : std::next(it);
  }

  const R* r_;
  Theory th_;
  map_type c_;
};

/// An element of (Q_W)^*: the value at each fixed point w (coefficient of f_w).
template <ScalarRing R>
class DualClass {
 public:
  using value_type = typename R::value_type;

  DualClass(const R& r, Theory th) : r_(&r), th_(th), c_(r.group().size(), r.zero()) {}
  DualClass(const R& r, Theory th, std::vector<value_type> c) : r_(&r), th_(th), c_(std::move(c)) {
    if (c_.size() != r.group().size()) throw std::invalid_argument("dual class of the wrong size");
  }
  static DualClass unit(const R& r, Theory th) { return DualClass(r, th, std::vector<value_type>(r.group().size(), r.one())); }
  static DualClass basis(const R& r, Theory th, ElemId w) {
    DualClass f(r, th);
    f.c_[w] = r.one();
    return f;
  }

  const R& ring() const { return *r_; }
  Theory theory() const { return th_; }
  const value_type& operator[](ElemId w) const { return c_[w]; }
  value_type& operator[](ElemId w) { return c_[w]; }
  const std::vector<value_type>& values() const { return c_; }
  std::size_t size() const { return c_.size(); }

  bool is_zero() const {
    for (const auto& a : c_)
      if (!r_->is_zero(a)) return false;
    return true;
  }
  /// All values equal, i.e. a multiple of the unit.
  bool is_constant() const {
    for (const auto& a : c_)
      if (!(a == c_.front())) return false;
    return true;
  }

  friend DualClass operator+(DualClass a, const DualClass& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] + b.c_[i];
    return a;
  }
  friend DualClass operator-(DualClass a, const DualClass& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] - b.c_[i];
    return a;
  }
  /// Componentwise product: f_w f_v = delta_{w,v} f_w.
  friend DualClass operator*(DualClass a, const DualClass& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] * b.c_[i];
    return a;
  }
  friend DualClass operator*(const value_type& s, DualClass a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend bool operator==(const DualClass& a, const DualClass& b) {
    if (a.th_ != b.th_) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  void check(const DualClass& o) const {
    if (th_ != o.th_) throw std::invalid_argument("mixing classes of different theories");
  }
  const R* r_;
  Theory th_;
  std::vector<value_type> c_;
};

/// a delta_w . b f_v = b (v w^-1)(a) f_{v w^-1}; Q-linear in the scalar.
template <ScalarRing R>
DualClass<R> bullet(const TwistedElement<R>& z, const DualClass<R>& f) {
  if (z.theory() != f.theory()) throw std::invalid_argument("mixing theories in the bullet action");
  const R& r = z.ring();
  const WeylGroup& G = r.group();
  DualClass<R> out(r, f.theory());
  for (const auto& [w, a] : z.terms()) {
    const ElemId winv = G.inverse(w);
    for (ElemId v = 0; v < G.size(); ++v) {
      if (r.is_zero(f[v])) continue;
      const ElemId vw = G.mul(v, winv);
      out[vw] = out[vw] + f[v] * r.act(vw, a);
    }
  }
  return out;
}

/// a delta_w (.) b f_v = a w(b) f_{wv}; twists scalars.
template <ScalarRing R>
DualClass<R> odot(const TwistedElement<R>& z, const DualClass<R>& f) {
  if (z.theory() != f.theory()) throw std::invalid_argument("mixing theories in the odot action");
  const R& r = z.ring();
  const WeylGroup& G = r.group();
  DualClass<R> out(r, f.theory());
  for (const auto& [w, a] : z.terms())
    for (ElemId v = 0; v < G.size(); ++v) {
      if (r.is_zero(f[v])) continue;
      const ElemId wv = G.mul(w, v);
      out[wv] = out[wv] + a * r.act(w, f[v]);
    }
  return out;
}

}  // namespace klschubert
