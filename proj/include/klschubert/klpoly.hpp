#pragma once

// Kazhdan-Lusztig polynomials P_{x,w}(q) by the classical recursion.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "klschubert/ring.hpp"
#include "klschubert/weyl.hpp"

namespace klschubert {

/// Dense integer polynomial in one variable; no trailing zeros (the zero polynomial is empty).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }
  static IntPolynomial one() { return IntPolynomial({1}); }

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : 0; }

  IntPolynomial shifted(int k) const {
    if (c_.empty()) return {};
    std::vector<std::int64_t> r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(r));
  }
  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = detail::checked_add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = detail::checked_add(c_[i], -o.c_[i]);
    trim();
    return *this;
  }
  IntPolynomial scaled(std::int64_t k) const {
    std::vector<std::int64_t> r = c_;
    for (auto& x : r) x = detail::checked_mul(x, k);
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = detail::checked_add(r[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
    return IntPolynomial(std::move(r));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const std::int64_t c = c_[k];
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      const std::int64_t a = c < 0 ? -c : c;
      if (k == 0) os << a;
      else {
        if (a != 1) os << a << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

using KLPolynomial = IntPolynomial;

/// All P_{x,w} of a group, computed once at construction and then read-only.
class KLTable {
 public:
  explicit KLTable(const WeylGroup& G) : G_(&G), n_(G.size()), P_(n_ * n_) {
    for (ElemId w = 0; w < n_; ++w) build_column(w);
  }

  const WeylGroup& group() const { return *G_; }
  const KLPolynomial& operator()(ElemId x, ElemId w) const { return P_[x * n_ + w]; }
  /// Coefficient of q^{(l(w)-l(z)-1)/2} in P_{z,w}; zero unless z < w with odd length difference.
  std::int64_t mu(ElemId z, ElemId w) const {
    const int d = G_->length(w) - G_->length(z);
    if (d <= 0 || d % 2 == 0) return 0;
    return (*this)(z, w)[(d - 1) / 2];
  }

 private:
  void build_column(ElemId w) {
    const WeylGroup& G = *G_;
    if (w == G.identity()) {
      P_[w * n_ + w] = KLPolynomial::one();
      return;
    }
    int s = 1;
    while (!G.is_left_descent(w, s)) ++s;
    const ElemId S = G.simple(s);
    const ElemId v = G.mul(S, w);
    // z < v with sz < z and mu(z, v) != 0
    std::vector<std::pair<ElemId, std::int64_t>> corr;
    for (ElemId z = 0; z < n_; ++z) {
      if (z == v || !G.bruhat_leq(z, v) || !G.is_left_descent(z, s)) continue;
      const std::int64_t m = mu(z, v);
      if (m) corr.emplace_back(z, m);
    }
    for (ElemId x = 0; x < n_; ++x) {
      if (!G.bruhat_leq(x, w)) continue;
      const ElemId sx = G.mul(S, x);
      const int c = G.length(sx) < G.length(x) ? 1 : 0;
      KLPolynomial p = (*this)(sx, v).shifted(1 - c) + (*this)(x, v).shifted(c);
      for (const auto& [z, m] : corr) {
        const KLPolynomial& pxz = (*this)(x, z);
        if (pxz.is_zero()) continue;
        p -= pxz.scaled(m).shifted((G.length(w) - G.length(z)) / 2);
      }
      P_[x * n_ + w] = std::move(p);
    }
  }

  const WeylGroup* G_;
  std::size_t n_;
  std::vector<KLPolynomial> P_;
};

/// Evaluation q -> arg.
template <ScalarRing R>
typename R::value_type substitute(const R& r, const KLPolynomial& P, const typename R::value_type& arg) {
  auto acc = r.zero();
  for (int k = P.degree(); k >= 0; --k) acc = acc * arg + r.integer(P[k]);
  return acc;
}

struct PdualReport {
  bool ok = true;
  std::string witness;
};

/// P_{u,v} = P_{u^-1,v^-1} and sum_v eps_u eps_v P_{v,w} P_{w0 v, w0 u} = delta_{w,u}, exhaustively.
inline PdualReport verify_pdual(const KLTable& T) {
  const WeylGroup& G = T.group();
  const ElemId w0 = G.longest();
  PdualReport rep;
  for (ElemId u = 0; u < G.size() && rep.ok; ++u)
    for (ElemId v = 0; v < G.size(); ++v)
      if (!(T(u, v) == T(G.inverse(u), G.inverse(v)))) {
        rep.ok = false;
        rep.witness = "inverse symmetry fails at u=" + G.element(u).to_string() + " v=" + G.element(v).to_string();
        break;
      }
  for (ElemId w = 0; w < G.size() && rep.ok; ++w)
    for (ElemId u = 0; u < G.size(); ++u) {
      KLPolynomial sum;
      for (ElemId v = 0; v < G.size(); ++v) {
        const KLPolynomial term = T(v, w) * T(G.mul(w0, v), G.mul(w0, u));
        if ((G.length(u) + G.length(v)) % 2) sum -= term;
        else sum += term;
      }
      const KLPolynomial expect = w == u ? KLPolynomial::one() : KLPolynomial();
      if (!(sum == expect)) {
        rep.ok = false;
        rep.witness = "inversion formula fails at w=" + G.element(w).to_string() + " u=" + G.element(u).to_string() +
                      " (sum " + sum.to_string() + ")";
        break;
      }
    }
  return rep;
}

}  // namespace klschubert
