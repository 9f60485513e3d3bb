#pragma once

// Executable identities.  Each check returns a verdict and a short witness.

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "klschubert/context.hpp"

namespace klschubert {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CheckOptions {
  std::optional<ParabolicSubset> J;
  std::uint64_t seed = 20240601;
  int samples = 0;  // 0 = the default for the check and rank
};

/// Maximal proper subsets {1..n} minus one index.
inline std::vector<ParabolicSubset> maximal_parabolics(int rank) {
  std::vector<ParabolicSubset> out;
  for (int drop = rank; drop >= 1; --drop) {
    std::vector<int> idx;
    for (int i = 1; i <= rank; ++i)
      if (i != drop) idx.push_back(i);
    out.emplace_back(rank, idx);
  }
  return out;
}

inline void require_maximal(const ParabolicSubset& J) {
  if (!J.is_maximal_proper())
    throw std::invalid_argument("J=" + J.to_string() + " is not maximal proper (Grassmannian checks need |J| = n-1)");
}

template <ScalarRing R>
class Checker {
 public:
  using V = typename R::value_type;
  using Elem = TwistedElement<R>;
  using Class = DualClass<R>;

  Checker(const Context<R>& ctx, CheckOptions opt) : c_(&ctx), opt_(std::move(opt)), rng_(opt_.seed) {}

  static const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {
        "fgl",          "tau",          "gamma-annihilation", "klcom",     "pdual",          "kdual",
        "w0act",        "actions",      "iota",               "inv",       "projection",     "comp",
        "grassmannian", "lemma-b",      "fan-green",          "tl-product", "x-operators",   "psi",
        "hyper",        "hypergp",      "wj",                 "root-independence", "billey-restriction",
        "billey-oracle"};
    return n;
  }

  CheckResult run(const std::string& name) {
    if (name == "fgl") return fgl();
    if (name == "tau") return tau();
    if (name == "gamma-annihilation") return gamma_annihilation();
    if (name == "klcom") return klcom();
    if (name == "pdual") return pdual();
    if (name == "kdual") return kdual();
    if (name == "w0act") return w0act();
    if (name == "actions") return actions();
    if (name == "iota") return iota();
    if (name == "inv") return inv();
    if (name == "projection") return projection();
    if (name == "comp") return comp();
    if (name == "grassmannian") return per_maximal("grassmannian", [this](const ParabolicSubset& J) { return grassmannian(J); });
    if (name == "lemma-b") return per_maximal("lemma-b", [this](const ParabolicSubset& J) { return lemma_b(J); });
    if (name == "fan-green") return fan_green();
    if (name == "tl-product") return tl_product();
    if (name == "x-operators") return x_operators();
    if (name == "psi") return psi_identities();
    if (name == "hyper") return hyper();
    if (name == "hypergp") return per_maximal("hypergp", [this](const ParabolicSubset& J) { return hypergp(J); });
    if (name == "wj") return per_maximal("wj", [this](const ParabolicSubset& J) { return wj(J); });
    if (name == "root-independence") return root_independence();
    if (name == "billey-restriction")
      return per_maximal("billey-restriction", [this](const ParabolicSubset& J) { return billey_restriction(J); });
    if (name == "billey-oracle") return per_maximal("billey-oracle", [this](const ParabolicSubset& J) { return billey_oracle(J); });
    throw std::invalid_argument("unknown check '" + name + "'");
  }

  // -------------------------------------------------------------------------

  CheckResult fgl() {
    const R& r = ring();
    std::vector<LatticeVector> lam;
    for (int i = 1; i <= rank(); ++i) lam.push_back(G().simple_root(i));
    for (int i = 1; i <= rank(); ++i)
      for (int j = i + 1; j <= rank(); ++j) lam.push_back(G().simple_root(i) + G().simple_root(j));
    for (const auto& a : lam)
      for (const auto& b : lam) {
        if (!(fgl_mult(r, chern_mult(r, a), chern_mult(r, b)) == chern_mult(r, a + b)))
          return fail("fgl", "F_m fails for " + str(a) + ", " + str(b));
        if (!(fgl_hyp(r, embed_hyperbolic_chern(r, a), embed_hyperbolic_chern(r, b)) == embed_hyperbolic_chern(r, a + b)))
          return fail("fgl", "F_h fails for " + str(a) + ", " + str(b));
      }
    for (const auto& a : lam)
      if (!(hyperbolic_to_mult(r, embed_hyperbolic_chern(r, a)) == chern_mult(r, a)))
        return fail("fgl", "g(x^h) != x^m for " + str(a));
    return ok("fgl", std::to_string(lam.size() * lam.size()) + " pairs");
  }

  CheckResult tau() {
    const auto& H = hecke();
    const V c = ring().t_power(-1) - ring().t_power(1);
    for (int i = 1; i <= rank(); ++i) {
      const Elem ti = H.tau(i);
      if (!(ti * ti == c * ti + H.unit())) return fail("tau", "quadratic relation fails for i=" + std::to_string(i));
      for (int j = i + 1; j <= rank(); ++j) {
        const Elem tj = H.tau(j);
        const bool good = j == i + 1 ? ti * tj * ti == tj * ti * tj : ti * tj == tj * ti;
        if (!good) return fail("tau", "braid relation fails for i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
    for (int i = 1; i <= rank(); ++i)
      if (!(H.tau(i) + H.scalar(ring().t_power(1)) == H.gamma(G().simple(i), Sign::plus)))
        return fail("tau", "tau_i + t != gamma^+_i");
    return ok("tau", "quadratic and braid relations");
  }

  CheckResult gamma_annihilation() {
    for (int j = 1; j <= rank(); ++j)
      if (!(hecke().gamma_simple(j, Sign::minus) * hecke().gamma_simple(j, Sign::plus)).is_zero())
        return fail("gamma-annihilation", "gamma^-_j gamma^+_j != 0 for j=" + std::to_string(j));
    return ok("gamma-annihilation", "all simple j");
  }

  /// (gamma^+_w gamma^-_{u^-1 w0})|_{w0} = delta_{w,u} a_{w0}
  CheckResult klcom() {
    const auto& H = hecke();
    const ElemId w0 = G().longest();
    const V a = H.a_w0();
    auto pairs = pair_list(rank() <= 2 ? 0 : samples(50));
    for (const auto& [w, u] : pairs) {
      const V v = (H.gamma(w, Sign::plus) * H.gamma(G().mul(G().inverse(u), w0), Sign::minus)).at(w0);
      if (!(v == (w == u ? a : ring().zero())))
        return fail("klcom", "pair (" + el(w) + ", " + el(u) + ") gives " + describe(ring(), v));
    }
    std::string d = std::to_string(pairs.size()) + " pairs";
    if (rank() <= 2) d += "; pairing value " + describe(ring(), kdual_scalar(ring()));
    return ok("klcom", d);
  }

  CheckResult pdual() {
    const auto rep = verify_pdual(c_->kl());
    return rep.ok ? ok("pdual", "all pairs") : fail("pdual", rep.witness);
  }

  /// Full pairing, or the parabolic one when J is given.
  CheckResult kdual() {
    const auto& H = hecke();
    const V K = kdual_scalar(ring());
    if (opt_.J) {
      const auto m = kdual_matrix(H, opt_.J);
      if (auto bad = check_diagonal(m, K)) return fail("kdual", "J=" + opt_.J->to_string() + ": " + *bad);
      return ok("kdual", "J=" + opt_.J->to_string() + " " + std::to_string(m.rows.size()) + "x" + std::to_string(m.rows.size()));
    }
    const auto pairs = pair_list(rank() <= 2 ? 0 : samples(50));
    for (const auto& [w, v] : pairs) {
      const Class e = kdual_entry(H, w, v);
      const Class expect = w == v ? K * Class::unit(ring(), Theory::multiplicative) : Class(ring(), Theory::multiplicative);
      if (!(e == expect)) return fail("kdual", "pair (" + el(w) + ", " + el(v) + ")");
    }
    return ok("kdual", std::to_string(pairs.size()) + " pairs");
  }

  /// a_{w0} delta_{w0} . pt_{w0} = prod (t - t^-1 e^-alpha) f_e
  CheckResult w0act() {
    const auto& H = hecke();
    const auto th = Theory::multiplicative;
    const Class lhs = bullet(H.a_w0() * H.delta(G().longest()), point_class(ring(), G().longest(), th));
    const Class rhs = kdual_scalar(ring()) * Class::basis(ring(), th, G().identity());
    return lhs == rhs ? ok("w0act", "") : fail("w0act", "mismatch");
  }

  CheckResult actions() {
    const auto th = Theory::multiplicative;
    for (int k = 0; k < samples(10); ++k) {
      const Elem z1 = random_twisted(ring(), rng_), z2 = random_twisted(ring(), rng_);
      const Class f = random_class(ring(), rng_, th);
      if (!(bullet(z1, odot(z2, f)) == odot(z2, bullet(z1, f)))) return fail("actions", "the two actions do not commute");
      if (!(bullet(z1 * z2, f) == bullet(z1, bullet(z2, f)))) return fail("actions", "bullet is not a left action");
      if (!(odot(z1 * z2, f) == odot(z1, odot(z2, f)))) return fail("actions", "odot is not a left action");
    }
    return ok("actions", std::to_string(samples(10)) + " random triples");
  }

  CheckResult iota() {
    const auto& H = hecke();
    for (int k = 0; k < samples(10); ++k) {
      const Elem z1 = random_twisted(ring(), rng_), z2 = random_twisted(ring(), rng_);
      if (!(H.iota(H.iota(z1)) == z1)) return fail("iota", "iota is not an involution");
      if (!(H.iota(z1 * z2) == H.iota(z2) * H.iota(z1))) return fail("iota", "iota is not an anti-homomorphism");
    }
    for (const auto& J : proper_parabolics()) {
      const Elem Y = H.push_pull(J, PushPull::full, Theory::multiplicative);
      if (!(H.iota(Y) == Y)) return fail("iota", "iota(Y_J) != Y_J for J=" + J.to_string());
    }
    return ok("iota", "");
  }

  /// z . pt_e = iota(z) (.) pt_e;  Y_Pi((z . f) g) = Y_Pi(f (iota(z) . g));  Y_J (.) pt_e = Y_J . pt_e
  CheckResult inv() {
    const auto& H = hecke();
    const auto th = Theory::multiplicative;
    const Class pte = point_class(ring(), G().identity(), th);
    std::vector<Elem> gens{H.unit()};
    for (int i = 1; i <= rank(); ++i) {
      gens.push_back(H.tau(i));
      gens.push_back(H.delta(G().simple(i)));
    }
    for (int k = 0; k < samples(3); ++k) gens.push_back(random_twisted(ring(), rng_));
    const auto Pi = ParabolicSubset::full(rank());
    for (const Elem& z : gens) {
      if (!(bullet(z, pte) == odot(H.iota(z), pte))) return fail("inv", "z . pt_e != iota(z) (.) pt_e");
      const Class f = random_class(ring(), rng_, th), g = random_class(ring(), rng_, th);
      if (!(pushforward(H, bullet(z, f) * g, Pi, Pushforward::to_point) ==
            pushforward(H, f * bullet(H.iota(z), g), Pi, Pushforward::to_point)))
        return fail("inv", "adjunction of iota fails");
    }
    for (const auto& J : proper_parabolics()) {
      const Elem Y = H.push_pull(J, PushPull::full, th);
      if (!(odot(Y, pte) == bullet(Y, pte))) return fail("inv", "Y_J (.) pt_e != Y_J . pt_e for J=" + J.to_string());
    }
    return ok("inv", std::to_string(gens.size()) + " elements");
  }

  /// Y_J . (f g) = f (Y_J . g) for W_J-invariant f; Y_J . h is invariant.
  CheckResult projection() {
    const auto& H = hecke();
    const auto th = Theory::multiplicative;
    for (const auto& J : proper_parabolics()) {
      for (int k = 0; k < samples(3); ++k) {
        const Class f = pushforward(H, random_class(ring(), rng_, th), J, Pushforward::to_parabolic);
        if (!is_invariant(f, J)) return fail("projection", "Y_J . f is not W_J-invariant, J=" + J.to_string());
        if (!invariant_coordinates(f, J)) return fail("projection", "Y_J . f outside the span of g_w, J=" + J.to_string());
        const Class g = random_class(ring(), rng_, th);
        if (!(pushforward(H, f * g, J, Pushforward::to_parabolic) == f * pushforward(H, g, J, Pushforward::to_parabolic)))
          return fail("projection", "projection formula fails, J=" + J.to_string());
      }
      const Class p = pushforward(H, random_class(ring(), rng_, th), J, Pushforward::to_point);
      if (!p.is_constant()) return fail("projection", "push-forward to a point is not a multiple of the unit");
    }
    return ok("projection", "");
  }

  /// Y_{Pi/J} Y_J = Y_Pi, and independence of the coset representatives on invariants.
  CheckResult comp() {
    const auto& H = hecke();
    for (Theory th : {Theory::multiplicative, Theory::hyperbolic}) {
      const Elem YPi = H.push_pull(ParabolicSubset::full(rank()), PushPull::full, th);
      for (const auto& J : proper_parabolics()) {
        if (!(H.push_pull(J, PushPull::relative, th) * H.push_pull(J, PushPull::full, th) == YPi))
          return fail("comp", "Y_{Pi/J} Y_J != Y_Pi for J=" + J.to_string() + " theory " + theory_name(th));
        // other representatives: the longest element of each coset
        const CosetData cd = G().coset_data(J);
        std::vector<ElemId> reps;
        for (ElemId u : cd.min_left) reps.push_back(G().mul(u, cd.longest));
        const Class f = pushforward(H, random_scalar(ring(), rng_, false) * Class::basis(ring(), th, G().random_element(rng_)), J,
                                    Pushforward::to_parabolic);
        if (!(bullet(H.push_pull_relative(J, reps, th), f) == bullet(H.push_pull(J, PushPull::relative, th), f)))
          return fail("comp", "Y_{Pi/J} depends on the representatives, J=" + J.to_string());
      }
    }
    return ok("comp", "");
  }

  /// Non-FC gamma^- killed by gamma^+_wJ; coset representatives agree with the hat basis.
  CheckResult grassmannian(const ParabolicSubset& J) {
    require_maximal(J);
    const auto& H = hecke();
    const CosetData cd = G().coset_data(J);
    const Elem gJ = H.gamma(cd.longest, Sign::plus);
    int killed = 0;
    for (ElemId w = 0; w < G().size(); ++w)
      if (!G().is_fully_commutative(w)) {
        if (!(H.gamma(w, Sign::minus) * gJ).is_zero()) return fail("grassmannian", "gamma^-_w gamma^+_wJ != 0 at w=" + el(w));
        ++killed;
      }
    for (ElemId u : cd.min_left)
      if (!(H.gamma(u, Sign::minus) * gJ == H.gamma_hat(G().canonical_word(u), Sign::minus) * gJ))
        return fail("grassmannian", "gamma^-_u gamma^+_wJ != gamma-hat^-_{I_u} gamma^+_wJ at u=" + el(u));
    return ok("grassmannian", std::to_string(killed) + " non-FC elements annihilated, " + std::to_string(cd.min_left.size()) +
                                  " coset representatives");
  }

  /// b-hat^m_{w,I_u} = b^m_{w,u}, u in W^J.
  CheckResult lemma_b(const ParabolicSubset& J) {
    require_maximal(J);
    const auto& H = hecke();
    const auto words = G().j_compatible_words(J);
    const CosetData cd = G().coset_data(J);
    for (ElemId w = 0; w < G().size(); ++w) {
      const auto plain = H.expand(H.delta(w), Basis::gamma_minus);
      const auto hat = H.expand(H.delta(w), Basis::gamma_hat_minus, &words);
      for (ElemId u : cd.min_left)
        if (!(get(plain, u) == get(hat, u))) return fail("lemma-b", "w=" + el(w) + " u=" + el(u));
    }
    return ok("lemma-b", std::to_string(G().size() * cd.min_left.size()) + " pairs");
  }

  /// p(gamma^-_w) = p(gamma-hat^-_{I_w}) for fully commutative w.
  CheckResult fan_green() {
    const auto& H = hecke();
    int n = 0;
    for (ElemId w = 0; w < G().size(); ++w) {
      if (!G().is_fully_commutative(w)) continue;
      const Elem diff = H.gamma(w, Sign::minus) - H.gamma_hat(G().canonical_word(w), Sign::minus);
      for (const auto& [u, a] : H.expand(diff, Basis::gamma_minus))
        if (G().is_fully_commutative(u)) return fail("fan-green", "w=" + el(w) + " leaves a fully commutative term at " + el(u));
      ++n;
    }
    return ok("fan-green", std::to_string(n) + " fully commutative elements");
  }

  /// The projection to TL is multiplicative; E_i^2 = -mu E_i.
  CheckResult tl_product() {
    const auto& H = hecke();
    const auto& TL = c_->temperley_lieb();
    for (int i = 1; i <= rank(); ++i) {
      const Elem g = H.gamma_simple(i, Sign::minus);
      auto lhs = H.tl_project(g * g);
      auto rhs = H.tl_project(g);
      for (auto& [w, a] : rhs) a = -mu(ring()) * a;
      if (!same(lhs, rhs)) return fail("tl-product", "(gamma^-_i)^2 != -mu gamma^-_i in TL");
    }
    for (int k = 0; k < samples(20); ++k) {
      const Elem z1 = random_hecke(H, rng_), z2 = random_hecke(H, rng_);
      const auto lhs = H.tl_project(z1 * z2);
      const auto rhs = TL.multiply(ring(), H.tl_project(z1), H.tl_project(z2));
      if (!same(lhs, rhs)) return fail("tl-product", "projection of a product differs from the E-word product");
    }
    return ok("tl-product", std::to_string(samples(20)) + " random pairs");
  }

  CheckResult x_operators() {
    const R& r = ring();
    const V m2 = mu_power(r, -2);
    for (int i = 1; i <= rank(); ++i) {
      const Elem X = op_X(r, i), Y = op_Y(r, i);
      if (!(X * X == -X)) return fail("x-operators", "X_i^2 != -X_i for i=" + std::to_string(i));
      if (!(Y * Y == Y)) return fail("x-operators", "Y_i^2 != Y_i for i=" + std::to_string(i));
      for (int j = 1; j <= rank(); ++j) {
        if (i == j) continue;
        const Elem Xj = op_X(r, j);
        if (std::abs(i - j) == 1) {
          if (!(Xj * X * Xj - X * Xj * X == m2 * (Xj - X)))
            return fail("x-operators", "twisted braid relation fails for i=" + std::to_string(i) + " j=" + std::to_string(j));
        } else if (!(X * Xj == Xj * X))
          return fail("x-operators", "X_i X_j != X_j X_i for i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
    return ok("x-operators", "");
  }

  CheckResult psi_identities() {
    const auto& H = hecke();
    const R& r = ring();
    const V m = mu(r);
    const Elem t = Elem::scalar(r, r.t_power(1), Theory::hyperbolic);
    for (int i = 1; i <= rank(); ++i) {
      if (!(psi(H.tau(i)) == m * op_Y(r, i) - t)) return fail("psi", "psi(tau_i) != mu Y_i - t for i=" + std::to_string(i));
      if (!(psi(H.gamma_simple(i, Sign::plus)) == m * op_Y(r, i))) return fail("psi", "psi(gamma^+_i) != mu Y_i");
      if (!(psi(H.gamma_simple(i, Sign::minus)) == m * op_X(r, i))) return fail("psi", "psi(gamma^-_i) != mu X_i");
      for (int j = 1; j <= rank(); ++j)
        if (!(psi(H.tau(i) * H.tau(j)) == psi(H.tau(i)) * psi(H.tau(j)))) return fail("psi", "psi is not multiplicative");
    }
    for (ElemId u = 0; u < G().size(); ++u) {
      const Word& I = G().canonical_word(u);
      if (!(psi(H.gamma_hat(I, Sign::minus)) == c_->hyperbolic().mu_of(u) * op_X_word(r, I)))
        return fail("psi", "psi(gamma-hat^-_{I_u}) != mu_u X_{I_u} at u=" + el(u));
    }
    return ok("psi", "");
  }

  /// C/C~ and C/dual pairings; mu_w psi(gamma^-_w)^* = C~_w.
  CheckResult hyper() {
    const auto& hyp = c_->hyperbolic();
    const auto& H = hecke();
    const auto unit = Class::unit(ring(), Theory::hyperbolic);
    const Class zero(ring(), Theory::hyperbolic);
    std::vector<ElemId> elems = element_list(rank() <= 2 ? 0 : samples(10));
    std::vector<Class> C, Ct, D;
    for (ElemId w : elems) {
      C.push_back(hyp.c(w));
      Ct.push_back(hyp.ctilde(w));
      D.push_back(hyp.dual(w));
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!(hyp.mu_of(elems[i]) * D[i] == Ct[i])) return fail("hyper", "mu_w psi(gamma^-_w)^* != C~_w at w=" + el(elems[i]));
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const bool diag = i == j;
        if (!(hyperbolic_pairing(H, C[i], Ct[j], std::nullopt) == (diag ? unit : zero)))
          return fail("hyper", "C/C~ pairing wrong at (" + el(elems[i]) + ", " + el(elems[j]) + ")");
        const Class expect2 = diag ? mu_power(ring(), -G().length(elems[i])) * unit : zero;
        if (!(hyperbolic_pairing(H, C[i], D[j], std::nullopt) == expect2))
          return fail("hyper", "C/dual pairing wrong at (" + el(elems[i]) + ", " + el(elems[j]) + ")");
      }
    }
    return ok("hyper", std::to_string(elems.size()) + "x" + std::to_string(elems.size()) + " pairings");
  }

  /// C^J / C~^J pairing over W^J is the identity.
  CheckResult hypergp(const ParabolicSubset& J) {
    require_maximal(J);
    const auto& hyp = c_->hyperbolic();
    const auto& H = hecke();
    const auto unit = Class::unit(ring(), Theory::hyperbolic);
    const Class zero(ring(), Theory::hyperbolic);
    const auto reps = G().coset_data(J).min_left;
    std::vector<Class> C, Ct;
    for (ElemId w : reps) {
      C.push_back(hyp.c_parabolic(w, J));
      Ct.push_back(hyp.ctilde_parabolic(w, J));
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        if (!(hyperbolic_pairing(H, C[i], Ct[j], J) == (i == j ? unit : zero)))
          return fail("hypergp", "pairing wrong at (" + el(reps[i]) + ", " + el(reps[j]) + ")");
    return ok("hypergp", std::to_string(reps.size()) + "x" + std::to_string(reps.size()));
  }

  /// Bott-Samelson form of C^J, W_J-invariance of C~^J, psi(gamma^+_{wJ}) = mu_{wJ} Y_J, b^h_{wv,u} = b^h_{w,u}.
  CheckResult wj(const ParabolicSubset& J) {
    require_maximal(J);
    const auto& hyp = c_->hyperbolic();
    const auto& H = hecke();
    const R& r = ring();
    const CosetData cd = G().coset_data(J);
    const auto th = Theory::hyperbolic;
    if (!(psi(H.gamma(cd.longest, Sign::plus)) == hyp.mu_of(cd.longest) * H.push_pull(J, PushPull::full, th)))
      return fail("wj", "psi(gamma^+_wJ) != mu_wJ Y_J");
    for (ElemId w : cd.min_left) {
      const Class bs = pushforward(H, odot(op_X_word(r, G().canonical_word(w)), point_class(r, G().identity(), th)), J,
                                   Pushforward::to_parabolic);
      if (!(hyp.c_parabolic(w, J) == bs)) return fail("wj", "C^J_w is not the Bott-Samelson class at w=" + el(w));
      if (!is_invariant(hyp.ctilde_parabolic(w, J), J)) return fail("wj", "C~^J_u is not W_J-invariant at u=" + el(w));
    }
    for (ElemId w = 0; w < G().size(); ++w) {
      const auto row = hyp.b_row(w, Basis::gamma_minus, nullptr);
      for (ElemId v : cd.parabolic) {
        const auto row2 = hyp.b_row(G().mul(w, v), Basis::gamma_minus, nullptr);
        for (ElemId u : cd.min_left)
          if (!(get(row, u) == get(row2, u))) return fail("wj", "b^h_{wv,u} != b^h_{w,u}");
      }
    }
    return ok("wj", "");
  }

  /// R_I is the same for every reduced word I of w.
  CheckResult root_independence() {
    const R& r = ring();
    int words = 0;
    for (const auto& J : maximal_or_empty()) {
      const auto& rw = c_->rewriter(J);
      for (ElemId w = 0; w < G().size(); ++w) {
        const auto all = reduced_words(w);
        const auto ref = root_polynomial(r, rw, all.front());
        for (std::size_t k = 1; k < all.size(); ++k, ++words)
          if (!(root_polynomial(r, rw, all[k]) == ref))
            return fail("root-independence", "w=" + el(w) + " words " + word_to_string(all.front()) + " and " + word_to_string(all[k]));
      }
    }
    return ok("root-independence", std::to_string(words) + " alternative words");
  }

  /// C~^J_u|_w = mu_u b-hat^h_{w,I_u} (triangular solve), and the root-polynomial coefficient b-hat' equals it.
  CheckResult billey_restriction(const ParabolicSubset& J) {
    require_maximal(J);
    const auto& hyp = c_->hyperbolic();
    const auto& rw = c_->rewriter(J);
    const auto words = G().j_compatible_words(J);
    const CosetData cd = G().coset_data(J);
    int n = 0;
    for (ElemId u : cd.min_left) {
      const Class ct = hyp.ctilde_parabolic(u, J);
      for (ElemId w = 0; w < G().size(); ++w, ++n) {
        const V res = hyp.mu_of(u) * hyp.b_coefficient(w, u, Basis::gamma_hat_minus, &words);
        if (!(ct[w] == res)) return fail("billey-restriction", "C~^J_u|_w != mu_u b-hat^h at u=" + el(u) + " w=" + el(w));
        const V bp = billey_coefficient(ring(), rw, w, u, J);
        if (!(bp == res)) return fail("billey-restriction", "b-hat' != mu_u b-hat^h at u=" + el(u) + " w=" + el(w));
      }
    }
    return ok("billey-restriction", std::to_string(n) + " pairs: C~^J_u|_w = mu_u b-hat^h = b-hat'");
  }

  /// b-hat'^h_{w,I_u} = b-hat^h_{w,I_u} as stated.
  CheckResult billey_oracle(const ParabolicSubset& J) {
    require_maximal(J);
    const auto& hyp = c_->hyperbolic();
    const auto& rw = c_->rewriter(J);
    const auto words = G().j_compatible_words(J);
    int n = 0, bad = 0, scaled = 0;
    std::string first;
    for (ElemId u : G().coset_data(J).min_left)
      for (ElemId w = 0; w < G().size(); ++w, ++n) {
        const V bp = billey_coefficient(ring(), rw, w, u, J);
        const V bh = hyp.b_coefficient(w, u, Basis::gamma_hat_minus, &words);
        if (bp == bh) continue;
        ++bad;
        if (bp == hyp.mu_of(u) * bh) ++scaled;
        if (first.empty()) first = "first at w=" + el(w) + " u=" + el(u);
      }
    if (bad == 0) return ok("billey-oracle", std::to_string(n) + " pairs");
    return fail("billey-oracle", std::to_string(bad) + "/" + std::to_string(n) + " pairs differ (" + first + "); " +
                                     std::to_string(scaled) + " of them satisfy b-hat' = mu_u b-hat^h");
  }

 private:
  const WeylGroup& G() const { return c_->group(); }
  const R& ring() const { return c_->ring(); }
  const HeckeAlgebra<R>& hecke() const { return c_->hecke(); }
  int rank() const { return G().rank(); }
  int samples(int dflt) const { return opt_.samples > 0 ? opt_.samples : dflt; }
  std::string el(ElemId w) const { return G().element(w).to_string(); }
  static std::string str(const LatticeVector& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
  static CheckResult ok(std::string name, std::string detail) { return {std::move(name), true, std::move(detail)}; }
  static CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

  V get(const std::map<ElemId, V>& m, ElemId k) const {
    auto it = m.find(k);
    return it == m.end() ? ring().zero() : it->second;
  }
  bool same(const std::map<ElemId, V>& a, const std::map<ElemId, V>& b) const {
    for (const auto& [k, v] : a)
      if (!(v == get(b, k))) return false;
    for (const auto& [k, v] : b)
      if (!(v == get(a, k))) return false;
    return true;
  }

  /// All ordered pairs, or `n` random ones.
  std::vector<std::pair<ElemId, ElemId>> pair_list(int n) {
    std::vector<std::pair<ElemId, ElemId>> out;
    if (n == 0) {
      for (ElemId w = 0; w < G().size(); ++w)
        for (ElemId u = 0; u < G().size(); ++u) out.emplace_back(w, u);
      return out;
    }
    for (int k = 0; k < n; ++k) {
      const ElemId w = G().random_element(rng_);
      // half of the samples on the diagonal
      out.emplace_back(w, k % 2 ? w : G().random_element(rng_));
    }
    return out;
  }
  std::vector<ElemId> element_list(int n) {
    std::vector<ElemId> out;
    if (n == 0 || static_cast<std::size_t>(n) >= G().size()) {
      for (ElemId w = 0; w < G().size(); ++w) out.push_back(w);
      return out;
    }
    std::vector<ElemId> all(G().size());
    std::iota(all.begin(), all.end(), ElemId{0});
    std::shuffle(all.begin(), all.end(), rng_);
    out.assign(all.begin(), all.begin() + n);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ParabolicSubset> proper_parabolics() const {
    if (opt_.J) return {*opt_.J};
    std::vector<ParabolicSubset> out;
    for (int i = 1; i <= rank(); ++i) out.emplace_back(rank(), std::vector<int>{i});
    for (const auto& J : maximal_parabolics(rank()))
      if (J.size() > 1) out.push_back(J);
    return out;
  }
  std::vector<ParabolicSubset> maximal_or_empty() const {
    if (opt_.J) return {*opt_.J};
    return maximal_parabolics(rank());
  }

  CheckResult per_maximal(const std::string& name, const std::function<CheckResult(const ParabolicSubset&)>& f) {
    std::string detail;
    for (const auto& J : maximal_or_empty()) {
      CheckResult r = f(J);
      if (!r.pass) return fail(name, "J=" + J.to_string() + ": " + r.detail);
      detail += (detail.empty() ? "" : "; ") + ("J=" + J.to_string() + ": " + r.detail);
    }
    return ok(name, detail);
  }

  std::vector<Word> reduced_words(ElemId w) const {
    std::vector<Word> out;
    std::set<Word> seen{G().canonical_word(w)};
    std::deque<Word> q{G().canonical_word(w)};
    while (!q.empty()) {
      Word cur = q.front();
      q.pop_front();
      out.push_back(cur);
      for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
        Word next = cur;
        if (std::abs(cur[k] - cur[k + 1]) > 1) std::swap(next[k], next[k + 1]);
        else if (std::abs(cur[k] - cur[k + 1]) == 1 && k + 2 < cur.size() && cur[k + 2] == cur[k]) {
          next[k] = cur[k + 1];
          next[k + 1] = cur[k];
          next[k + 2] = cur[k + 1];
        } else continue;
        if (seen.insert(next).second) q.push_back(next);
      }
    }
    return out;
  }

  const Context<R>* c_;
  CheckOptions opt_;
  std::mt19937_64 rng_;
};

}  // namespace klschubert
