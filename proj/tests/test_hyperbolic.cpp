#include "catch_amalgamated.hpp"

#include "klschubert/klschubert.hpp"

using namespace klschubert;

namespace {

using Ctx = Context<ExactRing>;
using Elem = TwistedElement<ExactRing>;
using Class = DualClass<ExactRing>;
constexpr auto H_ = Theory::hyperbolic;

void require_pass(Ctx& ctx, const std::string& name, CheckOptions opt = {}) {
  Checker<ExactRing> ch(ctx, std::move(opt));
  const auto r = ch.run(name);
  INFO(r.name << ": " << r.detail);
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("X and Y operators", "[hyperbolic]") {
  Ctx ctx(3);
  const auto& r = ctx.ring();
  const auto m2 = mu_power(r, -2);
  const Elem X1 = op_X(r, 1), X2 = op_X(r, 2), X3 = op_X(r, 3);
  CHECK(X1 * X1 == -X1);
  CHECK(op_Y(r, 2) * op_Y(r, 2) == op_Y(r, 2));
  CHECK(X1 * X2 * X1 - X2 * X1 * X2 == m2 * (X1 - X2));
  CHECK(X1 * X3 == X3 * X1);
  CHECK(op_X_word(r, {1, 2}) == X1 * X2);
  CHECK(op_X_word(r, {}) == Elem::unit(r, H_));
  require_pass(ctx, "x-operators");
}

TEST_CASE("psi on generators", "[hyperbolic]") {
  Ctx ctx(2);
  const auto& r = ctx.ring();
  const auto& H = ctx.hecke();
  const auto m = mu(r);
  CHECK(psi(H.tau(1)) == m * op_Y(r, 1) - Elem::scalar(r, r.t_power(1), H_));
  CHECK(psi(H.gamma_simple(2, Sign::plus)) == m * op_Y(r, 2));
  CHECK(psi(H.gamma_simple(2, Sign::minus)) == m * op_X(r, 2));
  CHECK(psi(H.gamma_hat({1, 2, 1}, Sign::minus)) == mu_power(r, 3) * op_X_word(r, {1, 2, 1}));
  CHECK_THROWS_AS(psi(op_X(r, 1)), std::invalid_argument);
  require_pass(ctx, "psi");
}

TEST_CASE("psi of gamma^+ on the longest parabolic element", "[hyperbolic]") {
  for (int rank = 2; rank <= 3; ++rank) {
    Ctx ctx(rank);
    const ParabolicSubset J(rank, rank == 2 ? std::vector<int>{1} : std::vector<int>{1, 2});
    const auto& H = ctx.hecke();
    const ElemId wJ = ctx.group().coset_data(J).longest;
    CHECK(psi(H.gamma(wJ, Sign::plus)) == ctx.hyperbolic().mu_of(wJ) * H.push_pull(J, PushPull::full, H_));
  }
}

TEST_CASE("C classes against Bott-Samelson classes in A2", "[hyperbolic][oracle]") {
  Ctx ctx(2);
  const auto& r = ctx.ring();
  const auto& G = ctx.group();
  const auto& hyp = ctx.hyperbolic();
  const Class pte = point_class(r, G.identity(), H_);
  CHECK(hyp.c(G.identity()) == pte);
  for (ElemId w = 0; w < G.size(); ++w) {
    if (w == G.longest()) continue;
    CHECK(hyp.c(w) == odot(op_X_word(r, G.canonical_word(w)), pte));
  }
  const Class c0 = odot(op_X_word(r, {1, 2, 1}), pte) - mu_power(r, -2) * odot(op_X(r, 1), pte);
  CHECK(hyp.c(G.longest()) == c0);
}

TEST_CASE("C-tilde classes and parabolic invariance", "[hyperbolic]") {
  for (int rank = 2; rank <= 3; ++rank) {
    Ctx ctx(rank);
    const auto& G = ctx.group();
    const auto& hyp = ctx.hyperbolic();
    const ParabolicSubset J(rank, rank == 2 ? std::vector<int>{1} : std::vector<int>{1, 2});
    const auto cd = G.coset_data(J);
    CHECK(hyp.ctilde_parabolic(G.identity(), J) == Class::unit(ctx.ring(), H_));
    for (ElemId u : cd.min_left) {
      const Class f = hyp.ctilde_parabolic(u, J);
      CHECK(is_invariant(f, J));
      for (ElemId w = 0; w < G.size(); ++w)
        for (ElemId v : cd.parabolic) CHECK(f[G.mul(w, v)] == f[w]);
    }
    const ElemId not_min = cd.longest;
    CHECK_THROWS_AS(hyp.c_parabolic(not_min, J), std::invalid_argument);
    CHECK_THROWS_AS(hyp.ctilde_parabolic(not_min, J), std::invalid_argument);
  }
}

TEST_CASE("b coefficients", "[hyperbolic]") {
  Ctx ctx(2);
  const auto& G = ctx.group();
  const auto& H = ctx.hecke();
  const auto& hyp = ctx.hyperbolic();
  CHECK(hyp.b_coefficient(G.identity(), G.identity(), Basis::gamma_minus, nullptr).is_one());
  for (ElemId w = 0; w < G.size(); ++w) {
    // the multiplicative expansion has the same coefficients
    const auto bm = H.expand(H.delta(w), Basis::gamma_minus);
    CHECK(bm == hyp.b_row(w, Basis::gamma_minus, nullptr));
    for (const auto& [u, c] : bm) CHECK(G.bruhat_leq(u, w));
  }
  const ParabolicSubset J(2, {1});
  const auto words = G.j_compatible_words(J);
  const auto cd = G.coset_data(J);
  for (ElemId w = 0; w < G.size(); ++w)
    for (ElemId v : cd.parabolic)
      for (ElemId u : cd.min_left)
        CHECK(hyp.b_coefficient(G.mul(w, v), u, Basis::gamma_hat_minus, &words) ==
              hyp.b_coefficient(w, u, Basis::gamma_hat_minus, &words));
}

TEST_CASE("hyperbolic duality", "[hyperbolic]") {
  {
    Ctx ctx(1);
    const auto& G = ctx.group();
    const auto& hyp = ctx.hyperbolic();
    for (ElemId a = 0; a < G.size(); ++a)
      for (ElemId b = 0; b < G.size(); ++b) {
        const Class p = hyperbolic_pairing(ctx.hecke(), hyp.c(a), hyp.ctilde(b), std::nullopt);
        CHECK(p == (a == b ? Class::unit(ctx.ring(), H_) : Class(ctx.ring(), H_)));
      }
  }
  Ctx ctx(2);
  require_pass(ctx, "hyper");
  require_pass(ctx, "hypergp", {ParabolicSubset(2, {1}), 20240601, 0});
  require_pass(ctx, "wj");
  const auto& hyp = ctx.hyperbolic();
  for (ElemId w = 0; w < ctx.group().size(); ++w) CHECK(hyp.mu_of(w) * hyp.dual(w) == hyp.ctilde(w));
  CHECK(hyp.kl_class(ctx.group().simple(1), ClassVariant::dual, std::nullopt) == hyp.dual(ctx.group().simple(1)));
  CHECK_THROWS_AS(hyp.kl_class(0, ClassVariant::c_parabolic, std::nullopt), std::invalid_argument);
  CHECK(parse_variant("ctildej") == ClassVariant::ctilde_parabolic);
  CHECK_THROWS_AS(parse_variant("nope"), std::invalid_argument);
}
