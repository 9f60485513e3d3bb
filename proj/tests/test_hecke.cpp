#include "catch_amalgamated.hpp"

#include <random>

#include "klschubert/klschubert.hpp"

using namespace klschubert;

namespace {

using Ctx = Context<ExactRing>;
using Elem = TwistedElement<ExactRing>;

void require_pass(Ctx& ctx, const std::string& name, CheckOptions opt = {}) {
  Checker<ExactRing> ch(ctx, std::move(opt));
  const auto r = ch.run(name);
  INFO(r.name << ": " << r.detail);
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("tau generators satisfy the Hecke relations", "[hecke]") {
  for (int rank = 1; rank <= 3; ++rank) {
    Ctx ctx(rank);
    const auto& H = ctx.hecke();
    const auto& r = ctx.ring();
    for (int i = 1; i <= rank; ++i) {
      const Elem ti = H.tau(i);
      CHECK(ti * ti == H.scalar(r.t_power(-1) - r.t_power(1)) * ti + H.unit());
      for (int j = i + 1; j <= rank; ++j) {
        const Elem tj = H.tau(j);
        if (j == i + 1) CHECK(ti * tj * ti == tj * ti * tj);
        else CHECK(ti * tj == tj * ti);
      }
    }
  }
}

TEST_CASE("tau_w does not depend on the reduced word", "[hecke]") {
  Ctx ctx(3);
  const auto& H = ctx.hecke();
  const auto& G = ctx.group();
  // the braid-move orbit of the canonical word
  for (ElemId w = 0; w < G.size(); ++w) {
    std::set<Word> seen{G.canonical_word(w)};
    std::vector<Word> todo{G.canonical_word(w)};
    while (!todo.empty()) {
      Word cur = todo.back();
      todo.pop_back();
      Elem prod = H.unit();
      for (int i : cur) prod = prod * H.tau(i);
      CHECK(prod == H.tau_element(w));
      for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
        Word nx = cur;
        if (std::abs(cur[k] - cur[k + 1]) > 1) std::swap(nx[k], nx[k + 1]);
        else if (k + 2 < cur.size() && cur[k + 2] == cur[k] && std::abs(cur[k] - cur[k + 1]) == 1) {
          nx[k] = nx[k + 2] = cur[k + 1];
          nx[k + 1] = cur[k];
        } else continue;
        if (seen.insert(nx).second) todo.push_back(nx);
      }
    }
  }
}

TEST_CASE("simple gammas", "[hecke]") {
  Ctx ctx(2);
  const auto& H = ctx.hecke();
  const auto& r = ctx.ring();
  const auto& G = ctx.group();
  const auto a = G.simple_root(1);
  const auto c = (r.t_power(-1) - r.t_power(1) * r.exponential(-a)) / chern_mult(r, a);
  const Elem expected = (H.delta(G.simple(1)) + H.unit()) * H.scalar(c);
  CHECK(H.gamma(G.simple(1), Sign::plus) == expected);
  CHECK(H.gamma_simple(1, Sign::plus) == H.tau(1) + H.scalar(r.t_power(1)));
  CHECK(H.gamma_simple(1, Sign::minus) == H.tau(1) - H.scalar(r.t_power(-1)));
  CHECK(H.gamma(G.simple(2), Sign::minus) == H.gamma_simple(2, Sign::minus));
  CHECK(H.gamma_hat({1, 2}, Sign::minus) == H.gamma(G.element_of_word({1, 2}), Sign::minus));
  CHECK(H.gamma(G.longest(), Sign::minus) == H.gamma_hat({1, 2, 1}, Sign::minus) - H.gamma(G.simple(1), Sign::minus));
  CHECK(H.gamma(G.identity(), Sign::plus) == H.unit());
}

TEST_CASE("KL bases satisfy the KL multiplication rule", "[hecke][oracle]") {
  // gamma_s gamma_w = gamma_{sw} + sum_{z<w, sz<z} mu(z,w) gamma_z     (sw > w)
  // gamma^-_s gamma^-_w = -mu gamma^-_w, gamma^+_s gamma^+_w = mu gamma^+_w   (sw < w)
  for (int rank = 2; rank <= 3; ++rank) {
    Ctx ctx(rank);
    const auto& H = ctx.hecke();
    const auto& G = ctx.group();
    const auto& K = ctx.kl();
    const auto m = mu(ctx.ring());
    for (Sign sg : {Sign::minus, Sign::plus})
      for (int i = 1; i <= rank; ++i) {
        const Elem gs = H.gamma_simple(i, sg);
        for (ElemId w = 0; w < G.size(); ++w) {
          INFO("s" << i << " w=" << G.element(w).to_string() << (sg == Sign::plus ? " +" : " -"));
          const ElemId sw = G.mul(G.simple(i), w);
          Elem expect = H.gamma(sw, sg);
          if (G.length(sw) < G.length(w)) {
            expect = H.scalar(sg == Sign::plus ? m : -m) * H.gamma(w, sg);
          } else {
            for (ElemId z = 0; z < G.size(); ++z)
              if (z != w && G.bruhat_leq(z, w) && G.is_left_descent(z, i) && K.mu(z, w))
                expect += H.scalar(ctx.ring().integer(K.mu(z, w))) * H.gamma(z, sg);
          }
          CHECK(gs * H.gamma(w, sg) == expect);
        }
      }
  }
}

TEST_CASE("gamma bases lie in the Hecke algebra", "[hecke]") {
  Ctx ctx(2);
  const auto& H = ctx.hecke();
  for (ElemId w = 0; w < ctx.group().size(); ++w) {
    CHECK(H.in_hecke(H.gamma(w, Sign::minus)));
    CHECK(H.in_hecke(H.gamma(w, Sign::plus)));
  }
  CHECK_FALSE(H.in_hecke(H.delta(ctx.group().simple(1))));
}

TEST_CASE("gamma^- gamma^+ annihilation", "[hecke]") {
  for (int rank = 1; rank <= 4; ++rank) {
    Ctx ctx(rank);
    const auto& H = ctx.hecke();
    for (int j = 1; j <= rank; ++j) CHECK((H.gamma_simple(j, Sign::minus) * H.gamma_simple(j, Sign::plus)).is_zero());
  }
}

TEST_CASE("anti-involution i", "[hecke]") {
  Ctx ctx(2);
  const auto& H = ctx.hecke();
  const auto& G = ctx.group();
  CHECK(H.anti_involution_i(H.tau(1)) == H.tau(1));
  CHECK(H.anti_involution_i(H.tau(1) * H.tau(2)) == H.tau(2) * H.tau(1));
  for (ElemId w = 0; w < G.size(); ++w)
    CHECK(H.anti_involution_i(H.gamma(w, Sign::minus)) == H.gamma(G.inverse(w), Sign::minus));
  CHECK_THROWS_AS(H.anti_involution_i(H.delta(G.simple(1))), NotInHeckeAlgebra);
}

TEST_CASE("iota is an anti-automorphism fixing Y_J", "[hecke][property]") {
  Ctx ctx(2);
  const auto& H = ctx.hecke();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    const Elem a = random_twisted(ctx.ring(), rng), b = random_twisted(ctx.ring(), rng);
    CHECK(H.iota(H.iota(a)) == a);
    CHECK(H.iota(a * b) == H.iota(b) * H.iota(a));
  }
  for (const auto& J : {ParabolicSubset(2, {1}), ParabolicSubset(2, {2}), ParabolicSubset::full(2)}) {
    const Elem Y = H.push_pull(J, PushPull::full, Theory::multiplicative);
    CHECK(H.iota(Y) == Y);
  }
  require_pass(ctx, "iota");
}

TEST_CASE("push-pull elements", "[hecke]") {
  for (int rank = 2; rank <= 3; ++rank) {
    Ctx ctx(rank);
    const auto& H = ctx.hecke();
    CHECK(H.push_pull(ParabolicSubset::empty(rank), PushPull::full, Theory::multiplicative) == H.unit());
    // idempotent in the multiplicative theory; hyperbolically only for a single root
    const Elem Y = H.push_pull(ParabolicSubset(rank, {1, 2}), PushPull::full, Theory::multiplicative);
    CHECK(Y * Y == Y);
    const Elem Yh = H.push_pull(ParabolicSubset(rank, {2}), PushPull::full, Theory::hyperbolic);
    CHECK(Yh * Yh == Yh);
    // gamma^+_{w_J} lies in the left ideal Y_J Q_W: Y_J is idempotent, so Y_J gamma = gamma
    const ParabolicSubset J(rank, rank == 2 ? std::vector<int>{1} : std::vector<int>{1, 2});
    const Elem g = H.gamma(ctx.group().coset_data(J).longest, Sign::plus);
    CHECK(H.push_pull(J, PushPull::full, Theory::multiplicative) * g == g);
  }
  Ctx ctx(2);
  require_pass(ctx, "comp");
}

TEST_CASE("basis expansions", "[hecke]") {
  Ctx ctx(3);
  const auto& H = ctx.hecke();
  const auto& G = ctx.group();
  const auto e = H.expand(H.delta(G.identity()), Basis::gamma_minus);
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->first == G.identity());
  CHECK(e.begin()->second.is_one());
  for (ElemId w = 0; w < G.size(); ++w)
    for (Basis b : {Basis::gamma_minus, Basis::gamma_plus, Basis::tau})
      for (const auto& [u, c] : H.expand(H.delta(w), b)) CHECK(G.bruhat_leq(u, w));

  Ctx small(2);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    const Elem z = random_twisted(small.ring(), rng);
    for (Basis b : {Basis::gamma_minus, Basis::gamma_plus, Basis::tau, Basis::gamma_hat_minus})
      CHECK(small.hecke().recombine(small.hecke().expand(z, b), b) == z);
  }
}

TEST_CASE("right factors", "[hecke]") {
  Ctx ctx(2);
  const auto& H = ctx.hecke();
  const auto& G = ctx.group();
  const Elem g12 = H.gamma(G.element_of_word({1, 2}), Sign::minus);
  const Elem g2 = H.gamma(G.simple(2), Sign::minus), g1 = H.gamma(G.simple(1), Sign::minus);
  const auto z = H.solve_right_factor(g12, g2);
  REQUIRE(z);
  CHECK(*z * g2 == g12);
  CHECK_FALSE(H.solve_right_factor(g2, g1));
}

TEST_CASE("Temperley-Lieb projection", "[hecke]") {
  Ctx ctx(2);
  const auto& H = ctx.hecke();
  const auto& G = ctx.group();
  CHECK(H.tl_project(H.gamma(G.longest(), Sign::minus)).empty());
  const auto p = H.tl_project(H.gamma_hat({1, 2, 1}, Sign::minus));
  REQUIRE(p.size() == 1);
  CHECK(p.begin()->first == G.simple(1));
  CHECK(p.begin()->second.is_one());
  CHECK_THROWS_AS(H.tl_project(H.delta(G.simple(1))), NotInHeckeAlgebra);
  require_pass(ctx, "fan-green");
  require_pass(ctx, "tl-product");
}

TEST_CASE("KL pairing and parabolic identities in A2", "[hecke]") {
  Ctx ctx(2);
  for (const char* n : {"klcom", "gamma-annihilation", "grassmannian", "lemma-b", "tau"}) require_pass(ctx, n);
  const auto& H = ctx.hecke();
  const auto& r = ctx.ring();
  auto expect = r.one();
  for (const auto& b : ctx.group().positive_roots()) expect = expect * (r.t_power(1) - r.t_power(-1) * r.exponential(-b));
  CHECK(H.a_w0() * r.act(ctx.group().longest(), x_full(r, Theory::multiplicative)) == expect);
}
