#include "catch_amalgamated.hpp"

#include <random>

#include "klschubert/klschubert.hpp"

using namespace klschubert;

namespace {

using Ctx = Context<ExactRing>;
using Elem = TwistedElement<ExactRing>;
using Class = DualClass<ExactRing>;
constexpr auto M = Theory::multiplicative;

void require_pass(Ctx& ctx, const std::string& name, CheckOptions opt = {}) {
  Checker<ExactRing> ch(ctx, std::move(opt));
  const auto r = ch.run(name);
  INFO(r.name << ": " << r.detail);
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("point classes", "[localization]") {
  for (int rank = 1; rank <= 3; ++rank) {
    Ctx ctx(rank);
    const auto& r = ctx.ring();
    const auto& G = ctx.group();
    const auto& H = ctx.hecke();
    const Class pte = point_class(r, G.identity(), M);
    CHECK(pte[G.identity()] == x_full(r, M));
    auto prod = r.one();
    for (const auto& b : G.positive_roots()) prod = prod * chern_mult(r, b);
    CHECK(point_class(r, G.longest(), M)[G.longest()] == prod);
    CHECK((pte * point_class(r, G.longest(), M)).is_zero());
    for (ElemId w = 0; w < G.size(); ++w) CHECK(odot(H.delta(w), pte) == point_class(r, w, M));
    // push-forward of the point to a point
    CHECK(pushforward(H, pte, ParabolicSubset::full(rank), Pushforward::to_point) == Class::unit(r, M));
    CHECK(pushforward(H, point_class(r, G.identity(), Theory::hyperbolic), ParabolicSubset::full(rank),
                      Pushforward::to_point) == Class::unit(r, Theory::hyperbolic));
  }
}

TEST_CASE("the two actions", "[localization]") {
  Ctx ctx(2);
  const auto& r = ctx.ring();
  const auto& G = ctx.group();
  const auto& H = ctx.hecke();
  const Class one = Class::unit(r, M);
  CHECK(bullet(H.unit(), one) == one);
  CHECK(odot(H.unit(), one) == one);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    const Elem z = random_twisted(r, rng);
    const Class f = random_class(r, rng, M);
    const auto c = random_scalar(r, rng);
    CHECK(bullet(z, c * f) == c * bullet(z, f));
  }
  // odot twists the scalar
  const auto c = r.exponential(G.simple_root(1));
  CHECK_FALSE(odot(H.delta(G.simple(1)), c * one) == c * odot(H.delta(G.simple(1)), one));
  CHECK_THROWS_AS(bullet(H.unit(Theory::hyperbolic), one), std::invalid_argument);
  require_pass(ctx, "actions");
}

TEST_CASE("push-forwards and invariants", "[localization]") {
  Ctx ctx(2);
  const auto& r = ctx.ring();
  const auto& G = ctx.group();
  const auto& H = ctx.hecke();
  const ParabolicSubset J(2, {1});
  std::mt19937_64 rng(21);
  for (int k = 0; k < 10; ++k) {
    const Class f = pushforward(H, random_class(r, rng, M), J, Pushforward::to_parabolic);
    CHECK(is_invariant(f, J));
    CHECK(invariant_coordinates(f, J).has_value());
    CHECK(pushforward(H, random_class(r, rng, M), J, Pushforward::to_point).is_constant());
  }
  CHECK_THROWS_AS(pushforward(H, point_class(r, G.identity(), M), J, Pushforward::relative), std::invalid_argument);
  CHECK_FALSE(invariant_coordinates(point_class(r, G.identity(), M), J).has_value());

  const auto none = invariant_basis(r, ParabolicSubset::empty(2), M);
  REQUIRE(none.size() == G.size());
  for (ElemId w = 0; w < G.size(); ++w) CHECK(none[w] == Class::basis(r, M, w));
  const auto g = invariant_basis(r, J, M);
  CHECK(g[0] == Class::basis(r, M, G.identity()) + Class::basis(r, M, G.simple(1)));

  for (const char* n : {"projection", "inv", "w0act"}) require_pass(ctx, n);
}

TEST_CASE("inv on single generators", "[localization]") {
  Ctx ctx(2);
  const auto& H = ctx.hecke();
  const Class pte = point_class(ctx.ring(), ctx.group().identity(), M);
  for (int i = 1; i <= 2; ++i) {
    CHECK(bullet(H.tau(i), pte) == odot(H.iota(H.tau(i)), pte));
    CHECK(bullet(H.gamma_simple(i, Sign::plus), pte) == odot(H.iota(H.gamma_simple(i, Sign::plus)), pte));
  }
}

TEST_CASE("K-duality pairings", "[localization]") {
  {
    Ctx ctx(1);
    const auto& r = ctx.ring();
    const ElemId s = ctx.group().simple(1);
    const auto K = r.t_power(1) - r.t_power(-1) * r.exponential(-ctx.group().simple_root(1));
    CHECK(kdual_entry(ctx.hecke(), s, s) == K * Class::unit(r, M));
    CHECK(kdual_entry(ctx.hecke(), s, ctx.group().identity()).is_zero());
  }
  Ctx ctx(2);
  const auto m = kdual_matrix(ctx.hecke(), std::nullopt);
  CHECK(m.rows.size() == 6);
  CHECK_FALSE(check_diagonal(m, kdual_scalar(ctx.ring())).has_value());
  const auto mJ = kdual_matrix(ctx.hecke(), ParabolicSubset(2, {1}));
  CHECK(mJ.rows.size() == 3);
  CHECK_FALSE(check_diagonal(mJ, kdual_scalar(ctx.ring())).has_value());
  // entries do not depend on evaluation order
  for (std::size_t i = m.rows.size(); i-- > 0;)
    for (std::size_t j = m.cols.size(); j-- > 0;) CHECK(kdual_entry(ctx.hecke(), m.rows[i], m.cols[j]) == m.entries[i][j]);
  CHECK(pairing_csv(m, ctx.group()) == pairing_csv(kdual_matrix(ctx.hecke(), std::nullopt), ctx.group()));
}

TEST_CASE("parabolic K-duality for a non-maximal J in A3", "[localization][slow]") {
  Ctx ctx(3);
  const auto m = kdual_matrix(ctx.hecke(), ParabolicSubset(3, {1}));
  CHECK(m.rows.size() == 12);
  CHECK_FALSE(check_diagonal(m, kdual_scalar(ctx.ring())).has_value());
}
