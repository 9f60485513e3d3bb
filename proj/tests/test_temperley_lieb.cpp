#include "catch_amalgamated.hpp"

#include "klschubert/klschubert.hpp"

using namespace klschubert;

TEST_CASE("normal forms", "[tl]") {
  WeylGroup G(3);
  TemperleyLieb tl(G);
  auto nf = [&](const Word& w) { return std::make_pair(tl.normalize(w).mu_power, tl.normalize(w).element); };
  CHECK(nf({}) == std::make_pair(0, G.identity()));
  CHECK(nf({1, 1}) == std::make_pair(1, G.simple(1)));
  CHECK(nf({1, 2, 1}) == std::make_pair(0, G.simple(1)));
  CHECK(nf({1, 3, 1}) == std::make_pair(1, G.element_of_word({1, 3})));
  CHECK(nf({2, 1, 3, 2}) == std::make_pair(0, G.element_of_word({2, 1, 3, 2})));
  CHECK(nf({2, 2, 2}) == std::make_pair(2, G.simple(2)));
  for (ElemId w = 0; w < G.size(); ++w)
    if (G.is_fully_commutative(w)) CHECK(nf(G.canonical_word(w)) == std::make_pair(0, w));
}

TEST_CASE("normal forms agree with the Hecke quotient", "[tl][oracle]") {
  // the image of gamma-hat^-_I in H/I is (-mu)^k E_w
  Context<ExactRing> ctx(3);
  const auto& H = ctx.hecke();
  const auto& r = ctx.ring();
  const auto& tl = ctx.temperley_lieb();
  std::vector<Word> layer{{}};
  for (int len = 0; len <= 4; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      const auto m = tl.normalize(w);
      CHECK(ctx.group().is_fully_commutative(m.element));
      auto expect = r.one();
      for (int k = 0; k < m.mu_power; ++k) expect = -expect * mu(r);
      const auto p = H.tl_project(H.gamma_hat(w, Sign::minus));
      INFO("word " << word_to_string(w));
      REQUIRE(p.size() == 1);
      CHECK(p.begin()->first == m.element);
      CHECK(p.begin()->second == expect);
      for (int i = 1; i <= 3; ++i) {
        Word x = w;
        x.push_back(i);
        next.push_back(x);
      }
    }
    if (len < 4) layer = std::move(next);
  }
}

TEST_CASE("TL multiplication", "[tl]") {
  Context<ExactRing> ctx(2);
  const auto& r = ctx.ring();
  const auto& G = ctx.group();
  const auto& tl = ctx.temperley_lieb();
  using Map = std::map<ElemId, FieldElement>;
  const Map e1{{G.simple(1), r.one()}}, e2{{G.simple(2), r.one()}};
  const auto sq = tl.multiply(r, e1, e1);
  REQUIRE(sq.size() == 1);
  CHECK(sq.at(G.simple(1)) == -mu(r));
  const auto e121 = tl.multiply(r, tl.multiply(r, e1, e2), e1);
  REQUIRE(e121.size() == 1);
  CHECK(e121.at(G.simple(1)).is_one());
  CHECK(tl.multiply(r, e1, Map{}).empty());
}
