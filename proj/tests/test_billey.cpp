#include "catch_amalgamated.hpp"

#include <random>
#include <sstream>

#include "klschubert/klschubert.hpp"

using namespace klschubert;

namespace {

using Ctx = Context<ExactRing>;
using Elem = TwistedElement<ExactRing>;
using Free = FreeDemazureElement<ExactRing>;

std::vector<Word> canonical_words(const WeylGroup& G) {
  std::vector<Word> out;
  for (ElemId w = 0; w < G.size(); ++w) out.push_back(G.canonical_word(w));
  return out;
}

// Every word up to max_len: the rewriter's expansion, recombined with the
// actual X operators, must equal the operator product.
void check_against_operators(const Ctx& ctx, const DemazureRewriter& rw, std::size_t max_len) {
  const auto& r = ctx.ring();
  const auto& G = ctx.group();
  std::vector<Elem> basis;
  for (const auto& w : rw.chosen_words()) basis.push_back(op_X_word(r, w));
  std::vector<std::pair<Word, Elem>> layer{{{}, Elem::unit(r, Theory::hyperbolic)}};
  std::size_t checked = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::pair<Word, Elem>> next;
    for (const auto& [word, op] : layer) {
      Elem recombined(r, Theory::hyperbolic);
      for (const auto& [v, p] : rw.expand(word)) recombined += nu_value(r, p) * basis[v];
      INFO("word " << word_to_string(word));
      CHECK(recombined == op);
      ++checked;
      if (len < max_len)
        for (int i = 1; i <= G.rank(); ++i) {
          Word w = word;
          w.push_back(i);
          next.emplace_back(w, op * op_X(r, i));
        }
    }
    layer = std::move(next);
  }
  CHECK(checked > 0);
}

}  // namespace

TEST_CASE("rewriter examples", "[billey]") {
  WeylGroup G(3);
  const DemazureRewriter rw(G, canonical_words(G));
  const auto one = NuPolynomial::one();
  for (ElemId v = 0; v < G.size(); ++v) CHECK(rw.expand(G.canonical_word(v)) == DemazureRewriter::Expansion{{v, one}});
  CHECK(rw.expand({1, 1}) == DemazureRewriter::Expansion{{G.simple(1), NuPolynomial({-1})}});
  const DemazureRewriter::Expansion e{{G.element_of_word({2, 3, 2}), NuPolynomial({-1})},
                                      {G.simple(2), NuPolynomial({0, 1})},
                                      {G.element_of_word({2, 3}), NuPolynomial({0, 1})}};
  CHECK(rw.expand({2, 3, 2, 3}) == e);
  CHECK(rw.expand({}) == DemazureRewriter::Expansion{{G.identity(), one}});
  CHECK_THROWS_AS(DemazureRewriter(G, std::vector<Word>(G.size())), std::invalid_argument);
}

TEST_CASE("rewriter structure constants match the X operators", "[billey][oracle]") {
  {
    Ctx ctx(2);
    check_against_operators(ctx, ctx.rewriter(ParabolicSubset(2, {1})), 6);
    check_against_operators(ctx, DemazureRewriter(ctx.group(), canonical_words(ctx.group())), 6);
  }
  Ctx ctx(3);
  check_against_operators(ctx, ctx.rewriter(ParabolicSubset(3, {1, 2})), 6);
}

TEST_CASE("free multiplication", "[billey][property]") {
  Ctx ctx(3);
  const auto& r = ctx.ring();
  const auto& G = ctx.group();
  const auto& rw = ctx.rewriter(ParabolicSubset(3, {1, 2}));
  const Free X1 = Free::word(r, rw, {1});
  CHECK(Free::unit(r, rw) * X1 == X1);
  CHECK(X1 * X1 == r.integer(-1) * X1);
  std::mt19937_64 rng(17);
  auto random_free = [&] {
    Free f(r, rw);
    for (int k = 0; k < 2; ++k) f = f + random_scalar(r, rng, false) * Free::word(r, rw, rw.chosen_words()[G.random_element(rng)]);
    return f;
  };
  for (int k = 0; k < 10; ++k) {
    const Free a = random_free(), b = random_free(), c = random_free();
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("root polynomials", "[billey]") {
  Ctx ctx(3);
  const auto& r = ctx.ring();
  const auto& G = ctx.group();
  const auto& rw = ctx.rewriter(ParabolicSubset(3, {1, 2}));
  const Free R1 = root_polynomial(r, rw, {2});
  CHECK(R1.terms().size() == 2);
  CHECK(R1.at(G.identity()).is_one());
  CHECK(R1.at(G.simple(2)) == embed_hyperbolic_chern(r, G.simple_root(2)));
  for (ElemId w = 0; w < G.size(); ++w) {
    const Word& I = rw.chosen_words()[w];
    const Free R = root_polynomial(r, rw, I);
    CHECK(R.at(G.identity()).is_one());
    auto top = r.one();
    for (const auto& b : G.prefix_roots(I)) top = top * embed_hyperbolic_chern(r, b);
    CHECK(R.at(w) == top);
    for (const auto& [v, c] : R.terms()) CHECK(G.bruhat_leq(v, w));
  }
  Checker<ExactRing> ch(ctx, {});
  const auto res = ch.run("root-independence");
  INFO(res.detail);
  CHECK(res.pass);
}

TEST_CASE("subword terms", "[billey]") {
  WeylGroup G(2);
  const DemazureRewriter rw(G, ParabolicSubset(2, {1}));
  const Word I{2, 1};
  const auto terms = subword_terms(rw, I, G.simple(2));
  // (s2,-) alone reaches s2
  REQUIRE(terms.size() == 1);
  CHECK(subword_label(I, terms[0].mask) == "(s2,-)");
  CHECK(terms[0].coefficient == NuPolynomial::one());
}

TEST_CASE("Billey coefficients equal the restrictions of C-tilde", "[billey]") {
  // b-hat' = mu_u b-hat^h = C~^J_u restricted to w
  struct Case {
    int rank;
    std::vector<int> J;
  };
  for (const auto& cs : {Case{2, {1}}, Case{2, {2}}, Case{3, {1, 2}}, Case{3, {2, 3}}}) {
    Ctx ctx(cs.rank);
    const auto& r = ctx.ring();
    const auto& G = ctx.group();
    const ParabolicSubset J(cs.rank, cs.J);
    const auto& rw = ctx.rewriter(J);
    const auto words = G.j_compatible_words(J);
    for (ElemId u : G.coset_data(J).min_left) {
      const auto ct = ctx.hyperbolic().ctilde_parabolic(u, J);
      for (ElemId w = 0; w < G.size(); ++w) {
        INFO("J=" << J.to_string() << " u=" << G.element(u).to_string() << " w=" << G.element(w).to_string());
        const auto b = billey_coefficient(r, rw, w, u, J);
        CHECK(b == ct[w]);
        CHECK(restriction(ctx.hecke(), u, w, J) == ct[w]);
        CHECK(b == ctx.hyperbolic().mu_of(u) * ctx.hyperbolic().b_coefficient(w, u, Basis::gamma_hat_minus, &words));
      }
      if (u == G.identity())
        for (ElemId w = 0; w < G.size(); ++w) CHECK(billey_coefficient(r, rw, w, u, J).is_one());
    }
    const ElemId bad = G.coset_data(J).longest;
    CHECK_THROWS_AS(billey_coefficient(r, rw, G.identity(), bad, J), std::invalid_argument);
    CHECK_THROWS_AS(restriction(ctx.hecke(), bad, G.identity(), J), std::invalid_argument);
  }
}

TEST_CASE("A4 example", "[billey]") {
  Ctx ctx(4);
  const auto golden = load_golden(KLSC_GOLDEN_FILE, 4);
  REQUIRE(golden.size() == 8);
  const auto rep = reproduce_a4(ctx, golden, false);
  for (const auto& row : rep.rows) {
    INFO(row.label << " computed " << row.computed << " expected " << row.expected);
    CHECK(row.match);
  }
  CHECK(rep.terms_ok());
  CHECK(rep.sum_is_coefficient);
  CHECK(rep.restriction_is_sum);
  CHECK_FALSE(rep.restriction_is_mu2_sum);
}

TEST_CASE("golden file parsing", "[billey]") {
  std::istringstream ok("# comment\n(s1)\t-mu^-2\t1;1+2\n");
  const auto g = parse_golden(ok, 2);
  REQUIRE(g.size() == 1);
  CHECK(g[0].sign == -1);
  CHECK(g[0].mu_exponent == -2);
  REQUIRE(g[0].roots.size() == 2);
  CHECK(g[0].roots[1].coords() == std::vector<int>{1, 1});
  for (const char* bad : {"(s1)\t2\t1\n", "(s1)\t1\n", "(s1)\t1\t3\n", "(s1)\tmu^x\t1\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(parse_golden(in, 2), GoldenFormatError);
  }
  CHECK_THROWS_AS(load_golden("/nonexistent/golden.txt", 4), GoldenFormatError);
}
