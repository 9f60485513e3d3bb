#include "catch_amalgamated.hpp"

#include <random>

#include "klschubert/klschubert.hpp"

using namespace klschubert;

TEST_CASE("sampling is a ring homomorphism", "[sampled]") {
  WeylGroup G(2);
  ExactRing ex(G);
  SampledRing s(G, 42);
  std::mt19937_64 rng(1);
  CHECK(s.sample(ex.t_power(-3)) == s.t_power(-3));
  CHECK(s.sample(ex.exponential(G.simple_root(2))) == s.exponential(G.simple_root(2)));
  CHECK(s.sample(mu(ex)) == mu(s));
  for (int k = 0; k < 50; ++k) {
    const auto a = random_scalar(ex, rng), b = random_scalar(ex, rng);
    CHECK(s.sample(a + b) == s.sample(a) + s.sample(b));
    CHECK(s.sample(a * b) == s.sample(a) * s.sample(b));
    for (ElemId w = 0; w < G.size(); ++w) CHECK(s.sample(ex.act(w, a)) == s.act(w, s.sample(a)));
    if (!b.is_zero()) CHECK(s.sample(a / b) == s.sample(a) / s.sample(b));
  }
  CHECK_THROWS_AS(s.one() / s.zero(), DivisionByZero);
}

TEST_CASE("sampled equality agrees with exact equality", "[sampled][oracle]") {
  WeylGroup G(3);
  ExactRing ex(G);
  SampledRing s(G, 20240601);
  std::mt19937_64 rng(2);
  int equal = 0;
  for (int k = 0; k < 500; ++k) {
    const auto a = random_scalar(ex, rng), b = random_scalar(ex, rng);
    const auto c = k % 2 || b.is_zero() ? a : (a * b + b) / b - ex.one();
    const bool exact = a == c;
    CHECK(exact == (s.sample(a) == s.sample(c)));
    equal += exact;
  }
  CHECK(equal >= 200);
}

TEST_CASE("sampled check verdicts agree with exact verdicts", "[sampled][slow]") {
  for (int rank = 1; rank <= 3; ++rank) {
    Context<ExactRing> exact(rank);
    Context<SampledRing> fast(rank, std::uint64_t{20240601});
    for (const auto& name : Checker<ExactRing>::names()) {
      Checker<ExactRing> ce(exact, {});
      Checker<SampledRing> cs(fast, {});
      const auto re = ce.run(name), rs = cs.run(name);
      INFO("rank " << rank << " " << name << ": exact '" << re.detail << "' sampled '" << rs.detail << "'");
      CHECK(re.pass == rs.pass);
    }
  }
}
