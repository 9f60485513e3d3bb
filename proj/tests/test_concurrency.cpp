#include "catch_amalgamated.hpp"

#include <thread>

#include "klschubert/klschubert.hpp"

using namespace klschubert;

// Caches (gamma, tau, gamma-hat, rewriter memo, TL memo, per-J rewriters) are
// filled concurrently from a shared context; results must match a serial run.
TEST_CASE("shared context is safe across threads", "[concurrency]") {
  Context<ExactRing> shared(3), serial(3);
  const auto& G = shared.group();
  const ParabolicSubset J(3, {1, 2});
  constexpr int kThreads = 8;
  std::vector<std::vector<TwistedElement<ExactRing>>> gammas(kThreads);
  std::vector<std::vector<DemazureRewriter::Expansion>> expansions(kThreads);
  std::vector<std::vector<ElemId>> tl(kThreads);
  std::vector<std::thread> pool;
  for (int k = 0; k < kThreads; ++k)
    pool.emplace_back([&, k] {
      for (ElemId w = 0; w < G.size(); ++w) {
        const ElemId x = (w * 7 + static_cast<ElemId>(k)) % G.size();
        gammas[k].push_back(shared.hecke().gamma(x, k % 2 ? Sign::plus : Sign::minus));
        Word word = G.canonical_word(x);
        word.insert(word.end(), word.begin(), word.end());
        expansions[k].push_back(shared.rewriter(J).expand(word));
        tl[k].push_back(shared.temperley_lieb().normalize(word).element);
      }
    });
  for (auto& t : pool) t.join();
  const auto& rw = serial.rewriter(J);
  for (int k = 0; k < kThreads; ++k)
    for (ElemId w = 0; w < G.size(); ++w) {
      const ElemId x = (w * 7 + static_cast<ElemId>(k)) % G.size();
      Word word = G.canonical_word(x);
      word.insert(word.end(), word.begin(), word.end());
      CHECK(gammas[k][w] == serial.hecke().gamma(x, k % 2 ? Sign::plus : Sign::minus));
      CHECK(expansions[k][w] == rw.expand(word));
      CHECK(tl[k][w] == serial.temperley_lieb().normalize(word).element);
    }
}
