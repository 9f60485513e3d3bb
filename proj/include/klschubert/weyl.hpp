#pragma once

// Type A_n root system and Weyl group S_{n+1}.
//
// Elements are permutations in one-line notation; the group law is
// composition, (uv)(k) = u(v(k)), and s_i is the transposition (i, i+1).
// A WeylGroup enumerates all elements once, ordered by (length, one-line
// lexicographic), and afterwards is immutable, so concurrent reads are safe.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "klschubert/polynomial.hpp"

namespace klschubert {

using ElemId = std::size_t;

class Permutation {
 public:
  Permutation() = default;
  /// From one-line notation with values 1..N.
  explicit Permutation(const std::vector<int>& one_line) {
    const int N = static_cast<int>(one_line.size());
    std::vector<bool> seen(static_cast<std::size_t>(N), false);
    img_.reserve(one_line.size());
    for (int v : one_line) {
      if (v < 1 || v > N || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("not a permutation in one-line notation");
      seen[static_cast<std::size_t>(v - 1)] = true;
      img_.push_back(v - 1);
    }
  }
  static Permutation identity(int N) {
    Permutation p;
    p.img_.resize(static_cast<std::size_t>(N));
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  /// Zero-based image of zero-based k.
  int operator()(int k) const { return img_[static_cast<std::size_t>(k)]; }
  std::vector<int> one_line() const {
    std::vector<int> r;
    for (int v : img_) r.push_back(v + 1);
    return r;
  }

  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    Permutation r;
    r.img_.resize(v.img_.size());
    for (std::size_t k = 0; k < v.img_.size(); ++k) r.img_[k] = u.img_[static_cast<std::size_t>(v.img_[k])];
    return r;
  }
  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) r.img_[static_cast<std::size_t>(img_[k])] = static_cast<int>(k);
    return r;
  }
  int inversions() const {
    int c = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
      for (std::size_t j = i + 1; j < img_.size(); ++j)
        if (img_[i] > img_[j]) ++c;
    return c;
  }
  /// True iff the one-line notation contains no decreasing subsequence of length 3.
  bool avoids_321() const {
    const std::size_t N = img_.size();
    for (std::size_t j = 1; j + 1 < N; ++j) {
      bool bigger_left = false, smaller_right = false;
      for (std::size_t i = 0; i < j; ++i) bigger_left |= img_[i] > img_[j];
      for (std::size_t k = j + 1; k < N; ++k) smaller_right |= img_[k] < img_[j];
      if (bigger_left && smaller_right) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < img_.size(); ++k) os << (k ? "," : "") << img_[k] + 1;
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

using Word = std::vector<int>;

inline std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
  return os.str();
}

/// Comma-separated integers, e.g. "2,1,3,2".  The empty string is the empty list.
inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

/// A subset J of the simple indices {1..n}.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  ParabolicSubset(int rank, std::vector<int> indices) : rank_(rank), idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
    for (int i : idx_)
      if (i < 1 || i > rank) throw std::invalid_argument("parabolic index out of range");
  }
  static ParabolicSubset empty(int rank) { return {rank, {}}; }
  static ParabolicSubset full(int rank) {
    std::vector<int> v(static_cast<std::size_t>(rank));
    std::iota(v.begin(), v.end(), 1);
    return {rank, v};
  }

  int rank() const { return rank_; }
  const std::vector<int>& indices() const { return idx_; }
  bool contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }
  std::size_t size() const { return idx_.size(); }
  bool is_maximal_proper() const { return static_cast<int>(idx_.size()) == rank_ - 1; }

  std::string to_string() const { return word_to_string(idx_); }
  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

 private:
  int rank_ = 0;
  std::vector<int> idx_;
};

struct CosetData {
  ParabolicSubset J;
  std::vector<ElemId> parabolic;      // W_J
  std::vector<ElemId> min_left;       // W^J: minimal representatives of wW_J
  std::vector<ElemId> min_right;      // ^JW: minimal representatives of W_J w
  ElemId longest = 0;                 // w_J
  std::vector<std::pair<ElemId, ElemId>> factor;  // w = u v, u in W^J, v in W_J

  bool in_min_left(ElemId w) const { return std::binary_search(min_left.begin(), min_left.end(), w); }
  bool in_parabolic(ElemId w) const { return std::binary_search(parabolic.begin(), parabolic.end(), w); }
};

class WeylGroup {
 public:
  static constexpr int kMaxEnumerationRank = 5;

  explicit WeylGroup(int rank) : n_(rank) {
    if (rank < 1 || rank > kMaxEnumerationRank)
      throw std::out_of_range("rank must be in 1.." + std::to_string(kMaxEnumerationRank));
    const int N = n_ + 1;
    std::vector<int> p(static_cast<std::size_t>(N));
    std::iota(p.begin(), p.end(), 1);
    do elems_.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::stable_sort(elems_.begin(), elems_.end(),
                     [](const Permutation& a, const Permutation& b) { return a.inversions() < b.inversions(); });
    const std::size_t G = elems_.size();
    rank_to_index_.assign(G, 0);
    length_.resize(G);
    for (ElemId i = 0; i < G; ++i) {
      rank_to_index_[perm_rank(elems_[i])] = i;
      length_[i] = elems_[i].inversions();
    }
    mult_.resize(G * G);
    for (ElemId a = 0; a < G; ++a)
      for (ElemId b = 0; b < G; ++b) mult_[a * G + b] = static_cast<std::uint16_t>(index_of(elems_[a] * elems_[b]));
    inv_.resize(G);
    for (ElemId a = 0; a < G; ++a) inv_[a] = index_of(elems_[a].inverse());
    simple_.resize(static_cast<std::size_t>(n_ + 1));
    for (int i = 1; i <= n_; ++i) {
      std::vector<int> s(static_cast<std::size_t>(N));
      std::iota(s.begin(), s.end(), 1);
      std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
      simple_[static_cast<std::size_t>(i)] = index_of(Permutation(s));
    }
    longest_ = G - 1;
    build_root_matrices();
    build_canonical_words();
    build_bruhat();
    for (int i = 1; i <= n_; ++i)
      for (int j = i; j <= n_; ++j) {
        LatticeVector v(n_);
        for (int k = i; k <= j; ++k) v[k - 1] = 1;
        positive_roots_.push_back(v);
      }
  }

  int rank() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  const Permutation& element(ElemId w) const { return elems_[w]; }
  ElemId identity() const { return 0; }
  ElemId longest() const { return longest_; }
  ElemId simple(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("simple index out of range");
    return simple_[static_cast<std::size_t>(i)];
  }
  int length(ElemId w) const { return length_[w]; }
  ElemId mul(ElemId a, ElemId b) const { return mult_[a * elems_.size() + b]; }
  ElemId inverse(ElemId a) const { return inv_[a]; }

  ElemId index_of(const Permutation& p) const {
    if (p.size() != n_ + 1) throw std::invalid_argument("permutation of the wrong size");
    return rank_to_index_[perm_rank(p)];
  }

  /// Product s_{i1} ... s_{ik}.
  ElemId element_of_word(const Word& word) const {
    ElemId w = identity();
    for (int i : word) w = mul(w, simple(i));
    return w;
  }
  bool is_reduced(const Word& word) const {
    return length(element_of_word(word)) == static_cast<int>(word.size());
  }

  bool is_left_descent(ElemId w, int i) const { return length(mul(simple(i), w)) < length(w); }
  bool is_right_descent(ElemId w, int i) const { return length(mul(w, simple(i))) < length(w); }

  /// Lexicographically smallest reduced word.
  const Word& canonical_word(ElemId w) const { return words_[w]; }

  bool bruhat_leq(ElemId u, ElemId w) const { return bruhat_[u * elems_.size() + w]; }

  bool is_fully_commutative(ElemId w) const { return elems_[w].avoids_321(); }

  /// Simple-root coordinates of w(lambda).
  LatticeVector act(ElemId w, const LatticeVector& lambda) const {
    const auto& M = root_matrix_[w];
    LatticeVector r(n_);
    for (int i = 0; i < n_; ++i) {
      int s = 0;
      for (int j = 0; j < n_; ++j) s += M[static_cast<std::size_t>(i * n_ + j)] * lambda[j];
      r[i] = s;
    }
    return r;
  }

  const std::vector<LatticeVector>& positive_roots() const { return positive_roots_; }
  LatticeVector simple_root(int i) const { return LatticeVector::simple_root(n_, i); }
  /// Nonzero root-lattice vector with all coordinates >= 0.
  static bool is_positive(const LatticeVector& v) {
    bool nonzero = false;
    for (int c : v.coords()) {
      if (c < 0) return false;
      nonzero |= c != 0;
    }
    return nonzero;
  }
  /// Roots of the root subsystem Sigma_J that are positive.
  std::vector<LatticeVector> positive_roots(const ParabolicSubset& J) const {
    std::vector<LatticeVector> r;
    for (const auto& b : positive_roots_) {
      bool inside = true;
      for (int k = 0; k < n_; ++k)
        if (b[k] != 0 && !J.contains(k + 1)) inside = false;
      if (inside) r.push_back(b);
    }
    return r;
  }

  /// Cartan matrix a_ij = <alpha_i^vee, alpha_j>.
  std::vector<std::vector<int>> cartan_matrix() const {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    return a;
  }

  CosetData coset_data(const ParabolicSubset& J) const {
    if (J.rank() != n_) throw std::invalid_argument("parabolic subset of the wrong rank");
    CosetData d;
    d.J = J;
    const std::size_t G = size();
    d.factor.resize(G);
    for (ElemId w = 0; w < G; ++w) {
      bool in_wj = true, left_min = true, right_min = true;
      const Permutation& p = elems_[w];
      const Permutation pinv = p.inverse();
      for (int k = 0; k <= n_; ++k)
        if (block_of(J, p(k)) != block_of(J, k)) in_wj = false;
      for (int j : J.indices()) {
        if (p(j - 1) > p(j)) left_min = false;         // right descent s_j
        if (pinv(j) < pinv(j - 1)) right_min = false;  // left descent s_j
      }
      if (in_wj) d.parabolic.push_back(w);
      if (left_min) d.min_left.push_back(w);
      if (right_min) d.min_right.push_back(w);
    }
    d.longest = *std::max_element(d.parabolic.begin(), d.parabolic.end(),
                                  [&](ElemId a, ElemId b) { return length(a) < length(b); });
    for (ElemId w = 0; w < G; ++w) {
      // u: sort the values inside each block of positions
      std::vector<int> line = elems_[w].one_line();
      for (int k = 0; k <= n_;) {
        int e = k;
        while (e < n_ && J.contains(e + 1)) ++e;
        std::sort(line.begin() + k, line.begin() + e + 1);
        k = e + 1;
      }
      const ElemId u = index_of(Permutation(line));
      d.factor[w] = {u, mul(inverse(u), w)};
    }
    return d;
  }

  /// I_w = I_u ++ I_v for w = uv, u in W^J, v in W_J, with canonical words.
  std::vector<Word> j_compatible_words(const ParabolicSubset& J) const {
    const CosetData d = coset_data(J);
    std::vector<Word> out(size());
    for (ElemId w = 0; w < size(); ++w) {
      const auto [u, v] = d.factor[w];
      Word word = canonical_word(u);
      const Word& wv = canonical_word(v);
      word.insert(word.end(), wv.begin(), wv.end());
      out[w] = std::move(word);
    }
    return out;
  }

  /// beta_j = s_{i1} ... s_{i(j-1)} alpha_{ij}.
  std::vector<LatticeVector> prefix_roots(const Word& word) const {
    if (!is_reduced(word)) throw std::invalid_argument("prefix roots need a reduced word");
    std::vector<LatticeVector> out;
    ElemId prefix = identity();
    for (int i : word) {
      out.push_back(act(prefix, simple_root(i)));
      prefix = mul(prefix, simple(i));
    }
    return out;
  }

  ElemId random_element(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> d(0, size() - 1);
    return d(rng);
  }

  /// One-line notation or a word, whichever `s` is: a list that is a
  /// permutation of 1..n+1 is read as one-line notation, anything else as a
  /// word in the simple reflections.
  ElemId parse_element(const std::string& s) const {
    const std::vector<int> v = parse_int_list(s);
    if (static_cast<int>(v.size()) == n_ + 1) {
      std::vector<int> sorted = v;
      std::sort(sorted.begin(), sorted.end());
      bool perm = true;
      for (int k = 0; k <= n_; ++k) perm &= sorted[static_cast<std::size_t>(k)] == k + 1;
      if (perm) return index_of(Permutation(v));
    }
    for (int i : v)
      if (i < 1 || i > n_) throw std::invalid_argument("'" + s + "' is neither a permutation nor a word");
    return element_of_word(v);
  }

 private:
  static std::size_t perm_rank(const Permutation& p) {
    // Lehmer code
    const int N = p.size();
    std::size_t r = 0;
    for (int i = 0; i < N; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < N; ++j) smaller += p(j) < p(i);
      r = r * static_cast<std::size_t>(N - i) + static_cast<std::size_t>(smaller);
    }
    return r;
  }
  static int block_of(const ParabolicSubset& J, int pos) {
    int b = 0;
    for (int k = 1; k <= pos; ++k)
      if (!J.contains(k)) ++b;
    return b;
  }

  void build_root_matrices() {
    const int N = n_ + 1;
    root_matrix_.resize(size());
    for (ElemId w = 0; w < size(); ++w) {
      auto& M = root_matrix_[w];
      M.assign(static_cast<std::size_t>(n_ * n_), 0);
      for (int j = 0; j < n_; ++j) {
        // alpha_j = eps_j - eps_{j+1} (zero-based eps indices j, j+1)
        std::vector<int> eps(static_cast<std::size_t>(N), 0);
        eps[static_cast<std::size_t>(elems_[w](j))] += 1;
        eps[static_cast<std::size_t>(elems_[w](j + 1))] -= 1;
        int partial = 0;
        for (int i = 0; i < n_; ++i) {
          partial += eps[static_cast<std::size_t>(i)];
          M[static_cast<std::size_t>(i * n_ + j)] = partial;
        }
      }
    }
  }

  void build_canonical_words() {
    words_.resize(size());
    for (ElemId w = 0; w < size(); ++w) {
      ElemId cur = w;
      Word word;
      while (cur != identity()) {
        for (int i = 1; i <= n_; ++i)
          if (is_left_descent(cur, i)) {
            word.push_back(i);
            cur = mul(simple(i), cur);
            break;
          }
      }
      words_[w] = std::move(word);
    }
  }

  // Subword property via the lifting recursion: for a right descent s of w,
  // u <= w iff (us < u ? us <= ws : u <= ws).
  void build_bruhat() {
    const std::size_t G = size();
    bruhat_.assign(G * G, false);
    for (ElemId w = 0; w < G; ++w) {
      if (w == identity()) {
        bruhat_[identity() * G + w] = true;
        continue;
      }
      int s = 1;
      while (!is_right_descent(w, s)) ++s;
      const ElemId ws = mul(w, simple(s));
      for (ElemId u = 0; u < G; ++u) {
        const ElemId us = mul(u, simple(s));
        bruhat_[u * G + w] = length(us) < length(u) ? bruhat_[us * G + ws] : bruhat_[u * G + ws];
      }
    }
  }

  int n_;
  std::vector<Permutation> elems_;
  std::vector<ElemId> rank_to_index_;
  std::vector<int> length_;
  std::vector<std::uint16_t> mult_;
  std::vector<ElemId> inv_;
  std::vector<ElemId> simple_;
  ElemId longest_ = 0;
  std::vector<std::vector<int>> root_matrix_;
  std::vector<Word> words_;
  std::vector<bool> bruhat_;
  std::vector<LatticeVector> positive_roots_;
};

/// A word verified to be reduced in a given group.
class ReducedWord {
 public:
  ReducedWord(const WeylGroup& G, Word letters) : letters_(std::move(letters)) {
    for (int i : letters_)
      if (i < 1 || i > G.rank()) throw std::invalid_argument("letter out of range in word");
    if (!G.is_reduced(letters_)) throw std::invalid_argument("word " + word_to_string(letters_) + " is not reduced");
    element_ = G.element_of_word(letters_);
  }
  const Word& letters() const { return letters_; }
  ElemId element() const { return element_; }
  std::size_t length() const { return letters_.size(); }

 private:
  Word letters_;
  ElemId element_ = 0;
};

}  // namespace klschubert
