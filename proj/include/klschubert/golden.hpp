#pragma once

// The A4 restriction example and its stored per-subword terms.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "klschubert/context.hpp"

namespace klschubert {

struct GoldenTerm {
  std::string label;
  int sign = 1;
  int mu_exponent = 0;
  std::vector<LatticeVector> roots;
  std::string coefficient_text;
  std::string roots_text;
};

class GoldenFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lines: label TAB coefficient TAB roots.  Coefficient is [-]1 or [-]mu^k;
/// roots are ';'-separated, each a '+'-joined list of simple-root indices.
inline std::vector<GoldenTerm> parse_golden(std::istream& in, int rank) {
  std::vector<GoldenTerm> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    GoldenTerm g;
    if (!std::getline(ls, g.label, '\t') || !std::getline(ls, g.coefficient_text, '\t') || !std::getline(ls, g.roots_text))
      throw GoldenFormatError("line " + std::to_string(lineno) + ": expected three tab-separated fields");
    std::string c = g.coefficient_text;
    if (!c.empty() && c[0] == '-') {
      g.sign = -1;
      c.erase(0, 1);
    }
    if (c.rfind("mu^", 0) == 0) {
      try {
        g.mu_exponent = std::stoi(c.substr(3));
      } catch (const std::exception&) {
        throw GoldenFormatError("line " + std::to_string(lineno) + ": bad mu exponent '" + c + "'");
      }
    } else if (c != "1") {
      throw GoldenFormatError("line " + std::to_string(lineno) + ": bad coefficient '" + g.coefficient_text + "'");
    }
    std::istringstream rs(g.roots_text);
    std::string root;
    while (std::getline(rs, root, ';')) {
      LatticeVector v(rank);
      std::istringstream is(root);
      std::string idx;
      while (std::getline(is, idx, '+')) {
        int i = 0;
        try {
          i = std::stoi(idx);
        } catch (const std::exception&) {
          throw GoldenFormatError("line " + std::to_string(lineno) + ": bad root '" + root + "'");
        }
        if (i < 1 || i > rank) throw GoldenFormatError("line " + std::to_string(lineno) + ": root index out of range");
        v[i - 1] += 1;
      }
      g.roots.push_back(v);
    }
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<GoldenTerm> load_golden(const std::string& path, int rank) {
  std::ifstream in(path);
  if (!in) throw GoldenFormatError("cannot open golden file " + path);
  return parse_golden(in, rank);
}

template <ScalarRing R>
typename R::value_type golden_value(const R& r, const GoldenTerm& g) {
  auto v = mu_power(r, g.mu_exponent);
  if (g.sign < 0) v = -v;
  for (const auto& b : g.roots) v = v * embed_hyperbolic_chern(r, b);
  return v;
}

struct A4Example {
  static constexpr int rank = 4;
  static ParabolicSubset J() { return ParabolicSubset(4, {1, 2, 4}); }
  static Word w() { return {2, 1, 3, 2, 4, 3}; }
  static Word u() { return {2, 3}; }
};

struct ReproRow {
  std::string label;
  std::string computed;  // text of the computed term, empty if missing
  std::string expected;  // text of the golden term, empty if extra
  bool match = false;
};

template <ScalarRing R>
struct ReproReport {
  std::vector<ReproRow> rows;
  typename R::value_type sum, coefficient, restriction, ctilde_value;
  bool sum_is_coefficient = false;
  bool restriction_is_mu2_sum = false;
  bool restriction_is_sum = false;
  bool ctilde_is_restriction = false;

  bool terms_ok() const {
    for (const auto& r : rows)
      if (!r.match) return false;
    return !rows.empty();
  }
};

/// Computes the subword terms, diffs them against the golden list and
/// compares the total with the two independent restriction routes.
template <ScalarRing R>
ReproReport<R> reproduce_a4(const Context<R>& ctx, const std::vector<GoldenTerm>& golden, bool with_class = true) {
  const R& r = ctx.ring();
  const WeylGroup& G = ctx.group();
  if (G.rank() != A4Example::rank) throw std::invalid_argument("the A4 example needs rank 4");
  const ParabolicSubset J = A4Example::J();
  const Word I = A4Example::w();
  const ElemId w = G.element_of_word(I), u = G.element_of_word(A4Example::u());
  const auto& rw = ctx.rewriter(J);

  ReproReport<R> rep{{}, r.zero(), r.zero(), r.zero(), r.zero()};
  std::map<std::string, typename R::value_type> computed;
  std::vector<std::string> order;
  for (const auto& t : subword_terms(rw, I, u)) {
    const std::string label = subword_label(I, t.mask);
    const auto v = subword_value(r, t);
    computed.emplace(label, v);
    order.push_back(label);
    rep.sum = rep.sum + v;
  }
  for (const auto& g : golden) {
    ReproRow row{g.label, "", describe(r, golden_value(r, g)), false};
    auto it = computed.find(g.label);
    if (it != computed.end()) {
      row.computed = describe(r, it->second);
      row.match = it->second == golden_value(r, g);
      computed.erase(it);
    }
    rep.rows.push_back(std::move(row));
  }
  for (const auto& label : order)
    if (auto it = computed.find(label); it != computed.end()) rep.rows.push_back({label, describe(r, it->second), "", false});

  rep.coefficient = billey_coefficient(r, rw, w, u, J);
  rep.restriction = restriction(ctx.hecke(), u, w, J);
  rep.sum_is_coefficient = rep.sum == rep.coefficient;
  rep.restriction_is_mu2_sum = rep.restriction == mu_power(r, 2) * rep.sum;
  rep.restriction_is_sum = rep.restriction == rep.sum;
  if (with_class) {
    rep.ctilde_value = ctx.hyperbolic().ctilde_parabolic(u, J)[w];
    rep.ctilde_is_restriction = rep.ctilde_value == rep.restriction;
  }
  return rep;
}

}  // namespace klschubert
