#pragma once

// Deterministic text/JSON/CSV rendering.  Terms are ordered by lattice vector,
// then ascending t exponent.

#include "json.hpp"
#include <sstream>
#include <string>

#include "klschubert/context.hpp"

namespace klschubert {

using nlohmann::ordered_json;

inline ordered_json polynomial_json(const LaurentPolynomial& p, int rank) {
  ordered_json arr = ordered_json::array();
  for (const auto& [v, t] : p.by_lattice(rank)) {
    ordered_json exp = ordered_json::array();
    for (int i = 0; i < rank; ++i) exp.push_back(v[i]);
    arr.push_back({{"exp", exp}, {"t", {{"lo", t.lo}, {"coeffs", t.coeffs}}}});
  }
  return arr;
}

inline ordered_json to_json(const ExactRing& r, const FieldElement& a) {
  LaurentPolynomial n = a.numerator(), d = a.denominator();
  if (d.trailing().coeff < 0) {
    n = -n;
    d = -d;
  }
  return {{"num", polynomial_json(n, r.rank())}, {"den", polynomial_json(d, r.rank())}};
}
inline ordered_json to_json(const SampledRing& r, const SampledValue& a) {
  ordered_json j = {{"sampled_mod", "2^61-1"}, {"t", r.t_value()}};
  j["values"] = a.is_zero() ? std::vector<std::uint64_t>{} : a.values();
  return j;
}

inline std::string to_text(const ExactRing& r, const FieldElement& a) { return a.to_string(r.rank()); }
inline std::string to_text(const SampledRing& r, const SampledValue& a) { return describe(r, a); }

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

template <ScalarRing R>
ordered_json twisted_json(const TwistedElement<R>& z) {
  const WeylGroup& G = z.ring().group();
  ordered_json arr = ordered_json::array();
  for (const auto& [w, a] : z.terms())
    arr.push_back({{"w", G.element(w).to_string()}, {"coeff", to_json(z.ring(), a)}});
  return {{"theory", theory_name(z.theory())}, {"terms", arr}};
}

template <ScalarRing R>
std::string twisted_text(const TwistedElement<R>& z) {
  const WeylGroup& G = z.ring().group();
  if (z.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [w, a] : z.terms()) os << "delta[" << G.element(w).to_string() << "]: " << to_text(z.ring(), a) << "\n";
  return os.str();
}

/// Fixed point -> value tables.
template <ScalarRing R>
ordered_json class_json(const DualClass<R>& f) {
  const WeylGroup& G = f.ring().group();
  ordered_json arr = ordered_json::array();
  for (ElemId w = 0; w < G.size(); ++w)
    if (!f.ring().is_zero(f[w])) arr.push_back({{"w", G.element(w).to_string()}, {"value", to_json(f.ring(), f[w])}});
  return {{"theory", theory_name(f.theory())}, {"restrictions", arr}};
}

template <ScalarRing R>
std::string class_text(const DualClass<R>& f) {
  const WeylGroup& G = f.ring().group();
  std::ostringstream os;
  for (ElemId w = 0; w < G.size(); ++w) os << G.element(w).to_string() << " -> " << to_text(f.ring(), f[w]) << "\n";
  return os.str();
}

template <ScalarRing R>
std::string class_csv(const DualClass<R>& f) {
  const WeylGroup& G = f.ring().group();
  std::ostringstream os;
  os << "w,value\n";
  for (ElemId w = 0; w < G.size(); ++w) os << csv_quote(G.element(w).to_string()) << "," << csv_quote(to_text(f.ring(), f[w])) << "\n";
  return os.str();
}

/// Matrix of classes; constant classes print as their scalar.
template <ScalarRing R>
std::string pairing_csv(const PairingMatrix<R>& m, const WeylGroup& G) {
  std::ostringstream os;
  os << "w\\v";
  for (ElemId c : m.cols) os << "," << csv_quote(G.element(c).to_string());
  os << "\n";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    os << csv_quote(G.element(m.rows[i]).to_string());
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      const auto& f = m.entries[i][j];
      std::string cell;
      if (f.is_constant()) cell = to_text(f.ring(), f[G.identity()]);
      else {
        for (ElemId w = 0; w < G.size(); ++w) cell += (w ? "; " : "") + to_text(f.ring(), f[w]);
        cell = "[" + cell + "]";
      }
      os << "," << csv_quote(cell);
    }
    os << "\n";
  }
  return os.str();
}

template <ScalarRing R>
ordered_json pairing_json(const PairingMatrix<R>& m, const WeylGroup& G) {
  ordered_json rows = ordered_json::array(), cols = ordered_json::array(), entries = ordered_json::array();
  for (ElemId r : m.rows) rows.push_back(G.element(r).to_string());
  for (ElemId c : m.cols) cols.push_back(G.element(c).to_string());
  for (const auto& row : m.entries) {
    ordered_json jr = ordered_json::array();
    for (const auto& f : row) jr.push_back(class_json(f));
    entries.push_back(jr);
  }
  return {{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

}  // namespace klschubert
