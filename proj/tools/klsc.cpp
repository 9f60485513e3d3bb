// klsc: command-line front end for the klschubert library.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klschubert/klschubert.hpp"

#ifndef KLSC_GOLDEN_FILE
#define KLSC_GOLDEN_FILE "data/a4_billey_golden.txt"
#endif

using namespace klschubert;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int rank = 0;
  std::string J;
  std::string theory = "m";
  std::string format = "text";
  bool format_given = false;
  std::uint64_t seed = 20240601;
  bool fast = false;

  // per-command
  std::vector<std::string> lemmas;
  bool all = false;
  int samples = 0;
  std::string sign = "-";
  std::string element, u, w, x;
  std::string variant = "c";
  bool terms = false;
  std::string golden = KLSC_GOLDEN_FILE;
};

const std::map<std::string, std::vector<std::string>>& check_groups() {
  static const std::map<std::string, std::vector<std::string>> g = {
      {"hecke", {"tau", "gamma-annihilation", "klcom", "pdual", "iota", "grassmannian", "lemma-b", "fan-green", "tl-product"}},
      {"loc", {"fgl", "kdual", "w0act", "actions", "inv", "projection", "comp"}},
      {"hyp", {"x-operators", "psi", "hyper", "hypergp", "wj"}},
      {"billey", {"root-independence", "billey-restriction", "billey-oracle"}},
  };
  return g;
}

std::string canonical_check(const std::string& name) {
  static const std::map<std::string, std::string> alias = {
      {"fg", "fan-green"}, {"yjcom", "inv"}, {"p", "grassmannian"}, {"b", "lemma-b"},
      {"braid", "x-operators"}, {"billey", "billey-oracle"}, {"tl", "tl-product"}};
  auto it = alias.find(name);
  const std::string c = it == alias.end() ? name : it->second;
  const auto& names = Checker<ExactRing>::names();
  if (std::find(names.begin(), names.end(), c) == names.end()) throw UsageError("unknown check '" + name + "'");
  return c;
}

void require_rank(const Options& o, int lo = 1, int hi = 5) {
  if (o.rank < lo || o.rank > hi)
    throw UsageError("--rank must be between " + std::to_string(lo) + " and " + std::to_string(hi) + " (got " + std::to_string(o.rank) + ")");
}

std::optional<ParabolicSubset> parse_J(const Options& o) {
  if (o.J.empty()) return std::nullopt;
  try {
    return ParabolicSubset(o.rank, parse_int_list(o.J));
  } catch (const std::exception& e) {
    throw UsageError("bad --J '" + o.J + "': " + e.what());
  }
}

ParabolicSubset require_J(const Options& o) {
  auto J = parse_J(o);
  if (!J) throw UsageError("--J is required");
  return *J;
}

ElemId parse_elem(const WeylGroup& G, const std::string& s, const char* flag) {
  if (s.empty()) return G.identity();
  try {
    return G.parse_element(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad ") + flag + " '" + s + "': " + e.what());
  }
}

Theory parse_theory(const Options& o) { return o.theory == "h" ? Theory::hyperbolic : Theory::multiplicative; }

template <class Fn>
int with_context(const Options& o, Fn&& fn) {
  if (o.fast) {
    Context<SampledRing> ctx(o.rank, o.seed);
    return fn(ctx);
  }
  Context<ExactRing> ctx(o.rank);
  return fn(ctx);
}

// ---------------------------------------------------------------------------

template <ScalarRing R>
int run_checks(const Context<R>& ctx, const Options& o, const std::vector<std::string>& selected) {
  CheckOptions co;
  co.J = parse_J(o);
  co.seed = o.seed;
  co.samples = o.samples;
  Checker<R> checker(ctx, co);
  std::vector<CheckResult> results;
  for (const auto& name : selected) {
    try {
      results.push_back(checker.run(name));
    } catch (const std::invalid_argument& e) {
      if (co.J) throw UsageError(name + ": " + e.what());
      results.push_back({name, false, std::string("error: ") + e.what()});
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("error: ") + e.what()});
    }
  }
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) arr.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    ordered_json doc = {{"rank", o.rank}, {"exact", !o.fast}, {"checks", arr}, {"failed", failed}};
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "check,pass,detail\n";
    for (const auto& r : results) std::cout << r.name << "," << (r.pass ? "true" : "false") << "," << csv_quote(r.detail) << "\n";
  } else {
    for (const auto& r : results) std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " checks passed (rank " << o.rank
              << (o.fast ? ", sampled" : ", exact") << ")\n";
  }
  return failed ? kFail : kPass;
}

int cmd_check(const Options& o, const std::string& group) {
  require_rank(o);
  std::vector<std::string> selected;
  if (o.all) {
    if (group.empty()) selected = Checker<ExactRing>::names();
    else selected = check_groups().at(group);
  }
  for (const auto& l : o.lemmas) {
    const std::string c = canonical_check(l);
    if (std::find(selected.begin(), selected.end(), c) == selected.end()) selected.push_back(c);
  }
  if (selected.empty()) throw UsageError("select checks with --lemma NAME or --all");
  return with_context(o, [&](const auto& ctx) { return run_checks(ctx, o, selected); });
}

int cmd_klpoly(const Options& o) {
  require_rank(o);
  WeylGroup G(o.rank);
  KLTable T(G);
  std::vector<std::pair<ElemId, ElemId>> pairs;
  if (!o.x.empty() || !o.w.empty()) {
    pairs.emplace_back(parse_elem(G, o.x, "--x"), parse_elem(G, o.w, "--w"));
  } else {
    for (ElemId v = 0; v < G.size(); ++v)
      for (ElemId u = 0; u < G.size(); ++u)
        if (G.bruhat_leq(u, v)) pairs.emplace_back(u, v);
  }
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (auto [u, v] : pairs) arr.push_back({{"u", G.element(u).to_string()}, {"v", G.element(v).to_string()}, {"coeffs", T(u, v).coefficients()}});
    std::cout << arr.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "u,v,coeffs\n";
    for (auto [u, v] : pairs) {
      std::string c;
      for (auto k : T(u, v).coefficients()) c += (c.empty() ? "" : ";") + std::to_string(k);
      std::cout << csv_quote(G.element(u).to_string()) << "," << csv_quote(G.element(v).to_string()) << "," << c << "\n";
    }
  } else {
    for (auto [u, v] : pairs)
      std::cout << "P[" << G.element(u).to_string() << " ; " << G.element(v).to_string() << "] = " << T(u, v).to_string() << "\n";
  }
  return kPass;
}

int cmd_gamma(const Options& o) {
  require_rank(o);
  if (o.sign != "+" && o.sign != "-") throw UsageError("--sign must be + or -");
  return with_context(o, [&](const auto& ctx) {
    const ElemId v = parse_elem(ctx.group(), o.element, "--element");
    auto z = ctx.hecke().gamma(v, o.sign == "+" ? Sign::plus : Sign::minus);
    if (parse_theory(o) == Theory::hyperbolic) z = psi(z);
    if (o.format == "json") {
      ordered_json doc = {{"element", ctx.group().element(v).to_string()}, {"sign", o.sign}, {"value", twisted_json(z)}};
      std::cout << doc.dump(2) << "\n";
    } else if (o.format == "csv") {
      std::cout << "delta,coeff\n";
      for (const auto& [w, a] : z.terms())
        std::cout << csv_quote(ctx.group().element(w).to_string()) << "," << csv_quote(to_text(ctx.ring(), a)) << "\n";
    } else {
      std::cout << twisted_text(z);
    }
    return kPass;
  });
}

template <ScalarRing R>
void emit_class(const Options& o, const DualClass<R>& f, const ordered_json& meta) {
  if (o.format == "json") {
    ordered_json doc = meta;
    doc["class"] = class_json(f);
    std::cout << doc.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << class_csv(f);
  } else {
    std::cout << class_text(f);
  }
}

int cmd_class(const Options& o) {
  require_rank(o);
  ClassVariant variant;
  try {
    variant = parse_variant(o.variant);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto J = parse_J(o);
  if (J && variant == ClassVariant::c) variant = ClassVariant::c_parabolic;
  if (J && variant == ClassVariant::ctilde) variant = ClassVariant::ctilde_parabolic;
  return with_context(o, [&](const auto& ctx) {
    const std::string& which = o.u.empty() ? o.w : o.u;
    const ElemId u = parse_elem(ctx.group(), which, "--u");
    if (J && !ctx.group().coset_data(*J).in_min_left(u))
      throw UsageError(ctx.group().element(u).to_string() + " is not a minimal coset representative for J=" + J->to_string());
    const auto f = ctx.hyperbolic().kl_class(u, variant, J);
    emit_class(o, f, {{"u", ctx.group().element(u).to_string()}, {"variant", o.variant}, {"J", J ? J->to_string() : ""}});
    return kPass;
  });
}

int cmd_restrict(const Options& o) {
  require_rank(o);
  const ParabolicSubset J = require_J(o);
  return with_context(o, [&](const auto& ctx) {
    const auto& G = ctx.group();
    const ElemId u = parse_elem(G, o.u, "--u"), w = parse_elem(G, o.w, "--w");
    if (!G.coset_data(J).in_min_left(u)) throw UsageError(G.element(u).to_string() + " is not in W^J for J=" + J.to_string());
    const auto v = restriction(ctx.hecke(), u, w, J);
    if (o.format == "json") {
      ordered_json doc = {{"u", G.element(u).to_string()}, {"w", G.element(w).to_string()}, {"J", J.to_string()}, {"value", to_json(ctx.ring(), v)}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << to_text(ctx.ring(), v) << "\n";
    }
    return kPass;
  });
}

int cmd_billey(const Options& o) {
  require_rank(o);
  const ParabolicSubset J = require_J(o);
  return with_context(o, [&](const auto& ctx) {
    const auto& G = ctx.group();
    const auto& rw = ctx.rewriter(J);
    const ElemId u = parse_elem(G, o.u, "--u"), w = parse_elem(G, o.w, "--w");
    if (!G.coset_data(J).in_min_left(u)) throw UsageError(G.element(u).to_string() + " is not in W^J for J=" + J.to_string());
    const Word I = rw.chosen_words()[w];
    const auto v = billey_coefficient(ctx.ring(), rw, w, u, J);
    const auto terms = subword_terms(rw, I, u);
    if (o.format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& t : terms) {
        ordered_json roots = ordered_json::array();
        for (const auto& b : t.roots) {
          std::vector<int> c;
          for (int i = 0; i < G.rank(); ++i) c.push_back(b[i]);
          roots.push_back(c);
        }
        arr.push_back({{"subword", subword_label(I, t.mask)},
                       {"nu_coefficient", t.coefficient.to_string("nu")},
                       {"roots", roots},
                       {"value", to_json(ctx.ring(), subword_value(ctx.ring(), t))}});
      }
      ordered_json doc = {{"w", G.element(w).to_string()}, {"word", word_to_string(I)}, {"u", G.element(u).to_string()},
                          {"J", J.to_string()}, {"terms", arr}, {"coefficient", to_json(ctx.ring(), v)}};
      std::cout << doc.dump(2) << "\n";
    } else {
      if (o.terms)
        for (const auto& t : terms)
          std::cout << subword_label(I, t.mask) << "  " << to_text(ctx.ring(), subword_value(ctx.ring(), t)) << "\n";
      std::cout << to_text(ctx.ring(), v) << "\n";
    }
    return kPass;
  });
}

int cmd_billey_table(const Options& o) {
  require_rank(o);
  const ParabolicSubset J = require_J(o);
  return with_context(o, [&](const auto& ctx) {
    const auto& G = ctx.group();
    const auto& rw = ctx.rewriter(J);
    const auto reps = G.coset_data(J).min_left;
    const std::string fmt = o.format_given ? o.format : "csv";
    if (fmt == "json") {
      ordered_json rows = ordered_json::array();
      for (ElemId w = 0; w < G.size(); ++w) {
        ordered_json row = {{"w", G.element(w).to_string()}};
        ordered_json vals = ordered_json::array();
        for (ElemId u : reps) vals.push_back({{"u", G.element(u).to_string()}, {"value", to_json(ctx.ring(), billey_coefficient(ctx.ring(), rw, w, u, J))}});
        row["restrictions"] = vals;
        rows.push_back(row);
      }
      std::cout << ordered_json{{"J", J.to_string()}, {"rows", rows}}.dump(2) << "\n";
      return kPass;
    }
    const char* sep = fmt == "csv" ? "," : " | ";
    std::cout << "w\\u";
    for (ElemId u : reps) std::cout << sep << csv_quote(G.element(u).to_string());
    std::cout << "\n";
    for (ElemId w = 0; w < G.size(); ++w) {
      std::cout << csv_quote(G.element(w).to_string());
      for (ElemId u : reps) std::cout << sep << csv_quote(to_text(ctx.ring(), billey_coefficient(ctx.ring(), rw, w, u, J)));
      std::cout << "\n";
    }
    return kPass;
  });
}

template <ScalarRing R>
int emit_pairing(const Options& o, const Context<R>& ctx, const PairingMatrix<R>& m, std::optional<std::string> bad,
                 const std::string& what) {
  if (o.format == "json") {
    ordered_json doc = {{"pairing", what}, {"matrix", pairing_json(m, ctx.group())}, {"pass", !bad}};
    if (bad) doc["witness"] = *bad;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << pairing_csv(m, ctx.group());
    if (o.format == "text") std::cout << (bad ? "FAIL " : "PASS ") << what << (bad ? ": " + *bad : "") << "\n";
    else if (bad) std::cerr << "FAIL " << what << ": " << *bad << "\n";
  }
  return bad ? kFail : kPass;
}

int cmd_kdual(const Options& o) {
  require_rank(o);
  const auto J = parse_J(o);
  return with_context(o, [&](const auto& ctx) {
    const auto m = kdual_matrix(ctx.hecke(), J);
    return emit_pairing(o, ctx, m, check_diagonal(m, kdual_scalar(ctx.ring())), "diagonal with prod (t - t^-1 e^-alpha)");
  });
}

int cmd_duality(const Options& o) {
  require_rank(o);
  const auto J = parse_J(o);
  if (J && !J->is_maximal_proper()) throw UsageError("--J must be maximal proper");
  return with_context(o, [&](const auto& ctx) {
    using R = typename std::decay_t<decltype(ctx.ring())>;
    const auto& G = ctx.group();
    const auto& hyp = ctx.hyperbolic();
    PairingMatrix<R> m;
    if (J) m.rows = G.coset_data(*J).min_left;
    else
      for (ElemId w = 0; w < G.size(); ++w) m.rows.push_back(w);
    m.cols = m.rows;
    for (ElemId a : m.rows) {
      m.entries.emplace_back();
      const auto ca = J ? hyp.c_parabolic(a, *J) : hyp.c(a);
      for (ElemId b : m.cols) m.entries.back().push_back(hyperbolic_pairing(ctx.hecke(), ca, J ? hyp.ctilde_parabolic(b, *J) : hyp.ctilde(b), J));
    }
    return emit_pairing(o, ctx, m, check_diagonal(m, ctx.ring().one()), "C/C~ pairing is the identity");
  });
}

int cmd_reproduce(const Options& o) {
  if (o.rank != 0 && o.rank != 4) throw UsageError("reproduce-paper runs the rank-4 example; omit --rank");
  std::vector<GoldenTerm> golden;
  try {
    golden = load_golden(o.golden, 4);
  } catch (const GoldenFormatError& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  }
  Options o4 = o;
  o4.rank = 4;
  return with_context(o4, [&](const auto& ctx) {
    const auto rep = reproduce_a4(ctx, golden);
    const auto& r = ctx.ring();
    std::size_t matched = 0;
    for (const auto& row : rep.rows) matched += row.match;
    const bool ok = rep.terms_ok() && rep.sum_is_coefficient && rep.restriction_is_mu2_sum && rep.ctilde_is_restriction;
    if (o.format == "json") {
      ordered_json rows = ordered_json::array();
      for (const auto& row : rep.rows)
        rows.push_back({{"subword", row.label}, {"computed", row.computed}, {"expected", row.expected}, {"match", row.match}});
      ordered_json doc = {{"J", A4Example::J().to_string()},
                          {"w", word_to_string(A4Example::w())},
                          {"u", word_to_string(A4Example::u())},
                          {"terms", rows},
                          {"sum", to_json(r, rep.sum)},
                          {"sum_equals_root_polynomial_coefficient", rep.sum_is_coefficient},
                          {"restriction", to_json(r, rep.restriction)},
                          {"restriction_equals_mu2_sum", rep.restriction_is_mu2_sum},
                          {"restriction_equals_sum", rep.restriction_is_sum},
                          {"class_value_equals_restriction", rep.ctilde_is_restriction},
                          {"pass", ok}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "A4 example: J=" << A4Example::J().to_string() << " w=" << word_to_string(A4Example::w())
                << " u=" << word_to_string(A4Example::u()) << "\n";
      for (const auto& row : rep.rows) {
        std::cout << (row.match ? "  match   " : "  DIFF    ") << row.label << "  " << (row.computed.empty() ? "<missing>" : row.computed)
                  << "\n";
        if (!row.match) std::cout << "          expected  " << (row.expected.empty() ? "<absent>" : row.expected) << "\n";
      }
      auto line = [](bool pass, const std::string& s) { std::cout << (pass ? "PASS " : "FAIL ") << s << "\n"; };
      line(rep.terms_ok(), std::to_string(matched) + "/" + std::to_string(golden.size()) + " subword terms match the golden file");
      line(rep.sum_is_coefficient, "sum of terms = root-polynomial coefficient");
      line(rep.restriction_is_mu2_sum, "restriction = mu^2 * sum");
      std::cout << "info restriction = sum: " << (rep.restriction_is_sum ? "yes" : "no") << "\n";
      line(rep.ctilde_is_restriction, "C~^J_u at w = restriction");
      std::cout << "sum = " << to_text(r, rep.sum) << "\n";
    }
    return ok ? kPass : kFail;
  });
}

// ---------------------------------------------------------------------------

void add_check_opts(CLI::App* c, Options& o) {
  c->add_option("--lemma", o.lemmas, "check to run (repeatable)");
  c->add_flag("--all", o.all, "run every check of this group");
  c->add_option("--samples", o.samples, "random samples for sampled checks")->check(CLI::PositiveNumber);
}
void add_gamma_opts(CLI::App* c, Options& o) {
  c->add_option("--sign", o.sign, "+ or -");
  c->add_option("--element", o.element, "reduced word or one-line permutation");
}
void add_class_opts(CLI::App* c, Options& o) {
  c->add_option("--u", o.u, "element (word or permutation)");
  c->add_option("--w", o.w, "alias of --u");
  c->add_option("--variant", o.variant, "c, ctilde, cj, ctildej or dual");
}
void add_uw_opts(CLI::App* c, Options& o) {
  c->add_option("--u", o.u, "coset representative u in W^J");
  c->add_option("--w", o.w, "fixed point w");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig Schubert calculus in type A"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--rank", o.rank, "rank n of A_n (1..5)");
  app.add_option("--J", o.J, "parabolic index set, e.g. 1,2");
  app.add_option("--theory", o.theory, "m or h")->check(CLI::IsMember({"m", "h"}));
  auto* fmt = app.add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", o.seed, "seed for sampling");
  app.add_flag("--fast", o.fast, "probabilistic mode: evaluate at random points modulo 2^61-1");

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  auto* check = sub(&app, "check", "verify identities");
  add_check_opts(check, o);
  auto* klpoly = sub(&app, "klpoly", "Kazhdan-Lusztig polynomials");
  klpoly->add_option("--x", o.x, "lower element");
  klpoly->add_option("--w", o.w, "upper element");
  auto* gamma = sub(&app, "gamma", "KL basis element gamma^{+-}_w in the delta basis");
  add_gamma_opts(gamma, o);
  auto* cls = sub(&app, "class", "hyperbolic KL-Schubert class restricted to fixed points");
  add_class_opts(cls, o);
  auto* restrict_ = sub(&app, "restrict", "restriction C~^J_u at w via the twisted-algebra expansion");
  add_uw_opts(restrict_, o);
  auto* billey = sub(&app, "billey", "restriction coefficient via root polynomials");
  add_uw_opts(billey, o);
  billey->add_flag("--terms", o.terms, "list contributing subwords");
  billey->require_subcommand(0, 1);
  auto* billey_table = sub(billey, "table", "full restriction matrix over (w, u in W^J)");
  auto* repro = sub(&app, "reproduce-paper", "A4 restriction example against the golden file");
  repro->add_option("--golden", o.golden, "golden term file");

  auto* hecke = sub(&app, "hecke", "Hecke algebra commands");
  hecke->require_subcommand(1);
  auto* hecke_gamma = sub(hecke, "gamma", "KL basis element");
  add_gamma_opts(hecke_gamma, o);
  auto* hecke_check = sub(hecke, "check", "Hecke algebra identities");
  add_check_opts(hecke_check, o);

  auto* loc = sub(&app, "loc", "localization commands");
  loc->require_subcommand(1);
  auto* loc_kdual = sub(loc, "kdual", "K-theoretic duality pairing matrix");
  auto* loc_check = sub(loc, "check", "localization identities");
  add_check_opts(loc_check, o);

  auto* hyp = sub(&app, "hyp", "hyperbolic class commands");
  hyp->require_subcommand(1);
  auto* hyp_class = sub(hyp, "class", "hyperbolic class");
  add_class_opts(hyp_class, o);
  auto* hyp_duality = sub(hyp, "duality", "C / C~ pairing matrix");
  auto* hyp_check = sub(hyp, "check", "hyperbolic identities");
  add_check_opts(hyp_check, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }
  o.format_given = fmt->count() > 0;

  try {
    if (*check) return cmd_check(o, "");
    if (*klpoly) return cmd_klpoly(o);
    if (*gamma || *hecke_gamma) return cmd_gamma(o);
    if (*cls || *hyp_class) return cmd_class(o);
    if (*restrict_) return cmd_restrict(o);
    if (*billey_table) return cmd_billey_table(o);
    if (*billey) return cmd_billey(o);
    if (*repro) return cmd_reproduce(o);
    if (*hecke_check) return cmd_check(o, "hecke");
    if (*loc_kdual) return cmd_kdual(o);
    if (*loc_check) return cmd_check(o, "loc");
    if (*hyp_duality) return cmd_duality(o);
    if (*hyp_check) return cmd_check(o, "hyp");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
