#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sparsefac/examples.hpp"
#include "sparsefac/factorizer.hpp"
#include "sparsefac/hitting.hpp"
#include "sparsefac/polytope.hpp"

using namespace sparsefac;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint32_t prime = 7;
  std::uint32_t ext = 1;
  std::string sb_constant = "5";
  std::uint64_t cap = 0;
  std::string strategy = "grid";
  unsigned parallel = 1;
  bool json = false;
  bool no_extend = false;
};

SBConfig parse_sb(const Globals& g) {
  SBConfig sb;
  const std::string& s = g.sb_constant;
  try {
    const auto slash = s.find('/');
    const auto dot = s.find('.');
    if (slash != std::string::npos) {
      sb.c_num = std::stoull(s.substr(0, slash));
      sb.c_den = std::stoull(s.substr(slash + 1));
    } else if (dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      std::uint64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      sb.c_num = std::stoull(s.substr(0, dot).empty() ? "0" : s.substr(0, dot)) * den +
                 (frac.empty() ? 0 : std::stoull(frac));
      sb.c_den = den;
    } else {
      sb.c_num = std::stoull(s);
    }
  } catch (const std::exception&) {
    throw UsageError("invalid --sb-constant '" + s + "'");
  }
  if (sb.c_num == 0 || sb.c_den == 0) throw UsageError("--sb-constant must be positive");
  if (g.cap > 0) sb.user_cap = g.cap;
  return sb;
}

HittingStrategy parse_strategy(const std::string& s) {
  if (s == "grid") return HittingStrategy::grid;
  if (s == "ks") return HittingStrategy::ks;
  throw UsageError("unknown strategy '" + s + "' (expected grid or ks)");
}

Field make_field(const Globals& g) {
  if (g.ext == 0) throw UsageError("--ext must be at least 1");
  return Field::make(g.prime, g.ext);
}

FactorConfig factor_config(const Globals& g) {
  FactorConfig cfg;
  cfg.sb = parse_sb(g);
  cfg.anchors.sb = cfg.sb;
  cfg.strategy = parse_strategy(g.strategy);
  cfg.auto_extend = !g.no_extend;
  cfg.parallel = std::max(1u, g.parallel);
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Nonblank lines that are not comments.
std::vector<std::string> polynomial_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

std::vector<std::string> collect_inputs(const std::vector<std::string>& polys, const std::string& input) {
  std::vector<std::string> out = polys;
  if (!input.empty()) {
    const auto lines = polynomial_lines(input == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                                     : read_file(input));
    out.insert(out.end(), lines.begin(), lines.end());
  }
  if (out.empty()) throw UsageError("no polynomial given (use --poly or --input)");
  return out;
}

json field_json(const Field& f) { return json{{"p", f.characteristic()}, {"ext", f.degree()}}; }

// ---------------------------------------------------------------------------

int cmd_factor(const Globals& g, const std::vector<std::string>& polys, const std::string& input) {
  const Field field = make_field(g);
  const FactorConfig cfg = factor_config(g);
  const auto texts = collect_inputs(polys, input);
  bool first = true;
  for (const auto& text : texts) {
    const ParsedPoly parsed = parse_polynomial(text, field);
    const Factorization fz = factor(parsed.poly, cfg);
    if (g.json) {
      json rec{{"field", field_json(field)},
               {"input", format_polynomial(parsed.poly, parsed.style)},
               {"unit", field.format(fz.unit)},
               {"factors", json::array()}};
      for (const auto& f : fz.factors)
        rec["factors"].push_back({{"poly", format_polynomial(f.poly, parsed.style)}, {"multiplicity", f.multiplicity}});
      std::cout << rec.dump() << "\n";
      continue;
    }
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "field: " << field.name() << "\n"
              << "input: " << format_polynomial(parsed.poly, parsed.style) << "\n"
              << "unit: " << field.format(fz.unit) << "\n"
              << "factors: " << fz.factors.size() << "\n";
    for (const auto& f : fz.factors)
      std::cout << "  (" << format_polynomial(f.poly, parsed.style) << ")^" << f.multiplicity << "\n";
  }
  return 0;
}

struct Claim {
  std::string poly;
  std::string unit = "1";
  std::vector<std::string> factors;
  std::vector<unsigned> mults;
};

Claim claim_from_json(const std::string& text, Globals& g) {
  Claim c;
  try {
    const json j = json::parse(text);
    if (j.contains("field")) {
      g.prime = j["field"].at("p").get<std::uint32_t>();
      g.ext = j["field"].value("ext", 1u);
    }
    c.poly = j.at("input").get<std::string>();
    if (j.contains("unit")) c.unit = j["unit"].is_string() ? j["unit"].get<std::string>() : j["unit"].dump();
    for (const auto& f : j.value("factors", json::array())) {
      c.factors.push_back(f.at("poly").get<std::string>());
      c.mults.push_back(f.value("multiplicity", 1u));
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid claim record: ") + e.what());
  }
  return c;
}

int cmd_verify(Globals g, Claim claim, const std::string& input) {
  if (!input.empty()) claim = claim_from_json(read_file(input), g);
  if (claim.poly.empty()) throw UsageError("verify needs --poly or --input");
  if (claim.mults.empty()) claim.mults.assign(claim.factors.size(), 1);
  if (claim.mults.size() != claim.factors.size()) throw UsageError("--mult count must match --factor count");

  const Field field = make_field(g);
  const ParsedPoly f = parse_polynomial(claim.poly, field);
  std::size_t n = f.poly.nvars();
  std::vector<ParsedPoly> parts;
  for (const auto& t : claim.factors) {
    parts.push_back(parse_polynomial(t, field, n, f.style));
    n = std::max(n, parts.back().poly.nvars());
  }
  const SparsePoly target = parse_polynomial(claim.poly, field, n, f.style).poly;
  const SparsePoly unit_poly = parse_polynomial(claim.unit, field, 0, VarStyle::x_only).poly;
  if (!unit_poly.is_constant() || unit_poly.is_zero()) throw UsageError("unit must be a nonzero constant");

  Factorization fz{unit_poly.leading_term().coeff, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (claim.mults[i] == 0) throw UsageError("multiplicities must be positive");
    fz.factors.push_back(Factor{parse_polynomial(claim.factors[i], field, n, f.style).poly, claim.mults[i]});
  }
  const bool verdict = verify_factorization(target, fz, std::numeric_limits<std::uint32_t>::max());
  bool irreducible = true;
  for (const auto& fct : fz.factors) {
    if (fct.poly.is_constant()) {
      irreducible = false;
      continue;
    }
    const auto sub = factor(fct.poly, factor_config(g));
    irreducible = irreducible && sub.factors.size() == 1 && sub.factors[0].multiplicity == 1;
  }
  if (g.json) {
    std::cout << json{{"verdict", verdict}, {"factors_irreducible", irreducible}}.dump() << "\n";
  } else {
    std::cout << "verdict: " << (verdict ? "true" : "false") << "\n"
              << "factors irreducible: " << (irreducible ? "true" : "false") << "\n";
  }
  return 0;
}

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + std::to_string(p[i]);
  return s + ")";
}

int cmd_polytope(const Globals& g, const std::vector<std::string>& polys, const std::string& input, unsigned d,
                 bool uniform) {
  const Field field = make_field(g);
  const SBConfig sb = parse_sb(g);
  const auto texts = collect_inputs(polys, input);
  bool first = true;
  for (const auto& text : texts) {
    const ParsedPoly parsed = parse_polynomial(text, field);
    const Support e = support_of(parsed.poly);
    const unsigned deg = d > 0 ? d : std::max(1u, parsed.poly.individual_degree());
    const VertexSet v = newton_vertices(e);
    std::optional<UniformApproxOptions> opts;
    if (uniform) opts = UniformApproxOptions{};
    const CaratheodoryReport r = caratheodory_check(e, deg, sb, opts);
    if (g.json) {
      json rec{{"input", format_polynomial(parsed.poly, parsed.style)},
               {"dimension", e.dim()},
               {"points", r.points},
               {"vertices", r.vertices},
               {"degree", deg},
               {"exponent", r.exponent},
               {"bound_holds", r.bound_holds},
               {"vertex_list", json::array()}};
      for (const auto& p : v.vertices) rec["vertex_list"].push_back(p);
      if (uniform) rec["uniform_k"] = r.uniform_k ? json(*r.uniform_k) : json(nullptr);
      std::cout << rec.dump() << "\n";
      continue;
    }
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "input: " << format_polynomial(parsed.poly, parsed.style) << "\n"
              << "dimension: " << e.dim() << "\n"
              << "support size: " << r.points << "\n"
              << "vertices: " << r.vertices << "\n"
              << "degree bound: " << deg << "\n"
              << "exponent: " << r.exponent << "\n"
              << "bound t^exponent >= |E|: " << (r.bound_holds ? "holds" : "fails") << "\n";
    if (uniform)
      std::cout << "uniform k: " << (r.uniform_k ? std::to_string(*r.uniform_k) : std::string("not found")) << "\n";
    for (const auto& p : v.vertices) std::cout << "  vertex " << point_text(p) << "\n";
  }
  return 0;
}

int cmd_hitset(const Globals& g, std::uint64_t n, std::uint64_t s, std::uint64_t d, std::uint64_t k,
               std::uint64_t limit) {
  const Field field = make_field(g);
  HittingParams params{n, s, d, k, parse_strategy(g.strategy)};
  const HittingSet hs = gen_hitting_set(field, params);
  const std::uint64_t shown = limit > 0 ? std::min(limit, hs.size()) : hs.size();
  if (g.json) {
    json rec{{"field", field_json(field)}, {"strategy", g.strategy}, {"size", hs.size()}, {"points", json::array()}};
    for (std::uint64_t i = 0; i < shown; ++i) {
      json pt = json::array();
      for (Elem e : hs.at(i)) pt.push_back(field.format(e));
      rec["points"].push_back(pt);
    }
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "field: " << field.name() << "\n"
            << "strategy: " << g.strategy << "\n"
            << "size: " << hs.size() << "\n";
  for (std::uint64_t i = 0; i < shown; ++i) {
    std::string line = "(";
    const auto pt = hs.at(i);
    for (std::size_t j = 0; j < pt.size(); ++j) line += (j ? ", " : "") + field.format(pt[j]);
    std::cout << line << ")\n";
  }
  if (shown < hs.size()) std::cout << "... " << hs.size() - shown << " more\n";
  return 0;
}

int cmd_examples(const Globals& g, const std::string& which, std::size_t n, unsigned d, unsigned m) {
  if (which == "hadamard") {
    const HadamardReport r = hadamard_example(m);
    if (g.json) {
      std::cout << json{{"example", "hadamard"},
                        {"m", r.m},
                        {"n", r.n},
                        {"subspaces", r.subspaces},
                        {"points", r.points.size()},
                        {"vertices", r.vertices.vertices.size()},
                        {"distinct_subspace_points", r.distinct_subspace_points},
                        {"all_in_hull", r.all_in_hull}}
                       .dump()
                << "\n";
    } else {
      std::cout << "example: hadamard\n"
                << "m: " << r.m << "\n"
                << "hull vertices: " << r.vertices.vertices.size() << " (claimed n = " << r.n << ")\n"
                << "subspaces of F_2^" << r.m << ": " << r.subspaces << "\n"
                << "distinct subspace points: " << r.distinct_subspace_points << "\n"
                << "total points: " << r.points.size() << "\n"
                << "all subspace points inside the hull: " << (r.all_in_hull ? "true" : "false") << "\n";
    }
    return 0;
  }
  const Field field = make_field(g);
  SparsityExample ex;
  std::string claim_f, claim_g;
  if (which == "eg1") {
    ex = cyclotomic_product_example(field, n, d);
    claim_f = "2^" + std::to_string(n);
    claim_g = std::to_string(d) + "^" + std::to_string(n);
  } else if (which == "eg2") {
    ex = frobenius_example(field, n, d);
    claim_f = "n";
    claim_g = "C(" + std::to_string(n + d - 1) + ", " + std::to_string(d) + ")";
  } else {
    throw UsageError("unknown example '" + which + "' (expected eg1, eg2 or hadamard)");
  }
  if (g.json) {
    std::cout << json{{"example", which},
                      {"field", field_json(field)},
                      {"n", n},
                      {"d", d},
                      {"f_sparsity", ex.f.sparsity()},
                      {"f_expected", ex.expected_f},
                      {"g_sparsity", ex.g.sparsity()},
                      {"g_expected", ex.expected_g},
                      {"g_divides_f", ex.divides}}
                     .dump()
              << "\n";
  } else {
    std::cout << "example: " << which << "\n"
              << "field: " << field.name() << "\n"
              << "n: " << n << ", d: " << d << "\n"
              << "f sparsity: " << ex.f.sparsity() << " (claimed " << claim_f << " = " << ex.expected_f << ")\n"
              << "factor sparsity: " << ex.g.sparsity() << " (claimed " << claim_g << " = " << ex.expected_g << ")\n"
              << "factor divides f: " << (ex.divides ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic factorization of sparse multivariate polynomials over finite fields", "sparsefac"};
  app.require_subcommand(1);
  Globals g;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--prime,-p", g.prime, "Field characteristic")->capture_default_str();
    sub->add_option("--ext,-e", g.ext, "Extension degree")->capture_default_str();
    sub->add_option("--sb-constant", g.sb_constant, "Constant C of the sparsity bound (e.g. 5, 2.5, 9/2)")
        ->capture_default_str();
    sub->add_option("--cap", g.cap, "Explicit factor sparsity cap (0 = none)");
    sub->add_option("--strategy", g.strategy, "Hitting-set strategy: grid or ks")->capture_default_str();
    sub->add_option("--parallel", g.parallel, "Worker threads for line factorizations")->capture_default_str();
    sub->add_flag("--json", g.json, "Structured output (one JSON object per record)");
  };

  std::vector<std::string> polys;
  std::string input;

  auto* fac = app.add_subcommand("factor", "Factor polynomials");
  add_globals(fac);
  fac->add_option("--poly", polys, "Polynomial text (repeatable)");
  fac->add_option("--input,-i", input, "File with one polynomial per line ('-' for stdin)");
  fac->add_flag("--no-extend", g.no_extend, "Fail instead of moving to an extension field");

  Claim claim;
  std::string claim_input;
  auto* ver = app.add_subcommand("verify", "Check a claimed factorization by re-multiplication");
  add_globals(ver);
  ver->add_option("--poly", claim.poly, "Polynomial");
  ver->add_option("--unit", claim.unit, "Unit")->capture_default_str();
  ver->add_option("--factor", claim.factors, "Claimed factor (repeatable)");
  ver->add_option("--mult", claim.mults, "Multiplicity of each factor, in order (default 1)");
  ver->add_option("--input,-i", claim_input, "Factorization record in the factor --json format");

  unsigned poly_d = 0;
  bool uniform = false;
  auto* pol = app.add_subcommand("polytope", "Newton-polytope statistics and sparsity-bound checks");
  add_globals(pol);
  pol->add_option("--poly", polys, "Polynomial text (repeatable)");
  pol->add_option("--input,-i", input, "File with one polynomial per line");
  pol->add_option("--d", poly_d, "Degree parameter (default: individual degree)");
  pol->add_flag("--uniform", uniform, "Also search for a uniform vertex-combination certificate");

  std::uint64_t hn = 2, hs = 1, hd = 1, hk = 1, limit = 0;
  auto* hit = app.add_subcommand("hitset", "Dump a hitting set");
  add_globals(hit);
  hit->add_option("--n", hn, "Number of variables")->capture_default_str();
  hit->add_option("--s", hs, "Sparsity")->capture_default_str();
  hit->add_option("--d", hd, "Individual degree")->capture_default_str();
  hit->add_option("--k", hk, "Number of factors in the product")->capture_default_str();
  hit->add_option("--limit", limit, "Print at most this many points (0 = all)");

  std::string which = "eg1";
  std::size_t en = 3;
  unsigned ed = 2, em = 3;
  auto* exa = app.add_subcommand("examples", "Sparsity blow-up and Hadamard demonstrations");
  add_globals(exa);
  exa->add_option("--which", which, "eg1, eg2 or hadamard")->capture_default_str();
  exa->add_option("--n", en, "Number of variables")->capture_default_str();
  exa->add_option("--d", ed, "Degree parameter")->capture_default_str();
  exa->add_option("--m", em, "Hadamard dimension m (n = 2^m)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*fac) return cmd_factor(g, polys, input);
    if (*ver) return cmd_verify(g, claim, claim_input);
    if (*pol) return cmd_polytope(g, polys, input, poly_d, uniform);
    if (*hit) return cmd_hitset(g, hn, hs, hd, hk, limit);
    if (*exa) return cmd_examples(g, which, en, ed, em);
  } catch (const FieldTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
