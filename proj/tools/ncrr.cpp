#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncreal/errors.hpp"
#include "ncreal/parse.hpp"
#include "ncreal/polymatrix.hpp"
#include "ncreal/realrad.hpp"
#include "ncreal/serialize.hpp"

using namespace ncreal;

namespace {

// Exit codes: 0 success/yes, 1 no, 2 unknown or undecided, 64 usage,
// 65 parse error.
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned seed = 1;
  double tol = 1e-9;
  int max_iter = 10000;
  long long den_cap = 1000000;
  int degree_cap = -1;  // command-specific default when negative
  bool trace = false;
  std::string format = "text";
  int g = -1;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "random seed for the feasibility search");
  cmd->add_option("--tol", o.tol, "numeric tolerance of the projection loop");
  cmd->add_option("--max-iter", o.max_iter, "iteration budget per search");
  cmd->add_option("--den-cap", o.den_cap, "denominator cap when rounding to rationals");
  cmd->add_option("--degree-cap", o.degree_cap, "degree cap (alpha search support / factorization)");
  cmd->add_option("-g,--vars", o.g, "ambient variable count (default: inferred)");
  cmd->add_option("--format", o.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--trace", o.trace, "include the per-round trace in reports");
}

FeasConfig feas_of(const Options& o) {
  FeasConfig cfg;
  cfg.random_seed = o.seed;
  cfg.numeric_tolerance = o.tol;
  cfg.max_iterations = o.max_iter;
  cfg.rounding_denominator_cap = BigInt(o.den_cap);
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Re-raises parse errors with the caret excerpt rendered against the source.
template <typename F>
auto with_diagnostics(const std::string& text, const std::string& label, F f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(e.diagnostic(),
                     label + ": " + format_diagnostic(text, e.diagnostic()));
  }
}

std::vector<NcPoly> load_polys(const std::string& path) {
  const std::string text = slurp(path);
  std::vector<NcPoly> polys =
      with_diagnostics(text, path, [&] { return parse_poly_file(text); });
  if (polys.empty()) throw UsageError("no polynomials in file: " + path);
  return polys;
}

NcPoly parse_poly_arg(const std::string& text) {
  return with_diagnostics(text, "--poly", [&] { return parse_poly(text); });
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string render_trace(const RealRadicalTrace& t) {
  std::ostringstream out;
  for (const RealRadicalRound& r : t.rounds) {
    out << "round " << r.k << ": degree bound " << r.degree_bound
        << ", low dim " << r.low_dim << ", " << r.generators.size()
        << " generators";
    if (r.fast_path) out << ", fast path";
    if (r.gram_empty) out << ", empty gram subspace";
    if (r.has_certificate)
      out << (r.certificate.kind == PsdCertificate::Kind::Feasible
                  ? ", feasible" : ", infeasible");
    out << "\n";
    for (const NcPoly& q : r.extracted) out << "  + " << print_poly(q) << "\n";
  }
  return out.str();
}

int cmd_realrad(const std::string& file, const Options& o) {
  const std::vector<NcPoly> gens = load_polys(file);
  RealRadicalResult res;
  try {
    res = real_radical(gens, o.g, feas_of(o));
  } catch (const RealRadicalUndecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    if (o.trace) std::cerr << render_trace(e.trace);
    return kExitUnknown;
  }
  Json j;
  j["g"] = res.ideal.g;
  j["degree_bound"] = res.ideal.d;
  j["unit"] = res.ideal.unit_flag;
  Json jg = Json::array();
  std::ostringstream text;
  text << "variables: " << res.ideal.g << "\n"
       << "degree bound: " << res.ideal.d << "\n";
  if (res.ideal.unit_flag) text << "unit ideal\n";
  text << "generators:\n";
  for (const NcPoly& p : ideal_generators(res.ideal)) {
    jg.push_back(to_json(p));
    text << "  " << print_poly(p) << "\n";
  }
  j["generators"] = std::move(jg);
  if (o.trace) {
    j["trace"] = to_json(res.trace);
    text << render_trace(res.trace);
  }
  emit(o, j, text.str());
  return 0;
}

int cmd_member(const std::string& file, const std::string& poly, const Options& o) {
  const NcPoly q = parse_poly_arg(poly);
  const NormalizedIdeal n = normalize_ideal(load_polys(file), o.g);
  const bool yes = member(n, q);
  emit(o, Json{{"member", yes}}, yes ? "yes\n" : "no\n");
  return yes ? 0 : kExitNo;
}

int cmd_isreal(const std::string& file, const Options& o) {
  bool yes = false;
  try {
    yes = is_real(load_polys(file), o.g, feas_of(o));
  } catch (const UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUnknown;
  }
  emit(o, Json{{"real", yes}}, yes ? "yes\n" : "no\n");
  return yes ? 0 : kExitNo;
}

int cmd_alpha(const std::string& file, const std::string& poly, const Options& o) {
  const NcPoly a = parse_poly_arg(poly);
  const std::vector<NcPoly> gens = load_polys(file);
  int cap = o.degree_cap;
  if (cap < 0) {
    const NormalizedIdeal n = normalize_ideal(gens, o.g);
    cap = 2 * n.d - 2;  // the certificate degree the one-step theory covers
  }
  const Ternary t = alpha_member(a, gens, cap, o.g, feas_of(o));
  const char* name = t == Ternary::yes ? "yes" : t == Ternary::no ? "no" : "unknown";
  emit(o, Json{{"alpha_member", name}}, std::string(name) + "\n");
  return t == Ternary::yes ? 0 : t == Ternary::no ? kExitNo : kExitUnknown;
}

int cmd_eval(const std::string& file, const std::string& pointfile, const Options& o) {
  const std::vector<NcPoly> polys = load_polys(file);
  const std::string ptext = slurp(pointfile);
  const MatrixPoint pt =
      with_diagnostics(ptext, pointfile, [&] { return parse_point_file(ptext); });
  Json values = Json::array();
  std::ostringstream text;
  for (const NcPoly& p : polys) {
    const std::vector<Rational> v = evaluate(p, pt);
    Json row = Json::array();
    text << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      row.push_back(to_json(v[i]));
      text << (i ? ", " : "") << rational_to_string(v[i]);
    }
    text << "]\n";
    values.push_back(std::move(row));
  }
  emit(o, Json{{"values", values}}, text.str());
  return 0;
}

UniPolyMatrix load_first_matrix(const std::string& path) {
  const std::string text = slurp(path);
  const std::vector<UniPolyMatrix> ms =
      with_diagnostics(text, path, [&] { return parse_unipoly_matrix_file(text); });
  if (ms.empty()) throw UsageError("no matrices in file: " + path);
  return ms.front();
}

std::vector<UniPolyMatrix> load_matrices(const std::string& path) {
  const std::string text = slurp(path);
  std::vector<UniPolyMatrix> ms =
      with_diagnostics(text, path, [&] { return parse_unipoly_matrix_file(text); });
  if (ms.empty()) throw UsageError("no matrices in file: " + path);
  return ms;
}

int cmd_matpoly_smith(const std::string& file, const Options& o) {
  const SmithForm f = smith_normal_form(load_first_matrix(file));
  std::ostringstream text;
  text << "d: " << print_unipoly_matrix(f.D) << "\n"
       << "u: " << print_unipoly_matrix(f.U) << "\n"
       << "v: " << print_unipoly_matrix(f.V) << "\n";
  emit(o, to_json(f), text.str());
  return 0;
}

int cmd_matpoly_realrad(const std::string& file, const Options& o) {
  const int cap = o.degree_cap < 0 ? 12 : o.degree_cap;
  const ERadical r = eradical_full(load_matrices(file), cap);
  Json j;
  j["generator"] = to_json(r.G);
  Json rad = Json::array();
  for (const UniPoly& p : r.radicals) rad.push_back(to_json(p));
  j["radicals"] = std::move(rad);
  emit(o, j, print_unipoly_matrix(r.G) + "\n");
  return 0;
}

int cmd_matpoly_member(const std::string& file, const std::string& mat, const Options& o) {
  const int cap = o.degree_cap < 0 ? 12 : o.degree_cap;
  const UniPolyMatrix q = with_diagnostics(mat, "--mat", [&] { return parse_unipoly_matrix(mat); });
  const bool yes = eradical_member(q, load_matrices(file), cap);
  emit(o, Json{{"member", yes}}, yes ? "yes\n" : "no\n");
  return yes ? 0 : kExitNo;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"real radicals of left ideals in the free *-algebra"};
  app.require_subcommand(1);
  Options o;

  std::string file, poly, pointfile, mat;

  CLI::App* realrad = app.add_subcommand("realrad", "real radical of the ideal in FILE");
  realrad->add_option("file", file, "one polynomial per line")->required();
  add_common(realrad, o);

  CLI::App* memberc = app.add_subcommand("member", "left-ideal membership");
  memberc->add_option("file", file, "one polynomial per line")->required();
  memberc->add_option("--poly", poly, "candidate polynomial")->required();
  add_common(memberc, o);

  CLI::App* isreal = app.add_subcommand("isreal", "is the ideal real?");
  isreal->add_option("file", file, "one polynomial per line")->required();
  add_common(isreal, o);

  CLI::App* alpha = app.add_subcommand("alpha", "alpha-radical membership");
  alpha->add_option("file", file, "one polynomial per line")->required();
  alpha->add_option("--poly", poly, "candidate polynomial")->required();
  add_common(alpha, o);

  CLI::App* eval = app.add_subcommand("eval", "evaluate at a matrix point");
  eval->add_option("file", file, "one polynomial per line")->required();
  eval->add_option("--point", pointfile, "matrix point file")->required();
  add_common(eval, o);

  CLI::App* matpoly = app.add_subcommand("matpoly", "matrices over Q[x]");
  matpoly->require_subcommand(1);
  CLI::App* smith = matpoly->add_subcommand("smith", "Smith normal form");
  smith->add_option("file", file, "matrix file")->required();
  add_common(smith, o);
  CLI::App* mreal = matpoly->add_subcommand("realrad", "real radical generator");
  mreal->add_option("file", file, "one generator matrix per line")->required();
  add_common(mreal, o);
  CLI::App* mmember = matpoly->add_subcommand("member", "radical membership");
  mmember->add_option("file", file, "one generator matrix per line")->required();
  mmember->add_option("--mat", mat, "candidate matrix")->required();
  add_common(mmember, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(realrad)) return cmd_realrad(file, o);
    if (app.got_subcommand(memberc)) return cmd_member(file, poly, o);
    if (app.got_subcommand(isreal)) return cmd_isreal(file, o);
    if (app.got_subcommand(alpha)) return cmd_alpha(file, poly, o);
    if (app.got_subcommand(eval)) return cmd_eval(file, pointfile, o);
    if (matpoly->got_subcommand(smith)) return cmd_matpoly_smith(file, o);
    if (matpoly->got_subcommand(mreal)) return cmd_matpoly_realrad(file, o);
    if (matpoly->got_subcommand(mmember)) return cmd_matpoly_member(file, mat, o);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const RealRadicalUndecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const DegreeCapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
