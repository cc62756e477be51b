#include "eulerlab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerlab/det.hpp"
#include "eulerlab/distributions.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/gf.hpp"
#include "eulerlab/serialize.hpp"
#include "eulerlab/symmetry.hpp"
#include "eulerlab/verify.hpp"

namespace eulerlab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct PolyArgs {
  std::string family = "des_exc";
  int n = 1;
  std::optional<int> i;
  std::optional<int> k;

  [[nodiscard]] DistributionSpec spec() const {
    DistributionSpec s;
    s.family = parse_family(family);
    s.n = n;
    if (s.family == Family::xi) s.extra = i;
    if (s.family == Family::exc_slice) s.extra = k;
    return s;
  }
};

void add_poly_args(CLI::App* cmd, PolyArgs& args) {
  cmd->add_option("--family", args.family,
                  "classic_eulerian | des_exc | derangement | trivariate | xi | exc_slice")
      ->capture_default_str();
  cmd->add_option("--n", args.n, "size of the symmetric group")->required();
  cmd->add_option("--i", args.i, "index i for family xi");
  cmd->add_option("--k", args.k, "excedance count for family exc_slice");
}

ordered_json poly_json(const MPoly& f) { return ordered_json::parse(to_canonical_json(f)); }

std::string render(const MPoly& f, const std::string& format) {
  if (format == "json") return to_canonical_json(f);
  if (format == "latex") return to_latex(f);
  if (format == "text") return to_text(f);
  throw usage_error("unsupported format '" + format + "'");
}

std::string join(const std::vector<Rational>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].to_string();
  }
  return out;
}

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  if (out.empty()) throw usage_error("empty rational list");
  return out;
}

ordered_json rationals_json(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

int cmd_table(int max_n, const std::string& format, std::ostream& out) {
  if (max_n < 1 || max_n > 11) throw usage_error("table: --max-n must lie in [1, 11]");
  struct Row {
    int n;
    Rational perms, derangements, fubini;
    std::vector<Rational> eulerian;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= max_n; ++n) {
    const MPoly a = eulerian_st(n);
    Row row{n, factorial(n), derangement_poly(n).evaluate(std::vector<Rational>{Rational(1)}),
            a.evaluate(std::vector<Rational>{Rational(2), Rational(1)}),
            a.specialize("s", Rational(1)).with_vars(vars::kT).univariate_coeffs("t")};
    rows.push_back(std::move(row));
  }
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o;
      o["n"] = r.n;
      o["permutations"] = r.perms.to_string();
      o["derangements"] = r.derangements.to_string();
      o["fubini"] = r.fubini.to_string();
      o["eulerian"] = rationals_json(r.eulerian);
      arr.push_back(std::move(o));
    }
    out << arr.dump() << '\n';
  } else if (format == "csv") {
    out << "n,permutations,derangements,fubini,eulerian\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.perms << ',' << r.derangements << ',' << r.fubini << ',' << join(r.eulerian, ";") << '\n';
    }
  } else if (format == "text") {
    for (const auto& r : rows) {
      out << "n=" << r.n << "  n!=" << r.perms << "  derangements=" << r.derangements << "  fubini=" << r.fubini
          << "  eulerian=[" << join(r.eulerian, ", ") << "]\n";
    }
  } else {
    throw usage_error("table: unsupported format '" + format + "'");
  }
  return kExitOk;
}

MPoly specialized(const PolyArgs& args, const std::optional<std::string>& p, const std::optional<std::string>& q,
                  const std::optional<std::string>& s) {
  MPoly f = build(args.spec());
  if (p) f = f.specialize("p", Rational::parse(*p));
  if (q) f = f.specialize("q", Rational::parse(*q));
  if (s) f = f.specialize("s", Rational::parse(*s));
  return f;
}

int cmd_decompose(const PolyArgs& args, const std::string& var, std::optional<int> d,
                  const std::optional<std::string>& p, const std::optional<std::string>& q,
                  const std::optional<std::string>& s, const std::string& format, std::ostream& out) {
  const MPoly f = specialized(args, p, q, s);
  const int degree = d.value_or(args.n - 1);
  const SymDecomp dec = sym_decompose(f, var, degree);
  if (format == "json") {
    ordered_json o;
    o["var"] = dec.var;
    o["ambient_degree"] = dec.ambient_degree;
    o["a"] = poly_json(dec.a);
    o["b"] = poly_json(dec.b);
    out << o.dump() << '\n';
  } else {
    out << "a = " << render(dec.a, format) << '\n' << "b = " << render(dec.b, format) << '\n';
  }
  return kExitOk;
}

int cmd_gamma(const std::optional<std::string>& coeffs, const PolyArgs& args, bool have_family, const std::string& var,
              std::optional<int> d, const std::optional<std::string>& p, const std::optional<std::string>& q,
              const std::optional<std::string>& s, const std::string& format, std::ostream& out) {
  if (coeffs) {
    const std::vector<Rational> list = parse_rational_list(*coeffs);
    const RationalGamma g = gamma_expand(list, d.value_or(static_cast<int>(list.size()) - 1));
    const ShapeFlags flags = shape_checks(list);
    if (format == "json") {
      ordered_json o;
      o["ambient_degree"] = g.ambient_degree;
      o["gamma"] = rationals_json(g.gammas);
      o["gamma_nonnegative"] = all_nonnegative(g);
      o["unimodal"] = flags.unimodal;
      out << o.dump() << '\n';
    } else {
      out << "gamma = [" << join(g.gammas, ", ") << "]\n";
    }
    return kExitOk;
  }
  if (!have_family) throw usage_error("gamma: give --coeffs or --family/--n");
  const MPoly f = specialized(args, p, q, s);
  const int degree = d.value_or(args.n - 1);
  const SymDecomp dec = sym_decompose(f, var, degree);
  const GammaExpansion ga = gamma_expand(dec.a, var, degree);
  const GammaExpansion gb = gamma_expand(dec.b, var, degree - 1);
  auto emit_text = [&](const char* part, const GammaExpansion& g) {
    out << part << ": d=" << g.ambient_degree << " nonnegative=" << (coefficientwise_nonnegative(g) ? "yes" : "no")
        << '\n';
    for (std::size_t i = 0; i < g.gammas.size(); ++i) {
      out << "  gamma_" << i << " = " << render(g.gammas[i], format == "json" ? "text" : format) << '\n';
    }
  };
  if (format == "json") {
    ordered_json o;
    for (const auto& [part, g] : {std::pair{"a", &ga}, std::pair{"b", &gb}}) {
      ordered_json arr = ordered_json::array();
      for (const auto& gamma : g->gammas) arr.push_back(poly_json(gamma));
      o[part] = {{"ambient_degree", g->ambient_degree},
                 {"gamma", arr},
                 {"nonnegative", coefficientwise_nonnegative(*g)}};
    }
    out << o.dump() << '\n';
  } else {
    emit_text("a", ga);
    emit_text("b", gb);
  }
  return kExitOk;
}

int cmd_det(int n, bool unsigned_matrix, const std::string& format, std::ostream& out) {
  const MPoly det = det_Mnr(n, unsigned_matrix ? MatrixConvention::unsigned_band : MatrixConvention::signed_band);
  std::optional<MPoly> a;
  if (n >= 1 && !unsigned_matrix) a = reconstruct_a(n);
  if (n == 0) a = MPoly(vars::kST);  // a_0 = 0 by convention
  if (format == "json") {
    ordered_json o;
    o["n"] = n;
    o["matrix"] = unsigned_matrix ? "unsigned" : "signed";
    o["det"] = poly_json(det);
    if (a) o["a"] = poly_json(*a);
    out << o.dump() << '\n';
  } else {
    out << "det(M_{" << n << ",r}) = " << render(det, format) << '\n';
    if (a) out << "a_" << n << "(s,t) = " << render(*a, format) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& check, int max_n, const std::string& reading, const std::string& eq1_reading,
               std::ostream& out) {
  std::vector<verify::CheckResult> results;
  if (check == "thm01") {
    if (reading != "literal" && reading != "transposed") throw usage_error("unknown --reading '" + reading + "'");
    results.push_back(verify::xi_expansion(std::min(max_n, 9),
                                    reading == "literal" ? XiReading::literal : XiReading::transposed));
  } else if (check == "eq1" && eq1_reading != "exchanged") {
    if (eq1_reading != "literal") throw usage_error("unknown --eq1-reading '" + eq1_reading + "'");
    results.push_back(verify::closed_form(std::min(max_n, 9), 6, gf::Eq1Reading::literal));
  } else {
    results = verify::run(check, max_n);
  }
  bool ok = true;
  for (const auto& r : results) {
    out << "[" << r.name << "] " << (r.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& line : r.lines) out << "  " << line << '\n';
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
    ok = ok && r.pass;
  }
  out << (ok ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_scan(int min_n, int max_n, const std::string& p_list, const std::string& q_list, bool force,
             const std::string& format, std::ostream& out, std::ostream& err) {
  if (min_n < 1 || max_n > 9 || min_n > max_n) throw usage_error("scan: need 1 <= --min-n <= --max-n <= 9");
  const auto ps = parse_rational_list(p_list);
  const auto qs = parse_rational_list(q_list);
  std::vector<ScanReport> reports;
  for (int n = min_n; n <= max_n; ++n) {
    const MPoly tri = trivariate(n);
    for (const auto& p : ps) {
      for (const auto& q : qs) reports.push_back(conjecture_scan(tri, n, p, q, force));
    }
  }
  std::size_t counterexamples = 0;
  for (const auto& r : reports) {
    if (r.in_hypothesis && !(r.gamma_positive && r.alternatingly_increasing)) ++counterexamples;
  }
  if (format == "csv") {
    out << "n,p,q,gamma_a,gamma_b,gamma_positive,alternatingly_increasing,unimodal,modes,in_hypothesis\n";
    for (const auto& r : reports) {
      out << r.n << ',' << r.p << ',' << r.q << ',' << join(r.gamma_a.gammas, ";") << ','
          << join(r.gamma_b.gammas, ";") << ',' << (r.gamma_positive ? "true" : "false") << ','
          << (r.alternatingly_increasing ? "true" : "false") << ',' << (r.unimodal ? "true" : "false") << ','
          << join(r.modes, ";") << ',' << (r.in_hypothesis ? "true" : "false") << '\n';
    }
  } else if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json o;
      o["n"] = r.n;
      o["p"] = r.p.to_string();
      o["q"] = r.q.to_string();
      o["coeffs"] = rationals_json(r.coeffs);
      o["gamma_a"] = rationals_json(r.gamma_a.gammas);
      o["gamma_b"] = rationals_json(r.gamma_b.gammas);
      o["gamma_positive"] = r.gamma_positive;
      o["alternatingly_increasing"] = r.alternatingly_increasing;
      o["unimodal"] = r.unimodal;
      o["modes"] = r.modes;
      o["in_hypothesis"] = r.in_hypothesis;
      arr.push_back(std::move(o));
    }
    out << arr.dump() << '\n';
  } else {
    throw usage_error("scan: unsupported format '" + format + "'");
  }
  if (counterexamples > 0) err << "scan: " << counterexamples << " grid point(s) violate the conjectured shape\n";
  return kExitOk;
}

int cmd_export(const PolyArgs& args, bool have_family, std::optional<int> det_n, const std::string& path,
               std::ostream& out) {
  MPoly value;
  if (det_n) {
    value = det_Mnr(*det_n);
  } else if (have_family) {
    value = build(args.spec());
  } else {
    throw usage_error("export: give --family/--n or --det");
  }
  write_fixture(path, value);
  const MPoly back = read_fixture(path);
  if (back != value) {
    out << "FAIL round-trip mismatch for " << path << '\n';
    return kExitCheckFailed;
  }
  out << "wrote " << path << " (" << value.size() << " terms)\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"eulerlab: descent/excedance Eulerian polynomials, symmetric decompositions and identity checks", "eulerlab"};
  app.require_subcommand(1);
  std::string format;

  auto* table = app.add_subcommand("table", "counts per n: n!, derangements, Fubini numbers, Eulerian numbers");
  int table_max_n = 7;
  std::string table_format = "text";
  table->add_option("--max-n", table_max_n)->capture_default_str();
  table->add_option("--format", table_format, "text | csv | json")->capture_default_str();

  auto* poly = app.add_subcommand("poly", "emit a distribution polynomial");
  PolyArgs poly_args;
  std::string poly_format = "text";
  add_poly_args(poly, poly_args);
  poly->add_option("--format", poly_format, "json | latex | text")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "symmetric decomposition f = a + var*b");
  PolyArgs dec_args;
  std::string dec_var = "t";
  std::string dec_format = "text";
  std::optional<int> dec_d;
  std::optional<std::string> dec_p, dec_q, dec_s;
  add_poly_args(decompose, dec_args);
  decompose->add_option("--var", dec_var)->capture_default_str();
  decompose->add_option("--d", dec_d, "ambient degree (default n-1)");
  decompose->add_option("--p", dec_p, "specialize p (a/b)");
  decompose->add_option("--q", dec_q, "specialize q (a/b)");
  decompose->add_option("--s", dec_s, "specialize s (a/b)");
  decompose->add_option("--format", dec_format, "json | latex | text")->capture_default_str();

  auto* gamma = app.add_subcommand("gamma", "gamma expansion of a palindromic polynomial or of both decomposition parts");
  std::optional<std::string> gamma_coeffs;
  PolyArgs gamma_args;
  std::string gamma_var = "t";
  std::string gamma_format = "text";
  std::optional<int> gamma_d;
  std::optional<std::string> gamma_p, gamma_q, gamma_s;
  gamma->add_option("--coeffs", gamma_coeffs, "comma-separated coefficients, constant term first");
  auto* gamma_family = gamma->add_option("--family", gamma_args.family);
  auto* gamma_n = gamma->add_option("--n", gamma_args.n);
  gamma->add_option("--i", gamma_args.i);
  gamma->add_option("--k", gamma_args.k);
  gamma->add_option("--var", gamma_var)->capture_default_str();
  gamma->add_option("--d", gamma_d, "ambient degree");
  gamma->add_option("--p", gamma_p);
  gamma->add_option("--q", gamma_q);
  gamma->add_option("--s", gamma_s);
  gamma->add_option("--format", gamma_format, "json | latex | text")->capture_default_str();

  auto* det = app.add_subcommand("det", "det(M_{n,r}) over Q[t,r] and the reconstructed a_n(s,t)");
  int det_n = 0;
  bool det_unsigned = false;
  std::string det_format = "latex";
  det->add_option("--n", det_n)->required();
  det->add_flag("--unsigned", det_unsigned, "use the unsigned band matrix (does not reproduce f_n)");
  det->add_option("--format", det_format, "json | latex | text")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
  std::string check = "all";
  int verify_max_n = 7;
  std::string xi_reading = "literal";
  std::string eq1_reading = "exchanged";
  verify_cmd->add_option("--check", check, "all | macmahon | thm01 | thm20 | eq1 | gf | thT1 | fubini | li-binomial")
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify_max_n)->capture_default_str();
  verify_cmd->add_option("--reading", xi_reading, "xi reading for thm01: literal | transposed")->capture_default_str();
  verify_cmd->add_option("--eq1-reading", eq1_reading, "exchanged | literal")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "gamma-positivity scan of the trivariate decomposition");
  int scan_min_n = 1;
  int scan_max_n = 7;
  std::string scan_p = "2";
  std::string scan_q = "1";
  bool scan_force = false;
  std::string scan_format = "csv";
  scan->add_option("--min-n", scan_min_n)->capture_default_str();
  scan->add_option("--max-n", scan_max_n)->capture_default_str();
  scan->add_option("--p", scan_p, "comma-separated rationals")->capture_default_str();
  scan->add_option("--q", scan_q, "comma-separated rationals")->capture_default_str();
  scan->add_flag("--force", scan_force, "allow points outside p > 1, q >= 1");
  scan->add_option("--format", scan_format, "csv | json")->capture_default_str();

  auto* exp = app.add_subcommand("export", "write a canonical JSON fixture and check it round-trips");
  PolyArgs exp_args;
  std::optional<int> exp_det;
  std::string exp_out;
  auto* exp_family = exp->add_option("--family", exp_args.family);
  exp->add_option("--n", exp_args.n);
  exp->add_option("--i", exp_args.i);
  exp->add_option("--k", exp_args.k);
  exp->add_option("--det", exp_det, "export det(M_{n,r}) instead of a distribution");
  exp->add_option("--out", exp_out, "output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_max_n, table_format, out);
    if (*poly) {
      out << render(build(poly_args.spec()), poly_format) << '\n';
      return kExitOk;
    }
    if (*decompose) return cmd_decompose(dec_args, dec_var, dec_d, dec_p, dec_q, dec_s, dec_format, out);
    if (*gamma) {
      const bool have_family = gamma_family->count() > 0 && gamma_n->count() > 0;
      return cmd_gamma(gamma_coeffs, gamma_args, have_family, gamma_var, gamma_d, gamma_p, gamma_q, gamma_s,
                       gamma_format, out);
    }
    if (*det) return cmd_det(det_n, det_unsigned, det_format, out);
    if (*verify_cmd) return cmd_verify(check, verify_max_n, xi_reading, eq1_reading, out);
    if (*scan) return cmd_scan(scan_min_n, scan_max_n, scan_p, scan_q, scan_force, scan_format, out, err);
    if (*exp) return cmd_export(exp_args, exp_family->count() > 0, exp_det, exp_out, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const shape_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const identity_violation& e) {
    err << "identity violation: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace eulerlab::cli
