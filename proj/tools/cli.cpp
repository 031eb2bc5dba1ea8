#include "arith/cli.hpp"

#include "arith/errors.hpp"
#include "arith/matrix.hpp"
#include "arith/oracle.hpp"
#include "arith/poly_io.hpp"
#include "arith/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace arith::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string poly;
  std::string file;
  std::string vars;
  bool json = false;
  std::size_t max_candidates = SolverOptions{}.max_candidates;
  unsigned threads = 1;
  bool strict = false;
  bool lenient = false;
};

struct Input {
  Polynomial f;
  std::vector<std::string> names;
};

// Big values that do not fit a JSON integer are written as strings.
Json big(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

Json point_json(const LatticePoint& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(big(c));
  return a;
}

template <class Range>
Json points_json(const Range& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

Json diagnostics_json(const Diagnostics& d) {
  return Json{{"recursive_calls", d.recursive_calls},
              {"memo_hits", d.memo_hits},
              {"candidate_tuples", d.candidate_tuples},
              {"unique_candidates", d.unique_candidates},
              {"threshold_searches", d.threshold_searches},
              {"threshold_memo_hits", d.threshold_memo_hits},
              {"evicted_points", d.evicted_points}};
}

std::string read_source(const Common& c, const char* what) {
  if (!c.poly.empty() && !c.file.empty()) throw CLI::ValidationError("give either -p or -f, not both");
  if (!c.poly.empty()) return c.poly;
  if (c.file.empty()) throw CLI::ValidationError(std::string("no ") + what + " given (use -p or -f)");
  if (c.file == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(c.file);
  if (!in) throw Error("cannot open '" + c.file + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw CLI::ValidationError("--vars has an empty name");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

Input read_polynomial(const Common& c) {
  std::string text = read_source(c, "polynomial");
  Input in;
  if (!c.vars.empty()) {
    in.names = split_names(c.vars);
    in.f = parse_polynomial(text, in.names);
  } else {
    in.f = parse_polynomial(text);
    in.names = default_var_names(in.f.num_vars());
  }
  return in;
}

LatticePoint parse_point(const std::string& s, std::size_t n, const char* flag) {
  std::vector<BigInt> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigInt x;
    if (x.set_str(item, 10) != 0 || x < 0)
      throw CLI::ValidationError(std::string(flag) + ": '" + item + "' is not a non-negative integer");
    v.push_back(x);
  }
  if (v.size() != n)
    throw CLI::ValidationError(std::string(flag) + ": expected " + std::to_string(n) + " coordinates, got " +
                               std::to_string(v.size()));
  return LatticePoint(std::move(v));
}

oracle::Box parse_box(const std::string& s, std::size_t n) {
  std::vector<std::pair<long, long>> ranges;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("no colon");
      std::size_t used = 0;
      long lo = std::stol(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("junk");
      std::string rest = item.substr(colon + 1);
      long hi = std::stol(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("junk");
      ranges.emplace_back(lo, hi);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--box: '" + item + "' is not lo:hi");
    }
  }
  if (ranges.size() == 1) ranges.resize(n, ranges.front());
  if (ranges.size() != n)
    throw CLI::ValidationError("--box: expected 1 or " + std::to_string(n) + " ranges");
  oracle::Box box{LatticePoint::zeros(n), LatticePoint::zeros(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (ranges[i].first < 1 || ranges[i].second < ranges[i].first)
      throw CLI::ValidationError("--box: need 1 <= lo <= hi");
    box.lower[i] = ranges[i].first;
    box.upper[i] = ranges[i].second;
  }
  return box;
}

SolverOptions solver_options(const Common& c) {
  SolverOptions o;
  o.max_candidates = c.max_candidates;
  o.threads = std::max(1u, c.threads);
  return o;
}

PositivityMode positivity(const Common& c) {
  if (c.strict && c.lenient) throw CLI::ValidationError("--strict-positivity and --lenient-positivity conflict");
  return c.lenient ? PositivityMode::Lenient : PositivityMode::Strict;
}

std::vector<std::string> sub_names(const Input& in, const std::vector<std::size_t>& vars) {
  std::vector<std::string> out;
  for (auto v : vars) out.push_back(in.names[v]);
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// One top-level key per line, each value compact, so points stay on one line.
void write_json(std::ostream& out, const Json& doc) {
  out << "{\n";
  std::size_t i = 0;
  for (const auto& [k, v] : doc.items()) out << "  " << Json(k).dump() << ": " << v.dump() << (++i < doc.size() ? ",\n" : "\n");
  out << "}\n";
}

// The solver names dropped variables x1..xn; restate them with the user's names.
std::vector<std::string> solver_warnings(const SolveReport& r, const Input& in) {
  std::vector<std::string> out;
  for (const auto& w : r.warnings) {
    if (w.starts_with("stripped unused variables")) {
      std::vector<std::string> dropped;
      for (std::size_t i : analyze(in.f).unused_variables) dropped.push_back(in.names[i]);
      out.push_back("stripped unused variables: " + join(dropped, ", "));
    } else {
      out.push_back(w);
    }
  }
  return out;
}

void emit_warnings(const std::vector<std::string>& w, std::ostream& err) {
  for (const auto& s : w) err << "warning: " << s << '\n';
}

// ---- solve ----------------------------------------------------------------

int cmd_solve(const Common& c, std::ostream& out, std::ostream& err) {
  if (positivity(c) == PositivityMode::Lenient)
    throw CLI::ValidationError("--lenient-positivity only applies to verify and shift");
  Input in = read_polynomial(c);
  SolveReport r = StructureSolver(solver_options(c)).solve(in.f);
  const auto warnings = solver_warnings(r, in);
  emit_warnings(warnings, err);
  auto names = sub_names(in, r.variables);

  if (c.json) {
    Json crit = Json::array();
    for (const auto& k : r.critical_sizes) crit.push_back(big(k));
    Json doc{{"command", "solve"},
             {"input", to_string(in.f, in.names)},
             {"variables", names},
             {"min_cone", points_json(r.min_cone)},
             {"structures", points_json(r.structures)},
             {"critical_sizes", crit},
             {"warnings", warnings},
             {"diagnostics", diagnostics_json(r.diagnostics)},
             {"exit_status", kOk}};
    write_json(out, doc);
    return kOk;
  }
  out << "f = " << to_string(in.f, in.names) << '\n';
  out << "variables: " << join(names, " ") << '\n';
  out << "min D>=0(f): " << r.min_cone.size() << " point" << (r.min_cone.size() == 1 ? "" : "s") << '\n';
  for (const auto& p : r.min_cone) out << "  " << to_string(p) << '\n';
  out << "D(f): " << r.structures.size() << " structure" << (r.structures.size() == 1 ? "" : "s") << '\n';
  for (std::size_t i = 0; i < r.structures.size(); ++i)
    out << "  " << to_string(r.structures[i]) << "  |K| = " << r.critical_sizes[i] << '\n';
  return kOk;
}

// ---- matrix ---------------------------------------------------------------

int cmd_matrix(const Common& c, const std::string& inline_matrix, std::ostream& out, std::ostream& err) {
  if (positivity(c) == PositivityMode::Lenient)
    throw CLI::ValidationError("--lenient-positivity only applies to verify and shift");
  Common src = c;
  if (!inline_matrix.empty()) {
    if (!c.file.empty()) throw CLI::ValidationError("give either --matrix or -f, not both");
    src.poly = inline_matrix;
  }
  std::istringstream text(read_source(src, "matrix"));
  IntegerMatrix L = IntegerMatrix::parse(text);
  MatrixReport r = matrix_structures(L, solver_options(c));
  std::vector<std::string> warnings = r.warnings;
  warnings.insert(warnings.end(), r.solve.warnings.begin(), r.solve.warnings.end());
  emit_warnings(warnings, err);
  auto names = default_var_names(L.size());

  if (c.json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < L.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < L.size(); ++j) row.push_back(big(L(i, j)));
      rows.push_back(row);
    }
    Json ds = Json::array(), rs = Json::array(), crit = Json::array();
    for (const auto& s : r.structures) {
      ds.push_back(point_json(s.d));
      rs.push_back(point_json(s.r));
    }
    for (const auto& k : r.critical_sizes) crit.push_back(big(k));
    Json doc{{"command", "matrix"},
             {"input", rows},
             {"polynomial", to_string(r.polynomial, names)},
             {"min_cone", points_json(r.solve.min_cone)},
             {"structures", ds},
             {"critical_sizes", crit},
             {"r_vectors", rs},
             {"canonical", r.canonical ? Json(*r.canonical) : Json(nullptr)},
             {"warnings", warnings},
             {"diagnostics", diagnostics_json(r.solve.diagnostics)},
             {"exit_status", kOk}};
    write_json(out, doc);
    return kOk;
  }
  out << "L =\n";
  for (std::size_t i = 0; i < L.size(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < L.size(); ++j) out << ' ' << L(i, j);
    out << '\n';
  }
  out << "f_L = " << to_string(r.polynomial, names) << '\n';
  out << "min D>=0(f_L): " << r.solve.min_cone.size() << " point" << (r.solve.min_cone.size() == 1 ? "" : "s") << '\n';
  for (const auto& p : r.solve.min_cone) out << "  " << to_string(p) << '\n';
  out << "D(L): " << r.structures.size() << " pairs (d, r)\n";
  for (std::size_t i = 0; i < r.structures.size(); ++i) {
    out << "  d = " << to_string(r.structures[i].d) << "  r = " << to_string(r.structures[i].r)
        << "  |K| = " << r.critical_sizes[i];
    if (r.canonical == i) out << "  [canonical]";
    out << '\n';
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string box;
  long drop = -1;  // debug: remove this min_cone point before comparing
};

int cmd_verify(const Common& c, const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  oracle::VerifyOptions opts;
  opts.mode = positivity(c);
  Input in = read_polynomial(c);
  SolveReport r = StructureSolver(solver_options(c)).solve(in.f);
  std::vector<std::string> warnings = solver_warnings(r, in);
  const std::size_t n = r.variables.size();
  if (!v.box.empty()) opts.box = parse_box(v.box, n);

  if (v.drop >= 0 && static_cast<std::size_t>(v.drop) < r.min_cone.size()) {
    LatticePoint gone = r.min_cone.sorted()[v.drop];
    MinimalSet kept;
    for (const auto& p : r.min_cone)
      if (!(p == gone)) kept.add(p);
    r.min_cone = kept;
    for (std::size_t i = 0; i < r.structures.size(); ++i)
      if (r.structures[i] == gone) {
        r.structures.erase(r.structures.begin() + i);
        r.critical_sizes.erase(r.critical_sizes.begin() + i);
        break;
      }
  }

  oracle::VerifyReport rep = oracle::cross_check(in.f, r, opts);
  bool ran = rep.cells > 0 || n == 0;
  if (!ran) warnings.push_back("oracle box exceeds its caps; nothing was compared");
  else if (!rep.conclusive) warnings.push_back("boundary-inconclusive oracle: solver points lie on or beyond the box");
  if (rep.agree && !rep.other_zeros.empty())
    warnings.push_back(std::to_string(rep.other_zeros.size()) + " positive zeros outside D(f) in the box");
  emit_warnings(warnings, err);

  int status = kOk;
  std::string verdict = "AGREE";
  if (ran && !rep.agree) {
    status = kDisagreement;
    verdict = "DISAGREE";
  } else if (!ran || !rep.conclusive) {
    status = kResourceOrInconclusive;
    verdict = "INCONCLUSIVE";
  }
  auto names = sub_names(in, r.variables);

  if (c.json) {
    Json doc{{"command", "verify"},
             {"input", to_string(in.f, in.names)},
             {"variables", names},
             {"box", {{"lower", point_json(rep.box.lower)}, {"upper", point_json(rep.box.upper)}}},
             {"scan", rep.exhaustive ? "exhaustive" : "columns"},
             {"verdict", verdict},
             {"min_cone", points_json(r.min_cone)},
             {"structures", points_json(r.structures)},
             {"missed", points_json(rep.missed)},
             {"spurious", points_json(rep.spurious)},
             {"structures_missed", points_json(rep.structures_missed)},
             {"structures_spurious", points_json(rep.structures_spurious)},
             {"other_zeros", points_json(rep.other_zeros)},
             {"warnings", warnings},
             {"diagnostics", diagnostics_json(r.diagnostics)},
             {"exit_status", status}};
    write_json(out, doc);
    return status;
  }
  out << "f = " << to_string(in.f, in.names) << '\n';
  out << "box: ";
  for (std::size_t i = 0; i < n; ++i)
    out << (i ? " x " : "") << '[' << rep.box.lower[i] << ',' << rep.box.upper[i] << ']';
  out << "  (" << (rep.exhaustive ? "exhaustive" : "column") << " scan, " << rep.cells << " cells";
  if (rep.grown) out << ", widened to fit the solver's points";
  out << ")\n";
  out << "solver: " << r.min_cone.size() << " minimal point" << (r.min_cone.size() == 1 ? "" : "s") << ", "
      << r.structures.size() << " structure" << (r.structures.size() == 1 ? "" : "s") << '\n';
  auto list = [&](const char* label, const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return;
    out << label << ':';
    for (const auto& p : pts) out << ' ' << to_string(p);
    out << '\n';
  };
  list("missed by solver", rep.missed);
  list("rejected by oracle", rep.spurious);
  list("structures missed", rep.structures_missed);
  list("structures rejected", rep.structures_spurious);
  out << verdict << '\n';
  if (!rep.other_zeros.empty()) {
    out << "note: " << rep.other_zeros.size() << " positive zeros outside D(f):";
    for (const auto& z : rep.other_zeros) out << ' ' << to_string(z);
    out << '\n';
  }
  return status;
}

// ---- shift ----------------------------------------------------------------

int cmd_shift(const Common& c, const std::string& at, std::ostream& out, std::ostream& err) {
  PositivityMode mode = positivity(c);
  Input in = read_polynomial(c);
  LatticePoint d = parse_point(at, in.f.num_vars(), "--at");
  Polynomial g = shift(in.f, d);
  PositivityProfile prof = positivity_profile(g, mode);

  // the constant is always shown, even when it vanishes
  std::string shown = to_string(g, in.names);
  if (g.constant_term() == 0) shown = g.num_terms() ? shown + " + 0" : "0";
  std::vector<std::string> s_set, bad;
  for (auto s : prof.zero_linear) s_set.push_back(in.names[s]);
  for (const auto& m : prof.nonpositive) bad.push_back(monomial_to_string(m, in.names) + " (" + g.coefficient(m).get_str() + ")");
  std::vector<std::string> warnings;
  if (!bad.empty()) warnings.push_back("non-positive coefficients: " + join(bad, ", "));
  emit_warnings(warnings, err);

  if (c.json) {
    Json coeffs = Json::array();
    for (const auto& [m, v] : g.terms()) coeffs.push_back(Json{{"monomial", monomial_to_string(m, in.names)}, {"coefficient", big(v)}});
    Json doc{{"command", "shift"},
             {"input", to_string(in.f, in.names)},
             {"at", point_json(d)},
             {"shifted", shown},
             {"coefficients", coeffs},
             {"constant_term", big(prof.constant_term)},
             {"S", s_set},
             {"nonpositive", bad},
             {"positive", prof.all_nonconstant_positive},
             {"warnings", warnings},
             {"exit_status", kOk}};
    write_json(out, doc);
    return kOk;
  }
  out << "f(X + " << to_string(d) << ") = " << shown << '\n';
  out << "constant term: " << prof.constant_term << '\n';
  out << "S = {" << join(s_set, ", ") << "}\n";
  out << "non-constant coefficients positive: " << (prof.all_nonconstant_positive ? "yes" : "no");
  if (!bad.empty()) out << " (" << join(bad, ", ") << ')';
  out << '\n';
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool poly) {
  if (poly) {
    sub->add_option("-p,--poly", c.poly, "Polynomial, e.g. \"2*x1*x2 - 7*x1 - 10*x2 + 16\"");
    sub->add_option("--vars", c.vars, "Comma-separated variable names (default x1..xn)");
  }
  sub->add_option("-f,--file", c.file, "Read input from a file ('-' for stdin)");
  sub->add_flag("--json", c.json, "Machine-readable output");
  sub->add_option("--max-candidates", c.max_candidates, "Cap on supremum tuples visited per recursion level")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", c.threads, "Workers for the candidate loop")->check(CLI::PositiveNumber);
  sub->add_flag("--strict-positivity", c.strict,
                "Every monomial the shift can create must be positive (default)");
  sub->add_flag("--lenient-positivity", c.lenient,
                "Only monomials present after the shift, plus linear ones, must be positive (verify, shift)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetical structures of dominated square-free polynomials", "arithstruct"};
  app.require_subcommand(1);
  Common c;
  std::string inline_matrix, at;
  VerifyArgs va;

  auto* solve_cmd = app.add_subcommand("solve", "Minimal points of D>=0(f) and the structures D(f)");
  add_common(solve_cmd, c, true);
  auto* matrix_cmd = app.add_subcommand("matrix", "Structures (d, r) of a non-negative zero-diagonal matrix");
  add_common(matrix_cmd, c, false);
  matrix_cmd->add_option("-m,--matrix", inline_matrix, "Matrix text: n then n*n integers");
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the solver against brute force");
  add_common(verify_cmd, c, true);
  verify_cmd->add_option("--box", va.box, "lo:hi[,lo:hi...] (default: [1,30]^n, widened to fit the solver's points)");
  verify_cmd->add_option("--debug-drop-point", va.drop)->group("");
  auto* shift_cmd = app.add_subcommand("shift", "Print f(X + d) with its S-set and constant term");
  add_common(shift_cmd, c, true);
  shift_cmd->add_option("--at", at, "Shift point d, comma-separated")->required();

  try {
    app.parse(argc, argv);
    if (solve_cmd->parsed()) return cmd_solve(c, out, err);
    if (matrix_cmd->parsed()) return cmd_matrix(c, inline_matrix, out, err);
    if (verify_cmd->parsed()) return cmd_verify(c, va, out, err);
    return cmd_shift(c, at, out, err);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kPrecondition;
  } catch (const KernelError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ResourceLimitError& e) {
    err << "error: resource cap reached: " << e.what() << '\n';
    if (!e.partial().empty()) err << "partial min D>=0 (incomplete): " << to_string(e.partial()) << '\n';
    return kResourceOrInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace arith::cli
