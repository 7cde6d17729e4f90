#include "braidkit/cli.hpp"

#include "braidkit/braid.hpp"
#include "braidkit/catalog.hpp"
#include "braidkit/entanglement.hpp"
#include "braidkit/matrix_io.hpp"
#include "braidkit/su3.hpp"
#include "braidkit/yang_baxter.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace braidkit::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  return v;
}

} // namespace

double parse_angle(std::string_view token) {
  std::string_view s = trim(token);
  double sign = 1.0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) return sign * parse_number(s);

  // [k*]pi[/m]
  double factor = 1.0;
  if (pi_at > 0) {
    std::string_view head = s.substr(0, pi_at);
    if (head.back() != '*') throw std::invalid_argument("bad angle '" + std::string(token) + "'");
    head.remove_suffix(1);
    factor = parse_number(head);
  }
  std::string_view tail = s.substr(pi_at + 2);
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("bad angle '" + std::string(token) + "'");
    divisor = parse_number(tail.substr(1));
    if (divisor == 0.0) throw std::invalid_argument("division by zero in '" + std::string(token) + "'");
  }
  return sign * factor * std::numbers::pi / divisor;
}

std::vector<double> parse_grid(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= spec.size(); ++k)
    if (k == spec.size() || spec[k] == ':') {
      parts.push_back(spec.substr(start, k - start));
      start = k + 1;
    }
  if (parts.size() != 3) throw std::invalid_argument("grid must be start:end:count");
  const double lo = parse_angle(parts[0]);
  const double hi = parse_angle(parts[1]);
  const double count_d = parse_number(parts[2]);
  if (count_d < 1 || count_d != std::floor(count_d) || count_d > 1e7)
    throw std::invalid_argument("grid count must be a positive integer");
  const auto count = static_cast<std::size_t>(count_d);
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k)
    grid[k] = count == 1 ? lo : lo + (hi - lo) * double(k) / double(count - 1);
  if (count > 1) grid.back() = hi;
  return grid;
}

Complex parse_complex(std::string_view spec) {
  const auto comma = spec.find(',');
  if (comma == std::string_view::npos) return {parse_number(spec), 0.0};
  return {parse_number(spec.substr(0, comma)), parse_number(spec.substr(comma + 1))};
}

namespace {

/// Errors that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SourceOptions {
  std::string catalog;
  std::string input;
  PhaseParams phases;
  double tol = kCompositeTol;
};

void add_phase_options(CLI::App* cmd, PhaseParams& p) {
  cmd->add_option("--phi1", p.phi1, "phase phi1 (radians)");
  cmd->add_option("--phi2", p.phi2, "phase phi2 (radians)");
}

void add_source_options(CLI::App* cmd, SourceOptions& s) {
  auto* cat = cmd->add_option("--catalog", s.catalog, "built-in matrix name");
  auto* in = cmd->add_option("--input", s.input, "matrix document path");
  cat->excludes(in);
  add_phase_options(cmd, s.phases);
  cmd->add_option("--tol", s.tol, "tolerance");
}

ComplexMatrix resolve_matrix(const std::string& ref, const PhaseParams& phases) {
  if (const CatalogEntry* e = find_entry(ref)) return e->producer(phases);
  if (std::filesystem::exists(ref)) return load_matrix(ref);
  throw UsageError("'" + ref + "' is neither a catalog entry nor a readable file");
}

LocalBraidOperator resolve_braid(const SourceOptions& s) {
  ComplexMatrix m;
  if (!s.catalog.empty()) {
    const CatalogEntry* e = find_entry(s.catalog);
    if (!e) throw UsageError("unknown catalog entry '" + s.catalog + "'");
    if (e->kind != EntryKind::Braid)
      throw UsageError("catalog entry '" + s.catalog + "' is a factor matrix, not a two-site operator");
    m = e->producer(s.phases);
  } else if (!s.input.empty()) {
    m = load_matrix(s.input);
  } else {
    throw UsageError("one of --catalog or --input is required");
  }
  const auto n = static_cast<Eigen::Index>(std::lround(std::sqrt(double(m.rows()))));
  if (m.rows() != m.cols() || n * n != m.rows() || n < 2) {
    std::ostringstream msg;
    msg << m.rows() << "x" << m.cols() << " matrix is not an n^2 x n^2 two-site operator";
    throw UsageError(msg.str());
  }
  return LocalBraidOperator::from_matrix(std::move(m));
}

void emit_matrix(const ComplexMatrix& m, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << format_matrix(m);
  } else {
    save_matrix(m, out_path);
    out << "wrote " << m.rows() << "x" << m.cols() << " matrix to " << out_path << '\n';
  }
}

std::string show(Complex z) {
  std::ostringstream s;
  s << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// --- subcommands -----------------------------------------------------------

int cmd_construct(const std::string& a_ref, const std::string& b_ref, const std::string& coeff,
                  const PhaseParams& phases, double tol, const std::string& out_path,
                  std::ostream& out) {
  FactorPair pair{resolve_matrix(a_ref, phases), resolve_matrix(b_ref, phases),
                  coeff.empty() ? Complex{1.0, 0.0} : parse_complex(coeff)};
  pair.validate();
  const auto s = construct_from_pair(pair);
  const double comm = commutator(pair.a, pair.b).norm();
  emit_matrix(s.matrix(), out_path, out);
  out << "||[A,B]||_F = " << comm << " (tolerance " << tol << ") " << verdict(comm <= tol) << '\n';
  return comm <= tol ? kOk : kCheckFailed;
}

FactorPair parse_term(const std::string& spec, const PhaseParams& phases) {
  std::vector<std::string> fields;
  std::stringstream ss(spec);
  for (std::string f; std::getline(ss, f, ',');) fields.push_back(std::string(trim(f)));
  if (fields.size() != 2 && fields.size() != 3 && fields.size() != 4)
    throw UsageError("term '" + spec + "' must be A,B or A,B,re or A,B,re,im");
  Complex c{1.0, 0.0};
  if (fields.size() >= 3) c.real(parse_number(fields[2]));
  if (fields.size() == 4) c.imag(parse_number(fields[3]));
  return {resolve_matrix(fields[0], phases), resolve_matrix(fields[1], phases), c};
}

int cmd_combine(const std::vector<std::string>& specs, bool unchecked, const PhaseParams& phases,
                double tol, const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::vector<FactorPair> terms;
  for (const auto& spec : specs) terms.push_back(parse_term(spec, phases));
  try {
    const auto s = combine(terms, {.tolerance = tol, .unchecked = unchecked});
    emit_matrix(s.matrix(), out_path, out);
    if (unchecked) out << "commutativity gate skipped; run verify on the result\n";
    else out << describe(check_combining_conditions(terms, tol)) << " PASS\n";
    return kOk;
  } catch (const CombiningError& e) {
    err << e.what() << '\n';
    return kCheckFailed;
  }
}

int cmd_verify(const SourceOptions& src, std::ostream& out) {
  const auto s = resolve_braid(src);
  const auto report = verify_braid_relation(s, src.tol);
  const auto dev = deviation_metrics(s.matrix());
  out << "local dimension     " << s.local_dim() << '\n';
  out << "braid residual      " << report.braid_residual << '\n';
  out << "far commutation     " << report.far_commutation_residual << '\n';
  out << "hermiticity defect  " << dev.hermiticity_defect << '\n';
  try {
    out << "kappa (S^2=kS)      " << show(detect_kappa(s)) << '\n';
  } catch (const NotProjectorLike& e) {
    out << "kappa (S^2=kS)      none: " << e.what() << '\n';
  }
  out << "braid relation " << verdict(report.passed) << " (tolerance " << src.tol << ")\n";
  return report.passed ? kOk : kCheckFailed;
}

int cmd_yb(const SourceOptions& src, const std::string& x_spec, std::optional<double> theta,
           const std::string& y_spec, const std::string& out_path, std::ostream& out,
           std::ostream& err) {
  const auto s = resolve_braid(src);
  Complex x;
  if (!x_spec.empty()) x = parse_complex(x_spec);
  else if (theta) x = std::polar(1.0, *theta);
  else throw UsageError("yb needs --x or --theta");
  const Complex y = y_spec.empty() ? x : parse_complex(y_spec);
  if (x == Complex{} || y == Complex{}) throw UsageError("spectral parameters must be nonzero");

  std::optional<RMatrixFamily> family;
  try {
    family.emplace(s);
  } catch (const NotProjectorLike& e) {
    err << "cannot Yang-Baxterize: " << e.what() << '\n';
    return kCheckFailed;
  }
  const ComplexMatrix r = evaluate_r(*family, x);
  const double ybe = check_ybe(*family, x, y);
  bool ok = ybe <= src.tol;
  out << "kappa               " << show(family->kappa()) << '\n';
  out << "x                   " << show(x) << '\n';
  out << "y                   " << show(y) << '\n';
  out << "YBE residual        " << ybe << ' ' << verdict(ybe <= src.tol) << '\n';
  if (std::abs(std::abs(x) - 1.0) <= kIdentityTol) {
    const double defect = deviation_metrics(r).unitarity_defect;
    ok = ok && defect <= src.tol;
    out << "unitarity defect    " << defect << ' ' << verdict(defect <= src.tol) << '\n';
  } else {
    out << "unitarity defect    " << deviation_metrics(r).unitarity_defect
        << " (|x| != 1, not checked)\n";
  }
  if (!out_path.empty()) emit_matrix(r, out_path, out);
  return ok ? kOk : kCheckFailed;
}

int cmd_sweep(const std::string& grid_spec, const PhaseParams& phases, double tol,
              const std::string& out_path, std::ostream& out) {
  const auto grid = parse_grid(grid_spec);
  const auto rows = concurrence_sweep(phases, grid);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.max_abs_diff);
  if (out_path.empty()) {
    write_sweep_csv(out, rows, 3);
  } else {
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot open " + out_path + " for writing");
    write_sweep_csv(file, rows, 3);
    out << "wrote " << rows.size() << " rows to " << out_path << '\n';
    out << "max |C_numeric - C_closed| = " << worst << " (tolerance " << tol << ") "
        << verdict(worst <= tol) << '\n';
  }
  return worst <= tol ? kOk : kCheckFailed;
}

int cmd_su3(const std::string& convention_name, double tol, int samples, unsigned seed,
            std::ostream& out) {
  SignConvention convention;
  if (convention_name == "lowering") convention = SignConvention::Lowering;
  else if (convention_name == "standard") convention = SignConvention::Standard;
  else throw UsageError("convention must be 'lowering' or 'standard'");

  const auto basis = gell_mann_basis();
  double ortho = 0.0, antisym = 0.0;
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) {
      const Complex tr = (basis.lambda(a) * basis.lambda(b)).trace();
      ortho = std::max(ortho, std::abs(tr - (a == b ? 2.0 : 0.0)));
      for (int c = 1; c <= 8; ++c) {
        antisym = std::max(antisym, std::abs(basis.f(a, b, c) + basis.f(b, a, c)));
        antisym = std::max(antisym, std::abs(basis.f(a, b, c) + basis.f(a, c, b)));
      }
    }
  const double table = realization_commutator_check(convention);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  double expansion = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double theta = angle(rng), phi1 = angle(rng), phi2 = angle(rng);
    const Complex x = std::polar(1.0, theta);
    const ComplexMatrix expected = evaluate_r(qutrit_family({phi1, phi2}), x);
    expansion = std::max(expansion, (operator_expansion_r(x, phi1, phi2, convention) - expected).norm());
  }
  const bool ok_basis = ortho < kIdentityTol && antisym < kIdentityTol;
  const bool ok_table = table <= tol;
  const bool ok_exp = expansion <= tol;
  out << "Gell-Mann orthogonality  " << ortho << '\n';
  out << "f antisymmetry           " << antisym << ' ' << verdict(ok_basis) << '\n';
  out << "commutation table        " << table << ' ' << verdict(ok_table) << '\n';
  out << "operator expansion       " << expansion << " over " << samples << " samples "
      << verdict(ok_exp) << '\n';
  return ok_basis && ok_table && ok_exp ? kOk : kCheckFailed;
}

int cmd_catalog(const std::string& name, bool check, const PhaseParams& phases, double tol,
                const std::string& out_path, std::ostream& out) {
  if (!name.empty()) {
    const CatalogEntry* e = find_entry(name);
    if (!e) throw UsageError("unknown catalog entry '" + name + "'");
    if (check) {
      const auto c = check_entry(*e, phases, tol);
      out << c.name << ": " << c.detail << ' ' << verdict(c.passed) << '\n';
      return c.passed ? kOk : kCheckFailed;
    }
    emit_matrix(e->producer(phases), out_path, out);
    return kOk;
  }
  bool all_ok = true;
  for (const auto& e : catalog_entries()) {
    out << e.name << (e.kind == EntryKind::Braid ? "  [braid]  " : "  [factor] ") << e.description;
    if (!e.parameters.empty()) {
      out << " (params:";
      for (const auto& p : e.parameters) out << ' ' << p;
      out << ')';
    }
    out << '\n';
    if (check) {
      const auto c = check_entry(e, phases, tol);
      all_ok = all_ok && c.passed;
      out << "    " << c.detail << ' ' << verdict(c.passed) << '\n';
    }
  }
  return all_ok ? kOk : kCheckFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braid-group representations, Yang-Baxterization and qutrit entanglement", "braidkit"};
  app.require_subcommand(1);
  int code = kOk;

  // construct
  std::string a_ref, b_ref, coeff, out_path;
  PhaseParams phases;
  double tol_construct = kIdentityTol;
  auto* construct = app.add_subcommand("construct", "factor pair -> S^{ab}_{cd} = c A^a_d B^b_c");
  construct->add_option("--a", a_ref, "factor A (catalog name or file)")->required();
  construct->add_option("--b", b_ref, "factor B (catalog name or file)")->required();
  construct->add_option("--coeff", coeff, "coefficient re,im");
  construct->add_option("--tol", tol_construct, "commutator tolerance");
  construct->add_option("--out", out_path, "write S to this path");
  add_phase_options(construct, phases);

  // combine
  std::vector<std::string> term_specs;
  bool unchecked = false;
  double tol_combine = kIdentityTol;
  auto* comb = app.add_subcommand("combine", "sum of factor-pair operators, gated on commutativity");
  comb->add_option("--term", term_specs, "A,B[,re[,im]] (repeatable)")->required();
  comb->add_flag("--unchecked", unchecked, "skip the commutativity gate");
  comb->add_option("--tol", tol_combine, "commutator tolerance");
  comb->add_option("--out", out_path, "write S to this path");
  add_phase_options(comb, phases);

  // verify
  SourceOptions verify_src;
  auto* verify = app.add_subcommand("verify", "braid relation, S^2 = kS and hermiticity report");
  add_source_options(verify, verify_src);

  // yb
  SourceOptions yb_src;
  std::string x_spec, y_spec;
  std::optional<double> theta;
  auto* yb = app.add_subcommand("yb", "evaluate R(x), check Yang-Baxter equation and unitarity");
  add_source_options(yb, yb_src);
  auto* x_opt = yb->add_option("--x", x_spec, "spectral parameter re,im");
  yb->add_option("--theta", theta, "spectral parameter x = e^{i theta}")->excludes(x_opt);
  yb->add_option("--y", y_spec, "second spectral parameter re,im (default: x)");
  yb->add_option("--out", out_path, "write R(x) to this path");

  // sweep
  std::string grid_spec;
  double tol_sweep = kCompositeTol;
  auto* sweep = app.add_subcommand("sweep", "concurrence of all basis images vs the closed form");
  sweep->add_option("--grid", grid_spec, "start:end:count, 'pi' allowed")->required();
  sweep->add_option("--tol", tol_sweep, "max allowed |C_numeric - C_closed|");
  sweep->add_option("--out", out_path, "CSV output path (default: stdout)");
  add_phase_options(sweep, phases);

  // su3
  std::string convention = "lowering";
  double tol_su3 = 1e-10;
  int samples = 20;
  unsigned seed = 20240611;
  auto* su3 = app.add_subcommand("su3", "Gell-Mann basis, realization table, operator expansion");
  su3->add_option("--convention", convention, "V+- sign convention: lowering|standard");
  su3->add_option("--tol", tol_su3, "tolerance");
  su3->add_option("--samples", samples, "random (theta, phi1, phi2) triples")->check(CLI::PositiveNumber);
  su3->add_option("--seed", seed, "random seed");

  // catalog
  std::string entry_name;
  bool check = false;
  double tol_catalog = kCompositeTol;
  auto* catalog = app.add_subcommand("catalog", "list, print or check built-in matrices");
  catalog->add_option("--catalog", entry_name, "entry to print or check");
  catalog->add_flag("--check", check, "run each entry's context check");
  catalog->add_option("--tol", tol_catalog, "tolerance");
  catalog->add_option("--out", out_path, "write the entry's matrix to this path");
  add_phase_options(catalog, phases);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (*construct) code = cmd_construct(a_ref, b_ref, coeff, phases, tol_construct, out_path, out);
    else if (*comb) code = cmd_combine(term_specs, unchecked, phases, tol_combine, out_path, out, err);
    else if (*verify) code = cmd_verify(verify_src, out);
    else if (*yb) code = cmd_yb(yb_src, x_spec, theta, y_spec, out_path, out, err);
    else if (*sweep) code = cmd_sweep(grid_spec, phases, tol_sweep, out_path, out);
    else if (*su3) code = cmd_su3(convention, tol_su3, samples, seed, out);
    else if (*catalog) code = cmd_catalog(entry_name, check, phases, tol_catalog, out_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return code;
}

} // namespace braidkit::cli
