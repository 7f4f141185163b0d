// k3deg: command-line driver.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "k3deg/error.hpp"
#include "k3deg/moduli.hpp"
#include "k3deg/oracle.hpp"
#include "k3deg/parser.hpp"
#include "k3deg/report.hpp"

using namespace k3deg;

namespace {

constexpr int kUsage = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Precondition, "cannot write " + path);
  out << data;
}

int report_error(const Error& e, const std::string& file) {
  std::cerr << "error: " << error_name(e.code());
  if (e.line() > 0) std::cerr << " at " << (file.empty() ? "" : file + ":") << e.line() << ":" << e.column();
  std::cerr << ": " << e.what() << "\n";
  return exit_code(e.code());
}

int cmd_analyze(const std::string& file, bool as_json, const std::string& svg, const std::string& csv) {
  const Analysis a = analyze_text(read_file(file));
  if (as_json) {
    std::cout << nlohmann::json(a.report).dump(2) << "\n";
  } else {
    std::cout << summary_text(a.report);
  }
  const DensityFunction v = a.v_native.normalized();
  if (!svg.empty()) write_file(svg, emit_svg(v));
  if (!csv.empty()) write_file(csv, emit_csv(v));
  return 0;
}

int cmd_strata(bool divisors, bool codim2) {
  const auto div = enumerate_divisors();
  const auto c2 = enumerate_codim2();
  if (divisors) {
    for (const auto& s : div) std::cout << s.label << "," << s.kind << "\n";
    return 0;
  }
  if (codim2) {
    for (const auto& s : c2)
      std::cout << s.label << "," << s.kind << (s.is_nonnormal_locus ? ",non-normal" : "") << "\n";
    std::cout << "# non-normal loci: " << nonnormal_count(c2)
              << ", normalization preimage: " << normalization_preimage_count(c2) << "\n";
    return 0;
  }
  int eae = 0, ed = 0;
  for (const auto& s : div) (s.kind == "EAE" ? eae : ed)++;
  std::cout << "boundary divisors: " << div.size() << " (EAE " << eae << ", ED " << ed << ")\n"
            << "codimension 2 strata: " << c2.size() << "\n"
            << "non-normal loci: " << nonnormal_count(c2)
            << ", normalization preimage: " << normalization_preimage_count(c2) << "\n"
            << "maximal chambers: " << chamber_count() << "\n";
  return 0;
}

int cmd_lattice(const std::string& symbol, int n, bool gram, bool wps) {
  if (symbol.size() != 1 || std::string("ADE").find(symbol[0]) == std::string::npos)
    throw CLI::ValidationError("symbol must be A, D or E");
  const char fam = symbol[0];
  if (wps) {
    const auto w = wps_weights(fam, n);
    for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? " " : "") << w[i];
    std::cout << "\n";
    return 0;
  }
  const Lattice l = root_lattice(fam, n);
  if (gram) {
    if (l.rank() == 0) std::cout << "(empty matrix: rank 0)\n";
    else std::cout << gram_text(l.gram);
    return 0;
  }
  const auto [p, q] = signature(l.gram);
  std::cout << l.name << ": rank " << l.rank() << ", det " << determinant(l.gram).get_str()
            << ", signature (" << p << "," << q << "), " << (is_even(l.gram) ? "even" : "odd") << "\n";
  return 0;
}

int cmd_oracle(const std::string& file, const std::vector<double>& ts, double tol) {
  for (double t : ts)
    if (!(t > 0 && t < 1)) throw CLI::ValidationError("--t values must lie in (0, 1)");
  const FamilyPair f = parse_family(read_file(file));
  const OracleReport rep = oracle_compare(f, ts, tol, false);
  if (rep.skipped) {
    std::cout << "notice: " << rep.notice << "\n";
    return 0;
  }
  char buf[128];
  std::cout << "t, max deviation\n";
  for (const auto& s : rep.samples) {
    std::snprintf(buf, sizeof buf, "%.3g, %.6f\n", s.t, s.max_deviation);
    std::cout << buf;
  }
  std::cout << "clusters at smallest t (position: exact/empirical):";
  for (const auto& c : rep.clusters)
    std::cout << " " << to_string(c.position) << ":" << c.exact << "/" << c.empirical;
  std::snprintf(buf, sizeof buf, "\nfitted C: %.4f\n", rep.fitted_c);
  std::cout << buf << "trend: " << (rep.trend_ok ? "decreasing" : "NOT decreasing") << "\n";
  if (!rep.failure.empty()) throw Error(ErrorCode::OracleMismatch, rep.failure);
  return 0;
}

int cmd_gm_weights() {
  const auto [a, b] = gm_weights();
  for (const auto* list : {&a, &b}) {
    for (std::size_t i = 0; i < list->size(); ++i) std::cout << (i ? " " : "") << (*list)[i];
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degenerations of Weierstrass elliptic K3 surfaces: density V, stable types, lattices"};
  app.require_subcommand(1);

  std::string file, svg, csv, symbol;
  bool as_json = false, divisors = false, codim2 = false, gram = false, wps = false;
  int n = 0;
  std::vector<double> ts{1e-3, 1e-5, 1e-7};
  double tol = 0.2;

  auto* analyze = app.add_subcommand("analyze", "full pipeline on a family file");
  analyze->add_option("file", file, "family file")->required();
  analyze->add_flag("--json", as_json, "print the JSON report");
  analyze->add_option("--svg", svg, "write a plot of V");
  analyze->add_option("--csv", csv, "write the breakpoints of V");

  auto* strata = app.add_subcommand("strata", "boundary strata of the moduli compactification");
  auto* g = strata->add_option_group("which");
  g->add_flag("--divisors", divisors, "list the 54 boundary divisors");
  g->add_flag("--codim2", codim2, "list codimension 2 strata");
  g->require_option(0, 1);

  auto* lattice = app.add_subcommand("lattice", "root lattices");
  lattice->add_option("symbol", symbol, "A, D or E")->required();
  lattice->add_option("n", n, "index")->required();
  auto* lg = lattice->add_option_group("output");
  lg->add_flag("--gram", gram, "print the Gram matrix");
  lg->add_flag("--wps", wps, "print weighted projective weights");
  lg->require_option(0, 1);

  auto* oracle = app.add_subcommand("oracle", "numerical root-tracking cross-check");
  oracle->add_option("file", file, "family file")->required();
  oracle->add_option("--t", ts, "t samples")->delimiter(',');
  oracle->add_option("--tol", tol, "final deviation tolerance");

  auto* gm = app.add_subcommand("gm-weights", "Gm weights on the slice");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(file, as_json, svg, csv);
    if (*strata) return cmd_strata(divisors, codim2);
    if (*lattice) return cmd_lattice(symbol, n, gram, wps);
    if (*oracle) return cmd_oracle(file, ts, tol);
    if (*gm) return cmd_gm_weights();
  } catch (const Error& e) {
    return report_error(e, file);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
