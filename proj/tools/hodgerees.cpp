#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hodgerees/curves.hpp"
#include "hodgerees/document.hpp"
#include "hodgerees/report.hpp"
#include "hodgerees/verify.hpp"

using namespace hodgerees;

namespace {

enum Exit { ok = 0, usage = 1, invalid = 2, property = 3 };

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("pair '" + s + "' is not of the form P:Q");
  return {s.substr(0, colon), s.substr(colon + 1)};
}

std::string describe(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

void print_matrix(const PeriodMatrix& m) {
  std::cout << "period matrix (" << m.entries.rows() << " x " << m.entries.cols() << ", " << m.residue_cols
            << " residue + " << m.log_cols << " log columns):\n";
  for (size_t r = 0; r < m.entries.rows(); ++r) {
    std::cout << " ";
    for (size_t c = 0; c < m.entries.cols(); ++c) std::cout << " " << describe(m.entries(r, c));
    std::cout << "\n";
  }
}

int report_curve(const PeriodMatrix& m, size_t t11_rows, const Matrix<Complex>& t11_block, long formula,
                 long rank) {
  print_matrix(m);
  std::cout << "t11: " << t11_from_periods(t11_block) << " (of " << t11_rows << " rows)\n"
            << "alpha1 (formula): " << formula << "\n"
            << "alpha1 (rank): " << rank << "\n"
            << "agree: " << (formula == rank ? "true" : "false") << "\n";
  return formula == rank ? ok : property;
}

template <class T>
void print_alpha(const MixedHodgeStructure<T>& h) {
  std::cout << "alpha: " << alpha(h) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"R-splitting level of mixed Hodge structures and curve period computations"};
  app.require_subcommand(1);
  double tol = -1;
  app.add_option("--tol", tol, "float tolerance (overrides HODGEREES_TOL)")->check(CLI::PositiveNumber);

  std::string path;
  auto* alpha_cmd = app.add_subcommand("alpha", "print alpha of the structure in a JSON file");
  alpha_cmd->add_option("file", path)->required();
  auto* report_cmd = app.add_subcommand("report", "print Hodge tables, splitting data and Chern check");
  report_cmd->add_option("file", path)->required();

  VerifyOptions vopt;
  bool sign_flip = false, no_basis_change = false;
  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the seeded property suite");
  verify_cmd->add_option("--seed", vopt.seed);
  verify_cmd->add_option("--cases", vopt.cases);
  verify_cmd->add_option("--case", vopt.only_case, "replay one case index");
  verify_cmd->add_option("--workers", vopt.workers)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "operation-laws", "superadditivity", "alpha-invariants", "chern", "rank-lemma",
                             "kunneth"}));
  verify_cmd->add_flag("--no-basis-change", no_basis_change, "generate structures in adapted coordinates");
  verify_cmd->add_flag("--sign-flip", sign_flip)->group("");

  std::string punctures, pairs, tau = "i";
  auto* curve0_cmd = app.add_subcommand("curve0", "alpha1 of a genus-0 curve with punctures and identified points");
  auto* curve1_cmd = app.add_subcommand("curve1", "alpha1 of a genus-1 curve with punctures and identified points");
  for (auto* cmd : {curve0_cmd, curve1_cmd}) {
    cmd->add_option("--punctures", punctures, "comma separated points")->required();
    cmd->add_option("--pairs", pairs, "comma separated P:Q pairs");
    cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
  }
  curve1_cmd->add_option("--tau", tau, "period in the upper half plane");

  ScanGrid grid;
  std::string out;
  unsigned workers = 1;
  auto* scan_cmd = app.add_subcommand("scan-m04", "alpha1 over a grid of Q for p = (0, 1), P = inf");
  scan_cmd->add_option("--re-min", grid.re_min);
  scan_cmd->add_option("--re-max", grid.re_max);
  scan_cmd->add_option("--im-min", grid.im_min);
  scan_cmd->add_option("--im-max", grid.im_max);
  scan_cmd->add_option("--steps", grid.steps)->check(CLI::Range(size_t(2), size_t(100000)));
  scan_cmd->add_option("--out", out)->required();
  scan_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }
  if (tol > 0) set_float_tolerance(tol);

  try {
    if (*alpha_cmd || *report_cmd) {
      const MhsDocument doc = parse_mhs_file(path);
      if (*alpha_cmd) {
        doc.exact ? print_alpha(*doc.exact) : print_alpha(*doc.approx);
      } else {
        std::cout << (doc.exact ? mhs_report(*doc.exact) : mhs_report(*doc.approx));
      }
      return ok;
    }
    if (*verify_cmd) {
      if (sign_flip) vopt.alpha = [](const MixedHodgeStructure<Exact>& h) { return -alpha(h); };
      vopt.generator.basis_change = !no_basis_change;
      std::vector<SuiteResult> results;
      if (suite == "all") results = verify_all(vopt);
      else if (suite == "operation-laws") results = {verify_operation_laws(vopt)};
      else if (suite == "superadditivity") results = {verify_superadditivity(vopt)};
      else if (suite == "alpha-invariants") results = {verify_alpha_invariants(vopt)};
      else if (suite == "chern") results = {verify_chern(vopt)};
      else if (suite == "rank-lemma") results = {verify_rank_lemma(vopt)};
      else results = {verify_kunneth(vopt)};
      bool all_ok = true;
      for (auto const& r : results) {
        std::cout << format_result(r);
        all_ok = all_ok && r.ok();
      }
      return all_ok ? ok : property;
    }
    if (*curve0_cmd) {
      Genus0Config cfg;
      for (auto const& p : split(punctures, ',')) cfg.punctures.push_back(P1Point::parse(p));
      for (auto const& p : split(pairs, ',')) {
        auto [a, b] = split_pair(p);
        cfg.pairs.push_back({P1Point::parse(a), P1Point::parse(b)});
      }
      const PeriodMatrix m = period_matrix_genus0(cfg);
      return report_curve(m, m.entries.rows(), m.entries, alpha1_genus0(cfg), alpha1_genus0_rank(cfg));
    }
    if (*curve1_cmd) {
      Genus1Config cfg;
      cfg.tau = parse_complex(tau);
      if (cfg.tau.imag() <= 0) throw std::domain_error("Im(tau) must be positive");
      for (auto const& p : split(punctures, ',')) cfg.punctures.push_back(parse_complex(p));
      for (auto const& p : split(pairs, ',')) {
        auto [a, b] = split_pair(p);
        cfg.pairs.push_back({parse_complex(a), parse_complex(b)});
      }
      const PeriodMatrix m = period_matrix_genus1(cfg);
      Matrix<Complex> logs(0, m.entries.cols());
      for (size_t r = 1; r < m.entries.rows(); ++r) logs.append_row(m.entries.row(r));
      return report_curve(m, logs.rows(), logs, alpha1_genus1(cfg), alpha1_genus1_rank(cfg));
    }
    if (*scan_cmd) {
      if (!(grid.re_min < grid.re_max && grid.im_min < grid.im_max)) {
        std::cerr << "error: empty scan rectangle\n";
        return usage;
      }
      const std::string csv = scan_csv(scan_m04(grid, float_tolerance(), workers));
      std::ofstream f(out, std::ios::binary);
      if (!(f << csv) || !f.flush()) {
        std::cerr << "error: cannot write " << out << "\n";
        return invalid;
      }
      return ok;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  }
  return usage;
}
