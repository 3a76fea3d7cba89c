#pragma once

// Command-line front end. run_command is the whole program minus main(), so
// tests can drive it with an argument vector and capture both streams.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lsk/certificate.hpp"
#include "lsk/emit.hpp"
#include "lsk/expr.hpp"
#include "lsk/floer_rank.hpp"
#include "lsk/mapping_class.hpp"
#include "lsk/poly.hpp"

namespace lsk {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int error = 1;
inline constexpr int mismatch = 2;
}  // namespace exit_code

namespace detail {

struct Range {
  long first = 0;
  long last = 0;
};

/// "3" or "2..5".
inline Range parse_range(const std::string& text, const std::string& what) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw Error(ErrorKind::InvalidInput, what + " range '" + text + "' is not N or N1..N2");
    }
    return std::stol(s);
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.first = r.last = number(text);
  } else {
    r.first = number(text.substr(0, dots));
    r.last = number(text.substr(dots + 2));
  }
  if (r.last < r.first) throw Error(ErrorKind::InvalidInput, what + " range '" + text + "' is empty");
  return r;
}

inline void print_curves(int g, std::ostream& out) {
  const auto sys = standard_curve_system(g);
  std::vector<std::pair<std::string, Curve>> named;
  const auto chain = sys.chain();
  for (std::size_t k = 0; k < chain.size(); ++k) named.emplace_back(StandardCurveSystem::chain_label(k), chain[k]);
  named.emplace_back("c", sys.c());

  out << "genus " << g << ", cut arcs";
  for (const auto& a : sys.surface().cut_arcs()) out << " " << a;
  out << "\n";
  for (const auto& [label, curve] : named) out << std::setw(4) << label << "  " << curve.to_string() << "\n";
  out << "\nintersection numbers\n    ";
  for (const auto& [label, curve] : named) out << std::setw(4) << label;
  out << "\n";
  for (const auto& [row, x] : named) {
    out << std::setw(4) << row;
    for (const auto& [col, y] : named) out << std::setw(4) << intersection_number(x, y);
    out << "\n";
  }
}

inline void print_staircase(const std::string& text, std::ostream& out) {
  const Staircase s = staircase_from_alexander(parse_polynomial(text));
  const HfkProfile prof = lspace_profile(s);
  out << "positions";
  for (auto v : s.positions()) out << " " << v;
  out << "\ndeltas";
  for (auto v : s.deltas()) out << " " << v;
  out << "\nranks";
  for (auto [j, r] : prof.rank) out << " " << j << ":" << r;
  out << "\ntotal rank " << prof.total_rank() << "\n";
}

struct SweepRow {
  int g = 0;
  long n = 0;
  std::int64_t final_bound = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::string error;
  bool matches = false;
};

using Certifier = std::function<Certificate(int, long)>;

inline SweepRow sweep_one(const Certifier& run, int g, long n) {
  SweepRow r;
  r.g = g;
  r.n = n;
  try {
    const Certificate c = run(g, n);
    r.final_bound = c.final_bound;
    r.verdict = c.verdict;
    const bool expect_obstruction = n >= 1;
    r.matches = c.final_bound == 16 * static_cast<std::int64_t>(n) * n - 5 &&
                (c.verdict == Verdict::ObstructionFound) == expect_obstruction;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

/// Exit status 2 if any certificate disagrees with 16n^2-5 or with the
/// expected verdict, 1 if any certification failed outright.
inline int run_sweep(const Range& gs, const Range& ns, unsigned jobs, std::ostream& out,
                     const Certifier& run = [](int g, long n) { return certify(g, n); }) {
  std::vector<std::pair<int, long>> grid;
  for (long g = gs.first; g <= gs.last; ++g) {
    for (long n = ns.first; n <= ns.last; ++n) grid.emplace_back(static_cast<int>(g), n);
  }
  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < grid.size();) rows[k] = sweep_one(run, grid[k].first, grid[k].second);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool any_error = false, any_mismatch = false;
  for (const auto& r : rows) {
    out << "g=" << r.g << " n=" << r.n << " ";
    if (!r.error.empty()) {
      out << "error " << r.error << "\n";
      any_error = true;
      continue;
    }
    out << "final_bound=" << r.final_bound << " verdict=" << to_string(r.verdict) << (r.matches ? " ok" : " MISMATCH")
        << "\n";
    any_mismatch |= !r.matches;
  }
  if (any_error) return exit_code::error;
  return any_mismatch ? exit_code::mismatch : exit_code::ok;
}

}  // namespace detail

/// args excludes the program name. Returns the process exit status.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curve kernel and L-space obstruction certifier for the fibred knots K_n", "lsk"};
  app.require_subcommand(1);

  int genus = 2;
  long n = 0;
  std::string expr1, expr2, poly, g_range, n_range;
  bool json = false;
  std::size_t budget = kDefaultCrossBudget;
  unsigned jobs = 1;

  auto* curves = app.add_subcommand("curves", "print the standard curve system and its intersection table");
  curves->add_option("-g,--genus", genus, "genus")->required();

  auto* intersect = app.add_subcommand("intersect", "geometric intersection number of two curve expressions");
  intersect->add_option("-g,--genus", genus, "genus")->required();
  intersect->add_option("first", expr1, "curve expression")->required();
  intersect->add_option("second", expr2, "curve expression")->required();

  auto* twist = app.add_subcommand("twist", "normalized word of a curve expression");
  twist->add_option("-g,--genus", genus, "genus")->required();
  twist->add_option("expr", expr1, "curve expression")->required();

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of the monodromy phi_n");
  alexander->add_option("-g,--genus", genus, "genus")->required();
  alexander->add_option("-n", n, "twist parameter")->required();

  auto* staircase = app.add_subcommand("staircase", "staircase shape forced by an L-space knot's Alexander polynomial");
  staircase->add_option("polynomial", poly, "e.g. \"t^2 - t + 1\"")->required();

  auto* cert = app.add_subcommand("certify", "derive and print the rank bound certificate for K_n");
  cert->add_option("-g,--genus", genus, "genus")->required();
  cert->add_option("-n", n, "twist parameter")->required();
  cert->add_flag("--json", json, "emit JSON");

  auto* validate = app.add_subcommand("validate", "compute i(beta_{g,n}, psi(beta_{g,n})) directly");
  validate->add_option("-g,--genus", genus, "genus")->required();
  validate->add_option("-n", n, "twist parameter")->required();
  validate->add_option("--budget", budget, "maximum |beta| * |psi(beta)| word product");

  auto* sweep = app.add_subcommand("sweep", "certify a grid of (g, n) and check the bound formula");
  sweep->add_option("-g,--genus", g_range, "G or G1..G2")->required();
  sweep->add_option("-n", n_range, "N or N1..N2")->required();
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::error;
  }

  try {
    if (*curves) {
      detail::print_curves(genus, out);
    } else if (*intersect) {
      const auto sys = standard_curve_system(genus);
      out << intersection_number(evaluate(expr1, sys), evaluate(expr2, sys)) << "\n";
    } else if (*twist) {
      out << evaluate(expr1, standard_curve_system(genus)).to_string() << "\n";
    } else if (*alexander) {
      out << alexander_polynomial(monodromy_phi(genus, n), genus).normalized().to_string() << "\n";
    } else if (*staircase) {
      detail::print_staircase(poly, out);
    } else if (*cert) {
      out << emit_certificate(certify(genus, n), json ? Format::Json : Format::Text);
    } else if (*validate) {
      const CrossValidation r = cross_validate(genus, n, budget);
      out << "i(B[" << genus << "," << n << "], psi(B[" << genus << "," << n << "])) = " << r.direct << "\n"
          << "derived lower bound 16n^2-3 = " << r.engine_bound << "\n"
          << "slack " << r.slack << "\n"
          << "word lengths " << r.beta_length << ", " << r.image_length << "\n"
          << "non-isotopic " << (r.non_isotopic ? "yes" : "no") << "\n";
    } else if (*sweep) {
      return detail::run_sweep(detail::parse_range(g_range, "genus"), detail::parse_range(n_range, "n"), jobs, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::error;
  }
  return exit_code::ok;
}

}  // namespace lsk
