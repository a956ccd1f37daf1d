// Command-line front end: gap certification runs, oracle spectra, parameter
// sweeps and published-table verification, with JSON/CSV output.
//
// Exit codes: 0 ok, 1 usage, 2 degenerate elimination, 3 oracle
// non-convergence, 4 verification failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "specgap/gapengine.hpp"
#include "specgap/hierarchy.hpp"
#include "specgap/oracle.hpp"
#include "specgap/roots.hpp"

using namespace specgap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitVerifyFailed = 4;

std::string fmt_g10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt_fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct PotentialFlags {
  bool quartic = false;
  bool sextic = false;
  std::string s_text;
  std::string custom_text;

  PotentialSpec build(bool allow_symbolic) const {
    int chosen = (quartic ? 1 : 0) + (sextic ? 1 : 0) + (custom_text.empty() ? 0 : 1);
    if (chosen != 1)
      throw CLI::ValidationError("potential", "choose exactly one of --quartic/--sextic/--custom");
    if (quartic) {
      if (s_text.empty()) {
        if (allow_symbolic) return PotentialSpec::quartic_symbolic();
        throw CLI::ValidationError("potential", "--quartic needs -s <value>");
      }
      return PotentialSpec::quartic(rat_from_string(s_text));
    }
    if (sextic) return PotentialSpec::sextic();
    std::vector<Rational> c;
    std::stringstream ss(custom_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(rat_from_string(tok));
    return PotentialSpec::custom(std::move(c));
  }
};

void add_potential_flags(CLI::App* cmd, PotentialFlags& pf) {
  cmd->add_flag("--quartic", pf.quartic, "quartic family V = (s/2) x^2 + x^4/4");
  cmd->add_flag("--sextic", pf.sextic, "V = x^6");
  cmd->add_option("-s", pf.s_text, "shape parameter for --quartic (float or rational)");
  cmd->add_option("--custom", pf.custom_text, "comma-separated coefficients c0,c1,... of V");
}

std::pair<int, int> parse_m_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int m = std::stoi(text);
    return {m, m};
  }
  int a = std::stoi(text.substr(0, dots));
  int b = std::stoi(text.substr(dots + 2));
  if (b < a) throw CLI::ValidationError("-M", "empty order range");
  return {a, b};
}

Interval parse_window(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--window", "expected lo,hi");
  return Interval(rat_from_string(text.substr(0, comma)), rat_from_string(text.substr(comma + 1)));
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

Interval default_window(const PotentialSpec& v) {
  auto spec = oracle::converged_spectrum(v, 9, 1e-8);
  Rational lo = v.min_value_lower_bound(Rational(1, 1000000)) - 1;
  Rational hi = rat_from_string(fmt_g10(spec.energies[8] + 1.0));
  return Interval(lo, hi);
}

std::string gap_report_json(const GapReport& r, const std::optional<Rational>& s) {
  std::ostringstream os;
  os << "{\"potential\":\"" << r.potential.label() << "\",";
  if (s)
    os << "\"s\":" << fmt_g10(rat_to_double(*s)) << ",";
  else
    os << "\"s\":null,";
  os << "\"M\":" << r.M << ",\"gaps\":[";
  for (std::size_t i = 0; i < r.gaps.size(); ++i) {
    if (i) os << ",";
    os << "{\"lo\":" << fmt_g10(r.gaps[i].lo) << ",\"hi\":" << fmt_g10(r.gaps[i].hi) << "}";
  }
  os << "],\"certificates_sampled\":" << r.certificates_sampled << "}";
  return os.str();
}

void gap_report_csv(std::ostream& os, const GapReport& r, const std::optional<Rational>& s,
                    bool header) {
  if (header) os << "s,M,boundary_lo,boundary_hi,gap_index\n";
  for (std::size_t i = 0; i < r.gaps.size(); ++i) {
    if (s)
      os << fmt_g10(rat_to_double(*s));
    os << "," << r.M << "," << fmt_g10(r.gaps[i].lo) << "," << fmt_g10(r.gaps[i].hi) << "," << i
       << "\n";
  }
}

// ---------------- gaps ----------------

int run_gaps(const PotentialFlags& pf, const std::string& m_text, const std::string& window_text,
             const std::string& format, const std::string& out_path) {
  PotentialSpec v = pf.build(false);
  auto [m_lo, m_hi] = parse_m_range(m_text);
  Interval window = window_text.empty() ? default_window(v) : parse_window(window_text);
  std::optional<Rational> s;
  if (v.is_quartic_family()) s = v.s_value();

  std::vector<GapReport> reports;
  for (int m = m_lo; m <= m_hi; ++m) reports.push_back(compute_gaps(v, m, window));

  std::ofstream file;
  std::ostream& os = open_output(out_path, file);
  if (format == "csv") {
    bool header = true;
    for (const GapReport& r : reports) {
      gap_report_csv(os, r, s, header);
      header = false;
    }
  } else if (reports.size() == 1) {
    os << gap_report_json(reports[0], s) << "\n";
  } else {
    os << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) os << ",";
      os << gap_report_json(reports[i], s);
    }
    os << "]\n";
  }
  return kExitOk;
}

// ---------------- spectrum ----------------

int run_spectrum(const PotentialFlags& pf, int n_levels, double tol,
                 const std::string& out_path) {
  PotentialSpec v = pf.build(false);
  oracle::SpectrumResult r = oracle::converged_spectrum(v, n_levels, tol);
  std::ofstream file;
  std::ostream& os = open_output(out_path, file);
  os << "{\"energies\":[";
  for (std::size_t i = 0; i < r.energies.size(); ++i) {
    if (i) os << ",";
    os << fmt_g10(r.energies[i]);
  }
  os << "],\"basis_size\":" << r.basis_size_used
     << ",\"convergence_estimate\":" << fmt_g10(r.convergence_estimate) << "}\n";
  return kExitOk;
}

// ---------------- sweep ----------------

struct SweepRange {
  Rational from, to, step;
};

SweepRange parse_sweep_range(const std::string& text) {
  auto dots = text.find("..");
  auto colon = text.find(':', dots == std::string::npos ? 0 : dots + 2);
  if (dots == std::string::npos || colon == std::string::npos)
    throw CLI::ValidationError("-s", "sweep expects -s from..to:step");
  SweepRange r{rat_from_string(text.substr(0, dots)),
               rat_from_string(text.substr(dots + 2, colon - dots - 2)),
               rat_from_string(text.substr(colon + 1))};
  if (r.step <= 0 || r.to < r.from) throw CLI::ValidationError("-s", "empty s-range");
  return r;
}

int run_sweep(const std::string& s_range_text, int m_order, int n_levels,
              const std::string& out_path) {
  SweepRange range = parse_sweep_range(s_range_text);
  std::ofstream file;
  std::ostream& os = open_output(out_path, file);

  std::string levels_path = out_path.empty() ? "sweep_levels.csv" : out_path;
  auto dot = levels_path.rfind('.');
  if (dot != std::string::npos)
    levels_path = levels_path.substr(0, dot) + "_levels.csv";
  else
    levels_path += "_levels.csv";
  std::ofstream levels(levels_path);
  if (!levels) throw std::runtime_error("cannot open output file: " + levels_path);

  os << "s,M,boundary_lo,boundary_hi,gap_index\n";
  levels << "s,level,energy\n";
  for (Rational s = range.from; s <= range.to; s += range.step) {
    PotentialSpec v = PotentialSpec::quartic(s);
    auto spec = oracle::converged_spectrum(v, n_levels, 1e-8);
    for (int i = 0; i < n_levels; ++i)
      levels << fmt_g10(rat_to_double(s)) << "," << i << ","
             << fmt_g10(spec.energies[static_cast<std::size_t>(i)]) << "\n";
    Rational hi = rat_from_string(fmt_g10(spec.energies[static_cast<std::size_t>(n_levels - 1)] + 1.0));
    Interval window(v.min_value_lower_bound(Rational(1, 1000000)) - 1, hi);
    GapReport r = compute_gaps(v, m_order, window);
    for (std::size_t i = 0; i < r.gaps.size(); ++i)
      os << fmt_g10(rat_to_double(s)) << "," << m_order << "," << fmt_g10(r.gaps[i].lo) << ","
         << fmt_g10(r.gaps[i].hi) << "," << i << "\n";
  }
  return kExitOk;
}

// ---------------- verify ----------------

struct FixtureRow {
  std::string table, key, field;
  std::string value;
  double tolerance = 0;
};

std::vector<FixtureRow> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::vector<FixtureRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      continue;  // header
    }
    std::stringstream ss(line);
    FixtureRow r;
    std::string tol;
    std::getline(ss, r.table, ',');
    std::getline(ss, r.key, ',');
    std::getline(ss, r.field, ',');
    std::getline(ss, r.value, ',');
    std::getline(ss, tol, ',');
    r.tolerance = std::stod(tol);
    rows.push_back(std::move(r));
  }
  return rows;
}

struct VerifyState {
  int passed = 0;
  int failed = 0;
  void report(bool ok, const std::string& what, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << "  " << detail << "\n";
    (ok ? passed : failed) += 1;
  }
};

// monomial keys like "E6", "E4s1", "E1s1", "1"
std::pair<unsigned, unsigned> parse_monomial_key(const std::string& key) {
  unsigned de = 0, ds = 0;
  std::size_t i = 0;
  if (key == "1") return {0, 0};
  while (i < key.size()) {
    char c = key[i++];
    unsigned val = 0;
    while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i])))
      val = val * 10 + static_cast<unsigned>(key[i++] - '0');
    if (c == 'E')
      de = val;
    else if (c == 's')
      ds = val;
    else
      throw std::runtime_error("bad monomial key in fixture: " + key);
  }
  return {de, ds};
}

void verify_delta0(const std::vector<FixtureRow>& rows, VerifyState& st) {
  MPoly delta = discriminant_path(PotentialSpec::quartic_symbolic(), 0);
  // fix the overall constant on the leading fixture monomial
  std::optional<Rational> ratio;
  for (const FixtureRow& r : rows) {
    if (r.table != "delta0") continue;
    auto [de, ds] = parse_monomial_key(r.field);
    Rational published = rat_from_string(r.value);
    Rational computed = delta.coeff(MPoly::monomial(Rational(1), {{Var::E, de}, {Var::s, ds}})
                                        .leading_mono());
    if (!ratio) {
      if (computed == 0) {
        st.report(false, "delta0 " + r.field, "coefficient missing");
        continue;
      }
      ratio = published / computed;
      st.report(true, "delta0 constant",
                "published/computed = " + rat_to_string(*ratio));
    }
    bool ok = computed * (*ratio) == published;
    st.report(ok, "delta0 " + r.field,
              "published=" + r.value + " computed*c=" + rat_to_string(computed * (*ratio)));
  }
  // also require that no extra monomials survive
  MPoly reconstructed;
  for (const FixtureRow& r : rows) {
    if (r.table != "delta0") continue;
    auto [de, ds] = parse_monomial_key(r.field);
    reconstructed += MPoly::monomial(rat_from_string(r.value), {{Var::E, de}, {Var::s, ds}});
  }
  if (ratio) {
    bool ok = (*ratio) * delta == reconstructed;
    st.report(ok, "delta0 full polynomial", ok ? "exact match" : "extra or missing terms");
  }
}

void verify_energy_rows(const std::vector<FixtureRow>& rows, const std::string& table,
                        const PotentialSpec& v, VerifyState& st) {
  int count = 0;
  for (const FixtureRow& r : rows)
    if (r.table == table && r.key == "energies") ++count;
  if (count == 0) return;
  auto spec = oracle::converged_spectrum(v, count, 1e-8);
  for (const FixtureRow& r : rows) {
    if (r.table != table || r.key != "energies") continue;
    int idx = std::stoi(r.field.substr(1));
    double published = std::stod(r.value);
    double computed = spec.energies[static_cast<std::size_t>(idx)];
    bool ok = std::abs(published - computed) <= r.tolerance;
    st.report(ok, table + " " + r.field,
              "published=" + r.value + " computed=" + fmt_fixed4(computed));
  }
}

void verify_gap_table(const std::vector<FixtureRow>& rows, const std::string& table,
                      const PotentialSpec& v, VerifyState& st) {
  verify_energy_rows(rows, table, v, st);

  // collect the published intervals and counts per M
  struct Expected {
    std::map<int, int> column_counts;                      // column index -> count
    std::map<std::pair<int, int>, std::pair<double, double>> intervals;  // (col, idx) -> lo,hi
    double tol = 2e-3;
  };
  std::map<int, Expected> per_m;
  for (const FixtureRow& r : rows) {
    if (r.table != table || r.key == "energies") continue;
    // keys: "M5" with field "count_E1E2", or "M5_E1E2_0" with field lo/hi
    if (r.field.rfind("count_", 0) == 0) {
      int m = std::stoi(r.key.substr(1));
      int col = r.field[7] - '0';
      per_m[m].column_counts[col] = std::stoi(r.value);
    } else {
      auto us1 = r.key.find('_');
      auto us2 = r.key.find('_', us1 + 1);
      int m = std::stoi(r.key.substr(1, us1 - 1));
      int col = r.key[us1 + 2] - '0';
      int idx = std::stoi(r.key.substr(us2 + 1));
      auto& iv = per_m[m].intervals[{col, idx}];
      if (r.field == "lo")
        iv.first = std::stod(r.value);
      else
        iv.second = std::stod(r.value);
      per_m[m].tol = r.tolerance;
    }
  }
  if (per_m.empty()) return;

  int max_col = 0;
  for (auto& [m, exp] : per_m)
    for (auto& [col, cnt] : exp.column_counts) max_col = std::max(max_col, col);
  auto spec = oracle::converged_spectrum(v, max_col + 2, 1e-8);
  Interval window = default_window(v);

  for (auto& [m, exp] : per_m) {
    // the published quartic rows follow the eliminant-sign classification;
    // the sextic rows were produced with the pointwise certificates
    GapReport report = v.is_quartic_family() ? discriminant_gaps(v, m, window)
                                             : compute_gaps(v, m, window);
    for (auto& [col, expected_count] : exp.column_counts) {
      double e_lo = spec.energies[static_cast<std::size_t>(col)];
      double e_hi = spec.energies[static_cast<std::size_t>(col) + 1];
      std::vector<std::pair<double, double>> found;
      for (const GapInterval& g : report.gaps) {
        double mid = 0.5 * (g.lo + g.hi);
        if (mid > e_lo && mid < e_hi) found.emplace_back(g.lo, g.hi);
      }
      std::string colname = "E" + std::to_string(col) + "E" + std::to_string(col + 1);
      bool count_ok = static_cast<int>(found.size()) == expected_count;
      st.report(count_ok, table + " M" + std::to_string(m) + " count_" + colname,
                "published=" + std::to_string(expected_count) +
                    " computed=" + std::to_string(found.size()));
      if (!count_ok) continue;
      for (int idx = 0; idx < expected_count; ++idx) {
        auto it = exp.intervals.find({col, idx});
        if (it == exp.intervals.end()) continue;
        double dlo = std::abs(found[static_cast<std::size_t>(idx)].first - it->second.first);
        double dhi = std::abs(found[static_cast<std::size_t>(idx)].second - it->second.second);
        bool ok = dlo <= exp.tol && dhi <= exp.tol;
        st.report(ok,
                  table + " M" + std::to_string(m) + " " + colname + "_" + std::to_string(idx),
                  "published=[" + fmt_fixed4(it->second.first) + "," + fmt_fixed4(it->second.second) +
                      "] computed=[" + fmt_fixed4(found[static_cast<std::size_t>(idx)].first) + "," +
                      fmt_fixed4(found[static_cast<std::size_t>(idx)].second) + "]");
      }
    }
  }
}

int run_verify(const std::string& what, const std::string& fixtures_path) {
  auto rows = load_fixture(fixtures_path);
  VerifyState st;
  if (what == "delta0") {
    verify_delta0(rows, st);
  } else if (what == "table1") {
    verify_gap_table(rows, "table1", PotentialSpec::quartic(rat_from_string("-2.3")), st);
  } else if (what == "table2") {
    verify_gap_table(rows, "table2", PotentialSpec::sextic(), st);
  } else {
    std::cerr << "unknown verification target: " << what << "\n";
    return kExitUsage;
  }
  std::cout << "verified " << (st.passed + st.failed) << " rows: " << st.passed << " passed, "
            << st.failed << " failed\n";
  return st.failed == 0 ? kExitOk : kExitVerifyFailed;
}

// ---------------- fn ----------------

int run_fn(int n_order, const PotentialFlags& pf) {
  if (n_order < 1 || n_order > 6) {
    std::cerr << "operator order must be between 1 and 6\n";
    return kExitUsage;
  }
  PotentialFlags flags = pf;
  if (!flags.quartic && !flags.sextic && flags.custom_text.empty()) flags.quartic = true;
  PotentialSpec v = flags.build(true);
  DiffOperator f = build_F_N(v, n_order);
  std::cout << "F_" << n_order << " for potential " << v.label() << ":\n";
  for (std::size_t k = f.coeffs.size(); k-- > 0;) {
    if (f.coeffs[k].is_zero()) continue;
    std::cout << "  a0^(" << k << "): " << f.coeffs[k].str() << "\n";
  }
  std::cout << "operator: " << f.str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral gap certification for 1-D Schrodinger operators"};
  app.require_subcommand(1);

  // gaps
  auto* gaps = app.add_subcommand("gaps", "compute certified eigenvalue-free intervals");
  PotentialFlags gaps_pf;
  add_potential_flags(gaps, gaps_pf);
  std::string gaps_m = "0", gaps_window, gaps_format = "json", gaps_out;
  gaps->add_option("-M", gaps_m, "ansatz order (int or a..b)");
  gaps->add_option("--window", gaps_window, "energy window lo,hi");
  gaps->add_option("--format", gaps_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  gaps->add_option("--out", gaps_out, "output path (default stdout)");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "oracle eigenvalues by diagonalization");
  PotentialFlags spec_pf;
  add_potential_flags(spectrum, spec_pf);
  int spec_n = 7;
  double spec_tol = 1e-8;
  std::string spec_out;
  spectrum->add_option("-n", spec_n, "number of levels");
  spectrum->add_option("--tol", spec_tol, "convergence tolerance");
  spectrum->add_option("--out", spec_out, "output path (default stdout)");

  // sweep (quartic family only)
  auto* sweep = app.add_subcommand("sweep", "gap boundaries across a range of s (quartic)");
  bool sweep_quartic = false;
  std::string sweep_s, sweep_out;
  int sweep_m = 2, sweep_n = 8;
  sweep->add_flag("--quartic", sweep_quartic, "quartic family (implied)");
  sweep->add_option("-s", sweep_s, "range from..to:step")->required();
  sweep->add_option("-M", sweep_m, "ansatz order");
  sweep->add_option("-n", sweep_n, "oracle levels for the companion file");
  sweep->add_option("--out", sweep_out, "output CSV path")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check computed results against published tables");
  std::string verify_what, verify_fixtures = "fixtures/published_tables.csv";
  verify->add_option("target", verify_what, "table1, table2 or delta0")->required();
  verify->add_option("--fixtures", verify_fixtures, "fixture CSV path");

  // fn
  auto* fn = app.add_subcommand("fn", "print the sign-test operator of a given order");
  PotentialFlags fn_pf;
  add_potential_flags(fn, fn_pf);
  int fn_n = 2;
  fn->add_option("-N", fn_n, "operator order (1..6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return kExitOk;
    }
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    if (gaps->parsed())
      return run_gaps(gaps_pf, gaps_m, gaps_window, gaps_format, gaps_out);
    if (spectrum->parsed()) return run_spectrum(spec_pf, spec_n, spec_tol, spec_out);
    if (sweep->parsed()) return run_sweep(sweep_s, sweep_m, sweep_n, sweep_out);
    if (verify->parsed()) return run_verify(verify_what, verify_fixtures);
    if (fn->parsed()) return run_fn(fn_n, fn_pf);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateElimination& e) {
    std::cerr << e.what() << "\n";
    return kExitDegenerate;
  } catch (const oracle::NotConverged& e) {
    std::cerr << e.what() << "\n";
    return kExitNotConverged;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
