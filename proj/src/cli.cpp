#include "pabraid/cli.hpp"

#include "pabraid/horseshoe.hpp"
#include "pabraid/parallel.hpp"
#include "pabraid/verify.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace pabraid {

namespace {

enum class Format { json, csv };

struct Globals {
  double tol = 1e-9;
  std::string format = "json";
  bool csv = false;
  unsigned precision = 128;

  Format fmt() const { return csv || format == "csv" ? Format::csv : Format::json; }
  AberthOptions aberth() const {
    AberthOptions o;
    o.start_bits = precision;
    o.max_bits = std::max(precision, o.max_bits);
    return o;
  }
};

nlohmann::ordered_json number_json(const Real& x) { return std::stod(format_real(x)); }

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(std::string_view text, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidParameters("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::string csv_real(const std::optional<Real>& x) { return x ? format_real(*x) : std::string(); }

// --- commands ---------------------------------------------------------------

int cmd_dilatation(const Globals& g, const std::string& family, const std::string& m, const std::string& n,
                   std::ostream& out) {
  const FamilyParams p{parse_family(family), parse_int(m, "m"), parse_int(n, "n")};
  p.validate();
  const DilatationResult r = dilatation(p, g.tol);
  if (g.fmt() == Format::csv) {
    out << csv_header << '\n' << csv_row(p, r) << '\n';
  } else {
    out << result_json(p, r).dump() << '\n';
  }
  return exit_ok;
}

int cmd_table(const Globals& g, const std::string& family, const std::string& ms, const std::string& ns,
              std::ostream& out) {
  const Family f = parse_family(family);
  const auto [m_lo, m_hi] = parse_range(ms);
  const auto [n_lo, n_hi] = parse_range(ns);
  std::vector<FamilyParams> cells;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = n_lo; n <= n_hi; ++n) {
      FamilyParams p{f, m, n};
      p.validate();
      cells.push_back(p);
    }
  }
  const auto results = parallel_map(cells.size(), [&](std::size_t i) { return dilatation(cells[i], g.tol); });
  if (g.fmt() == Format::csv) {
    out << csv_header << '\n';
    for (std::size_t i = 0; i < cells.size(); ++i) out << csv_row(cells[i], results[i]) << '\n';
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < cells.size(); ++i) arr.push_back(result_json(cells[i], results[i]));
    out << arr.dump() << '\n';
  }
  return exit_ok;
}

struct SalemBoydRow {
  std::optional<std::size_t> n;
  std::size_t degree = 0;
  std::optional<MahlerMeasure> mahler;
  std::optional<Real> lambda;
  std::optional<UnitCircleCensus> census;
};

SalemBoydRow salem_boyd_row(const IntPolynomial& q, std::optional<std::size_t> n, const Globals& g) {
  SalemBoydRow row;
  row.n = n;
  row.degree = q.degree().value_or(0);
  if (row.degree == 0) return row;
  row.mahler = mahler_measure(q, g.tol, g.aberth());
  row.census = count_outside_unit(q, g.tol, g.aberth());
  try {
    row.lambda = largest_real_root(q, -cauchy_bound(q), g.tol).witness;
  } catch (const NoRootError&) {
  }
  return row;
}

int cmd_salem_boyd(const Globals& g, const std::string& file, int n_max, const std::string& sign_text,
                   std::ostream& out) {
  if (n_max < 0) throw InvalidParameters("--n-max must be >= 0");
  const SalemBoydSign sign = parse_sign(sign_text);
  std::ifstream in(file);
  if (!in) throw InvalidParameters("cannot read polynomial file '" + file + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const IntPolynomial base = parse_polynomial(trim(text));
  if (base.is_zero() || !base.is_monic()) throw InvalidParameters("salem-boyd base polynomial must be monic");

  auto rows = parallel_map(static_cast<std::size_t>(n_max) + 1, [&](std::size_t n) {
    return salem_boyd_row(salem_boyd({base, n, sign}), n, g);
  });
  rows.push_back(salem_boyd_row(base, std::nullopt, g));

  if (g.fmt() == Format::csv) {
    out << "n,degree,mahler,mahler_error,lambda,outside,on_circle,inside\n";
    for (const auto& r : rows) {
      out << (r.n ? std::to_string(*r.n) : std::string("P")) << ',' << r.degree << ','
          << (r.mahler ? format_real(r.mahler->value) : "") << ','
          << (r.mahler ? format_real(r.mahler->error_bound) : "") << ',' << csv_real(r.lambda) << ','
          << (r.census ? std::to_string(r.census->outside) : "") << ','
          << (r.census ? std::to_string(r.census->on_circle) : "") << ','
          << (r.census ? std::to_string(r.census->inside) : "") << '\n';
    }
    return exit_ok;
  }

  auto row_json = [](const SalemBoydRow& r) {
    nlohmann::ordered_json j;
    if (r.n) j["n"] = *r.n;
    j["degree"] = r.degree;
    j["mahler"] = r.mahler ? number_json(r.mahler->value) : nlohmann::ordered_json();
    j["mahler_error"] = r.mahler ? number_json(r.mahler->error_bound) : nlohmann::ordered_json();
    j["lambda"] = r.lambda ? number_json(*r.lambda) : nlohmann::ordered_json();
    if (r.census) {
      j["outside"] = r.census->outside;
      j["on_circle"] = r.census->on_circle;
      j["inside"] = r.census->inside;
    } else {
      j["outside"] = j["on_circle"] = j["inside"] = nullptr;
    }
    return j;
  };
  nlohmann::ordered_json j;
  j["base"] = to_json(base);
  j["sign"] = std::string(to_string(sign));
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) arr.push_back(row_json(rows[i]));
  j["rows"] = std::move(arr);
  j["base_row"] = row_json(rows.back());
  out << j.dump() << '\n';
  return exit_ok;
}

int cmd_verify(const Globals& g, const std::string& depth, std::ostream& out) {
  const VerifyDepth d = depth == "full" ? VerifyDepth::full : VerifyDepth::quick;
  const VerifyReport report = run_verify(VerifyLimits::for_depth(d), g.tol, g.aberth());
  if (g.fmt() == Format::csv) {
    out << "id,range,passed,worst_margin\n";
    for (const auto& c : report.checks) {
      out << c.id << ",\"" << c.range << "\"," << (c.passed ? "true" : "false") << ',' << c.worst_margin << '\n';
    }
  } else {
    out << to_json(report).dump(2) << '\n';
  }
  return report.all_passed() ? exit_ok : exit_verify_failed;
}

int cmd_horseshoe(const Globals& g, const std::string& code, std::ostream& out) {
  CodeOrbit orbit;
  std::optional<FamilyCode> fam;
  try {
    orbit = canonicalize(code);
    fam = code_to_family(code);
  } catch (const std::invalid_argument& e) {
    throw InvalidParameters(e.what());
  }
  std::optional<DilatationResult> r;
  std::optional<FamilyParams> p;
  if (fam) {
    p = FamilyParams{Family::sigma, fam->m, fam->n};
    r = dilatation(*p, g.tol);
  }
  if (g.fmt() == Format::csv) {
    out << "code,canonical,m,n,form,lambda\n" << orbit.word << ',' << orbit.canonical << ',';
    if (fam) {
      out << fam->m << ',' << fam->n << ',' << to_string(fam->form) << ',' << format_real(r->root->witness);
    } else {
      out << ",,,";
    }
    out << '\n';
    return exit_ok;
  }
  nlohmann::ordered_json j = to_json(orbit, fam);
  if (r) j["dilatation"] = result_json(*p, *r);
  out << j.dump() << '\n';
  return exit_ok;
}

}  // namespace

std::string format_real(const Real& x) { return to_decimal(x, 10); }

std::pair<int, int> parse_range(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), "range"), parse_int(text.substr(dots + 2), "range")};
}

nlohmann::ordered_json result_json(const FamilyParams& requested, const DilatationResult& r) {
  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(requested.family));
  j["m"] = requested.m;
  j["n"] = requested.n;
  j["tn_class"] = std::string(to_string(r.tn));
  j["poly"] = r.defining_poly ? to_json(*r.defining_poly) : nlohmann::ordered_json();
  if (r.root) {
    j["root"] = {{"lower", to_string(r.root->lower)},
                 {"upper", to_string(r.root->upper)},
                 {"witness", number_json(r.root->witness)},
                 {"certified", r.root->certified}};
    j["log_lambda"] = number_json(log(r.root->witness));
  } else {
    j["root"] = nullptr;
    j["log_lambda"] = nullptr;
  }
  j["provenance"] = r.provenance ? nlohmann::ordered_json(std::string(to_string(*r.provenance)))
                                 : nlohmann::ordered_json();
  return j;
}

std::string csv_row(const FamilyParams& requested, const DilatationResult& r) {
  std::ostringstream s;
  s << to_string(requested.family) << ',' << requested.m << ',' << requested.n << ',' << to_string(r.tn) << ',';
  if (r.root) s << format_real(r.root->witness) << ',' << format_real(log(r.root->witness));
  else s << ',';
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dilatations of the braid families beta_{m,n} and sigma_{m,n}", "pabraid"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "root enclosure width")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--csv", g.csv, "shorthand for --format csv");
  app.add_option("--precision", g.precision, "starting MPFR precision in bits for complex root finding")
      ->check(CLI::IsMember({128u, 256u, 512u, 1024u}));

  std::string family, a, b;
  auto* dil = app.add_subcommand("dilatation", "dilatation of one family member");
  dil->add_option("family", family, "beta or sigma")->required();
  dil->add_option("m", a)->required();
  dil->add_option("n", b)->required();

  auto* table = app.add_subcommand("table", "dilatations over a parameter grid");
  table->add_option("family", family, "beta or sigma")->required();
  table->add_option("m_range", a, "lo..hi")->required();
  table->add_option("n_range", b, "lo..hi")->required();

  std::string file, sign = "plus";
  int n_max = 20;
  auto* sb = app.add_subcommand("salem-boyd", "Mahler measures and root counts of t^n P +/- P_*");
  sb->add_option("poly_file", file, "file holding P as ascending comma-separated coefficients")->required();
  sb->add_option("--n-max", n_max, "largest n");
  sb->add_option("--sign", sign, "plus or minus");

  std::string depth = "quick";
  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  ver->add_option("--depth", depth)->check(CLI::IsMember({"quick", "full"}));

  std::string code;
  auto* hs = app.add_subcommand("horseshoe", "look up a horseshoe periodic orbit code");
  hs->add_option("code", code, "binary word")->required();

  for (auto* sub : {dil, table, sb, ver, hs}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (dil->parsed()) return cmd_dilatation(g, family, a, b, out);
    if (table->parsed()) return cmd_table(g, family, a, b, out);
    if (sb->parsed()) return cmd_salem_boyd(g, file, n_max, sign, out);
    if (ver->parsed()) return cmd_verify(g, depth, out);
    if (hs->parsed()) return cmd_horseshoe(g, code, out);
  } catch (const CrossCheckError& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return exit_cross_check;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return exit_numeric;
  }
  return exit_invalid;
}

}  // namespace pabraid
