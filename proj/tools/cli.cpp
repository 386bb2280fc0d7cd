#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "fhzeta/acceptance.hpp"
#include "fhzeta/contour.hpp"
#include "fhzeta/error.hpp"
#include "fhzeta/grid.hpp"
#include "fhzeta/report.hpp"

namespace fhzeta::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

struct Config {
  std::string command;
  double a = 1.0;
  std::string s_text;
  std::size_t count = 0;
  std::vector<double> bracket;
  std::vector<double> rect;
  double resolution = 0.05;
  std::string output;
  std::string format = "json";
  std::string inject_fault;
  std::vector<int> only;
  bool format_given = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A command either fills a JSON report or, in CSV mode, a table.
struct Output {
  Report report;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool tabular = false;
  std::string text;  // plain text printed to stdout (selftest)
  int status = kOk;
};

json base_metadata(const Config& cfg) {
  json m = json::object();
  m["program"] = "fhzeta";
  m["version"] = kVersion;
  m["command"] = cfg.command;
  return m;
}

json params_metadata(const ZetaParams& p) {
  json m = json::object();
  m["a"] = p.a();
  m["quad_abs_tol"] = p.quad_abs_tol();
  m["quad_rel_tol"] = p.quad_rel_tol();
  m["max_subdivisions"] = p.max_subdivisions();
  return m;
}

Rectangle rect_from(const Config& cfg) {
  const auto& r = cfg.rect;
  return {r[0], r[1], r[2], r[3]};
}

std::string representation_name(const EvalResult& r) {
  return r.representation == Representation::Direct ? "direct"
                                                     : "strip-" + std::to_string(r.strip);
}

std::string one_line(std::string msg) {
  std::replace(msg.begin(), msg.end(), '\n', ' ');
  return msg;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

Output cmd_eval(const Config& cfg) {
  const auto s = parse_complex(cfg.s_text);
  require(s.has_value(), "--s must look like R+Ii, got '" + cfg.s_text + "'");
  const ZetaParams p(cfg.a);
  const ComplexPoint pt = ComplexPoint::from(*s);
  const EvalResult r = zeta_a(p, pt);

  Output out;
  out.report.metadata = base_metadata(cfg);
  out.report.metadata["params"] = params_metadata(p);
  out.report.metadata["representation"] = representation_name(r);
  out.report.metadata["near_pole"] = r.near_pole;
  out.report.metadata["near_trivial_zero"] = r.near_trivial_zero;
  const GridRow row = make_row(pt, r.value);
  out.report.data["s"] = point_json(pt);
  out.report.data["value"] = complex_json(r.value);
  out.report.data["modulus"] = row.modulus;
  out.report.data["phase"] = row.phase;
  out.report.data["est_error"] = r.est_error;
  out.header = kGridHeader;
  out.rows = grid_csv_rows({row});
  out.tabular = true;
  return out;
}

Output cmd_coeffs(const Config& cfg) {
  require(cfg.count >= 1, "--count must be >= 1");
  const auto c = subtraction_coeffs(cfg.a, cfg.count);
  Output out;
  out.report.metadata = base_metadata(cfg);
  out.report.metadata["a"] = cfg.a;
  out.report.metadata["count"] = cfg.count;
  out.report.data["coeffs"] = c.coeffs;
  out.header = {"k", "c"};
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    out.rows.push_back({std::to_string(k), format_double(c.coeffs[k])});
  }
  out.tabular = true;
  return out;
}

Output cmd_zeros(const Config& cfg) {
  const ZetaParams p(cfg.a);
  const double root = find_real_zero(p, cfg.bracket[0], cfg.bracket[1]);
  const double residual = std::abs(zeta_a(p, {root, 0.0}).value);
  Output out;
  out.report.metadata = base_metadata(cfg);
  out.report.metadata["params"] = params_metadata(p);
  out.report.metadata["bracket"] = cfg.bracket;
  out.report.metadata["bracket_tolerance"] = 1e-10;
  out.report.data["root"] = root;
  out.report.data["residual"] = residual;
  out.header = {"root", "residual"};
  out.rows = {{format_double(root), format_double(residual)}};
  out.tabular = true;
  return out;
}

Output cmd_census(const Config& cfg) {
  const ZetaParams p(cfg.a);
  const Rectangle rect = rect_from(cfg);
  const ContourReport r = winding_number(p, rect);
  Output out;
  out.report.metadata = base_metadata(cfg);
  out.report.metadata["params"] = params_metadata(p);
  out.report.metadata["rect"] = cfg.rect;
  out.report.metadata["evaluations"] = r.evaluations;
  out.report.data["winding"] = r.winding;
  out.report.data["known_poles_inside"] = r.known_poles_inside;
  out.report.data["inferred_zero_count"] = r.inferred_zero_count;
  out.report.data["min_boundary_modulus"] = r.min_boundary_modulus;
  return out;
}

json result_json(const CriterionResult& r) {
  json j = json::object();
  j["id"] = r.id;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["measured"] = r.measured;
  j["tolerance"] = r.tolerance;
  j["detail"] = r.detail;
  return j;
}

Output suite_output(const Config& cfg, const AcceptanceOptions& opt, bool print_lines) {
  const auto results = run_acceptance(opt);
  Output out;
  out.report.metadata = base_metadata(cfg);
  json timings = json::object();
  json rows = json::array();
  bool all = true;
  std::ostringstream text;
  for (const auto& r : results) {
    rows.push_back(result_json(r));
    timings[std::to_string(r.id)] = r.seconds;
    all = all && r.passed;
    if (print_lines) text << format_result(r) << '\n';
  }
  if (print_lines) {
    text << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
  }
  out.report.metadata["seconds"] = timings;
  if (!cfg.inject_fault.empty()) out.report.metadata["inject_fault"] = cfg.inject_fault;
  out.report.data["criteria"] = rows;
  out.report.data["passed"] = all;
  out.text = text.str();
  out.status = all ? kOk : kCheckFailed;
  return out;
}

Output cmd_verify(const Config& cfg) {
  AcceptanceOptions opt;
  opt.only = {4, 5, 6};
  return suite_output(cfg, opt, false);
}

Output cmd_selftest(const Config& cfg) {
  AcceptanceOptions opt;
  opt.only = cfg.only;
  if (!cfg.inject_fault.empty()) {
    require(cfg.inject_fault == "c1", "unknown fault '" + cfg.inject_fault + "' (known: c1)");
    opt.coeffs = perturbed_c1_provider(1e-6);
  }
  return suite_output(cfg, opt, true);
}

Output cmd_scan(const Config& cfg) {
  const ZetaParams p(cfg.a);
  ScanOptions so;
  const auto cands = scan_region(p, rect_from(cfg), cfg.resolution, so);
  Output out;
  out.report.metadata = base_metadata(cfg);
  out.report.metadata["params"] = params_metadata(p);
  out.report.metadata["rect"] = cfg.rect;
  out.report.metadata["resolution"] = cfg.resolution;
  out.report.metadata["trigger"] = so.trigger;
  out.report.metadata["cell_diameter"] = so.cell_diameter;
  out.report.metadata["max_residual"] = so.max_residual;
  json list = json::array();
  out.header = {"sigma", "t", "residual", "classification"};
  for (const auto& c : cands) {
    const char* cls = c.classification == ZeroClass::Trivial ? "trivial" : "nontrivial-candidate";
    json j = point_json(c.location);
    j["residual"] = c.residual;
    j["classification"] = cls;
    list.push_back(j);
    out.rows.push_back({format_double(c.location.sigma), format_double(c.location.t),
                        format_double(c.residual), cls});
  }
  out.report.data["candidates"] = list;
  out.tabular = true;
  return out;
}

Output cmd_grid(const Config& cfg) {
  const ZetaParams p(cfg.a);
  const Rectangle r = rect_from(cfg);
  require(cfg.resolution > 0.0, "--resolution must be positive");
  const GridSpec g{r.sigma_min, r.sigma_max, cfg.resolution, r.t_min, r.t_max, cfg.resolution};
  const auto samples = zeta_grid(p, g);
  const auto rows = grid_rows(samples);
  Output out;
  out.report.metadata = base_metadata(cfg);
  out.report.metadata["params"] = params_metadata(p);
  out.report.metadata["rect"] = cfg.rect;
  out.report.metadata["resolution"] = cfg.resolution;
  out.report.metadata["sigma_count"] = g.sigma_count();
  out.report.metadata["t_count"] = g.t_count();
  json reps = json::array();
  for (const auto& smp : samples) {
    if (!smp.valid) {
      reps.push_back("invalid");
    } else {
      reps.push_back(smp.s.sigma > 1.0 ? "direct"
                                       : "strip-" + std::to_string(choose_strip(smp.s)));
    }
  }
  out.report.metadata["representation"] = reps;
  json cols = json::array();
  for (const auto& h : kGridHeader) cols.push_back(h);
  json data = json::array();
  for (const auto& row : rows) {
    data.push_back({row.sigma, row.t, row.re, row.im, row.modulus, row.phase});
  }
  out.report.data["columns"] = cols;
  out.report.data["rows"] = data;
  out.header = kGridHeader;
  out.rows = grid_csv_rows(rows);
  out.tabular = true;
  return out;
}

void emit(const Output& o, const Config& cfg, std::ostream& out) {
  std::ostringstream body;
  if (cfg.format == "csv") {
    write_csv(body, o.report.metadata, o.header, o.rows);
  } else {
    write_json(body, o.report);
  }
  if (!o.text.empty()) out << o.text;
  if (cfg.output.empty()) {
    if (o.text.empty() || cfg.format_given) out << body.str();
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + cfg.output + "'");
  f << body.str();
  if (!f) throw UsageError("failed writing '" + cfg.output + "'");
}

}  // namespace

std::optional<cplx> parse_complex(const std::string& text) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[iI])?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    static const std::regex pure(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[iI]\s*$)");
    if (!std::regex_match(text, m, pure)) return std::nullopt;
    const std::string im = m[1].str();
    if (im.empty() || im == "+") return cplx{0.0, 1.0};
    if (im == "-") return cplx{0.0, -1.0};
    return cplx{0.0, std::stod(im)};
  }
  const double re_part = std::stod(m[1].str());
  double im_part = 0.0;
  if (m[2].matched) {
    im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im_part = -im_part;
  }
  return cplx{re_part, im_part};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Fractional hypergeometric zeta function toolkit", "fhzeta"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output, "Write the report to this file");
    sub->add_option("--format", cfg.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_a = [&](CLI::App* sub) {
    sub->add_option("--a", cfg.a, "Order a > 0")->required();
  };
  auto add_rect = [&](CLI::App* sub) {
    sub->add_option("--rect", cfg.rect, "sigma_min sigma_max t_min t_max")
        ->expected(4)
        ->required()
        ->allow_extra_args(false);
  };

  auto* eval = app.add_subcommand("eval", "Evaluate zeta_a at one point");
  add_a(eval);
  eval->add_option("--s", cfg.s_text, "Point as R+Ii")->required();
  add_common(eval);

  auto* coeffs = app.add_subcommand("coeffs", "Subtraction coefficients c_0..c_{count-1}");
  add_a(coeffs);
  coeffs->add_option("--count", cfg.count, "Number of coefficients")->required();
  add_common(coeffs);

  auto* zeros = app.add_subcommand("zeros", "Real zero by bisection");
  add_a(zeros);
  zeros->add_option("--bracket", cfg.bracket, "lo hi")->expected(2)->required();
  add_common(zeros);

  auto* census = app.add_subcommand("census", "Winding number over a rectangle");
  add_a(census);
  add_rect(census);
  add_common(census);

  auto* verify = app.add_subcommand("verify", "Zero-free strip, Im-positivity and region checks");
  add_common(verify);

  auto* scan = app.add_subcommand("scan", "Scan a rectangle for zero candidates");
  add_a(scan);
  add_rect(scan);
  scan->add_option("--resolution", cfg.resolution, "Grid spacing, at most 0.1");
  add_common(scan);

  auto* grid = app.add_subcommand("grid", "Export zeta_a over a grid");
  add_a(grid);
  add_rect(grid);
  grid->add_option("--resolution", cfg.resolution, "Grid spacing");
  add_common(grid);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--inject-fault", cfg.inject_fault, "Deliberate fault (c1)");
  selftest->add_option("--only", cfg.only, "Criterion ids to run");
  add_common(selftest);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  cfg.format_given = chosen->count("--format") > 0;

  try {
    Output o;
    const bool table_ok = cfg.command == "eval" || cfg.command == "coeffs" ||
                          cfg.command == "zeros" || cfg.command == "scan" ||
                          cfg.command == "grid";
    require(cfg.format != "csv" || table_ok,
            "--format csv is not available for " + cfg.command + "; use json");
    if (cfg.command == "eval") o = cmd_eval(cfg);
    else if (cfg.command == "coeffs") o = cmd_coeffs(cfg);
    else if (cfg.command == "zeros") o = cmd_zeros(cfg);
    else if (cfg.command == "census") o = cmd_census(cfg);
    else if (cfg.command == "verify") o = cmd_verify(cfg);
    else if (cfg.command == "scan") o = cmd_scan(cfg);
    else if (cfg.command == "grid") o = cmd_grid(cfg);
    else o = cmd_selftest(cfg);
    emit(o, cfg, out);
    return o.status;
  } catch (const UsageError& e) {
    err << "usage error: " << one_line(e.what()) << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return is_numerical(e.code()) ? kNumerical : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kNumerical;
  }
}

}  // namespace fhzeta::cli
