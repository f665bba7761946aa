#include "app.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "spectral_entropy/bounds.hpp"
#include "spectral_entropy/edge_list.hpp"
#include "spectral_entropy/families.hpp"
#include "spectral_entropy/products.hpp"
#include "spectral_entropy/spectrum.hpp"
#include "verify.hpp"

namespace spectral_entropy::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::SelfLoop:
    case ErrorCode::InvalidCount:
      return kExitParse;
    case ErrorCode::EmptyGraph:
      return kExitEmptyGraph;
    case ErrorCode::InvalidParameter:
    case ErrorCode::NonPositiveQ:
    case ErrorCode::ParameterAtLimit:
    case ErrorCode::UnsupportedCombination:
    case ErrorCode::RegularityRequired:
    case ErrorCode::MissingAux:
    case ErrorCode::NotRegular:
    case ErrorCode::NotBipartite:
    case ErrorCode::NotConnected:
    case ErrorCode::TooSmall:
    case ErrorCode::TooLarge:
    case ErrorCode::TooManyEdges:
    case ErrorCode::SizeCapExceeded:
      return kExitParameter;
    case ErrorCode::NotSymmetric:
    case ErrorCode::NotPositiveSemidefinite:
    case ErrorCode::NoConvergence:
      return kExitFailure;
  }
  return kExitFailure;
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "plain") return OutputFormat::Plain;
  throw Error(ErrorCode::ParseError, "unknown output format '" + text + "'");
}

Graph GraphSource::load() const {
  if (path.empty() == spec.empty()) {
    throw Error(ErrorCode::ParseError, "exactly one of --file and --spec is required");
  }
  if (!path.empty()) return load_edge_list(path);
  return generate(spec);
}

std::size_t vertex_cap_from_environment() {
  const char* raw = std::getenv("SPECTRAL_ENTROPY_VERTEX_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultVertexCap;
  const std::string_view text(raw);
  std::size_t cap = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc{} || end != text.data() + text.size() || cap == 0) {
    throw Error(ErrorCode::ParseError,
                "SPECTRAL_ENTROPY_VERTEX_CAP must be a positive integer, got '" +
                    std::string(text) + "'");
  }
  return cap;
}

namespace {

struct QR {
  double q;
  double r;
};

std::vector<QR> parse_grid(const std::string& text) {
  std::vector<QR> grid;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::ParseError, "grid entry '" + item + "' is not q:r");
    }
    try {
      std::size_t used_q = 0;
      std::size_t used_r = 0;
      const std::string qs = item.substr(0, colon);
      const std::string rs = item.substr(colon + 1);
      const double q = std::stod(qs, &used_q);
      const double r = std::stod(rs, &used_r);
      if (used_q != qs.size() || used_r != rs.size()) throw std::invalid_argument(item);
      grid.push_back({q, r});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "grid entry '" + item + "' is not q:r");
    }
  }
  if (grid.empty()) throw Error(ErrorCode::ParseError, "empty --grid");
  return grid;
}

Json graph_summary(const Graph& g) {
  return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
}

Json number_array(const std::vector<double>& values) {
  Json array = Json::array();
  for (double v : values) array.push_back(v);
  return array;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

std::string join_numbers(const std::vector<double>& values, char sep) {
  std::string joined;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) joined += sep;
    joined += format_number(values[i]);
  }
  return joined;
}

// Options common to every graph-reading verb. Strings are converted after
// parsing so that bad values map to our own exit codes.
struct CommonOptions {
  GraphSource source;
  std::string matrix = "L";
  std::string family = "sm";
  double q = 2.0;
  double r = 2.0;
  double tol = kDefaultEigenTolerance;
  std::string output;

  RunConfig config(OutputFormat default_output) const {
    RunConfig cfg;
    cfg.matrix = parse_matrix_kind(matrix);
    cfg.family = parse_entropy_family(family);
    cfg.q = q;
    cfg.r = r;
    cfg.tol = tol;
    cfg.output = output.empty() ? default_output : parse_output_format(output);
    if (!(q > 0.0)) throw Error(ErrorCode::NonPositiveQ, "q must be positive");
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidParameter, "tol must be positive");
    return cfg;
  }
};

void add_source_options(CLI::App& sub, GraphSource& source) {
  sub.add_option("--file", source.path, "edge-list file");
  sub.add_option("--spec", source.spec, "family spec, e.g. cycle:5, bipartite:2,3, er:10,0.3,7");
}

void add_config_options(CLI::App& sub, CommonOptions& opts, bool with_family) {
  sub.add_option("--matrix", opts.matrix, "L or Q")->capture_default_str();
  if (with_family) {
    sub.add_option("--family", opts.family, "sm, renyi, tsallis or vn")->capture_default_str();
  }
  sub.add_option("--q", opts.q, "entropy order q")->capture_default_str();
  sub.add_option("--r", opts.r, "Sharma-Mittal degree r")->capture_default_str();
  sub.add_option("--tol", opts.tol, "eigensolver tolerance")->capture_default_str();
  sub.add_option("--output", opts.output, "json, csv or plain");
}

int cmd_entropy(const CommonOptions& opts, std::ostream& out) {
  const RunConfig cfg = opts.config(OutputFormat::Json);
  const Graph g = opts.source.load();
  const Spectrum s = numeric_spectrum(g, cfg.matrix, cfg.tol);
  const DensitySpectrum ds = density_spectrum(s, g.edge_count());
  const EntropyParams params = cfg.entropy_params();
  const double value = entropy(ds, params);

  switch (cfg.output) {
    case OutputFormat::Json: {
      Json report;
      report["graph"] = graph_summary(g);
      report["matrix"] = to_string(cfg.matrix);
      report["family"] = to_string(cfg.family);
      report["routed_family"] = to_string(routed_family(params));
      report["q"] = cfg.q;
      report["r"] = cfg.r;
      report["value"] = value;
      report["spectrum"] = number_array(ds.probs);
      report["raw_spectrum"] = number_array(s.values);
      write_json(out, report);
      break;
    }
    case OutputFormat::Csv:
      write_csv_row(out, {"n", "m", "matrix", "family", "routed_family", "q", "r", "value"});
      write_csv_row(out, {std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
                          std::string(to_string(cfg.matrix)), std::string(to_string(cfg.family)),
                          std::string(to_string(routed_family(params))), format_number(cfg.q),
                          format_number(cfg.r), format_number(value)});
      break;
    case OutputFormat::Plain:
      out << format_number(value) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_spectrum(const CommonOptions& opts, bool closed_form, std::ostream& out) {
  const RunConfig cfg = opts.config(OutputFormat::Json);
  const Graph g = opts.source.load();

  Spectrum s;
  if (closed_form && !opts.source.spec.empty()) {
    const FamilySpec family = FamilySpec::parse(opts.source.spec);
    try {
      s = closed_form_spectrum(family, cfg.matrix);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedCombination) throw;
      s = numeric_spectrum(g, cfg.matrix, cfg.tol);
    }
  } else {
    s = numeric_spectrum(g, cfg.matrix, cfg.tol);
  }
  const DensitySpectrum ds = density_spectrum(s, g.edge_count());

  switch (cfg.output) {
    case OutputFormat::Json: {
      Json report;
      report["graph"] = graph_summary(g);
      report["matrix"] = to_string(cfg.matrix);
      report["source"] = to_string(s.source);
      report["spectrum"] = number_array(ds.probs);
      report["raw_spectrum"] = number_array(s.values);
      write_json(out, report);
      break;
    }
    case OutputFormat::Csv:
      write_csv_row(out, {"index", "raw", "density"});
      for (std::size_t i = 0; i < s.size(); ++i) {
        write_csv_row(out, {std::to_string(i), format_number(s.values[i]),
                            format_number(ds.probs[i])});
      }
      break;
    case OutputFormat::Plain:
      out << "raw: " << join_numbers(s.values, ' ') << '\n';
      out << "density: " << join_numbers(ds.probs, ' ') << '\n';
      break;
  }
  return kExitOk;
}

int cmd_bounds(const CommonOptions& opts, std::ostream& out) {
  const RunConfig cfg = opts.config(OutputFormat::Json);
  const Graph g = opts.source.load();
  const BoundReport report = bound_report(g, cfg.q, cfg.r, cfg.matrix);

  switch (cfg.output) {
    case OutputFormat::Json: {
      Json json;
      json["graph"] = graph_summary(g);
      json["matrix"] = to_string(report.kind);
      json["q"] = report.q;
      json["r"] = report.r;
      json["measured"] = report.measured;
      json["regime_verified"] = bound_regime_verified(report.q);
      Json entries = Json::array();
      for (const auto& e : report.entries) {
        Json prereq = Json::object();
        for (const auto& [key, value] : e.prerequisites) prereq[key] = value;
        Json entry;
        entry["name"] = e.name;
        entry["side"] = to_string(e.side);
        entry["applicable"] = e.applicable;
        entry["regime_verified"] = e.regime_verified;
        entry["value"] = e.applicable ? Json(e.value) : Json(nullptr);
        entry["reason"] = e.reason;
        entry["prerequisites"] = std::move(prereq);
        entries.push_back(std::move(entry));
      }
      json["entries"] = std::move(entries);
      write_json(out, json);
      break;
    }
    case OutputFormat::Csv:
      write_csv_row(out, {"name", "side", "applicable", "regime_verified", "value", "measured"});
      for (const auto& e : report.entries) {
        write_csv_row(out, {e.name, std::string(to_string(e.side)),
                            e.applicable ? "true" : "false",
                            e.regime_verified ? "true" : "false",
                            e.applicable ? format_number(e.value) : "nan",
                            format_number(report.measured)});
      }
      break;
    case OutputFormat::Plain:
      out << "measured: " << format_number(report.measured) << '\n';
      for (const auto& e : report.entries) {
        out << e.name << " (" << to_string(e.side) << "): ";
        if (e.applicable) {
          out << format_number(e.value);
          if (!e.regime_verified) out << " [regime not verified]";
        } else {
          out << "n/a";
        }
        if (!e.reason.empty()) out << " - " << e.reason;
        out << '\n';
      }
      break;
  }
  return kExitOk;
}

struct ProductOptions {
  CommonOptions common;
  GraphSource a;
  GraphSource b;
  std::string kind = "cartesian";
};

int cmd_product(const ProductOptions& opts, std::ostream& out) {
  const RunConfig cfg = opts.common.config(OutputFormat::Json);
  const ProductKind kind = parse_product_kind(opts.kind);
  const Graph g1 = opts.a.load();
  const Graph g2 = opts.b.load();
  const Graph g = product(g1, g2, kind);

  const Spectrum numeric = numeric_spectrum(g, cfg.matrix, cfg.tol);
  const DensitySpectrum ds = density_spectrum(numeric, g.edge_count());
  const double value = entropy(ds, cfg.entropy_params());

  std::optional<Spectrum> formula;
  std::string formula_error;
  try {
    formula = product_spectrum(numeric_spectrum(g1, cfg.matrix, cfg.tol),
                               numeric_spectrum(g2, cfg.matrix, cfg.tol), kind,
                               ProductContext::from_graphs(g1, g2));
  } catch (const Error& e) {
    formula_error = e.what();
  }
  const double deviation =
      formula ? max_abs_deviation(formula->values, numeric.values) : std::nan("");

  switch (cfg.output) {
    case OutputFormat::Json: {
      Json report;
      report["kind"] = to_string(kind);
      report["a"] = graph_summary(g1);
      report["b"] = graph_summary(g2);
      report["graph"] = graph_summary(g);
      report["matrix"] = to_string(cfg.matrix);
      report["family"] = to_string(cfg.family);
      report["q"] = cfg.q;
      report["r"] = cfg.r;
      report["entropy"] = value;
      report["numeric_spectrum"] = number_array(numeric.values);
      report["formula_spectrum"] = formula ? number_array(formula->values) : Json(nullptr);
      report["max_deviation"] = formula ? Json(deviation) : Json(nullptr);
      report["formula_error"] = formula ? Json(nullptr) : Json(formula_error);
      write_json(out, report);
      break;
    }
    case OutputFormat::Csv:
      write_csv_row(out, {"kind", "n", "m", "entropy", "max_deviation"});
      write_csv_row(out, {std::string(to_string(kind)), std::to_string(g.vertex_count()),
                          std::to_string(g.edge_count()), format_number(value),
                          format_number(deviation)});
      break;
    case OutputFormat::Plain:
      out << "n: " << g.vertex_count() << "\nm: " << g.edge_count()
          << "\nentropy: " << format_number(value)
          << "\nnumeric: " << join_numbers(numeric.values, ' ') << '\n';
      if (formula) {
        out << "formula: " << join_numbers(formula->values, ' ')
            << "\nmax_deviation: " << format_number(deviation) << '\n';
      } else {
        out << "formula: unavailable (" << formula_error << ")\n";
      }
      break;
  }
  return kExitOk;
}

struct GrowOptions {
  CommonOptions common;
  std::size_t iterations = 6;
  std::string grid;
  std::size_t validate_limit = 200;
};

std::string optional_value(double q, auto&& compute) {
  if (std::abs(q - 1.0) <= kDefaultLimitTolerance) return "nan";
  return format_number(compute());
}

int cmd_grow(const GrowOptions& opts, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = opts.common.config(OutputFormat::Csv);
  if (cfg.matrix != MatrixKind::Laplacian) {
    throw Error(ErrorCode::UnsupportedCombination,
                "grow uses the corona recursion, which is defined for L only");
  }
  if (opts.iterations == 0) throw Error(ErrorCode::InvalidParameter, "iterations must be >= 1");
  const std::vector<QR> grid =
      opts.grid.empty() ? std::vector<QR>{{cfg.q, cfg.r}} : parse_grid(opts.grid);
  for (const auto& point : grid) {
    if (!(point.q > 0.0)) throw Error(ErrorCode::NonPositiveQ, "grid q must be positive");
  }
  const std::size_t cap = vertex_cap_from_environment();
  const Graph seed = opts.common.source.load();
  if (seed.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "seed graph has no edges");

  Json rows = Json::array();
  if (cfg.output == OutputFormat::Csv) {
    write_csv_row(out, {"iteration", "n", "m", "q", "r", "sharma_mittal", "renyi", "tsallis",
                        "von_neumann"});
  }
  for (std::size_t it = 1; it <= opts.iterations; ++it) {
    CheckedSpectrum checked;
    try {
      checked = checked_corona_graph_spectrum(seed, it, opts.validate_limit, cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeCapExceeded) throw;
      err << "warning: stopping before iteration " << it << ": " << e.what() << '\n';
      break;
    }
    if (checked.diagnostic) err << "warning: iteration " << it << ": " << *checked.diagnostic << '\n';
    const std::size_t n = checked.spectrum.size();
    const std::size_t m = corona_edge_count(seed.vertex_count(), seed.edge_count(), it);
    const DensitySpectrum ds = density_spectrum(checked.spectrum, m);
    const double vn = von_neumann(ds);
    for (const auto& [q, r] : grid) {
      const double sm = entropy(ds, {EntropyFamily::SharmaMittal, q, r});
      const std::string renyi_cell = optional_value(q, [&] { return renyi(ds, q); });
      const std::string tsallis_cell = optional_value(q, [&] { return tsallis(ds, q); });
      if (cfg.output == OutputFormat::Json) {
        Json row;
        row["iteration"] = it;
        row["n"] = n;
        row["m"] = m;
        row["q"] = q;
        row["r"] = r;
        row["sharma_mittal"] = sm;
        row["renyi"] = renyi_cell == "nan" ? Json(nullptr) : Json(renyi(ds, q));
        row["tsallis"] = tsallis_cell == "nan" ? Json(nullptr) : Json(tsallis(ds, q));
        row["von_neumann"] = vn;
        rows.push_back(std::move(row));
      } else {
        const char sep = cfg.output == OutputFormat::Csv ? ',' : ' ';
        const std::vector<std::string> cells{std::to_string(it), std::to_string(n),
                                             std::to_string(m), format_number(q),
                                             format_number(r), format_number(sm),
                                             renyi_cell, tsallis_cell, format_number(vn)};
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i != 0) out << sep;
          out << cells[i];
        }
        out << '\n';
      }
    }
  }
  if (cfg.output == OutputFormat::Json) write_json(out, rows);
  return kExitOk;
}

int cmd_verify(double tol, const std::string& output, std::ostream& out) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidParameter, "tol must be positive");
  const OutputFormat format = output.empty() ? OutputFormat::Plain : parse_output_format(output);
  const auto checks = run_verification(tol);
  bool all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && c.passed;

  switch (format) {
    case OutputFormat::Json: {
      Json list = Json::array();
      for (const auto& c : checks) {
        list.push_back(Json{{"name", c.name},
                            {"passed", c.passed},
                            {"deviation", c.deviation},
                            {"tolerance", c.tolerance},
                            {"detail", c.detail}});
      }
      write_json(out, Json{{"passed", all_pass}, {"checks", std::move(list)}});
      break;
    }
    case OutputFormat::Csv:
      write_csv_row(out, {"name", "passed", "deviation", "tolerance"});
      for (const auto& c : checks) {
        write_csv_row(out, {c.name, c.passed ? "true" : "false", format_number(c.deviation),
                            format_number(c.tolerance)});
      }
      break;
    case OutputFormat::Plain:
      for (const auto& c : checks) {
        char line[160];
        std::snprintf(line, sizeof line, "%-4s %-44s dev=%-10.3g tol=%-8.1g ",
                      c.passed ? "PASS" : "FAIL", c.name.c_str(), c.deviation, c.tolerance);
        out << line << c.detail << '\n';
      }
      out << (all_pass ? "all checks passed" : "some checks FAILED") << '\n';
      break;
  }
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized graph entropies from Laplacian and signless Laplacian spectra",
               "spectral-entropy"};
  app.require_subcommand(1);

  CommonOptions entropy_opts;
  auto* entropy_cmd = app.add_subcommand("entropy", "entropy of a graph's density spectrum");
  add_source_options(*entropy_cmd, entropy_opts.source);
  add_config_options(*entropy_cmd, entropy_opts, true);

  CommonOptions spectrum_opts;
  bool closed_form = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "raw and density spectrum");
  add_source_options(*spectrum_cmd, spectrum_opts.source);
  add_config_options(*spectrum_cmd, spectrum_opts, false);
  spectrum_cmd->add_flag("--closed-form", closed_form,
                         "use the analytic spectrum when --spec names a family");

  CommonOptions bounds_opts;
  auto* bounds_cmd = app.add_subcommand("bounds", "entropy bounds with prerequisites");
  add_source_options(*bounds_cmd, bounds_opts.source);
  add_config_options(*bounds_cmd, bounds_opts, false);

  ProductOptions product_opts;
  auto* product_cmd = app.add_subcommand("product", "graph product, entropy and formula check");
  product_cmd->add_option("--a", product_opts.a.spec, "first factor spec");
  product_cmd->add_option("--b", product_opts.b.spec, "second factor spec");
  product_cmd->add_option("--a-file", product_opts.a.path, "first factor edge list");
  product_cmd->add_option("--b-file", product_opts.b.path, "second factor edge list");
  product_cmd
      ->add_option("--kind", product_opts.kind,
                   "cartesian, kronecker, strong, lexicographic or corona")
      ->capture_default_str();
  add_config_options(*product_cmd, product_opts.common, true);

  GrowOptions grow_opts;
  auto* grow_cmd = app.add_subcommand("grow", "entropies along iterated corona growth (CSV)");
  add_source_options(*grow_cmd, grow_opts.common.source);
  add_config_options(*grow_cmd, grow_opts.common, false);
  grow_cmd->add_option("--iterations", grow_opts.iterations, "number of corona iterations")
      ->capture_default_str();
  grow_cmd->add_option("--grid", grow_opts.grid, "q1:r1,q2:r2,... (default: --q:--r)");
  grow_cmd
      ->add_option("--validate-limit", grow_opts.validate_limit,
                   "eigensolve iterations whose vertex count is at most this")
      ->capture_default_str();

  double verify_tol = 1e-8;
  std::string verify_output;
  auto* verify_cmd = app.add_subcommand("verify", "formula-versus-eigensolver self check");
  verify_cmd->add_option("--tol", verify_tol, "agreement tolerance")->capture_default_str();
  verify_cmd->add_option("--output", verify_output, "plain, json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (entropy_cmd->parsed()) return cmd_entropy(entropy_opts, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_opts, closed_form, out);
    if (bounds_cmd->parsed()) return cmd_bounds(bounds_opts, out);
    if (product_cmd->parsed()) return cmd_product(product_opts, out);
    if (grow_cmd->parsed()) return cmd_grow(grow_opts, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_tol, verify_output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitParse;
}

}  // namespace spectral_entropy::cli
