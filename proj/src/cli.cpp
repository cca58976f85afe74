#include "umbral/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <sstream>

#include "umbral/mv_poly.hpp"
#include "umbral/umbra.hpp"
#include "umbral/verify.hpp"

namespace umbral::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- small renderers --------------------------------------------------------

std::string iso8601_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Coefficient array, lowest degree first; the zero polynomial renders ["0"].
ordered_json poly_coeff_array(const OrderPoly& p) {
  ordered_json a = ordered_json::array();
  if (p.empty()) {
    a.push_back("0");
    return a;
  }
  for (const Rat& c : p.coeffs()) a.push_back(rat_to_string(c));
  return a;
}

std::string poly_coeff_csv(const OrderPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const Rat& c : p.coeffs()) {
    if (!s.empty()) s += ';';
    s += rat_to_string(c);
  }
  return s;
}

std::string rat_to_latex(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = sgn(q) < 0 ? "-" : "";
  const Int num_abs = abs(q.get_num());
  return sign + "\\frac{" + num_abs.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string poly_to_latex(const OrderPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rat& c = p.coeff(i);
    if (is_zero(c)) continue;
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    const Rat a = abs(c);
    if (i == 0 || a != 1) s += rat_to_latex(a);
    if (i >= 1) {
      s += var;
      if (i > 1) s += "^{" + std::to_string(i) + "}";
    }
  }
  return s;
}

std::string monomial_to_latex(const MultiIndex& w) {
  std::string s;
  for (unsigned i = 0; i < w.dimension(); ++i) {
    if (w[i] == 0) continue;
    s += "x_{" + std::to_string(i + 1) + "}";
    if (w[i] > 1) s += "^{" + std::to_string(w[i]) + "}";
  }
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

std::string join_unsigned(const std::vector<unsigned>& xs, char sep) {
  std::string s;
  for (unsigned x : xs) {
    if (!s.empty()) s += sep;
    s += std::to_string(x);
  }
  return s;
}

// ---- argument parsing helpers ----------------------------------------------

MultiIndex parse_multi_index(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      const long x = std::stol(item);
      if (x < 0) throw ArgumentError("multi-index entries must be >= 0: " + text);
      parts.push_back(static_cast<unsigned>(x));
    } catch (const std::invalid_argument&) {
      throw ArgumentError("bad multi-index '" + text + "'");
    } catch (const std::out_of_range&) {
      throw ArgumentError("bad multi-index '" + text + "'");
    }
  }
  if (parts.empty()) throw ArgumentError("bad multi-index '" + text + "'");
  return MultiIndex(std::move(parts));
}

std::vector<Rat> parse_rat_tuple(const std::string& text) {
  std::vector<Rat> xs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      xs.push_back(rat_from_string(item));
    } catch (const std::invalid_argument& e) {
      throw ArgumentError(e.what());
    }
  }
  if (xs.empty()) throw ArgumentError("bad rational tuple '" + text + "'");
  return xs;
}

Rat parse_rat(const std::string& text) {
  try {
    return rat_from_string(text);
  } catch (const std::invalid_argument& e) {
    throw ArgumentError(e.what());
  }
}

void require_family(const std::string& family) {
  if (family != "bernoulli" && family != "euler")
    throw ArgumentError("unknown family '" + family + "' (bernoulli|euler)");
}

// ---- shared command state ---------------------------------------------------

struct GlobalOptions {
  std::string format = "json";
  unsigned max_order = 12;
  bool no_timestamp = false;
};

struct Document {
  std::string command_echo;
  ordered_json payload;                       // json payload
  std::vector<std::string> csv_header;        // csv table shape
  std::vector<std::vector<std::string>> csv_rows;
  std::string latex_body;
};

std::string render(const Document& doc, const GlobalOptions& g) {
  if (g.format == "json") {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["command"] = doc.command_echo;
    if (!g.no_timestamp) j["timestamp"] = iso8601_now();
    j["payload"] = doc.payload;
    return j.dump(2) + "\n";
  }
  if (g.format == "csv") {
    std::string out;
    out += "schema," + std::string(kSchemaVersion) + "\n";
    out += "command," + csv_escape(doc.command_echo) + "\n";
    if (!g.no_timestamp) out += "timestamp," + iso8601_now() + "\n";
    out += "\n";
    std::string header;
    for (const auto& h : doc.csv_header) {
      if (!header.empty()) header += ',';
      header += csv_escape(h);
    }
    out += header + "\n";
    for (const auto& row : doc.csv_rows) {
      std::string line;
      for (const auto& cell : row) {
        if (!line.empty()) line += ',';
        line += csv_escape(cell);
      }
      out += line + "\n";
    }
    return out;
  }
  // latex
  std::string out;
  out += "% schema " + std::string(kSchemaVersion) + "\n";
  out += "% command " + doc.command_echo + "\n";
  if (!g.no_timestamp) out += "% timestamp " + iso8601_now() + "\n";
  out += doc.latex_body;
  return out;
}

// ---- subcommands -------------------------------------------------------------

Document cmd_numbers(const GlobalOptions& g, const std::string& family, unsigned dim,
                     unsigned max_deg, const std::string& t_text) {
  require_family(family);
  if (dim < 1 || dim > 4) throw ArgumentError("--dim must be in 1..4");
  if (max_deg > g.max_order)
    throw ArgumentError("--max-deg exceeds --max-order truncation");

  const bool symbolic = t_text == "symbolic";
  const Rat t0 = symbolic ? Rat(0) : parse_rat(t_text);

  TupleUmbra<OrderPoly> dotted =
      family == "bernoulli" ? dot_product_gf(bernoulli_tuple(dim, g.max_order))
                            : dot_product_gf(euler_tuple(dim, g.max_order));

  Document doc;
  doc.command_echo = "numbers --family " + family + " --dim " + std::to_string(dim) +
                     " --max-deg " + std::to_string(max_deg) + " --t " + t_text +
                     " --max-order " + std::to_string(g.max_order) + " --format " +
                     g.format;
  doc.payload = ordered_json::array();
  doc.csv_header = {"v", "value"};
  std::string latex_rows;
  for (const MultiIndex& v : indices_up_to_degree(dim, max_deg)) {
    const OrderPoly value = mv_moment(dotted, v);
    ordered_json entry;
    entry["v"] = v.parts();
    if (symbolic) {
      entry["value"] = poly_coeff_array(value);
      doc.csv_rows.push_back({join_unsigned(v.parts(), ';'), poly_coeff_csv(value)});
      latex_rows += "$(" + join_unsigned(v.parts(), ',') + ")$ & $" +
                    poly_to_latex(value, "t") + "$ \\\\\n";
    } else {
      const Rat num = value.eval(t0);
      entry["value"] = rat_to_string(num);
      doc.csv_rows.push_back({join_unsigned(v.parts(), ';'), rat_to_string(num)});
      latex_rows += "$(" + join_unsigned(v.parts(), ',') + ")$ & $" +
                    rat_to_latex(num) + "$ \\\\\n";
    }
    doc.payload.push_back(std::move(entry));
  }
  doc.latex_body = "\\begin{tabular}{ll}\n$v$ & value \\\\\n\\hline\n" + latex_rows +
                   "\\end{tabular}\n";
  return doc;
}

Document cmd_poly(const GlobalOptions& g, const std::string& family,
                  const MultiIndex& v, const std::string& t_text) {
  require_family(family);
  if (v.total_degree() > g.max_order)
    throw ArgumentError("|v| exceeds --max-order truncation");

  const bool symbolic = t_text == "symbolic";
  const Rat t0 = symbolic ? Rat(0) : parse_rat(t_text);

  const MvPoly<OrderPoly> poly = family == "bernoulli"
                                     ? bernoulli_polynomial(v, g.max_order)
                                     : euler_polynomial(v, g.max_order);

  Document doc;
  doc.command_echo = "poly --family " + family + " --v " +
                     join_unsigned(v.parts(), ',') + " --t " + t_text +
                     " --max-order " + std::to_string(g.max_order) + " --format " +
                     g.format;
  doc.payload = ordered_json::array();
  doc.csv_header = {"exponent", "coeff"};
  std::string latex_terms;
  for (const auto& [w, c] : poly.terms()) {
    ordered_json entry;
    entry["exponent"] = w.parts();
    if (symbolic) {
      entry["coeff"] = poly_coeff_array(c);
      doc.csv_rows.push_back({join_unsigned(w.parts(), ';'), poly_coeff_csv(c)});
      if (!latex_terms.empty()) latex_terms += " + ";
      latex_terms += "\\left(" + poly_to_latex(c, "t") + "\\right)" +
                     monomial_to_latex(w);
    } else {
      const Rat num = c.eval(t0);
      if (is_zero(num)) continue;
      entry["coeff"] = rat_to_string(num);
      doc.csv_rows.push_back({join_unsigned(w.parts(), ';'), rat_to_string(num)});
      if (!latex_terms.empty()) latex_terms += " + ";
      const std::string mono = monomial_to_latex(w);
      latex_terms += mono.empty() ? rat_to_latex(num)
                                  : "\\left(" + rat_to_latex(num) + "\\right)" + mono;
    }
    doc.payload.push_back(std::move(entry));
  }
  if (doc.payload.empty()) {
    // numeric specialization may cancel every term
    ordered_json entry;
    entry["exponent"] = MultiIndex::zero(v.dimension()).parts();
    entry["coeff"] = "0";
    doc.payload.push_back(std::move(entry));
    doc.csv_rows.push_back(
        {join_unsigned(MultiIndex::zero(v.dimension()).parts(), ';'), "0"});
    latex_terms = "0";
  }
  doc.latex_body = "$" + latex_terms + "$\n";
  return doc;
}

Document cmd_eval(const GlobalOptions& g, const std::string& family,
                  const MultiIndex& v, const std::vector<Rat>& x, const Rat& t0,
                  const std::string& t_text, const std::string& x_text) {
  require_family(family);
  if (v.total_degree() > g.max_order)
    throw ArgumentError("|v| exceeds --max-order truncation");
  if (x.size() != v.dimension())
    throw ArgumentError("--x dimension does not match --v");

  const MvPoly<OrderPoly> poly = family == "bernoulli"
                                     ? bernoulli_polynomial(v, g.max_order)
                                     : euler_polynomial(v, g.max_order);
  const Rat value = evaluate(poly, x, t0);

  Document doc;
  doc.command_echo = "eval --family " + family + " --v " +
                     join_unsigned(v.parts(), ',') + " --x " + x_text + " --t " +
                     t_text + " --max-order " + std::to_string(g.max_order) +
                     " --format " + g.format;
  doc.payload = ordered_json{{"value", rat_to_string(value)}};
  doc.csv_header = {"value"};
  doc.csv_rows = {{rat_to_string(value)}};
  doc.latex_body = "$" + rat_to_latex(value) + "$\n";
  return doc;
}

struct VerifyArgs {
  std::string suite = "all";
  unsigned max_deg = 4;
  unsigned dim = 2;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  double confidence = 4.0;
  unsigned shards = 1;
};

Document cmd_verify(const GlobalOptions& g, const VerifyArgs& a, bool& all_passed) {
  if (a.suite != "all" && a.suite != "exact" && a.suite != "montecarlo" &&
      a.suite != "oracle")
    throw ArgumentError("unknown suite '" + a.suite + "' (all|exact|montecarlo|oracle)");
  if (a.dim < 1 || a.dim > 4) throw ArgumentError("--dim must be in 1..4");
  if (a.max_deg > g.max_order)
    throw ArgumentError("--max-deg exceeds --max-order truncation");

  std::vector<VerificationReport> reports;
  if (a.suite == "all" || a.suite == "exact") {
    auto batch = run_exact_suite(a.max_deg, a.dim);
    reports.insert(reports.end(), batch.begin(), batch.end());
  }
  if (a.suite == "all" || a.suite == "oracle") {
    auto batch = run_oracle_suite(a.max_deg, a.dim);
    reports.insert(reports.end(), batch.begin(), batch.end());
  }
  if (a.suite == "all" || a.suite == "montecarlo") {
    MonteCarloConfig cfg{a.samples, a.seed, a.dim, a.max_deg, a.confidence, a.shards};
    try {
      reports.push_back(run_montecarlo_uniform(cfg));
      reports.push_back(run_montecarlo_rademacher(cfg));
    } catch (const std::invalid_argument& e) {
      throw ArgumentError(e.what());
    }
  }

  all_passed = true;
  Document doc;
  doc.command_echo = "verify --suite " + a.suite + " --max-deg " +
                     std::to_string(a.max_deg) + " --dim " + std::to_string(a.dim) +
                     " --samples " + std::to_string(a.samples) + " --seed " +
                     std::to_string(a.seed) + " --max-order " +
                     std::to_string(g.max_order) + " --format " + g.format;
  ordered_json rows = ordered_json::array();
  doc.csv_header = {"suite", "attempted", "passed", "ok", "counterexample"};
  std::string latex_rows;
  for (const VerificationReport& r : reports) {
    all_passed = all_passed && r.ok();
    ordered_json row;
    row["suite"] = r.suite;
    row["attempted"] = r.attempted;
    row["passed"] = r.passed;
    row["ok"] = r.ok();
    if (!r.counterexample.empty()) row["counterexample"] = r.counterexample;
    if (!r.rng.empty()) row["rng"] = r.rng;
    if (!g.no_timestamp) {
      row["wall_ms"] = r.wall_ms;
      if (r.partition_path_ms > 0 || r.gf_path_ms > 0) {
        row["partition_path_ms"] = r.partition_path_ms;
        row["gf_path_ms"] = r.gf_path_ms;
      }
    }
    rows.push_back(std::move(row));
    doc.csv_rows.push_back({r.suite, std::to_string(r.attempted),
                            std::to_string(r.passed), r.ok() ? "true" : "false",
                            r.counterexample});
    latex_rows += r.suite + " & " + std::to_string(r.attempted) + " & " +
                  std::to_string(r.passed) + " & " +
                  (r.ok() ? "pass" : "FAIL") + " \\\\\n";
  }
  doc.payload = ordered_json{{"all_passed", all_passed}, {"reports", std::move(rows)}};
  doc.latex_body =
      "\\begin{tabular}{lrrl}\nsuite & attempted & passed & result \\\\\n\\hline\n" +
      latex_rows + "\\end{tabular}\n";
  return doc;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  GlobalOptions g;

  CLI::App app{"exact multivariate Bernoulli/Euler numbers and polynomials"};
  app.name("umbral");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "latex"}))
      ->capture_default_str();
  app.add_option("--max-order", g.max_order, "series truncation order")
      ->capture_default_str();
  app.add_flag("--no-timestamp", g.no_timestamp,
               "omit timestamp and timing fields for reproducible output");

  std::string family = "bernoulli";
  unsigned dim = 1;
  unsigned max_deg = 4;
  std::string t_text = "symbolic";
  std::string v_text;
  std::string x_text;

  CLI::App* numbers = app.add_subcommand("numbers", "table of t-th-order numbers");
  numbers->add_option("--family", family, "bernoulli|euler")->required();
  numbers->add_option("--dim", dim, "tuple dimension (1..4)")->capture_default_str();
  numbers->add_option("--max-deg", max_deg, "list all v with |v| <= this")
      ->capture_default_str();
  numbers->add_option("--t", t_text, "rational order p/q, or 'symbolic'")
      ->capture_default_str();

  CLI::App* poly = app.add_subcommand("poly", "one polynomial, sparse monomial list");
  poly->add_option("--family", family, "bernoulli|euler")->required();
  poly->add_option("--v", v_text, "multi-index, e.g. 2,1,0")->required();
  poly->add_option("--t", t_text, "rational order p/q, or 'symbolic'")
      ->capture_default_str();

  CLI::App* eval = app.add_subcommand("eval", "evaluate one polynomial exactly");
  eval->add_option("--family", family, "bernoulli|euler")->required();
  eval->add_option("--v", v_text, "multi-index, e.g. 2,1,0")->required();
  eval->add_option("--x", x_text, "rational tuple, e.g. 1/2,3")->required();
  eval->add_option("--t", t_text, "rational order p/q")->required();

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", va.suite, "all|exact|montecarlo|oracle")
      ->capture_default_str();
  verify->add_option("--max-deg", va.max_deg, "maximum |v|")->capture_default_str();
  verify->add_option("--dim", va.dim, "maximum dimension")->capture_default_str();
  verify->add_option("--samples", va.samples, "Monte Carlo sample count")
      ->capture_default_str();
  verify->add_option("--seed", va.seed, "Monte Carlo seed")->capture_default_str();
  verify->add_option("--confidence", va.confidence, "sigma multiplier")
      ->capture_default_str();
  verify->add_option("--shards", va.shards, "Monte Carlo shard count")
      ->capture_default_str();

  RunResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.output = app.help();
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.diagnostics = std::string(e.what()) + "\n";
    result.exit_code = 1;
    return result;
  }

  try {
    Document doc;
    bool all_passed = true;
    if (numbers->parsed()) {
      doc = cmd_numbers(g, family, dim, max_deg, t_text);
    } else if (poly->parsed()) {
      doc = cmd_poly(g, family, parse_multi_index(v_text), t_text);
    } else if (eval->parsed()) {
      doc = cmd_eval(g, family, parse_multi_index(v_text), parse_rat_tuple(x_text),
                     parse_rat(t_text), t_text, x_text);
    } else if (verify->parsed()) {
      doc = cmd_verify(g, va, all_passed);
      result.exit_code = all_passed ? 0 : 2;
    }
    result.output = render(doc, g);
  } catch (const ArgumentError& e) {
    result.diagnostics = std::string(e.what()) + "\n";
    result.exit_code = 1;
  } catch (const std::exception& e) {
    result.diagnostics = std::string(e.what()) + "\n";
    result.exit_code = 1;
  }
  return result;
}

}  // namespace umbral::cli
