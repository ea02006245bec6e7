#include "srball/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "srball/complex_io.hpp"
#include "srball/report.hpp"

namespace srball {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInapplicable = 3;

struct UsageError : Error {
  using Error::Error;
};

/// An error raised inside a named pipeline stage.
struct StageError : Error {
  StageError(const std::string& stage, const std::string& what) : Error(stage + ": " + what) {}
};

template <class Fn>
auto stage(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError&) {
    throw;
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

struct RunConfig {
  std::string command;
  std::vector<std::string> params;
  std::string file;
  int field = 0;
  int max_vertices = 16;
  std::size_t max_facets = 200000;
  std::string format = "json";
  bool format_given = false;
  std::uint64_t seed = 1;
  std::string out_path;
};

using Params = std::map<std::string, std::string>;

Params parse_params(const std::vector<std::string>& tokens) {
  Params p;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + tok + "'");
    if (!p.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second)
      throw UsageError("parameter '" + tok.substr(0, eq) + "' given twice");
  }
  return p;
}

int int_param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw UsageError("missing parameter " + key + "=<int>");
  try {
    std::size_t pos = 0;
    const int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("parameter " + key + " must be an integer");
  }
}

std::vector<int> int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(what);
    } catch (const std::logic_error&) {
      throw UsageError("malformed " + what + ": '" + s + "'");
    }
  }
  return out;
}

void check_known(const Params& p, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : p)
    if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
      throw UsageError("unknown parameter '" + k + "'");
}

MinorSpec minor_spec(const Params& p) {
  check_known(p, {"m", "n", "r", "sigma"});
  const int m = int_param(p, "m");
  const int n = int_param(p, "n");
  MinorSpec spec;
  if (p.count("sigma")) {
    if (p.count("r")) throw UsageError("give either r= or sigma=, not both");
    const std::string s = p.at("sigma");
    const auto bar = s.find('|');
    if (bar == std::string::npos) throw UsageError("sigma must look like a1,..,ar|b1,..,br");
    spec = MinorSpec{m, n, int_list(s.substr(0, bar), "sigma"), int_list(s.substr(bar + 1), "sigma")};
  } else {
    const int r = int_param(p, "r");
    if (r < 1 || r >= m) throw UsageError("need 1 <= r < m");
    spec = MinorSpec::leading(m, n, r);
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (spec.r() >= m) throw UsageError("sigma must have fewer than m rows");
  return spec;
}

std::pair<int, int> polar_shape(const Params& p) {
  check_known(p, {"n", "t"});
  const int n = int_param(p, "n");
  const int t = int_param(p, "t");
  if (n < 1 || t < 1) throw UsageError("need n >= 1 and t >= 1");
  if (n * t > kMaxVertices) throw UsageError("n * t exceeds 128 vertices");
  return {n, t};
}

/// Facet order of the generated complex, as indices of complex.facets().
std::vector<std::size_t> complex_order(const SimplicialComplex& complex, const std::vector<PathFamily>& facets,
                                       const std::vector<std::size_t>& order) {
  std::vector<std::size_t> out;
  for (std::size_t k : order) out.push_back(*complex.facet_index(facets[k].face));
  return out;
}

std::string emit_complex(const SimplicialComplex& complex, const std::vector<std::size_t>& order,
                         const std::vector<std::string>& comments) {
  std::ostringstream os;
  write_complex(os, complex, &order, comments);
  return os.str();
}

Json complex_json(const SimplicialComplex& complex, const std::vector<std::size_t>& order,
                  const std::string& instance) {
  return {{"instance", instance},
          {"n", complex.vertex_count()},
          {"labels", complex.universe().labels},
          {"facets", faces_json({complex.facets().begin(), complex.facets().end()})},
          {"order", order}};
}

struct Outcome {
  std::string text;
  int code = kExitPass;
};

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kExitPass;
    case Verdict::Fail: return kExitFail;
    case Verdict::Inapplicable: return kExitInapplicable;
  }
  return kExitFail;
}

std::string render(const Json& j, const RunConfig& cfg) {
  if (cfg.format == "text") return text_report(j);
  return j.dump(2) + "\n";
}

std::string render_check(const Json& j, const ConjectureReport& rep, const std::string& instance,
                         const RunConfig& cfg) {
  if (cfg.format == "csv") return csv_header() + "\n" + csv_row(rep, instance) + "\n";
  return render(j, cfg);
}

CheckOptions check_options(const RunConfig& cfg) {
  CheckOptions o;
  o.field = cfg.field == 0 ? FieldSpec::rationals() : FieldSpec::prime(cfg.field);
  o.hochster.max_vertices = cfg.max_vertices;
  return o;
}

Outcome cmd_generate(const RunConfig& cfg) {
  if (cfg.params.empty()) throw UsageError("generate needs a kind: minor or polar");
  const std::string kind = cfg.params.front();
  const Params p = parse_params({cfg.params.begin() + 1, cfg.params.end()});
  SimplicialComplex complex;
  std::vector<std::size_t> order;
  std::string instance;
  if (kind == "minor") {
    const MinorSpec spec = minor_spec(p);
    instance = "minor " + spec.describe();
    const auto facets = stage("enumerate", [&] { return enumerate_facets(spec, {cfg.max_facets}); });
    complex = build_path_complex(spec.grid(), facets);
    order = complex_order(complex, facets, stage("shelling order", [&] { return shelling_order(facets); }));
  } else if (kind == "polar") {
    const auto [n, t] = polar_shape(p);
    instance = "polar n=" + std::to_string(n) + " t=" + std::to_string(t);
    const PolarComplex pc = stage("polarize", [&] { return power_ideal_complex(n, t); });
    complex = pc.complex;
    order = pc.order;
  } else {
    throw UsageError("unknown kind '" + kind + "' (expected minor or polar)");
  }
  if (cfg.format_given && cfg.format == "json") return {complex_json(complex, order, instance).dump(2) + "\n"};
  return {emit_complex(complex, order, {instance})};
}

Outcome cmd_check(const RunConfig& cfg) {
  const CheckOptions options = check_options(cfg);
  if (!cfg.file.empty()) {
    if (!cfg.params.empty()) throw UsageError("give either --file or generation parameters");
    const ComplexFile file = stage("read", [&] { return read_complex_file(cfg.file); });
    const std::vector<std::size_t> order = file.order.value_or(file.listing);
    const ConjectureReport rep = stage("check", [&] { return check_conjecture(file.complex, order, options); });
    const std::string instance = "file " + cfg.file;
    Json j = to_json(rep, instance);
    return {render_check(j, rep, instance, cfg), verdict_code(rep.verdict)};
  }
  if (cfg.params.empty()) throw UsageError("check needs --file or a kind: minor or polar");
  const std::string kind = cfg.params.front();
  const Params p = parse_params({cfg.params.begin() + 1, cfg.params.end()});
  if (kind == "minor") {
    const MinorSpec spec = minor_spec(p);
    const std::string instance = "minor " + spec.describe();
    const auto facets = stage("enumerate", [&] { return enumerate_facets(spec, {cfg.max_facets}); });
    const SimplicialComplex complex = build_path_complex(spec.grid(), facets);
    const auto order =
        complex_order(complex, facets, stage("shelling order", [&] { return shelling_order(facets); }));
    ConjectureReport rep = stage("check", [&] { return check_conjecture(complex, order, options); });
    const bool corners_ok = h_via_corners(facets, complex.max_facet_size()) == rep.h;
    if (!rep.ball_pass) {
      rep.verdict = Verdict::Fail;
      rep.reasons.push_back("generated family failed ball certification");
    }
    if (!corners_ok) {
      rep.verdict = Verdict::Fail;
      rep.reasons.push_back("corner-count h-vector disagrees with the face count");
    }
    const auto random_order = complex_order(complex, facets, random_linear_extension(facets, cfg.seed));
    const ShellingCertificate random_cert = verify_shelling(complex, random_order, cfg.seed);
    if (!random_cert.pass) {
      rep.verdict = Verdict::Fail;
      rep.reasons.push_back("a random linear extension of the facet order is not a shelling");
    }
    Json j = to_json(rep, instance);
    j["h_via_corners_matches"] = corners_ok;
    j["random_extension"] = to_json(random_cert);
    return {render_check(j, rep, instance, cfg), verdict_code(rep.verdict)};
  }
  if (kind == "polar") {
    const auto [n, t] = polar_shape(p);
    const std::string instance = "polar n=" + std::to_string(n) + " t=" + std::to_string(t);
    const PolarComplex pc = stage("polarize", [&] { return power_ideal_complex(n, t); });
    const PolarCertificate cert = stage("certify", [&] { return certify_polar(pc); });
    ConjectureReport rep = stage("check", [&] { return check_conjecture(pc.complex, pc.order, options); });
    const bool cert_ok = cert.theta_injective && cert.facet_count_ok && cert.nonfaces_match && cert.ball.pass &&
                         cert.glued_ridges_are_neighbors && cert.free_ridge_found;
    if (!cert_ok) {
      rep.verdict = Verdict::Fail;
      rep.reasons.push_back("generated family failed its certificate");
    }
    Json j = to_json(rep, instance);
    j["certificate"] = to_json(cert);
    if (pc.complex.used_vertices().size() <= cfg.max_vertices) {
      const auto table = hochster_betti_table(pc.complex, options.field, options.hochster);
      j["linear_resolution"] = has_linear_resolution(table, t).linear;
    }
    return {render_check(j, rep, instance, cfg), verdict_code(rep.verdict)};
  }
  throw UsageError("unknown kind '" + kind + "' (expected minor or polar)");
}

Outcome cmd_dual(const RunConfig& cfg) {
  const Params p = parse_params(cfg.params);
  check_known(p, {"m", "n"});
  const int m = int_param(p, "m");
  const int n = int_param(p, "n");
  if (m < 1 || m > n) throw UsageError("need 1 <= m <= n");
  if (m * n > kMaxVertices) throw UsageError("grid has more than 128 points");
  const DualTheoremReport rep = stage("dual", [&] { return verify_dual_theorem(m, n); });
  Json j = to_json(rep);
  Json rows = Json::array();
  for (const auto& row : dual_matrix(m, n).display()) rows.push_back(row);
  j["dual_matrix"] = rows;
  return {render(j, cfg), rep.pass ? kExitPass : kExitFail};
}

Outcome cmd_corners(const RunConfig& cfg) {
  const Params p = parse_params(cfg.params);
  check_known(p, {"m", "n", "r"});
  const int m = int_param(p, "m");
  const int n = int_param(p, "n");
  const int r = int_param(p, "r");
  if (r < 1 || r >= m || m > n) throw UsageError("need 1 <= r < m <= n");
  const MinorSpec spec = MinorSpec::leading(m, n, r);
  spec.validate();
  const GridPoset grid = spec.grid();
  const auto facets = stage("enumerate", [&] { return enumerate_facets(spec, {cfg.max_facets}); });
  const auto spectrum = corner_spectrum(grid, facets);
  std::vector<int> expected;
  for (int t = r; t <= r * (m - r); ++t) expected.push_back(t);
  Json constructions = Json::array();
  bool built = true;
  for (int t : expected) {
    try {
      const PathFamily f = construct_nonflippable(m, n, r, t);
      Json c = Json::array();
      for (GridPoint q : corners(f)) c.push_back(to_json(q));
      constructions.push_back({{"t", t}, {"corners", c}});
    } catch (const Error& e) {
      built = false;
      constructions.push_back({{"t", t}, {"error", e.what()}});
    }
  }
  const auto gens = canonical_generators(grid, facets);
  int lo = std::numeric_limits<int>::max();
  int hi = 0;
  for (const auto& g : gens) {
    lo = std::min(lo, g.degree);
    hi = std::max(hi, g.degree);
  }
  const bool ok = spectrum == expected && built;
  Json j{{"m", m},
         {"n", n},
         {"r", r},
         {"facets", facets.size()},
         {"spectrum", spectrum},
         {"expected", expected},
         {"constructions", constructions},
         {"canonical_degree_min", lo},
         {"canonical_degree_max", hi},
         {"canonical_degree_range", {r * n, r * (n + m - r - 1)}},
         {"verdict", ok ? "PASS" : "FAIL"}};
  return {render(j, cfg), ok ? kExitPass : kExitFail};
}

Outcome cmd_cyclic(const RunConfig& cfg) {
  const Params p = parse_params(cfg.params);
  check_known(p, {"n", "d"});
  const int n = int_param(p, "n");
  const int d = int_param(p, "d");
  if (d < 2 || n <= d) throw UsageError("need n > d >= 2");
  const HVector h = cyclic_h(n, d);
  const Rational e(h.sum());
  const Rational product = cyclic_upper_product(n, d);
  const bool even = (d - 1) % 2 == 0;
  const bool ok = even ? e == product : e < product;
  Json j{{"n", n},
         {"d", d},
         {"h_star", to_json(h)},
         {"e", json_integer(h.sum())},
         {"max_shifts", cyclic_max_shifts(n, d)},
         {"product_bound", json_rational(product)},
         {"relation", e == product ? "equal" : e < product ? "less" : "greater"},
         {"expected", even ? "equal" : "less"},
         {"verdict", ok ? "PASS" : "FAIL"}};
  return {render(j, cfg), ok ? kExitPass : kExitFail};
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp);
    f << text;
    if (!f.flush()) throw Error("cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot move output into place: " + ec.message());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Simplicial balls, boundary spheres and multiplicity bounds", "srball"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", cfg.field, "0 for the rationals, or a prime");
  app.add_option("--max-vertices", cfg.max_vertices, "vertex cap for Betti tables")->check(CLI::PositiveNumber);
  app.add_option("--max-facets", cfg.max_facets, "facet cap for path enumeration")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--out", cfg.out_path, "write the report here instead of standard output");

  auto* gen = app.add_subcommand("generate", "write a complex file: generate minor|polar key=value...");
  gen->add_option("params", cfg.params)->required();
  auto* check = app.add_subcommand("check", "run the multiplicity pipeline: check minor|polar key=value... or --file");
  check->add_option("params", cfg.params);
  check->add_option("--file", cfg.file, "complex file to check");
  auto* dual = app.add_subcommand("dual", "dual-matrix theorem: dual m=<int> n=<int>");
  dual->add_option("params", cfg.params)->required();
  auto* corner = app.add_subcommand("corners", "corner spectrum: corners m=<int> n=<int> r=<int>");
  corner->add_option("params", cfg.params)->required();
  auto* cyc = app.add_subcommand("cyclic", "cyclic polytope comparators: cyclic n=<int> d=<int>");
  cyc->add_option("params", cfg.params)->required();

  std::vector<const char*> argv{"srball"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  cfg.format_given = app.count("--format") > 0;

  try {
    if (cfg.field != 0 && !is_prime(cfg.field)) throw UsageError("--field must be 0 or a prime");
    Outcome result;
    if (gen->parsed()) result = cmd_generate(cfg);
    else if (check->parsed()) result = cmd_check(cfg);
    else if (dual->parsed()) result = cmd_dual(cfg);
    else if (corner->parsed()) result = cmd_corners(cfg);
    else result = cmd_cyclic(cfg);
    if (cfg.out_path.empty()) out << result.text;
    else write_atomically(cfg.out_path, result.text);
    return result.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StageError& e) {
    err << "error in " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace srball
