#include "eqs/cli.hpp"

#include "eqs/newton.hpp"
#include "eqs/poly_io.hpp"
#include "eqs/verify.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <unistd.h>

namespace eqs {

using nlohmann::json;

namespace {

// Raised for bad input discovered after flag parsing; reported like a parse error.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "text";
  std::string out_file;
  bool no_timing = false;

  std::string type;
  std::string u, v, w;
  std::string poly;

  std::string space;
  int n = 0;
  std::string lambda, mu, nu;

  int rank = 0;
  std::string source, target, node_map;

  std::string property;
  bool exhaustive = false;
  std::size_t samples = 0;
  int max_length = -1;
  int stratum = -1;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  bool simple_roots = false;
  bool no_fixtures = false;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("EQS_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

TypeLabel parse_type(const std::string& text) {
  if (text.empty()) throw UsageError("--type is required");
  try {
    return TypeLabel::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ElementId parse_in(const WeylGroup& g, const std::string& text, const char* flag) {
  try {
    return parse_element(g, text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

StrictPartition parse_partition(const std::string& text, int n, const char* flag) {
  try {
    StrictPartition p = StrictPartition::parse(text);
    p.validate(n);
    return p;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::string points_text(const std::vector<LatticePoint>& pts) {
  std::string s;
  for (const auto& p : pts) {
    if (!s.empty()) s += " ";
    s += "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    s += ")";
  }
  return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct Output {
  std::string body;
  int code = kExitPass;
};

Output emit_json(const json& j, int code = kExitPass) { return {j.dump(2) + "\n", code}; }

Output report_output(const Options& o, const ScanReport& r) {
  const int code = r.pass() ? kExitPass : kExitFinding;
  if (o.format == "json") return emit_json(r.to_json(!o.no_timing), code);
  std::ostringstream s;
  s << "property: " << r.property << "\n";
  s << "cases: " << r.cases << "\n";
  s << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) s << "  " << c.dump() << "\n";
  for (const auto& f : r.fixtures) {
    s << "fixture " << f.name << ": " << (f.reproduced ? "reproduced" : "NOT reproduced") << "\n";
    for (const auto& [k, val] : f.detail.items()) s << "  " << k << " = " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
  }
  s << "verdict: " << (r.pass() ? "pass" : "fail") << "\n";
  return {s.str(), code};
}

ScanConfig scan_config(const Options& o) {
  ScanConfig cfg;
  cfg.max_length = o.max_length;
  cfg.samples = o.exhaustive ? 0 : o.samples;
  cfg.stratum_length = o.stratum;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.simple_roots_only = o.simple_roots;
  cfg.fixtures = !o.no_fixtures;
  return cfg;
}

json bc_json(const BcReport& r) {
  return json{{"lhs", poly_to_json(r.identity.lhs)},
              {"rhs", poly_to_json(r.identity.rhs)},
              {"equal", r.identity.equal},
              {"exponent", r.identity.exponent},
              {"type_b", poly_to_json(r.type_b)},
              {"type_c", poly_to_json(r.type_c)},
              {"integral", r.integral},
              {"support_equal", r.support_equal},
              {"nonvanishing_equal", r.nonvanishing_equal}};
}

Output bc_output(const Options& o, const BcReport& r) {
  const int code = r.ok() ? kExitPass : kExitFinding;
  if (o.format == "json") return emit_json(bc_json(r), code);
  std::ostringstream s;
  s << "C(X) = " << format_poly(r.type_b, 'b') << "\n";
  s << "C(Y) = " << format_poly(r.type_c, 'c') << "\n";
  s << "exponent: " << r.identity.exponent << "\n";
  s << "lhs = " << format_poly(r.identity.lhs, 'b') << "\n";
  s << "rhs = " << format_poly(r.identity.rhs, 'b') << "\n";
  s << "equal: " << bool_text(r.identity.equal) << "\n";
  s << "integral: " << bool_text(r.integral) << "\n";
  s << "support equal: " << bool_text(r.support_equal) << "\n";
  return {s.str(), code};
}

Output identity_output(const Options& o, const IdentityReport& r, char glyph) {
  const int code = r.equal ? kExitPass : kExitFinding;
  if (o.format == "json") {
    return emit_json(json{{"lhs", poly_to_json(r.lhs)}, {"rhs", poly_to_json(r.rhs)}, {"equal", r.equal},
                          {"exponent", r.exponent}},
                     code);
  }
  std::ostringstream s;
  s << "lhs = " << format_poly(r.lhs, glyph) << "\n";
  s << "rhs = " << format_poly(r.rhs, glyph) << "\n";
  s << "equal: " << bool_text(r.equal) << "\n";
  return {s.str(), code};
}

Output poly_output(const Options& o, const Poly& f, char glyph, json extra, int code = kExitPass) {
  if (o.format == "json") {
    extra["value"] = poly_to_json(f);
    extra["text"] = format_poly(f, glyph);
    return emit_json(extra, code);
  }
  return {format_poly(f, glyph) + "\n", code};
}

Output cmd_restrict(const Options& o) {
  const TypeLabel label = parse_type(o.type);
  const Engine& e = shared_engine(label);
  const ElementId w = parse_in(*e.group, o.w, "--w");
  const ElementId v = parse_in(*e.group, o.v, "--v");
  return poly_output(o, e.table->restrict(w, v), e.glyph(),
                     json{{"type", label.to_string()}, {"w", format_element(*e.group, w)}, {"v", format_element(*e.group, v)}});
}

Output cmd_coeff(const Options& o) {
  const TypeLabel label = parse_type(o.type);
  const Engine& e = shared_engine(label);
  const ElementId u = parse_in(*e.group, o.u, "--u");
  const ElementId v = parse_in(*e.group, o.v, "--v");
  const ElementId w = parse_in(*e.group, o.w, "--w");
  const CoeffResult r = e.solver->coeff(u, v, w);
  const WeylGroup& g = *e.group;
  json extra{{"type", label.to_string()},
             {"u", format_element(g, u)},
             {"v", format_element(g, v)},
             {"w", format_element(g, w)},
             {"meta", {{"degree_ok", r.meta.degree_ok}, {"positive", r.meta.positive}, {"solve_index", r.meta.solve_index}}}};
  return poly_output(o, r.value, e.glyph(), std::move(extra),
                     r.meta.positive && r.meta.degree_ok ? kExitPass : kExitFinding);
}

Output cmd_grassmann(const Options& o) {
  Grassmannian space;
  try {
    space = parse_grassmannian(o.space);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--space: ") + e.what());
  }
  if (o.n < 1 || o.n > kMaxVariables) throw UsageError("--n must be between 1 and 8");
  const StrictPartition lam = parse_partition(o.lambda, o.n, "--lambda");
  const StrictPartition mu = parse_partition(o.mu, o.n, "--mu");
  const StrictPartition nu = parse_partition(o.nu, o.n, "--nu");
  const Engine& e = shared_engine(TypeLabel(space == Grassmannian::OG ? Family::B : Family::C, o.n));
  const CoeffResult r = grassmann_coeff(e, lam, mu, nu);
  return poly_output(o, r.value, e.glyph(),
                     json{{"space", o.space}, {"n", o.n}, {"lambda", lam.parts}, {"mu", mu.parts}, {"nu", nu.parts}});
}

Output cmd_verify_bc(const Options& o) {
  if (o.rank < 1 || o.rank > kMaxVariables) throw UsageError("--rank must be between 1 and 8");
  const bool single = !o.u.empty() || !o.v.empty() || !o.w.empty();
  if (single) {
    const Engine& b = shared_engine(TypeLabel(Family::B, o.rank));
    const Engine& c = shared_engine(TypeLabel(Family::C, o.rank));
    SignedPermutation u, v, w;
    try {
      u = o.u.empty() ? identity_one_line(b.label()) : parse_one_line(o.u);
      v = o.v.empty() ? identity_one_line(b.label()) : parse_one_line(o.v);
      w = o.w.empty() ? identity_one_line(b.label()) : parse_one_line(o.w);
      for (const auto* x : {&u, &v, &w}) validate_one_line(b.label(), *x);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return bc_output(o, bc_correspondence(b, c, u, v, w));
  }
  if (!o.exhaustive && o.samples == 0) throw UsageError("give --exhaustive, --samples N, or a triple --u --v --w");
  ScanConfig cfg = scan_config(o);
  cfg.property = "bc";
  cfg.type = "B" + std::to_string(o.rank);
  return report_output(o, run_scan(cfg));
}

Output cmd_verify_oglg(const Options& o, bool single) {
  if (o.n < 1 || o.n > kMaxVariables) throw UsageError("--n must be between 1 and 8");
  if (single) {
    const StrictPartition lam = parse_partition(o.lambda, o.n, "--lambda");
    const StrictPartition mu = parse_partition(o.mu, o.n, "--mu");
    const StrictPartition nu = parse_partition(o.nu, o.n, "--nu");
    return bc_output(o, oglg_correspondence(shared_engine(TypeLabel(Family::B, o.n)),
                                            shared_engine(TypeLabel(Family::C, o.n)), lam, mu, nu));
  }
  ScanConfig cfg = scan_config(o);
  cfg.property = "oglg";
  cfg.type = "B" + std::to_string(o.n);
  return report_output(o, run_scan(cfg));
}

Output cmd_verify_transport(const Options& o) {
  const TypeLabel src = parse_type(o.source);
  const TypeLabel dst = parse_type(o.target);
  std::vector<int> map;
  try {
    map = DynkinInclusion::parse_node_map(o.node_map);
    if (!DynkinInclusion::is_valid(src, dst, map)) throw std::invalid_argument("node map is not a Dynkin inclusion");
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--map: ") + e.what());
  }
  const DynkinInclusion inc(src, dst, map);
  const bool single = !o.u.empty() || !o.v.empty() || !o.w.empty();
  if (single) {
    const Engine& es = shared_engine(src);
    const Engine& et = shared_engine(dst);
    const ElementId u = parse_in(*es.group, o.u, "--u");
    const ElementId v = parse_in(*es.group, o.v, "--v");
    const ElementId w = parse_in(*es.group, o.w, "--w");
    return identity_output(o, transport_coeff_check(inc, es, et, u, v, w), et.glyph());
  }
  if (!o.exhaustive && o.samples == 0) throw UsageError("give --exhaustive, --samples N, or a triple --u --v --w");
  ScanConfig cfg = scan_config(o);
  cfg.property = "transport";
  cfg.type = src.to_string();
  cfg.target = dst.to_string();
  cfg.node_map = o.node_map;
  return report_output(o, run_scan(cfg));
}

Output cmd_scan(const Options& o) {
  const auto& ids = scan_properties();
  if (std::find(ids.begin(), ids.end(), o.property) == ids.end()) {
    std::string known;
    for (const auto& id : ids) known += (known.empty() ? "" : ", ") + id;
    throw UsageError("unknown --property '" + o.property + "' (known: " + known + ")");
  }
  ScanConfig cfg = scan_config(o);
  cfg.property = o.property;
  if (o.property != "folding") cfg.type = parse_type(o.type).to_string();
  if (o.property == "transport") {
    cfg.target = parse_type(o.target).to_string();
    cfg.node_map = o.node_map;
    try {
      if (!DynkinInclusion::is_valid(TypeLabel::parse(cfg.type), TypeLabel::parse(cfg.target),
                                     DynkinInclusion::parse_node_map(cfg.node_map))) {
        throw std::invalid_argument("node map is not a Dynkin inclusion");
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--map: ") + e.what());
    }
  }
  return report_output(o, run_scan(cfg));
}

// The polynomial named by --poly, or by --type with --w --v (a restriction) or
// --u --v --w (a coefficient).
std::pair<Poly, char> poly_argument(const Options& o) {
  if (!o.poly.empty()) {
    char glyph = 'x';
    for (char ch : o.poly) {
      if (std::isalpha(static_cast<unsigned char>(ch))) {
        glyph = ch;
        break;
      }
    }
    try {
      return {parse_poly(o.poly), glyph};
    } catch (const std::exception& e) {
      throw UsageError(std::string("--poly: ") + e.what());
    }
  }
  const Engine& e = shared_engine(parse_type(o.type));
  if (!o.u.empty()) {
    return {e.solver->value(parse_in(*e.group, o.u, "--u"), parse_in(*e.group, o.v, "--v"),
                            parse_in(*e.group, o.w, "--w")),
            e.glyph()};
  }
  return {e.table->restrict(parse_in(*e.group, o.w, "--w"), parse_in(*e.group, o.v, "--v")), e.glyph()};
}

Output cmd_newton(const Options& o) {
  const auto [f, glyph] = poly_argument(o);
  if (f.is_zero()) throw UsageError("the zero polynomial has no Newton polytope");
  const NewtonPolytope np = newton_polytope(f);
  if (o.format == "json") return emit_json(json{{"poly", format_poly(f, glyph)}, {"vertices", np.vertices}, {"support", np.support}});
  return {"poly: " + format_poly(f, glyph) + "\nvertices: " + points_text(np.vertices) + "\nsupport: " +
              points_text(np.support) + "\n",
          kExitPass};
}

Output cmd_snp(const Options& o) {
  const auto [f, glyph] = poly_argument(o);
  const SnpResult r = snp_test(f);
  const int code = r.saturated ? kExitPass : kExitFinding;
  if (o.format == "json") {
    json j{{"poly", format_poly(f, glyph)}, {"saturated", r.saturated}, {"witness", nullptr}};
    if (r.witness) j["witness"] = *r.witness;
    return emit_json(j, code);
  }
  std::string s = "poly: " + format_poly(f, glyph) + "\nsaturated: " + bool_text(r.saturated) + "\n";
  if (r.witness) s += "witness: " + points_text({*r.witness}) + "\n";
  return {s, code};
}

Output cmd_info(const Options& o) {
  const TypeLabel label = parse_type(o.type);
  const Engine& e = shared_engine(label);
  const RootSystem& rs = e.root_system();
  const IntMatrix& a = rs.cartan();
  json bonds = json::array();
  std::ostringstream bond_text;
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = i + 1; j < rs.rank(); ++j) {
      if (a(i, j) == 0) continue;
      const int mult = a(i, j) * a(j, i);
      json b{{"nodes", {i + 1, j + 1}}, {"multiplicity", mult}};
      bond_text << "  " << i + 1 << " - " << j + 1;
      if (mult > 1) {
        const int short_node = a(i, j) < -1 ? i + 1 : j + 1;
        b["short"] = short_node;
        bond_text << " (" << (mult == 2 ? "double" : "triple") << ", node " << short_node << " short)";
      }
      bond_text << "\n";
      bonds.push_back(b);
    }
  }
  if (o.format == "json") {
    json cartan = json::array();
    for (int i = 0; i < rs.rank(); ++i) {
      json row = json::array();
      for (int j = 0; j < rs.rank(); ++j) row.push_back(a(i, j));
      cartan.push_back(row);
    }
    return emit_json(json{{"type", label.to_string()},
                          {"rank", rs.rank()},
                          {"order", e.group->size()},
                          {"positive_roots", rs.positive_roots().size()},
                          {"cartan", cartan},
                          {"bonds", bonds}});
  }
  std::ostringstream s;
  s << "type: " << label.to_string() << "\n";
  s << "rank: " << rs.rank() << "\n";
  s << "|W| = " << e.group->size() << "\n";
  s << "|Phi+| = " << rs.positive_roots().size() << "\n";
  s << "cartan:\n";
  for (int i = 0; i < rs.rank(); ++i) {
    s << " ";
    for (int j = 0; j < rs.rank(); ++j) s << std::setw(3) << a(i, j);
    s << "\n";
  }
  s << "bonds:\n" << bond_text.str();
  return {s.str(), kExitPass};
}

void write_atomically(const std::string& path, const std::string& body) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << body;
    if (!f.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.jobs = default_jobs();

  CLI::App app{"Equivariant Schubert restrictions and structure coefficients", "eqs"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out_file, "Write output to FILE (atomically) instead of stdout");
  };
  auto add_scan_flags = [&o](CLI::App* cmd) {
    cmd->add_flag("--exhaustive", o.exhaustive, "Check every case in range");
    cmd->add_option("--samples", o.samples, "Check N seed-pinned random cases instead");
    cmd->add_option("--max-length", o.max_length, "Only elements of length <= L");
    cmd->add_option("--seed", o.seed, "Seed for sampled scans");
    cmd->add_option("--jobs", o.jobs, "Worker threads (default from EQS_JOBS, else 1)")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-timing", o.no_timing, "Omit elapsed_ms from JSON reports");
    cmd->add_flag("--no-fixtures", o.no_fixtures, "Skip the pinned reproductions");
  };

  auto* restrict_cmd = app.add_subcommand("restrict", "Restriction xi_w|_v");
  restrict_cmd->add_option("--type", o.type, "Type label, e.g. B3")->required();
  restrict_cmd->add_option("--w", o.w, "Element w (one-line or word)")->required();
  restrict_cmd->add_option("--v", o.v, "Element v (one-line or word)")->required();
  add_format(restrict_cmd);

  auto* coeff_cmd = app.add_subcommand("coeff", "Structure coefficient C_{u,v}^w");
  coeff_cmd->add_option("--type", o.type, "Type label")->required();
  coeff_cmd->add_option("--u", o.u, "Element u")->required();
  coeff_cmd->add_option("--v", o.v, "Element v")->required();
  coeff_cmd->add_option("--w", o.w, "Element w")->required();
  add_format(coeff_cmd);

  auto* grass_cmd = app.add_subcommand("grassmann", "Coefficient for strict partitions on OG or LG");
  grass_cmd->add_option("--space", o.space, "OG or LG")->required();
  grass_cmd->add_option("--n", o.n, "Ambient n")->required();
  grass_cmd->add_option("--lambda", o.lambda, "Strict partition, e.g. 3,2");
  grass_cmd->add_option("--mu", o.mu, "Strict partition");
  grass_cmd->add_option("--nu", o.nu, "Strict partition");
  add_format(grass_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a correspondence");
  verify_cmd->require_subcommand(1);
  auto* bc_cmd = verify_cmd->add_subcommand("bc", "Type B against type C");
  bc_cmd->add_option("--rank", o.rank, "Rank n")->required();
  bc_cmd->add_option("--u", o.u, "One-line u (single triple mode)");
  bc_cmd->add_option("--v", o.v, "One-line v");
  bc_cmd->add_option("--w", o.w, "One-line w");
  bc_cmd->add_option("--stratum", o.stratum, "Also check every triple with lengths <= L");
  add_scan_flags(bc_cmd);
  add_format(bc_cmd);
  auto* oglg_cmd = verify_cmd->add_subcommand("oglg", "OG against LG");
  oglg_cmd->add_option("--n", o.n, "Ambient n")->required();
  auto* lam_opt = oglg_cmd->add_option("--lambda", o.lambda, "Strict partition (single triple mode)");
  auto* mu_opt = oglg_cmd->add_option("--mu", o.mu, "Strict partition");
  auto* nu_opt = oglg_cmd->add_option("--nu", o.nu, "Strict partition");
  add_scan_flags(oglg_cmd);
  add_format(oglg_cmd);
  auto* transport_cmd = verify_cmd->add_subcommand("transport", "Dynkin inclusion transport");
  transport_cmd->add_option("--source", o.source, "Source type")->required();
  transport_cmd->add_option("--target", o.target, "Target type")->required();
  transport_cmd->add_option("--map", o.node_map, "Node map, e.g. 1:2,2:3,3:4")->required();
  transport_cmd->add_option("--u", o.u, "Source element u (single triple mode)");
  transport_cmd->add_option("--v", o.v, "Source element v");
  transport_cmd->add_option("--w", o.w, "Source element w");
  add_scan_flags(transport_cmd);
  add_format(transport_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Run a verification scan");
  scan_cmd->add_option("--property", o.property, "Property id")->required();
  scan_cmd->add_option("--type", o.type, "Type label");
  scan_cmd->add_option("--target", o.target, "Target type (transport)");
  scan_cmd->add_option("--map", o.node_map, "Node map (transport)");
  scan_cmd->add_option("--stratum", o.stratum, "bc: also every triple with lengths <= L");
  scan_cmd->add_flag("--simple-roots", o.simple_roots, "arabia: simple roots only");
  add_scan_flags(scan_cmd);
  add_format(scan_cmd);

  auto* newton_cmd = app.add_subcommand("newton", "Newton polytope vertices");
  auto* snp_cmd = app.add_subcommand("snp", "Saturated Newton polytope test");
  for (auto* cmd : {newton_cmd, snp_cmd}) {
    cmd->add_option("--poly", o.poly, "Polynomial, e.g. \"b1^2 + b2^2\"");
    cmd->add_option("--type", o.type, "Type label (with --w --v, or --u --v --w)");
    cmd->add_option("--u", o.u, "Element u");
    cmd->add_option("--v", o.v, "Element v");
    cmd->add_option("--w", o.w, "Element w");
    add_format(cmd);
  }

  auto* info_cmd = app.add_subcommand("info", "Describe a root system");
  info_cmd->add_option("--type", o.type, "Type label")->required();
  add_format(info_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) {
      failing = sub;
      for (auto* inner : sub->get_subcommands()) failing = inner;
    }
    err << failing->help();
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  if (active == verify_cmd) active = verify_cmd->get_subcommands().front();
  try {
    if ((active == newton_cmd || active == snp_cmd) && o.poly.empty() && o.type.empty()) {
      throw UsageError("give --poly, or --type with elements");
    }
    Output result;
    if (active == restrict_cmd) result = cmd_restrict(o);
    else if (active == coeff_cmd) result = cmd_coeff(o);
    else if (active == grass_cmd) result = cmd_grassmann(o);
    else if (active == bc_cmd) result = cmd_verify_bc(o);
    else if (active == oglg_cmd) result = cmd_verify_oglg(o, lam_opt->count() + mu_opt->count() + nu_opt->count() > 0);
    else if (active == transport_cmd) result = cmd_verify_transport(o);
    else if (active == scan_cmd) result = cmd_scan(o);
    else if (active == newton_cmd) result = cmd_newton(o);
    else if (active == snp_cmd) result = cmd_snp(o);
    else result = cmd_info(o);

    if (o.out_file.empty()) {
      out << result.body;
    } else {
      write_atomically(o.out_file, result.body);
    }
    return result.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kExitUsage;
  } catch (const EnumerationBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace eqs
