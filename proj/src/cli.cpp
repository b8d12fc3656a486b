#include "seshadri/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "seshadri/certify.hpp"
#include "seshadri/error.hpp"
#include "seshadri/render.hpp"
#include "seshadri/serialize.hpp"

namespace seshadri::cli {

namespace {

constexpr const char* kBuiltinPrefix = "builtin:";

Dissection builtin_by_name(const std::string& name) {
  if (name == "eckl10") return builtin_dissection_eckl10();
  if (name == "halves") return toy_dissection_halves();
  throw Error(ErrorKind::Parse, "unknown built-in dissection '" + name + "' (known: eckl10, halves)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dissection load_dissection(const std::string& ref) {
  if (ref.rfind(kBuiltinPrefix, 0) == 0) return builtin_by_name(ref.substr(std::string(kBuiltinPrefix).size()));
  return dissection_from_json(parse_json_text(read_file(ref)));
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write '" + out_path + "'");
  f << text;
}

std::size_t max_cells_from_env() {
  const char* env = std::getenv("SESHADRI_MAX_CELLS");
  if (!env || !*env) return kDefaultMaxCells;
  const std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorKind::Parse, "SESHADRI_MAX_CELLS must be a nonnegative integer");
  }
  return static_cast<std::size_t>(std::stoull(s));
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeGuardrail: return kGuardrail;
    case ErrorKind::EmptyPolygonAtScale: return kRefuted;
    default: return kInvalidInput;
  }
}

struct Options {
  std::string name = "eckl10";
  std::string dissection;
  std::string out_path;
  std::string m_text;
  std::string oracle_mode = "modular";
  std::string mode = "exact";
  std::string system;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = kMersenne61;
  int size = 600;
  bool no_labels = false;
  std::size_t nagata_r = 0;
};

int cmd_builtin(const Options& o, std::ostream& out) {
  emit(to_json(builtin_by_name(o.name)).dump(2) + "\n", o.out_path, out);
  return kVerified;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto report = validate_dissection(load_dissection(o.dissection));
  out << to_json(report).dump(2) << "\n";
  for (const auto& v : report.violations) err << "violation: " << v << "\n";
  return report.valid() ? kVerified : kRefuted;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Rational m = Rational::parse(o.m_text);
  const auto report = verify_asymptotic(load_dissection(o.dissection), m);
  out << to_json(report).dump(2) << "\n";
  for (const auto& p : report.per_polygon) {
    err << "P" << p.id << ": " << (p.pass ? "pass" : "FAIL") << " (axis " << to_string(p.axis_used) << ", width "
        << p.width << ", sup admissible " << p.sup_admissible << ")\n";
  }
  return report.overall ? kVerified : kRefuted;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const Rational bound = certified_bound(load_dissection(o.dissection));
  if (o.nagata_r == 0) {
    out << bound << "\n";
    return kVerified;
  }
  json j = to_json(nagata_report(o.nagata_r, bound));
  j["supremum_not_attained"] = true;
  out << j.dump(2) << "\n";
  return kVerified;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const Dissection dis = load_dissection(o.dissection);
  CertificateOptions opts;
  opts.oracle = parse_oracle_mode(o.oracle_mode);
  opts.seed = o.seed;
  opts.prime = o.prime;
  opts.max_cells = max_cells_from_env();
  const FiniteCertificate cert = finite_certificate(dis, o.n, opts);
  emit(to_json(cert).dump(2) + "\n", o.out_path, out);
  const auto problems = check_certificate(dis, cert);
  for (const auto& p : problems) err << "certificate: " << p << "\n";
  err << "n = " << cert.n << ", min multiplicity " << cert.min_multiplicity() << ", min ratio " << cert.min_ratio
      << " (target " << cert.target << ")\n";
  return problems.empty() ? kVerified : kRefuted;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const SystemDescription sys = system_from_json(parse_json_text(read_file(o.system)));
  const std::uint64_t seed = o.seed;
  OracleVerdict verdict;
  if (o.mode == "exact") {
    const GenericPointSet pts = sys.points ? GenericPointSet::explicit_points(*sys.points)
                                           : GenericPointSet::seeded(sys.multiplicities.size(), seed);
    verdict = system_dimension_exact(sys.monomials, sys.multiplicities, pts, max_cells_from_env());
  } else if (o.mode == "modular") {
    verdict = sys.points ? system_dimension_modp(sys.monomials, sys.multiplicities,
                                                 GenericPointSet::explicit_points(*sys.points), o.prime)
                         : system_dimension_modp(sys.monomials, sys.multiplicities, seed, o.prime);
  } else {
    throw Error(ErrorKind::Parse, "oracle mode must be exact or modular");
  }
  out << to_json(verdict).dump(2) << "\n";
  return verdict.non_special ? kVerified : kRefuted;
}

int cmd_render(const Options& o, std::ostream& out) {
  RenderSpec spec;
  spec.output_path = o.out_path;
  spec.size = o.size;
  spec.labels = !o.no_labels;
  emit(render_svg(load_dissection(o.dissection), spec), o.out_path, out);
  return kVerified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of Seshadri constant lower bounds on the projective plane", "seshadri"};
  app.require_subcommand(1);
  Options o;
  bool seed_given = false;

  auto* builtin = app.add_subcommand("builtin", "Write a built-in dissection as JSON");
  builtin->add_option("--name", o.name, "eckl10 or halves")->default_val("eckl10");
  builtin->add_option("--out", o.out_path);

  auto* validate = app.add_subcommand("validate", "Check cut signs, containment and the area partition");
  validate->add_option("--dissection", o.dissection)->required();

  auto* verify = app.add_subcommand("verify", "Run the asymptotic criterion for one multiplicity ratio");
  verify->add_option("--dissection", o.dissection)->required();
  verify->add_option("--m", o.m_text, "rational p/q")->required();

  auto* bound = app.add_subcommand("bound", "Print the certified bound (a supremum)");
  bound->add_option("--dissection", o.dissection)->required();
  bound->add_option("--nagata", o.nagata_r, "also compare with 1/sqrt(r) for this r");

  auto* certify = app.add_subcommand("certify", "Build a finite-scale certificate");
  certify->add_option("--dissection", o.dissection)->required();
  certify->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  certify->add_option("--oracle", o.oracle_mode)->check(CLI::IsMember({"none", "modular", "exact"}));
  certify->add_option("--seed", o.seed);
  certify->add_option("--prime", o.prime);
  certify->add_option("--out", o.out_path);

  auto* oracle = app.add_subcommand("oracle", "Compute the dimension of a linear system");
  oracle->add_option("--system", o.system)->required();
  oracle->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "modular"}));
  oracle->add_option("--seed", o.seed)->each([&](const std::string&) { seed_given = true; });
  oracle->add_option("--prime", o.prime);

  auto* render = app.add_subcommand("render", "Draw the dissection as SVG");
  render->add_option("--dissection", o.dissection)->required();
  render->add_option("--out", o.out_path)->required();
  render->add_option("--size", o.size);
  render->add_flag("--no-labels", o.no_labels);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*builtin) return cmd_builtin(o, out);
    if (*validate) return cmd_validate(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*bound) return cmd_bound(o, out);
    if (*certify) return cmd_certify(o, out, err);
    if (*oracle) {
      if (!seed_given) {
        // fall back to the seed stored in the system file
        o.seed = system_from_json(parse_json_text(read_file(o.system))).seed;
      }
      return cmd_oracle(o, out);
    }
    if (*render) return cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kGuardrail;
  }
  return kInvalidInput;
}

}  // namespace seshadri::cli
