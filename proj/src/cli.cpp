#include "bsg/cli.hpp"

#include "bsg/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>

namespace bsg::cli {

namespace {

const std::vector<std::pair<std::string, GeneratorKind>> kGenerators = {
    {"disk", GeneratorKind::Disk},
    {"sphere", GeneratorKind::Sphere},
    {"solid_torus", GeneratorKind::SolidTorus},
    {"twisted_solid_torus", GeneratorKind::TwistedSolidTorus},
    {"torus_surface", GeneratorKind::TorusSurface},
    {"prism", GeneratorKind::Prism},
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string kind, out, map_path, complex_path, statement;
  int res = 8, dim = 2, r = 1, rp = 0, grid = 8, depth = 1;
  std::string overlap = "1/3";
  std::optional<std::uint64_t> seed;
  bool all = false;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("REEB_SEED")) {
    try {
      std::size_t used = 0;
      const auto s = std::stoull(env, &used);
      if (used == std::string(env).size()) return s;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("REEB_SEED is not an unsigned integer: '") + env + "'");
  }
  return 1;
}

MapSpec spec_of(const Options& o) {
  const auto kind = map_kind_from_string(o.kind);
  if (!kind) throw UsageError("unknown map kind '" + o.kind + "'");
  return MapSpec{*kind, o.dim, o.res, o.r, o.rp};
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) out << text;
  else io::write_text(o.out, text);
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.seed = resolve_seed(o);
  v.grid = o.grid;
  v.overlap = io::rational_from_string(o.overlap);
  v.depth = o.depth;
  return v;
}

PLMap load_map(const Options& o) {
  if (!o.map_path.empty()) return ensure_generic(io::map_from_json(io::read_json(o.map_path)), resolve_seed(o));
  if (!o.kind.empty()) return canonical_map(spec_of(o), resolve_seed(o));
  throw UsageError("a map is required: pass --map FILE or --kind NAME");
}

int generate(const Options& o, std::ostream& out) {
  for (const auto& [name, kind] : kGenerators)
    if (name == o.kind) {
      emit(o, dump(io::to_json(bsg::generate(Generator{kind, o.dim, o.res}))), out);
      return 0;
    }
  throw UsageError("unknown complex kind '" + o.kind + "'");
}

int make_map_file(const Options& o, std::ostream& out) {
  const auto spec = spec_of(o);
  const auto F = o.complex_path.empty()
                     ? canonical_map(spec, resolve_seed(o))
                     : canonical_map(spec, io::complex_from_json(io::read_json(o.complex_path)), resolve_seed(o));
  emit(o, dump(io::to_json(F, o.kind)), out);
  return 0;
}

int reeb(const Options& o, std::ostream& out) {
  const auto F = load_map(o);
  if (F.target_dim() == 1) {
    const auto G = reeb_graph(F);
    emit(o, ends_with(o.out, ".dot") ? io::to_dot(G) : dump(io::to_json(G)), out);
    return 0;
  }
  if (ends_with(o.out, ".dot")) throw UsageError("DOT output is available for Reeb graphs of scalar maps only");
  emit(o, dump(io::to_json(reeb_nerve(F, o.grid, io::rational_from_string(o.overlap)))), out);
  return 0;
}

int classify(const Options& o, std::ostream& out) {
  const auto F = load_map(o);
  const auto sg = is_boundary_special_generic(F);
  emit(o, dump(io::to_json(classify_boundary_vertices(F), sg)), out);
  return sg.ok ? 0 : 1;
}

void print_summary(const VerificationReport& r, std::ostream& out) {
  out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(15) << r.statement << " " << r.inputs << "\n";
  for (const auto& d : r.details)
    if (!d.pass) out << "    " << d.name << ": expected " << d.expected << ", got " << d.actual << "\n";
}

VerificationReport run_verifier(const Options& o, const VerifyOptions& v) {
  const auto& ids = statement_ids();
  if (o.statement == ids[4]) {
    const auto N = o.complex_path.empty() ? canonical_domain(MapSpec{MapKind::HeightDisk, o.dim})
                                          : io::complex_from_json(io::read_json(o.complex_path));
    return verify_function_theorem(N, v);
  }
  if (o.statement == ids[5]) return verify_3manifold_theorem(o.r, o.rp, o.res, v);
  using MapVerifier = VerificationReport (*)(const PLMap&, const VerifyOptions&);
  const MapVerifier verifiers[] = {&verify_reeb_structure, &verify_decomposition, &verify_cohomology_iso, &verify_pi1};
  for (int i = 0; i < 4; ++i)
    if (o.statement == ids[i]) {
      const auto F = load_map(o);
      try {
        return verifiers[i](F, v);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotBoundarySpecialGeneric && e.code() != ErrorCode::NerveUnstable) throw;
        VerificationReport r;
        r.statement = o.statement;
        r.seed = v.seed;
        r.inputs = o.map_path.empty() ? o.kind : o.map_path;
        r.check("precondition", "met", e.what());
        return r;
      }
    }
  std::string known;
  for (const auto& id : ids) known += " " + id;
  throw UsageError("unknown statement '" + o.statement + "'; expected one of:" + known);
}

int verify(const Options& o, std::ostream& out) {
  const auto r = run_verifier(o, verify_options(o));
  if (!o.out.empty()) io::write_text(o.out, dump(io::to_json(r)));
  print_summary(r, out);
  return r.pass ? 0 : 1;
}

int suite(const Options& o, std::ostream& out) {
  const auto reports = run_suite(verify_options(o));
  io::Json all = io::Json::array();
  int failed = 0;
  for (const auto& r : reports) {
    print_summary(r, out);
    all.push_back(io::to_json(r));
    if (!r.pass) ++failed;
  }
  out << reports.size() - failed << "/" << reports.size() << " passed\n";
  if (!o.out.empty()) io::write_text(o.out, dump(all));
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"PL Reeb spaces of boundary special generic maps", "bsg"};
  app.require_subcommand(1);
  auto seed = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "seed for perturbation and sampling (default $REEB_SEED, else 1)");
  };
  auto nerve = [&](CLI::App* c) {
    c->add_option("--grid", o.grid, "nerve grid size")->check(CLI::Range(4, 256));
    c->add_option("--overlap", o.overlap, "rectangle enlargement as a rational");
  };

  auto* gen = app.add_subcommand("generate", "write a generated complex");
  gen->add_option("kind", o.kind, "disk, sphere, solid_torus, twisted_solid_torus, torus_surface or prism")->required();
  gen->add_option("--res", o.res, "circle segments or layers");
  gen->add_option("--dim", o.dim, "disk or sphere dimension");
  gen->add_option("--out", o.out, "output file (default stdout)");

  auto* map = app.add_subcommand("map", "write a canonical map");
  map->add_option("kind", o.kind, "map kind")->required();
  map->add_option("--complex", o.complex_path, "domain JSON; must be the construction's domain");
  map->add_option("--res", o.res);
  map->add_option("--dim", o.dim);
  map->add_option("--r", o.r, "solid tori in a sum");
  map->add_option("--rp", o.rp, "twisted solid tori in a sum");
  map->add_option("--out", o.out);
  seed(map);

  auto* rb = app.add_subcommand("reeb", "Reeb graph (scalar maps) or nerve (planar maps)");
  rb->add_option("--map", o.map_path, "map JSON")->required();
  rb->add_option("--out", o.out, "output .json or .dot");
  nerve(rb);
  seed(rb);

  auto* cls = app.add_subcommand("classify", "label boundary vertices; exit 1 if not boundary special generic");
  cls->add_option("--map", o.map_path, "map JSON")->required();
  cls->add_option("--out", o.out);
  seed(cls);

  auto* ver = app.add_subcommand("verify", "run one verifier");
  ver->add_option("statement", o.statement, "statement id")->required();
  ver->add_option("--map", o.map_path, "map JSON");
  ver->add_option("--kind", o.kind, "canonical map kind instead of --map");
  ver->add_option("--complex", o.complex_path, "domain for disk-function");
  ver->add_option("--dim", o.dim);
  ver->add_option("--res", o.res);
  ver->add_option("--r", o.r);
  ver->add_option("--rp", o.rp);
  ver->add_option("--depth", o.depth, "collar depth in nerve hops");
  ver->add_option("--out", o.out, "report JSON");
  nerve(ver);
  seed(ver);

  auto* all = app.add_subcommand("suite", "run every verifier over the standard constructions");
  all->add_flag("--all", o.all, "run the full matrix (the only mode)");
  all->add_option("--out", o.out, "JSON array of reports");
  nerve(all);
  seed(all);

  std::vector<const char*> argv{"bsg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*gen) return generate(o, out);
    if (*map) return make_map_file(o, out);
    if (*rb) return reeb(o, out);
    if (*cls) return classify(o, out);
    if (*ver) return verify(o, out);
    return suite(o, out);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << "\n";
    return 2;
  }
}

int run(int argc, char** argv) { return run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr); }

}  // namespace bsg::cli
