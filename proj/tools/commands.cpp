#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "sigma/digest.hpp"
#include "sigma/error.hpp"
#include "sigma/geometry.hpp"
#include "sigma/oracle.hpp"
#include "sigma/pgm.hpp"
#include "sigma/render.hpp"
#include "sigma/serialize.hpp"
#include "sigma/setspec.hpp"
#include "sigma/verify.hpp"

namespace cli {

using sigma::json;

namespace {

using Clock = std::chrono::steady_clock;

int effective_threads(const CommonArgs& c) {
  if (const char* env = std::getenv("SIGMA_ATLAS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return c.threads;
}

struct LoadedSet {
  sigma::CoefficientSet set;
  json echo;
};

LoadedSet load_set(const SetArgs& a) {
  const sigma::CoefficientSet raw = sigma::parse_set_spec(a.spec, a.symmetrize, a.extra);
  const sigma::Normalization n = sigma::normalize(raw);
  json echo{{"spec", a.spec}, {"symmetrize", a.symmetrize}, {"normalized", sigma::to_json(n.set)}, {"scale", n.scale}};
  if (!a.extra.empty()) echo["extra"] = a.extra;
  return {n.set, echo};
}

std::string set_digest(const sigma::CoefficientSet& s) { return sigma::fnv1a_hex(sigma::to_json(s).dump()); }

// Writes through a temporary file so a failed run never leaves a partial output.
void write_atomic(const std::string& path, const std::string& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw sigma::Error(sigma::ErrorKind::InvalidInput, "cannot write " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw sigma::Error(sigma::ErrorKind::InvalidInput, "cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

struct Manifest {
  explicit Manifest(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  std::string digest;
  json config;
  std::vector<std::string> outputs;
  Clock::time_point start = Clock::now();

  void write(const CommonArgs& common, const std::string& primary_out) const {
    std::string path = common.manifest;
    if (path.empty()) path = primary_out.empty() ? command + "_manifest.json" : primary_out + ".manifest.json";
    const double wall = std::chrono::duration<double>(Clock::now() - start).count();
    json j{{"command", command}, {"set_digest", digest}, {"config", config}, {"outputs", outputs}, {"wall_time", wall}};
    write_atomic(path, sigma::dump(j));
  }
};

sigma::FirstCoeff parse_first(const std::string& s) {
  return s == "one" ? sigma::FirstCoeff::One : sigma::FirstCoeff::AnyNonzero;
}

std::pair<int, int> parse_size(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos) throw sigma::Error(sigma::ErrorKind::InvalidInput, "size must look like WxH");
  try {
    return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
  } catch (const std::exception&) {
    throw sigma::Error(sigma::ErrorKind::InvalidInput, "size must look like WxH");
  }
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw sigma::Error(sigma::ErrorKind::InvalidInput, "bad number list '" + s + "'");
    }
  }
  return out;
}

int verdict_exit(sigma::Verdict v) {
  switch (v) {
    case sigma::Verdict::In:
    case sigma::Verdict::PresumedIn: return kExitOk;
    case sigma::Verdict::Out: return kExitOut;
    case sigma::Verdict::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

void add_search_options(CLI::App& app, int& depth, double& slack, std::string& first) {
  app.add_option("--depth", depth, "Search depth")->default_val(14)->check(CLI::PositiveNumber);
  app.add_option("--slack", slack, "Threshold guard in float mode")->default_val(1e-6)->check(CLI::NonNegativeNumber);
  app.add_option("--first", first, "First coefficient: any or one")->default_val("any")->check(CLI::IsMember({"any", "one"}));
}

// ---------------------------------------------------------------------------

struct DecideArgs {
  SetArgs set;
  CommonArgs common;
  std::string point;
  int depth = 14;
  double slack = 1e-6;
  std::string first = "any";
  std::string variant = "auto";
  std::string engine = "auto";
  bool exact = false;
  bool memo = false;
  long long budget = 0;
};

int run_decide(const DecideArgs& a) {
  Manifest m("decide");
  const LoadedSet ls = load_set(a.set);
  const sigma::Candidate cand = sigma::parse_point(a.point);
  const sigma::FirstCoeff first = parse_first(a.first);
  bool machine = false;
  if (a.engine == "exact") {
    if (!cand.quad()) throw sigma::Error(sigma::ErrorKind::InvalidInput, "exact engine needs a quad:b,c point");
    machine = true;
  } else if (a.engine == "auto") {
    machine = cand.quad().has_value() && ls.set.exact_integer();
  }
  sigma::Decision d;
  sigma::SearchConfig cfg;
  if (machine) {
    d = sigma::decide_exact_quadratic(ls.set, cand.quad()->b, cand.quad()->c, first);
  } else {
    cfg.max_depth = a.depth;
    cfg.slack = a.slack;
    cfg.first_coeff = first;
    cfg.exact = a.exact;
    cfg.exact_memo = a.memo;
    cfg.node_budget = a.budget;
    cfg.variant = a.variant == "auto" ? sigma::natural_variant(cand)
                                      : (a.variant == "two" ? sigma::Variant::TwoStep : sigma::Variant::OneStep);
    d = sigma::decide_point(ls.set, cand, cfg);
  }
  std::cout << sigma::dump(sigma::to_json(d));
  if (!a.common.manifest.empty()) {
    m.digest = set_digest(ls.set);
    m.config = {{"set", ls.echo},
                {"point", a.point},
                {"engine", machine ? "state-machine" : "search"},
                {"search", sigma::to_json(cfg)}};
    m.write(a.common, "");
  }
  return verdict_exit(d.verdict);
}

// ---------------------------------------------------------------------------

struct RenderArgs {
  SetArgs set;
  CommonArgs common;
  std::string size = "256x256";
  std::string range = "0,1,0,1";
  int depth = 14;
  double slack = 1e-6;
  std::string first = "any";
  bool no_annulus = false;
  bool no_outer = false;
  bool no_deepen = false;
  std::string out;
  std::string diff_against;
};

sigma::RasterSpec raster_spec(const std::string& size, const std::string& range, int depth, double slack,
                              const std::string& first) {
  sigma::RasterSpec spec;
  std::tie(spec.width, spec.height) = parse_size(size);
  const std::vector<double> r = parse_doubles(range);
  if (r.size() != 4) throw sigma::Error(sigma::ErrorKind::InvalidInput, "range must be x0,x1,y0,y1");
  spec.x_min = r[0];
  spec.x_max = r[1];
  spec.y_min = r[2];
  spec.y_max = r[3];
  spec.cfg.max_depth = depth;
  spec.cfg.slack = slack;
  spec.cfg.first_coeff = parse_first(first);
  return spec;
}

std::string pgm_bytes(const sigma::Raster& r) {
  std::ostringstream os(std::ios::binary);
  sigma::write_pgm(os, r);
  return os.str();
}

sigma::Raster load_raster(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sigma::Error(sigma::ErrorKind::InvalidInput, "cannot open " + path);
  const sigma::GrayImage img = sigma::read_pgm(in);
  std::ifstream side(path + ".json");
  if (!side) throw sigma::Error(sigma::ErrorKind::InvalidInput, "missing sidecar " + path + ".json");
  json meta;
  side >> meta;
  sigma::Raster r;
  const json& s = meta.at("spec");
  r.spec.x_min = s.at("x_range")[0];
  r.spec.x_max = s.at("x_range")[1];
  r.spec.y_min = s.at("y_range")[0];
  r.spec.y_max = s.at("y_range")[1];
  r.spec.width = s.at("width");
  r.spec.height = s.at("height");
  r.spec.cfg.max_depth = s.at("cfg").at("max_depth");
  r.spec.cfg.slack = s.at("cfg").at("slack");
  r.spec.cfg.node_budget = s.at("cfg").at("node_budget");
  r.spec.cfg.first_coeff = s.at("cfg").at("first_coeff") == "One" ? sigma::FirstCoeff::One : sigma::FirstCoeff::AnyNonzero;
  r.spec.shortcuts.certified_annulus = s.at("shortcuts").at("certified_annulus");
  r.spec.shortcuts.outer_cutoff = s.at("shortcuts").at("outer_cutoff");
  r.spec.auto_deepen = s.at("auto_deepen");
  r.set_elements = meta.at("set").get<std::vector<double>>();
  r.set_digest = meta.at("set_digest");
  if (img.width != r.spec.width || img.height != r.spec.height)
    throw sigma::Error(sigma::ErrorKind::SpecMismatch, "PGM size disagrees with its sidecar");
  r.codes.resize(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    r.codes[i] = static_cast<std::uint8_t>(sigma::verdict_from_gray(img.pixels[i]));
  return r;
}

json raster_sidecar(const sigma::Raster& r, double seconds) {
  json meta = sigma::raster_metadata(r);
  meta["wall_time"] = seconds;
  return meta;
}

int run_render(const RenderArgs& a) {
  Manifest m("render");
  const LoadedSet ls = load_set(a.set);
  sigma::RasterSpec spec = raster_spec(a.size, a.range, a.depth, a.slack, a.first);
  spec.shortcuts.certified_annulus = !a.no_annulus;
  spec.shortcuts.outer_cutoff = !a.no_outer;
  spec.auto_deepen = !a.no_deepen;
  const auto t0 = Clock::now();
  sigma::Raster raster = sigma::render(ls.set, spec, effective_threads(a.common));
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  json summary = sigma::raster_metadata(raster);
  if (!a.diff_against.empty()) {
    const sigma::Raster other = load_raster(a.diff_against);
    raster = sigma::diff(raster, other);
    summary = sigma::raster_metadata(raster);
    summary["diff_against"] = a.diff_against;
  }
  const sigma::Components comps = sigma::components(raster);
  summary["components"] = comps.count();
  write_atomic(a.out, pgm_bytes(raster));
  write_atomic(a.out + ".json", sigma::dump(raster_sidecar(raster, seconds)));
  summary["outputs"] = {a.out, a.out + ".json"};
  std::cout << sigma::dump(summary);
  m.digest = raster.set_digest;
  m.config = {{"set", ls.echo}, {"raster", sigma::to_json(spec)}, {"diff_against", a.diff_against}};
  m.outputs = {a.out, a.out + ".json"};
  m.write(a.common, a.out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SpikesArgs {
  CommonArgs common;
  int M = 10;
  std::string size = "384x384";
  int depth = 12;
  std::string extra;
  std::string out;
};

int run_spikes(const SpikesArgs& a) {
  Manifest m("spikes");
  sigma::CoefficientSet s = sigma::parse_set_spec("span:" + std::to_string(a.M), false, a.extra);
  const double reach = 1.0 / std::sqrt(static_cast<double>(a.M));
  sigma::RasterSpec spec;
  std::tie(spec.width, spec.height) = parse_size(a.size);
  spec.x_max = reach;
  spec.y_max = reach;
  spec.cfg.max_depth = a.depth;
  const sigma::Raster r = sigma::render(s, spec, effective_threads(a.common));
  const sigma::SpikeCountReport rep = sigma::count_spikes_report(r, a.M);
  json j = sigma::to_json(rep);
  j["M"] = a.M;
  j["ceiling_formula"] = static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(a.M)) + 1.0));
  j["raster_digest"] = r.set_digest;
  json bands = json::array();
  for (const auto& b : sigma::spike_bands(a.M)) bands.push_back(sigma::to_json(b));
  j["bands"] = bands;
  if (!a.out.empty()) {
    write_atomic(a.out, pgm_bytes(r));
    write_atomic(a.out + ".json", sigma::dump(sigma::raster_metadata(r)));
    m.outputs = {a.out, a.out + ".json"};
    j["outputs"] = m.outputs;
  }
  std::cout << sigma::dump(j);
  m.digest = set_digest(s);
  m.config = {{"M", a.M}, {"extra", a.extra}, {"raster", sigma::to_json(spec)}};
  m.write(a.common, a.out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  SetArgs set;
  CommonArgs common;
  int degree = 8;
  std::string mode = "any";
  std::string out;
  long long budget = 10'000'000;
};

int run_oracle(const OracleArgs& a) {
  Manifest m("oracle");
  const LoadedSet ls = load_set(a.set);
  sigma::OracleConfig ocfg;
  ocfg.budget = a.budget;
  ocfg.threads = effective_threads(a.common);
  const sigma::OracleRootSet roots = sigma::enumerate_roots(ls.set, a.degree, parse_first(a.mode), ocfg);
  json j{{"polynomials", roots.polynomials}, {"roots", roots.roots.size()}, {"failures", roots.failures},
         {"degree_bound", roots.degree_bound}, {"mode", sigma::to_string(roots.mode)}};
  double best = INFINITY;
  for (const auto& r : roots.roots)
    if (std::fabs(r.z.imag()) > 1e-8) best = std::min(best, std::abs(r.z));
  j["min_modulus_nonreal"] = std::isfinite(best) ? json(best) : json(nullptr);
  if (!a.out.empty()) {
    std::ostringstream csv;
    sigma::write_roots_csv(csv, roots);
    write_atomic(a.out, csv.str());
    m.outputs = {a.out};
    j["out"] = a.out;
  }
  std::cout << sigma::dump(j);
  m.digest = set_digest(ls.set);
  m.config = {{"set", ls.echo}, {"degree", a.degree}, {"mode", a.mode}, {"budget", a.budget}};
  m.write(a.common, a.out);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SetOnlyArgs {
  SetArgs set;
  CommonArgs common;
  std::string thetas;
  int oracle_degree = 0;
  int k = 0;
  int depth = 14;
  double slack = 1e-6;
};

int run_rho(const SetOnlyArgs& a) {
  Manifest m("rho");
  const LoadedSet ls = load_set(a.set);
  const std::vector<double> thetas = a.thetas.empty() ? std::vector<double>{} : parse_doubles(a.thetas);
  json j = sigma::to_json(sigma::depth_report(ls.set, thetas));
  if (a.oracle_degree > 0) {
    sigma::OracleConfig ocfg;
    ocfg.threads = effective_threads(a.common);
    j["oracle_min_modulus_nonreal"] = sigma::to_json(sigma::min_modulus_nonreal(ls.set, a.oracle_degree,
                                                                                sigma::FirstCoeff::AnyNonzero, ocfg));
  }
  std::cout << sigma::dump(j);
  m.digest = set_digest(ls.set);
  m.config = {{"set", ls.echo}, {"thetas", thetas}, {"oracle_degree", a.oracle_degree}};
  m.write(a.common, "");
  return kExitOk;
}

int run_rigidity(const SetOnlyArgs& a) {
  Manifest m("rigidity");
  const LoadedSet ls = load_set(a.set);
  const sigma::RigidityReport rep = sigma::rigidity_probe(ls.set);
  std::cout << sigma::dump(sigma::to_json(rep));
  m.digest = set_digest(ls.set);
  m.config = {{"set", ls.echo}};
  m.write(a.common, "");
  return rep.violations == 0 ? kExitOk : kExitOut;
}

int run_quasirigidity(const SetOnlyArgs& a) {
  Manifest m("quasirigidity");
  const LoadedSet ls = load_set(a.set);
  sigma::SearchConfig cfg;
  cfg.max_depth = a.depth;
  cfg.slack = a.slack;
  const sigma::QuasiRigidityReport rep = sigma::quasirigidity_probe(ls.set, a.k, cfg);
  std::cout << sigma::dump(sigma::to_json(rep));
  m.digest = set_digest(ls.set);
  m.config = {{"set", ls.echo}, {"k", a.k}, {"search", sigma::to_json(cfg)}};
  m.write(a.common, "");
  return rep.agrees ? kExitOk : kExitOut;
}

int run_gap3(const SetOnlyArgs& a) {
  Manifest m("gap3");
  const LoadedSet ls = load_set(a.set);
  sigma::SearchConfig cfg;
  cfg.max_depth = a.depth;
  cfg.slack = a.slack;
  const sigma::Gap3Report rep = sigma::gap3_disconnection_candidate(ls.set, cfg);
  std::cout << sigma::dump(sigma::to_json(rep));
  m.digest = set_digest(ls.set);
  m.config = {{"set", ls.echo}, {"search", sigma::to_json(cfg)}};
  m.write(a.common, "");
  return rep.pass ? kExitOk : kExitOut;
}

int run_classify(const SetOnlyArgs& a) {
  Manifest m("classify");
  const LoadedSet ls = load_set(a.set);
  json j = sigma::to_json(sigma::classify_connectedness(ls.set));
  const sigma::ConnGraph g = sigma::connectivity_graph(ls.set);
  j["graph"] = {{"vertices", g.vertices.size()}, {"edges", g.edges.size()}, {"connected", g.connected}};
  std::cout << sigma::dump(j);
  m.digest = set_digest(ls.set);
  m.config = {{"set", ls.echo}};
  m.write(a.common, "");
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  SetArgs set;
  CommonArgs common;
  std::string suite;
  int degree = 8;
  int k = 0;
  int samples = 100;
  int steps = 10000;
  std::uint64_t seed = 1;
  int depth = 14;
  double slack = 1e-6;
  long long budget = 10'000'000;
};

int run_verify(const VerifyArgs& a) {
  Manifest m("verify");
  const LoadedSet ls = load_set(a.set);
  sigma::SuiteOptions o;
  o.set = ls.set;
  o.degree = a.degree;
  o.k = a.k;
  o.samples = a.samples;
  o.steps = a.steps;
  o.seed = a.seed;
  o.cfg.max_depth = a.depth;
  o.cfg.slack = a.slack;
  o.oracle.budget = a.budget;
  o.oracle.threads = effective_threads(a.common);
  const sigma::SuiteResult r = sigma::run_suite(a.suite, o);
  std::cout << sigma::dump(sigma::to_json(r));
  m.digest = set_digest(ls.set);
  m.config = {{"set", ls.echo}, {"suite", a.suite}, {"degree", a.degree}, {"k", a.k}, {"samples", a.samples},
              {"steps", a.steps}, {"seed", a.seed}, {"search", sigma::to_json(o.cfg)}};
  m.write(a.common, "");
  return r.pass ? kExitOk : kExitOut;
}

}  // namespace

void add_set_options(CLI::App& app, SetArgs& set, bool required) {
  auto* opt = app.add_option("--set", set.spec, "Coefficient set: span:M, list:a,b,c or file:path");
  if (required) opt->required();
  app.add_flag("--symmetrize", set.symmetrize, "Replace S by S ∪ -S");
  app.add_option("--set-extra", set.extra, "Modifier such as drop:2,3 (removes ±2 and ±3)");
}

void add_common_options(CLI::App& app, CommonArgs& common) {
  app.add_option("--threads", common.threads, "Worker threads (0 = hardware); SIGMA_ATLAS_THREADS overrides")
      ->default_val(0);
  app.add_option("--manifest", common.manifest, "Run manifest path");
}

void register_commands(CLI::App& app, std::function<int()>& run) {
  {
    auto a = std::make_shared<DecideArgs>();
    auto* sub = app.add_subcommand("decide", "Decide membership of one point");
    add_set_options(*sub, a->set);
    add_common_options(*sub, a->common);
    sub->add_option("--point", a->point, "re,im | polar:r,theta | quad:b,c")->required();
    add_search_options(*sub, a->depth, a->slack, a->first);
    sub->add_option("--variant", a->variant)->default_val("auto")->check(CLI::IsMember({"auto", "one", "two"}));
    sub->add_option("--engine", a->engine, "auto, search or exact (state machine for quad points)")
        ->default_val("auto")
        ->check(CLI::IsMember({"auto", "search", "exact"}));
    sub->add_flag("--exact", a->exact, "Exact search when every state is an integer");
    sub->add_flag("--memo", a->memo, "Remember exhausted integer states");
    sub->add_option("--budget", a->budget, "Node budget (0 = unlimited)")->default_val(0);
    sub->callback([a, &run] { run = [a] { return run_decide(*a); }; });
  }
  {
    auto a = std::make_shared<RenderArgs>();
    auto* sub = app.add_subcommand("render", "Render a region of the root set to PGM");
    add_set_options(*sub, a->set);
    add_common_options(*sub, a->common);
    sub->add_option("--size", a->size, "WxH")->default_val("256x256");
    sub->add_option("--range", a->range, "x0,x1,y0,y1")->default_val("0,1,0,1");
    add_search_options(*sub, a->depth, a->slack, a->first);
    sub->add_flag("--no-annulus", a->no_annulus, "Disable the certified annulus shortcut");
    sub->add_flag("--no-outer", a->no_outer, "Disable the outer cutoff shortcut");
    sub->add_flag("--no-deepen", a->no_deepen, "Disable extra depth for deep pixels");
    sub->add_option("--out", a->out, "Output PGM")->required();
    sub->add_option("--diff-against", a->diff_against, "Write the difference against this earlier render");
    sub->callback([a, &run] { run = [a] { return run_render(*a); }; });
  }
  {
    auto a = std::make_shared<SpikesArgs>();
    auto* sub = app.add_subcommand("spikes", "Render span:M and count spikes");
    add_common_options(*sub, a->common);
    sub->add_option("--M", a->M, "Largest coefficient")->default_val(10)->check(CLI::PositiveNumber);
    sub->add_option("--size", a->size, "WxH")->default_val("384x384");
    sub->add_option("--depth", a->depth)->default_val(12)->check(CLI::PositiveNumber);
    sub->add_option("--set-extra", a->extra, "Modifier such as drop:2");
    sub->add_option("--out", a->out, "Optional PGM of the render");
    sub->callback([a, &run] { run = [a] { return run_spikes(*a); }; });
  }
  {
    auto a = std::make_shared<OracleArgs>();
    auto* sub = app.add_subcommand("oracle", "Enumerate polynomial roots in the disc");
    add_set_options(*sub, a->set);
    add_common_options(*sub, a->common);
    sub->add_option("--degree", a->degree)->required()->check(CLI::PositiveNumber);
    sub->add_option("--mode", a->mode)->default_val("any")->check(CLI::IsMember({"any", "one"}));
    sub->add_option("--out", a->out, "CSV root dump");
    sub->add_option("--budget", a->budget)->default_val(10'000'000);
    sub->callback([a, &run] { run = [a] { return run_oracle(*a); }; });
  }
  auto set_only = [&](const char* name, const char* help, int (*fn)(const SetOnlyArgs&),
                      const std::function<void(CLI::App&, SetOnlyArgs&)>& extra) {
    auto a = std::make_shared<SetOnlyArgs>();
    auto* sub = app.add_subcommand(name, help);
    add_set_options(*sub, a->set);
    add_common_options(*sub, a->common);
    if (extra) extra(*sub, *a);
    sub->callback([a, &run, fn] { run = [a, fn] { return fn(*a); }; });
  };
  set_only("rho", "Depth bounds", run_rho, [](CLI::App& sub, SetOnlyArgs& a) {
    sub.add_option("--thetas", a.thetas, "Comma-separated angles in (0, pi/2]");
    sub.add_option("--oracle-degree", a.oracle_degree, "Also report the oracle's minimal non-real modulus");
  });
  set_only("rigidity", "Probe the early rigidity points", run_rigidity, {});
  set_only("quasirigidity", "Probe 1/(M + sigma_k)", run_quasirigidity, [](CLI::App& sub, SetOnlyArgs& a) {
    sub.add_option("--k", a.k)->required();
    sub.add_option("--depth", a.depth)->default_val(14);
    sub.add_option("--slack", a.slack)->default_val(1e-6);
  });
  set_only("gap3", "Disconnection point for total gap >= 3", run_gap3, [](CLI::App& sub, SetOnlyArgs& a) {
    sub.add_option("--depth", a.depth)->default_val(14);
    sub.add_option("--slack", a.slack)->default_val(1e-6);
  });
  set_only("classify", "Connectedness classification", run_classify, {});
  {
    auto a = std::make_shared<VerifyArgs>();
    auto* sub = app.add_subcommand("verify", "Run a verification suite");
    sub->add_option("suite", a->suite, "Suite name")->required()->check(CLI::IsMember(sigma::suite_names()));
    add_set_options(*sub, a->set);
    add_common_options(*sub, a->common);
    sub->add_option("--degree", a->degree)->default_val(8);
    sub->add_option("--k", a->k)->default_val(0);
    sub->add_option("--samples", a->samples)->default_val(100);
    sub->add_option("--steps", a->steps)->default_val(10000);
    sub->add_option("--seed", a->seed)->default_val(1);
    sub->add_option("--depth", a->depth)->default_val(14);
    sub->add_option("--slack", a->slack)->default_val(1e-6);
    sub->add_option("--budget", a->budget)->default_val(10'000'000);
    sub->callback([a, &run] { run = [a] { return run_verify(*a); }; });
  }
}

}  // namespace cli
