#include "fibrous/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "fibrous/finite_core.hpp"
#include "fibrous/finite_topology.hpp"
#include "fibrous/functors.hpp"
#include "fibrous/json_io.hpp"
#include "fibrous/lazy_registry.hpp"
#include "fibrous/lazy_spaces.hpp"
#include "fibrous/morphisms.hpp"

namespace fibrous::cli {

namespace {

/// Input or format problem; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool verbose = false;
  std::vector<std::string> inputs;
  std::string morphism_path;
  std::string target_path;
  std::string algorithm = "union-closure";
  std::size_t brute_limit = kDefaultBruteLimit;
  std::string mode;
  std::size_t all_n = 0;
  bool all_n_set = false;
  std::size_t random_count = 0;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::string witness_out;
  std::string replay_path;
  std::string instance;
  std::size_t points = 0;
  bool strict_paper = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::istream& in) : opt_(opt), out_(out), in_(in) {}

  int check();
  int to_top();
  int from_top();
  int equiv();
  int umap();
  int compose_cmd();
  int roundtrip();
  int enum_top();
  int sample();
  int modulus_check();

 private:
  json load(const std::string& path);
  io::PreorderDocument load_preorder(const std::string& path);
  FiniteTopology load_topology(const std::string& path);

  int finish(const std::string& command, const AxiomReport& report, const std::string& headline, json extra = {});
  void emit(const json& doc) { out_ << doc.dump(2) << "\n"; }
  void prose_violations(const AxiomReport& report);

  const Options& opt_;
  std::ostream& out_;
  std::istream& in_;
};

std::string describe_position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json Runner::load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in_), {});
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "' at " + describe_position(text, e.byte) + ": " + e.what());
  }
}

io::PreorderDocument Runner::load_preorder(const std::string& path) { return io::read_preorder(load(path)); }
FiniteTopology Runner::load_topology(const std::string& path) { return io::read_topology(load(path)); }

void Runner::prose_violations(const AxiomReport& report) {
  for (const auto& v : report.violations) {
    out_ << "  " << v.tag << " violated, witness " << v.witness.dump();
    if (!v.detail.empty()) out_ << " (" << v.detail << ")";
    out_ << "\n";
  }
}

int Runner::finish(const std::string& command, const AxiomReport& report, const std::string& headline, json extra) {
  if (opt_.json) {
    json doc{{"command", command}, {"report", report}};
    if (extra.is_object())
      for (auto& [k, v] : extra.items()) doc[k] = v;
    emit(doc);
  } else {
    out_ << headline << ": " << (report.passed() ? "pass" : "FAIL") << "\n";
    if (!report.note.empty()) out_ << report.note << "\n";
    prose_violations(report);
  }
  return report.passed() ? kExitOk : kExitViolation;
}

int Runner::check() {
  auto doc = load_preorder(opt_.inputs.at(0));
  CheckOptions co{opt_.verbose};
  if (!opt_.morphism_path.empty()) {
    if (opt_.target_path.empty()) throw UsageError("--morphism requires --target");
    auto target = load_preorder(opt_.target_path);
    auto m = io::read_morphism(load(opt_.morphism_path), doc.X, target.X);
    return finish("check", verify_morphism(doc.X, target.X, m, co), "fibrous morphism conditions (1)-(2)");
  }
  const SpatialWitness* w = doc.w ? &*doc.w : nullptr;
  return finish("check", check_axioms(doc.X, w, co), w ? "F1–F6" : "F1–F3");
}

int Runner::to_top() {
  auto doc = load_preorder(opt_.inputs.at(0));
  if (!doc.w) throw UsageError("to-top needs a spatial witness (fields s and m)");
  auto report = check_axioms(doc.X, *doc.w);
  if (!report.passed()) return finish("to-top", report, "F1–F6");
  OpenSetAlgorithm alg;
  if (opt_.algorithm == "union-closure")
    alg = OpenSetAlgorithm::union_closure;
  else if (opt_.algorithm == "brute")
    alg = OpenSetAlgorithm::brute;
  else
    throw UsageError("unknown algorithm '" + opt_.algorithm + "'");
  emit(io::write_topology(functor_F_obj(doc.X, *doc.w, alg, opt_.brute_limit)));
  return kExitOk;
}

int Runner::from_top() {
  auto t = load_topology(opt_.inputs.at(0));
  auto report = validate_topology(t);
  if (!report.passed()) return finish("from-top", report, "topology axioms");
  auto g = functor_G_obj(t);
  emit(io::write_preorder(g.X, &g.w));
  return kExitOk;
}

int Runner::equiv() {
  auto x = load_preorder(opt_.inputs.at(0));
  auto y = load_preorder(opt_.inputs.at(1));
  auto w = find_equivalence(x.X, y.X);
  if (opt_.json) {
    emit(json{{"command", "equiv"}, {"equivalent", w.has_value()},
              {"witness", w ? io::write_equivalence(*w) : json(nullptr)}});
  } else if (w) {
    out_ << "equivalent\nphi: " << json(w->phi).dump() << "\ngamma: " << json(w->gamma).dump() << "\n";
  } else {
    out_ << "not equivalent: no witness exists\n";
  }
  return w ? kExitOk : kExitViolation;
}

int Runner::umap() {
  auto x = load_preorder(opt_.inputs.at(0));
  auto report = check_axioms(x.X);
  if (!report.passed()) return finish("umap", report, "F1–F3");
  auto u = find_umap(x.X);
  if (opt_.json) {
    emit(json{{"command", "umap"}, {"found", u.has_value()}, {"umap", u ? io::write_umap(*u) : json(nullptr)}});
  } else if (u) {
    out_ << "u: " << json(u->u).dump() << "\nR0: " << io::write_umap(*u)["R0"].dump() << "\n";
  } else {
    out_ << "no u-map: some fibre has no least neighbourhood\n";
  }
  return u ? kExitOk : kExitViolation;
}

int Runner::compose_cmd() {
  if (opt_.inputs.size() != 5) throw UsageError("compose takes X Y Z m1 m2");
  auto x = load_preorder(opt_.inputs[0]);
  auto y = load_preorder(opt_.inputs[1]);
  auto z = load_preorder(opt_.inputs[2]);
  auto m1 = io::read_morphism(load(opt_.inputs[3]), x.X, y.X);
  auto m2 = io::read_morphism(load(opt_.inputs[4]), y.X, z.X);
  AxiomReport inputs = verify_morphism(x.X, y.X, m1);
  inputs.merge(verify_morphism(y.X, z.X, m2));
  if (!inputs.passed()) return finish("compose", inputs, "input morphisms");
  emit(io::write_morphism(compose(m1, m2)));
  return kExitOk;
}

int Runner::roundtrip() {
  AxiomReport total;
  std::size_t cases = 0;
  if (opt_.mode == "fg") {
    std::vector<FiniteTopology> tops;
    if (opt_.all_n_set) {
      tops = enumerate_topologies(opt_.all_n);
    } else {
      if (opt_.inputs.empty()) throw UsageError("roundtrip --mode fg needs an input or --all-n");
      tops.push_back(load_topology(opt_.inputs[0]));
      if (auto r = validate_topology(tops[0]); !r.passed()) return finish("roundtrip", r, "topology axioms");
    }
    for (const auto& t : tops) {
      total.merge(roundtrip_FG(t));
      ++cases;
    }
    total.note = "FG = 1 checked on " + std::to_string(cases) + " topolog" + (cases == 1 ? "y" : "ies");
    return finish("roundtrip", total, "FG round trip", json{{"mode", "fg"}, {"cases", cases}});
  }
  if (opt_.mode == "gf") {
    auto one = [&](const FinFibrousPreorder& x, const SpatialWitness& w, json id) {
      ++cases;
      auto axioms = check_axioms(x, w);
      if (!axioms.passed()) {
        for (auto& v : axioms.violations) v.witness = json{{"instance", id}, {"witness", v.witness}};
        total.merge(axioms);
        return;
      }
      auto eq = roundtrip_GF(x, w);
      total.merge(verify_equivalence(x, functor_G_obj(functor_F_obj(x, w)).X, eq));
    };
    if (opt_.random_count > 0) {
      for (std::size_t i = 0; i < opt_.random_count; ++i) {
        auto inst = random_spatial_preorder(opt_.seed + i);
        one(inst.X, inst.w, json{{"seed", opt_.seed + i}});
      }
    } else {
      if (opt_.inputs.empty()) throw UsageError("roundtrip --mode gf needs an input or --random");
      auto doc = load_preorder(opt_.inputs[0]);
      if (!doc.w) throw UsageError("roundtrip --mode gf needs a spatial witness (fields s and m)");
      one(doc.X, *doc.w, opt_.inputs[0]);
    }
    total.note = "GF ~ 1 witnessed on " + std::to_string(cases) + " instance" + (cases == 1 ? "" : "s");
    json extra{{"mode", "gf"}, {"cases", cases}};
    if (opt_.random_count > 0) {
      extra["seed"] = opt_.seed;
      if (!opt_.json) out_ << "seed: " << opt_.seed << "\n";
    }
    return finish("roundtrip", total, "GF round trip", extra);
  }
  throw UsageError("--mode must be fg or gf");
}

int Runner::enum_top() {
  auto tops = enumerate_topologies(opt_.points);
  if (opt_.json) {
    json list = json::array();
    for (const auto& t : tops) list.push_back(io::write_topology(t));
    emit(json{{"command", "enum-top"}, {"n", opt_.points}, {"count", tops.size()}, {"topologies", list}});
  } else {
    out_ << tops.size() << " topologies on " << opt_.points << " point" << (opt_.points == 1 ? "" : "s") << "\n";
    for (const auto& t : tops) out_ << io::write_topology(t)["opens"].dump() << "\n";
  }
  return kExitOk;
}

int Runner::sample() {
  if (!opt_.replay_path.empty()) {
    json doc = load(opt_.replay_path);
    if (!doc.contains("seed") || !doc.contains("witness") || !doc["witness"].contains("sample") ||
        !doc["witness"].contains("instance"))
      throw UsageError("replay file must hold {\"seed\", \"witness\": {\"instance\", \"sample\", ...}}");
    auto inst = lazy::make_instance(doc["witness"]["instance"].get<std::string>());
    const auto seed = doc["seed"].get<std::uint64_t>();
    const auto index = doc["witness"]["sample"].get<std::uint64_t>();
    auto report = inst.replay(seed, index);
    report.note = "replayed sample " + std::to_string(index) + " of seed " + std::to_string(seed);
    return finish("sample", report, inst.name + " replay", json{{"instance", inst.name}, {"seed", seed}});
  }
  if (opt_.instance.empty()) throw UsageError("sample needs an instance name");
  std::string name = opt_.instance;
  if (opt_.strict_paper) {
    if (name != "tangent-disk" && name != "tangent-disk:strict-paper")
      throw UsageError("--strict-paper only applies to tangent-disk");
    name = "tangent-disk:strict-paper";
  }
  auto inst = lazy::make_instance(name);
  auto report = inst.check(opt_.samples, opt_.seed, opt_.verbose);
  if (!opt_.witness_out.empty() && !report.passed()) {
    std::ofstream f(opt_.witness_out);
    if (!f) throw UsageError("cannot write '" + opt_.witness_out + "'");
    f << lazy::replay_document(report.violations.front()).dump(2) << "\n";
  }
  if (!opt_.json) out_ << "instance: " << inst.name << "\nseed: " << opt_.seed << "\n";
  return finish("sample", report, "F1–F6 (sampled)",
                json{{"instance", inst.name}, {"seed", opt_.seed}, {"samples", opt_.samples}});
}

int Runner::modulus_check() {
  auto c = lazy::make_modulus_case(opt_.instance);
  auto report = c.verify(opt_.samples, opt_.seed, opt_.verbose);
  if (!opt_.witness_out.empty() && !report.passed()) {
    std::ofstream f(opt_.witness_out);
    if (!f) throw UsageError("cannot write '" + opt_.witness_out + "'");
    f << lazy::replay_document(report.violations.front()).dump(2) << "\n";
  }
  if (!opt_.json) out_ << "morphism: " << c.name << "\nseed: " << opt_.seed << "\n";
  return finish("modulus-check", report, "fibrous morphism conditions (1)-(2) (sampled)",
                json{{"morphism", c.name}, {"seed", opt_.seed}, {"samples", opt_.samples}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options opt;
  CLI::App app{"Fibrous preorders, finite topologies and neighbourhood oracles", "fibrous"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Emit reports as JSON");
  app.add_flag("--verbose", opt.verbose, "Keep every violation witness instead of one per axiom");

  auto* check = app.add_subcommand("check", "Check F1-F3 (F1-F6 with s, m) or a morphism");
  check->add_option("input", opt.inputs, "Fibrous preorder JSON, or - for stdin")->required()->expected(1);
  check->add_option("--morphism", opt.morphism_path, "Verify this morphism out of the input instead");
  check->add_option("--target", opt.target_path, "Codomain of --morphism");

  auto* to_top = app.add_subcommand("to-top", "Topology induced by a spatial fibrous preorder");
  to_top->add_option("input", opt.inputs)->required()->expected(1);
  to_top->add_option("--algorithm", opt.algorithm, "union-closure (default) or brute")
      ->check(CLI::IsMember({"union-closure", "brute"}));
  to_top->add_option("--brute-limit", opt.brute_limit, "Largest base the brute algorithm accepts")
      ->capture_default_str();

  auto* from_top = app.add_subcommand("from-top", "Spatial fibrous preorder of a finite topology");
  from_top->add_option("input", opt.inputs)->required()->expected(1);

  auto* equiv = app.add_subcommand("equiv", "Search for an equivalence witness between two instances");
  equiv->add_option("inputs", opt.inputs)->required()->expected(2);

  auto* umap = app.add_subcommand("umap", "Search for a u-map and the induced preorder");
  umap->add_option("input", opt.inputs)->required()->expected(1);

  auto* compose_sc = app.add_subcommand("compose", "Compose m1: X -> Y and m2: Y -> Z");
  compose_sc->add_option("inputs", opt.inputs, "X Y Z m1 m2")->required()->expected(5);

  auto* roundtrip = app.add_subcommand("roundtrip", "Verify FG = 1 or GF ~ 1");
  roundtrip->add_option("--mode", opt.mode, "fg or gf")->required()->check(CLI::IsMember({"fg", "gf"}));
  roundtrip->add_option("input", opt.inputs)->expected(0, 1);
  auto* all_n = roundtrip->add_option("--all-n", opt.all_n, "Every topology on this many points (fg)");
  roundtrip->add_option("--random", opt.random_count, "This many seeded random instances (gf)");
  roundtrip->add_option("--seed", opt.seed, "First seed for --random")->capture_default_str();

  auto* enum_top = app.add_subcommand("enum-top", "Enumerate all topologies on n <= 4 points");
  enum_top->add_option("n", opt.points)->required();

  auto* sample = app.add_subcommand("sample", "Sampled F1-F6 check of a lazy instance");
  sample->add_option("instance", opt.instance, "metric-q, metric-q2, padic:<p>, cantor, ...");
  sample->add_option("--samples", opt.samples)->capture_default_str();
  sample->add_option("--seed", opt.seed)->capture_default_str();
  sample->add_option("--witness-out", opt.witness_out, "Write the first violation as a replay file");
  sample->add_option("--replay", opt.replay_path, "Replay a witness file instead of sampling");
  sample->add_flag("--strict-paper", opt.strict_paper, "Use the plain-ball boundary neighbourhoods for tangent-disk");

  auto* modulus = app.add_subcommand("modulus-check", "Sampled check of a morphism given by a continuity modulus");
  modulus->add_option("case", opt.instance, "padic-translate:<p>, padic-scale:<p>, q-lipschitz2, q-lipschitz2-wrong")
      ->required();
  modulus->add_option("--samples", opt.samples)->capture_default_str();
  modulus->add_option("--seed", opt.seed)->capture_default_str();
  modulus->add_option("--witness-out", opt.witness_out, "Write the first violation as a replay file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  opt.all_n_set = all_n->count() > 0;

  Runner r(opt, out, in);
  try {
    if (check->parsed()) return r.check();
    if (to_top->parsed()) return r.to_top();
    if (from_top->parsed()) return r.from_top();
    if (equiv->parsed()) return r.equiv();
    if (umap->parsed()) return r.umap();
    if (compose_sc->parsed()) return r.compose_cmd();
    if (roundtrip->parsed()) return r.roundtrip();
    if (enum_top->parsed()) return r.enum_top();
    if (sample->parsed()) return r.sample();
    if (modulus->parsed()) return r.modulus_check();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // unknown instance, oversized enumeration or brute search
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fibrous::cli
