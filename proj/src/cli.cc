// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "madj/cli.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "madj/adjoint.h"
#include "madj/catalogue.h"
#include "madj/derived.h"
#include "madj/errors.h"
#include "madj/extension.h"
#include "madj/iso.h"
#include "madj/lattice.h"
#include "madj/matroid_io.h"

namespace madj {
namespace {

using Json = nlohmann::ordered_json;

struct Report {
  std::vector<std::string> lines;
  Json result = Json::object();
  Json witnesses = Json::array();
  int exit_code = kExitOk;
  // Replaces the line output in text mode (DOT export).
  std::optional<std::string> raw_text;

  void Line(const std::string& line) { lines.push_back(line); }
  void Refute(const std::string& line, const std::string& witness) {
    lines.push_back(line);
    witnesses.push_back(witness);
    exit_code = kExitRefuted;
  }
};

struct Context {
  const CliOptions& options;
  std::ostream& err;
};

std::string YesNo(bool b) { return b ? "yes" : "no"; }

Json ElementsJson(SubsetMask s) { return s.Elements(); }

std::string VectorString(const FieldVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Json VectorJson(const FieldVector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(static_cast<int>(v[i]));
  return out;
}

// Adjoints ignore loops and parallel elements; commands that need a
// simple matroid use the simplification and say so.
Matroid SimpleInput(const Matroid& m, Context& ctx) {
  if (IsSimple(m)) return m;
  ctx.err << "warning: input has loops or parallel elements; using its simplification, which "
             "has the same lattice of flats and the same adjoints\n";
  return Simplify(m).matroid;
}

std::string ProjectiveString(const std::optional<ProjectiveType>& p) {
  return p ? p->Name() : "none";
}

void Info(const Matroid& m, Report& r, Context&) {
  r.Line("elements: " + std::to_string(m.size()));
  r.Line("rank: " + std::to_string(m.rank()));
  r.result["elements"] = m.size();
  r.result["rank"] = m.rank();
  if (m.is_linear()) {
    const FieldMatrix& a = m.matrix();
    r.Line("backend: linear over GF(" + std::to_string(a.modulus().value()) + "), " +
           std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    r.result["backend"] = "linear";
    r.result["p"] = a.modulus().value();
  } else {
    r.Line("backend: bases (" + std::to_string(m.basis_list().size()) + ")");
    r.result["backend"] = "bases";
  }
  const bool simple = IsSimple(m);
  r.Line("simple: " + YesNo(simple));
  r.result["simple"] = simple;
  if (m.size() > kEnumerationCap) return;
  r.Line("connected: " + YesNo(IsConnected(m)));
  r.result["connected"] = IsConnected(m);
  std::string counts = "flats per rank:";
  Json counts_json = Json::array();
  for (const auto& layer : m.flats_by_rank()) {
    counts += " " + std::to_string(layer.size());
    counts_json.push_back(layer.size());
  }
  r.Line(counts);
  r.result["flats_per_rank"] = counts_json;
  r.Line("circuits: " + std::to_string(m.circuits().size()));
  r.Line("hyperplanes: " + std::to_string(Hyperplanes(m).size()));
  r.result["circuits"] = m.circuits().size();
  r.result["hyperplanes"] = Hyperplanes(m).size();
  if (simple) {
    const bool modular = IsModular(m).modular;
    const std::optional<ProjectiveType> projective = RecognizeProjective(m);
    r.Line("modular: " + YesNo(modular));
    r.Line("projective: " + ProjectiveString(projective));
    r.result["modular"] = modular;
    r.result["projective"] = ProjectiveString(projective);
  }
}

void Flats(const Matroid& m, Report& r, Context&) {
  Json layers = Json::array();
  const auto& by_rank = m.flats_by_rank();
  for (size_t k = 0; k < by_rank.size(); ++k) {
    std::string line = "rank " + std::to_string(k) + ":";
    Json layer = Json::array();
    for (const Flat& f : by_rank[k]) {
      line += " " + ToElementList(f.mask);
      layer.push_back(ElementsJson(f.mask));
    }
    r.Line(line);
    layers.push_back(layer);
  }
  r.result["flats_by_rank"] = layers;
}

void SetList(const std::vector<SubsetMask>& sets, const std::string& key, Report& r) {
  Json list = Json::array();
  for (SubsetMask s : sets) {
    r.Line(ToElementList(s));
    list.push_back(ElementsJson(s));
  }
  r.result["count"] = sets.size();
  r.result[key] = list;
}

void HyperplaneList(const Matroid& m, Report& r, Context&) {
  std::vector<SubsetMask> masks;
  for (const Flat& h : Hyperplanes(m)) masks.push_back(h.mask);
  SetList(masks, "hyperplanes", r);
}

void CircuitList(const Matroid& m, Report& r, Context&) { SetList(Circuits(m), "circuits", r); }

void SigmaCommand(const Matroid& m, Report& r, Context& ctx) {
  const SigmaResult s = Sigma(m);
  if (s.warning) ctx.err << "warning: " << *s.warning << "\n";
  r.Line("sigma: " + std::to_string(s.matroid.size()) + " elements, rank " +
         std::to_string(s.matroid.rank()));
  Json elements = Json::array();
  for (size_t i = 0; i < s.hyperplanes.size(); ++i) {
    r.Line(std::to_string(i) + ": hyperplane " + ToElementList(s.hyperplanes[i].mask) +
           " normal " + VectorString(s.normals[i]));
    elements.push_back(
        {{"hyperplane", ElementsJson(s.hyperplanes[i].mask)},
         {"normal", VectorJson(s.normals[i])}});
  }
  r.Line("certificate OK");
  r.result["elements"] = s.matroid.size();
  r.result["rank"] = s.matroid.rank();
  r.result["labels"] = elements;
  r.result["matroid"] = Json::parse(SerializeMatroid(s.matroid));
  r.result["certificate"] = true;
}

void SigmaSequenceCommand(const Matroid& m, Report& r, Context& ctx) {
  if (!IsSimple(m)) SimpleInput(m, ctx);
  SequenceOptions options;
  options.max_iter = ctx.options.max_iter;
  options.size_cap = ctx.options.size_cap;
  const SequenceReport report = SigmaSequence(m, options);
  Json iterates = Json::array();
  for (size_t k = 0; k < report.iterates.size(); ++k) {
    const IterateSummary& it = report.iterates[k];
    const std::string modular = it.modular ? YesNo(*it.modular) : "unknown";
    r.Line(std::to_string(k) + ": |E|=" + std::to_string(it.size) + " rank=" +
           std::to_string(it.rank) + " modular=" + modular +
           " projective=" + ProjectiveString(it.projective));
    Json entry = {{"size", it.size}, {"rank", it.rank}};
    entry["modular"] = it.modular ? Json(*it.modular) : Json();
    entry["projective"] = it.projective ? Json(it.projective->Name()) : Json();
    entry["fingerprint"] = it.fingerprint ? Json(it.fingerprint->DebugString()) : Json();
    iterates.push_back(entry);
  }
  r.Line("verdict: " + report.VerdictString());
  if (!report.cap_reason.empty()) r.Line("cap: " + report.cap_reason);
  r.result["iterates"] = iterates;
  r.result["verdict"] = report.VerdictString();
  for (int k : report.shrinking_steps) {
    r.Refute("iterate " + std::to_string(k + 2) + " is smaller than iterate " +
                 std::to_string(k) + ", so the second adjoint does not contain the matroid",
             "k=" + std::to_string(k));
  }
}

void CheckAdjoint(const Matroid& input, Report& r, Context& ctx) {
  const Matroid m = SimpleInput(input, ctx);
  const std::string candidate = ctx.options.candidate.value_or("sigma");
  std::optional<AdjointCertificate> cert;
  if (candidate == "sigma") {
    cert = SigmaCertificate(Sigma(m));
  } else {
    const Matroid n = LoadMatroid(candidate);
    std::vector<int> labeling(n.size());
    for (int i = 0; i < n.size(); ++i) labeling[i] = i;
    cert = VerifyAdjoint(m, n, labeling);
  }
  r.result["candidate"] = candidate;
  r.result["certificate"] = cert->ok();
  if (!cert->ok()) {
    const int e = cert->failing_element();
    r.Refute("certificate FAILED: " + cert->failure(),
             !cert->rank_equal() || e < 0 ? "rank mismatch" : "element " + m.ElementName(e));
    return;
  }
  const std::vector<SubsetMask> bases = Bases(m);
  int hyperplane_passes = 0;
  int cocircuit_passes = 0;
  for (SubsetMask b : bases) {
    if (CheckFundamentalBasis(*cert, b)) {
      ++hyperplane_passes;
    } else {
      r.witnesses.push_back("fundamental hyperplanes of " + ToElementList(b) +
                            " are not a basis");
    }
    if (CheckCocircuitBasis(*cert, b)) {
      ++cocircuit_passes;
    } else {
      r.witnesses.push_back("fundamental cocircuits of " + ToElementList(b) +
                            " are not a basis");
    }
  }
  const std::string total = std::to_string(bases.size());
  r.Line("certificate OK; fundamental-hyperplane basis checks: " +
         std::to_string(hyperplane_passes) + "/" + total);
  r.Line("fundamental-cocircuit basis checks: " + std::to_string(cocircuit_passes) + "/" + total);
  const AdjointMap map = AdjointMap::Build(*cert);
  r.Line("adjoint map: " + std::to_string(map.flats().size()) +
         " flats, order-reversing, rank-complementing, " + std::to_string(map.chains_checked()) +
         " hyperplane chains independent");
  r.result["bases"] = bases.size();
  r.result["fundamental_hyperplane_passes"] = hyperplane_passes;
  r.result["fundamental_cocircuit_passes"] = cocircuit_passes;
  r.result["adjoint_map_flats"] = map.flats().size();
  r.result["chains_checked"] = map.chains_checked();
  if (hyperplane_passes != static_cast<int>(bases.size()) ||
      cocircuit_passes != static_cast<int>(bases.size())) {
    r.exit_code = kExitRefuted;
  }
}

void DerivedOw(const Matroid& m, Report& r, Context&) {
  const CircuitVectorMatroid d = CircuitVectorDerived(m);
  r.Line("circuits: " + std::to_string(d.circuits.size()));
  r.Line("rank: " + std::to_string(d.matroid.rank()) + " (m - r = " +
         std::to_string(m.size() - m.rank()) + ")");
  Json vectors = Json::array();
  for (size_t i = 0; i < d.circuits.size(); ++i) {
    r.Line(ToElementList(d.circuits[i]) + " " + VectorString(d.vectors[i]));
    vectors.push_back({{"circuit", ElementsJson(d.circuits[i])},
                       {"vector", VectorJson(d.vectors[i])}});
  }
  const std::vector<SubsetMask> bases = Bases(m);
  int passes = 0;
  for (SubsetMask b : bases) {
    if (CheckFundamentalCircuitBasis(d, m, b)) {
      ++passes;
    } else {
      r.witnesses.push_back("fundamental circuits of " + ToElementList(b) + " are not a basis");
    }
  }
  r.Line("fundamental-circuit basis checks: " + std::to_string(passes) + "/" +
         std::to_string(bases.size()));
  r.result["circuits"] = d.circuits.size();
  r.result["rank"] = d.matroid.rank();
  r.result["vectors"] = vectors;
  r.result["fundamental_circuit_passes"] = passes;
  if (passes != static_cast<int>(bases.size())) r.exit_code = kExitRefuted;
  if (static_cast<int>(d.circuits.size()) <= kMaxDualityCircuits) {
    const DualityReport dual = VerifyDuality(m);
    r.Line("duality with the adjoint of the dual: " + std::string(dual.ok() ? "ok" : "FAILED") +
           " (" + std::to_string(dual.subsets_checked) + " subsets)");
    r.result["duality"] = dual.ok();
    if (!dual.ok()) {
      r.Refute("duality counterexample",
               dual.counterexample ? ToElementList(*dual.counterexample) : "matrix identity");
    }
  }
}

void DerivedComb(const Matroid& m, Report& r, Context&) {
  const CombinatorialDerived d = CombinatorialDerivedMatroid(m, EpsilonWitness::kAllCircuits);
  r.Line("circuits: " + std::to_string(d.circuits.size()));
  r.Line("rank: " + std::to_string(d.matroid.rank()) + " (m - r = " +
         std::to_string(m.size() - m.rank()) + ")");
  r.Line("epsilon rounds: " + std::to_string(d.rounds));
  r.Line("minimal dependent sets: " + std::to_string(d.dependent.minimal.size()));
  r.result["circuits"] = d.circuits.size();
  r.result["rank"] = d.matroid.rank();
  r.result["rounds"] = d.rounds;
  r.result["minimal_dependent"] = d.dependent.minimal.size();
  try {
    const CombinatorialDerived lowest =
        CombinatorialDerivedMatroid(m, EpsilonWitness::kLowestCircuit);
    const bool same = lowest.dependent.minimal == d.dependent.minimal;
    r.Line("lowest-witness variant: rank " + std::to_string(lowest.matroid.rank()) +
           (same ? ", same dependent sets" : ", different dependent sets"));
    r.result["lowest_witness_rank"] = lowest.matroid.rank();
    r.result["variants_agree"] = same;
  } catch (const RefutationError& e) {
    // The single-witness reading is one interpretation of the definition,
    // so its failure is reported, not treated as a refutation.
    r.Line(std::string("lowest-witness variant: not a matroid (") + e.what() + ")");
    r.result["lowest_witness_rank"] = nullptr;
    r.result["variants_agree"] = false;
  }
}

void ExtLattice(const Matroid& m, Report& r, Context&) {
  const LambdaReport lambda = CompareLambda(m);
  const int h = static_cast<int>(Hyperplanes(m).size());
  r.Line("hyperplanes: " + std::to_string(h));
  r.Line("linear subclasses: " + std::to_string(lambda.subclass_count));
  r.Line("flats: " + std::to_string(lambda.flat_count));
  r.Line("hyperplanes-through map: well-defined " + YesNo(lambda.well_defined) +
         ", injective " + YesNo(lambda.injective) + ", surjective " +
         YesNo(lambda.surjective) + ", order isomorphism " + YesNo(lambda.order_isomorphism));
  Json missing = Json::array();
  for (SubsetMask s : lambda.missing) {
    r.Line("not of the form H_X: " + ToElementList(s));
    missing.push_back(ElementsJson(s));
  }
  r.result["hyperplanes"] = h;
  r.result["linear_subclasses"] = lambda.subclass_count;
  r.result["flats"] = lambda.flat_count;
  r.result["order_isomorphism"] = lambda.order_isomorphism;
  r.result["missing"] = missing;
  if (IsSimple(m) && IsModular(m).modular && !lambda.ok()) {
    r.Refute("modular matroid whose hyperplanes-through map is not an order isomorphism",
             lambda.missing.empty() ? "" : ToElementList(lambda.missing.front()));
  }
  if (!lambda.well_defined) {
    r.Refute("a set of hyperplanes through a flat is not a linear subclass", "");
  }
}

void Modular(const Matroid& input, Report& r, Context& ctx) {
  const Matroid m = SimpleInput(input, ctx);
  const ModularityReport report = IsModular(m);
  r.Line(std::string("modular: ") + (report.modular ? "true" : "false") + "; |E|=" +
         std::to_string(report.element_count) + " |H|=" + std::to_string(report.hyperplane_count) +
         " (Greene agrees)");
  r.result["modular"] = report.modular;
  r.result["elements"] = report.element_count;
  r.result["hyperplanes"] = report.hyperplane_count;
  if (report.witness) {
    r.Line("non-modular pair: " + ToElementList(report.witness->first.mask) + " " +
           ToElementList(report.witness->second.mask));
    r.result["witness"] = {ElementsJson(report.witness->first.mask),
                           ElementsJson(report.witness->second.mask)};
  }
}

void Iso(const Matroid& m, Report& r, Context& ctx) {
  if (!ctx.options.candidate) throw std::invalid_argument("iso needs --candidate");
  const Matroid n = LoadMatroid(*ctx.options.candidate);
  const std::optional<std::vector<int>> map = MatroidIso(m, n);
  r.Line("isomorphic: " + YesNo(map.has_value()));
  r.result["isomorphic"] = map.has_value();
  if (map) {
    std::string line = "map:";
    for (size_t e = 0; e < map->size(); ++e) {
      line += " " + std::to_string(e) + "->" + std::to_string((*map)[e]);
    }
    r.Line(line);
    r.result["map"] = *map;
  }
}

void Dot(const Matroid& input, Report& r, Context& ctx) {
  const std::string& which = ctx.options.lattice;
  std::string dot;
  if (which == "extension") {
    const ExtensionLattice e = ExtensionLattice::Build(input);
    dot = ExportDot(e.order(), e.Labels(), "extension");
  } else if (which == "flats" || which == "opposite") {
    const FlatLattice l = FlatLattice::Build(SimpleInput(input, ctx));
    dot = which == "flats" ? ExportDot(l.order(), l.Labels(), "flats")
                           : ExportDot(Opposite(l).order(), l.Labels(), "opposite");
  } else {
    throw std::invalid_argument("--lattice must be flats, opposite or extension");
  }
  r.raw_text = dot;
  r.result["dot"] = dot;
}

void Conjecture(const Matroid& m, Report& r, Context& ctx) {
  const ConjectureRecord rec = RunConjectureHarness(ctx.options.matroid, m);
  auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : "n/a"; };
  auto opt_bool = [](const std::optional<bool>& v) { return v ? YesNo(*v) : "n/a"; };
  r.Line("fixture: " + rec.fixture);
  r.Line("m=" + std::to_string(rec.size) + " r=" + std::to_string(rec.rank) +
         " circuits=" + std::to_string(rec.circuit_count));
  r.Line("combinatorial derived rank: " + opt_int(rec.combinatorial_rank) +
         " (m - r = " + std::to_string(rec.size - rec.rank) + ", equal: " +
         opt_bool(rec.rank_is_corank) + ")");
  r.Line("circuit-vector derived rank: " + opt_int(rec.circuit_vector_rank));
  r.Line("isomorphic to the adjoint of the dual: " + opt_bool(rec.isomorphic_to_dual_adjoint));
  r.Line("isomorphic to the circuit-vector matroid: " +
         opt_bool(rec.isomorphic_to_circuit_vector));
  if (!rec.note.empty()) r.Line("note: " + rec.note);
  auto opt_json = [](const auto& v) { return v ? Json(*v) : Json(); };
  r.result = {{"fixture", rec.fixture},
              {"m", rec.size},
              {"r", rec.rank},
              {"circuits", rec.circuit_count},
              {"combinatorial_rank", opt_json(rec.combinatorial_rank)},
              {"circuit_vector_rank", opt_json(rec.circuit_vector_rank)},
              {"rank_is_corank", opt_json(rec.rank_is_corank)},
              {"isomorphic_to_dual_adjoint", opt_json(rec.isomorphic_to_dual_adjoint)},
              {"isomorphic_to_circuit_vector", opt_json(rec.isomorphic_to_circuit_vector)},
              {"note", rec.note}};
}

using Handler = std::function<void(const Matroid&, Report&, Context&)>;

const std::map<std::string, Handler>& Handlers() {
  static const auto* handlers = new std::map<std::string, Handler>{
      {"info", Info},
      {"flats", Flats},
      {"hyperplanes", HyperplaneList},
      {"circuits", CircuitList},
      {"sigma", SigmaCommand},
      {"sigma-seq", SigmaSequenceCommand},
      {"check-adjoint", CheckAdjoint},
      {"derived-ow", DerivedOw},
      {"derived-comb", DerivedComb},
      {"ext-lattice", ExtLattice},
      {"modular", Modular},
      {"iso", Iso},
      {"dot", Dot},
      {"conjecture71", Conjecture},
  };
  return *handlers;
}

void Emit(const CliOptions& options, const Report& report, double millis, std::ostream& out) {
  std::ostringstream text;
  if (options.format == "json") {
    Json doc;
    doc["command"] = options.command;
    doc["input"] = options.matroid;
    doc["result"] = report.result;
    doc["witnesses"] = report.witnesses;
    doc["timings"] = Json::object();
    if (options.timings) doc["timings"]["total_ms"] = millis;
    text << doc.dump(2) << "\n";
  } else if (report.raw_text) {
    text << *report.raw_text;
  } else {
    for (const std::string& line : report.lines) text << line << "\n";
    for (const auto& w : report.witnesses) text << "witness: " << w.get<std::string>() << "\n";
    if (options.timings) text << "time: " << millis << " ms\n";
  }
  if (options.out) {
    std::ofstream file(*options.out);
    if (!file) throw std::invalid_argument("cannot write " + *options.out);
    file << text.str();
  } else {
    out << text.str();
  }
}

}  // namespace

const std::vector<std::string>& CliCommands() {
  static const auto* commands = [] {
    auto* names = new std::vector<std::string>;
    for (const auto& [name, handler] : Handlers()) names->push_back(name);
    return names;
  }();
  return *commands;
}

int RunCommand(const CliOptions& options, std::ostream& out, std::ostream& err) {
  auto it = Handlers().find(options.command);
  if (it == Handlers().end()) {
    err << "error: unknown command '" << options.command << "'\n";
    return kExitUsage;
  }
  if (options.format != "text" && options.format != "json") {
    err << "error: --format must be text or json\n";
    return kExitUsage;
  }
  Report report;
  Context ctx{options, err};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Matroid m = LoadMatroid(options.matroid);
    it->second(m, report, ctx);
  } catch (const RefutationError& e) {
    report.Refute(std::string("REFUTED: ") + e.what(), e.witness());
  } catch (const InternalError& e) {
    report.Refute(std::string("REFUTED (internal consistency): ") + e.what(), e.what());
  } catch (const ResourceError& e) {
    err << "error: resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  try {
    Emit(options, report, millis, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return report.exit_code;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adjoints, derived matroids and flat lattices of small matroids"};
  CliOptions options;
  std::string fixtures;
  for (const std::string& f : FixtureExamples()) fixtures += " " + f;
  app.add_option("command", options.command, "Command")
      ->required()
      ->check(CLI::IsMember(CliCommands()));
  app.add_option("matroid", options.matroid, "Fixture name or matroid file, e.g." + fixtures)
      ->required();
  app.add_option("--candidate", options.candidate,
                 "check-adjoint: 'sigma' or a matroid; iso: the second matroid");
  app.add_option("--max-iter", options.max_iter, "sigma-seq iteration limit")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--size-cap", options.size_cap, "sigma-seq iterate size limit")
      ->check(CLI::PositiveNumber);
  app.add_option("--lattice", options.lattice, "dot: flats, opposite or extension")
      ->check(CLI::IsMember({"flats", "opposite", "extension"}));
  app.add_option("--format", options.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", options.out, "Write the report to this file");
  app.add_flag("--timings", options.timings, "Include wall-clock timings");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  return RunCommand(options, out, err);
}

}  // namespace madj
