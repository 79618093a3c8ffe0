// Command-line front end: one subcommand per analysis, exit code 0 clean, 1 finding,
// 2 usage or input error, 3 internal failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dlab/report.hpp"

namespace fs = std::filesystem;
using namespace dlab;

namespace {

enum Exit { kClean = 0, kFinding = 1, kUsage = 2, kInternal = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

PlaneGraph load(const std::string& path) { return parse_plg(read_file(path)); }

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ChargeSumMismatch:
    case ErrorKind::AmbiguousRule:
    case ErrorKind::OverlappingCluster:
    case ErrorKind::UnclassifiableElement:
    case ErrorKind::SearchBudgetExceeded:
    case ErrorKind::LimitExceeded: return kInternal;
    default: return kUsage;
  }
}

std::string vertices_text(const PlaneGraph& g, const std::vector<VertexId>& vs) {
  std::string s;
  for (VertexId v : vs) s += (s.empty() ? "" : " ") + g.name(v);
  return s;
}

int cmd_faces(const std::string& file) {
  auto g = load(file);
  std::cout << "graph " << graph_id(g) << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
            << g.face_count() << " faces\n";
  for (const auto& f : g.faces()) {
    std::cout << "f" << f.id << " degree " << f.degree;
    if (g.outer_face() && *g.outer_face() == f.id) std::cout << " outer";
    if (!f.boundary_is_cycle) std::cout << " non-cycle";
    std::cout << ": " << vertices_text(g, f.vertex_walk) << "\n";
  }
  return kClean;
}

int cmd_membership(const std::string& file) {
  auto g = load(file);
  auto w = find_family_a_witness(g);
  if (!w) {
    std::cout << "in family A: yes\n";
    return kClean;
  }
  std::cout << "in family A: no\nwitness:\n";
  for (const auto& c : w->cycles) std::cout << "  " << c.length() << "-cycle " << vertices_text(g, c.vertices) << "\n";
  return kClean;
}

int cmd_forbidden(const std::string& file) {
  auto g = load(file);
  auto hits = forbidden_scan(g);
  for (const auto& h : hits) {
    std::cout << h.name << " at " << vertices_text(g, h.match.vertex_map);
    if (h.cycle) std::cout << " with cycle " << vertices_text(g, h.cycle->vertices);
    std::cout << "\n";
  }
  std::cout << hits.size() << " forbidden configuration" << (hits.size() == 1 ? "" : "s") << "\n";
  return hits.empty() ? kClean : kFinding;
}

int cmd_structural(const std::string& file) {
  auto g = load(file);
  if (!g.has_outer_triangle()) throw Error(ErrorKind::MissingOuterFace, "structural checks need an 'O a b c' line");
  auto r = structural_scan(g);
  for (const auto& v : r.violations) {
    std::cout << to_string(v.kind) << ": vertices " << vertices_text(g, v.vertices);
    if (!v.faces.empty()) std::cout << "; faces";
    for (FaceId f : v.faces) std::cout << " f" << f;
    if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
    std::cout << "\n";
  }
  std::cout << (r.clean() ? "clean" : std::to_string(r.violations.size()) + " violations") << "\n";
  return r.clean() ? kClean : kFinding;
}

int cmd_discharge(const std::string& file, bool ledger, const std::string& json_out, bool strict) {
  auto g = load(file);
  if (!g.has_outer_triangle()) throw Error(ErrorKind::MissingOuterFace, "discharging needs an 'O a b c' line");
  auto d = discharge(g, strict);
  if (ledger) std::cout << ledger_text(d.ledger);
  std::cout << "total charge " << to_string(d.ledger.total_initial()) << " -> " << to_string(d.ledger.total_final())
            << (d.conserved ? " (conserved)" : " (NOT conserved)") << "\n";
  for (const auto& v : d.summary.verdicts) {
    if (v.nonnegative) continue;
    std::cout << v.element.name() << " case " << v.case_id << " ends at " << to_string(v.final_charge);
    if (v.annotations.empty()) std::cout << " unexplained";
    else if (v.global_annotation) std::cout << " explained by " << v.annotations.size() << " violations elsewhere";
    else std::cout << " explained by " << to_string(v.annotations.front().kind);
    std::cout << "\n";
  }
  std::cout << d.summary.negative.size() << " negative, " << d.summary.unexplained.size() << " unexplained, "
            << d.summary.unclassified.size() << " unclassified\n";
  if (!json_out.empty()) {
    PipelineOptions opt;
    opt.strict = strict;
    write_file(json_out, run_pipeline(g, opt).json.dump(2) + "\n");
  }
  if (!d.conserved) return kInternal;
  return d.finding() ? kFinding : kClean;
}

int cmd_color(const std::string& file, const std::string& lists_file, const std::vector<std::string>& pins_text) {
  auto g = load(file);
  std::istringstream in(read_file(lists_file));
  auto lf = parse_lists(in, g);
  for (const auto& p : pins_text) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::BadParameters, "pin '" + p + "' must look like v=c");
    VertexId v = g.find_vertex(p.substr(0, eq));
    if (v < 0) throw Error(ErrorKind::BadParameters, "pin names unknown vertex '" + p.substr(0, eq) + "'");
    try {
      lf.pins[v] = std::stoi(p.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParameters, "pin colour in '" + p + "' is not an integer");
    }
  }
  auto c = solve(adjacency(g), lf.lists, lf.pins);
  if (!c) {
    std::cout << "unsatisfiable\n";
    return kFinding;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) std::cout << g.name(v) << ": " << (*c)[v] << "\n";
  return kClean;
}

int cmd_reducible(const std::string& target, const std::string& profile_spec, bool certificate) {
  PlaneGraph config;
  std::optional<ConfigPattern> pat;
  if (fs::path(target).extension() == ".plg") {
    config = load(target);
  } else {
    pat = parse_pattern(target);
    config = build_pattern(*pat);
  }
  SizeProfile profile;
  if (profile_spec == "stated") {
    if (!pat) throw Error(ErrorKind::BadParameters, "'stated' profiles exist only for catalogued configurations");
    profile = stated_profile(*pat);
  } else {
    profile = parse_profile(profile_spec, config);
  }
  std::cout << "profile";
  for (VertexId v = 0; v < config.vertex_count(); ++v) std::cout << " " << config.name(v) << ":" << profile.bounds[v];
  std::cout << "\n";
  auto r = verify_reducible(config, profile);
  std::cout << (r.verified ? "verified" : "counterexample") << " (" << r.states << " positions)\n";
  int code = r.verified ? kClean : kFinding;
  if (!r.verified) write_lists(std::cout, config, *r.counterexample);
  if (certificate) {
    if (!pat) throw Error(ErrorKind::BadParameters, "certificates exist only for catalogued configurations");
    ReducibilityCertificate cert;
    if (pat->kind == PatternKind::H_fig2) cert = h_certificate();
    else if (pat->kind == PatternKind::W5) cert = w5_certificate();
    else if (pat->is_fan()) cert = fan_certificate(pat->params);
    else throw Error(ErrorKind::BadParameters, "no certificate is recorded for " + pat->name());
    auto chk = check_certificate(config, profile, cert);
    for (const auto& line : chk.trace) std::cout << "  " << line << "\n";
    std::cout << "certificate " << (chk.ok ? "passes" : "fails") << "\n";
    if (!chk.ok) code = kFinding;
  }
  return code;
}

int cmd_lemma(const std::string& id, const std::string& spec_file, const std::string& json_out,
              const std::string& dump_dir, std::uint64_t seed) {
  Json spec_json;
  try {
    spec_json = Json::parse(read_file(spec_file));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::BadSpec, std::string("corpus spec is not JSON: ") + e.what());
  }
  auto spec = parse_corpus_spec(spec_json);
  auto corpus = generate(spec);
  auto res = lemma_campaign(id, corpus, to_json(spec), seed);
  const auto& j = res.json;
  std::cout << res.lemma << ": " << j["statement"].get<std::string>() << "\n"
            << "graphs " << j["graphs"] << ", in family A " << j["graphs_in_family_A"] << ", checked "
            << j["graphs_checked"] << "\n";
  for (const auto& [k, v] : j["counters"].items()) std::cout << "  " << k << " " << v << "\n";
  std::cout << "counterexamples " << res.hits.size() << "\n";
  if (!j["errors"].empty()) std::cout << "errors " << j["errors"].size() << "\n";
  if (!json_out.empty()) write_file(json_out, j.dump(2) + "\n");
  if (!res.hits.empty()) {
    fs::create_directories(dump_dir);
    for (const auto& h : res.hits) {
      std::string base = (fs::path(dump_dir) / (res.lemma + "_" + h.graph_id)).string();
      write_file(base + ".plg", h.plg);
      write_file(base + ".witness.json", h.witness.dump(2) + "\n");
    }
    std::cout << "hits written to " << dump_dir << "\n";
  }
  if (!j["errors"].empty()) return kInternal;
  return res.hits.empty() ? kClean : kFinding;
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::BadSpec, "parameter '" + tok + "' must look like key=value");
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

int cmd_gen(const std::string& family, const std::string& params_text, std::uint64_t seed, const std::string& out_dir) {
  auto params = parse_params(params_text);
  auto take_int = [&](const std::string& key, int def) {
    auto it = params.find(key);
    if (it == params.end()) return def;
    try {
      std::size_t used = 0;
      int v = std::stoi(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      params.erase(it);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadSpec, "parameter " + key + " must be an integer");
    }
  };
  CorpusSpec spec;
  if (auto it = params.find("filter"); it != params.end()) {
    if (it->second != "A" && it->second != "in_family_A" && it->second != "none")
      throw Error(ErrorKind::BadSpec, "filter must be A or none");
    spec.filter_family_a = it->second != "none";
    params.erase(it);
  }
  if (family == "pattern") {
    spec.generator = "pattern_family";
    if (auto it = params.find("families"); it != params.end()) {
      spec.families.clear();
      std::stringstream ss(it->second);
      std::string f;
      while (std::getline(ss, f, '+')) spec.families.push_back(f);
      params.erase(it);
    }
    spec.lo = take_int("lo", spec.lo);
    spec.hi = take_int("hi", spec.hi);
    spec.max_vertices = take_int("max_vertices", spec.max_vertices);
  } else if (family == "random") {
    spec.generator = "random_planar";
    spec.sizes = {take_int("n", 20)};
    spec.count = take_int("count", 1);
    spec.seeds = {seed};
    if (auto it = params.find("keep"); it != params.end()) {
      try {
        spec.keep = std::stod(it->second);
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadSpec, "keep must be a number");
      }
      params.erase(it);
    }
  } else if (family == "exhaustive") {
    spec.generator = "exhaustive_small";
    spec.max_n = take_int("max_n", 6);
    spec.min_n = take_int("min_n", 1);
  } else {
    throw Error(ErrorKind::BadSpec, "family must be pattern, random or exhaustive");
  }
  if (!params.empty()) throw Error(ErrorKind::BadSpec, "unknown parameter '" + params.begin()->first + "'");
  auto corpus = generate(spec);
  fs::create_directories(out_dir);
  Json manifest{{"spec", to_json(spec)}, {"tool_version", kToolVersion}, {"graphs", Json::array()}};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::ostringstream name;
    name << "g" << std::setw(5) << std::setfill('0') << i << "_" << graph_id(corpus[i].graph) << ".plg";
    write_file((fs::path(out_dir) / name.str()).string(),
               "# " + corpus[i].label + "\n" + to_plg(corpus[i].graph));
    manifest["graphs"].push_back({{"file", name.str()}, {"label", corpus[i].label}, {"graph_id", graph_id(corpus[i].graph)}});
  }
  write_file((fs::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  std::cout << corpus.size() << " graphs written to " << out_dir << "\n";
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dlab: plane graph discharging and list-colouring laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string file, lists, json_out, target, profile = "stated", id, spec, dump = "lemma-hits", family, params,
                                         out_dir;
  std::vector<std::string> pins;
  bool ledger = false, strict = false, certificate = false;
  std::uint64_t seed = 1;

  auto* faces = app.add_subcommand("faces", "face table");
  faces->add_option("file", file, "PLG file")->required();
  auto* membership = app.add_subcommand("membership", "family A verdict and witness");
  membership->add_option("file", file, "PLG file")->required();
  auto* forbidden = app.add_subcommand("forbidden", "scan for forbidden configurations");
  forbidden->add_option("file", file, "PLG file")->required();
  auto* structural = app.add_subcommand("structural", "structural checklist inside the outer triangle");
  structural->add_option("file", file, "PLG file")->required();
  auto* dis = app.add_subcommand("discharge", "charges, transfers and case verdicts");
  dis->add_option("file", file, "PLG file")->required();
  dis->add_flag("--ledger", ledger, "print every transfer");
  dis->add_option("--json", json_out, "write the JSON report here");
  dis->add_flag("--strict", strict, "treat rule ambiguities and unclassified elements as errors");
  auto* color = app.add_subcommand("color", "list colouring with optional pinned vertices");
  color->add_option("file", file, "PLG file")->required();
  color->add_option("--lists", lists, "list file")->required();
  color->add_option("--pin", pins, "pin a vertex, v=c")->take_all();
  auto* red = app.add_subcommand("reducible", "exhaustive reducibility of a configuration");
  red->add_option("config", target, "catalogued name such as C(3,4), W5, H, or a PLG file")->required();
  red->add_option("--profile", profile, "list sizes, e.g. s:4,u:3,rest:2, or 'stated'")->required();
  red->add_flag("--certificate", certificate, "also check the recorded colouring order");
  auto* lemma = app.add_subcommand("lemma", "run a lemma campaign over a corpus");
  lemma->add_option("id", id, "L2.2 L2.3 C3.6 C3.9 C3.10 C3.12 C3.13")->required();
  lemma->add_option("--corpus", spec, "corpus spec JSON file")->required();
  lemma->add_option("--json", json_out, "write the campaign report here");
  lemma->add_option("--dump", dump, "directory for counterexample files");
  lemma->add_option("--seed", seed, "seed for colouring trials");
  auto* gen = app.add_subcommand("gen", "write a corpus of PLG files");
  gen->add_option("family", family, "pattern, random or exhaustive")->required();
  gen->add_option("params", params, "key=value list, e.g. n=30,count=5,keep=0.4")->required();
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kClean : kUsage;
  }

  try {
    if (*faces) return cmd_faces(file);
    if (*membership) return cmd_membership(file);
    if (*forbidden) return cmd_forbidden(file);
    if (*structural) return cmd_structural(file);
    if (*dis) return cmd_discharge(file, ledger, json_out, strict);
    if (*color) return cmd_color(file, lists, pins);
    if (*red) return cmd_reducible(target, profile, certificate);
    if (*lemma) return cmd_lemma(id, spec, json_out, dump, seed);
    if (*gen) return cmd_gen(family, params, seed, out_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
