#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "ltsd/aut_io.hpp"
#include "ltsd/confluence.hpp"
#include "ltsd/decompose_async.hpp"
#include "ltsd/decompose_sync.hpp"
#include "ltsd/equivalence.hpp"
#include "ltsd/generator.hpp"
#include "ltsd/lts.hpp"
#include "ltsd/product.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ltsd;

namespace {

constexpr int exit_positive = 0;  // ok, equivalent, confluent
constexpr int exit_negative = 1;  // inequivalent, not confluent
constexpr int exit_error = 2;

// Colour for human-readable verdicts: LTSD_COLOR=1 forces it on, =0 off,
// otherwise it follows whether stdout is a terminal.
bool use_color() {
  if (const char* env = std::getenv("LTSD_COLOR")) {
    std::string_view v(env);
    if (v == "1") return true;
    if (v == "0") return false;
  }
  return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::set<action> parse_label_set(const std::string& csv) {
  std::set<action> out;
  std::stringstream ss(csv);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.insert(action::from_text(piece));
  return out;
}

// The split for decomposition: given halves are parsed verbatim, a missing
// half defaults to the rest of the alphabet.
alphabet_partition resolve_partition(const lts& m, const std::optional<std::string>& sigma1,
                                     const std::optional<std::string>& sigma2,
                                     const std::optional<std::string>& partition_file) {
  if (partition_file) {
    if (sigma1 || sigma2)
      throw std::runtime_error("--partition cannot be combined with --sigma1/--sigma2");
    std::ifstream in(*partition_file);
    if (!in) throw std::runtime_error("cannot open partition file " + *partition_file);
    json j = json::parse(in);
    std::set<action> a, b;
    for (const auto& l : j.at("sigma1")) a.insert(action::from_text(l.get<std::string>()));
    for (const auto& l : j.at("sigma2")) b.insert(action::from_text(l.get<std::string>()));
    return alphabet_partition::over(m, std::move(a), std::move(b));
  }
  if (!sigma1 && !sigma2)
    throw std::runtime_error("a partition is required: pass --sigma1/--sigma2 or --partition");
  std::set<action> a = sigma1 ? parse_label_set(*sigma1) : std::set<action>{};
  std::set<action> b = sigma2 ? parse_label_set(*sigma2) : std::set<action>{};
  if (!sigma1)
    for (const action& x : m.alphabet())
      if (!b.count(x)) a.insert(x);
  if (!sigma2)
    for (const action& x : m.alphabet())
      if (!a.count(x)) b.insert(x);
  return alphabet_partition::over(m, std::move(a), std::move(b));
}

json label_array(const std::set<action>& labels) {
  json out = json::array();
  for (const action& a : labels) out.push_back(a.text());
  return out;
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void write_names_file(const fs::path& path, const std::vector<std::string>& names) {
  std::ostringstream out;
  for (std::size_t i = 0; i < names.size(); ++i)
    out << json{{"id", i}, {"name", names[i]}}.dump() << "\n";
  write_text_file(path, out.str());
}

struct decompose_options {
  std::string input;
  std::string mode;
  std::optional<std::string> sigma1, sigma2, partition_file;
  std::size_t capacity = 1;
  bool capacity_given = false;
  std::string out_dir = ".";
};

int run_decompose(const decompose_options& opt) {
  if (opt.mode != "sync" && opt.mode != "async")
    throw std::runtime_error("--mode must be sync or async");
  lts m = read_aut_file(opt.input);
  alphabet_partition p = resolve_partition(m, opt.sigma1, opt.sigma2, opt.partition_file);

  fs::path dir(opt.out_dir);
  fs::create_directories(dir);

  if (opt.mode == "sync") {
    if (opt.capacity_given) throw std::runtime_error("--capacity only applies to --mode async");
    sync_decomposition d = decomp_s(m, p);
    write_text_file(dir / "m1.aut", write_aut(d.m1));
    write_text_file(dir / "m2.aut", write_aut(d.m2));
    write_names_file(dir / "m1.names.jsonl", d.naming1.names);
    write_names_file(dir / "m2.names.jsonl", d.naming2.names);
  } else {
    async_decomposition d = decomp_a(m, p, opt.capacity);
    flattened_queue_lts f1 = flatten(d.m1);
    flattened_queue_lts f2 = flatten(d.m2);
    write_text_file(dir / "m1.aut", write_aut(f1.system));
    write_text_file(dir / "m2.aut", write_aut(f2.system));
    write_names_file(dir / "m1.names.jsonl", f1.names);
    write_names_file(dir / "m2.names.jsonl", f2.names);
  }

  json manifest{{"mode", opt.mode},          {"sigma1", label_array(p.sigma1)},
                {"sigma2", label_array(p.sigma2)}, {"capacity", opt.capacity},
                {"m1", "m1.aut"},            {"m2", "m2.aut"}};
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return exit_positive;
}

// Components recorded in a decomposition manifest, loaded back. The async
// components are stored flattened, so the plain product rebuilds either
// style's composition.
std::pair<lts, lts> load_manifest(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot open manifest " + manifest_path);
  json j = json::parse(in);
  fs::path dir = fs::path(manifest_path).parent_path();
  lts m1 = read_aut_file((dir / j.at("m1").get<std::string>()).string());
  lts m2 = read_aut_file((dir / j.at("m2").get<std::string>()).string());
  return {std::move(m1), std::move(m2)};
}

struct compose_options {
  std::vector<std::string> inputs;
  std::string manifest;
  std::string out_file;
  std::string map_file;
};

int run_compose(const compose_options& opt) {
  std::optional<product_result> prod;
  if (!opt.manifest.empty()) {
    if (!opt.inputs.empty())
      throw std::runtime_error("give either two .aut files or --manifest, not both");
    auto [m1, m2] = load_manifest(opt.manifest);
    prod = sync_product(m1, m2);
  } else {
    if (opt.inputs.size() != 2)
      throw std::runtime_error("compose needs exactly two .aut files or --manifest");
    lts a = read_aut_file(opt.inputs[0]);
    lts b = read_aut_file(opt.inputs[1]);
    prod = sync_product(a, b);
  }

  if (opt.out_file.empty())
    std::cout << write_aut(prod->system);
  else
    write_text_file(opt.out_file, write_aut(prod->system));

  if (!opt.map_file.empty()) {
    std::ostringstream out;
    for (state_id s = 0; s < prod->map.size(); ++s) {
      auto [left, right] = prod->map[s];
      out << json{{"id", s}, {"left", left}, {"right", right}}.dump() << "\n";
    }
    write_text_file(opt.map_file, out.str());
  }
  return exit_positive;
}

std::string ref_text(const state_ref& r) {
  return (r.side == 0 ? "l" : "r") + std::to_string(r.state);
}

json result_json(const equivalence_result& r) {
  json blocks = json::array();
  for (const auto& block : r.blocks) {
    json members = json::array();
    for (const state_ref& m : block) members.push_back(ref_text(m));
    blocks.push_back(std::move(members));
  }
  json out{{"verdict", r.equivalent ? "equivalent" : "inequivalent"},
           {"blocks", std::move(blocks)}};
  if (!r.counterexample.empty()) {
    json steps = json::array();
    for (const counterexample_step& s : r.counterexample)
      steps.push_back(json{{"first", ref_text(s.first)},
                           {"second", ref_text(s.second)},
                           {"action", s.act.text()},
                           {"offering", s.offering == 0 ? "first" : "second"}});
    out["counterexample"] = std::move(steps);
  }
  return out;
}

struct check_options {
  std::string first;
  std::string second;
  std::string manifest;
  bool divergence = false;
  bool as_json = false;
};

int run_check(const check_options& opt) {
  lts a = read_aut_file(opt.first);
  std::optional<lts> b;
  if (!opt.manifest.empty()) {
    if (!opt.second.empty())
      throw std::runtime_error("give either a second .aut file or --manifest, not both");
    auto [m1, m2] = load_manifest(opt.manifest);
    b = sync_product(m1, m2).system;
  } else {
    if (opt.second.empty())
      throw std::runtime_error("check needs a second .aut file or --manifest");
    b = read_aut_file(opt.second);
  }

  equivalence_result r = opt.divergence ? dpbb(a, *b) : branching_bisim(a, *b);
  if (opt.as_json) {
    std::cout << result_json(r).dump(2) << "\n";
  } else if (r.equivalent) {
    std::cout << paint("equivalent", "32") << " (" << r.blocks.size() << " blocks)\n";
  } else {
    std::cout << paint("inequivalent", "31") << "\n";
    for (const counterexample_step& s : r.counterexample) {
      const state_ref& offerer = s.offering == 0 ? s.first : s.second;
      std::cout << "  at (" << ref_text(s.first) << ", " << ref_text(s.second) << "): "
                << ref_text(offerer) << " offers \"" << s.act.text()
                << "\" that the other side cannot answer\n";
    }
  }
  return r.equivalent ? exit_positive : exit_negative;
}

struct confluence_options {
  std::string input;
  std::string sigma1;
  std::string sigma2;
  bool as_json = false;
};

int run_confluence(const confluence_options& opt) {
  lts m = read_aut_file(opt.input);
  confluence_report report =
      is_confluent(m, parse_label_set(opt.sigma1), parse_label_set(opt.sigma2));
  if (opt.as_json) {
    json violations = json::array();
    for (const confluence_violation& v : report.violations)
      violations.push_back(json{{"state", v.state},
                                {"a", v.a.text()},
                                {"b", v.b.text()},
                                {"after_a", v.after_a},
                                {"after_b", v.after_b}});
    std::cout << json{{"confluent", report.confluent}, {"violations", std::move(violations)}}.dump(2)
              << "\n";
  } else if (report.confluent) {
    std::cout << paint("confluent", "32") << "\n";
  } else {
    std::cout << paint("not confluent", "31") << "\n";
    for (const confluence_violation& v : report.violations)
      std::cout << "  at state " << v.state << ": " << v.a.text() << " (to " << v.after_a
                << ") and " << v.b.text() << " (to " << v.after_b
                << ") cannot reach a common state\n";
  }
  return report.confluent ? exit_positive : exit_negative;
}

json pipeline_json(const demo_pipeline_report& p) {
  return json{{"branching_equivalent", p.branching_equivalent},
              {"divergence_preserving", p.divergence_preserving},
              {"product_divergent", p.product_divergent},
              {"product_confluent", p.product_confluent},
              {"product_states", p.product_states},
              {"product_transitions", p.product_transitions}};
}

int run_demo(std::size_t capacity, bool as_json) {
  impossibility_demo_report report = dpbb_impossibility_demo(capacity);
  if (!as_json) {
    std::cout << to_text(report);
    return exit_positive;
  }
  json violations = json::array();
  for (const confluence_violation& v : report.source_confluence.violations)
    violations.push_back(json{{"state", v.state},
                              {"a", v.a.text()},
                              {"b", v.b.text()},
                              {"after_a", v.after_a},
                              {"after_b", v.after_b}});
  json out{{"source_states", report.source.num_states()},
           {"source_transitions", report.source.transitions().size()},
           {"source_divergent", report.source_divergent},
           {"source_confluent", report.source_confluence.confluent},
           {"source_violations", std::move(violations)},
           {"joint", pipeline_json(report.joint)},
           {"queued", pipeline_json(report.queued)}};
  std::cout << out.dump(2) << "\n";
  return exit_positive;
}

struct generate_options {
  state_id states = 2;
  std::uint32_t actions = 2;
  double density = 1.0;
  std::uint64_t seed = 0;
  std::string out_file;
};

int run_generate(const generate_options& opt) {
  generator_params params;
  params.states = opt.states;
  params.actions = opt.actions;
  params.density = opt.density;
  params.seed = opt.seed;
  lts m = generate(params);
  if (opt.out_file.empty())
    std::cout << write_aut(m);
  else
    write_text_file(opt.out_file, write_aut(m));
  return exit_positive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split labelled transition systems into communicating components, "
               "compose them back and check the results"};
  app.require_subcommand(1);

  decompose_options dec;
  auto* decompose = app.add_subcommand(
      "decompose", "split a system into two components over an alphabet partition");
  decompose->add_option("input", dec.input, "source .aut file")->required();
  decompose->add_option("--mode", dec.mode, "communication style: sync or async")->required();
  std::string dec_sigma1, dec_sigma2, dec_partition;
  auto* s1_opt = decompose->add_option("--sigma1", dec_sigma1, "comma-separated labels of half 1");
  auto* s2_opt = decompose->add_option("--sigma2", dec_sigma2, "comma-separated labels of half 2");
  auto* pf_opt = decompose->add_option("--partition", dec_partition,
                                       "JSON file with sigma1 and sigma2 label arrays");
  auto* cap_opt = decompose->add_option("--capacity", dec.capacity,
                                        "queue capacity for async components (default 1)");
  decompose->add_option("--out", dec.out_dir, "output directory (default .)");

  compose_options comp;
  auto* compose = app.add_subcommand("compose", "build the product of two components");
  compose->add_option("inputs", comp.inputs, "two component .aut files");
  compose->add_option("--manifest", comp.manifest, "manifest.json of a decomposition");
  compose->add_option("--out", comp.out_file, "product .aut file (default stdout)");
  compose->add_option("--map", comp.map_file, "write product state origins as JSON lines");

  check_options chk;
  auto* check = app.add_subcommand("check", "decide behavioural equivalence of two systems");
  check->add_option("first", chk.first, "first .aut file")->required();
  check->add_option("second", chk.second, "second .aut file");
  check->add_option("--manifest", chk.manifest,
                    "compare against the recomposed product of this manifest");
  check->add_flag("--divergence", chk.divergence,
                  "require agreement on divergence inside equivalence blocks");
  check->add_flag("--json", chk.as_json, "machine-readable verdict");

  confluence_options conf;
  auto* confluence = app.add_subcommand(
      "confluence", "check the diamond property over two disjoint action sets");
  confluence->add_option("input", conf.input, "source .aut file")->required();
  confluence->add_option("--sigma1", conf.sigma1, "comma-separated first action set")->required();
  confluence->add_option("--sigma2", conf.sigma2, "comma-separated second action set")->required();
  confluence->add_flag("--json", conf.as_json, "machine-readable report");

  std::size_t demo_capacity = 1;
  bool demo_json = false;
  auto* demo = app.add_subcommand(
      "demo-dpbb", "show a system whose decompositions cannot preserve divergence");
  demo->add_option("--capacity", demo_capacity, "queue capacity for the queued pipeline");
  demo->add_flag("--json", demo_json, "machine-readable report");

  generate_options gen;
  auto* generate = app.add_subcommand("generate", "produce a random system");
  generate->add_option("--states", gen.states, "number of states (default 2)");
  generate->add_option("--actions", gen.actions, "number of visible labels (default 2)");
  generate->add_option("--density", gen.density, "extra transitions per state (default 1.0)");
  generate->add_option("--seed", gen.seed, "random seed (default 0)");
  generate->add_option("--out", gen.out_file, "output .aut file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (decompose->parsed()) {
      if (s1_opt->count() > 0) dec.sigma1 = dec_sigma1;
      if (s2_opt->count() > 0) dec.sigma2 = dec_sigma2;
      if (pf_opt->count() > 0) dec.partition_file = dec_partition;
      dec.capacity_given = cap_opt->count() > 0;
      return run_decompose(dec);
    }
    if (compose->parsed()) return run_compose(comp);
    if (check->parsed()) return run_check(chk);
    if (confluence->parsed()) return run_confluence(conf);
    if (demo->parsed()) return run_demo(demo_capacity, demo_json);
    if (generate->parsed()) return run_generate(gen);
    throw std::runtime_error("no subcommand given");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
}
