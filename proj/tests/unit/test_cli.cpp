#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "ltsd/aut_io.hpp"
#include "ltsd/lts.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("ltsd-cli-" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct run_result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

run_result run_cli(const std::string& args, const char* color = "0") {
  fs::path out_path = scratch() / "stdout.txt";
  fs::path err_path = scratch() / "stderr.txt";
  std::string cmd = std::string("LTSD_COLOR=") + color + " \"" + LTSD_CLI_PATH + "\" " + args +
                    " >" + out_path.string() + " 2>" + err_path.string();
  int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  run_result r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

const std::string loop_aut =
    "des (0,3,2)\n"
    "(0,\"a1\",1)\n"
    "(1,\"a2\",0)\n"
    "(1,\"b1\",0)\n";

fs::path loop_file() {
  fs::path p = scratch() / "loop.aut";
  std::ofstream(p, std::ios::binary) << loop_aut;
  return p;
}

const std::string golden_m1 =
    "des (0,9,6)\n"
    "(0,\"a1\",4)\n"
    "(0,\"c_{0_u,0_d}\",2)\n"
    "(1,\"a2\",5)\n"
    "(1,\"c_{1_u,1_d}\",3)\n"
    "(2,\"!c_{0_d,0_u}\",0)\n"
    "(3,\"!c_{1_d,1_u}\",1)\n"
    "(3,\"!t_{0_d}\",2)\n"
    "(4,\"t_{1_u}\",1)\n"
    "(5,\"t_{0_u}\",0)\n";

const std::string golden_product =
    "des (0,10,7)\n"
    "(0,\"a1\",1)\n"
    "(0,\"tau\",2)\n"
    "(1,\"tau\",3)\n"
    "(2,\"tau\",0)\n"
    "(3,\"a2\",4)\n"
    "(3,\"tau\",5)\n"
    "(4,\"tau\",0)\n"
    "(5,\"b1\",6)\n"
    "(5,\"tau\",3)\n"
    "(6,\"tau\",2)\n";

}  // namespace

TEST_CASE("decompose writes the component files and a manifest") {
  fs::path src = loop_file();
  fs::path dir = scratch() / "sync1";
  auto r = run_cli("decompose " + src.string() + " --mode sync --sigma1 a1,a2 --out " +
                   dir.string());
  REQUIRE(r.exit_code == 0);

  CHECK(slurp(dir / "m1.aut") == golden_m1);
  CHECK(ltsd::parse_aut(slurp(dir / "m2.aut")).num_states() == 5);

  json manifest = json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest.at("mode") == "sync");
  CHECK(manifest.at("sigma1") == json::array({"a1", "a2"}));
  CHECK(manifest.at("sigma2") == json::array({"b1"}));  // complement default
  CHECK(manifest.at("capacity") == 1);
  CHECK(manifest.at("m1") == "m1.aut");
  CHECK(manifest.at("m2") == "m2.aut");

  std::istringstream names(slurp(dir / "m1.names.jsonl"));
  std::string line;
  REQUIRE(std::getline(names, line));
  CHECK(json::parse(line) == json{{"id", 0}, {"name", "0_u"}});

  // rerunning is byte-stable
  fs::path dir2 = scratch() / "sync2";
  REQUIRE(run_cli("decompose " + src.string() + " --mode sync --sigma1 a1,a2 --out " +
                  dir2.string())
              .exit_code == 0);
  for (const char* name : {"m1.aut", "m2.aut", "m1.names.jsonl", "m2.names.jsonl",
                           "manifest.json"})
    CHECK(slurp(dir / name) == slurp(dir2 / name));
}

TEST_CASE("a partition file replaces the sigma flags") {
  fs::path src = loop_file();
  fs::path part = scratch() / "partition.json";
  std::ofstream(part) << json{{"sigma1", {"a1", "a2"}}, {"sigma2", {"b1"}}}.dump();
  fs::path dir = scratch() / "sync3";
  auto r = run_cli("decompose " + src.string() + " --mode sync --partition " + part.string() +
                   " --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(dir / "m1.aut") == golden_m1);
}

TEST_CASE("compose rebuilds the product from files or a manifest") {
  fs::path src = loop_file();
  fs::path dir = scratch() / "sync_compose";
  REQUIRE(run_cli("decompose " + src.string() + " --mode sync --sigma1 a1,a2 --out " +
                  dir.string())
              .exit_code == 0);

  auto direct = run_cli("compose " + (dir / "m1.aut").string() + " " +
                        (dir / "m2.aut").string());
  REQUIRE(direct.exit_code == 0);
  CHECK(direct.out == golden_product);

  auto via_manifest = run_cli("compose --manifest " + (dir / "manifest.json").string());
  REQUIRE(via_manifest.exit_code == 0);
  CHECK(via_manifest.out == direct.out);

  fs::path out_file = scratch() / "product.aut";
  fs::path map_file = scratch() / "product.map.jsonl";
  auto to_file = run_cli("compose --manifest " + (dir / "manifest.json").string() + " --out " +
                         out_file.string() + " --map " + map_file.string());
  REQUIRE(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(out_file) == golden_product);

  std::istringstream map(slurp(map_file));
  std::string line;
  REQUIRE(std::getline(map, line));
  CHECK(json::parse(line) == json{{"id", 0}, {"left", 0}, {"right", 0}});
}

TEST_CASE("check reports equivalence with block count and exit code") {
  fs::path src = loop_file();
  fs::path dir = scratch() / "sync_check";
  REQUIRE(run_cli("decompose " + src.string() + " --mode sync --sigma1 a1,a2 --out " +
                  dir.string())
              .exit_code == 0);
  fs::path prod = scratch() / "check_product.aut";
  REQUIRE(run_cli("compose --manifest " + (dir / "manifest.json").string() + " --out " +
                  prod.string())
              .exit_code == 0);

  auto plain = run_cli("check " + src.string() + " " + prod.string());
  CHECK(plain.exit_code == 0);
  CHECK(plain.out == "equivalent (2 blocks)\n");

  auto against_manifest =
      run_cli("check " + src.string() + " --manifest " + (dir / "manifest.json").string());
  CHECK(against_manifest.exit_code == 0);
  CHECK(against_manifest.out == plain.out);

  auto strict = run_cli("check --divergence " + src.string() + " " + prod.string());
  CHECK(strict.exit_code == 1);
  CHECK(strict.out.find("inequivalent") == 0);
  CHECK(strict.out.find("cannot answer") != std::string::npos);

  auto as_json = run_cli("check --json " + src.string() + " " + prod.string());
  CHECK(as_json.exit_code == 0);
  json verdict = json::parse(as_json.out);
  CHECK(verdict.at("verdict") == "equivalent");
  REQUIRE(verdict.at("blocks").size() == 2);
  CHECK(verdict.at("blocks")[0][0] == "l0");
  CHECK(verdict.count("counterexample") == 0);

  auto strict_json = run_cli("check --divergence --json " + src.string() + " " + prod.string());
  CHECK(strict_json.exit_code == 1);
  json strict_verdict = json::parse(strict_json.out);
  CHECK(strict_verdict.at("verdict") == "inequivalent");
  REQUIRE(strict_verdict.at("counterexample").size() == 1);
  CHECK(strict_verdict.at("counterexample")[0].at("action") == "a1");
}

TEST_CASE("colour control") {
  fs::path src = loop_file();
  auto plain = run_cli("check " + src.string() + " " + src.string());
  CHECK(plain.out.find('\x1b') == std::string::npos);

  auto forced = run_cli("check " + src.string() + " " + src.string(), "1");
  CHECK(forced.out.find("\x1b[32m") != std::string::npos);
}

TEST_CASE("async decomposition flows through the same pipeline") {
  fs::path src = loop_file();
  fs::path dir = scratch() / "async1";
  auto r = run_cli("decompose " + src.string() + " --mode async --sigma1 a1,a2 --capacity 2 --out " +
                   dir.string());
  REQUIRE(r.exit_code == 0);

  json manifest = json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest.at("mode") == "async");
  CHECK(manifest.at("capacity") == 2);

  // the stored components are already flattened: queue contents show up in names
  std::string names = slurp(dir / "m1.names.jsonl");
  CHECK(names.find("[t_{") != std::string::npos);

  auto check = run_cli("check " + src.string() + " --manifest " +
                       (dir / "manifest.json").string());
  CHECK(check.exit_code == 0);
  CHECK(check.out == "equivalent (2 blocks)\n");
}

TEST_CASE("confluence verdicts and reports") {
  fs::path fork = scratch() / "fork.aut";
  std::ofstream(fork, std::ios::binary) << "des (0,2,3)\n(0,\"a\",1)\n(0,\"b\",2)\n";

  auto bad = run_cli("confluence " + fork.string() + " --sigma1 a --sigma2 b");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("not confluent") == 0);

  auto bad_json = run_cli("confluence --json " + fork.string() + " --sigma1 a --sigma2 b");
  CHECK(bad_json.exit_code == 1);
  json report = json::parse(bad_json.out);
  CHECK(report.at("confluent") == false);
  REQUIRE(report.at("violations").size() == 1);
  CHECK(report.at("violations")[0] ==
        json{{"state", 0}, {"a", "a"}, {"b", "b"}, {"after_a", 1}, {"after_b", 2}});

  fs::path square = scratch() / "square.aut";
  std::ofstream(square, std::ios::binary)
      << "des (0,4,4)\n(0,\"a\",1)\n(0,\"b\",2)\n(1,\"b\",3)\n(2,\"a\",3)\n";
  auto good = run_cli("confluence " + square.string() + " --sigma1 a --sigma2 b");
  CHECK(good.exit_code == 0);
  CHECK(good.out == "confluent\n");
}

TEST_CASE("the demo subcommand summarises both pipelines") {
  auto text = run_cli("demo-dpbb");
  CHECK(text.exit_code == 0);
  CHECK_FALSE(text.out.empty());

  auto as_json = run_cli("demo-dpbb --json");
  REQUIRE(as_json.exit_code == 0);
  json report = json::parse(as_json.out);
  CHECK(report.at("source_states") == 3);
  CHECK(report.at("source_divergent") == false);
  CHECK(report.at("source_confluent") == false);
  CHECK(report.at("joint").at("branching_equivalent") == true);
  CHECK(report.at("joint").at("divergence_preserving") == false);
  CHECK(report.at("joint").at("product_states") == 8);
  CHECK(report.at("joint").at("product_transitions") == 10);
  CHECK(report.at("queued").at("product_states") == 16);
  CHECK(report.at("queued").at("product_transitions") == 18);

  auto roomy = run_cli("demo-dpbb --json --capacity 3");
  REQUIRE(roomy.exit_code == 0);
  json roomy_report = json::parse(roomy.out);
  CHECK(roomy_report.at("queued").at("divergence_preserving") == false);
}

TEST_CASE("generate is deterministic and honours --out") {
  auto first = run_cli("generate --states 5 --actions 2 --density 1.5 --seed 9");
  REQUIRE(first.exit_code == 0);
  auto second = run_cli("generate --states 5 --actions 2 --density 1.5 --seed 9");
  CHECK(first.out == second.out);
  CHECK(ltsd::parse_aut(first.out).num_states() == 5);

  fs::path out = scratch() / "generated.aut";
  auto to_file = run_cli("generate --states 5 --actions 2 --density 1.5 --seed 9 --out " +
                         out.string());
  REQUIRE(to_file.exit_code == 0);
  CHECK(slurp(out) == first.out);
}

TEST_CASE("errors exit with status 2 and a message on stderr") {
  fs::path src = loop_file();

  SUBCASE("no subcommand") {
    auto r = run_cli("");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("unknown subcommand") {
    auto r = run_cli("frobnicate");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("decompose requires a mode") {
    auto r = run_cli("decompose " + src.string());
    CHECK(r.exit_code == 2);
    CHECK_FALSE(r.err.empty());
  }
  SUBCASE("unknown mode") {
    auto r = run_cli("decompose " + src.string() + " --mode mystery --sigma1 a1");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
  }
  SUBCASE("capacity is async-only") {
    auto r = run_cli("decompose " + src.string() + " --mode sync --sigma1 a1,a2 --capacity 2");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("only applies") != std::string::npos);
  }
  SUBCASE("a partition must be given somehow") {
    auto r = run_cli("decompose " + src.string() + " --mode sync");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("partition") != std::string::npos);
  }
  SUBCASE("partition file and sigma flags conflict") {
    fs::path part = scratch() / "conflict.json";
    std::ofstream(part) << json{{"sigma1", {"a1", "a2"}}, {"sigma2", {"b1"}}}.dump();
    auto r = run_cli("decompose " + src.string() + " --mode sync --sigma1 a1 --partition " +
                     part.string());
    CHECK(r.exit_code == 2);
  }
  SUBCASE("missing input file") {
    auto r = run_cli("check does_not_exist.aut " + src.string());
    CHECK(r.exit_code == 2);
    CHECK_FALSE(r.err.empty());
  }
  SUBCASE("parse errors carry the line number") {
    fs::path bad = scratch() / "bad.aut";
    std::ofstream(bad, std::ios::binary) << "des (0,1,2)\n(0,oops,1)\n";
    auto r = run_cli("check " + bad.string() + " " + src.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
  }
  SUBCASE("uncovered labels are rejected") {
    auto r = run_cli("decompose " + src.string() + " --mode sync --sigma1 a1 --sigma2 b1");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("compose wants exactly two inputs") {
    auto r = run_cli("compose " + src.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("exactly two") != std::string::npos);
  }
}

TEST_CASE("help is not an error") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("decompose --help").exit_code == 0);
}
