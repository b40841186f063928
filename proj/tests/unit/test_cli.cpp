#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "vpg/representation_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "vpgkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = vpg::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return std::string(GOLDEN_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "vpgkit_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("golden outputs on a hand-built instance") {
  const auto small = golden("small.json");
  auto r = cli({"graph", "--input", small});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden("small.edges")));
  r = cli({"solve", "--exact", "--problem", "is", "-i", small});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden("small.is")));
  CHECK(cli({"solve", "--oracle", "--problem", "is", "-i", small}).out == slurp(golden("small.is")));
  CHECK(cli({"solve", "--exact", "--problem", "ds", "-i", small}).out == slurp(golden("small.ds")));
  CHECK(cli({"solve", "--oracle", "--problem", "ds", "-i", small}).out == slurp(golden("small.ds")));
}

TEST_CASE("schemes agree with the oracle within the ratio") {
  const auto small = golden("small.json");
  auto is = cli({"ptas-is", "--epsilon", "1/2", "-i", small});
  CHECK(is.code == 0);
  CHECK(is.out.rfind("IS 3\n", 0) == 0);
  auto ds = cli({"ptas-ds", "--epsilon", "1/2", "-i", small});
  CHECK(ds.code == 0);
  CHECK(ds.out.rfind("DS 3\n", 0) == 0);
  const auto diag = scratch("diag.csv");
  CHECK(cli({"ptas-ds", "-e", "1/3", "-i", small, "--diagnostics", diag}).code == 0);
  CHECK(slurp(diag).rfind("component,shift,parts,max_width,value\n", 0) == 0);
}

TEST_CASE("validate") {
  const auto small = golden("small.json");
  CHECK(cli({"validate", "-i", small}).code == 0);
  CHECK(cli({"validate", "-i", small, "--max-bends", "0", "--max-load", "1"}).code == 0);
  const auto tight = cli({"validate", "-i", small, "--max-horizontal", "1"});
  CHECK(tight.code == 1);
  CHECK(tight.out.find("a:") != std::string::npos);
  CHECK(cli({"validate", "-i", golden("degenerate.json")}).code == 3);
  const auto broken = scratch("broken.json");
  std::ofstream(broken) << "{\"grid_step\": \"1\", \"paths\": [";
  CHECK(cli({"validate", "-i", broken}).code == 3);
  CHECK(cli({"validate", "-i", scratch("does-not-exist.json")}).code == 3);
}

TEST_CASE("exit codes for flags, limits and budgets") {
  const auto small = golden("small.json");
  CHECK(cli({}).code == 1);
  CHECK(cli({"solve", "-i", small, "--problem", "tsp"}).code == 1);
  CHECK(cli({"ptas-is", "-i", small, "-e", "2"}).code == 1);
  CHECK(cli({"ptas-is", "-i", small, "-e", "0.5"}).code == 3);
  CHECK(cli({"ptas-is", "-i", small, "--max-horizontal", "1"}).code == 1);
  CHECK(cli({"solve", "--exact", "-i", small, "--budget-classes", "1"}).code == 2);
  CHECK(cli({"reduce", "-i", small}).code == 1);
  const auto help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("ptas-ds") != std::string::npos);
}

TEST_CASE("generate, width and reduce round trip") {
  const auto gen = scratch("gen.json");
  CHECK(cli({"generate", "--family", "random", "--n", "15", "--seed", "4", "--columns", "6", "--max-bends", "1",
             "-o", gen})
            .code == 0);
  const auto again = cli({"generate", "--family", "random", "--n", "15", "--seed", "4", "--columns", "6",
                          "--max-bends", "1"});
  CHECK(again.out == slurp(gen));
  CHECK(cli({"validate", "-i", gen, "--max-bends", "1"}).code == 0);
  const auto width = cli({"width", "-i", gen});
  CHECK(width.code == 0);
  CHECK(width.out.rfind("edge,a,b,side_size,mm,mim\n", 0) == 0);
  CHECK(width.err.find("mm_width") != std::string::npos);

  const auto contact = scratch("contact.json");
  CHECK(cli({"generate", "--family", "b0cpg", "--n", "9", "--seed", "3", "-o", contact}).code == 0);
  const auto reduced = scratch("reduced.json");
  const auto splits = scratch("splits.csv");
  CHECK(cli({"reduce", "--ds", "-i", contact, "-o", reduced, "--splits", splits}).code == 0);
  CHECK(slurp(splits).rfind("vertex,q,q_prime,degree,delta\n", 0) == 0);
  CHECK(cli({"validate", "-i", reduced, "--max-bends", "0", "--max-load", "1", "--max-horizontal", "2"}).code == 0);
  CHECK(cli({"reduce", "--is", "-i", gen}).code == 1);

  const auto split = cli({"generate", "--family", "split", "--n", "7", "--seed", "2"});
  CHECK(split.code == 0);
  CHECK(vpg::parse_representation(split.out).size() == 7);
}

TEST_CASE("bench writes one row per size") {
  const auto b = cli({"bench", "--sizes", "20,40", "--rows", "8", "--columns-per-100", "20"});
  CHECK(b.code == 0);
  CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 3);
}
