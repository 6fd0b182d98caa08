#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + BESICOVITCH_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

// Value following "key " on its own line.
std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  }
  return "";
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("besicovitch_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("search examples and verification") {
  TempDir tmp;
  auto r = run("search --norm linf --dim 2 --gen corners -o " + tmp / "corners.json");
  CHECK(r.status == 0);
  CHECK(field(r.out, "cardinality") == "4");
  CHECK(field(r.out, "margin") == "0");
  CHECK(run("verify " + tmp / "corners.json").status == 0);

  r = run("search --norm l2 --dim 2 --gen fib-circle --n 500 --seed 7 -o " + tmp / "pent.json");
  CHECK(r.status == 0);
  CHECK(field(r.out, "cardinality") == "5");
  CHECK(run("verify " + tmp / "pent.json").status == 0);
  const auto cert = nlohmann::json::parse(slurp(tmp / "pent.json"));
  CHECK(cert["seed"] == 7);
  CHECK(cert["mode"] == "float");
  CHECK(cert["margin"].get<double>() >= 1e-9);

  r = run("search --norm l2 --dim 3 --gen icosahedron -o " + tmp / "ico.json");
  CHECK(field(r.out, "cardinality") == "12");
  CHECK(run("verify " + tmp / "ico.json").status == 0);

  // JSON to stdout, report to stderr
  r = run("search --norm l1 --dim 2 --gen cross");
  CHECK(r.status == 0);
  CHECK(has(r.out, "\"cardinality\": 4"));
}

TEST_CASE("search output is deterministic") {
  TempDir tmp;
  const std::string args = "search --norm l2 --dim 2 --gen random-circle --n 400 --seed 3 ";
  CHECK(run(args + "-o " + tmp / "a.json").status == 0);
  CHECK(run(args + "-o " + tmp / "b.json", "BESICOVITCH_THREADS=3").status == 0);
  CHECK(run(args + "--method heuristic --budget 5000 -o " + tmp / "c.json").status == 0);
  CHECK(run(args + "--method heuristic --budget 5000 -o " + tmp / "d.json").status == 0);
  CHECK(slurp(tmp / "a.json") == slurp(tmp / "b.json"));
  CHECK(slurp(tmp / "c.json") == slurp(tmp / "d.json"));
  CHECK(run("verify " + tmp / "c.json").status == 0);
}

TEST_CASE("verify failures") {
  TempDir tmp;
  REQUIRE(run("search --norm l2 --dim 2 --gen polygon --n 5 -o " + tmp / "pent.json").status == 0);
  auto cert = nlohmann::json::parse(slurp(tmp / "pent.json"));
  // move centre 0 inward by 0.2 along its direction
  for (auto& x : cert["centers"][0]) x = x.get<double>() * 0.8;
  spit(tmp / "moved.json", cert.dump(2));
  auto r = run("verify " + tmp / "moved.json");
  CHECK(r.status == 1);
  CHECK(has(r.out, "violation pair 0"));

  const std::string text = slurp(tmp / "pent.json");
  spit(tmp / "truncated.json", text.substr(0, text.size() / 2));
  CHECK(run("verify " + tmp / "truncated.json").status == 2);
  CHECK(run("verify " + tmp / "missing.json").status == 2);
  CHECK(run("verify " + tmp / "pent.json --margin 0.5").status == 1);
}

TEST_CASE("norm command") {
  TempDir tmp;
  spit(tmp / "line.json",
       R"({"norm": "l1", "atoms": [[0], [1], [2]], "weights": [1, 1, 1]})");
  auto r = run("norm " + tmp / "line.json" + " --r 1");
  CHECK(r.status == 0);
  CHECK(field(r.out, "norm") == "4/3");
  CHECK(field(r.out, "argmax") == "1");
  CHECK(field(r.out, "conjugate") == "5/6 4/3 5/6");
  CHECK(field(r.out, "mode") == "exact");

  r = run("norm " + tmp / "line.json" + " --r 1 --json");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["norm"] == "4/3");
  CHECK(j["conjugate"][1] == "4/3");

  spit(tmp / "single.json", R"({"norm": "l2", "atoms": [[0.5, 0.5]], "weights": [3]})");
  r = run("norm " + tmp / "single.json" + " --r 2 --kind open");
  CHECK(field(r.out, "norm") == "1");

  spit(tmp / "line.csv", "# x, weight\n0, 1\n1, 1\n2, 1\n");
  r = run("norm " + tmp / "line.csv" + " --norm l1 --r 1");
  CHECK(field(r.out, "norm") == "4/3");
  r = run("norm " + tmp / "line.csv" + " --norm l1 --r 1 --mode float");
  CHECK(field(r.out, "norm") == "1.3333333333333333");

  CHECK(run("norm " + tmp / "line.json" + " --r 0").status == 2);
  CHECK(run("norm " + tmp / "line.json").status == 2);
}

TEST_CASE("adversarial replay through norm") {
  TempDir tmp;
  REQUIRE(run("search --norm l2 --dim 3 --gen icosahedron -o " + tmp / "ico.json").status == 0);
  auto r = run("adversarial " + tmp / "ico.json" + " --c 0.001 --measure-out " + tmp / "mu.json" +
               " --function-out " + tmp / "f.json");
  CHECK(r.status == 0);
  CHECK(field(r.out, "pass") == "true");
  CHECK(field(r.out, "within_table") == "true");
  const double value = std::stod(field(r.out, "value"));
  CHECK(value > 12 / 1.001);
  CHECK(value <= 12);

  const auto cert = nlohmann::json::parse(slurp(tmp / "ico.json"));
  char radius[64];
  std::snprintf(radius, sizeof radius, "%.17g", cert["radius"].get<double>());
  r = run("norm " + tmp / "mu.json" + " --r " + radius);
  CHECK(r.status == 0);
  const double norm = std::stod(field(r.out, "norm"));
  CHECK(norm > 11.988);
  CHECK(norm <= 12);

  REQUIRE(run("search --norm l2 --dim 2 --gen polygon --n 5 -o " + tmp / "pent.json").status == 0);
  r = run("adversarial " + tmp / "pent.json" + " --c 0.001");
  CHECK(r.status == 0);
  CHECK(std::stod(field(r.out, "value")) > 5 / 1.001);

  REQUIRE(run("search --norm linf --dim 2 --gen corners -o " + tmp / "sq.json").status == 0);
  r = run("adversarial " + tmp / "sq.json" + " --c 1/100");
  CHECK(field(r.out, "c") == "1/100");
  CHECK(field(r.out, "threshold") == "400/101");
}

TEST_CASE("extrapolate and table") {
  TempDir tmp;
  auto r = run("extrapolate --p 2 --N 1");
  CHECK(r.status == 0);
  CHECK(field(r.out, "constant") == "4");
  CHECK(field(r.out, "required_size") == "5");
  r = run("extrapolate --p 3 --N 1");
  CHECK(field(r.out, "constant") == "6");
  CHECK(field(r.out, "required_size") == "7");

  REQUIRE(run("search --norm l2 --dim 2 --gen polygon --n 5 -o " + tmp / "pent.json").status == 0);
  r = run("extrapolate --p 2 --N 1 --certificate " + tmp / "pent.json");
  CHECK(r.status == 0);
  CHECK(field(r.out, "pass") == "true");
  CHECK(run("extrapolate --p 2 --N 2 --certificate " + tmp / "pent.json").status == 2);
  CHECK(run("extrapolate --p 1 --N 1").status == 2);

  r = run("table");
  CHECK(r.status == 0);
  CHECK(has(r.out, "R, any norm"));
  CHECK(has(r.out, "2^d"));
  CHECK(has(r.out, "R^3, l_2"));
  CHECK(has(r.out, "2^{0.401"));
}

TEST_CASE("convert") {
  TempDir tmp;
  REQUIRE(run("search --norm l2 --dim 3 --gen icosahedron -o " + tmp / "ico.json").status == 0);
  CHECK(run("convert " + tmp / "ico.json --to open -o " + tmp / "open.json").status == 0);
  CHECK(run("verify " + tmp / "open.json").status == 0);
  CHECK(run("convert " + tmp / "open.json --to closed -o " + tmp / "closed.json").status == 0);
  auto r = run("verify " + tmp / "closed.json");
  CHECK(r.status == 0);
  CHECK(has(r.out, "cardinality 12"));
  CHECK(run("convert " + tmp / "ico.json --to equal -o " + tmp / "eq.json").status == 0);
  CHECK(run("verify " + tmp / "eq.json").status == 0);
  CHECK(run("convert " + tmp / "ico.json --to closed").status == 2);
  CHECK(run("convert " + tmp / "ico.json --to sideways").status == 2);

  spit(tmp / "mixed.json", R"({"norm": "l1", "kind": "closed", "witness": ["0"],
    "centers": [["-2"], ["3/2"]], "radii": ["2", "3/2"], "margin": "0"})");
  CHECK(run("verify " + tmp / "mixed.json").status == 0);
  r = run("convert " + tmp / "mixed.json --to equal");
  CHECK(r.status == 0);
  const auto eq = nlohmann::json::parse(r.out.substr(0, r.out.rfind('}') + 1));
  CHECK(eq["centers"][0][0] == "-1");
  CHECK(eq["centers"][1][0] == "1");
  CHECK(eq["radius"] == "1");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").status == 2);
  CHECK(run("search --gen nowhere --dim 2").status == 2);
  CHECK(run("search --norm linf --gen corners").status == 2);
  CHECK(run("search --norm linf --dim 2 --gen corners --margin 0.1").status == 2);
  CHECK(run("search --norm l2 --dim 2 --gen fib-circle --n 3000").status == 2);
  CHECK(run("search --norm l2 --dim 2 --gen fib-circle --mode exact").status == 2);
  CHECK(run("search --norm l2 --dim 3 --gen fib-circle").status == 2);
  CHECK(run("search --norm lp --dim 2 --gen corners").status == 2);
  CHECK(run("search --bogus").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("other norms and generators") {
  TempDir tmp;
  auto r = run("search --norm polytope --vertices '[[1,0],[1,1],[0,1],[-1,0],[-1,-1],[0,-1]]' "
               "--gen lattice --steps 3 -o " + tmp / "hex.json");
  CHECK(r.status == 0);
  CHECK(std::stoi(field(r.out, "cardinality")) <= 5);
  CHECK(run("verify " + tmp / "hex.json").status == 0);

  r = run("search --norm lp --p 1.5 --dim 2 --gen corners -o " + tmp / "lp.json");
  CHECK(r.status == 0);
  CHECK(field(r.out, "mode") == "float");
  CHECK(run("verify " + tmp / "lp.json").status == 0);

  r = run("search --norm l2 --dim 2 --gen lattice --steps 4 --mode exact -o " + tmp / "l2.json");
  CHECK(r.status == 0);
  CHECK(field(r.out, "mode") == "exact");
  CHECK(std::stoi(field(r.out, "cardinality")) <= 5);

  spit(tmp / "cands.json", R"({"anchor": [0, 0], "radius": 1,
    "points": [[1, 0], [-1, 0], [0, 1], [0, -1], [0, 0]]})");
  r = run("search --norm linf --gen file --candidates " + tmp / "cands.json");
  CHECK(r.status == 0);
  CHECK(has(r.out, "cardinality 2"));
  r = run("search --norm l1 --gen file --candidates " + tmp / "cands.json");
  CHECK(has(r.out, "cardinality 4"));

  r = run("search --norm l2 --dim 3 --gen fib-sphere --n 300 -o " + tmp / "sph.json");
  CHECK(r.status == 0);
  CHECK(std::stoi(field(r.out, "cardinality")) <= 12);
}
