#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CUBESLICE_TOOL_PATH) + " " + args + " 2>/dev/null";
  std::FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cubeslice-cli-" + std::to_string(::getpid()) +
                                        "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    auto p = (path / name).string();
    std::ofstream(p) << content;
    return p;
  }
  static inline int counter = 0;
};

}  // namespace

TEST_CASE("count: human, csv and json formats") {
  TempDir dir;
  std::string m = dir.file("m.txt", "1 2\n1 1\n");

  auto human = run("count " + m);
  CHECK(human.exit_code == 0);
  CHECK(human.out.find("t = 3") != std::string::npos);

  auto csv = run("count " + m + " --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("2,1,3,") != std::string::npos);

  auto json = run("count " + m + " --format json --witnesses");
  CHECK(json.exit_code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["count"] == 3);
  CHECK(j["witnesses"] == nlohmann::json({0, 1, 2}));
}

TEST_CASE("count with an affine offset") {
  TempDir dir;
  std::string m = dir.file("m.txt", "1 2\n1 1\n");
  std::string c = dir.file("c.txt", "-1\n");
  auto r = run("count " + m + " --offset " + c + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 3);
}

TEST_CASE("malformed inputs exit with code 2") {
  TempDir dir;
  CHECK(run("count " + dir.file("bad1.txt", "2 2\n1 1\n")).exit_code == 2);   // missing row
  CHECK(run("count " + dir.file("bad2.txt", "1 2\n1 1/0\n")).exit_code == 2); // zero denominator
  CHECK(run("count " + dir.file("bad3.txt", "1 2\n1 x\n")).exit_code == 2);   // not a rational
  CHECK(run("count " + dir.file("bad4.txt", "1 1 1\n1\n")).exit_code == 2);   // bad header
  CHECK(run("count /nonexistent/file").exit_code == 2);
  CHECK(run("realizable --k 9 --pattern 1").exit_code == 2);
  CHECK(run("realizable --k 2 --pattern zz").exit_code == 2);
  CHECK(run("construct --json '{\"variant\":\"no-such\"}'").exit_code == 2);
  CHECK(run("knapsack --weights 1,2,x").exit_code == 2);
  CHECK(run("check-theorem nonsense").exit_code == 2);
}

TEST_CASE("table command matches the frozen k = 3 sets") {
  auto r = run("table --k 3 --class general --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("7,excluded,") != std::string::npos);
  CHECK(r.out.find("8,realizable,") != std::string::npos);
  CHECK(r.out.find("unknown") == std::string::npos);

  auto iso = run("table --k 3 --class isometry --format csv");
  CHECK(iso.exit_code == 0);
  for (const char* line : {"5,excluded,", "6,excluded,", "7,excluded,"})
    CHECK(iso.out.find(line) != std::string::npos);
}

TEST_CASE("table output is byte-identical across runs and thread counts") {
  auto a = run("table --k 4 --class general --format json");
  auto b = run("table --k 4 --class general --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto c = run("table --k 4 --class general --format json --threads 3");
  CHECK(a.out == c.out);
}

TEST_CASE("table with a store persists verified witnesses") {
  TempDir dir;
  std::string store = (dir.path / "store.json").string();
  auto first = run("table --k 3 --class general --store " + store + " --format csv");
  CHECK(first.exit_code == 0);
  REQUIRE(fs::exists(store));
  auto j = nlohmann::json::parse(std::ifstream(store));
  CHECK(j["version"] == 1);
  CHECK(j["entries"].size() >= 7);

  // tampering with a stored count makes the next run fail loudly
  j["entries"][0]["t"] = j["entries"][0]["t"].get<int>() + 1;
  std::ofstream(store) << j.dump(2);
  auto second = run("table --k 3 --class general --store " + store);
  CHECK(second.exit_code == 1);
}

TEST_CASE("check-theorem passes on seeded suites") {
  auto r = run("check-theorem gap --k 3 --samples 200 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("violations=0") != std::string::npos);
  auto c = run("check-theorem contraction-gap --k 3 --samples 100 --seed 5 --near-boolean");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("violations=0") != std::string::npos);
}

TEST_CASE("construct writes matrix and claim files") {
  TempDir dir;
  std::string out = (dir.path / "m.txt").string();
  std::string claim = (dir.path / "claim.json").string();
  auto r = run("construct --json '{\"variant\":\"half-plus-one\",\"k\":4}' --out " +
               out + " --claim " + claim + " --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(std::ifstream(claim));
  CHECK(j["t"] == 9);
  CHECK(j["verified"] == true);

  // the emitted matrix file round-trips through count
  auto count = run("count " + out + " --format json");
  CHECK(count.exit_code == 0);
  CHECK(nlohmann::json::parse(count.out)["count"] == 9);

  CHECK(run("construct --json '{\"variant\":\"near-isometry\",\"k\":2}'").exit_code == 2);
}

TEST_CASE("realizable command on known patterns") {
  auto yes = run("realizable --k 3 --pattern 77 --format json");
  CHECK(yes.exit_code == 0);
  auto jy = nlohmann::json::parse(yes.out);
  CHECK(jy["status"] == "realizable");
  CHECK(jy["size"] == 6);

  auto no = run("realizable --k 3 --pattern 7f --format json");
  CHECK(no.exit_code == 0);
  auto jn = nlohmann::json::parse(no.out);
  CHECK(jn["status"] == "not-realizable");
  CHECK(jn["forced_point"].is_number());
}

TEST_CASE("scan commands") {
  auto large = run("scan large --k 3 --format json");
  CHECK(large.exit_code == 0);
  auto j = nlohmann::json::parse(large.out);
  CHECK(j["exact"] == true);
  CHECK(j["realized"] == nlohmann::json({5, 6, 8}));

  auto small = run("scan small --k 1 --format json");
  CHECK(small.exit_code == 0);
  CHECK(nlohmann::json::parse(small.out)["clipped"] == true);
}

TEST_CASE("knapsack command") {
  auto r = run("knapsack --weights 1,1,2 --target 2 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 2);
  CHECK(j["l"] == 3);

  auto neg = run("knapsack --weights -1,1 --target 0 --format json");
  CHECK(neg.exit_code == 0);
  auto jn = nlohmann::json::parse(neg.out);
  CHECK(jn["count"] == 2);
  CHECK(jn.contains("warning"));
}

TEST_CASE("CUBESLICE_THREADS does not change results") {
  TempDir dir;
  std::string m = dir.file("m.txt", "2 6\n1 1/2 -1 0 1 1\n0 1 1 -1/2 0 1\n");
  std::string base = run("count " + m + " --format json").out;
  std::string env1 = "CUBESLICE_THREADS=1 " CUBESLICE_TOOL_PATH;
  std::string env4 = "CUBESLICE_THREADS=4 " CUBESLICE_TOOL_PATH;
  std::FILE* p1 = ::popen((env1 + " count " + m + " --format json").c_str(), "r");
  std::FILE* p4 = ::popen((env4 + " count " + m + " --format json").c_str(), "r");
  REQUIRE(p1);
  REQUIRE(p4);
  std::string o1, o4;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p1)) > 0) o1.append(buf.data(), n);
  while ((n = std::fread(buf.data(), 1, buf.size(), p4)) > 0) o4.append(buf.data(), n);
  ::pclose(p1);
  ::pclose(p4);
  CHECK(o1 == base);
  CHECK(o4 == base);
}
