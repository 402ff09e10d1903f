#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPERRES_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hyperres-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("cli: construct then analyze") {
  const auto file = scratch("k8.txt");
  REQUIRE(run("construct complete:8,3 -o " + file.string()).code == 0);
  const Run text = run("analyze " + file.string());
  CHECK(text.code == 0);
  CHECK(text.out.find("56") != std::string::npos);

  const Run js = run("analyze " + file.string() + " --json --sunflower 6 7");
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["size"] == 56);
  CHECK(j["nu"] == 2);
  CHECK(j["resilience"]["max_t"] == 2);
  REQUIRE(j["sunflowers"].size() == 2);
  CHECK_FALSE(j["sunflowers"][0]["witness"].is_null());
  CHECK(j["sunflowers"][1]["witness"].is_null());

  const Run piped = run("construct fixture | " + std::string(HYPERRES_CLI) +
                        " analyze - --json");
  REQUIRE(piped.code == 0);
  CHECK(nlohmann::json::parse(piped.out)["nu"] == 2);
}

TEST_CASE("cli: input errors exit with 2") {
  const auto bad = scratch("bad.txt");
  {
    std::ofstream(bad) << "3 8\n1 2\n";
  }
  CHECK(run("analyze " + bad.string()).code == 2);
  CHECK(run("analyze /nonexistent/file.txt").code == 2);
  CHECK(run("construct nosuch").code == 2);
  CHECK(run("check nosuch").code == 2);
  CHECK(run("bounds fw --s 2").code == 2);
  CHECK(run("bounds nosuch").code == 2);
  CHECK(run("search --k 3 --s 1 --t 5 --max-n 6").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("cli: bounds") {
  Run r = run("bounds el --k 4");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == "41");
  r = run("bounds fw --s 21");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["decimal"] == "112675.5");
  r = run("bounds lovasz --k 3 --s 2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["as_printed"]["value"] == "36");
  CHECK(j["as_corollary"]["value"] == "216");
  r = run("bounds emc --n 9 --k 3 --s 2");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == "56");
}

TEST_CASE("cli: search and verify exit codes") {
  Run r = run("search --k 2 --s 2 --max-n 6 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["best_size"] == 10);
  CHECK(j["exhausted"] == true);
  CHECK(run("search --k 2 --s 2 --max-n 6 --mode verify_unique --target 10")
            .code == 0);
  CHECK(run("search --k 2 --s 2 --max-n 6 --mode verify_target --target 11")
            .code == 1);
  CHECK(run("search --k 3 --s 2 --lower-bound").code == 0);

  const auto dir = scratch("witnesses");
  std::filesystem::remove_all(dir);
  REQUIRE(run("search --k 3 --s 1 --max-n 6 --out-dir " + dir.string()).code ==
          0);
  CHECK(std::filesystem::exists(dir / "witness-1.txt"));
}

TEST_CASE("cli: quick check") {
  const Run r = run("check quick --json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["passed"] == true);
}
