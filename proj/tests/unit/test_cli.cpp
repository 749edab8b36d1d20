#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::filesystem::path& scratch() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("grcat-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

Run grcat(const std::string& args, const std::string& env = "") {
  const std::string err_path = (scratch() / "stderr.txt").string();
  const std::string cmd = env + " " + GRCAT_BIN + " " + args + " 2>" + err_path;
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(GRCAT_SOURCE_DIR) + "/fixtures/" + name;
}
std::string data(const std::string& name) {
  return std::string(GRCAT_SOURCE_DIR) + "/tests/data/" + name;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate") {
  const Run ok = grcat("validate " + fixture("final-example.grcat.json"));
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "final-example: ok"));

  const Run bad = grcat("validate " + data("stability-violation.grcat.json"));
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "[stability-arithmetic]"));

  const Run json = grcat("--format json validate " + data("stability-violation.grcat.json"));
  CHECK(json.code == 1);
  CHECK(nlohmann::json::parse(json.out)["violations"][0]["rule"] == "stability-arithmetic");

  CHECK(grcat("validate /nonexistent.grcat.json").code == 2);
  const Run syntax = grcat("validate " + data("broken-syntax.grcat.json"));
  CHECK(syntax.code == 2);
  CHECK(syntax.out.empty());
  CHECK(has(syntax.err, "parse error"));
}

TEST_CASE("measure") {
  const Run table = grcat("measure " + fixture("final-example.grcat.json"));
  CHECK(table.code == 0);
  CHECK(table.out ==
        "object  length  GR measure\n"
        "P1m1    1       {1}\n"
        "S3      1       {1}\n"
        "S2      1       {1}\n"
        "I2m1    2       {1,2}\n"
        "P2      2       {1,2}\n"
        "S1m1    3       {1,2,3}\n"
        "GR chain: {1} < {1,2} < {1,2,3}\n");

  const Run one = grcat("measure " + fixture("final-example.grcat.json") + " --object S1m1");
  CHECK(one.code == 0);
  CHECK(one.out == "{1,2,3}\n");

  CHECK(grcat("measure " + fixture("final-example.grcat.json") + " --object Q").code == 1);

  const Run json = grcat("measure " + fixture("final-example.grcat.json") + " --format json");
  CHECK(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["objects"][3]["object"] == "I2m1");
  CHECK(j["objects"][3]["measure"] == "{1,2}");
  CHECK(j["gr_chain"].size() == 3);
}

TEST_CASE("check") {
  const Run all = grcat("check " + fixture("final-example.grcat.json") + " --suite all");
  CHECK(all.code == 0);
  CHECK(has(all.out, "summary: 12 pass, 0 fail, 0 skipped"));

  const Run gr = grcat("check " + data("corrupted-gr.grcat.json") + " --suite gr-axioms");
  CHECK(gr.code == 1);
  CHECK(has(gr.out, "GR2"));
  CHECK(has(gr.out, "share a measure but not a length"));

  const Run skip = grcat("check " + data("no-ext.grcat.json") + " --suite ext-bound --format json");
  CHECK(skip.code == 0);
  CHECK(nlohmann::json::parse(skip.out)["checks"][0]["status"] == "skipped");

  CHECK(grcat("check " + fixture("final-example.grcat.json") + " --suite nope").code == 2);
}

TEST_CASE("report") {
  const Run fe = grcat("report " + fixture("final-example.grcat.json"));
  CHECK(fe.code == 0);
  CHECK(has(fe.out, "6 indecomposables; max length 3; GR chain of length 3; finite type\n"));
  CHECK(has(fe.out, "Theta_inf: P1m1, S3, S2 (semibrick: true, simple-minded system: true)"));
  CHECK(has(fe.out, "does not test the conjecture itself"));

  const Run db = grcat("report " + fixture("db-window-3.grcat.json"));
  CHECK(db.code == 0);
  CHECK(has(db.out, "36 indecomposables; max length 3;"));
  CHECK(has(db.out, "window of an infinite-type category"));
  CHECK(has(db.out, "max l_X over Theta_inf: 3"));

  const Run one = grcat("report " + data("single-simple.grcat.json") + " --format json");
  CHECK(one.code == 0);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["indecomposables"] == 1);
  CHECK(j["max_length"] == 1);
  CHECK(j["gr_chain"][0]["measure"] == "{1}");

  CHECK(grcat("report " + data("stability-violation.grcat.json")).code == 1);
}

TEST_CASE("generate") {
  const std::string a3 = (scratch() / "a3.grcat.json").string();
  const Run an = grcat("generate an --n 3 --out " + a3);
  CHECK(an.code == 0);
  CHECK(has(an.out, "6 indecomposables"));
  CHECK(nlohmann::json::parse(slurp(a3))["indecomposables"].size() == 6);

  const std::string fe = (scratch() / "fe.grcat.json").string();
  CHECK(grcat("generate fixture --name final-example --out " + fe).code == 0);
  CHECK(slurp(fe) == slurp(fixture("final-example.grcat.json")));

  const Run db = grcat("generate fixture --name db-window --window 2");
  CHECK(db.code == 0);
  CHECK(db.out == slurp(fixture("db-window-2.grcat.json")));
  CHECK(has(db.err, "generated db-window-2"));

  const Run guard = grcat("generate an --n 99");
  CHECK(guard.code == 1);
  CHECK(guard.out.empty());
  CHECK(has(guard.err, "size guard"));

  CHECK(grcat("generate an --n 3", "GRCAT_SIZE_GUARD=an_max=2").code == 1);
  CHECK(grcat("generate fixture --name db-window --window 3", "GRCAT_SIZE_GUARD=window_max=2").code == 1);
  CHECK(grcat("generate an --n 2", "GRCAT_SIZE_GUARD=bogus=1").code == 1);
}

TEST_CASE("usage errors") {
  CHECK(grcat("").code == 2);
  CHECK(grcat("frobnicate").code == 2);
  CHECK(grcat("--format xml measure " + fixture("final-example.grcat.json")).code == 2);
}
