#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "subprocess.hpp"
#include "support.hpp"

using Json = nlohmann::ordered_json;
using testsupport::command_line;
using testsupport::data_path;
using testsupport::run_command;
using testsupport::RunResult;

namespace {

std::string cli;  // path to the gbskit binary, from argv

RunResult run_gbskit(const std::vector<std::string>& args, bool merge_stderr = false) {
  return run_command(command_line(cli, args), merge_stderr);
}

Json parse_json(const std::string& text) { return Json::parse(text); }

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-gbskit>\n");
    return 1;
  }
  cli = argv[argc - 1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv);
  return ctx.run();
}

TEST_CASE("classify emits the classification report") {
  RunResult r = run_gbskit({"classify", data_path("bs23.graph")});
  REQUIRE(r.exit_code == 0);
  Json j = parse_json(r.out);
  CHECK(j["class"] == "BS23Class");
  CHECK(j["theorem_case"] == 3);
  CHECK(j["certificate"]["modulus"]["num"] == "2");
  CHECK(j["certificate"]["modulus"]["den"] == "3");
  CHECK(j["certificate"]["family"].size() == 10);

  Json z = parse_json(run_gbskit({"classify", data_path("z.graph")}).out);
  CHECK(z["class"] == "TrivialZ");
  CHECK(z["theorem_case"] == "elementary");
  CHECK(z["certificate"].is_null());

  Json solv = parse_json(run_gbskit({"classify", data_path("bs12.graph")}).out);
  CHECK(solv["class"] == "SolvableBS1n");
  CHECK(solv["solvable_n"] == "2");
}

TEST_CASE("word pipeline subcommands") {
  Json nf = parse_json(run_gbskit({"nf", data_path("bs23.graph"), "t a^2 t^-1"}).out);
  CHECK(nf["canonical"] == "a^3");

  Json tl = parse_json(run_gbskit({"tl", data_path("bs23.graph"), "t"}).out);
  CHECK(tl["length"] == 1);
  CHECK(tl["kind"] == "hyperbolic");
  Json tl0 = parse_json(run_gbskit({"tl", data_path("bs23.graph"), "a^5"}).out);
  CHECK(tl0["length"] == 0);
  CHECK(tl0["kind"] == "elliptic");

  Json mod = parse_json(run_gbskit({"modulus", data_path("bs23.graph"), "t^2"}).out);
  CHECK(mod["num"] == "4");
  CHECK(mod["den"] == "9");

  Json com = parse_json(run_gbskit({"commens", data_path("bs23.graph"), "t"}).out);
  CHECK(com["p"] == "2");
  CHECK(com["q"] == "3");
  CHECK(com["vertex"] == "a");
}

TEST_CASE("twisted subcommand merges and certifies") {
  RunResult r = run_gbskit({"twisted", data_path("z.graph"), data_path("z_invert.auto"),
                        data_path("z_small.words"), "--radius", "3"});
  REQUIRE(r.exit_code == 0);
  Json j = parse_json(r.out);
  CHECK(j["automorphism"] == "a->a^-1");
  CHECK(j["respects_delta"] == true);
  CHECK(j["partition"]["classes"].size() == 2);
  CHECK(j["partition"]["radius"] == 3);
  CHECK(j["certificate"].is_null());  // Z is unimodular
  CHECK(j["note"].get<std::string>().find("distinct at radius 3") != std::string::npos);

  RunResult full = run_gbskit({"twisted", data_path("bs23.graph"), data_path("bs23_invert.auto"),
                           data_path("bs23_powers.words"), "--radius", "2"});
  REQUIRE(full.exit_code == 0);
  Json jf = parse_json(full.out);
  CHECK(jf["modulus_lower_bound"]["count"] == 11);
  CHECK_FALSE(jf["certificate"].is_null());
}

TEST_CASE("certify and ses-check") {
  Json cert = parse_json(run_gbskit({"certify", data_path("bs23.graph")}).out);
  CHECK(cert["automorphism"] == "identity");
  CHECK(cert["certificate"]["kind"] == "NonUnimodularRInfinity");
  CHECK(cert["certificate"]["element"] == "t");

  Json none = parse_json(run_gbskit({"certify", data_path("f2xz.graph")}).out);
  CHECK(none["certificate"].is_null());
  CHECK(none["reason"] == "modular image lies in {1, -1}");

  RunResult ses = run_gbskit({"ses-check", data_path("f2xz.graph"), data_path("f2xz_swap.auto"),
                          "--samples", "50", "--seed", "9", "--radius", "3"});
  REQUIRE(ses.exit_code == 0);
  Json js = parse_json(ses.out);
  CHECK(js["samples"] == 50);
  CHECK(js["passes"] == 50);
  CHECK(js["negative_control_ran"] == true);
  CHECK(js["negative_control_distinct"] == true);
}

TEST_CASE("conj-growth probes bounded motion") {
  Json j = parse_json(
      run_gbskit({"conj-growth", data_path("f2xz.graph"), "a", "--radius", "4"}).out);
  REQUIRE(j["sizes"].size() == 5);
  for (const auto& s : j["sizes"]) CHECK(s == 1);
  CHECK(j["stabilized"] == true);
  CHECK(j["max_word_length"] == "1");

  Json grow = parse_json(
      run_gbskit({"conj-growth", data_path("bs23.graph"), "a", "--radius", "3"}).out);
  CHECK(grow["stabilized"] == false);
}

TEST_CASE("exit codes follow the error taxonomy") {
  // 2: input errors, with the offending line number on stderr
  std::string bad = temp_file("gbskit_bad.graph", "vertex a\nedge t : a -> a [0, 3]\n");
  RunResult parse_err = run_gbskit({"classify", bad}, true);
  CHECK(parse_err.exit_code == 2);
  CHECK(parse_err.out.find("line 2") != std::string::npos);
  CHECK(run_gbskit({"nf", data_path("bs23.graph"), "b"}).exit_code == 2);
  CHECK(run_gbskit({"nf", data_path("bs23.graph"), "t^"}).exit_code == 2);

  // 3: automorphism rejected
  CHECK(run_gbskit({"twisted", data_path("bs23.graph"), data_path("bs23_square.auto"),
                data_path("bs23_powers.words")})
            .exit_code == 3);
  std::string missing = temp_file("gbskit_missing.auto", "map a -> a\ninv a -> a\n");
  CHECK(run_gbskit({"certify", data_path("bs23.graph"), missing}).exit_code == 3);

  // 4: precondition unmet
  CHECK(run_gbskit({"ses-check", data_path("bs23.graph"), data_path("bs23_invert.auto")})
            .exit_code == 4);
  CHECK(run_gbskit({"commens", data_path("theta.graph"), "e1"}).exit_code == 2);  // tree letter

  // 5: caps exceeded
  CHECK(run_gbskit({"twisted", data_path("bs23.graph"), data_path("bs23_invert.auto"),
                data_path("bs23_powers.words"), "--radius", "3", "--max-ball", "10"})
            .exit_code == 5);
  CHECK(run_gbskit({"nf", data_path("bs12.graph"), "t^40 a t^-40", "--max-digits", "10"})
            .exit_code == 5);
}

TEST_CASE("environment variable overrides the digit cap") {
  std::string cmd = "GBSKIT_MAX_DIGITS=10 " +
                    command_line(cli, {"nf", data_path("bs12.graph"), "t^40 a t^-40"});
  CHECK(run_command(cmd).exit_code == 5);
  // explicit flag still wins over a permissive environment
  std::string ok = "GBSKIT_MAX_DIGITS=10000 " +
                   command_line(cli, {"nf", data_path("bs12.graph"), "t^40 a t^-40"});
  CHECK(run_command(ok).exit_code == 0);
}

TEST_CASE("text format is a readable rendering of the same data") {
  RunResult r = run_gbskit({"classify", data_path("bs23.graph"), "--format", "text"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("class: BS23Class") != std::string::npos);
  // not a JSON document (the prose note legitimately contains set braces)
  CHECK(r.out.front() != '{');
  CHECK(r.out.find("\"class\"") == std::string::npos);
}

TEST_CASE("reruns and thread counts give byte-identical JSON") {
  std::vector<std::vector<std::string>> cases = {
      {"classify", data_path("bs23.graph")},
      {"nf", data_path("bs23.graph"), "t a^2 t^-1"},
      {"twisted", data_path("f2xz.graph"), data_path("f2xz_swap.auto"),
       data_path("z_small.words"), "--radius", "2"},
      {"ses-check", data_path("f2xz.graph"), data_path("f2xz_swap.auto"), "--samples", "50"},
      {"conj-growth", data_path("bs23.graph"), "a", "--radius", "3"},
  };
  for (const auto& args : cases) {
    RunResult first = run_gbskit(args);
    RunResult second = run_gbskit(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);

    auto threaded = args;
    threaded.push_back("--threads");
    threaded.push_back("1");
    RunResult one = run_gbskit(threaded);
    threaded.back() = "4";
    RunResult four = run_gbskit(threaded);
    CHECK(one.out == four.out);
    CHECK(first.out == four.out);
  }
}
