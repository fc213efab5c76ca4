#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <string>

#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string output;
};

// Runs the installed binary through the shell, merging stderr into stdout.
Run run_cli(const std::string& args) {
  const std::string cmd = std::string(MONIDEAL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: algebra subcommands") {
  CHECK(run_cli("--ring x,y mingen \"(x, x^2, x*y^5)\"").output == "(x)\n");
  CHECK(run_cli("--ring x,y power \"(x, y)\" --t 2").output ==
        "(x^2, x*y, y^2)\n");
  CHECK(run_cli("--ring x,y colon \"(x^2, x*y)\" x").output == "(x, y)\n");
  CHECK(run_cli("--ring x,y colon \"(x^2, x*y)\" \"(x, y)\"").output ==
        "(x)\n");
  CHECK(run_cli("--ring x,y,z intersect \"(x, y)\" \"(x^2, z)\"").output ==
        "(x^2, x*z, y*z)\n");
  CHECK(run_cli("--ring x,y radical \"(x^4, y^2)\"").output == "(x, y)\n");
  CHECK(run_cli("--ring x,y decompose \"(x^2, x*y)\"").output ==
        "[(x), (y, x^2)]\n");
  CHECK(run_cli("--ring x,y socle \"(x^2, x*y)\"").output == "(x)\n");
  CHECK(run_cli("--ring x,y corners \"(x^2, x*y, y^3)\"").output ==
        "{x, y^2}\n");
  CHECK(run_cli("--ring x,y corners \"(x^2, x*y, y^3)\" --exhaustive").output ==
        "{x, y^2}\n");
}

TEST_CASE("cli: associated primes") {
  const Run r = run_cli("--ring x,y ass \"(x^2, x*y)\"");
  CHECK(r.status == 0);
  CHECK(r.output == "{(x), (x, y)}\n");

  CHECK(run_cli("--ring x,y ass \"(x^2, x*y)\" --verify").status == 0);

  const Run powered = run_cli("--ring x,y,z ass \"(x^3, x*y*z, y^2*z)\" --t 3");
  CHECK(powered.output == "{(x, y), (x, z), (x, y, z)}\n");

  const Run seq = run_cli("--ring x,y,z ass-seq \"(x^3, x*y*z, y^2*z)\" --smax 3");
  CHECK(seq.status == 0);
  CHECK(contains(seq.output, "s=1: {(x, y), (x, z)}"));
  CHECK(contains(seq.output, "s=3: {(x, y), (x, z), (x, y, z)}"));
  CHECK(contains(seq.output, "observed stable from s=3"));
}

TEST_CASE("cli: json output is stable and machine readable") {
  const Run r = run_cli("--ring x,y --json ass \"(x^2, x*y)\"");
  CHECK(r.status == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc == nlohmann::json::parse(R"([["x"], ["x", "y"]])"));

  const Run ideal = run_cli("--ring x,y --json mingen \"(x, x^2)\"");
  const nlohmann::json idoc = nlohmann::json::parse(ideal.output);
  CHECK(idoc["text"] == "(x)");
  CHECK(idoc["generators"] == nlohmann::json::array({"x"}));

  const Run rep = run_cli("--ring x,y --json check squarefree \"(x*y)\"");
  const nlohmann::json rdoc = nlohmann::json::parse(rep.output);
  CHECK(rdoc["conclusion"] == "prime-not-associated");
  CHECK(rdoc["oracle_agreement"] == true);
}

TEST_CASE("cli: printed ideals re-parse to the same value") {
  const std::string first =
      run_cli("--ring x,y,z power \"(x^2*z, y)\" --t 3").output;
  REQUIRE(!first.empty());
  std::string trimmed = first;
  trimmed.pop_back();  // newline
  const std::string again =
      run_cli("--ring x,y,z mingen \"" + trimmed + "\"").output;
  CHECK(first == again);
}

TEST_CASE("cli: criterion checks and exit codes") {
  const Run chain = run_cli(
      "--ring x,y,z,t check chain "
      "\"(x^5*y*z^4, x^4*z^3*t^2, x^3*y^2*z^2, x^2*z*t^3)\"");
  CHECK(chain.status == 0);
  CHECK(contains(chain.output, "witness pair (x, z)"));

  CHECK(run_cli("--ring x,y check chain \"(x^2, y^2)\"").status == 2);

  const Run colon_b = run_cli(
      "--ring x,y,z check colon-b \"(x^3, x*y*z, y^2*z)\" --t 2 "
      "--step z --step y --step x^4 --ell 2");
  CHECK(colon_b.status == 0);
  CHECK(contains(colon_b.output, "prime-not-associated"));

  const Run colon_a = run_cli(
      "--ring x,y,z check colon-a \"(x^3, x*y*z, y^2*z)\" --t 1 "
      "--step \"z=(x^3)\"");
  CHECK(colon_a.status == 0);
  CHECK(contains(colon_a.output, "equivalence-established"));
  CHECK(contains(colon_a.output, "oracle agreement: yes"));

  // Zero auxiliary: hypotheses fail, criterion inapplicable.
  const Run inapplicable = run_cli(
      "--ring x,y check colon-a \"(y)\" --t 1 --step \"x=(0)\"");
  CHECK(inapplicable.status == 2);
  CHECK(contains(inapplicable.output, "not-applicable"));

  const Run split = run_cli(
      "--ring x,y,z check split \"(x^11*z, x^5*y^4, x^6*y^2, y^11*z)\" "
      "--u z --t 3");
  CHECK(split.status == 0);
  CHECK(contains(split.output, "equivalence-established"));

  const Run corner = run_cli(
      "--ring x,y check corner-div \"(x^3, x*y)\" --corner x^2 --var x");
  CHECK(corner.status == 0);
  CHECK(contains(corner.output, "variable-divides-corner = true"));

  const Run sf = run_cli("--ring x,y,z check squarefree \"(x, y, z)\"");
  CHECK(sf.status == 0);
  CHECK(contains(sf.output, "equivalence-established"));
}

TEST_CASE("cli: graph ideals") {
  const Run edge = run_cli("graph edge cycle:5");
  CHECK(edge.status == 0);
  CHECK(contains(edge.output, "x1*x2"));
  CHECK(contains(edge.output, "x1*x5"));

  const Run cover = run_cli("graph cover \"graph 3; 1-2 2-3\"");
  CHECK(cover.status == 0);
  CHECK(cover.output == "(x2, x1*x3)\n");

  const Run wheel = run_cli("--json graph cover wheel:6");
  CHECK(wheel.status == 0);
  const nlohmann::json doc = nlohmann::json::parse(wheel.output);
  CHECK(doc["ideal"]["generators"].size() == 6);
}

TEST_CASE("cli: script mode") {
  const std::string path = "/tmp/monideal_cli_test_script.txt";
  {
    std::ofstream f(path);
    f << "ring x, y\n"
         "let A = (x^2, x*y)\n"
         "ass A\n";
  }
  const Run r = run_cli("script " + path);
  CHECK(r.status == 0);
  CHECK(contains(r.output, "{(x), (x, y)}"));

  const Run j = run_cli("--json script " + path);
  CHECK(j.status == 0);
  const nlohmann::json doc = nlohmann::json::parse(j.output);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("cli: selftest smoke run") {
  const Run r = run_cli("selftest --cases 3 --seed 11 --suite support-union");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "support-union"));
  CHECK(run_cli("selftest --cases 1 --suite no-such").status == 1);
}

TEST_CASE("cli: kernel selection flag") {
  CHECK(run_cli("--kernels scalar --ring x,y mingen \"(x)\"").status == 0);
  const Run bad = run_cli("--kernels quantum --ring x,y mingen \"(x)\"");
  CHECK(bad.status == 1);
  CHECK(contains(bad.output, "not available"));
}

TEST_CASE("cli: errors exit with status 1") {
  const Run parse = run_cli("--ring x,y mingen \"(q)\"");
  CHECK(parse.status == 1);
  CHECK(contains(parse.output, "parse error"));

  const Run noring = run_cli("mingen \"(x)\"");
  CHECK(noring.status == 1);
  CHECK(contains(noring.output, "--ring"));

  const Run capped =
      run_cli("--cap-subsets 2 --ring x,y,z ass \"(x^2, y^2, z^2)\"");
  CHECK(capped.status == 1);
  CHECK(contains(capped.output, "cap exceeded"));

  CHECK(run_cli("no-such-subcommand").status == 1);
  CHECK(run_cli("reproduce nothing-here").status == 1);
}

TEST_CASE("cli: help text lists caps and subcommands") {
  const Run help = run_cli("--help");
  CHECK(help.status == 0);
  CHECK(contains(help.output, "--cap-gens"));
  CHECK(contains(help.output, "200000"));
  CHECK(contains(help.output, "--cap-subsets"));
  CHECK(contains(help.output, "reproduce"));
  CHECK(contains(help.output, "ass-seq"));
}

TEST_CASE("cli: every shipped reproduce id recomputes cleanly") {
  // Fast ones first, then the graph-based ones.
  for (const std::string id :
       {std::string("chain4"), std::string("split3"),
        std::string("app2 --t 2 --smax 3"), std::string("app2"),
        std::string("oddcycle-edge"), std::string("oddcycle-cover"),
        std::string("wheel"), std::string("wheelsplit")}) {
    CAPTURE(id);
    const Run r = run_cli("reproduce " + id);
    CHECK(r.status == 0);
    CHECK_FALSE(contains(r.output, "[FAIL]"));
  }
}
