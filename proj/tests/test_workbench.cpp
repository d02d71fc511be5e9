#include <doctest.h>

#include <string>

#include <json.hpp>

#include "psbck/workbench.hpp"

using psbck::Outcome;
using psbck::Request;

namespace {

std::string corpus(const std::string& file) { return std::string(PSBCK_CORPUS_DIR) + "/" + file; }

Request req(std::string command, std::string kind, std::string file) {
  Request r;
  r.command = std::move(command);
  r.kind = std::move(kind);
  if (!file.empty()) r.files.push_back(corpus(file));
  return r;
}

}  // namespace

TEST_CASE("enum vto lists the operators with their document names") {
  const Outcome o = psbck::run(req("enum", "vto", "ex_2_5.alg"));
  CHECK(o.exit_code == 0);
  CHECK(o.err.empty());
  CHECK(o.out ==
        "algebra A: 4 very true operators\n"
        "  (1 a a a)  = phi1, v1\n"
        "  (1 a b a)  = phi2, v2\n"
        "  (1 a b c)  = phi3, v3\n"
        "  (1 a c c)  = phi4, v4\n");
}

TEST_CASE("json reports carry the schema version") {
  Request r = req("enum", "svto", "ex_6_8.alg");
  r.q = "Q";
  r.json = true;
  const Outcome o = psbck::run(r);
  REQUIRE(o.exit_code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "enum");
  CHECK(j["count"] == 3);
  CHECK(j["restrictions"].size() == 5);
  CHECK(j["restrictions"][3]["index"] == 2);
}

TEST_CASE("exit codes separate property failures from input errors") {
  SUBCASE("invalid tables are a property failure") {
    const Outcome o = psbck::run(req("validate", "", "invalid/not_psbck.alg"));
    CHECK(o.exit_code == 1);
    CHECK(o.out.find("antisymmetry") != std::string::npos);
  }
  SUBCASE("parse errors are input errors with a stable code") {
    const Outcome o = psbck::run(req("validate", "", "invalid/empty.alg"));
    CHECK(o.exit_code == 2);
    CHECK(o.out.empty());
    CHECK(o.err.rfind("error[ParseError]: ", 0) == 0);
    CHECK(o.err.find("no algebra defined") != std::string::npos);
  }
  SUBCASE("a non-normal system cannot be factored out") {
    Request r = req("quotient", "", "ex_2_5.alg");
    r.ds = "B";
    const Outcome o = psbck::run(r);
    CHECK(o.exit_code == 2);
    CHECK(o.err.rfind("error[NotNormal]", 0) == 0);
  }
  SUBCASE("lifting an operator that leaves H") {
    Request r = req("lift", "", "goedel_4.alg");
    r.vto = "glob";
    r.ds = "H";
    CHECK(psbck::run(r).err.rfind("error[NotVds]", 0) == 0);
  }
  SUBCASE("a homomorphism that does not intertwine the operators") {
    Request r = req("factor", "", "ex_2_6.alg");
    r.hom = "psi3";
    r.vto = r.u = "v2";
    CHECK(psbck::run(r).exit_code == 1);
  }
  SUBCASE("usage errors") {
    CHECK(psbck::run(req("frobnicate", "", "ex_2_5.alg")).err.rfind("error[Usage]", 0) == 0);
    Request two = req("props", "", "ex_2_5.alg");
    two.files.push_back(corpus("ex_2_6.alg"));
    CHECK(psbck::run(two).exit_code == 2);
    Request missing = req("enum", "dsv", "ex_2_5.alg");
    CHECK(psbck::run(missing).err == "error[Usage]: missing --vto\n");
  }
}

TEST_CASE("factor through the kernel gives the first isomorphism") {
  Request r = req("factor", "", "ex_2_6.alg");
  r.hom = "psi1";
  r.vto = r.u = "v10";
  r.json = true;
  const auto j = nlohmann::json::parse(psbck::run(r).out);
  CHECK(j["ok"] == true);
  CHECK(j["isomorphic"] == true);
  CHECK(j["classes"].size() == 1);
}

TEST_CASE("valuation compose gives the composite values") {
  Request r = req("valuation", "compose", "ex_2_5.alg");
  r.phi = "phi";
  r.vto = "v2";
  const Outcome o = psbck::run(r);
  CHECK(o.exit_code == 0);
  CHECK(o.out.rfind("phi o v2: 1=0 a=3 b=1 c=3\n", 0) == 0);
}

TEST_CASE("suite over the one-element algebra passes and is repeatable") {
  Request r = req("suite", "", "ex_1_element.alg");
  r.generated = 0;
  const Outcome a = psbck::run(r);
  const Outcome b = psbck::run(r);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("result: pass") != std::string::npos);
  CHECK(a.out.find("FAILED") == std::string::npos);
}
