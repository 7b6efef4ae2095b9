#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedmult/jobs.hpp"
#include "mixedmult/suite.hpp"

using namespace mm;

TEST_CASE("job parsing diagnostics name the offending field") {
  CHECK_THROWS_WITH_AS(parse_job("not json"),
                       doctest::Contains("not valid JSON"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_job("{}"), doctest::Contains("command"),
                       std::invalid_argument);
  JobSpec job = parse_job(R"js({"command":"milnor","exponents":[3,3,3]})js");
  CHECK(job.command == "milnor");

  JobSpec bad = parse_job(R"js({"command":"milnor","exponents":[1,3]})js");
  CHECK_THROWS_WITH_AS(run(bad), doctest::Contains("exponents"),
                       std::invalid_argument);

  JobSpec arity = parse_job(
      R"js({"command":"mixedvolume","polytopes":[
          {"dim":3,"points":[[0,0,0],[1,0,0]]},
          {"dim":3,"points":[[0,0,0],[0,1,0]]}]})js");
  CHECK_THROWS_WITH_AS(run(arity), doctest::Contains("polytopes"),
                       std::invalid_argument);

  JobSpec mono = parse_job(
      R"js({"command":"multseq","ring":{"vars":2},"I":"ideal(x1+x2)"})js");
  CHECK_THROWS_AS(run(mono), std::invalid_argument);
}

TEST_CASE("milnor job end to end") {
  JobSpec job = parse_job(R"js({"command":"milnor","exponents":[3,3,3]})js");
  Report rep = run(job);
  CHECK(rep.status == "ok");
  CHECK(rep.results["display"] == "mu* = (8, 4, 2, 1)");
  CHECK(rep.exit_code() == 0);
  CHECK(rep.to_text().find("mu*") != std::string::npos);
}

TEST_CASE("mixedmult job end to end") {
  JobSpec job = parse_job(
      R"js({"command":"mixedmult","ring":{"vars":2},
          "I":"ideal(x1, x2)","J":["ideal(x1^2, x1*x2, x2^3)"]})js");
  Report rep = run(job);
  CHECK(rep.status == "ok");
  CHECK(rep.results["e_list"] == Json::array({"1", "2"}));
  CHECK(rep.all_pass());
}

TEST_CASE("oracle job") {
  JobSpec job = parse_job(
      R"js({"command":"oracle","variant":"bigraded_free","m":2,"n":1,"degrees":[2]})js");
  Report rep = run(job);
  CHECK(rep.results["values"] == Json::array({"-2", "1"}));
}

TEST_CASE("rees job carries cone data") {
  JobSpec job = parse_job(
      R"js({"command":"rees","ring":{"vars":2},"I":"ideal(x1^2)",
          "quotient_power":3,"embedding":[3,1]})js");
  Report rep = run(job);
  CHECK(rep.status == "ok");
  CHECK(rep.results["e"] == Json::array({"-2", "1"}));
  CHECK(rep.results["region"]["type"] == "cone");
  CHECK(rep.results["embedded_degree"] == "1");
  CHECK(rep.all_pass());
}

TEST_CASE("unstable fits exit with the inconclusive code") {
  // a one-sided cap forces the box to give up early
  JobSpec job = parse_job(
      R"js({"command":"mixedmult","ring":{"vars":2},
          "I":"ideal(x1, x2)","J":["ideal(x1^2, x1*x2, x2^3)"]})js");
  job.box_cap = 3;
  Report rep = run(job);
  CHECK(rep.status == "inconclusive");
  CHECK(rep.exit_code() == 2);
}

TEST_CASE("suite determinism") {
  suite::SuiteOptions opt = suite::SuiteOptions::quick();
  opt.mixed_volume_cases = 3;
  opt.minkowski_poly_cases = 1;
  opt.bridge_cases = 1;
  opt.samuel_cases = 3;
  opt.order_cases = 2;
  opt.inequality_cases = 2;
  opt.rees_verma_cases = 2;
  opt.multseq_primary = 2;
  opt.multseq_other = 2;
  opt.rees_nonstandard_cases = 2;
  opt.milnor_cases = 2;
  opt.dade_pairs = 1;
  opt.dade_primary = 1;
  opt.rigidity_triples = 2;
  Report a = suite::run_suite(7, opt);
  Report b = suite::run_suite(7, opt);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.status == "ok");
}
