#include "wiman/report.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace wiman;

namespace {

RunReport without_timings(RunReport r) {
  for (auto& c : r.checks) c.elapsed_ms = 0;
  return r;
}

}  // namespace

TEST_CASE("section names") {
  CHECK(resolve_sections({"all"}) == section_names());
  CHECK(resolve_sections({"character", "algebra", "algebra"}) == std::vector<std::string>{"algebra", "character"});
  CHECK_THROWS_AS(resolve_sections({}), std::invalid_argument);
  CHECK_THROWS_AS(resolve_sections({"algebra", "nope"}), std::invalid_argument);
  CHECK(is_section("monodromy"));
  CHECK_FALSE(is_section("all"));
}

TEST_CASE("status text") {
  for (const Status s : {Status::Pass, Status::Fail, Status::Exploratory}) CHECK(parse_status(to_string(s)) == s);
  CHECK_THROWS_AS(parse_status("PASS"), std::invalid_argument);
}

TEST_CASE("exit code and tally") {
  RunReport r;
  r.checks = {{"a", "", Status::Pass, "", 0}, {"b", "", Status::Exploratory, "", 0}};
  r.summary = tally(r.checks);
  CHECK(r.summary == Summary{1, 0, 1});
  CHECK(exit_code(r) == 0);
  r.checks.push_back({"c", "", Status::Fail, "", 0});
  r.summary = tally(r.checks);
  CHECK(exit_code(r) != 0);
}

TEST_CASE("a run round-trips through JSON") {
  RunConfig config;
  config.sections = {"algebra", "character"};
  config.moduli = {3};
  const RunReport r = run(config);
  CHECK(r.version == kVersion);
  CHECK(r.summary.fail == 0);
  CHECK(exit_code(r) == 0);
  CHECK(parse_report(to_json(r)) == r);
  CHECK(to_text(r).find("[PASS] algebra.unit-powers") != std::string::npos);
  CHECK_THROWS_AS(parse_report("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report("not json"), std::invalid_argument);
}

TEST_CASE("runs are deterministic apart from timings") {
  RunConfig config;
  config.sections = {"congruence"};
  CHECK(without_timings(run(config)) == without_timings(run(config)));
}

TEST_CASE("extra moduli are exploratory") {
  const auto checks = run_section("congruence", RunConfig{{"congruence"}, {4}, 1'000'000, 5});
  bool found = false;
  for (const auto& c : checks) {
    if (c.id == "congruence.mod-4-pair-image") {
      found = true;
      CHECK(c.status == Status::Exploratory);
    }
  }
  CHECK(found);
}
