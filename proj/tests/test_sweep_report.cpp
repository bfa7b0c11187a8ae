#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "lident/report.hpp"
#include "lident/sweep.hpp"

using namespace lident;

namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.q_min = 3;
  cfg.q_max = 10;
  cfg.s_max = 4;
  cfg.theorem1_N_s2 = 200000;
  cfg.theorem1_N = 50000;
  return cfg;
}

}  // namespace

TEST_CASE("sweep passes and is deterministic across threading") {
  SweepConfig cfg = small_config();
  cfg.parallel = false;
  SweepResult serial = run_verify_sweep(cfg);
  cfg.parallel = true;
  SweepResult parallel = run_verify_sweep(cfg);

  CHECK(serial.all_passed);
  CHECK(parallel.all_passed);
  REQUIRE(serial.records.size() == parallel.records.size());
  for (std::size_t i = 0; i < serial.records.size(); ++i) {
    const auto& a = serial.records[i];
    const auto& b = parallel.records[i];
    REQUIRE(a.q == b.q);
    REQUIRE(a.chi_index == b.chi_index);
    REQUIRE(a.s == b.s);
    REQUIRE(a.identity == b.identity);
    // bit-identical values, not merely close
    REQUIRE(a.identity_value.re == b.identity_value.re);
    REQUIRE(a.identity_value.im == b.identity_value.im);
    REQUIRE(a.abs_dev == b.abs_dev);
  }
}

TEST_CASE("sweep covers every identity family") {
  SweepResult r = run_verify_sweep(small_config());
  for (const char* id : {"theorem1", "theorem2", "alkan", "corollary_eq9",
                         "corollary_eq10", "meanvalue_s1_odd",
                         "meanvalue_s2_even"}) {
    CHECK(r.max_dev.count(id) == 1);
  }
  // records are grouped by ascending q
  long prev_q = 0;
  for (const auto& rec : r.records) {
    CHECK(rec.q >= prev_q);
    prev_q = rec.q;
  }
  CHECK_THROWS_AS(
      [] {
        SweepConfig bad;
        bad.q_min = 2;
        run_verify_sweep(bad);
      }(),
      std::invalid_argument);
}

TEST_CASE("csv output shape") {
  SweepConfig cfg = small_config();
  cfg.q_max = 5;
  SweepResult r = run_verify_sweep(cfg);
  std::string csv = sweep_to_csv(r);
  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "q,chi_index,s,identity,convention,re,im,oracle_re,oracle_im,abs_dev,"
        "rel_dev");
  std::size_t lines = 0;
  for (std::string line; std::getline(is, line);) {
    ++lines;
    CHECK(std::count(line.begin(), line.end(), ',') == 10);
  }
  CHECK(lines == r.records.size());
}

TEST_CASE("json output shape") {
  SweepConfig cfg = small_config();
  cfg.q_max = 5;
  SweepResult r = run_verify_sweep(cfg);
  nlohmann::json j = sweep_to_json(r);
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j["all_passed"] == true);
  CHECK(j["configuration"]["q_min"] == 3);
  CHECK(j["configuration"]["conventions"]["appell"] == "alternating");
  REQUIRE(j["records"].size() == r.records.size());
  const auto& rec = j["records"][0];
  for (const char* key : {"q", "chi_index", "s", "identity", "convention",
                          "value", "oracle", "abs_dev", "tolerance", "passed"})
    CHECK(rec.contains(key));
}

TEST_CASE("adjudication selects one reading per site") {
  AdjudicationReport rep = adjudicate(12, 6, 1e-6);
  REQUIRE(rep.sites.size() == 3);
  for (const auto& site : rep.sites) {
    CHECK(site.separable);
    REQUIRE(site.passing.size() == 1);
    CHECK(site.selected == site.passing.front());
    CHECK(site.rejected_worst_dev > 0.1);
    CHECK(site.selected_max_dev < 1e-6);
    REQUIRE(site.rejected_witness.has_value());
    CHECK(site.rejected_witness->abs_dev == site.rejected_worst_dev);
  }
  ConventionSet sel = rep.selected_conventions();
  CHECK(sel.theorem1 == Theorem1Prefactor::s_plus_1_mod_2);
  CHECK(sel.appell == AppellSign::alternating);
  CHECK(sel.corollary10 == Corollary10Prefactor::imaginary_unit);
  CHECK(rep.derived_errata.size() == 5);
}

TEST_CASE("shallow grids cannot separate the sign site") {
  // both sign readings agree wherever the polynomial constant term is the
  // only difference, which covers everything below s = 5
  AdjudicationReport rep = adjudicate(8, 4, 1e-6);
  bool found = false;
  for (const auto& site : rep.sites) {
    if (site.site != "appell_sign") continue;
    found = true;
    CHECK_FALSE(site.separable);
    CHECK(site.selected.empty());
    CHECK(site.passing.size() == 2);
  }
  CHECK(found);
  CHECK_THROWS_AS(adjudicate(4, 6, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(adjudicate(12, 1, 1e-6), std::invalid_argument);
}

TEST_CASE("adjudication renders to text and json") {
  AdjudicationReport rep = adjudicate(10, 6, 1e-6);
  std::string text = adjudication_to_text(rep);
  CHECK(text.find("s_plus_1_mod_2") != std::string::npos);
  CHECK(text.find("alternating") != std::string::npos);
  CHECK(text.find("imaginary_unit") != std::string::npos);
  CHECK(text.find("derived errata") != std::string::npos);

  nlohmann::json j = adjudication_to_json(rep);
  CHECK(j["sites"].size() == 3);
  CHECK(j["derived_errata"].size() == 5);
}

TEST_CASE("format17 round trips doubles") {
  for (double x : {0.1, 1.0 / 3.0, 0.91596559417721902, -2.718281828459045,
                   1e-300, 123456789.123456789}) {
    CHECK(std::stod(format17(x)) == x);
    CHECK(std::stod(format17(-x)) == -x);
  }
}
