#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ncbs/beam_splitter.hpp"
#include "ncbs/format.hpp"
#include "ncbs/sweep.hpp"

using namespace ncbs;

TEST_SUITE("sweep_cli")
{
  TEST_CASE("number formatting")
  {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.5e-20) == "1.5e-20");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
    CHECK(csv_field("k=v;k2=v2") == "k=v;k2=v2");
  }

  TEST_CASE("config validation and r grid")
  {
    SweepConfig c;
    const auto rs = c.r_values();
    REQUIRE(rs.size() == 31);
    CHECK(rs.front() == 0.0);
    CHECK(rs.back() == doctest::Approx(1.5));
    c.r_step = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = SweepConfig{};
    c.ms.clear();
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = SweepConfig{};
    c.measures.clear();
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK_THROWS_AS(parse_measure("entropy"), std::invalid_argument);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  }

  TEST_CASE("number-state entropy preset uses the closed form")
  {
    const auto d = figure("1a", 1);
    REQUIRE(d.rows.size() == 6);
    for (const auto& row : d.rows) {
      CHECK(row.result.value == ebs_number_closed(row.m));
      CHECK(row.result.method == Method::ClosedForm);
    }
  }

  TEST_CASE("row order and content do not depend on threads")
  {
    SweepConfig c;
    c.family = Family::PASVS;
    c.ms = {3, 1};
    c.r_min = 0.2;
    c.r_max = 0.6;
    c.r_step = 0.2;
    c.measures = {Measure::Ebs, Measure::Dnc};
    c.threads = 1;
    std::ostringstream a, b;
    write_csv(a, run_sweep(c));
    c.threads = 5;
    const auto d = run_sweep(c);
    write_csv(b, d);
    CHECK(a.str() == b.str());
    REQUIRE(d.rows.size() == 12);
    CHECK(d.rows[0].m == 3);
    CHECK(d.rows[0].measure == Measure::Ebs);
    CHECK(d.rows[1].measure == Measure::Dnc);
    CHECK(d.rows[2].r == doctest::Approx(0.4));
    CHECK(d.rows[6].m == 1);
  }

  TEST_CASE("point failures are recorded, not thrown")
  {
    SweepConfig c;
    c.family = Family::PASVS;
    c.ms = {1};
    c.r_max = 0.1;
    c.r_step = 0.1;
    c.measures = {Measure::EbsPrinted, Measure::Ebs};
    const auto d = run_sweep(c);
    REQUIRE(d.rows.size() == 4);
    CHECK_FALSE(d.rows[0].ok);
    CHECK(d.rows[1].ok);
    CHECK(d.failures() == 2);
    std::ostringstream os;
    write_csv(os, d);
    CHECK(os.str().find(",error,") != std::string::npos);
  }

  TEST_CASE("CSV and JSON layouts")
  {
    SweepConfig c;
    c.family = Family::SNS;
    c.ms = {2};
    c.r_min = 0.5;
    c.r_max = 0.5;
    c.measures = {Measure::Ebs};
    const auto d = run_sweep(c);
    std::ostringstream csv;
    write_csv(csv, d);
    std::istringstream lines(csv.str());
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "family,m,r,measure,value,method,status,meta");
    CHECK(row.rfind("sns,2,0.5,ebs,", 0) == 0);
    CHECK(row.find(",numeric-oracle,ok,") != std::string::npos);

    std::ostringstream js;
    write_json(js, d);
    const auto j = nlohmann::json::parse(js.str());
    CHECK(j["schema_version"] == 1);
    CHECK(j["config"]["family"] == "sns");
    CHECK(j["rows"].size() == 1);
    CHECK(j["rows"][0]["value"].get<double>() == doctest::Approx(d.rows[0].result.value));
  }

  TEST_CASE("contour blocks")
  {
    const auto d = figure("5", 2, PhaseGrid{-2, 2, 5, -2, 2, 4});
    REQUIRE(d.fields.size() == 20);
    CHECK(d.fields[0].header.m == 1);
    CHECK(d.fields[0].header.r == doctest::Approx(0.2));
    CHECK(d.fields[1].header.r == doctest::Approx(0.6));
    std::ostringstream os;
    write_csv(os, d);
    CHECK(os.str().find("# family=pasvs m=1 r=0.2 field=Q eta=1\nx1,x2,value\n-2,-2,") != std::string::npos);
    CHECK_THROWS_AS(figure("7"), std::invalid_argument);
  }

  TEST_CASE("state dump")
  {
    std::ostringstream os;
    write_state_csv(os, number_state(1, 2));
    CHECK(os.str() == "n,re,im,prob\n0,0,0,0\n1,1,0,1\n2,0,0,0\n");
  }
}
