#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "udw/errors.hpp"
#include "udw/sweep.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

std::string to_csv(const std::vector<udw::SweepRecord>& records) {
  std::ostringstream out;
  udw::write_csv(out, records);
  return out.str();
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

}  // namespace

TEST_CASE("linspace includes both endpoints exactly") {
  const auto grid = udw::linspace(0.0, 0.999, 200);
  REQUIRE(grid.size() == 200);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 0.999);
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
  CHECK_THROWS_AS(udw::linspace(0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(udw::linspace(1.0, 0.0, 10), std::invalid_argument);
}

TEST_CASE("q sweep starts at the identity-channel values") {
  udw::SweepConfig config;
  config.theta = kPi / 4.0;
  config.nu2 = 0.01;
  config.min = 0.0;
  config.max = 0.999;
  config.steps = 50;
  const auto records = udw::sweep_q(config);
  REQUIRE(records.size() == 50);

  const auto& first = records.front();
  CHECK(first.q == 0.0);
  // q = 0 still mixes in the nu^2 sin^2 term, D = 1.005
  CHECK(std::abs(first.c_l1 - 1.0 / 1.005) <= 1e-12);
  CHECK_FALSE(first.nu.has_value());

  // strictly decreasing c_l1 down the dataset
  for (std::size_t i = 1; i < records.size(); ++i) {
    CHECK(records[i].c_l1 < records[i - 1].c_l1);
  }
}

TEST_CASE("q sweep with nu2 = 0 produces constant columns") {
  udw::SweepConfig config;
  config.theta = kPi / 3.0;
  config.nu2 = 0.0;
  config.min = 0.0;
  config.max = 0.9;
  config.steps = 10;
  const auto records = udw::sweep_q(config);
  for (const auto& r : records) {
    CHECK(r.c_l1 == records.front().c_l1);
    CHECK(r.concurrence == records.front().concurrence);
    CHECK(r.d_cl1_dq == 0.0);
  }
}

TEST_CASE("q sweep enforces the q = 1 policy") {
  udw::SweepConfig config;
  config.theta = kPi / 4.0;
  config.nu2 = 0.04;
  config.min = 0.0;
  config.max = 1.0;
  config.steps = 10;
  CHECK_THROWS_AS(udw::sweep_q(config), std::invalid_argument);

  config.allow_q1 = true;
  const auto records = udw::sweep_q(config);
  CHECK(records.back().q == 1.0);
  CHECK(records.back().c_l1 == 0.0);

  config.nu2 = 0.0;
  CHECK_THROWS_AS(udw::sweep_q(config), std::invalid_argument);
}

TEST_CASE("nu sweep reports both nu and nu^2") {
  udw::SweepConfig config;
  config.theta = kPi / 4.0;
  config.q = 0.9999;
  config.min = 0.0;
  config.max = 0.05;
  config.steps = 25;
  const auto records = udw::sweep_nu(config);
  REQUIRE(records.size() == 25);
  for (const auto& r : records) {
    REQUIRE(r.nu.has_value());
    CHECK(std::abs(r.nu2 - *r.nu * *r.nu) <= 1e-15);
  }
  // concurrence dies along the sweep while coherence survives
  CHECK(records.front().concurrence > 0.0);
  CHECK(records.back().concurrence == 0.0);
  CHECK(records.back().c_l1 > 0.0);
}

TEST_CASE("surface covers the theta x nu grid in row-major order") {
  udw::SweepConfig config;
  config.q = 0.9999;
  config.min = 0.0;
  config.max = kPi / 2.0;
  config.steps = 9;
  config.nu_min = 0.0;
  config.nu_max = 0.05;
  config.nu_steps = 5;
  const auto records = udw::surface(config);
  REQUIRE(records.size() == 45);
  CHECK(records[0].theta == 0.0);
  CHECK(records[4].theta == 0.0);
  CHECK(records[5].theta > 0.0);

  // theta = 0 row carries no coherence
  for (int j = 0; j < 5; ++j) CHECK(records[j].c_l1 == 0.0);

  // sin(2 theta) symmetry of the coherence, exact up to the (1-q) skew
  for (int j = 0; j < 5; ++j) {
    const auto& low = records[1 * 5 + j];   // theta = pi/16
    const auto& high = records[7 * 5 + j];  // pi/2 - pi/16
    CHECK(std::abs(low.c_l1 - high.c_l1) <= 2e-4);
  }
}

TEST_CASE("CSV output: fixed header, LF endings, 10 significant digits") {
  udw::SweepConfig config;
  config.theta = kPi / 4.0;
  config.nu2 = 0.04;
  config.min = 0.0;
  config.max = 0.9;
  config.steps = 4;
  const auto records = udw::sweep_q(config);
  const std::string csv = to_csv(records);

  CHECK(csv.rfind("theta,q,nu2,c_l1,c_re,c_tr,concurrence,d_cl1_dq\n", 0) ==
        0);
  CHECK(count_lines(csv) == 5);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.find("0.7853981634") != std::string::npos);  // pi/4 to 10 digits

  // byte-identical on re-emission
  CHECK(to_csv(records) == csv);
}

TEST_CASE("nu-bearing records append a trailing nu column") {
  udw::SweepConfig config;
  config.theta = kPi / 4.0;
  config.q = 0.5;
  config.min = 0.0;
  config.max = 0.03;
  config.steps = 3;
  const std::string csv = to_csv(udw::sweep_nu(config));
  CHECK(csv.rfind("theta,q,nu2,c_l1,c_re,c_tr,concurrence,d_cl1_dq,nu\n", 0) ==
        0);
}

TEST_CASE("writers refuse NaN and negative records") {
  udw::SweepRecord bad{};
  bad.c_l1 = std::nan("");
  std::ostringstream out;
  CHECK_THROWS_AS(udw::write_csv(out, {bad}), std::invalid_argument);

  udw::SweepRecord negative{};
  negative.concurrence = -0.5;
  CHECK_THROWS_AS(udw::write_csv(out, {negative}), std::invalid_argument);
  CHECK_THROWS_AS(udw::write_json(out, {negative}), std::invalid_argument);
}

TEST_CASE("JSON output mirrors the CSV fields") {
  udw::SweepConfig config;
  config.theta = kPi / 6.0;
  config.nu2 = 0.04;
  config.min = 0.0;
  config.max = 0.5;
  config.steps = 3;
  const auto records = udw::sweep_q(config);

  std::ostringstream out;
  udw::write_json(out, records);
  const auto parsed = nlohmann::json::parse(out.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 3);
  for (const char* key : {"theta", "q", "nu2", "c_l1", "c_re", "c_tr",
                          "concurrence", "d_cl1_dq"}) {
    CHECK(parsed[0].contains(key));
  }
  CHECK(parsed[0]["q"].get<double>() == 0.0);
  CHECK(std::abs(parsed[0]["c_l1"].get<double>() -
                 std::sin(kPi / 3.0) / 1.01) <= 1e-12);
}

TEST_CASE("fig1 q = 0 row for panel (d) by direct substitution") {
  udw::SweepConfig config;
  config.theta = kPi / 6.0;
  config.nu2 = 0.04;
  config.min = 0.0;
  config.max = 0.999;
  config.steps = 10;
  const auto records = udw::sweep_q(config);
  // D = 1 + 0.04 sin^2(pi/6) = 1.01
  CHECK(std::abs(records.front().c_l1 - 0.8574508948) <= 1e-9);
}

TEST_CASE("angle parsing") {
  CHECK(udw::parse_angle("pi") == kPi);
  CHECK(udw::parse_angle("pi/4") == kPi / 4.0);
  CHECK(udw::parse_angle("3pi/8") == 3.0 * kPi / 8.0);
  CHECK(udw::parse_angle("0.5pi") == 0.5 * kPi);
  CHECK(udw::parse_angle(" pi / 6 ") == kPi / 6.0);
  CHECK(udw::parse_angle("0.785") == 0.785);
  CHECK(udw::parse_angle("1e-3") == 1e-3);
  CHECK_THROWS_AS(udw::parse_angle("four"), std::invalid_argument);
  CHECK_THROWS_AS(udw::parse_angle("pi/0"), std::invalid_argument);
  CHECK_THROWS_AS(udw::parse_angle(""), std::invalid_argument);
  CHECK_THROWS_AS(udw::parse_angle("pi/4x"), std::invalid_argument);
}

TEST_CASE("reproduce jobs carry the captioned parameter sets") {
  const auto fig1 = udw::reproduce_jobs("fig1");
  REQUIRE(fig1.size() == 4);
  CHECK(fig1[0].name == "fig1a");
  CHECK(fig1[0].config.theta == kPi / 4.0);
  CHECK(fig1[0].config.nu2 == 0.01);
  CHECK(fig1[1].config.nu2 == 0.0225);
  CHECK(fig1[2].config.nu2 == 0.04);
  CHECK(fig1[3].config.theta == kPi / 6.0);
  CHECK(fig1[3].config.nu2 == 0.04);
  for (const auto& job : fig1) {
    CHECK(job.kind == udw::ReproduceJob::Kind::kSweepQ);
    CHECK(job.config.min == 0.0);
    CHECK(job.config.max == 0.999);
    CHECK(job.config.steps == 200);
  }

  const auto fig2 = udw::reproduce_jobs("fig2");
  REQUIRE(fig2.size() == 2);
  CHECK(fig2[0].kind == udw::ReproduceJob::Kind::kSurface);
  CHECK(fig2[0].config.q == 0.9999);
  CHECK(fig2[1].kind == udw::ReproduceJob::Kind::kSweepNu);
  CHECK(fig2[1].config.theta == kPi / 4.0);
  CHECK(fig2[1].config.q == 0.9999);

  CHECK_THROWS_AS(udw::reproduce_jobs("fig3"), std::invalid_argument);
}
