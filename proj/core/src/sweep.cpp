#include "udw/sweep.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "udw/errors.hpp"

namespace udw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDefaultQCap = 0.999;

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void validate_range(double lo, double hi, int steps) {
  if (!(lo < hi)) {
    throw std::invalid_argument("sweep range requires min < max");
  }
  if (steps < 2) {
    throw std::invalid_argument("sweep requires at least 2 steps");
  }
}

// The swept q endpoint above the default cap needs the explicit opt-in,
// and q = 1 is only meaningful with a nonzero coupling.
void validate_q_endpoint(double q, bool allow_q1, double nu_floor) {
  if (!(q >= 0.0)) {
    throw std::invalid_argument("q must be nonnegative");
  }
  if (!allow_q1 && q > kDefaultQCap) {
    throw std::invalid_argument(
        "q above 0.999 requires --allow-q1 (and nu > 0 at q = 1)");
  }
  if (q > 1.0) {
    throw std::invalid_argument("q cannot exceed 1");
  }
  if (q == 1.0 && !(nu_floor > 0.0)) {
    throw std::invalid_argument("q = 1 requires nu > 0");
  }
}

// A fixed q may sit anywhere in [0, 1); the q = 1 limit still needs the
// explicit opt-in plus a nonzero coupling.
void validate_q_fixed(double q, bool allow_q1, double nu_floor) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
  if (q == 1.0) {
    if (!allow_q1) {
      throw std::invalid_argument("q = 1 requires --allow-q1");
    }
    if (!(nu_floor > 0.0)) {
      throw std::invalid_argument("q = 1 requires nu > 0");
    }
  }
}

void validate_record(const SweepRecord& r) {
  const double fields[] = {r.theta, r.q,    r.nu2,         r.c_l1,
                           r.c_re,  r.c_tr, r.concurrence, r.d_cl1_dq};
  for (double f : fields) {
    if (!std::isfinite(f)) {
      throw std::invalid_argument("sweep record contains a non-finite value");
    }
  }
  if (r.c_l1 < 0.0 || r.c_re < 0.0 || r.c_tr < 0.0 || r.concurrence < 0.0) {
    throw std::invalid_argument("sweep record contains a negative measure");
  }
  if (r.nu && !std::isfinite(*r.nu)) {
    throw std::invalid_argument("sweep record contains a non-finite nu");
  }
}

bool with_nu_column(const std::vector<SweepRecord>& records) {
  return !records.empty() && records.front().nu.has_value();
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
  validate_range(lo, hi, n);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] =
        lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(n - 1);
  }
  values.front() = lo;
  values.back() = hi;  // endpoints exact
  return values;
}

SweepRecord evaluate_point(double theta, double q, double nu2, bool with_nu) {
  const MeasureReport m = measure_all(final_state_closed_form(theta, {q, nu2}));
  SweepRecord r{};
  r.theta = theta;
  r.q = q;
  r.nu2 = nu2;
  r.c_l1 = m.c_l1;
  r.c_re = m.c_re;
  r.c_tr = m.c_tr;
  r.concurrence = m.concurrence;
  r.d_cl1_dq = dCl1_dq(theta, q, nu2);
  if (with_nu) r.nu = std::sqrt(nu2);
  return r;
}

std::vector<SweepRecord> sweep_q(const SweepConfig& config) {
  validate_theta(config.theta);
  validate_range(config.min, config.max, config.steps);
  validate_q_endpoint(config.max, config.allow_q1, std::sqrt(config.nu2));
  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(config.steps));
  for (double q : linspace(config.min, config.max, config.steps)) {
    records.push_back(evaluate_point(config.theta, q, config.nu2, false));
  }
  return records;
}

std::vector<SweepRecord> sweep_nu(const SweepConfig& config) {
  validate_theta(config.theta);
  validate_range(config.min, config.max, config.steps);
  if (!(config.min >= 0.0 && config.max < 1.0)) {
    throw std::invalid_argument("nu range must lie in [0, 1)");
  }
  validate_q_fixed(config.q, config.allow_q1, config.min);
  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(config.steps));
  for (double nu : linspace(config.min, config.max, config.steps)) {
    SweepRecord r = evaluate_point(config.theta, config.q, nu * nu, true);
    r.nu = nu;  // report the swept value itself, not sqrt(nu^2)
    records.push_back(r);
  }
  return records;
}

std::vector<SweepRecord> surface(const SweepConfig& config) {
  validate_range(config.min, config.max, config.steps);
  validate_range(config.nu_min, config.nu_max, config.nu_steps);
  if (!(config.min >= 0.0 && config.max <= kPi / 2.0)) {
    throw std::invalid_argument("theta range must lie in [0, pi/2]");
  }
  if (!(config.nu_min >= 0.0 && config.nu_max < 1.0)) {
    throw std::invalid_argument("nu range must lie in [0, 1)");
  }
  validate_q_fixed(config.q, config.allow_q1, config.nu_min);
  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(config.steps) *
                  static_cast<std::size_t>(config.nu_steps));
  for (double theta : linspace(config.min, config.max, config.steps)) {
    for (double nu : linspace(config.nu_min, config.nu_max, config.nu_steps)) {
      SweepRecord r = evaluate_point(theta, config.q, nu * nu, true);
      r.nu = nu;
      records.push_back(r);
    }
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  const bool with_nu = with_nu_column(records);
  out << kCsvHeader;
  if (with_nu) out << ",nu";
  out << "\n";
  for (const SweepRecord& r : records) {
    validate_record(r);
    if (r.nu.has_value() != with_nu) {
      throw std::invalid_argument("sweep records disagree on the nu column");
    }
    out << format_value(r.theta) << ',' << format_value(r.q) << ','
        << format_value(r.nu2) << ',' << format_value(r.c_l1) << ','
        << format_value(r.c_re) << ',' << format_value(r.c_tr) << ','
        << format_value(r.concurrence) << ',' << format_value(r.d_cl1_dq);
    if (with_nu) out << ',' << format_value(*r.nu);
    out << "\n";
  }
}

void write_json(std::ostream& out, const std::vector<SweepRecord>& records) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRecord& r : records) {
    validate_record(r);
    nlohmann::ordered_json row;
    row["theta"] = r.theta;
    row["q"] = r.q;
    row["nu2"] = r.nu2;
    row["c_l1"] = r.c_l1;
    row["c_re"] = r.c_re;
    row["c_tr"] = r.c_tr;
    row["concurrence"] = r.concurrence;
    row["d_cl1_dq"] = r.d_cl1_dq;
    if (r.nu) row["nu"] = *r.nu;
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << "\n";
}

void write_dataset(const std::string& path,
                   const std::vector<SweepRecord>& records,
                   OutputFormat format) {
  const auto emit = [&](std::ostream& out) {
    if (format == OutputFormat::kCsv) {
      write_csv(out, records);
    } else {
      write_json(out, records);
    }
  };
  if (path.empty() || path == "-") {
    emit(std::cout);
    if (!std::cout.good()) throw IoError("failed writing dataset to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  emit(out);
  out.flush();
  if (!out.good()) throw IoError("failed writing dataset: " + path);
}

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty angle");

  const auto parse_number = [](const std::string& token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("could not parse angle component: " + token);
    }
    if (used != token.size()) {
      throw std::invalid_argument("trailing characters in angle: " + token);
    }
    return value;
  };

  const std::size_t pos = s.find("pi");
  if (pos == std::string::npos) return parse_number(s);

  double coefficient = 1.0;
  if (pos > 0) coefficient = parse_number(s.substr(0, pos));
  double denominator = 1.0;
  const std::string rest = s.substr(pos + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw std::invalid_argument("could not parse angle: " + text);
    }
    denominator = parse_number(rest.substr(1));
    if (denominator == 0.0) {
      throw std::invalid_argument("angle denominator cannot be zero");
    }
  }
  return coefficient * kPi / denominator;
}

std::vector<ReproduceJob> reproduce_jobs(const std::string& figure) {
  std::vector<ReproduceJob> jobs;
  if (figure == "fig1") {
    // Four q sweeps at the captioned (theta, nu^2) pairs; the plotted q range
    // tops out at the default 0.999 cap.
    const struct {
      const char* name;
      double theta;
      double nu2;
    } panels[] = {{"fig1a", kPi / 4.0, 0.01},
                  {"fig1b", kPi / 4.0, 0.0225},
                  {"fig1c", kPi / 4.0, 0.04},
                  {"fig1d", kPi / 6.0, 0.04}};
    for (const auto& panel : panels) {
      SweepConfig config;
      config.theta = panel.theta;
      config.nu2 = panel.nu2;
      config.min = 0.0;
      config.max = 0.999;
      config.steps = 200;
      jobs.push_back({ReproduceJob::Kind::kSweepQ, panel.name, config});
    }
    return jobs;
  }
  if (figure == "fig2") {
    SweepConfig surface_config;
    surface_config.q = 0.9999;
    surface_config.min = 0.0;
    surface_config.max = kPi / 2.0;
    surface_config.steps = 50;
    surface_config.nu_min = 0.0;
    surface_config.nu_max = 0.05;
    surface_config.nu_steps = 50;
    jobs.push_back(
        {ReproduceJob::Kind::kSurface, "fig2_surface", surface_config});

    SweepConfig nu_config;
    nu_config.theta = kPi / 4.0;
    nu_config.q = 0.9999;
    nu_config.min = 0.0;
    nu_config.max = 0.05;
    nu_config.steps = 200;
    jobs.push_back({ReproduceJob::Kind::kSweepNu, "fig2_nu", nu_config});
    return jobs;
  }
  throw std::invalid_argument("unknown figure '" + figure +
                              "' (expected fig1 or fig2)");
}

}  // namespace udw
