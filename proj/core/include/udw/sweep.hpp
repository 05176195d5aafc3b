#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udw/analysis.hpp"
#include "udw/measures.hpp"

namespace udw {

enum class OutputFormat { kCsv, kJson };

// One emitted point of a sweep dataset. `nu` is populated by nu sweeps and
// surfaces, where the swept axis is nu rather than nu^2, and appears as a
// trailing extra column there.
struct SweepRecord {
  double theta;
  double q;
  double nu2;
  double c_l1;
  double c_re;
  double c_tr;
  double concurrence;
  double d_cl1_dq;
  std::optional<double> nu;
};

// Fixed parameters plus the swept range. `steps` counts emitted samples and
// both endpoints are included. The secondary (nu) range applies to surfaces
// only. q values above 0.999 are rejected unless allow_q1 is set, and q = 1
// additionally requires nu > 0.
struct SweepConfig {
  double theta = 0.0;
  double q = 0.0;
  double nu2 = 0.0;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
  double nu_min = 0.0;
  double nu_max = 0.05;
  int nu_steps = 50;
  bool allow_q1 = false;
  std::string out_path;  // "-" or empty means stdout
  OutputFormat format = OutputFormat::kCsv;
};

// n evenly spaced samples including both endpoints; n >= 2.
std::vector<double> linspace(double lo, double hi, int n);

SweepRecord evaluate_point(double theta, double q, double nu2, bool with_nu);

std::vector<SweepRecord> sweep_q(const SweepConfig& config);
std::vector<SweepRecord> sweep_nu(const SweepConfig& config);
std::vector<SweepRecord> surface(const SweepConfig& config);

// Fixed CSV schema shared by every dataset; nu sweeps and surfaces append a
// trailing "nu" column after these eight.
inline constexpr const char* kCsvHeader =
    "theta,q,nu2,c_l1,c_re,c_tr,concurrence,d_cl1_dq";

// Writers refuse records carrying NaNs or negative measure values. Floats
// are printed with 10 significant digits and LF line endings.
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_json(std::ostream& out, const std::vector<SweepRecord>& records);
void write_dataset(const std::string& path,
                   const std::vector<SweepRecord>& records,
                   OutputFormat format);

// Accepts plain radians ("0.7853981"), "pi", or fractions like "pi/4" and
// "3pi/8", parsed exactly.
double parse_angle(const std::string& text);

// Canned parameter sets behind `reproduce fig1|fig2`.
struct ReproduceJob {
  enum class Kind { kSweepQ, kSweepNu, kSurface };
  Kind kind;
  std::string name;  // output file stem, e.g. "fig1a"
  SweepConfig config;
};

std::vector<ReproduceJob> reproduce_jobs(const std::string& figure);

}  // namespace udw
