#pragma once

#include <complex>
#include <string>
#include <vector>

#include "k3deg/density.hpp"

namespace k3deg {

struct RootSet {
  // Finite nonzero roots in double precision (moduli may be tiny or huge; the
  // log-modulus is kept separately at full precision).
  std::vector<std::complex<double>> roots;
  std::vector<double> log_abs;  // log|root|, same order as roots
  int at_zero = 0;              // exact roots at s = 0
  int at_infinity = 0;          // degree drop
  int iterations = 0;
  int total() const { return static_cast<int>(roots.size()) + at_zero + at_infinity; }
};

// All roots of p(., t0) by Aberth-Ehrlich iteration in 50-digit arithmetic.
// Throws E_NO_CONVERGENCE, or E_PRECONDITION if p(., t0) == 0 or t0 not in (0, 1).
RootSet roots_of(const SForm& p, double t0);
RootSet roots_at(const FamilyPair& f, double t0);

// Max relative coefficient error between prod (s - root) and p(., t0) made
// monic.
double reconstruction_error(const SForm& p, double t0, const RootSet& r);

// Sorted positions clamp(log|chi| / (e0 |log t0|), -1, w+); zeros map to -1,
// roots at infinity to w+.
std::vector<double> empirical_positions(const RootSet& r, double e0, double einf, double t0);

struct OracleSample {
  double t = 0;
  std::vector<double> positions;
  double max_deviation = 0;
};

struct ClusterMatch {
  Rat position;
  int exact = 0;
  int empirical = 0;
};

struct OracleReport {
  bool skipped = false;
  std::string notice;
  std::vector<OracleSample> samples;
  std::vector<ClusterMatch> clusters;  // at the smallest t
  bool trend_ok = false;
  double fitted_c = 0;  // least squares dev ~ C / |log t|
  double tolerance = 0.2;
  std::string failure;  // empty when the comparison passed
};

// Runs the exact pipeline on f (raw input; normalized internally), then the
// numerical roots for each t (sorted decreasing). A mismatch (final deviation
// above tolerance, or a deviation that grows as t shrinks) throws
// E_ORACLE_MISMATCH unless throw_on_mismatch is false.
OracleReport oracle_compare(const FamilyPair& f, std::vector<double> t_list,
                            double tolerance = 0.2, bool throw_on_mismatch = true);

}  // namespace k3deg
