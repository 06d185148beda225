// Z-basis shot sampling with reproducible counter-based randomness, and
// parity / pattern tallies with Wilson score intervals.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mtc/gates.hpp"
#include "mtc/states.hpp"
#include "mtc/stats.hpp"

namespace mtc {

struct MeasurementRecord {
  int n = 0;
  std::vector<std::uint64_t> shots;  // each an n-bit outcome string
  std::uint64_t seed = 0;
  std::string source;
};

struct ParityStatistics {
  std::int64_t total = 0;
  std::int64_t even_count = 0;
  double p_even_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct PatternStatistics {
  std::int64_t total = 0;
  std::int64_t pattern_count = 0;
  std::int64_t complement_count = 0;
  std::int64_t stray_count = 0;
  bool p_hat_defined = false;  // false when no shot hit pattern or complement
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

// Shot k depends only on (seed, k); the worker count changes nothing but
// wall time.
MeasurementRecord sample_shots(const OutcomeDistribution& dist, std::int64_t count,
                               std::uint64_t seed, int workers = 1,
                               std::string source = {});

// Dense path: Born probabilities via a precomputed cumulative table.
MeasurementRecord sample_shots(const StateVector& sv, std::int64_t count,
                               std::uint64_t seed, int workers = 1,
                               std::string source = {});

// Two-stage draw: parity sector first, then a uniform string within the
// sector (each sector holds 2^{n-1} strings). Works for any n <= 64.
MeasurementRecord sample_shots(const ParityDistribution& dist, std::int64_t count,
                               std::uint64_t seed, int workers = 1,
                               std::string source = {});

ParityStatistics tally_parity(const MeasurementRecord& record, double alpha);
PatternStatistics tally_pattern(const MeasurementRecord& record,
                                const BasisString& pattern, double alpha);

// Record file format: one header line "mtc-record v1 n=<n> seed=<seed>
// source=<source>", then one bitstring per line.
void write_record(std::ostream& os, const MeasurementRecord& record);
MeasurementRecord read_record(std::istream& is);

}  // namespace mtc
