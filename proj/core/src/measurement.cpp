#include "mtc/measurement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mtc/rng.hpp"

namespace mtc {

namespace {

void check_count(std::int64_t count) {
  if (count <= 0) {
    throw std::invalid_argument("sample_shots: shot count must be positive");
  }
}

// Fill shots[0..count) with fn(k), optionally across threads. Each index is
// written exactly once, so the partition cannot affect the result.
template <typename Fn>
std::vector<std::uint64_t> fill_shots(std::int64_t count, int workers, Fn fn) {
  std::vector<std::uint64_t> shots(static_cast<size_t>(count));
  if (workers <= 1 || count < 1024) {
    for (std::int64_t k = 0; k < count; ++k) shots[static_cast<size_t>(k)] = fn(k);
    return shots;
  }
  std::vector<std::thread> pool;
  const std::int64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      for (std::int64_t k = lo; k < hi; ++k) shots[static_cast<size_t>(k)] = fn(k);
    });
  }
  for (auto& t : pool) t.join();
  return shots;
}

}  // namespace

MeasurementRecord sample_shots(const OutcomeDistribution& dist, std::int64_t count,
                               std::uint64_t seed, int workers, std::string source) {
  check_count(count);
  if (std::abs(dist.total() - 1.0) > 1e-9) {
    throw std::invalid_argument("sample_shots: distribution mass must sum to 1");
  }
  auto draw = [&dist, seed](std::int64_t k) {
    const double u = rng::unit(rng::at(seed, static_cast<std::uint64_t>(k)));
    double acc = 0.0;
    for (const auto& [idx, mass] : dist.probs) {
      acc += mass;
      if (u < acc) return idx;
    }
    return dist.probs.back().first;
  };
  return MeasurementRecord{dist.n, fill_shots(count, workers, draw), seed,
                           std::move(source)};
}

MeasurementRecord sample_shots(const StateVector& sv, std::int64_t count,
                               std::uint64_t seed, int workers, std::string source) {
  check_count(count);
  std::vector<double> cdf(sv.dim());
  double acc = 0.0;
  for (std::uint64_t i = 0; i < sv.dim(); ++i) {
    acc += std::norm(sv[i]);
    cdf[i] = acc;
  }
  if (std::abs(acc - 1.0) > 1e-9) {
    throw std::invalid_argument("sample_shots: state vector not normalized");
  }
  auto draw = [&cdf, seed](std::int64_t k) {
    const double u = rng::unit(rng::at(seed, static_cast<std::uint64_t>(k)));
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    return static_cast<std::uint64_t>(it - cdf.begin());
  };
  return MeasurementRecord{sv.n(), fill_shots(count, workers, draw), seed,
                           std::move(source)};
}

MeasurementRecord sample_shots(const ParityDistribution& dist, std::int64_t count,
                               std::uint64_t seed, int workers, std::string source) {
  check_count(count);
  if (std::abs(dist.p_even + dist.p_odd - 1.0) > 1e-9) {
    throw std::invalid_argument("sample_shots: parity masses must sum to 1");
  }
  const int n = dist.n;
  const std::uint64_t high_mask = n > 1 ? BasisString::mask(n - 1) : 0;
  auto draw = [&, seed](std::int64_t k) {
    const auto kk = static_cast<std::uint64_t>(k);
    const bool even = rng::unit(rng::at(seed, 2 * kk)) < dist.p_even;
    const std::uint64_t j = rng::at(seed, 2 * kk + 1) & high_mask;
    std::uint64_t bits = j << 1;
    const bool bits_even = std::popcount(bits) % 2 == 0;
    if (bits_even != even) bits |= 1;
    return bits;
  };
  return MeasurementRecord{n, fill_shots(count, workers, draw), seed,
                           std::move(source)};
}

ParityStatistics tally_parity(const MeasurementRecord& record, double alpha) {
  if (record.shots.empty()) {
    throw std::invalid_argument("tally_parity: empty record");
  }
  ParityStatistics st;
  st.total = static_cast<std::int64_t>(record.shots.size());
  for (std::uint64_t s : record.shots) {
    if (std::popcount(s) % 2 == 0) ++st.even_count;
  }
  st.p_even_hat = static_cast<double>(st.even_count) / static_cast<double>(st.total);
  const auto iv = stats::wilson_interval(st.even_count, st.total, alpha);
  st.ci_low = iv.low;
  st.ci_high = iv.high;
  return st;
}

PatternStatistics tally_pattern(const MeasurementRecord& record,
                                const BasisString& pattern, double alpha) {
  if (record.n != pattern.n()) {
    throw std::invalid_argument("tally_pattern: record/pattern qubit count mismatch");
  }
  if (record.shots.empty()) {
    throw std::invalid_argument("tally_pattern: empty record");
  }
  PatternStatistics st;
  st.total = static_cast<std::int64_t>(record.shots.size());
  const std::uint64_t pat = pattern.bits();
  const std::uint64_t comp = pattern.complement().bits();
  for (std::uint64_t s : record.shots) {
    if (s == pat) {
      ++st.pattern_count;
    } else if (s == comp) {
      ++st.complement_count;
    } else {
      ++st.stray_count;  // outside the two-component family; reported, not fatal
    }
  }
  const std::int64_t in_family = st.pattern_count + st.complement_count;
  if (in_family > 0) {
    st.p_hat_defined = true;
    st.p_hat = static_cast<double>(st.pattern_count) / static_cast<double>(in_family);
    const auto iv = stats::wilson_interval(st.pattern_count, in_family, alpha);
    st.ci_low = iv.low;
    st.ci_high = iv.high;
  }
  return st;
}

void write_record(std::ostream& os, const MeasurementRecord& record) {
  os << "mtc-record v1 n=" << record.n << " seed=" << record.seed
     << " source=" << record.source << "\n";
  std::string line(static_cast<size_t>(record.n), '0');
  for (std::uint64_t s : record.shots) {
    for (int q = 0; q < record.n; ++q) {
      line[static_cast<size_t>(q)] =
          static_cast<char>('0' + ((s >> (record.n - 1 - q)) & 1));
    }
    os << line << "\n";
  }
}

MeasurementRecord read_record(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) {
    throw std::invalid_argument("read_record: missing header line");
  }
  std::istringstream hs(header);
  std::string magic, version, field;
  hs >> magic >> version;
  if (magic != "mtc-record" || version != "v1") {
    throw std::invalid_argument("read_record: bad header, expected 'mtc-record v1'");
  }
  MeasurementRecord rec;
  bool have_n = false;
  while (hs >> field) {
    if (field.starts_with("n=")) {
      rec.n = std::stoi(field.substr(2));
      have_n = true;
    } else if (field.starts_with("seed=")) {
      rec.seed = std::stoull(field.substr(5));
    } else if (field.starts_with("source=")) {
      std::string rest;
      std::getline(hs, rest);
      rec.source = field.substr(7) + rest;
    }
  }
  if (!have_n || rec.n < 1 || rec.n > 64) {
    throw std::invalid_argument("read_record: header must carry n in [1, 64]");
  }
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (static_cast<int>(line.size()) != rec.n) {
      throw std::invalid_argument("read_record: shot length does not match n");
    }
    rec.shots.push_back(BasisString::from_string(line).bits());
  }
  return rec;
}

}  // namespace mtc
