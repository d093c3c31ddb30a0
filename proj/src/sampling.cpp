#include <atomic>
#include <thread>
#include <vector>

#include "qsf/errors.hpp"
#include "qsf/identities.hpp"

namespace qsf {

namespace {

// Final avalanche of murmur3, used to decorrelate the three seed components
// so neighboring indices (and neighboring user seeds) land in unrelated
// stream positions.
std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

Point sample_point(const IdentityDescriptor& d, std::uint64_t seed, long index) {
  std::uint64_t s = fnv1a(d.id.c_str());
  s ^= mix64(seed + 0x9e3779b97f4a7c15ULL);
  s ^= mix64(static_cast<std::uint64_t>(index) * 0xbf58476d1ce4e5b9ULL + 1);
  Rng rng(mix64(s));

  for (int attempt = 0; attempt < 1000; ++attempt) {
    Point pt = d.draw(rng);
    try {
      d.admissible(pt);
      return pt;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ConstraintViolation) throw;
    }
  }
  fail(ErrorKind::SamplerExhausted,
       d.id + ": no admissible point in 1000 draws (seed " + std::to_string(seed) + ", index " +
           std::to_string(index) + ")");
}

std::vector<CheckResult> sweep_identity(const IdentityDescriptor& d, std::uint64_t seed,
                                        long count, const EvalConfig& cfg, Real tol,
                                        int workers) {
  std::vector<CheckResult> out(static_cast<std::size_t>(count));
  auto run_one = [&](long i) {
    try {
      Point pt = sample_point(d, seed, i);
      out[i] = check_point(d, pt, cfg, tol);
    } catch (const Error& e) {
      // Sampler exhaustion is data too: the report records it against the
      // index instead of aborting the sweep.
      out[i].identity = d.id;
      out[i].errored = true;
      out[i].notes = e.what();
    }
    out[i].seed = seed;
  };

  int hw = static_cast<int>(std::thread::hardware_concurrency());
  int n_workers = std::clamp(workers, 1, hw > 0 ? hw : 1);
  if (n_workers <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) run_one(i);
    return out;
  }

  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_workers));
  for (int w = 0; w < n_workers; ++w)
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) run_one(i);
    });
  for (std::thread& t : pool) t.join();
  return out;
}

}  // namespace qsf
