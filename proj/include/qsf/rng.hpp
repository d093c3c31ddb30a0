#pragma once

#include <cstdint>

#include "qsf/scalar.hpp"

namespace qsf {

// Deterministic generator for parameter sampling. splitmix64 plus an explicit
// 53-bit mapping to [0,1): unlike std::uniform_real_distribution, the output
// stream is pinned down by the standard of the algorithm itself, so reports are
// byte-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with exactly the top 53 bits.
  Real uniform() { return static_cast<Real>(next_u64() >> 11) * 0x1.0p-53; }

  Real uniform(Real lo, Real hi) { return lo + (hi - lo) * uniform(); }

  // Log-uniform modulus, the right scale-free draw for |z| constrained to a ring.
  Real log_uniform(Real lo, Real hi) { return lo * std::exp(uniform() * std::log(hi / lo)); }

  long uniform_int(long lo, long hi) {  // inclusive ends
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Uniform angle avoiding a margin around the positive real axis, where most
  // of the q-lattice pole sets of this library live.
  Real angle_off_axis(Real margin) {
    Real a = uniform(margin, 2.0 * kPi - margin);
    return a <= kPi ? a : a - 2.0 * kPi;
  }

  Complex ring_point(Real r_lo, Real r_hi, Real axis_margin) {
    Real r = log_uniform(r_lo, r_hi);
    Real a = angle_off_axis(axis_margin);
    return std::polar(r, a);
  }

 private:
  std::uint64_t state_;
};

// FNV-style xor-multiply fold (nonstandard offset basis, same prime), used to
// fold identity ids into per-row seeds so each registry row draws from an
// independent stream. Only stability matters here, not interop with FNV.
inline std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ULL;
  return h;
}

}  // namespace qsf
