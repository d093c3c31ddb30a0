#include "qsf/series.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "qsf/errors.hpp"

namespace qsf {

namespace {

constexpr Real kRatioCap = 8.0;  // stored ratio values are clipped here; only "< 1" matters

// Sliding window over recent term ratios, used to tell "terms do not decay"
// (NoDecay) apart from "terms decay but too slowly for the budget"
// (BudgetExceeded) once the budget runs out.
class RatioWindow {
 public:
  void push(Real r) {
    r = std::min(r, kRatioCap);
    sum_ += r - buf_[pos_];
    buf_[pos_] = r;
    pos_ = (pos_ + 1) % buf_.size();
    if (count_ < buf_.size()) ++count_;
  }
  bool indicates_no_decay() const {
    if (count_ < buf_.size()) return false;  // too early to call
    return sum_ / static_cast<Real>(count_) >= 1.0 - 1e-12;
  }

 private:
  std::array<Real, 64> buf_{};
  Real sum_ = 0.0;
  std::size_t pos_ = 0;
  std::size_t count_ = 0;
};

[[noreturn]] void report_failure(const TermGenerator& gen, long k, Real frontier, bool no_decay) {
  std::ostringstream os;
  os << "series '" << gen.name << "' gave up at index " << k << " with frontier term modulus "
     << frontier << "; "
     << (no_decay ? "terms show no decay (parameters likely outside the convergence region)"
                  : "terms decay too slowly for the term budget");
  fail(no_decay ? ErrorKind::NoDecay : ErrorKind::BudgetExceeded, os.str());
}

// |z| without the hypot call when the term is purely real, which is the common
// case for the slowest series in the suite (tens of millions of real terms).
Real cheap_abs(Complex z) {
  if (z.imag() == 0.0) return std::abs(z.real());
  return std::abs(z);
}

Real tail_bound(Real term_abs, Real ratio) {
  if (term_abs == 0.0) return 0.0;
  if (ratio >= 1.0) return std::numeric_limits<Real>::infinity();
  return term_abs * ratio / (1.0 - ratio);
}

// Sum of |t| over two adjacent 12-term blocks behind the frontier. The ratio
// of consecutive block sums bounds the remaining tail the way the local term
// ratio does for plainly geometric series, but it stays meaningful when the
// decay carries a short-period modulation: the fractional-lattice gamma-ratio
// summands swing by orders of magnitude with period 1/alpha, so the per-term
// ratio exceeds 1 every few steps even while the envelope collapses. Twelve
// is divisible by every modulation period a registered generator produces.
class BlockTail {
 public:
  void push(Real a) { buf_[pos_++ % kLen] = a; }
  bool ready() const { return pos_ >= kLen; }
  Real estimate() const {
    Real cur = 0.0, prev = 0.0;
    for (std::size_t age = 0; age < kLen / 2; ++age) cur += at_age(age);
    for (std::size_t age = kLen / 2; age < kLen; ++age) prev += at_age(age);
    if (cur == 0.0) return 0.0;
    if (prev <= cur) return std::numeric_limits<Real>::infinity();
    Real r = cur / prev;
    return cur * r / (1.0 - r);
  }

 private:
  static constexpr std::size_t kLen = 24;
  Real at_age(std::size_t age) const { return buf_[(pos_ - 1 - age) % kLen]; }
  std::array<Real, kLen> buf_{};
  std::size_t pos_ = 0;
};

// Local term ratio; a vanished predecessor with a live successor yields a
// distrusted value above 1 so that step cannot count as quiet.
Real local_ratio(Real cur, Real prev) {
  if (cur == 0.0) return 0.0;
  if (prev == 0.0) return 2.0;
  return cur / prev;
}

SumOutcome run(const TermGenerator& gen, const EvalConfig& cfg, bool two_sided) {
  cfg.validate();
  SumOutcome out;
  Complex S = gen.term(0);
  if (!is_finite(S)) report_failure(gen, 0, std::abs(S), true);
  Real max_partial = cheap_abs(S);
  Real prev_pos = max_partial, prev_neg = max_partial;
  Real rp = 0.0, rn = 0.0;
  int quiet = 0;
  RatioWindow window;
  BlockTail blocks_pos, blocks_neg;
  long k = 0;

  // max_terms counts generator calls, so a bilateral sum reaches frontier
  // K ~ max_terms / 2.
  long budget = two_sided ? cfg.max_terms / 2 : cfg.max_terms;
  for (k = 1; k <= budget; ++k) {
    Complex tp = gen.term(k);
    Complex tm = two_sided ? gen.term(-k) : Complex(0.0);
    if (!is_finite(tp) || !is_finite(tm)) report_failure(gen, k, cheap_abs(tp), true);
    S += tp + tm;
    Real as = cheap_abs(S);
    if (as > max_partial) max_partial = as;

    Real ap = cheap_abs(tp), am = cheap_abs(tm);
    rp = local_ratio(ap, prev_pos);
    rn = two_sided ? local_ratio(am, prev_neg) : 0.0;
    prev_pos = ap;
    prev_neg = am;
    window.push(std::max(rp, rn));
    blocks_pos.push(ap);
    if (two_sided) blocks_neg.push(am);

    Real threshold = cfg.rel_tol * (as + 1.0);
    Real est = std::numeric_limits<Real>::infinity();
    bool small_terms = ap <= 0.1 * threshold && am <= 0.1 * threshold;
    if (small_terms) {
      // Block estimates only exist past the warmup; the local-ratio bound
      // keeps early exits (fast geometric series) on the old path.
      est = blocks_pos.ready() ? blocks_pos.estimate() + (two_sided ? blocks_neg.estimate() : 0.0)
                               : tail_bound(ap, rp) + tail_bound(am, rn);
    }
    bool step_quiet = small_terms && est <= 0.25 * threshold;
    quiet = step_quiet ? quiet + 1 : 0;
    if (quiet >= 4) {
      out.value = S;
      // Doubling the geometric tail bound covers slowly decaying constant-sign
      // tails, where the local ratio slightly undershoots the true remainder.
      out.err_estimate = 2.0 * est + 4.0 * kEps * (as + 1.0);
      out.terms_used = two_sided ? 2 * k + 1 : k + 1;
      out.converged = true;
      out.tail_ratio_pos = rp;
      out.tail_ratio_neg = rn;
      out.max_partial = max_partial;
      return out;
    }
  }
  report_failure(gen, budget, prev_pos, window.indicates_no_decay());
}

}  // namespace

SumOutcome sum_bilateral(const TermGenerator& gen, const EvalConfig& cfg) {
  if (!gen.bilateral)
    fail(ErrorKind::BadConfig, "sum_bilateral needs a bilateral generator: " + gen.name);
  return run(gen, cfg, true);
}

SumOutcome sum_unilateral(const TermGenerator& gen, const EvalConfig& cfg) {
  return run(gen, cfg, false);
}

}  // namespace qsf
