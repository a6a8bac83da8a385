#pragma once

#include <cstdint>
#include <stdexcept>

namespace boolevo {

// Geometric cooling of the unbalancedness probability: p starts at p0 and is
// multiplied by alpha once per interval_m fitness evaluations, so after t
// updates current_p() == p0 * alpha^t (up to floating rounding, well inside
// 1e-12 relative for any realistic t).
class BiasSchedule {
 public:
  BiasSchedule(double p0, double alpha, std::uint64_t interval_m)
      : p0_(p0), alpha_(alpha), interval_(interval_m), current_(p0) {
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
      throw std::invalid_argument("bias schedule: p0 outside [0,1]");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw std::invalid_argument("bias schedule: alpha outside (0,1)");
    }
    if (interval_m == 0) {
      throw std::invalid_argument("bias schedule: update interval must be positive");
    }
  }

  double p0() const { return p0_; }
  double alpha() const { return alpha_; }
  std::uint64_t interval() const { return interval_; }
  double current_p() const { return current_; }
  std::uint64_t updates_applied() const { return updates_; }
  std::uint64_t pending_evaluations() const { return pending_; }

  // One update: p <- alpha * p.
  void cool() {
    current_ *= alpha_;
    ++updates_;
  }

  // Accumulates fitness evaluations and cools once per full interval crossed;
  // a single call may apply several updates, the remainder carries over.
  void record_evaluations(std::uint64_t count) {
    pending_ += count;
    while (pending_ >= interval_) {
      pending_ -= interval_;
      cool();
    }
  }

 private:
  double p0_;
  double alpha_;
  std::uint64_t interval_;
  double current_;
  std::uint64_t updates_ = 0;
  std::uint64_t pending_ = 0;
};

}  // namespace boolevo
