#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace jts {

// Kahan-compensated accumulator; order-independent up to rounding.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Streaming log(sum(exp(x_i))) without overflow: tracks a running max and
// a rescaled mantissa sum.
class LogSumExp {
 public:
  void add(double x) {
    if (count_ == 0 || x > max_) {
      if (count_ > 0) sum_ *= std::exp(max_ - x);
      max_ = x;
      sum_ += 1.0;
    } else {
      sum_ += std::exp(x - max_);
    }
    ++count_;
  }
  bool empty() const { return count_ == 0; }
  long long count() const { return count_; }
  double value() const { return max_ + std::log(sum_); }

 private:
  double max_ = 0.0;
  double sum_ = 0.0;
  long long count_ = 0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rmse = 0.0;         // residual root mean square
  double slope_stderr = 0.0;
};

LinearFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys);

// Deterministic counter-based stream: value j of stream (key) is a pure
// function mix(key, j), so trials can be replayed and parallelized freely.
class CounterRng {
 public:
  explicit CounterRng(uint64_t key) : key_(key) {}

  static uint64_t mix(uint64_t key, uint64_t counter);

  uint64_t next() { return mix(key_, counter_++); }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

// Maximize a unimodal-enough smooth function on [lo, hi] by golden-section.
double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol,
                  int max_iter = 200);

}  // namespace jts
