#ifndef COGCAP_DETAIL_SUMMATION_HPP
#define COGCAP_DETAIL_SUMMATION_HPP

#include <cmath>

namespace cogcap::detail {

// Neumaier's variant of Kahan compensated summation.
class CompensatedSum {
public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const noexcept { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace cogcap::detail

#endif
