#ifndef TAVG_COMPENSATED_HPP
#define TAVG_COMPENSATED_HPP

#include <cmath>

namespace tavg {

/// Neumaier compensated accumulator; keeps long running sums at a few ulp
/// regardless of cancellation order.
class CompensatedSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace tavg

#endif
