#ifndef QKIN_SUMMATION_HPP
#define QKIN_SUMMATION_HPP

#include <cmath>
#include <span>

namespace qkin {

/// Neumaier-compensated accumulator. All conserved-quantity bookkeeping
/// (moments, rhs balance, entropy-rate channel sums) goes through this so
/// that conservation residuals stay at the 1e-13 relative level the tests
/// demand.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_total(std::span<const double> xs) {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

}  // namespace qkin

#endif
