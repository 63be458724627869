#pragma once

#include <cmath>

namespace sphcap {

// Kahan-Neumaier compensated accumulator. merge() lets partial sums from
// fixed chunks be combined in chunk order, keeping results independent of
// the number of worker threads.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    void merge(const KahanSum& other) {
        add(other.sum_);
        comp_ += other.comp_;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace sphcap
