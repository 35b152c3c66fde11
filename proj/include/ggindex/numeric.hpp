#pragma once

#include <cmath>

namespace ggindex {

/// Neumaier compensated summation.
template <typename T>
class CompensatedSum {
public:
    void add(T x)
    {
        const T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    T value() const { return sum_ + compensation_; }

private:
    T sum_{};
    T compensation_{};
};

}  // namespace ggindex
