#pragma once

#include <cmath>
#include <limits>

namespace commrank {

/// One-pass mean/stddev/min/max (Welford). Sample standard deviation
/// (n - 1 denominator); zero when fewer than two samples.
class RunningStats {
public:
    void add(double x) {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / count_;
        m2_ += delta * (x - mean_);
        if (x < min_) min_ = x;
        if (x > max_) max_ = x;
    }

    long count() const { return count_; }
    double mean() const { return count_ > 0 ? mean_ : std::numeric_limits<double>::quiet_NaN(); }
    double sample_stddev() const { return count_ > 1 ? std::sqrt(m2_ / (count_ - 1)) : 0.0; }
    double min() const { return count_ > 0 ? min_ : std::numeric_limits<double>::quiet_NaN(); }
    double max() const { return count_ > 0 ? max_ : std::numeric_limits<double>::quiet_NaN(); }

private:
    long count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double min_ = std::numeric_limits<double>::infinity();
    double max_ = -std::numeric_limits<double>::infinity();
};

}  // namespace commrank
