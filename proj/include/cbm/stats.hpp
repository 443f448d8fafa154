#pragma once

#include <cmath>
#include <cstddef>

namespace cbm {

/// Monte Carlo point estimate with its standard error and sample count.
struct EstimateWithError {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
};

/// Welford accumulator for mean/variance of a stream of values.
class RunningStat {
public:
    void add(double x) {
        ++n_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(n_);
        m2_ += delta * (x - mean_);
    }

    std::size_t count() const { return n_; }
    double mean() const { return mean_; }

    double variance() const {
        return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
    }

    double std_error() const {
        return n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
    }

    EstimateWithError estimate() const { return {mean(), std_error(), n_}; }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

}  // namespace cbm
