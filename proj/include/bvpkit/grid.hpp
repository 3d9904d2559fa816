#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bvpkit/types.hpp"

namespace bvp {

/// Uniform grid over an interval with an even number of steps, so that the
/// same nodes serve the integrator and composite Simpson quadrature.
class Grid {
public:
    Grid(Interval interval, int num_steps) : interval_(interval), num_steps_(num_steps) {
        if (!(interval.a < interval.b) || !std::isfinite(interval.a) || !std::isfinite(interval.b)) {
            throw std::invalid_argument("grid interval must be finite with a < b");
        }
        if (num_steps < 2 || num_steps % 2 != 0) {
            throw std::invalid_argument("grid step count must be a positive even integer");
        }
        h_ = interval.length() / num_steps;
        points_.resize(num_steps + 1);
        for (int i = 0; i <= num_steps; ++i) points_[i] = interval.a + i * h_;
        points_.back() = interval.b;
    }

    const Interval& interval() const { return interval_; }
    int num_steps() const { return num_steps_; }
    int num_points() const { return num_steps_ + 1; }
    double step() const { return h_; }
    double point(int i) const { return points_[i]; }
    const std::vector<double>& points() const { return points_; }

    friend bool operator==(const Grid& x, const Grid& y) {
        return x.interval_.a == y.interval_.a && x.interval_.b == y.interval_.b &&
               x.num_steps_ == y.num_steps_;
    }

private:
    Interval interval_;
    int num_steps_;
    double h_ = 0.0;
    std::vector<double> points_;
};

}  // namespace bvp
