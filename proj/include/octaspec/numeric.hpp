#pragma once

#include <cmath>
#include <string>

namespace octaspec {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
        else comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Rounds to `digits` significant digits; used for every number we print.
double round_significant(double x, int digits = 12);

// "%.12g"-style text of a rounded value.
std::string format_real(double x, int digits = 12);

}  // namespace octaspec
