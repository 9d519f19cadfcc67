#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclerange {

/// Bad argument or violated precondition; maps to CLI exit code 2.
class validation_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Comparison requested for a matrix size with no closed-form criterion.
class unsupported_size_error : public validation_error {
  public:
    using validation_error::validation_error;
};

/// Operation defined only for one parity of n.
class unsupported_parity_error : public validation_error {
  public:
    using validation_error::validation_error;
};

/// Root isolation failed: the polynomial has no real root in the search
/// bracket.  Impossible for the spectra handled here, so it signals a
/// malformed input.
class no_real_root_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Kahan-compensated sum.
inline double kahan_sum(const std::vector<double>& xs) {
    double s = 0.0, c = 0.0;
    for (double x : xs) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

inline bool approx_rel(double a, double b, double rel) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= rel * scale;
}

}  // namespace cyclerange
