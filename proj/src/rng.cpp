#include "cyclerange/rng.hpp"

#include <cmath>

namespace cyclerange {

std::vector<double> random_ascending_weights(Xoshiro256ss& rng, int n) {
    std::vector<double> a(n);
    double cur = rng.uniform(0.05, 0.6);
    for (int i = 0; i < n; ++i) {
        a[i] = cur;
        cur += rng.uniform(0.02, 0.8);
    }
    return a;
}

std::vector<double> random_product_one_weights(Xoshiro256ss& rng, int n) {
    std::vector<double> a(n);
    double log_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double g = rng.uniform(-0.9, 0.9);
        a[i] = std::exp(g);
        log_sum += g;
    }
    double fix = std::exp(-log_sum / n);
    for (double& x : a) x *= fix;
    return a;
}

}  // namespace cyclerange
