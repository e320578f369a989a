#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace randgen {

// Random sample source for the --random CLI mode and the benchmark: size
// uniform in [min_n, max_n], values log-uniform on [1e-6, 1e6], each value
// independently replaced by an exact zero with probability zero_prob.
struct Gen {
    std::mt19937_64 rng;
    int min_n;
    int max_n;
    double zero_prob;

    explicit Gen(std::uint64_t seed, int min_n_ = 1, int max_n_ = 16, double zero_prob_ = 0.1)
        : rng(seed), min_n(min_n_), max_n(max_n_), zero_prob(zero_prob_) {}

    std::vector<double> next() {
        std::uniform_int_distribution<int> nd(min_n, max_n);
        std::uniform_real_distribution<double> zu(0.0, 1.0);
        std::uniform_real_distribution<double> lu(std::log(1e-6), std::log(1e6));
        std::vector<double> v(static_cast<std::size_t>(nd(rng)));
        for (auto& x : v) x = zu(rng) < zero_prob ? 0.0 : std::exp(lu(rng));
        return v;
    }
};

}
