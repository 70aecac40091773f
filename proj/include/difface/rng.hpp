#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "difface/tensor.hpp"

namespace difface {

// All stochastic stages draw from an explicitly seeded generator so that every
// run is a pure function of (inputs, seed).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    double normal() { return normal_(gen_); }
    double uniform() { return uniform_(gen_); }  // [0,1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        return std::uniform_int_distribution<int64_t>(lo, hi)(gen_);
    }

    Tensor normal_like(const Tensor& shape_of) {
        Tensor out = Tensor::zeros_like(shape_of);
        for (double& v : out.data) v = normal();
        return out;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

namespace detail {
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}
}  // namespace detail

// Per-stage sub-seeds from a root seed: mixing the stage name and an optional
// index keeps stages decorrelated while staying reproducible from one --seed.
inline uint64_t derive_seed(uint64_t root, std::string_view stage,
                            uint64_t index = 0) {
    uint64_t h = detail::splitmix64(root ^ detail::fnv1a64(stage));
    return detail::splitmix64(h ^ detail::splitmix64(index));
}

}  // namespace difface
