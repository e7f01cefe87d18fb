#pragma once

#include "exactmath/poly.hpp"

#include <random>

namespace fltt {

using flt::Int;
using flt::ZPoly;

// Deterministic generator for property tests.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    ZPoly poly(int deg, long coef, bool monic)
    {
        std::vector<Int> c;
        for (int i = 0; i < deg; ++i) c.push_back(range(-coef, coef));
        long lead = monic ? 1 : range(1, coef);
        c.push_back(lead);
        return ZPoly(c);
    }
};

} // namespace fltt
