#pragma once

#include <cstdint>

#include "krall/poly.hpp"

namespace krall {

/// Deterministic xorshift64* generator for the randomized property suites.
/// Seeded explicitly so every run is reproducible across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545f4914f6cdd1dull;
    }

    long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }

    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

    Rat rat(long max_abs_num = 6, long max_den = 3) {
        long num = range(-max_abs_num, max_abs_num);
        long den = range(1, max_den);
        return Rat(num, den);
    }

    Rat nonzero_rat(long max_abs_num = 6, long max_den = 3) {
        Rat r = rat(max_abs_num, max_den);
        while (r.is_zero()) r = rat(max_abs_num, max_den);
        return r;
    }

    template <class Var>
    Poly<Rat, Var> poly(int deg, long max_abs_num = 4, long max_den = 2) {
        std::vector<Rat> c(static_cast<size_t>(deg) + 1);
        for (auto& x : c) x = rat(max_abs_num, max_den);
        c.back() = nonzero_rat(max_abs_num, max_den);
        return Poly<Rat, Var>(std::move(c));
    }

private:
    uint64_t s_;
};

}  // namespace krall
