#pragma once

#include "reflectcg/coeff.hpp"

#include <cstdint>
#include <random>

namespace rcg {

// Seeded deterministic RNG. Every randomized procedure takes an explicit
// seed so runs are reproducible; derive() forks an independent stream for
// a subtask.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed ^ 0x9e3779b97f4a7c15ull) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rng derive(std::uint64_t tag) const {
        std::uint64_t x = seed_ + 0x9e3779b97f4a7c15ull * (tag + 1);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return Rng(x);
    }

    // Small-height rational: numerator in [-9, 9], denominator in [1, 9].
    Rat small_rat() { return rat(range(-9, 9), range(1, 9)); }
    Rat small_rat_nonzero() {
        Rat r = small_rat();
        while (sgn(r) == 0) r = small_rat();
        return r;
    }
    // Random Q(w) value; omega part present in roughly a third of draws.
    Qw small_qw() {
        Rat re = small_rat();
        Rat om = below(3) == 0 ? small_rat() : Rat(0);
        return Qw(re, om);
    }
    Qw small_qw_nonzero() {
        Qw c = small_qw();
        while (c.is_zero()) c = small_qw();
        return c;
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace rcg
