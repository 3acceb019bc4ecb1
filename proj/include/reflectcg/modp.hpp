#pragma once

#include <cstdint>
#include <stdexcept>

namespace rcg {

// Arithmetic in the prime field F_p, p < 2^62.
struct Fp {
    std::uint64_t p;

    explicit Fp(std::uint64_t prime) : p(prime) {}

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t acc = 1 % p;
        while (e) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("inverse of 0 mod p");
        return pow(a, p - 2);
    }
    std::uint64_t pow_signed(std::uint64_t a, long e) const {
        if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
        return pow(inv(a), static_cast<std::uint64_t>(-e));
    }
};

bool is_prime(std::uint64_t n);

// Smallest prime p >= start with p = 1 (mod 3), so F_p contains a
// primitive cube root of unity.
std::uint64_t next_prime_1mod3(std::uint64_t start);

// A fixed primitive cube root of unity in F_p (requires p = 1 mod 3).
std::uint64_t cube_root_of_unity(std::uint64_t p);

inline constexpr std::uint64_t kDefaultPrime = 1000003;  // = 1 mod 3

}  // namespace rcg
