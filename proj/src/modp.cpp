#include "reflectcg/modp.hpp"

namespace rcg {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    Fp f(n);
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = f.pow(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = f.mul(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t next_prime_1mod3(std::uint64_t start) {
    std::uint64_t n = start < 7 ? 7 : start;
    while (!(n % 3 == 1 && is_prime(n))) ++n;
    return n;
}

std::uint64_t cube_root_of_unity(std::uint64_t p) {
    if (p % 3 != 1) throw std::invalid_argument("p must be 1 mod 3");
    Fp f(p);
    for (std::uint64_t a = 2; a < p; ++a) {
        std::uint64_t w = f.pow(a, (p - 1) / 3);
        if (w != 1) return w;  // order divides 3 and is not 1
    }
    throw std::logic_error("no cube root of unity found");
}

}  // namespace rcg
