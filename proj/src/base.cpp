#include "pqr/base.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace pqr {

Caps& caps() {
    static Caps c;
    return c;
}

std::uint64_t ipow_checked(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw Error("integer power overflow");
        r *= base;
    }
    return r;
}

std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t q = a / g;
    if (q > UINT64_MAX / b) throw Error("lcm overflow");
    return q * b;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned m = 0;
            while (n % p == 0) { n /= p; ++m; }
            out.emplace_back(p, m);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, m] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw PreconditionError("inverse of zero");
    return powmod_u64(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // witness set exact for all n < 3.3*10^24
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t prime_in_progression(std::uint64_t modulus, std::uint64_t above) {
    if (modulus == 0) throw PreconditionError("progression with zero modulus");
    for (std::uint64_t k = above / modulus;; ++k) {
        if (k > (UINT64_MAX - 1) / modulus) throw Error("prime search overflow");
        std::uint64_t p = modulus * k + 1;
        if (p > above && is_prime_u64(p)) return p;
    }
}

std::uint64_t root_of_order(std::uint64_t p, std::uint64_t e) {
    if (e == 0 || (p - 1) % e != 0) throw PreconditionError("order does not divide p-1");
    if (e == 1) return 1;
    auto primes = factorize(e);
    for (std::uint64_t a = 2; a < p; ++a) {
        std::uint64_t w = powmod_u64(a, (p - 1) / e, p);
        if (w == 1) continue;
        bool full = true;
        for (auto [q, mult] : primes) {
            if (powmod_u64(w, e / q, p) == 1) { full = false; break; }
        }
        if (full) return w;
    }
    throw ValidationError("no element of the requested order");
}

}  // namespace pqr
