#ifndef EISCONG_NUMUTIL_HPP
#define EISCONG_NUMUTIL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace eiscong {

inline long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline long long lcm_ll(long long a, long long b) {
    return std::lcm(a, b);
}

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// (prime, exponent) pairs, ascending
inline std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

inline std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline long long euler_phi(long long n) {
    long long r = n;
    for (auto& [p, e] : factorize(n)) r -= r / p;
    return r;
}

inline long long mod_pow_ll(long long b, long long e, long long m) {
    unsigned long long r = 1 % (unsigned long long)m, x = ((b % m) + m) % m;
    while (e > 0) {
        if (e & 1) r = (unsigned __int128)r * x % m;
        x = (unsigned __int128)x * x % m;
        e >>= 1;
    }
    return (long long)r;
}

// multiplicative order of a modulo n, requires gcd(a,n)=1
inline long long mult_order(long long a, long long n) {
    if (n == 1) return 1;
    long long x = ((a % n) + n) % n, y = x, ord = 1;
    while (y != 1) {
        y = (unsigned __int128)y * x % n;
        ++ord;
    }
    return ord;
}

// smallest primitive root mod p^e (p odd prime) or mod 4 / 2 / 1
inline long long primitive_root(long long q) {
    if (q == 1 || q == 2) return 1;
    if (q == 4) return 3;
    long long phi = euler_phi(q);
    auto ps = prime_divisors(phi);
    for (long long g = 2; g < q; ++g) {
        if (gcd_ll(g, q) != 1) continue;
        bool ok = true;
        for (long long p : ps)
            if (mod_pow_ll(g, phi / p, q) == 1) { ok = false; break; }
        if (ok) return g;
    }
    return -1; // unreachable for prime powers
}

// x*a + y*b = g = gcd(a,b), g >= 0
inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// CRT: x = r1 mod m1, x = r2 mod m2, gcd(m1,m2)=1; result in [0, m1*m2)
inline long long crt(long long r1, long long m1, long long r2, long long m2) {
    long long x, y;
    ext_gcd(m1, m2, x, y);
    long long m = m1 * m2;
    __int128 v = (__int128)r1 * y % m * m2 + (__int128)r2 * x % m * m1;
    long long r = (long long)(v % m);
    return ((r % m) + m) % m;
}

inline std::vector<long long> primes_up_to(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p <= n; ++p)
        if (is_prime_ll(p)) out.push_back(p);
    return out;
}

} // namespace eiscong

#endif
