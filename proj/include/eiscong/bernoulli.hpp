#ifndef EISCONG_BERNOULLI_HPP
#define EISCONG_BERNOULLI_HPP

#include <mutex>
#include <vector>

#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"

namespace eiscong {

// Classical B_m, B_1 = -1/2; memoized, safe for concurrent readers.
inline mpq_class bernoulli_number(unsigned m) {
    static std::mutex mu;
    static std::vector<mpq_class> table{mpq_class(1)}; // B_0
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= m) {
        unsigned n = (unsigned)table.size();
        // sum_{j=0}^{n} C(n+1, j) B_j = 0
        mpq_class s(0);
        mpz_class binom(1); // C(n+1, 0)
        for (unsigned j = 0; j < n; ++j) {
            s += mpq_class(binom) * table[j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        table.push_back(-s / mpq_class(binom)); // binom = C(n+1, n) = n+1
    }
    return table[m];
}

// Coefficients of B_m(x), ascending: B_m(x) = sum_j C(m,j) B_{m-j} x^j.
inline std::vector<mpq_class> bernoulli_polynomial(unsigned m) {
    std::vector<mpq_class> coeffs(m + 1);
    mpz_class binom(1);
    for (unsigned j = 0; j <= m; ++j) {
        coeffs[j] = mpq_class(binom) * bernoulli_number(m - j);
        if (j < m) binom = binom * (m - j) / (j + 1);
    }
    return coeffs;
}

inline mpq_class eval_poly(const std::vector<mpq_class>& coeffs, const mpq_class& x) {
    mpq_class acc(0);
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

// B_{m,chi} = f^{m-1} sum_{a=1}^{f} chi(a) B_m(a/f), exact in Q(zeta_n).
inline Cyclotomic bernoulli_char(unsigned m, const DirichletCharacter& chi) {
    if (m < 1) throw domain_error("invalid-order", "m must be positive");
    if (!chi.is_primitive())
        throw domain_error("not-primitive", "generalized Bernoulli numbers require a primitive character");
    long long f = chi.modulus();
    long long n = chi.order();
    auto bpoly = bernoulli_polynomial(m);
    std::vector<mpq_class> acc((size_t)n, mpq_class(0)); // coefficient of zeta_n^e
    for (long long a = 1; a <= f; ++a) {
        long long e = chi.exponent_at(a);
        if (e < 0) continue;
        acc[(size_t)e] += eval_poly(bpoly, mpq_class((long)a, (long)f));
    }
    mpq_class scale(1);
    for (unsigned i = 1; i < m; ++i) scale *= (long)f;
    for (auto& c : acc) c *= scale;
    return Cyclotomic::from_poly((unsigned)n, std::move(acc));
}

enum class CarlitzCase {
    two_prime_divisors, // d = 1
    conductor_four,     // d = 2
    power_of_two,       // d = 1, conductor 2^n, n > 2
    odd_prime,          // d = k * f0
    odd_prime_power,    // d = 1 - psi(1+p), conductor p^n, odd p, n > 1
};

struct CarlitzCertificate {
    Cyclotomic d;
    CarlitzCase case_tag;
};

// The Carlitz multiplier: d * k^{-1} * B_{k,chi} is an algebraic integer.
inline CarlitzCertificate carlitz_certificate(const DirichletCharacter& chi, unsigned k) {
    if (chi.is_trivial())
        throw domain_error("trivial-character",
                           "use the Van Staudt-Clausen bound for the trivial character");
    if (!chi.is_primitive())
        throw domain_error("not-primitive", "certificate requires a primitive character");
    long long f0 = chi.modulus();
    auto fac = factorize(f0);
    if (fac.size() >= 2)
        return {Cyclotomic(1), CarlitzCase::two_prime_divisors};
    long long p = fac[0].first;
    int e = fac[0].second;
    if (p == 2) {
        if (f0 == 4) return {Cyclotomic(2), CarlitzCase::conductor_four};
        return {Cyclotomic(1), CarlitzCase::power_of_two};
    }
    if (e == 1)
        return {Cyclotomic((long long)k * f0), CarlitzCase::odd_prime};
    return {Cyclotomic(1) - chi.eval(1 + p), CarlitzCase::odd_prime_power};
}

} // namespace eiscong

#endif
