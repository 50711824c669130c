#ifndef EISCONG_REDUCTION_HPP
#define EISCONG_REDUCTION_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"
#include "numutil.hpp"

namespace eiscong {

namespace fp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>; // ascending coefficients mod ell, no leading zeros

inline u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 subm(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
inline u64 mulm(u64 a, u64 b, u64 p) { return (unsigned __int128)a * b % p; }

inline u64 powm(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulm(r, b, p);
        b = mulm(b, b, p);
        e >>= 1;
    }
    return r;
}

inline u64 invm(u64 a, u64 p) {
    if (a % p == 0) throw domain_error("not-integral", "division by the residue characteristic");
    return powm(a, p - 2, p);
}

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const Poly& f) { return (int)f.size() - 1; } // -1 for zero

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + (unsigned __int128)a[i] * b[j]) % p;
    }
    return c;
}

inline Poly rem(Poly a, const Poly& m, u64 p) {
    u64 lead_inv = invm(m.back(), p);
    while ((int)a.size() >= (int)m.size()) {
        u64 c = mulm(a.back(), lead_inv, p);
        size_t shift = a.size() - m.size();
        if (c != 0)
            for (size_t i = 0; i < m.size(); ++i)
                a[shift + i] = subm(a[shift + i], mulm(c, m[i], p), p);
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    return rem(mul(a, b, p), m, p);
}

inline Poly powmod(Poly base, const mpz_class& e, const Poly& m, u64 p) {
    Poly r{1};
    base = rem(std::move(base), m, p);
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        k >>= 1;
    }
    return r;
}

inline Poly monic(Poly f, u64 p) {
    if (f.empty()) return f;
    u64 inv = invm(f.back(), p);
    for (auto& c : f) c = mulm(c, inv, p);
    return f;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a.swap(b);
        b.swap(r);
    }
    return monic(a, p);
}

// Bezout coefficient s with s*a = g mod m (for inversion mod irreducible m).
inline Poly inv_mod(const Poly& a, const Poly& m, u64 p) {
    Poly r0 = m, r1 = rem(a, m, p);
    if (r1.empty()) throw domain_error("division-by-zero", "inverse of zero field element");
    Poly s0{}, s1{1};
    while (true) {
        // r0 = q*r1 + r2
        Poly r2 = r0;
        Poly q;
        u64 lead_inv = invm(r1.back(), p);
        q.assign(r2.size() >= r1.size() ? r2.size() - r1.size() + 1 : 1, 0);
        while ((int)r2.size() >= (int)r1.size() && !r2.empty()) {
            u64 c = mulm(r2.back(), lead_inv, p);
            size_t shift = r2.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                r2[shift + i] = subm(r2[shift + i], mulm(c, r1[i], p), p);
            r2.pop_back();
            trim(r2);
        }
        Poly s2 = s0;
        {
            Poly qs = mul(q, s1, p);
            if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
            for (size_t i = 0; i < qs.size(); ++i) s2[i] = subm(s2[i], qs[i], p);
            trim(s2);
        }
        if (r2.empty()) {
            if (deg(r1) != 0)
                throw domain_error("internal-error", "inverse modulo reducible polynomial");
            u64 inv = invm(r1[0], p);
            for (auto& c : s1) c = mulm(c, inv, p);
            return rem(std::move(s1), m, p);
        }
        r0.swap(r1);
        r1.swap(r2);
        s0.swap(s1);
        s1.swap(s2);
    }
}

} // namespace fp

// Deterministic ordered list of the irreducible factors of Phi_m mod ell;
// all have degree d = mult. order of ell mod m. Factors are sorted by their
// ascending coefficient vector, lexicographically.
inline std::vector<fp::Poly> factor_cyclotomic_mod(fp::u64 ell, unsigned m) {
    using namespace fp;
    if (m % ell == 0)
        throw domain_error("ramified-unsupported", "ell divides the cyclotomic order");
    static std::mutex cache_mu;
    static std::map<std::pair<u64, unsigned>, std::vector<Poly>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find({ell, m});
        if (it != cache.end()) return it->second;
    }
    const auto& phi_z = detail::cyclotomic_poly(m);
    Poly phi(phi_z.size());
    for (size_t i = 0; i < phi_z.size(); ++i)
        phi[i] = (u64)(((phi_z[i] % (long long)ell) + (long long)ell) % (long long)ell);
    trim(phi);
    unsigned d = (unsigned)mult_order((long long)(ell % m), m);

    std::vector<Poly> done, work{phi};
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), (unsigned long)ell, d); // ell^d
    mpz_class half = (qd - 1) / 2;

    // deterministic splitter enumeration: polynomials ordered by degree,
    // then by coefficient vector
    auto nth_candidate = [&](unsigned long idx) {
        Poly a;
        unsigned degc = 1;
        unsigned long span = (unsigned long)ell; // candidates of this degree (monic-free count)
        // enumerate all polys of degree exactly degc with coefficients < ell
        unsigned long count = (unsigned long)(ell - 1) * span;
        while (idx >= count) {
            idx -= count;
            ++degc;
            span *= (unsigned long)ell;
            count = (unsigned long)(ell - 1) * span;
        }
        a.assign(degc + 1, 0);
        for (unsigned i = 0; i < degc; ++i) {
            a[i] = idx % ell;
            idx /= ell;
        }
        a[degc] = 1 + idx; // leading coefficient in [1, ell)
        return a;
    };

    while (!work.empty()) {
        Poly f = work.back();
        work.pop_back();
        if ((unsigned)deg(f) == d) {
            done.push_back(monic(std::move(f), ell));
            continue;
        }
        bool split = false;
        for (unsigned long idx = 0; !split; ++idx) {
            Poly a = nth_candidate(idx);
            Poly h;
            if (ell == 2) {
                // trace map a + a^2 + ... + a^{2^{d-1}}
                Poly t = rem(a, f, ell), acc = t;
                for (unsigned i = 1; i < d; ++i) {
                    t = mulmod(t, t, f, ell);
                    if (acc.size() < t.size()) acc.resize(t.size(), 0);
                    for (size_t j = 0; j < t.size(); ++j) acc[j] ^= t[j];
                    trim(acc);
                }
                h = acc;
            } else {
                h = powmod(a, half, f, ell);
                if (h.empty()) h = {ell - 1};
                else {
                    h[0] = subm(h[0], 1, ell);
                    trim(h);
                }
            }
            if (h.empty()) continue;
            Poly g = fp::gcd(f, h, ell);
            if (deg(g) > 0 && deg(g) < deg(f)) {
                // f / g by repeated remainder-free division
                Poly q, r = f;
                u64 lead_inv = invm(g.back(), ell);
                q.assign(r.size() - g.size() + 1, 0);
                while ((int)r.size() >= (int)g.size() && !r.empty()) {
                    u64 c = mulm(r.back(), lead_inv, ell);
                    size_t shift = r.size() - g.size();
                    q[shift] = c;
                    for (size_t i = 0; i < g.size(); ++i)
                        r[shift + i] = subm(r[shift + i], mulm(c, g[i], ell), ell);
                    r.pop_back();
                    trim(r);
                }
                work.push_back(g);
                work.push_back(q);
                split = true;
            }
        }
    }
    std::sort(done.begin(), done.end());
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        cache.emplace(std::make_pair(ell, m), done);
    }
    return done;
}

// A prime of Q(zeta_m) above ell: an irreducible factor g of Phi_m mod ell.
struct Place {
    fp::u64 ell = 0;
    unsigned m = 1;       // ambient cyclotomic order, ell does not divide m
    fp::Poly min_poly;    // monic irreducible, ascending coefficients
    unsigned degree = 1;  // = deg min_poly = mult. order of ell mod m

    friend bool operator==(const Place& a, const Place& b) {
        return a.ell == b.ell && a.m == b.m && a.min_poly == b.min_poly;
    }
};

inline Place from_factor(fp::u64 ell, unsigned m, fp::Poly g) {
    Place w;
    w.ell = ell;
    w.m = m;
    w.degree = (unsigned)fp::deg(g);
    w.min_poly = std::move(g);
    return w;
}

// Deterministic choice: lexicographically smallest factor of Phi_m mod ell.
inline Place place_above(fp::u64 ell, unsigned m) {
    auto factors = factor_cyclotomic_mod(ell, m);
    return from_factor(ell, m, factors.front());
}

struct FFElem;
inline void check(const FFElem& a, const FFElem& b);

// Element of F_{ell^d} in the polynomial basis of the place's factor.
struct FFElem {
    Place place;
    std::vector<fp::u64> coeffs; // length = place.degree

    bool is_zero() const {
        for (auto c : coeffs)
            if (c) return false;
        return true;
    }
    bool is_one() const {
        if (coeffs.empty() || coeffs[0] != 1) return false;
        for (size_t i = 1; i < coeffs.size(); ++i)
            if (coeffs[i]) return false;
        return true;
    }

    static FFElem zero(const Place& w) { return {w, std::vector<fp::u64>(w.degree, 0)}; }

    static FFElem from_int(const Place& w, long long v) {
        FFElem e = zero(w);
        long long r = ((v % (long long)w.ell) + (long long)w.ell) % (long long)w.ell;
        e.coeffs[0] = (fp::u64)r;
        return e;
    }

    static FFElem from_poly(const Place& w, fp::Poly f) {
        f = fp::rem(std::move(f), w.min_poly, w.ell);
        f.resize(w.degree, 0);
        return {w, std::move(f)};
    }

    friend FFElem operator+(const FFElem& a, const FFElem& b) {
        check(a, b);
        FFElem c = a;
        for (size_t i = 0; i < c.coeffs.size(); ++i)
            c.coeffs[i] = fp::addm(c.coeffs[i], b.coeffs[i], a.place.ell);
        return c;
    }
    friend FFElem operator-(const FFElem& a, const FFElem& b) {
        check(a, b);
        FFElem c = a;
        for (size_t i = 0; i < c.coeffs.size(); ++i)
            c.coeffs[i] = fp::subm(c.coeffs[i], b.coeffs[i], a.place.ell);
        return c;
    }
    friend FFElem operator*(const FFElem& a, const FFElem& b) {
        check(a, b);
        fp::Poly pa = a.coeffs, pb = b.coeffs;
        fp::trim(pa);
        fp::trim(pb);
        return from_poly(a.place, fp::mul(pa, pb, a.place.ell));
    }
    FFElem inverse() const {
        fp::Poly pa = coeffs;
        fp::trim(pa);
        return from_poly(place, fp::inv_mod(pa, place.min_poly, place.ell));
    }
    FFElem pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        FFElem r = from_int(place, 1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }
    friend bool operator==(const FFElem& a, const FFElem& b) {
        return a.place == b.place && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }
};

inline void check(const FFElem& a, const FFElem& b) {
    if (!(a.place == b.place))
        throw domain_error("incompatible-orders", "field elements at different places");
}

// Ring homomorphism nu_w: zeta_m |-> class of x mod (ell, g); rationals
// reduce by the modular inverse of their denominator.
inline FFElem reduce_at(const Cyclotomic& x, const Place& w) {
    if (w.m % x.order() != 0)
        throw domain_error("incompatible-orders",
                           "element order does not divide the place's ambient order");
    Cyclotomic y = x.promoted(w.m);
    fp::Poly poly(y.coeffs().size(), 0);
    for (size_t i = 0; i < y.coeffs().size(); ++i) {
        const mpq_class& c = y.coeffs()[i];
        mpz_class num = c.get_num(), den = c.get_den();
        mpz_class ellz((unsigned long)w.ell);
        if (mpz_divisible_p(den.get_mpz_t(), ellz.get_mpz_t()))
            throw domain_error("not-integral",
                               "coefficient denominator divisible by ell at index " + std::to_string(i));
        mpz_class nr = num % ellz, dr = den % ellz;
        fp::u64 n = (fp::u64)((nr.get_si() % (long long)w.ell + (long long)w.ell) % (long long)w.ell);
        fp::u64 d = (fp::u64)((dr.get_si() % (long long)w.ell + (long long)w.ell) % (long long)w.ell);
        poly[i] = fp::mulm(n, fp::invm(d, w.ell), w.ell);
    }
    fp::trim(poly);
    return FFElem::from_poly(w, std::move(poly));
}

// True iff chi is the multiplicative lift of its own mod-ell reduction:
// order and conductor both coprime to ell.
inline bool lift_validate(const DirichletCharacter& chi, fp::u64 ell) {
    if (gcd_ll(chi.order(), (long long)ell) != 1) return false;
    return gcd_ll(chi.conductor(), (long long)ell) == 1;
}

} // namespace eiscong

#endif
