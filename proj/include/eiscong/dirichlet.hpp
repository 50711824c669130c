#ifndef EISCONG_DIRICHLET_HPP
#define EISCONG_DIRICHLET_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "numutil.hpp"

namespace eiscong {

struct GeneratorImage {
    long long generator;  // residue in the canonical generator system
    long long exponent;   // image is zeta_{root_order}^exponent
    long long root_order;
};

// Canonical generator system of (Z/q)^x: per prime power p^e of q, the
// smallest primitive root (odd p), 3 for q=4, and the pair (-1, 5) for 2^e
// with e >= 3; each lifted by CRT to a residue mod q that is 1 at the other
// prime powers. Returned as (residue, order) pairs.
inline std::vector<std::pair<long long, long long>> canonical_generators(long long q) {
    std::vector<std::pair<long long, long long>> out;
    for (auto& [p, e] : factorize(q)) {
        long long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        long long cof = q / pe;
        auto lift = [&](long long g) {
            return cof == 1 ? g : crt(g, pe, 1, cof);
        };
        if (p == 2) {
            if (e == 1) continue; // (Z/2)^x trivial
            if (e == 2) {
                out.emplace_back(lift(3), 2);
            } else {
                out.emplace_back(lift(pe - 1), 2);
                out.emplace_back(lift(5), pe / 4);
            }
        } else {
            long long g = primitive_root(pe);
            out.emplace_back(lift(g), euler_phi(pe));
        }
    }
    return out;
}

// Character mod q with values recorded as powers of zeta_n; full value
// table, -1 marking non-units. The order field is always the exact order.
class DirichletCharacter {
public:
    static DirichletCharacter trivial(long long q = 1) {
        DirichletCharacter chi;
        chi.modulus_ = q;
        chi.order_ = 1;
        chi.values_.assign((size_t)q, -1);
        for (long long a = 1; a <= q; ++a)
            if (gcd_ll(a, q) == 1) chi.values_[(size_t)a - 1] = 0;
        if (q == 1) chi.values_[0] = 0;
        return chi;
    }

    static DirichletCharacter from_generator_images(long long q,
                                                    const std::vector<GeneratorImage>& images) {
        if (q < 1) throw domain_error("invalid-order", "modulus must be positive");
        auto gens = canonical_generators(q);
        // one image per canonical generator; unspecified generators map to 1
        std::vector<long long> img_num(gens.size(), 0), img_den(gens.size(), 1);
        for (auto& im : images) {
            size_t idx = gens.size();
            for (size_t i = 0; i < gens.size(); ++i)
                if (gens[i].first == im.generator) idx = i;
            if (idx == gens.size())
                throw domain_error("invalid-generator",
                                   std::to_string(im.generator) +
                                       " is not a canonical generator mod " + std::to_string(q));
            if (im.root_order < 1)
                throw domain_error("invalid-character", "root order must be positive");
            long long g = gcd_ll(im.exponent, im.root_order);
            long long ord = im.root_order / g; // order of the image root of unity
            if (gens[idx].second % ord != 0)
                throw domain_error("invalid-character",
                                   "image order does not divide generator order");
            img_num[idx] = ((im.exponent / g) % ord + ord) % ord;
            img_den[idx] = ord;
        }
        long long n = 1;
        for (size_t i = 0; i < gens.size(); ++i) n = lcm_ll(n, img_den[i]);
        // exponent of zeta_n at each generator
        std::vector<long long> gexp(gens.size());
        for (size_t i = 0; i < gens.size(); ++i)
            gexp[i] = img_num[i] * (n / img_den[i]) % n;

        DirichletCharacter chi;
        chi.modulus_ = q;
        chi.order_ = n;
        chi.values_.assign((size_t)q, -1);
        // fill by enumerating exponent tuples of the generator system
        std::vector<long long> t(gens.size(), 0);
        while (true) {
            long long a = 1 % q, e = 0;
            for (size_t i = 0; i < gens.size(); ++i) {
                for (long long s = 0; s < t[i]; ++s)
                    a = (__int128)a * gens[i].first % q;
                e = (e + t[i] * gexp[i]) % n;
            }
            chi.values_[(size_t)(a == 0 ? q : a) - 1] = e;
            size_t i = 0;
            for (; i < gens.size(); ++i) {
                if (++t[i] < gens[i].second) break;
                t[i] = 0;
            }
            if (i == gens.size()) break;
        }
        chi.normalize_order();
        return chi;
    }

    // value table as stored exponents (null -> -1), validated
    static DirichletCharacter from_value_table(long long q, long long order,
                                               std::vector<long long> values) {
        if (q < 1 || order < 1 || (long long)values.size() != q)
            throw domain_error("invalid-character", "bad table dimensions");
        DirichletCharacter chi;
        chi.modulus_ = q;
        chi.order_ = order;
        chi.values_ = std::move(values);
        for (long long a = 1; a <= q; ++a) {
            bool unit = (q == 1) || gcd_ll(a, q) == 1;
            long long e = chi.values_[(size_t)a - 1];
            if (unit != (e >= 0) || (unit && e >= order))
                throw domain_error("invalid-character", "table inconsistent at " + std::to_string(a));
        }
        for (long long a = 1; a <= q; ++a)
            for (long long b = a; b <= q; ++b) {
                long long ea = chi.values_[(size_t)a - 1], eb = chi.values_[(size_t)b - 1];
                if (ea < 0 || eb < 0) continue;
                long long ab = (__int128)a * b % q;
                if (chi.values_[(size_t)(ab == 0 ? q : ab) - 1] != (ea + eb) % order)
                    throw domain_error("invalid-character", "table is not multiplicative");
            }
        chi.normalize_order();
        return chi;
    }

    long long modulus() const { return modulus_; }
    long long order() const { return order_; }
    const std::vector<long long>& exponents() const { return values_; }

    bool is_trivial() const { return order_ == 1; }

    // stored exponent of zeta_order at a (reduced mod q), or -1 on non-units
    long long exponent_at(long long a) const {
        if (modulus_ == 1) return 0;
        long long r = ((a % modulus_) + modulus_) % modulus_;
        if (r == 0) r = modulus_;
        return values_[(size_t)r - 1];
    }

    Cyclotomic eval(long long a) const {
        long long e = exponent_at(a);
        if (e < 0) return Cyclotomic(mpq_class(0), (unsigned)order_);
        return Cyclotomic::root_of_unity((unsigned)order_, e);
    }

    // chi(-1), always +1 or -1
    int parity() const {
        long long e = exponent_at(-1);
        return e == 0 ? 1 : -1;
    }

    DirichletCharacter conj() const {
        DirichletCharacter chi(*this);
        for (auto& e : chi.values_)
            if (e > 0) e = order_ - e;
        return chi;
    }

    friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
        long long q = lcm_ll(a.modulus_, b.modulus_);
        long long n = lcm_ll(a.order_, b.order_);
        DirichletCharacter chi;
        chi.modulus_ = q;
        chi.order_ = n;
        chi.values_.assign((size_t)q, -1);
        for (long long x = 1; x <= q; ++x) {
            if (q > 1 && gcd_ll(x, q) != 1) continue;
            long long ea = a.exponent_at(x), eb = b.exponent_at(x);
            chi.values_[(size_t)x - 1] = (ea * (n / a.order_) + eb * (n / b.order_)) % n;
        }
        chi.normalize_order();
        return chi;
    }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.values_ == b.values_;
    }

    // (conductor, associated primitive character)
    std::pair<long long, DirichletCharacter> primitivize() const {
        for (long long f : divisors(modulus_)) {
            // chi factors through mod f iff it is trivial on every unit
            // congruent to 1 mod f
            bool factors = true;
            for (long long a = 1; a <= modulus_; ++a) {
                if ((a - 1) % f != 0) continue;
                long long e = exponent_at(a);
                if (e > 0) { factors = false; break; }
            }
            if (!factors) continue;
            // build the primitive character mod f
            DirichletCharacter prim;
            prim.modulus_ = f;
            prim.order_ = order_;
            prim.values_.assign((size_t)f, -1);
            for (long long b = 1; b <= f; ++b) {
                if (f > 1 && gcd_ll(b, f) != 1) continue;
                long long aa = b;
                while (gcd_ll(aa, modulus_) != 1) aa += f;
                prim.values_[(size_t)b - 1] = exponent_at(aa);
            }
            if (f == 1) prim.values_[0] = 0;
            prim.normalize_order();
            return {f, prim};
        }
        throw domain_error("internal-error", "no conductor found"); // unreachable
    }

    long long conductor() const { return primitivize().first; }
    bool is_primitive() const { return conductor() == modulus_; }

private:
    long long modulus_ = 1;
    long long order_ = 1;
    std::vector<long long> values_;

    // recompute the exact order and rescale exponents
    void normalize_order() {
        long long g = order_;
        for (long long e : values_)
            if (e > 0) g = gcd_ll(g, e);
        long long n2 = order_ / g;
        if (n2 == order_) return;
        for (auto& e : values_)
            if (e > 0) e /= g;
        order_ = n2;
    }
};

// W(chi) = sum chi(a) zeta_f^a, exact in Q(zeta_{lcm(order, f)}).
inline Cyclotomic gauss_sum(const DirichletCharacter& chi) {
    if (!chi.is_primitive())
        throw domain_error("not-primitive", "Gauss sum requires a primitive character");
    long long f = chi.modulus();
    long long n = chi.order();
    unsigned m = (unsigned)lcm_ll(n, f);
    std::vector<mpq_class> poly(m, mpq_class(0));
    for (long long a = 1; a <= f; ++a) {
        long long e = chi.exponent_at(a);
        if (e < 0) continue;
        size_t idx = (size_t)((e * (m / n) + a * (m / f)) % m);
        poly[idx] += 1;
    }
    return Cyclotomic::from_poly(m, std::move(poly));
}

} // namespace eiscong

#endif
