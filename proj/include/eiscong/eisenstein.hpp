#ifndef EISCONG_EISENSTEIN_HPP
#define EISCONG_EISENSTEIN_HPP

#include <optional>
#include <vector>

#include "bernoulli.hpp"
#include "cyclotomic.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"
#include "numutil.hpp"
#include "reduction.hpp"

namespace eiscong {

// Truncated q-expansion with exact cyclotomic coefficients a_0..a_P.
struct QExpansion {
    long long level = 1;
    int weight = 2;
    DirichletCharacter nebentypus = DirichletCharacter::trivial();
    std::vector<Cyclotomic> coeffs;

    int precision() const { return (int)coeffs.size() - 1; }
};

inline void require_admissible(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                               int k) {
    if (k < 2) throw domain_error("invalid-weight", "weight must be at least 2");
    if (!chi1.is_primitive() || !chi2.is_primitive())
        throw domain_error("not-primitive", "both characters must be primitive");
    int sign = chi1.parity() * chi2.parity();
    if (sign != (k % 2 == 0 ? 1 : -1))
        throw domain_error("not-odd-compatible",
                           "chi1(-1)chi2(-1) must equal (-1)^k");
    if (chi1.modulus() * chi2.modulus() == 1 && k == 2)
        throw domain_error("undefined-series", "the (N,k) = (1,2) series does not exist");
}

// E_k^{chi1,chi2}: a_0 = -delta(chi1) B_{k,chi2} / 2k, a_n = sigma_{k-1}^{chi1,chi2}(n).
inline QExpansion eis_qexp(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                           int k, int P) {
    require_admissible(chi1, chi2, k);
    long long n = lcm_ll(chi1.order(), chi2.order());
    QExpansion f;
    f.level = chi1.modulus() * chi2.modulus();
    f.weight = k;
    f.nebentypus = chi1 * chi2;
    f.coeffs.reserve((size_t)P + 1);
    Cyclotomic a0(mpq_class(0), (unsigned)n);
    if (chi1.is_trivial())
        a0 = bernoulli_char((unsigned)k, chi2) * mpq_class(-1, 2 * k);
    f.coeffs.push_back(a0.promoted((unsigned)n));
    for (long long idx = 1; idx <= P; ++idx) {
        // sigma_{k-1}^{chi1,chi2}(idx) = sum_{m | idx} chi1(idx/m) chi2(m) m^{k-1}
        std::vector<mpq_class> acc((size_t)n, mpq_class(0));
        for (long long m : divisors(idx)) {
            long long e1 = chi1.exponent_at(idx / m);
            long long e2 = chi2.exponent_at(m);
            if (e1 < 0 || e2 < 0) continue;
            mpz_class mk(1);
            for (int i = 0; i + 1 < k; ++i) mk *= (long)m;
            long long e = (e1 * (n / chi1.order()) + e2 * (n / chi2.order())) % n;
            acc[(size_t)e] += mpq_class(mk);
        }
        f.coeffs.push_back(Cyclotomic::from_poly((unsigned)n, std::move(acc)));
    }
    return f;
}

// alpha_M: index dilation by M; level multiplied by M.
inline QExpansion degeneracy(const QExpansion& f, long long M) {
    if (M < 1) throw domain_error("invalid-order", "M must be positive");
    QExpansion g = f;
    g.level = f.level * M;
    for (size_t i = 0; i < g.coeffs.size(); ++i) {
        if (i % (size_t)M == 0)
            g.coeffs[i] = f.coeffs[i / (size_t)M];
        else
            g.coeffs[i] = Cyclotomic(mpq_class(0), f.coeffs[i].order());
    }
    return g;
}

enum class ComboVariant { F1, F2 };

// F1 = E - chi2(M) M^{k-1} alpha_M E  (a_M = chi1(M));
// F2 = E - chi1(M) alpha_M E          (a_M = chi2(M) M^{k-1}).
inline QExpansion level_raise_combo(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                                    int k, long long M, ComboVariant variant, int P) {
    if (!is_prime_ll(M)) throw domain_error("bad-level", "M must be prime");
    long long N = chi1.modulus() * chi2.modulus();
    if (N % M == 0) throw domain_error("bad-level", "M must not divide the level");
    QExpansion e = eis_qexp(chi1, chi2, k, P);
    QExpansion shifted = degeneracy(e, M);
    Cyclotomic c;
    if (variant == ComboVariant::F1) {
        mpz_class mk(1);
        for (int i = 0; i + 1 < k; ++i) mk *= (long)M;
        c = chi2.eval(M) * mpq_class(mk);
    } else {
        c = chi1.eval(M);
    }
    QExpansion out = e;
    out.level = N * M;
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = e.coeffs[i] - c * shifted.coeffs[i];
    return out;
}

struct CuspMatrix {
    long long u = 1, beta = 0, v = 0, delta = 1;

    bool unimodular() const { return u * delta - v * beta == 1; }
};

// One unimodular completion per cusp class a/c of Gamma_0(level), c | level,
// a over the units mod gcd(c, level/c). The cusp infinity (c = level class)
// is represented by the identity matrix.
inline std::vector<CuspMatrix> cusp_enumerate(long long level) {
    if (level < 1) throw domain_error("invalid-order", "level must be positive");
    std::vector<CuspMatrix> out;
    for (long long c : divisors(level)) {
        if (c == level) {
            out.push_back(CuspMatrix{1, 0, 0, 1}); // infinity
            continue;
        }
        long long g = gcd_ll(c, level / c);
        for (long long a0 = 1; a0 <= g; ++a0) {
            if (gcd_ll(a0, g) != 1) continue;
            long long a = a0;
            while (gcd_ll(a, c) != 1) a += g;
            long long x, y;
            ext_gcd(a, c, x, y); // a x + c y = 1
            // matrix (a, -y; c, x): det = a x + c y = 1
            out.push_back(CuspMatrix{a, -y, c, x});
        }
    }
    return out;
}

// Everything in the constant-term formula that does not depend on gamma
// or M, precomputed once: the characters, their Gauss sums, the Bernoulli
// factor and the Euler product. The Gauss-sum denominator is cleared via
// W(chi) W(chi-bar) = chi(-1) f, keeping the arithmetic denominator-light.
class CuspConstantContext {
public:
    CuspConstantContext(const DirichletCharacter& chi1, const DirichletCharacter& chi2, int k)
        : chi1_(chi1), chi2_(chi2), k_(k) {
        require_admissible(chi1, chi2, k);
        f1_ = chi1.modulus();
        f2_ = chi2.modulus();
        N_ = f1_ * f2_;
        auto [f0, psi] = (chi1.conj() * chi2).primitivize();
        f0_ = f0;
        psi_ = psi;           // (chi1-bar chi2)_0, the lift of eta
        phi0_ = psi.conj();   // (chi1 chi2-bar)_0
        // base order without computing the base: the lcm of everything the
        // Gauss sums, Bernoulli factor and Euler product can produce
        base_order_ = (unsigned)lcm_ll(lcm_ll(psi_.order(), f0_),
                                       lcm_ll(chi2_.order(), f2_));
    }

    // Upsilon_k^{chi1,chi2}(gamma, M)
    Cyclotomic constant_term(const CuspMatrix& gamma, long long M) const {
        if (!gamma.unimodular())
            throw domain_error("invalid-matrix", "cusp matrix must have determinant 1");
        if (M < 1) throw domain_error("invalid-order", "M must be positive");
        long long r = gcd_ll(gamma.v, M);
        long long vp = gamma.v / r;
        long long Mp = M / r;
        if (vp % f2_ != 0) return zero();
        long long t = vp / f2_;
        if (gcd_ll(t, f1_) != 1) return zero();
        // xi = -chi2(delta) chi2-bar(M') chi1(-t)
        Cyclotomic xi = -(chi2_.eval(gamma.delta) * chi2_.conj().eval(Mp) * chi1_.eval(-t));
        mpz_class mpk(1);
        for (int i = 0; i < k_; ++i) mpk *= (long)Mp;
        return xi * base() * mpq_class(mpz_class(1), mpk);
    }

    // computed on first use: many callers only ever hit the zero pattern
    const Cyclotomic& base() const {
        if (!base_.has_value()) {
            Cyclotomic bernoulli = bernoulli_char((unsigned)k_, psi_);
            Cyclotomic w0 = gauss_sum(phi0_);
            // 1 / W(chi2-bar) = chi2(-1) W(chi2) / f2
            Cyclotomic inv_w2 = gauss_sum(chi2_) * mpq_class(chi2_.parity(), (long)f2_);
            Cyclotomic euler(1);
            for (long long p : prime_divisors(N_)) {
                mpz_class pk(1);
                for (int i = 0; i < k_; ++i) pk *= (long)p;
                euler *= Cyclotomic(1) - phi0_.eval(p) * mpq_class(mpz_class(1), pk);
            }
            mpq_class ratio((long)f2_, (long)f0_);
            mpq_class ratio_k(1);
            for (int i = 0; i < k_; ++i) ratio_k *= ratio;
            base_ = (Cyclotomic(ratio_k) * w0 * inv_w2 * bernoulli * mpq_class(1, 2 * k_) *
                     euler).promoted(base_order_);
        }
        return *base_;
    }

    const DirichletCharacter& eta_lift() const { return psi_; }
    long long eta_conductor() const { return f0_; }
    long long level() const { return N_; }

    // smallest ambient cyclotomic order containing every value the formula
    // can produce (base field, chi1 and chi2 values)
    unsigned ambient_order() const {
        long long m = base_order_;
        m = lcm_ll(m, chi1_.order());
        m = lcm_ll(m, chi2_.order());
        return (unsigned)m;
    }

private:
    DirichletCharacter chi1_, chi2_, psi_, phi0_;
    int k_;
    long long f1_ = 1, f2_ = 1, N_ = 1, f0_ = 1;
    unsigned base_order_ = 1;
    mutable std::optional<Cyclotomic> base_;

    Cyclotomic zero() const { return Cyclotomic(mpq_class(0), base_order_); }
};

inline Cyclotomic cusp_constant(const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                                int k, const CuspMatrix& gamma, long long M) {
    return CuspConstantContext(chi1, chi2, k).constant_term(gamma, M);
}

struct ReducedQExpansion {
    Place place;
    std::vector<FFElem> coeffs;
};

inline ReducedQExpansion reduce_qexp(const QExpansion& f, const Place& w) {
    ReducedQExpansion out;
    out.place = w;
    out.coeffs.reserve(f.coeffs.size());
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        try {
            out.coeffs.push_back(reduce_at(f.coeffs[i], w));
        } catch (const domain_error& e) {
            if (e.code() == "not-integral")
                throw domain_error("not-integral",
                                   "coefficient a_" + std::to_string(i) + " is not ell-integral");
            throw;
        }
    }
    return out;
}

} // namespace eiscong

#endif
