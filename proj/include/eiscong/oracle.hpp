#ifndef EISCONG_ORACLE_HPP
#define EISCONG_ORACLE_HPP

#include <cmath>
#include <complex>

#include "dirichlet.hpp"
#include "eisenstein.hpp"
#include "errors.hpp"
#include "numutil.hpp"

namespace eiscong {

struct OracleConfig {
    long long cutoff = 2000; // summation bound
    double im_z = 8.0;       // height for the 2-D lattice sum
    double tolerance = 1e-6;

    void validate() const {
        if (cutoff < 10) throw domain_error("invalid-config", "cutoff must be at least 10");
        if (im_z < 1.0) throw domain_error("invalid-config", "im_z must be at least 1");
        if (!(tolerance > 0)) throw domain_error("invalid-config", "tolerance must be positive");
    }
};

namespace oracle_detail {

inline std::complex<double> char_value(const DirichletCharacter& chi, long long a) {
    long long e = chi.exponent_at(a);
    if (e < 0) return {0.0, 0.0};
    double ang = 2.0 * M_PI * (double)e / (double)chi.order();
    return {std::cos(ang), std::sin(ang)};
}

inline std::complex<double> cpow_int(std::complex<double> b, int k) {
    std::complex<double> r(1.0, 0.0);
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

// C_k = (-2 i pi)^k / (k-1)!
inline std::complex<double> c_k(int k) {
    std::complex<double> num = cpow_int({0.0, -2.0 * M_PI}, k);
    double fact = 1.0;
    for (int i = 2; i < k; ++i) fact *= i;
    return num / fact;
}

inline std::complex<double> gauss_numeric(const DirichletCharacter& chi) {
    long long f = chi.modulus();
    std::complex<double> s(0.0, 0.0);
    for (long long n = 1; n <= f; ++n) {
        double ang = 2.0 * M_PI * (double)n / (double)f;
        s += char_value(chi, n) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

} // namespace oracle_detail

// Direct exponential sum for W(chi); compares against the exact embedding.
inline std::complex<double> oracle_gauss_sum(const DirichletCharacter& chi) {
    return oracle_detail::gauss_numeric(chi);
}

// sum_{n <= cutoff} chi(n) n^{-k}
inline std::complex<double> oracle_L_value(const DirichletCharacter& chi, int k,
                                           const OracleConfig& cfg) {
    cfg.validate();
    if (k < 2) throw domain_error("invalid-weight", "k must be at least 2");
    std::complex<double> s(0.0, 0.0);
    for (long long n = 1; n <= cfg.cutoff; ++n)
        s += oracle_detail::char_value(chi, n) * std::pow((double)n, -(double)k);
    return s;
}

// Upsilon via the one-dimensional restricted sum
//   (f2^k / (2 C_k W(chi2-bar))) * sum_{(m,n) in C} chi1(m) chi2-bar(n)
//                                   / (m M f2 beta + n delta)^k
// over C = {(m,n) != 0 : m M f2 u + n v = 0}, truncated at the cutoff.
inline std::complex<double> oracle_cusp_constant(const DirichletCharacter& chi1,
                                                 const DirichletCharacter& chi2, int k,
                                                 const CuspMatrix& gamma, long long M,
                                                 const OracleConfig& cfg) {
    cfg.validate();
    require_admissible(chi1, chi2, k);
    if (!gamma.unimodular())
        throw domain_error("invalid-matrix", "cusp matrix must have determinant 1");
    long long f2 = chi2.modulus();
    long long A = M * f2 * gamma.u;
    long long B = gamma.v;
    // lattice line m A + n B = 0: direction (B/g, -A/g)
    long long g = gcd_ll(A, B);
    long long dm = B / g, dn = -A / g;
    DirichletCharacter chi2bar = chi2.conj();
    double step = (double)(dm * M * f2 * gamma.beta + dn * gamma.delta);
    std::complex<double> s(0.0, 0.0);
    for (long long t = -cfg.cutoff; t <= cfg.cutoff; ++t) {
        if (t == 0) continue;
        std::complex<double> num = oracle_detail::char_value(chi1, t * dm) *
                                   oracle_detail::char_value(chi2bar, t * dn);
        if (num == std::complex<double>(0.0, 0.0)) continue;
        s += num / oracle_detail::cpow_int({(double)t * step, 0.0}, k);
    }
    std::complex<double> pref =
        std::pow((double)f2, (double)k) /
        (2.0 * oracle_detail::c_k(k) * oracle_detail::gauss_numeric(chi2bar));
    return pref * s;
}

// Full slashed 2-D lattice sum at z = i * im_z (absolutely convergent only
// for k >= 3); tends to Upsilon as im_z grows.
inline std::complex<double> oracle_lattice_2d(const DirichletCharacter& chi1,
                                              const DirichletCharacter& chi2, int k,
                                              const CuspMatrix& gamma, long long M,
                                              const OracleConfig& cfg) {
    cfg.validate();
    require_admissible(chi1, chi2, k);
    if (k < 3)
        throw domain_error("weight-two-unsupported",
                           "the 2-D sum is only absolutely convergent for k >= 3");
    if (!gamma.unimodular())
        throw domain_error("invalid-matrix", "cusp matrix must have determinant 1");
    long long f2 = chi2.modulus();
    std::complex<double> z(0.0, cfg.im_z);
    std::complex<double> jden = (double)gamma.v * z + (double)gamma.delta;
    std::complex<double> gz = ((double)gamma.u * z + (double)gamma.beta) / jden;
    std::complex<double> arg = (double)(M * f2) * gz;
    DirichletCharacter chi2bar = chi2.conj();
    std::complex<double> s(0.0, 0.0);
    for (long long m = -cfg.cutoff; m <= cfg.cutoff; ++m) {
        std::complex<double> cm = oracle_detail::char_value(chi1, m);
        if (m != 0 && cm == std::complex<double>(0.0, 0.0)) continue;
        for (long long n = -cfg.cutoff; n <= cfg.cutoff; ++n) {
            if (m == 0 && n == 0) continue;
            std::complex<double> cn = oracle_detail::char_value(chi2bar, n);
            if (cn == std::complex<double>(0.0, 0.0)) continue;
            s += cm * cn / oracle_detail::cpow_int((double)m * arg + (double)n, k);
        }
    }
    std::complex<double> pref =
        std::pow((double)f2, (double)k) /
        (2.0 * oracle_detail::c_k(k) * oracle_detail::gauss_numeric(chi2bar));
    return pref * s / oracle_detail::cpow_int(jden, k);
}

} // namespace eiscong

#endif
