#ifndef EISCONG_CYCLOTOMIC_HPP
#define EISCONG_CYCLOTOMIC_HPP

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "numutil.hpp"

namespace eiscong {

namespace detail {

// Phi_m as ascending integer coefficients (monic, degree phi(m)).
// Built from x^m - 1 by multiplying / dividing the sparse binomials
// (x^d - 1) according to the Moebius function of m/d.
inline std::vector<long long> compute_cyclotomic_poly(unsigned m) {
    auto mobius = [](long long n) -> int {
        int cnt = 0;
        for (auto& [p, e] : factorize(n)) {
            if (e > 1) return 0;
            ++cnt;
        }
        return (cnt % 2 == 0) ? 1 : -1;
    };
    std::vector<long long> poly{1};
    // multiply by (x^d - 1) for mu(m/d) = 1
    for (long long d : divisors(m)) {
        if (mobius(m / d) != 1) continue;
        std::vector<long long> next(poly.size() + d, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + d] += poly[i];
            next[i] -= poly[i];
        }
        poly.swap(next);
    }
    // exact division by (x^d - 1) for mu(m/d) = -1
    for (long long d : divisors(m)) {
        if (mobius(m / d) != -1) continue;
        std::vector<long long> q(poly.size() - d, 0);
        // poly = q * (x^d - 1); synthetic division from the top
        for (size_t i = poly.size(); i-- > (size_t)d;) {
            long long c = poly[i];
            q[i - d] = c;
            poly[i] -= c;
            poly[i - d] += c;
        }
        q.swap(poly);
        while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    }
    return poly;
}

inline const std::vector<long long>& cyclotomic_poly(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<long long>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, compute_cyclotomic_poly(m)).first;
    return it->second;
}

} // namespace detail

// Exact element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
// The stored ambient order is never auto-minimized by arithmetic.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, mpq_class(0)) {}

    explicit Cyclotomic(const mpq_class& r, unsigned order = 1)
        : order_(order), coeffs_(euler_phi(order), mpq_class(0)) {
        check_order(order);
        coeffs_[0] = r;
        coeffs_[0].canonicalize();
    }

    explicit Cyclotomic(long long n) : Cyclotomic(mpq_class((long)n)) {}

    static Cyclotomic from_poly(unsigned order, std::vector<mpq_class> poly) {
        check_order(order);
        Cyclotomic out;
        out.order_ = order;
        out.coeffs_ = reduce_poly(order, std::move(poly));
        return out;
    }

    static Cyclotomic zero(unsigned order = 1) { return Cyclotomic(mpq_class(0), order); }
    static Cyclotomic one(unsigned order = 1) { return Cyclotomic(mpq_class(1), order); }
    static Cyclotomic scalar(unsigned order, const mpq_class& r) { return Cyclotomic(r, order); }

    // zeta_order^exponent
    static Cyclotomic root_of_unity(unsigned order, long long exponent = 1) {
        check_order(order);
        long long e = ((exponent % (long long)order) + order) % (long long)order;
        std::vector<mpq_class> poly(order, mpq_class(0));
        poly[(size_t)e] = 1;
        return from_poly(order, std::move(poly));
    }

    unsigned order() const { return order_; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    mpq_class rational_value() const {
        if (!is_rational())
            throw domain_error("not-rational", "element has nonzero zeta components");
        return coeffs_[0];
    }

    Cyclotomic promoted(unsigned m2) const {
        if (m2 % order_ != 0)
            throw domain_error("incompatible-orders",
                               "order " + std::to_string(order_) +
                                   " does not divide " + std::to_string(m2));
        if (m2 == order_) return *this;
        unsigned f = m2 / order_;
        std::vector<mpq_class> poly((size_t)(coeffs_.size() - 1) * f + 1, mpq_class(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * f] = coeffs_[i];
        return from_poly(m2, std::move(poly));
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }

    Cyclotomic operator-() const {
        Cyclotomic out(*this);
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common(a, b);
        size_t n = x.coeffs_.size();
        std::vector<mpq_class> conv(2 * n - 1, mpq_class(0));
        for (size_t i = 0; i < n; ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y.coeffs_[j] == 0) continue;
                conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        return from_poly(x.order_, std::move(conv));
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const mpq_class& s) {
        Cyclotomic out(a);
        for (auto& c : out.coeffs_) {
            c *= s; // gmp does not canonicalize if s was built non-canonical
            c.canonicalize();
        }
        return out;
    }

    friend Cyclotomic operator*(const mpq_class& s, const Cyclotomic& a) { return a * s; }

    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    // Extended gcd with Phi_m in Q[x].
    Cyclotomic inverse() const {
        if (is_zero())
            throw domain_error("division-by-zero", "inverse of zero cyclotomic number");
        if (is_rational()) {
            Cyclotomic out(*this);
            out.coeffs_[0] = mpq_class(1) / out.coeffs_[0];
            return out;
        }
        const auto& phi = detail::cyclotomic_poly(order_);
        std::vector<mpq_class> r0;
        r0.reserve(phi.size());
        for (long long c : phi) r0.emplace_back((long)c);
        std::vector<mpq_class> r1(coeffs_);
        trim(r1);
        std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)}; // Bezout wrt this
        while (true) {
            // r0 = q*r1 + r2
            std::vector<mpq_class> rem(r0), q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1,
                                             mpq_class(0));
            while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
                mpq_class c = rem.back() / r1.back();
                size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                trim(rem);
                if (rem.size() == 1 && rem[0] == 0) break;
            }
            // s2 = s0 - q*s1
            std::vector<mpq_class> s2(std::max(s0.size(), q.size() + s1.size() - 1), mpq_class(0));
            for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            }
            trim(s2);
            if (rem.size() == 1 && rem[0] == 0) {
                // r1 is the gcd; it must be a nonzero constant (Phi_m is
                // irreducible and *this is nonzero)
                if (r1.size() != 1)
                    throw domain_error("internal-error", "non-constant gcd with cyclotomic polynomial");
                std::vector<mpq_class> inv(s1);
                for (auto& c : inv) c /= r1[0];
                return from_poly(order_, std::move(inv));
            }
            r0.swap(r1);
            r1.swap(rem);
            s0.swap(s1);
            s1.swap(s2);
        }
    }

    Cyclotomic pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic r(mpq_class(1), order_);
        Cyclotomic b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            if (e >>= 1) b *= b;
        }
        return r;
    }

    // Galois conjugate zeta |-> zeta^{-1} (complex conjugation).
    Cyclotomic conj() const {
        std::vector<mpq_class> poly(order_, mpq_class(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            poly[(order_ - i) % order_] += coeffs_[i];
        return from_poly(order_, std::move(poly));
    }

    // Abstract-number equality (promotes to the lcm order).
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = to_common(a, b);
        return x.coeffs_ == y.coeffs_;
    }

    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Canonical embedding zeta_m |-> e^{2 pi i / m}; 53-bit arithmetic.
    std::complex<double> embed(int precision_bits = 53) const {
        if (precision_bits < 53)
            throw domain_error("invalid-precision", "precision_bits must be >= 53");
        std::complex<long double> acc(0.0L, 0.0L);
        const long double two_pi = 6.283185307179586476925286766559L;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            long double c = (long double)mpq_get_d(coeffs_[i].get_mpq_t());
            long double ang = two_pi * (long double)i / (long double)order_;
            acc += c * std::complex<long double>(std::cos(ang), std::sin(ang));
        }
        return {(double)acc.real(), (double)acc.imag()};
    }

    // Test helper: rewrite in a smaller ambient order m2 | order when the
    // element actually lies in Q(zeta_{m2}). Solves the linear system given
    // by the promotion images of the target power basis.
    Cyclotomic demoted(unsigned m2) const {
        if (order_ % m2 != 0)
            throw domain_error("incompatible-orders", "target order must divide current order");
        size_t dim2 = (size_t)euler_phi(m2);
        size_t dim = coeffs_.size();
        // columns: promotion of zeta_{m2}^j into order_; augmented with *this
        std::vector<std::vector<mpq_class>> mat(dim, std::vector<mpq_class>(dim2 + 1, mpq_class(0)));
        for (size_t j = 0; j < dim2; ++j) {
            Cyclotomic img = root_of_unity(m2, (long long)j).promoted(order_);
            for (size_t i = 0; i < dim; ++i) mat[i][j] = img.coeffs_[i];
        }
        for (size_t i = 0; i < dim; ++i) mat[i][dim2] = coeffs_[i];
        // Gaussian elimination
        std::vector<long long> pivot_col(dim, -1);
        size_t row = 0;
        for (size_t col = 0; col < dim2 && row < dim; ++col) {
            size_t sel = row;
            while (sel < dim && mat[sel][col] == 0) ++sel;
            if (sel == dim) continue;
            std::swap(mat[sel], mat[row]);
            mpq_class inv = mpq_class(1) / mat[row][col];
            for (auto& v : mat[row]) v *= inv;
            for (size_t r = 0; r < dim; ++r) {
                if (r == row || mat[r][col] == 0) continue;
                mpq_class f = mat[r][col];
                for (size_t c2 = 0; c2 <= dim2; ++c2) mat[r][c2] -= f * mat[row][c2];
            }
            pivot_col[row] = (long long)col;
            ++row;
        }
        for (size_t r = row; r < dim; ++r)
            if (mat[r][dim2] != 0)
                throw domain_error("not-in-subfield", "element does not lie in the requested subfield");
        std::vector<mpq_class> out(dim2, mpq_class(0));
        for (size_t r = 0; r < row; ++r) out[(size_t)pivot_col[r]] = mat[r][dim2];
        return from_poly(m2, std::move(out));
    }

    std::string to_string() const {
        std::string s = "Q(zeta_" + std::to_string(order_) + ")[";
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ", ";
            s += coeffs_[i].get_str();
        }
        return s + "]";
    }

private:
    unsigned order_;
    std::vector<mpq_class> coeffs_;

    static void check_order(unsigned order) {
        if (order == 0) throw domain_error("invalid-order", "order must be positive");
    }

    static void trim(std::vector<mpq_class>& p) {
        while (p.size() > 1 && p.back() == 0) p.pop_back();
    }

    static std::vector<mpq_class> reduce_poly(unsigned order, std::vector<mpq_class> poly) {
        const auto& phi = detail::cyclotomic_poly(order);
        size_t deg = phi.size() - 1;
        for (size_t i = poly.size(); i-- > deg;) {
            if (poly[i] == 0) continue;
            mpq_class c = poly[i];
            for (size_t j = 0; j < phi.size(); ++j) poly[i - deg + j] -= c * (long)phi[j];
        }
        poly.resize(deg, mpq_class(0));
        if (poly.empty()) poly.resize(1, mpq_class(0)); // order 1: phi(1) = 1
        for (auto& c : poly) c.canonicalize();
        return poly;
    }

    static std::pair<Cyclotomic, Cyclotomic> to_common(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return {a, b};
        unsigned m = (unsigned)lcm_ll(a.order_, b.order_);
        return {a.promoted(m), b.promoted(m)};
    }
};

// Free-function spellings used throughout the test suites.
inline Cyclotomic cyclo_canonicalize(unsigned order, std::vector<mpq_class> poly) {
    return Cyclotomic::from_poly(order, std::move(poly));
}
inline Cyclotomic cyclo_promote(const Cyclotomic& a, unsigned m2) { return a.promoted(m2); }
inline Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic cyclo_add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic cyclo_inv(const Cyclotomic& a) { return a.inverse(); }
inline std::complex<double> cyclo_embed(const Cyclotomic& a, int precision_bits = 53) {
    return a.embed(precision_bits);
}

} // namespace eiscong

#endif
