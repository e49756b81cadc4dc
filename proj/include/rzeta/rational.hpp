// Arbitrary-precision integers and rationals (GMP-backed) plus a few
// helpers used throughout the library.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rzeta {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Rat rat(long n, long d = 1) { Rat r(n, d); r.canonicalize(); return r; }

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Rat r;
    unsigned long a = e < 0 ? -e : e;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), a);
    r.canonicalize();
    if (e < 0) {
        if (sgn(r) == 0) throw std::domain_error("pow_rat: zero to negative power");
        return Rat(1) / r;
    }
    return r;
}

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return x.get_si();
}

inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Int& x) { return x.get_str(); }

// Closed rational interval, used for isolating real algebraic numbers.
struct RatInterval {
    Rat lo, hi;
    RatInterval() = default;
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    int sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;  // undetermined
    }
};

inline RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline RatInterval iv_neg(const RatInterval& a) { return {-a.hi, -a.lo}; }
inline RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
}
inline RatInterval iv_scale(const RatInterval& a, const Rat& c) {
    if (sgn(c) >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
}

}  // namespace rzeta
