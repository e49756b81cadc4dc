// Laurent polynomials in u and the field of fractions of Z[u^(1/D), u^(-1/D)],
// with the exact u->1 limit used to specialize residues.
#pragma once

#include "rzeta/upoly.hpp"

#include <map>
#include <string>

namespace rzeta {

// Laurent polynomial in u with rational coefficients.
struct LaurentPoly {
    std::map<long, Rat> c;  // exponent -> coefficient, no zero entries

    static LaurentPoly zero() { return {}; }
    static LaurentPoly monomial(const Rat& k, long e) {
        LaurentPoly r;
        if (sgn(k) != 0) r.c[e] = k;
        return r;
    }
    static LaurentPoly from_qpoly(const QPoly& p, long stride = 1, long offset = 0) {
        LaurentPoly r;
        for (long i = 0; i <= p.deg(); ++i)
            if (sgn(p.c[i]) != 0) r.c[i * stride + offset] = p.c[i];
        return r;
    }

    bool is_zero() const { return c.empty(); }
    void trim() {
        for (auto it = c.begin(); it != c.end();)
            it = sgn(it->second) == 0 ? c.erase(it) : std::next(it);
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, k] : o.c) r.c[e] += k;
        r.trim();
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, k] : r.c) k = -k;
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto& [e1, k1] : c)
            for (auto& [e2, k2] : o.c) r.c[e1 + e2] += k1 * k2;
        r.trim();
        return r;
    }
    LaurentPoly scaled(const Rat& k) const {
        LaurentPoly r;
        if (sgn(k) == 0) return r;
        for (auto& [e, v] : c) r.c[e] = v * k;
        return r;
    }
    bool operator==(const LaurentPoly& o) const { return c == o.c; }

    Rat eval1() const {  // value at u = 1
        Rat s(0);
        for (auto& [e, k] : c) s += k;
        return s;
    }

    std::string str(const std::string& var = "u") const;
};

// Element of Q(u^(1/D)): shift * num(w)/den(w) with w = u^(1/D).
// Invariants: num, den integer primitive with nonzero constant coefficients
// (zero is 0/1), gcd(num, den) = 1 over Q, den constant coefficient > 0.
class LaurentFraction {
  public:
    long D = 1;
    long shift = 0;  // power of w factored out
    QPoly num = QPoly::zero();
    QPoly den = qpoly({1});

    LaurentFraction() = default;

    static LaurentFraction zero() { return {}; }
    static LaurentFraction from_rat(const Rat& r);
    static LaurentFraction from_laurent(const LaurentPoly& p, long D = 1);
    // u^alpha for rational alpha
    static LaurentFraction u_pow(const Rat& alpha);
    // u^alpha - 1
    static LaurentFraction u_pow_minus_1(const Rat& alpha);

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const LaurentFraction& o) const;
    bool operator!=(const LaurentFraction& o) const { return !(*this == o); }

    LaurentFraction operator-() const;
    LaurentFraction operator+(const LaurentFraction& o) const;
    LaurentFraction operator-(const LaurentFraction& o) const { return *this + (-o); }
    LaurentFraction operator*(const LaurentFraction& o) const;
    LaurentFraction operator/(const LaurentFraction& o) const;
    LaurentFraction inverse() const;

    // Exact limit as u -> 1; throws if the singularity is not removable.
    Rat limit_u_to_1() const;
    bool has_limit_u_to_1() const;

    // Rescale to a multiple of D (k = newD / D integral).
    LaurentFraction rescaled(long newD) const;

    std::string str() const;

  private:
    void normalize();
};

inline bool f_is_zero(const LaurentFraction& x) { return x.is_zero(); }

}  // namespace rzeta
