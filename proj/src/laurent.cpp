#include "rzeta/laurent.hpp"

#include <sstream>

namespace rzeta {

std::string LaurentPoly::str(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        auto [e, k] = *it;
        if (!first) os << (sgn(k) > 0 ? " + " : " - ");
        else if (sgn(k) < 0) os << "-";
        Rat a = rat_abs(k);
        if (e == 0 || a != 1) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- fraction

static void clear_to_int_pair(QPoly& a, QPoly& b) {
    // scale both by rationals so coefficients are integers, jointly primitive
    Int den(1);
    for (auto& x : a.c) den = lcm_int(den, x.get_den());
    for (auto& x : b.c) den = lcm_int(den, x.get_den());
    Int g(0);
    for (auto& x : a.c) g = gcd_int(g, Int(x.get_num() * (den / x.get_den())));
    for (auto& x : b.c) g = gcd_int(g, Int(x.get_num() * (den / x.get_den())));
    if (sgn(g) == 0) g = 1;
    Rat k = Rat(den) / Rat(g);
    for (auto& x : a.c) x *= k;
    for (auto& x : b.c) x *= k;
}

void LaurentFraction::normalize() {
    if (den.is_zero()) throw std::domain_error("LaurentFraction: zero denominator");
    if (num.is_zero()) {
        D = 1;
        shift = 0;
        num = QPoly::zero();
        den = qpoly({1});
        return;
    }
    // strip powers of w from num and den into shift
    long a = 0;
    while (sgn(num.c[a]) == 0) ++a;
    long b = 0;
    while (sgn(den.c[b]) == 0) ++b;
    if (a > 0) {
        num.c.erase(num.c.begin(), num.c.begin() + a);
        shift += a;
    }
    if (b > 0) {
        den.c.erase(den.c.begin(), den.c.begin() + b);
        shift -= b;
    }
    QPoly g = poly_gcd(num, den);
    if (g.deg() > 0) {
        num = num / g;
        den = den / g;
    }
    clear_to_int_pair(num, den);
    if (sgn(den.c[0]) < 0) {
        num = -num;
        den = -den;
    }
    // minimize D: gcd of D, shift, and all exponent gaps
    long g2 = D;
    auto gcd_l = [](long x, long y) {
        x = x < 0 ? -x : x;
        y = y < 0 ? -y : y;
        while (y) {
            long t = x % y;
            x = y;
            y = t;
        }
        return x;
    };
    g2 = gcd_l(g2, shift);
    for (long i = 1; i <= num.deg(); ++i)
        if (sgn(num.c[i]) != 0) g2 = gcd_l(g2, i);
    for (long i = 1; i <= den.deg(); ++i)
        if (sgn(den.c[i]) != 0) g2 = gcd_l(g2, i);
    if (g2 > 1 && D % g2 == 0) {
        auto contract = [&](const QPoly& p) {
            std::vector<Rat> c(p.deg() / g2 + 1, Rat(0));
            for (long i = 0; i <= p.deg(); ++i)
                if (sgn(p.c[i]) != 0) c[i / g2] = p.c[i];
            return QPoly(std::move(c));
        };
        num = contract(num);
        den = contract(den);
        shift /= g2;
        D /= g2;
    }
}

LaurentFraction LaurentFraction::from_rat(const Rat& r) {
    LaurentFraction f;
    f.num = QPoly::constant(r);
    f.normalize();
    return f;
}

LaurentFraction LaurentFraction::from_laurent(const LaurentPoly& p, long D) {
    LaurentFraction f;
    f.D = D;
    if (p.c.empty()) return f;
    long mn = p.c.begin()->first;
    long mx = p.c.rbegin()->first;
    std::vector<Rat> c(mx - mn + 1, Rat(0));
    for (auto& [e, k] : p.c) c[e - mn] = k;
    f.num = QPoly(std::move(c));
    f.den = qpoly({1});
    f.shift = mn;
    f.normalize();
    return f;
}

LaurentFraction LaurentFraction::u_pow(const Rat& alpha) {
    LaurentFraction f;
    f.D = to_long(Int(alpha.get_den()));
    f.shift = to_long(Int(alpha.get_num()));
    f.num = qpoly({1});
    f.den = qpoly({1});
    f.normalize();
    return f;
}

LaurentFraction LaurentFraction::u_pow_minus_1(const Rat& alpha) {
    return u_pow(alpha) - from_rat(Rat(1));
}

LaurentFraction LaurentFraction::rescaled(long newD) const {
    if (newD == D) return *this;
    if (newD % D != 0) throw std::domain_error("rescale: not a multiple");
    long k = newD / D;
    LaurentFraction f;
    f.D = newD;
    f.shift = shift * k;
    auto dilate = [&](const QPoly& p) {
        if (p.is_zero()) return p;
        std::vector<Rat> c(p.deg() * k + 1, Rat(0));
        for (long i = 0; i <= p.deg(); ++i) c[i * k] = p.c[i];
        return QPoly(std::move(c));
    };
    f.num = dilate(num);
    f.den = dilate(den);
    return f;  // already normalized structurally except D-minimality; keep as is
}

static long lcm_l(long a, long b) {
    long g = std::gcd(a, b);
    return a / g * b;
}

bool LaurentFraction::operator==(const LaurentFraction& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    long L = lcm_l(D, o.D);
    LaurentFraction a = rescaled(L), b = o.rescaled(L);
    return a.shift == b.shift && a.num == b.num && a.den == b.den;
}

LaurentFraction LaurentFraction::operator-() const {
    LaurentFraction f = *this;
    f.num = -f.num;
    return f;
}

LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const {
    if (is_zero() || o.is_zero()) return zero();
    long L = lcm_l(D, o.D);
    LaurentFraction a = rescaled(L), b = o.rescaled(L);
    LaurentFraction f;
    f.D = L;
    f.shift = a.shift + b.shift;
    f.num = a.num * b.num;
    f.den = a.den * b.den;
    f.normalize();
    return f;
}

LaurentFraction LaurentFraction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    LaurentFraction f;
    f.D = D;
    f.shift = -shift;
    f.num = den;
    f.den = num;
    f.normalize();
    return f;
}

LaurentFraction LaurentFraction::operator/(const LaurentFraction& o) const {
    return *this * o.inverse();
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long L = lcm_l(D, o.D);
    LaurentFraction a = rescaled(L), b = o.rescaled(L);
    long m = std::min(a.shift, b.shift);
    LaurentFraction f;
    f.D = L;
    f.shift = m;
    f.num = a.num.shifted(a.shift - m) * b.den + b.num.shifted(b.shift - m) * a.den;
    f.den = a.den * b.den;
    f.normalize();
    return f;
}

static long mult_at_1(const QPoly& p) {
    long m = 0;
    QPoly q = p;
    QPoly lin = qpoly({-1, 1});
    while (!q.is_zero() && sgn(q.eval(Rat(1))) == 0) {
        q = q / lin;
        ++m;
    }
    return m;
}

bool LaurentFraction::has_limit_u_to_1() const {
    if (is_zero()) return true;
    return mult_at_1(num) >= mult_at_1(den);
}

Rat LaurentFraction::limit_u_to_1() const {
    if (is_zero()) return Rat(0);
    long mn = mult_at_1(num), md = mult_at_1(den);
    if (mn < md) throw std::domain_error("limit at u=1 not removable");
    QPoly lin = qpoly({-1, 1});
    QPoly n = num, d = den;
    for (long i = 0; i < md; ++i) {
        n = n / lin;
        d = d / lin;
    }
    if (mn > md) return Rat(0);
    return n.eval(Rat(1)) / d.eval(Rat(1));
}

std::string LaurentFraction::str() const {
    if (is_zero()) return "0";
    auto expstr = [&](long e) {
        Rat q(e, D);
        q.canonicalize();
        std::string s = q.get_str();
        if (s.find('/') != std::string::npos) return "(" + s + ")";
        return s;
    };
    auto polystr = [&](const QPoly& p, long sh) {
        std::ostringstream os;
        bool first = true;
        for (long i = p.deg(); i >= 0; --i) {
            if (sgn(p.c[i]) == 0) continue;
            Rat k = p.c[i];
            if (!first) os << (sgn(k) > 0 ? " + " : " - ");
            else if (sgn(k) < 0) os << "-";
            Rat a = rat_abs(k);
            long e = i + sh;
            if (e == 0 || a != 1) os << a.get_str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "u";
                if (e != D) os << "^" << expstr(e);
            }
            first = false;
        }
        return os.str();
    };
    std::ostringstream os;
    bool dc = den.deg() == 0 && den.c[0] == 1;
    if (dc && shift >= 0) return polystr(num, shift);
    os << "(" << polystr(num, std::max<long>(shift, 0)) << ")";
    os << " / (" << polystr(den, 0) << ")";
    if (shift < 0) os << " * u^" << expstr(shift);
    return os.str();
}

}  // namespace rzeta
