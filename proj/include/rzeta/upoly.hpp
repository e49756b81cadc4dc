// Dense univariate polynomials over a coefficient field, lowest degree
// first.  Instantiated with Rat and with number-field elements.
#pragma once

#include "rzeta/rational.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rzeta {

inline bool f_is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat f_from_rat(const Rat&, const Rat& r) { return r; }  // proto sample, value

template <class F>
class UniPoly {
  public:
    std::vector<F> c;  // c[i] = coefficient of t^i; invariant: back() != 0 unless empty

    UniPoly() = default;
    explicit UniPoly(std::vector<F> cc) : c(std::move(cc)) { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(F v) {
        UniPoly p;
        p.c.push_back(std::move(v));
        p.normalize();
        return p;
    }

    void normalize() {
        while (!c.empty() && f_is_zero(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long deg() const { return static_cast<long>(c.size()) - 1; }  // zero: -1

    const F& lc() const {
        if (c.empty()) throw std::domain_error("lc of zero polynomial");
        return c.back();
    }
    F coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) {
            if (c.empty()) throw std::domain_error("coeff of zero polynomial needs prototype");
            F z = c[0] - c[0];
            return z;
        }
        return c[i];
    }

    bool operator==(const UniPoly& o) const {
        if (c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            if (!f_is_zero(c[i] - o.c[i])) return false;
        return true;
    }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    UniPoly operator+(const UniPoly& o) const {
        UniPoly r;
        r.c.resize(std::max(c.size(), o.c.size()));
        for (size_t i = 0; i < r.c.size(); ++i) {
            if (i < c.size() && i < o.c.size()) r.c[i] = c[i] + o.c[i];
            else if (i < c.size()) r.c[i] = c[i];
            else r.c[i] = o.c[i];
        }
        r.normalize();
        return r;
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        UniPoly r;
        F z = c[0] - c[0];
        r.c.assign(c.size() + o.c.size() - 1, z);
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        r.normalize();
        return r;
    }
    UniPoly scaled(const F& k) const {
        UniPoly r = *this;
        for (auto& x : r.c) x = x * k;
        r.normalize();
        return r;
    }

    F eval(const F& x) const {
        if (c.empty()) throw std::domain_error("eval of zero polynomial needs prototype; use eval_or");
        F acc = c.back();
        for (long i = deg() - 1; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    }
    F eval_or(const F& x, const F& zero_value) const {
        if (c.empty()) return zero_value;
        return eval(x);
    }

    UniPoly derivative() const {
        UniPoly r;
        for (size_t i = 1; i < c.size(); ++i) {
            F k = c[i];
            for (size_t j = 1; j < i; ++j) k = k + c[i];
            r.c.push_back(k);
        }
        r.normalize();
        return r;
    }

    // p(a*t + b)
    UniPoly compose_linear(const F& a, const F& b) const {
        if (is_zero()) return UniPoly();
        UniPoly lin;
        lin.c = {b, a};
        lin.normalize();
        UniPoly acc = UniPoly::constant(c.back());
        for (long i = deg() - 1; i >= 0; --i) acc = acc * lin + UniPoly::constant(c[i]);
        return acc;
    }

    // t^n * p(1/t) for n >= deg
    UniPoly reversed(long n) const {
        assert(n >= deg());
        UniPoly r;
        if (is_zero()) return r;
        F z = c[0] - c[0];
        r.c.assign(n + 1, z);
        for (size_t i = 0; i < c.size(); ++i) r.c[n - i] = c[i];
        r.normalize();
        return r;
    }

    UniPoly shifted(long k) const {  // * t^k
        if (is_zero()) return UniPoly();
        UniPoly r;
        F z = c[0] - c[0];
        r.c.assign(c.size() + k, z);
        for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }
};

template <class F>
UniPoly<F> upoly_from(std::vector<F> v) {
    return UniPoly<F>(std::move(v));
}

// Division with remainder over a field.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly<F> q, r = a;
    if (a.is_zero()) return {q, r};
    F z = b.c[0] - b.c[0];
    if (r.deg() >= b.deg()) q.c.assign(r.deg() - b.deg() + 1, z);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        F k = r.lc() / b.lc();
        long d = r.deg() - b.deg();
        q.c[d] = q.c[d] + k;
        // r -= k * t^d * b
        for (long i = 0; i <= b.deg(); ++i) r.c[i + d] = r.c[i + d] - k * b.c[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

template <class F>
UniPoly<F> operator/(const UniPoly<F>& a, const UniPoly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("non-exact polynomial division");
    return q;
}

template <class F>
UniPoly<F> pmod(const UniPoly<F>& a, const UniPoly<F>& b) {
    return divmod(a, b).second;
}

template <class F>
UniPoly<F> monic(const UniPoly<F>& a) {
    if (a.is_zero()) return a;
    F one = a.lc() / a.lc();
    return a.scaled(one / a.lc());
}

template <class F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        UniPoly<F> r = pmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return monic(a);
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class F>
std::tuple<UniPoly<F>, UniPoly<F>, UniPoly<F>> poly_xgcd(UniPoly<F> a, UniPoly<F> b) {
    if (a.is_zero() && b.is_zero()) return {UniPoly<F>(), UniPoly<F>(), UniPoly<F>()};
    UniPoly<F> s0 = UniPoly<F>::constant(a.is_zero() ? b.lc() / b.lc() : a.lc() / a.lc());
    UniPoly<F> one = s0;
    UniPoly<F> s1, t0, t1 = one;
    // invariant: s*a0 + t*b0
    UniPoly<F> r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        r0 = r1; r1 = r2;
        UniPoly<F> s2 = s0 - q * s1; s0 = s1; s1 = s2;
        UniPoly<F> t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = (one.c[0]) / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class F>
UniPoly<F> poly_pow(UniPoly<F> b, unsigned long e) {
    if (b.is_zero()) {
        if (e == 0) throw std::domain_error("0^0 polynomial");
        return b;
    }
    UniPoly<F> r = UniPoly<F>::constant(b.lc() / b.lc());
    if (e == 0) return r;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// Squarefree part over a field of characteristic zero.
template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
    if (p.deg() <= 0) return p;
    UniPoly<F> g = poly_gcd(p, p.derivative());
    if (g.deg() <= 0) return monic(p);
    return monic(p / g);
}

// Yun's squarefree decomposition: product of (factor_i)^(i) over i>=1.
template <class F>
std::vector<std::pair<UniPoly<F>, long>> squarefree_decomp(const UniPoly<F>& p) {
    std::vector<std::pair<UniPoly<F>, long>> out;
    if (p.deg() <= 0) return out;
    UniPoly<F> a = monic(p);
    UniPoly<F> g = poly_gcd(a, a.derivative());
    if (g.deg() == 0) {
        out.push_back({a, 1});
        return out;
    }
    UniPoly<F> w = a / g, y = a.derivative() / g;
    long i = 1;
    while (w.deg() > 0) {
        UniPoly<F> z = y - w.derivative();
        UniPoly<F> h = poly_gcd(w, z);
        if (h.deg() > 0) out.push_back({h, i});
        w = w / h;
        y = z / h;
        ++i;
    }
    return out;
}

// Resultant over a field via a Euclidean remainder sequence.
template <class F>
F resultant(UniPoly<F> a, UniPoly<F> b, const F& one) {
    if (a.is_zero() || b.is_zero()) return one - one;
    F res = one;
    while (true) {
        if (b.deg() == 0) {
            // res(a, const) = const^deg(a)
            F k = one;
            for (long i = 0; i < a.deg(); ++i) k = k * b.c[0];
            return res * k;
        }
        UniPoly<F> r = pmod(a, b);
        if (r.is_zero()) return res - res;  // common factor
        // res(a,b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r)
        long da = a.deg(), db = b.deg(), dr = r.deg();
        F k = one;
        for (long i = 0; i < da - dr; ++i) k = k * b.lc();
        if ((da % 2) && (db % 2)) k = -k;
        res = res * k;
        a = std::move(b);
        b = std::move(r);
    }
}

// ---- Sign-based machinery; requires an exact sign for F (Rat or real
// number-field elements).  `sign_of` must return -1/0/+1.

template <class F>
std::vector<UniPoly<F>> sturm_chain(const UniPoly<F>& p) {
    std::vector<UniPoly<F>> ch;
    if (p.is_zero()) return ch;
    ch.push_back(p);
    UniPoly<F> d = p.derivative();
    if (d.is_zero()) return ch;
    ch.push_back(d);
    while (true) {
        UniPoly<F> r = pmod(ch[ch.size() - 2], ch.back());
        if (r.is_zero()) break;
        ch.push_back(-r);
    }
    return ch;
}

template <class F, class SignFn>
long sturm_sign_changes(const std::vector<UniPoly<F>>& ch, const F& x, SignFn sign_of) {
    long changes = 0;
    int prev = 0;
    for (const auto& q : ch) {
        if (q.is_zero()) continue;
        int s = sign_of(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Sign changes "at +inf" / "-inf": use leading coefficients.
template <class F, class SignFn>
long sturm_sign_changes_inf(const std::vector<UniPoly<F>>& ch, bool plus_inf, SignFn sign_of) {
    long changes = 0;
    int prev = 0;
    for (const auto& q : ch) {
        if (q.is_zero()) continue;
        int s = sign_of(q.lc());
        if (!plus_inf && (q.deg() % 2)) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

using QPoly = UniPoly<Rat>;

inline QPoly qpoly(std::vector<long> v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return QPoly(std::move(c));
}

// Number of real roots of a squarefree rational polynomial in (a, b].
long count_real_roots_q(const QPoly& p, const Rat& a, const Rat& b);
// All real roots counted in (-inf, +inf) for squarefree p.
long count_real_roots_q(const QPoly& p);

}  // namespace rzeta
