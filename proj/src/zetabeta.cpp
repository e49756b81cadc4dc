#include "rzeta/zetabeta.hpp"

#include <numeric>
#include <sstream>

namespace rzeta {

TLPoly tl_add(const TLPoly& a, const TLPoly& b) {
    TLPoly r = a;
    for (auto& [d, c] : b) {
        auto it = r.find(d);
        if (it == r.end()) r[d] = c;
        else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

TLPoly tl_mul(const TLPoly& a, const TLPoly& b) {
    TLPoly r;
    for (auto& [d1, c1] : a)
        for (auto& [d2, c2] : b) {
            LaurentPoly p = c1 * c2;
            if (p.is_zero()) continue;
            auto it = r.find(d1 + d2);
            if (it == r.end()) r[d1 + d2] = p;
            else {
                it->second = it->second + p;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

bool tl_equal(const TLPoly& a, const TLPoly& b) {
    TLPoly d = tl_add(a, TLPoly{});
    for (auto& [e, c] : b) {
        auto it = d.find(e);
        if (it == d.end()) return false;
        if (!(it->second == c)) return false;
        d.erase(it);
    }
    return d.empty();
}

ZetaBetaFunction ZetaBetaFunction::assemble(
    const std::vector<std::pair<long, long>>& all_factors,
    const std::vector<std::pair<LaurentPoly, std::vector<int>>>& terms) {
    ZetaBetaFunction z;
    z.den_factors = all_factors;
    std::sort(z.den_factors.begin(), z.den_factors.end());
    for (auto& [coeff, idxs] : terms) {
        if (coeff.is_zero()) continue;
        TLPoly t;
        t[0] = coeff;
        std::vector<bool> in(all_factors.size(), false);
        for (int i : idxs) in[i] = true;
        for (size_t j = 0; j < all_factors.size(); ++j) {
            auto [nu, N] = all_factors[j];
            TLPoly f;
            if (in[j]) {
                f[N] = LaurentPoly::monomial(Rat(1), -nu);  // u^{-nu} T^N
            } else {
                f[0] = LaurentPoly::monomial(Rat(1), 0);
                f[N] = LaurentPoly::monomial(Rat(-1), -nu);  // 1 - u^{-nu} T^N
            }
            t = tl_mul(t, f);
        }
        z.num = tl_add(z.num, t);
    }
    return z;
}

TLPoly ZetaBetaFunction::expanded_denominator() const {
    TLPoly d;
    d[0] = LaurentPoly::monomial(Rat(1), 0);
    for (auto& [nu, N] : den_factors) {
        TLPoly f;
        f[0] = LaurentPoly::monomial(Rat(1), 0);
        f[N] = LaurentPoly::monomial(Rat(-1), -nu);
        d = tl_mul(d, f);
    }
    return d;
}

bool ZetaBetaFunction::equals(const ZetaBetaFunction& o) const {
    return tl_equal(tl_mul(num, o.expanded_denominator()),
                    tl_mul(o.num, expanded_denominator()));
}

std::vector<LaurentPoly> ZetaBetaFunction::series_coefficients(long n_max) const {
    // dense denominator up to degree n_max
    std::vector<LaurentPoly> d(n_max + 1);
    d[0] = LaurentPoly::monomial(Rat(1), 0);
    for (auto& [nu, N] : den_factors) {
        std::vector<LaurentPoly> nd(n_max + 1);
        for (long i = 0; i <= n_max; ++i) {
            if (d[i].is_zero()) continue;
            nd[i] = nd[i] + d[i];
            if (i + N <= n_max)
                nd[i + N] = nd[i + N] - d[i] * LaurentPoly::monomial(Rat(1), -nu);
        }
        d = std::move(nd);
    }
    // invert: e_0 = 1; e_n = -sum_{k>=1} d_k e_{n-k}
    std::vector<LaurentPoly> e(n_max + 1);
    e[0] = LaurentPoly::monomial(Rat(1), 0);
    for (long n = 1; n <= n_max; ++n) {
        LaurentPoly s;
        for (long k = 1; k <= n; ++k)
            if (!d[k].is_zero() && !e[n - k].is_zero()) s = s + d[k] * e[n - k];
        e[n] = -s;
    }
    // multiply by numerator
    std::vector<LaurentPoly> c(n_max + 1);
    for (auto& [j, nj] : num) {
        if (j > n_max) continue;
        for (long k = 0; j + k <= n_max; ++k)
            if (!e[k].is_zero()) c[j + k] = c[j + k] + nj * e[k];
    }
    return c;
}

std::string ZetaBetaFunction::str() const {
    std::ostringstream os;
    os << "[ ";
    bool first = true;
    for (auto& [d, c] : num) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*T^" << d;
        first = false;
    }
    if (first) os << "0";
    os << " ] / [ ";
    first = true;
    for (auto& [nu, N] : den_factors) {
        if (!first) os << " * ";
        os << "(1 - u^-" << nu << " T^" << N << ")";
        first = false;
    }
    if (first) os << "1";
    os << " ]";
    return os.str();
}

// --------------------------------------------------------------- reduction

ReducedBeta::ReducedBeta(const ZetaBetaFunction& z, long extra_lcm) {
    // D = lcm of denominators of all -nu/N candidates and caller extras
    long D = std::max<long>(1, extra_lcm);
    for (auto& [nu, N] : z.den_factors) {
        Rat r(nu, N);
        r.canonicalize();
        long q = to_long(Int(r.get_den()));
        D = D / std::gcd(D, q) * q;
    }
    D_ = D;
    auto lf_of = [&](const LaurentPoly& p) {
        LaurentPoly scaled;
        for (auto& [e, k] : p.c) scaled.c[e * D] = k;
        return LaurentFraction::from_laurent(scaled, D);
    };
    // numerator polynomial in T over LF
    long maxdeg = z.num.empty() ? 0 : z.num.rbegin()->first;
    std::vector<LaurentFraction> nc(maxdeg + 1, LaurentFraction::zero());
    for (auto& [d, c] : z.num) nc[d] = lf_of(c);
    UniPoly<LaurentFraction> num(std::move(nc));
    // denominator: product of (1 - u^{-nu} T^N)
    UniPoly<LaurentFraction> den =
        UniPoly<LaurentFraction>::constant(LaurentFraction::from_rat(Rat(1)));
    for (auto& [nu, N] : z.den_factors) {
        std::vector<LaurentFraction> f(N + 1, LaurentFraction::zero());
        f[0] = LaurentFraction::from_rat(Rat(1));
        f[N] = -LaurentFraction::u_pow(Rat(-nu));
        den = den * UniPoly<LaurentFraction>(std::move(f));
    }
    if (!num.is_zero()) {
        UniPoly<LaurentFraction> g = poly_gcd(num, den);
        if (g.deg() > 0) {
            num = num / g;
            den = den / g;
        }
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

long ReducedBeta::pole_order_at(const Rat& s0) const {
    if (num_.is_zero()) return 0;
    // T0 = u^{-s0}
    LaurentFraction T0 = LaurentFraction::u_pow(-s0);
    LaurentFraction one = LaurentFraction::from_rat(Rat(1));
    UniPoly<LaurentFraction> lin(std::vector<LaurentFraction>{-T0, one});  // T - T0
    UniPoly<LaurentFraction> d = den_;
    long order = 0;
    while (!d.is_zero() && d.deg() >= 0) {
        LaurentFraction v = d.eval_or(T0, LaurentFraction::zero());
        if (!v.is_zero()) break;
        d = d / lin;
        ++order;
    }
    return order;
}

}  // namespace rzeta
