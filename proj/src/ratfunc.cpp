#include "rzeta/ratfunc.hpp"

#include "rzeta/qfactor.hpp"

#include <algorithm>
#include <sstream>

namespace rzeta {

RationalFunctionS::RationalFunctionS(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) {
        den = qpoly({1});
        return;
    }
    QPoly g = poly_gcd(num, den);
    if (g.deg() > 0) {
        num = num / g;
        den = den / g;
    }
    Rat lc = den.lc();
    den = den.scaled(Rat(1) / lc);
    num = num.scaled(Rat(1) / lc);
}

RationalFunctionS RationalFunctionS::operator+(const RationalFunctionS& o) const {
    return RationalFunctionS(num * o.den + o.num * den, den * o.den);
}

RationalFunctionS RationalFunctionS::operator*(const RationalFunctionS& o) const {
    return RationalFunctionS(num * o.num, den * o.den);
}

RationalFunctionS RationalFunctionS::operator/(const RationalFunctionS& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return RationalFunctionS(num * o.den, den * o.num);
}

Rat RationalFunctionS::eval(const Rat& s) const {
    Rat d = den.eval(s);
    if (sgn(d) == 0) throw std::domain_error("evaluation at a pole");
    return num.eval_or(s, Rat(0)) / d;
}

static std::string qpoly_str(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= p.deg(); ++i) {
        const Rat& k = p.c[i];
        if (sgn(k) == 0) continue;
        if (!first) os << (sgn(k) > 0 ? " + " : " - ");
        else if (sgn(k) < 0) os << "-";
        Rat a = rat_abs(k);
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::string RationalFunctionS::str() const {
    if (is_zero()) return "0";
    if (den.deg() == 0) return qpoly_str(num, "s");
    return "(" + qpoly_str(num, "s") + ") / (" + qpoly_str(den, "s") + ")";
}

std::string RationalFunctionS::str_factored() const {
    if (is_zero()) return "0";
    if (den.deg() == 0) return qpoly_str(num, "s");
    // split the monic denominator into rational linear factors
    auto fac = factor_qpoly(den);
    std::vector<std::pair<Rat, long>> roots;  // (c0 with factor s + c0, order)
    for (auto& f : fac.factors) {
        if (f.factor.deg() != 1) return str();
        roots.push_back({f.factor.c[0], f.exponent});
    }
    std::sort(roots.begin(), roots.end(),
              [](auto& a, auto& b) { return a.first > b.first; });
    // (s + c0) is displayed as (nu + N s) with nu/N = c0 in lowest terms;
    // the numerator picks up the product of the N's.
    std::ostringstream dos;
    Rat scale(1);
    for (auto& [c0, e] : roots) {
        Int nu = c0.get_num(), N = c0.get_den();
        for (long k = 0; k < e; ++k) {
            std::string ns = N == 1 ? "s" : N.get_str() + "s";
            if (sgn(nu) == 0) dos << "(" << ns << ")";
            else dos << "(" << nu.get_str() << " + " << ns << ")";
            scale *= Rat(N);
        }
    }
    QPoly disp_num = num.scaled(scale);
    return "(" + qpoly_str(disp_num, "s") + ") / (" + dos.str() + ")";
}

RationalFunctionS normalize_ratfunc_s(
    const std::vector<std::pair<Rat, std::vector<LinFactor>>>& terms) {
    RationalFunctionS acc;
    for (const auto& [coef, factors] : terms) {
        QPoly den = qpoly({1});
        for (const auto& lf : factors) {
            if (lf.nu == 0 && lf.N == 0) throw std::domain_error("factor (0,0)");
            den = den * qpoly({lf.nu, lf.N});
        }
        acc = acc + RationalFunctionS(QPoly::constant(coef), den);
    }
    return acc;
}

std::vector<SPole> poles_of(const RationalFunctionS& Z) {
    std::vector<SPole> out;
    if (Z.is_zero() || Z.den.deg() == 0) return out;
    auto fac = factor_qpoly(Z.den);
    for (auto& f : fac.factors) {
        if (f.factor.deg() != 1)
            throw std::runtime_error("non-rational pole in topological zeta function");
        Rat s0 = -f.factor.c[0];
        long m = f.exponent;
        // residue datum: lim (s-s0)^m num/den
        QPoly lin = qpoly({0, 1}) - QPoly::constant(s0);  // s - s0
        QPoly d = Z.den;
        for (long k = 0; k < m; ++k) d = d / lin;
        Rat val = Z.num.eval_or(s0, Rat(0)) / d.eval(s0);
        out.push_back({s0, m, val});
    }
    std::sort(out.begin(), out.end(), [](const SPole& a, const SPole& b) {
        return a.location < b.location;
    });
    return out;
}

}  // namespace rzeta
