// Rational functions in s over Q, kept in lowest terms with monic
// denominator; pole extraction and the display form used in reports.
#pragma once

#include "rzeta/upoly.hpp"

#include <string>
#include <vector>

namespace rzeta {

class RationalFunctionS {
  public:
    QPoly num = QPoly::zero();
    QPoly den = qpoly({1});  // monic; gcd(num, den) = 1; zero is 0/1

    RationalFunctionS() = default;
    RationalFunctionS(QPoly n, QPoly d);

    static RationalFunctionS zero() { return {}; }
    static RationalFunctionS from_rat(const Rat& r) {
        return RationalFunctionS(QPoly::constant(r), qpoly({1}));
    }

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RationalFunctionS& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RationalFunctionS& o) const { return !(*this == o); }

    RationalFunctionS operator-() const { return RationalFunctionS(-num, den); }
    RationalFunctionS operator+(const RationalFunctionS& o) const;
    RationalFunctionS operator-(const RationalFunctionS& o) const { return *this + (-o); }
    RationalFunctionS operator*(const RationalFunctionS& o) const;
    RationalFunctionS operator/(const RationalFunctionS& o) const;

    Rat eval(const Rat& s) const;  // throws on pole

    std::string str() const;          // canonical num/den form
    std::string str_factored() const; // denominator as integer linear factors
};

// One linear denominator factor (nu + s N).
struct LinFactor {
    long nu;
    long N;
};

// Sum of coefficient * prod 1/(nu_i + s N_i) terms, normalized.
RationalFunctionS normalize_ratfunc_s(
    const std::vector<std::pair<Rat, std::vector<LinFactor>>>& terms);

struct SPole {
    Rat location;   // s0
    long order;     // 1 or 2 in the curve case (not enforced here)
    Rat residue;    // residue for order 1; leading coefficient for higher order
};

// All poles of Z (den factors completely into rational linear factors).
std::vector<SPole> poles_of(const RationalFunctionS& Z);

}  // namespace rzeta
