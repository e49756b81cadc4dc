// Rational zeta functions in T over Z[u, 1/u] with denominator kept in the
// factored form prod (1 - u^(-nu) T^N); series expansion and the exact
// pole test over Q(u^(1/D)).
#pragma once

#include "rzeta/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace rzeta {

// Polynomial in T with Laurent-polynomial coefficients in u.
using TLPoly = std::map<long, LaurentPoly>;  // T-degree -> coefficient

TLPoly tl_add(const TLPoly& a, const TLPoly& b);
TLPoly tl_mul(const TLPoly& a, const TLPoly& b);
bool tl_equal(const TLPoly& a, const TLPoly& b);

class ZetaBetaFunction {
  public:
    // Denominator: product over factors of (1 - u^(-nu) T^N), with multiplicity.
    std::vector<std::pair<long, long>> den_factors;  // (nu, N), sorted
    TLPoly num;

    ZetaBetaFunction() = default;

    // Assemble sum over terms: coeff * prod_{i in I} u^(-nu_i) T^(N_i) /
    // (1 - u^(-nu_i) T^(N_i)), over the common denominator given by
    // all_factors (one entry per component; terms reference indices).
    static ZetaBetaFunction assemble(
        const std::vector<std::pair<long, long>>& all_factors,
        const std::vector<std::pair<LaurentPoly, std::vector<int>>>& terms);

    bool is_zero() const { return num.empty(); }

    // Equality as rational functions in (u, T).
    bool equals(const ZetaBetaFunction& o) const;

    TLPoly expanded_denominator() const;

    // Exact coefficients of T^0..T^nMax of the power-series expansion.
    std::vector<LaurentPoly> series_coefficients(long n_max) const;

    std::string str() const;
};

// Reduced presentation over the field Q(u^(1/D)) used for pole decisions.
class ReducedBeta {
  public:
    explicit ReducedBeta(const ZetaBetaFunction& z, long extra_denominator_lcm = 1);

    // Order of the pole at T = u^(-s0); 0 if not a pole.
    long pole_order_at(const Rat& s0) const;

    long D() const { return D_; }

  private:
    long D_;
    UniPoly<LaurentFraction> num_, den_;
};

}  // namespace rzeta
