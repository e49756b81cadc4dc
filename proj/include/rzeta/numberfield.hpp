// Exact arithmetic in number fields Q(theta) with a fixed real or complex
// embedding: root isolation, sign evaluation, primitive-element towers,
// and factorization over the field (Trager's norm method).
#pragma once

#include "rzeta/qfactor.hpp"
#include "rzeta/upoly.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace rzeta {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    QPoly minpoly;  // monic irreducible over Q; theta is the tracked root
    bool real;

    // Complex display-only data (never used for exact decisions).
    double approx_re = 0.0, approx_im = 0.0, approx_rad = 0.0;

    static FieldPtr rationals();

    static FieldPtr make_real(QPoly minpoly, RatInterval isolating);
    static FieldPtr make_complex(QPoly minpoly, double re, double im, double rad);

    long degree() const { return minpoly.deg(); }
    bool is_rational_field() const { return degree() == 1; }

    // Current isolating interval of theta (real fields).
    RatInterval embedding() const;
    // Halve the isolating interval.  Logically const: the represented number
    // is unchanged.
    void refine() const;

  private:
    NumberField() = default;
    mutable std::mutex mu_;
    mutable RatInterval emb_;
};

// Element of a number field: polynomial in theta of degree < [K:Q].
class NFElem {
  public:
    NFElem() = default;  // null element, treated as zero
    NFElem(FieldPtr f, QPoly v);

    static NFElem from_rat(const FieldPtr& f, const Rat& r);

    const FieldPtr& field() const { return f_; }
    const QPoly& val() const { return v_; }
    bool is_null() const { return !f_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_rational() const;          // value has degree <= 0
    Rat rational_value() const;        // requires is_rational()

    NFElem operator-() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator/(const NFElem& o) const;
    NFElem inverse() const;
    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    // Exact sign under the real embedding.
    int sign() const;
    // Rational enclosure of the value with width <= target (real fields).
    RatInterval enclosure(const Rat& target_width) const;

    std::string str() const;

  private:
    FieldPtr f_;
    QPoly v_;
};

inline bool f_is_zero(const NFElem& x) { return x.is_null() || x.is_zero(); }

using NFPoly = UniPoly<NFElem>;

NFPoly nfpoly_from_qpoly(const FieldPtr& f, const QPoly& p);
QPoly qpoly_from_nfpoly(const NFPoly& p);  // requires all coefficients rational
NFElem nf_rat(const FieldPtr& f, const Rat& r);
NFElem nf_rat(const FieldPtr& f, long n);

// ---------------------------------------------------------------- roots

struct RealRootRec {
    RatInterval interval;   // isolates the root among ALL real roots of p
    long multiplicity;
    int factor_index;       // index into the field factorization that produced it
};

struct RootInventory {
    std::vector<RealRootRec> real_roots;  // sorted by position
    long complex_pair_count = 0;          // counted with multiplicity
    long degree = 0;
};

// Field factorization result.
struct NFFactorization {
    NFElem constant;
    std::vector<std::pair<NFPoly, long>> factors;  // monic irreducible, exponent
};

NFFactorization factor_over_field(const NFPoly& p);

// Complete real/complex root classification of p over its (real) field.
RootInventory isolate_roots(const NFPoly& p);

// Exact sign of g at a: both over the same real field.
int sign_at(const NFElem& a, const NFPoly& g);

// Isolating intervals for the real roots of a squarefree p over a real field,
// sorted ascending.
std::vector<RatInterval> isolate_real_roots_squarefree(const NFPoly& p);
long count_real_roots_nf(const NFPoly& squarefree);

// One rational strictly between consecutive entries (entries must be pairwise
// distinct real algebraic numbers, sorted ascending); with ends, one rational
// below the minimum and one above the maximum.  Empty input with ends: {0}.
std::vector<Rat> sample_between(const std::vector<NFElem>& sorted, bool include_ends);

// Compare two real algebraic numbers (possibly in different fields); they
// must be distinct unless they live in the same field.
int compare_real(const NFElem& a, const NFElem& b);

// -------------------------------------------------------------- towers

struct FieldExtension {
    FieldPtr field;     // L = Q(gamma), primitive over Q
    NFElem theta;       // image of the old generator in L
    NFElem root;        // the adjoined root of q in L
    FieldPtr old_field;

    NFElem map(const NFElem& x) const;  // re-express an element of K in L
    NFPoly map(const NFPoly& p) const;
};

// K(alpha) for alpha a real root of q (irreducible over K) isolated by iv.
FieldExtension extend_field_real(const FieldPtr& K, const NFPoly& q, const RatInterval& iv);
// K(alpha) for a complex root of q; embedding data approximate only.
FieldExtension extend_field_complex(const FieldPtr& K, const NFPoly& q);

}  // namespace rzeta
