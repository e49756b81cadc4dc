#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rzeta/numberfield.hpp"

using namespace rzeta;

static FieldPtr QQ() { return NumberField::rationals(); }

static NFPoly qq(std::vector<long> v) { return nfpoly_from_qpoly(QQ(), qpoly(std::move(v))); }

TEST_CASE("isolate_roots over Q") {
    auto inv = isolate_roots(qq({1, 0, 1}));  // t^2+1
    CHECK(inv.real_roots.empty());
    CHECK(inv.complex_pair_count == 1);

    inv = isolate_roots(qq({-2, 0, 1}));  // t^2-2
    REQUIRE(inv.real_roots.size() == 2);
    CHECK(inv.complex_pair_count == 0);
    CHECK(inv.real_roots[0].interval.hi < Rat(0));
    CHECK(inv.real_roots[1].interval.lo > Rat(0));
    CHECK(inv.real_roots[0].interval.lo > Rat(-2));
    CHECK(inv.real_roots[1].interval.hi < Rat(2));

    // t^3-2: one real root; Sturm count on [-2,2] agrees and degree forces
    // one conjugate pair
    inv = isolate_roots(qq({-2, 0, 0, 1}));
    REQUIRE(inv.real_roots.size() == 1);
    CHECK(inv.complex_pair_count == 1);
    CHECK(count_real_roots_q(qpoly({-2, 0, 0, 1}), Rat(-2), Rat(2)) == 1);

    // multiplicity: (t^2-2)^2 (t-1)
    NFPoly p = qq({-2, 0, 1}) * qq({-2, 0, 1}) * qq({-1, 1});
    inv = isolate_roots(p);
    REQUIRE(inv.real_roots.size() == 3);
    long mult_sum = 0;
    for (auto& r : inv.real_roots) mult_sum += r.multiplicity;
    CHECK(mult_sum == 5);
    CHECK(inv.complex_pair_count == 0);
}

TEST_CASE("sign_at over extensions") {
    // sqrt(2)
    auto ext = extend_field_real(QQ(), qq({-2, 0, 1}), RatInterval(Rat(1), Rat(2)));
    NFElem r2 = ext.root;
    CHECK(sign_at(r2, nfpoly_from_qpoly(ext.field, qpoly({-1, 1}))) == 1);   // t-1 at sqrt2
    CHECK(sign_at(r2, nfpoly_from_qpoly(ext.field, qpoly({-2, 0, 1}))) == 0);  // minimal poly
    // real root of t^3-2 vs 5/4
    auto e3 = extend_field_real(QQ(), qq({-2, 0, 0, 1}), RatInterval(Rat(1), Rat(2)));
    std::vector<Rat> g = {rat(-5, 4), Rat(1)};
    CHECK(sign_at(e3.root, nfpoly_from_qpoly(e3.field, QPoly(std::move(g)))) == 1);
    // multiplicativity: sign(gh) = sign(g) sign(h) at sqrt2
    NFPoly gh = nfpoly_from_qpoly(ext.field, qpoly({-1, 1}) * qpoly({-3, 1}));
    CHECK(sign_at(r2, gh) == sign_at(r2, nfpoly_from_qpoly(ext.field, qpoly({-1, 1}))) *
                                 sign_at(r2, nfpoly_from_qpoly(ext.field, qpoly({-3, 1}))));
}

TEST_CASE("sample_between") {
    std::vector<NFElem> v = {nf_rat(QQ(), 0L), nf_rat(QQ(), 1L)};
    auto s = sample_between(v, true);
    REQUIRE(s.size() == 3);
    CHECK(s[0] < 0);
    CHECK(s[1] > 0);
    CHECK(s[1] < 1);
    CHECK(s[2] > 1);

    auto e2 = extend_field_real(QQ(), qq({-2, 0, 1}), RatInterval(Rat(1), Rat(2)));
    auto e3 = extend_field_real(QQ(), qq({-3, 0, 1}), RatInterval(Rat(1), Rat(2)));
    std::vector<NFElem> w = {e2.root, e3.root};
    auto t = sample_between(w, false);
    REQUIRE(t.size() == 1);
    // verified against the defining polynomials: sample in (sqrt2, sqrt3)
    CHECK(sgn(qpoly({-2, 0, 1}).eval(t[0])) > 0);
    CHECK(sgn(qpoly({-3, 0, 1}).eval(t[0])) < 0);

    CHECK(sample_between({}, true) == std::vector<Rat>{Rat(0)});
}

TEST_CASE("extend_field: primitive element for sqrt2 + sqrt3") {
    auto e2 = extend_field_real(QQ(), qq({-2, 0, 1}), RatInterval(Rat(1), Rat(2)));
    FieldPtr K = e2.field;
    // t^2 - 3 over Q(sqrt2)
    NFPoly q = nfpoly_from_qpoly(K, qpoly({-3, 0, 1}));
    auto e3 = extend_field_real(K, q, RatInterval(Rat(1), Rat(2)));
    CHECK(e3.field->degree() == 4);
    CHECK(e3.field->minpoly == qpoly({1, 0, -10, 0, 1}));
    CHECK(e3.field->real);
    // converted sqrt2 still squares to 2 and stays positive
    NFElem r2 = e3.map(e2.root);
    CHECK(r2 * r2 == nf_rat(e3.field, 2L));
    CHECK(r2.sign() == 1);
    // adjoined root squares to 3
    CHECK(e3.root * e3.root == nf_rat(e3.field, 3L));
    CHECK(e3.root.sign() == 1);
}

TEST_CASE("extend_field complex: Q(i)") {
    auto ei = extend_field_complex(QQ(), qq({1, 0, 1}));
    CHECK(!ei.field->real);
    CHECK(ei.field->degree() == 2);
    CHECK(ei.root * ei.root == nf_rat(ei.field, -1L));
}

TEST_CASE("factor_over_field") {
    // t^2-2 over Q(sqrt2) splits
    auto e2 = extend_field_real(QQ(), qq({-2, 0, 1}), RatInterval(Rat(1), Rat(2)));
    FieldPtr K = e2.field;
    auto f = factor_over_field(nfpoly_from_qpoly(K, qpoly({-2, 0, 1})));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first.deg() == 1);
    CHECK(f.factors[1].first.deg() == 1);
    // the roots are +-sqrt2
    NFElem rt0 = -(f.factors[0].first.coeff(0));
    NFElem rt1 = -(f.factors[1].first.coeff(0));
    CHECK(rt0 * rt0 == nf_rat(K, 2L));
    CHECK(rt1 == -rt0);

    // t^2+1 stays irreducible over Q
    auto g = factor_over_field(qq({1, 0, 1}));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first.deg() == 2);

    // t^4-10t^2+1 over Q(sqrt2): two quadratic factors t^2 -+ 2 sqrt2 t - 1;
    // multiply-back oracle
    auto h = factor_over_field(nfpoly_from_qpoly(K, qpoly({1, 0, -10, 0, 1})));
    REQUIRE(h.factors.size() == 2);
    NFPoly prod = NFPoly::constant(nf_rat(K, 1L));
    for (auto& [fi, e] : h.factors) {
        CHECK(fi.deg() == 2);
        CHECK(e == 1);
        prod = prod * fi;
    }
    CHECK(prod == nfpoly_from_qpoly(K, qpoly({1, 0, -10, 0, 1})));
    // each factor is t^2 + c t - 1 with c = -+ 2 sqrt2
    for (auto& [fi, e] : h.factors) {
        CHECK(fi.coeff(0) == nf_rat(K, -1L));
        NFElem c = fi.coeff(1);
        CHECK(c * c == nf_rat(K, 8L));
    }
    // extension then factoring the minimal polynomial exhibits a linear factor
    auto fm = factor_over_field(nfpoly_from_qpoly(K, K->minpoly));
    bool has_linear = false;
    for (auto& [fi, e] : fm.factors) has_linear |= (fi.deg() == 1);
    CHECK(has_linear);
}

TEST_CASE("isolate roots over an extension field") {
    auto e2 = extend_field_real(QQ(), qq({-2, 0, 1}), RatInterval(Rat(1), Rat(2)));
    FieldPtr K = e2.field;
    // (t - sqrt2)(t^2+1): one real root at sqrt2, one pair
    NFPoly p = NFPoly(std::vector<NFElem>{-e2.root, nf_rat(K, 1L)}) *
               nfpoly_from_qpoly(K, qpoly({1, 0, 1}));
    auto inv = isolate_roots(p);
    REQUIRE(inv.real_roots.size() == 1);
    CHECK(inv.complex_pair_count == 1);
    CHECK(inv.real_roots[0].interval.lo < rat(15, 10));
    CHECK(inv.real_roots[0].interval.hi > rat(14, 10));
}
