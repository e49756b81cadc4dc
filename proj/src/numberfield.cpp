#include "rzeta/numberfield.hpp"

#include <cassert>
#include <cmath>
#include <complex>
#include <sstream>

namespace rzeta {

// ------------------------------------------------------------ NumberField

FieldPtr NumberField::rationals() {
    static FieldPtr q = [] {
        auto* f = new NumberField();
        f->minpoly = qpoly({0, 1});  // t, theta = 0
        f->real = true;
        f->emb_ = RatInterval(Rat(0), Rat(0));
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr NumberField::make_real(QPoly mp, RatInterval iv) {
    auto* f = new NumberField();
    f->minpoly = std::move(mp);
    f->real = true;
    f->emb_ = std::move(iv);
    return FieldPtr(f);
}

FieldPtr NumberField::make_complex(QPoly mp, double re, double im, double rad) {
    auto* f = new NumberField();
    f->minpoly = std::move(mp);
    f->real = false;
    f->approx_re = re;
    f->approx_im = im;
    f->approx_rad = rad;
    return FieldPtr(f);
}

RatInterval NumberField::embedding() const {
    std::lock_guard<std::mutex> lk(mu_);
    return emb_;
}

void NumberField::refine() const {
    std::lock_guard<std::mutex> lk(mu_);
    if (!real) return;
    if (degree() == 1) return;  // exact rational
    if (emb_.lo == emb_.hi) return;
    Rat mid = emb_.mid();
    int sm = sgn(minpoly.eval(mid));
    if (sm == 0) {  // cannot happen for irreducible deg >= 2
        emb_ = RatInterval(mid, mid);
        return;
    }
    int slo = sgn(minpoly.eval(emb_.lo));
    if (slo == 0) {  // degree-1 style exactness
        emb_.hi = emb_.lo;
        return;
    }
    if (sm == slo) emb_.lo = mid;
    else emb_.hi = mid;
}

// Interval evaluation of a rational polynomial over a rational interval.
static RatInterval iv_eval(const QPoly& p, const RatInterval& x) {
    RatInterval acc(Rat(0), Rat(0));
    for (long i = p.deg(); i >= 0; --i) {
        acc = iv_mul(acc, x);
        acc = iv_add(acc, RatInterval(p.c[i], p.c[i]));
    }
    if (p.is_zero()) return RatInterval(Rat(0), Rat(0));
    return acc;
}

// ----------------------------------------------------------------- NFElem

NFElem::NFElem(FieldPtr f, QPoly v) : f_(std::move(f)), v_(std::move(v)) {
    if (f_ && v_.deg() >= f_->degree()) v_ = pmod(v_, f_->minpoly);
}

NFElem NFElem::from_rat(const FieldPtr& f, const Rat& r) {
    return NFElem(f, QPoly(std::vector<Rat>{r}));
}

bool NFElem::is_rational() const { return v_.deg() <= 0; }

Rat NFElem::rational_value() const {
    if (v_.is_zero()) return Rat(0);
    if (v_.deg() > 0) throw std::domain_error("not a rational value");
    return v_.c[0];
}

static FieldPtr common_field(const NFElem& a, const NFElem& b) {
    if (a.field() && b.field()) {
        if (a.field() != b.field() && !(a.is_rational() || b.is_rational()))
            throw std::domain_error("number field mismatch");
        return a.field() ? a.field() : b.field();
    }
    return a.field() ? a.field() : b.field();
}

NFElem NFElem::operator-() const { return NFElem(f_, -v_); }

NFElem NFElem::operator+(const NFElem& o) const {
    FieldPtr f = common_field(*this, o);
    if (f_ && o.f_ && f_ != o.f_) {
        // allow mixing only when one side is a rational constant
        if (is_rational()) return NFElem(o.f_, v_ + o.v_);
        if (o.is_rational()) return NFElem(f_, v_ + o.v_);
        throw std::domain_error("number field mismatch");
    }
    return NFElem(f, v_ + o.v_);
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator*(const NFElem& o) const {
    FieldPtr f = common_field(*this, o);
    if (f_ && o.f_ && f_ != o.f_) {
        if (is_rational() || o.is_rational())
            f = is_rational() ? o.f_ : f_;
        else
            throw std::domain_error("number field mismatch");
    }
    if (!f) return NFElem();
    QPoly prod = v_ * o.v_;
    return NFElem(f, pmod(prod, f->minpoly));
}

NFElem NFElem::inverse() const {
    if (!f_) throw std::domain_error("inverse of null element");
    if (v_.is_zero()) throw std::domain_error("inverse of zero");
    auto [g, s, t] = poly_xgcd(v_, f_->minpoly);
    if (g.deg() != 0) throw std::domain_error("non-invertible element (reducible minpoly?)");
    return NFElem(f_, s.scaled(Rat(1) / g.c[0]));
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

bool NFElem::operator==(const NFElem& o) const {
    if (is_null() || o.is_null()) return f_is_zero(*this) && f_is_zero(o);
    return (*this - o).is_zero();
}

int NFElem::sign() const {
    if (!f_) return 0;
    if (v_.is_zero()) return 0;
    if (!f_->real) throw std::domain_error("sign undefined for complex embedding");
    if (v_.deg() == 0) return sgn(v_.c[0]);
    for (int iter = 0; iter < 4096; ++iter) {
        RatInterval iv = iv_eval(v_, f_->embedding());
        int s = iv.sign();
        if (s != 0) return s;
        f_->refine();
    }
    throw std::runtime_error("sign refinement did not converge");
}

RatInterval NFElem::enclosure(const Rat& target_width) const {
    if (!f_) return RatInterval(Rat(0), Rat(0));
    if (!f_->real) throw std::domain_error("enclosure undefined for complex embedding");
    if (v_.deg() <= 0) {
        Rat x = v_.is_zero() ? Rat(0) : v_.c[0];
        return RatInterval(x, x);
    }
    while (true) {
        RatInterval iv = iv_eval(v_, f_->embedding());
        if (iv.width() <= target_width) return iv;
        f_->refine();
    }
}

std::string NFElem::str() const {
    if (is_null() || v_.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = v_.deg(); i >= 0; --i) {
        const Rat& c = v_.c[i];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Rat a = rat_abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "g";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

NFPoly nfpoly_from_qpoly(const FieldPtr& f, const QPoly& p) {
    std::vector<NFElem> c;
    c.reserve(p.c.size());
    for (const auto& x : p.c) c.push_back(NFElem::from_rat(f, x));
    return NFPoly(std::move(c));
}

QPoly qpoly_from_nfpoly(const NFPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.c.size());
    for (const auto& x : p.c) c.push_back(x.rational_value());
    return QPoly(std::move(c));
}

NFElem nf_rat(const FieldPtr& f, const Rat& r) { return NFElem::from_rat(f, r); }
NFElem nf_rat(const FieldPtr& f, long n) { return NFElem::from_rat(f, Rat(n)); }

// ----------------------------------------------------------- root isolation

static int nf_sign(const NFElem& x) { return x.sign(); }

long count_real_roots_nf(const NFPoly& p) {
    auto ch = sturm_chain(p);
    return sturm_sign_changes_inf(ch, false, nf_sign) - sturm_sign_changes_inf(ch, true, nf_sign);
}

// Rational upper bound for |roots| of p (Cauchy bound).
static Rat root_bound(const NFPoly& p) {
    Rat m(0);
    RatInterval lciv = p.lc().enclosure(rat(1, 16));
    Rat lcabs = std::min(rat_abs(lciv.lo), rat_abs(lciv.hi));
    if (lciv.contains_zero()) {
        // refine until lc bounded away from zero (lc != 0 by invariant)
        Rat w = rat(1, 256);
        while (true) {
            lciv = p.lc().enclosure(w);
            if (!lciv.contains_zero()) break;
            w /= 16;
        }
        lcabs = std::min(rat_abs(lciv.lo), rat_abs(lciv.hi));
    }
    for (long i = 0; i < p.deg(); ++i) {
        RatInterval ci = p.coeff(i).enclosure(rat(1, 16));
        Rat a = std::max(rat_abs(ci.lo), rat_abs(ci.hi));
        if (a > m) m = a;
    }
    return Rat(1) + m / lcabs;
}

std::vector<RatInterval> isolate_real_roots_squarefree(const NFPoly& p) {
    std::vector<RatInterval> out;
    if (p.deg() < 1) return out;
    auto ch = sturm_chain(p);
    FieldPtr F = p.lc().field();
    auto count_open = [&](const Rat& a, const Rat& b) {
        return sturm_sign_changes(ch, NFElem::from_rat(F, a), nf_sign) -
               sturm_sign_changes(ch, NFElem::from_rat(F, b), nf_sign);
    };
    auto val_sign = [&](const Rat& x) { return sign_at(NFElem::from_rat(F, x), p); };
    Rat B = root_bound(p);
    // ensure endpoints are not roots (bound is strict)
    std::vector<std::pair<Rat, Rat>> stack{{-B, B}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        long n = count_open(a, b);  // roots in (a, b]
        if (n == 0) continue;
        if (n == 1 && val_sign(b) != 0) {
            out.emplace_back(a, b);
            continue;
        }
        Rat mid = (a + b) / 2;
        // avoid midpoints that are roots
        while (val_sign(mid) == 0) mid = (a + 2 * mid) / 3 + rat(1, 1000000);
        stack.push_back({a, mid});
        stack.push_back({mid, b});
    }
    std::sort(out.begin(), out.end(),
              [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
    return out;
}

int sign_at(const NFElem& a, const NFPoly& g) {
    NFElem v = g.eval_or(a, NFElem::from_rat(a.field() ? a.field() : NumberField::rationals(), Rat(0)));
    if (f_is_zero(v)) return 0;
    if (!v.field()->real) {
        if (v.is_rational()) return sgn(v.rational_value());
        throw std::domain_error("sign undefined");
    }
    return v.sign();
}

RootInventory isolate_roots(const NFPoly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    RootInventory inv;
    inv.degree = p.deg();
    if (p.deg() == 0) return inv;
    auto sq = squarefree_decomp(p);
    long real_with_mult = 0;
    struct Item {
        RatInterval iv;
        long mult;
        int fidx;
        NFPoly g;
    };
    std::vector<Item> items;
    int fidx = 0;
    for (auto& [g, e] : sq) {
        auto ivs = isolate_real_roots_squarefree(g);
        for (auto& iv : ivs) items.push_back({iv, e, fidx, g});
        real_with_mult += (long)ivs.size() * e;
        ++fidx;
    }
    // refine to pairwise disjoint (roots of coprime squarefree factors are distinct)
    auto refine_item = [&](Item& it) {
        Rat mid = it.iv.mid();
        int sm = sign_at(NFElem::from_rat(p.lc().field(), mid), it.g);
        if (sm == 0) {
            mid = (it.iv.lo + 2 * mid) / 3;
            sm = sign_at(NFElem::from_rat(p.lc().field(), mid), it.g);
            if (sm == 0) return;  // give up this round
        }
        int slo = sign_at(NFElem::from_rat(p.lc().field(), it.iv.lo), it.g);
        if (sm == slo) it.iv.lo = mid;
        else it.iv.hi = mid;
    };
    bool again = true;
    int guard = 0;
    while (again && guard++ < 512) {
        again = false;
        std::sort(items.begin(), items.end(),
                  [](const Item& x, const Item& y) { return x.iv.lo < y.iv.lo; });
        for (size_t i = 0; i + 1 < items.size(); ++i) {
            if (!(items[i].iv.hi < items[i + 1].iv.lo)) {
                refine_item(items[i]);
                refine_item(items[i + 1]);
                again = true;
            }
        }
    }
    for (auto& it : items) inv.real_roots.push_back({it.iv, it.mult, it.fidx});
    inv.complex_pair_count = (inv.degree - real_with_mult) / 2;
    return inv;
}

int compare_real(const NFElem& a, const NFElem& b) {
    if (a.field() == b.field() || a.is_rational() || b.is_rational()) {
        NFElem d = a - b;
        return d.is_null() ? 0 : d.sign();
    }
    Rat w(1);
    for (int iter = 0; iter < 256; ++iter) {
        RatInterval ia = a.enclosure(w), ib = b.enclosure(w);
        if (ia.hi < ib.lo) return -1;
        if (ib.hi < ia.lo) return 1;
        w /= 16;
    }
    throw std::runtime_error("compare_real: values numerically indistinguishable");
}

std::vector<Rat> sample_between(const std::vector<NFElem>& sorted, bool include_ends) {
    std::vector<Rat> out;
    if (sorted.empty()) {
        if (include_ends) out.push_back(Rat(0));
        return out;
    }
    Rat w(1);
    std::vector<RatInterval> ivs;
    for (int iter = 0;; ++iter) {
        ivs.clear();
        for (const auto& x : sorted) ivs.push_back(x.enclosure(w));
        bool ok = true;
        for (size_t i = 0; i + 1 < ivs.size(); ++i)
            if (!(ivs[i].hi < ivs[i + 1].lo)) ok = false;
        if (ok) break;
        if (iter > 256) throw std::runtime_error("sample_between: entries not separable");
        w /= 16;
    }
    if (include_ends) out.push_back(ivs.front().lo - 1);
    for (size_t i = 0; i + 1 < ivs.size(); ++i) out.push_back((ivs[i].hi + ivs[i + 1].lo) / 2);
    if (include_ends) out.push_back(ivs.back().hi + 1);
    return out;
}

// ------------------------------------------------------------ Trager norms

// Res_theta(M(theta), g(x - s*theta)) computed by evaluation/interpolation.
// g is monic over K = Q(theta); result is monic of degree deg(M)*deg(g).
static QPoly norm_of_shift(const FieldPtr& K, const NFPoly& g, long s) {
    const QPoly& M = K->minpoly;
    long n = M.deg(), d = g.deg();
    long D = n * d;
    // values at D+1 rational points
    std::vector<Rat> xs, ys;
    Rat one(1);
    long k = 0;
    while ((long)xs.size() < D + 1) {
        Rat x0 = (k % 2 == 0) ? Rat(k / 2) : Rat(-(k / 2 + 1));
        ++k;
        // B(theta) = sum c_i(theta) * (x0 - s*theta)^i
        QPoly lin = qpoly({0, -s});
        lin = lin + QPoly::constant(x0);  // x0 - s*t
        QPoly B;  // in theta
        QPoly pw = QPoly::constant(Rat(1));
        for (long i = 0; i <= d; ++i) {
            B = B + g.coeff(i).val() * pw;
            pw = pw * lin;
        }
        Rat v = resultant(M, B, one);
        xs.push_back(x0);
        ys.push_back(v);
    }
    // Lagrange interpolation
    QPoly result;
    for (long i = 0; i <= D; ++i) {
        QPoly term = QPoly::constant(Rat(1));
        Rat denom(1);
        for (long j = 0; j <= D; ++j) {
            if (i == j) continue;
            term = term * qpoly({0, 1}) - term.scaled(xs[j]);
            denom *= (xs[i] - xs[j]);
        }
        result = result + term.scaled(ys[i] / denom);
    }
    return result;
}

NFFactorization factor_over_field(const NFPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor of zero polynomial");
    FieldPtr K = p.lc().field();
    NFFactorization out;
    out.constant = p.lc();
    if (p.deg() == 0) return out;
    if (K->is_rational_field()) {
        auto qf = factor_qpoly(qpoly_from_nfpoly(p));
        out.constant = NFElem::from_rat(K, qf.constant);
        for (auto& f : qf.factors)
            out.factors.push_back({nfpoly_from_qpoly(K, f.factor), f.exponent});
        return out;
    }
    NFPoly pm = monic(p);
    auto sq = squarefree_decomp(pm);
    for (auto& [g, e] : sq) {
        if (g.deg() == 1) {
            out.factors.push_back({g, e});
            continue;
        }
        bool done = false;
        for (long s : {1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11}) {
            QPoly N = norm_of_shift(K, g, s);
            if (poly_gcd(N, N.derivative()).deg() != 0) continue;
            auto qf = factor_qpoly(N);
            std::vector<std::pair<NFPoly, long>> parts;
            NFPoly check = NFPoly::constant(NFElem::from_rat(K, Rat(1)));
            for (auto& f : qf.factors) {
                // gcd_K(g(t), N_i(t + s*theta))
                NFPoly Ni = nfpoly_from_qpoly(K, f.factor);
                NFElem stheta = NFElem(K, qpoly({0, s}));
                NFPoly shifted = Ni.compose_linear(NFElem::from_rat(K, Rat(1)), stheta);
                NFPoly gi = poly_gcd(g, shifted);
                if (gi.deg() >= 1) {
                    parts.push_back({gi, e});
                    check = check * gi;
                }
            }
            if (check == g) {
                for (auto& pr : parts) out.factors.push_back(pr);
                done = true;
                break;
            }
        }
        if (!done) throw std::runtime_error("field factorization failed (no good shift)");
    }
    return out;
}

// ---------------------------------------------------------------- towers

NFElem FieldExtension::map(const NFElem& x) const {
    if (x.is_null()) return x;
    if (x.field() != old_field && !x.is_rational())
        throw std::domain_error("extension map: wrong source field");
    // substitute theta-image into the value polynomial
    NFPoly v = NFPoly::zero();
    NFElem acc = NFElem::from_rat(field, Rat(0));
    const QPoly& val = x.val();
    for (long i = val.deg(); i >= 0; --i)
        acc = acc * theta + NFElem::from_rat(field, val.coeff(i));
    return acc;
}

NFPoly FieldExtension::map(const NFPoly& p) const {
    std::vector<NFElem> c;
    c.reserve(p.c.size());
    for (const auto& x : p.c) c.push_back(map(x));
    return NFPoly(std::move(c));
}

// Solve for the image of theta in L: the unique common root of M(T) and
// G(T) = sum c_i(T) (gamma - s T)^i, where c_i are the coefficients of q.
static NFElem theta_image(const FieldPtr& L, const FieldPtr& K, const NFPoly& q, long s) {
    NFElem gamma = NFElem(L, qpoly({0, 1}));
    NFPoly M_L = nfpoly_from_qpoly(L, K->minpoly);
    NFPoly G;  // in T over L
    NFPoly lin({std::vector<NFElem>{gamma, NFElem::from_rat(L, Rat(-s))}});  // gamma - s T
    NFPoly pw = NFPoly::constant(NFElem::from_rat(L, Rat(1)));
    for (long i = 0; i <= q.deg(); ++i) {
        // coefficient c_i as polynomial in T over L
        NFPoly ciT = nfpoly_from_qpoly(L, q.coeff(i).val());
        G = G + ciT * pw;
        pw = pw * lin;
    }
    NFPoly g = poly_gcd(M_L, G);
    if (g.deg() != 1) throw std::runtime_error("primitive element: gcd not linear");
    return -(g.coeff(0) / g.coeff(1));
}

FieldExtension extend_field_real(const FieldPtr& K, const NFPoly& q, const RatInterval& iv0) {
    FieldExtension ext;
    ext.old_field = K;
    if (q.deg() == 1) {
        ext.field = K;
        ext.theta = NFElem(K, qpoly({0, 1}));
        ext.root = -(q.coeff(0) / q.coeff(1));
        return ext;
    }
    NFPoly qm = monic(q);
    if (K->is_rational_field()) {
        QPoly mp = qpoly_from_nfpoly(qm);
        // shrink iv0 to an isolating interval with non-root rational endpoints
        RatInterval iv = iv0;
        auto ch = sturm_chain(mp);
        auto sg = [](const Rat& x) { return sgn(x); };
        while (sturm_sign_changes(ch, iv.lo, sg) - sturm_sign_changes(ch, iv.hi, sg) != 1 ||
               sgn(mp.eval(iv.lo)) == 0 || sgn(mp.eval(iv.hi)) == 0) {
            // expand slightly if endpoints hit roots, else bisect toward root
            Rat mid = iv.mid();
            if (sgn(mp.eval(mid)) == 0) mid = (iv.lo + 2 * mid) / 3;
            long left = sturm_sign_changes(ch, iv.lo, sg) - sturm_sign_changes(ch, mid, sg);
            if (left >= 1) iv.hi = mid;
            else iv.lo = mid;
        }
        FieldPtr L = NumberField::make_real(mp, iv);
        ext.field = L;
        ext.theta = NFElem::from_rat(L, Rat(0));
        ext.root = NFElem(L, qpoly({0, 1}));
        return ext;
    }
    // general tower: gamma = alpha + s*theta
    for (long s : {1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11, 13, -13}) {
        QPoly N = norm_of_shift(K, qm, s);
        if (poly_gcd(N, N.derivative()).deg() != 0) continue;
        N = monic(N);
        // interval for gamma: refine alpha-interval and theta-interval until the
        // sum isolates exactly one root of N
        RatInterval ivA = iv0;
        auto chN = sturm_chain(N);
        auto sg = [](const Rat& x) { return sgn(x); };
        auto qa_sign = [&](const Rat& x) { return sign_at(NFElem::from_rat(K, x), qm); };
        int guard = 0;
        while (true) {
            RatInterval ivT = K->embedding();
            RatInterval g = iv_add(ivA, iv_scale(ivT, Rat(s)));
            long cnt = sturm_sign_changes(chN, g.lo, sg) - sturm_sign_changes(chN, g.hi, sg);
            if (cnt == 1 && sgn(N.eval(g.lo)) != 0 && sgn(N.eval(g.hi)) != 0) {
                FieldPtr L = NumberField::make_real(N, g);
                ext.field = L;
                ext.theta = theta_image(L, K, qm, s);
                NFElem gamma = NFElem(L, qpoly({0, 1}));
                ext.root = gamma - NFElem::from_rat(L, Rat(s)) * ext.theta;
                return ext;
            }
            if (guard++ > 4096) throw std::runtime_error("extension interval refinement stuck");
            // refine both
            K->refine();
            Rat mid = ivA.mid();
            int sm = qa_sign(mid);
            if (sm == 0) mid = (ivA.lo + 2 * mid) / 3;
            if (qa_sign(mid) == 0) continue;
            if (qa_sign(ivA.lo) == qa_sign(mid)) ivA.lo = mid;
            else ivA.hi = mid;
        }
    }
    throw std::runtime_error("extend_field_real: no good shift");
}

// Approximate complex roots by Durand-Kerner (display only).
static std::vector<std::complex<double>> dk_roots(const std::vector<std::complex<double>>& monic) {
    long n = (long)monic.size() - 1;  // degree
    std::vector<std::complex<double>> r(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> cur(1.0, 0.0);
    for (long i = 0; i < n; ++i) {
        cur *= seed;
        r[i] = cur;
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (long i = n; i >= 0; --i) acc = acc * z + monic[i];
        return acc;
    };
    for (int iter = 0; iter < 200; ++iter) {
        for (long i = 0; i < n; ++i) {
            std::complex<double> num = eval(r[i]);
            std::complex<double> den(1.0, 0.0);
            for (long j = 0; j < n; ++j)
                if (j != i) den *= (r[i] - r[j]);
            if (std::abs(den) > 1e-300) r[i] -= num / den;
        }
    }
    return r;
}

FieldExtension extend_field_complex(const FieldPtr& K, const NFPoly& q) {
    FieldExtension ext;
    ext.old_field = K;
    if (q.deg() == 1) {
        ext.field = K;
        ext.theta = NFElem(K, qpoly({0, 1}));
        ext.root = -(q.coeff(0) / q.coeff(1));
        return ext;
    }
    NFPoly qm = monic(q);
    for (long s : {1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11, 0}) {
        QPoly N = (s == 0 && K->is_rational_field()) ? qpoly_from_nfpoly(qm)
                                                     : norm_of_shift(K, qm, s == 0 ? 1 : s);
        long s_used = (s == 0 && K->is_rational_field()) ? 0 : (s == 0 ? 1 : s);
        if (poly_gcd(N, N.derivative()).deg() != 0) continue;
        N = monic(N);
        // approximate embedding: any complex root of N (prefer positive imag)
        std::vector<std::complex<double>> cc;
        for (long i = 0; i <= N.deg(); ++i) cc.push_back({N.coeff(i).get_d(), 0.0});
        auto roots = dk_roots(cc);
        std::complex<double> pick(0, 1);
        double best = -1;
        for (auto& z : roots) {
            if (std::abs(z.imag()) > best) {
                best = std::abs(z.imag());
                pick = z.imag() >= 0 ? z : std::conj(z);
            }
        }
        FieldPtr L = NumberField::make_complex(N, pick.real(), pick.imag(), 1e-6);
        ext.field = L;
        if (K->is_rational_field() && s_used == 0) {
            ext.theta = NFElem::from_rat(L, Rat(0));
            ext.root = NFElem(L, qpoly({0, 1}));
        } else {
            ext.theta = theta_image(L, K, qm, s_used);
            NFElem gamma = NFElem(L, qpoly({0, 1}));
            ext.root = gamma - NFElem::from_rat(L, Rat(s_used)) * ext.theta;
        }
        return ext;
    }
    throw std::runtime_error("extend_field_complex: no good shift");
}

}  // namespace rzeta
