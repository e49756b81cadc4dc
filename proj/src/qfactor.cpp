#include "rzeta/qfactor.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace rzeta {

// ---------------------------------------------------------------- Q roots

long count_real_roots_q(const QPoly& p, const Rat& a, const Rat& b) {
    auto ch = sturm_chain(p);
    auto sg = [](const Rat& x) { return sgn(x); };
    return sturm_sign_changes(ch, a, sg) - sturm_sign_changes(ch, b, sg);
}

long count_real_roots_q(const QPoly& p) {
    auto ch = sturm_chain(p);
    auto sg = [](const Rat& x) { return sgn(x); };
    return sturm_sign_changes_inf(ch, false, sg) - sturm_sign_changes_inf(ch, true, sg);
}

// ------------------------------------------------------------- Z helpers

namespace {

struct ZPoly {
    std::vector<Int> c;  // lowest first
    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
    long deg() const { return (long)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
};

Int zp_content(const ZPoly& a) {
    Int g = 0;
    for (const auto& x : a.c) g = gcd_int(g, x);
    return g;
}

void zp_make_primitive(ZPoly& a) {
    a.trim();
    if (a.is_zero()) return;
    Int cont = zp_content(a);
    if (sgn(a.c.back()) < 0) cont = -cont;
    for (auto& x : a.c) x /= cont;
}

// Exact division test in Z[t]; on success q holds the quotient.
bool zp_divides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.is_zero()) return false;
    ZPoly r = a;
    q.c.clear();
    if (a.is_zero()) return true;
    if (a.deg() < b.deg()) return false;
    q.c.assign(a.deg() - b.deg() + 1, Int(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        Int quo, rem;
        mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), r.c.back().get_mpz_t(),
                    b.c.back().get_mpz_t());
        if (sgn(rem) != 0) return false;
        long d = r.deg() - b.deg();
        q.c[d] = quo;
        for (long i = 0; i <= b.deg(); ++i) r.c[i + d] -= quo * b.c[i];
        r.trim();
    }
    return r.is_zero();
}

ZPoly zpoly_of(const QPoly& p) {
    Int den(1);
    for (const auto& x : p.c) den = lcm_int(den, x.get_den());
    ZPoly z;
    z.c.reserve(p.c.size());
    for (const auto& x : p.c) {
        Rat y = x * Rat(den);
        z.c.push_back(y.get_num());
    }
    zp_make_primitive(z);
    return z;
}

QPoly qpoly_of(const ZPoly& z) {
    std::vector<Rat> c;
    c.reserve(z.c.size());
    for (const auto& x : z.c) c.emplace_back(x);
    return QPoly(std::move(c));
}

// --------------------------------------------------------- mod-p arith

using u64 = uint64_t;

struct PArith {
    u64 p = 0;
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return (u64)((__uint128_t)a * b % p); }
    u64 powm(u64 b, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return powm(a, p - 2); }
};

using PPoly = std::vector<u64>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
long pdeg(const PPoly& a) { return (long)a.size() - 1; }

PPoly pmul(const PArith& F, const PPoly& a, const PPoly& b) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    ptrim(r);
    return r;
}

PPoly psub(const PArith& F, PPoly a, const PPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    ptrim(a);
    return a;
}

PPoly pscale(const PArith& F, PPoly a, u64 k) {
    for (auto& x : a) x = F.mul(x, k);
    ptrim(a);
    return a;
}

PPoly pmonic(const PArith& F, PPoly a) {
    ptrim(a);
    if (a.empty()) return a;
    return pscale(F, a, F.inv(a.back()));
}

void pdivmod(const PArith& F, PPoly a, const PPoly& b, PPoly& q, PPoly& r) {
    q.clear();
    ptrim(a);
    if (pdeg(a) >= pdeg(b)) q.assign(pdeg(a) - pdeg(b) + 1, 0);
    u64 binv = F.inv(b.back());
    while (!a.empty() && pdeg(a) >= pdeg(b)) {
        u64 k = F.mul(a.back(), binv);
        long d = pdeg(a) - pdeg(b);
        q[d] = k;
        for (long i = 0; i <= pdeg(b); ++i) a[i + d] = F.sub(a[i + d], F.mul(k, b[i]));
        ptrim(a);
    }
    r = a;
}

PPoly pmod_(const PArith& F, const PPoly& a, const PPoly& b) {
    PPoly q, r;
    pdivmod(F, a, b, q, r);
    return r;
}

PPoly pgcd(const PArith& F, PPoly a, PPoly b) {
    while (!b.empty()) {
        PPoly r = pmod_(F, a, b);
        a = b;
        b = r;
    }
    return pmonic(F, a);
}

PPoly pderiv(const PArith& F, const PPoly& a) {
    PPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], i % F.p));
    ptrim(r);
    return r;
}

PPoly ppowmod(const PArith& F, PPoly b, Int e, const PPoly& m) {
    PPoly r = {1};
    b = pmod_(F, b, m);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = pmod_(F, pmul(F, r, b), m);
        b = pmod_(F, pmul(F, b, b), m);
        e >>= 1;
    }
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus, p odd): f monic squarefree,
// all irreducible factors of degree d.
void edf(const PArith& F, PPoly f, long d, std::vector<PPoly>& out, std::mt19937_64& rng) {
    if (pdeg(f) == d) {
        out.push_back(pmonic(F, f));
        return;
    }
    Int e = (pow_int(Int((long)F.p), (unsigned long)d) - 1) / 2;
    while (true) {
        PPoly a(pdeg(f), 0);
        for (auto& x : a) x = rng() % F.p;
        ptrim(a);
        if (pdeg(a) < 1) continue;
        PPoly b = ppowmod(F, a, e, f);
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        ptrim(b);
        PPoly h = pgcd(F, f, b);
        if (pdeg(h) > 0 && pdeg(h) < pdeg(f)) {
            PPoly q, r;
            pdivmod(F, f, h, q, r);
            edf(F, h, d, out, rng);
            edf(F, pmonic(F, q), d, out, rng);
            return;
        }
    }
}

std::vector<PPoly> factor_mod_p(const PArith& F, PPoly f) {
    std::vector<PPoly> out;
    f = pmonic(F, f);
    std::mt19937_64 rng(0x5eed1234abcdULL);
    PPoly x = {0, 1};
    PPoly h = x;
    long i = 0;
    PPoly rest = f;
    while (pdeg(rest) >= 1) {
        ++i;
        if (2 * i > pdeg(rest)) {
            out.push_back(rest);
            break;
        }
        h = ppowmod(F, h, Int((long)F.p), rest);
        PPoly diff = psub(F, h, x);
        PPoly g = pgcd(F, rest, diff);
        if (pdeg(g) > 0) {
            edf(F, g, i, out, rng);
            PPoly q, r;
            pdivmod(F, rest, g, q, r);
            rest = pmonic(F, q);
            h = pmod_(F, h, rest);
        }
    }
    return out;
}

// ------------------------------------------------------- Hensel lifting

Int symm(const Int& x, const Int& m) {
    Int r = x % m;
    if (sgn(r) < 0) r += m;
    if (r * 2 > m) r -= m;
    return r;
}

struct MPoly {
    std::vector<Int> c;
    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
    long deg() const { return (long)c.size() - 1; }
};

MPoly m_of(const PPoly& a) {
    MPoly r;
    for (u64 x : a) r.c.emplace_back((unsigned long)x);
    r.trim();
    return r;
}

MPoly m_reduce(MPoly a, const Int& m) {
    for (auto& x : a.c) {
        x %= m;
        if (sgn(x) < 0) x += m;
    }
    a.trim();
    return a;
}

MPoly m_mul(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return m_reduce(std::move(r), m);
}

MPoly m_sub(MPoly a, const MPoly& b, const Int& m) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Int(0));
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
    return m_reduce(std::move(a), m);
}

MPoly m_add(MPoly a, const MPoly& b, const Int& m) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Int(0));
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
    return m_reduce(std::move(a), m);
}

void m_divmod_monic(const MPoly& a, const MPoly& b, const Int& m, MPoly& q, MPoly& r) {
    r = a;
    q.c.clear();
    if (r.deg() >= b.deg()) q.c.assign(r.deg() - b.deg() + 1, Int(0));
    while (!r.c.empty() && r.deg() >= b.deg()) {
        Int k = r.c.back() % m;
        long d = r.deg() - b.deg();
        q.c[d] = k;
        for (long i = 0; i <= b.deg(); ++i) r.c[i + d] -= k * b.c[i];
        r = m_reduce(std::move(r), m);
    }
    q = m_reduce(std::move(q), m);
}

// Linear multifactor Hensel lifting: factors fixed mod p, lifted modulus
// one power of p at a time with Bezout multipliers precomputed mod p.
struct LinearLift {
    PArith F;
    std::vector<PPoly> g0;   // factors mod p (monic)
    std::vector<PPoly> s0;   // s_i = (prod_{j!=i} g_j)^{-1} mod g_i over F_p
    std::vector<MPoly> cur;  // lifted factors, monic, coefficients in [0, M)
    Int M;                   // current modulus (power of p)
};

PPoly p_of_m(const PArith& F, const MPoly& a) {
    PPoly v;
    for (const auto& x : a.c) v.push_back(mpz_fdiv_ui(x.get_mpz_t(), F.p));
    ptrim(v);
    return v;
}

LinearLift lift_init(const PArith& F, const std::vector<PPoly>& factors) {
    LinearLift L;
    L.F = F;
    L.g0 = factors;
    L.M = Int((long)F.p);
    for (size_t i = 0; i < factors.size(); ++i) {
        PPoly prod = {1};
        for (size_t j = 0; j < factors.size(); ++j)
            if (j != i) prod = pmod_(F, pmul(F, prod, factors[j]), factors[i]);
        // invert prod mod g_i via extended Euclid over F_p
        PPoly r0 = factors[i], r1 = prod, t0 = {}, t1 = {1};
        while (!r1.empty()) {
            PPoly q, rr;
            pdivmod(F, r0, r1, q, rr);
            r0 = r1;
            r1 = rr;
            PPoly t2 = psub(F, t0, pmul(F, q, t1));
            t0 = t1;
            t1 = t2;
        }
        if (pdeg(r0) != 0) throw std::runtime_error("hensel: factors not coprime mod p");
        L.s0.push_back(pmod_(F, pscale(F, t0, F.inv(r0[0])), factors[i]));
        MPoly m = m_of(factors[i]);
        L.cur.push_back(m);
    }
    return L;
}

// One step: modulus M -> M*p, keeping f_monic = prod(cur) (mod M*p).
void lift_step(LinearLift& L, const MPoly& f_next /* monic f mod M*p */) {
    Int Mp = L.M * Int((long)L.F.p);
    MPoly prod;
    prod.c = {Int(1)};
    for (auto& g : L.cur) prod = m_mul(prod, g, Mp);
    MPoly e = m_sub(f_next, prod, Mp);
    // all coefficients of e are divisible by M
    PPoly E;
    for (auto& x : e.c) {
        Int q = x / L.M;
        E.push_back(mpz_fdiv_ui(q.get_mpz_t(), L.F.p));
    }
    ptrim(E);
    for (size_t i = 0; i < L.cur.size(); ++i) {
        PPoly d = pmod_(L.F, pmul(L.F, E, L.s0[i]), L.g0[i]);
        MPoly add;
        for (u64 x : d) add.c.push_back(L.M * Int((unsigned long)x));
        add.trim();
        L.cur[i] = m_add(L.cur[i], add, Mp);
    }
    L.M = Mp;
}

long mdeg_sum(const std::vector<int>& subset, const std::vector<MPoly>& lifted) {
    long s = 0;
    for (int i : subset) s += lifted[i].deg();
    return s;
}

// Factor a primitive squarefree integer polynomial, deg >= 1.
std::vector<ZPoly> factor_z_squarefree(const ZPoly& f) {
    if (f.deg() == 1) return {f};
    static const u64 primes[] = {1000003, 1000033, 1000037, 1000039, 1000081,
                                 1000099, 1000117, 1000121, 1000133, 1000151};
    PArith F{};
    std::vector<PPoly> best;
    bool found = false;
    for (u64 p : primes) {
        if (mpz_fdiv_ui(f.c.back().get_mpz_t(), p) == 0) continue;
        PArith G{p};
        PPoly fp;
        for (const auto& x : f.c) fp.push_back(mpz_fdiv_ui(x.get_mpz_t(), p));
        ptrim(fp);
        if (pgcd(G, fp, pderiv(G, fp)).size() != 1) continue;
        auto fac = factor_mod_p(G, fp);
        if (!found || fac.size() < best.size()) {
            best = fac;
            F = G;
            found = true;
            if (best.size() == 1) break;
        }
    }
    if (!found) throw std::runtime_error("factorization: no usable prime");
    if (best.size() == 1) return {f};

    Int maxc = 0;
    for (const auto& x : f.c) {
        Int a = abs(x);
        if (a > maxc) maxc = a;
    }
    Int lcf = f.c.back();
    Int bound = pow_int(Int(2), (unsigned long)(f.deg() + 2)) * maxc * abs(lcf) *
                Int((long)f.c.size());
    Int target = 2 * bound + 1;

    if (getenv("RZ_DBG")) {
        fprintf(stderr, "mod-p factors (p=%llu):", (unsigned long long)F.p);
        for (auto& b : best) fprintf(stderr, " %ld", pdeg(b));
        fprintf(stderr, "\n");
    }
    std::sort(best.begin(), best.end());
    std::vector<MPoly> leaves;
    leaves.reserve(best.size());
    for (auto& q : best) leaves.push_back(m_of(q));
    std::vector<LiftNode> nodes;
    int root = build_tree(nodes, leaves, 0, (int)leaves.size(), F);

    auto monic_f_mod = [&](const Int& mod) {
        MPoly r;
        for (const auto& x : f.c) r.c.push_back(x);
        r = m_reduce(std::move(r), mod);
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), lcf.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::runtime_error("lc not invertible modulo p^k");
        for (auto& x : r.c) x = (x * inv) % mod;
        r.trim();
        return r;
    };

    Int mk((long)F.p);
    while (mk < target) {
        std::function<void(int, const MPoly&)> step = [&](int idx, const MPoly& fnode) {
            LiftNode& n = nodes[idx];
            if (n.left < 0) {
                n.prod = fnode;
                return;
            }
            LiftPair L{nodes[n.left].prod, nodes[n.right].prod, n.s, n.t};
            hensel_step(fnode, L, mk);
            n.s = L.s;
            n.t = L.t;
            n.prod = fnode;
            step(n.left, L.g);
            step(n.right, L.h);
        };
        step(root, monic_f_mod(mk * mk));
        mk = mk * mk;
    }

    std::vector<MPoly> lifted;
    std::function<void(int)> gather = [&](int idx) {
        if (nodes[idx].left < 0) {
            lifted.push_back(nodes[idx].prod);
            return;
        }
        gather(nodes[idx].left);
        gather(nodes[idx].right);
    };
    gather(root);

    if (getenv("RZ_DBG")) {
        fprintf(stderr, "modular factors: %zu, degs:", lifted.size());
        for (auto& L : lifted) fprintf(stderr, " %ld", L.deg());
        fprintf(stderr, "\n");
    }
    std::vector<ZPoly> result;
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = (int)i;
    ZPoly rem = f;

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        MPoly prod;
        prod.c = {Int(1)};
        for (int i : subset) prod = m_mul(prod, lifted[i], mk);
        Int lc = rem.c.back();
        for (auto& x : prod.c) x = (x * lc) % mk;
        ZPoly cand;
        for (auto& x : prod.c) cand.c.push_back(symm(x, mk));
        cand.trim();
        if (cand.is_zero()) return false;
        zp_make_primitive(cand);
        ZPoly q;
        if (zp_divides(rem, cand, q)) {
            result.push_back(cand);
            rem = q;
            zp_make_primitive(rem);
            return true;
        }
        return false;
    };

    for (size_t card = 1; !alive.empty() && card <= alive.size();) {
        bool progressed = false;
        std::vector<size_t> idx(card);
        for (size_t i = 0; i < card; ++i) idx[i] = i;
        while (card <= alive.size()) {
            std::vector<int> subset;
            for (size_t i : idx) subset.push_back(alive[i]);
            if (mdeg_sum(subset, lifted) <= rem.deg() && try_subset(subset)) {
                std::vector<int> na;
                for (size_t i = 0, k = 0; i < alive.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    na.push_back(alive[i]);
                }
                alive = na;
                progressed = true;
                break;
            }
            long pos = (long)card - 1;
            while (pos >= 0 && idx[pos] == alive.size() - card + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t j = pos + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!progressed) ++card;
        if (rem.deg() == 0) break;
    }
    if (rem.deg() > 0) result.push_back(rem);
    return result;
}

}  // namespace

QFactorization factor_qpoly(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor of zero polynomial");
    QFactorization out;
    out.constant = p.deg() == 0 ? p.c[0] : p.lc();
    if (p.deg() == 0) return out;
    auto sq = squarefree_decomp(p);  // monic parts
    for (auto& [g, e] : sq) {
        ZPoly z = zpoly_of(g);
        auto irr = factor_z_squarefree(z);
        for (auto& zi : irr) out.factors.push_back({monic(qpoly_of(zi)), e});
    }
    return out;
}

bool is_irreducible_q(const QPoly& p) {
    if (p.deg() < 1) return false;
    auto f = factor_qpoly(p);
    return f.factors.size() == 1 && f.factors[0].exponent == 1 &&
           f.factors[0].factor.deg() == p.deg();
}

}  // namespace rzeta
