#include "periodlab/zfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace periodlab {
namespace {

using u64 = std::uint64_t;
using PolyZ = std::vector<mpz_class>;

// ---- integer polynomial helpers -------------------------------------------

void trimz(PolyZ& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
int degz(const PolyZ& f) { return static_cast<int>(f.size()) - 1; }

PolyZ addz(const PolyZ& a, const PolyZ& b) {
    PolyZ r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trimz(r);
    return r;
}

PolyZ subz(const PolyZ& a, const PolyZ& b) {
    PolyZ r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trimz(r);
    return r;
}

PolyZ mulz(const PolyZ& a, const PolyZ& b) {
    if (a.empty() || b.empty()) return {};
    PolyZ r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trimz(r);
    return r;
}

mpz_class smod(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

PolyZ reduce_sym(const PolyZ& f, const mpz_class& m) {
    PolyZ r(f);
    for (auto& c : r) c = smod(c, m);
    trimz(r);
    return r;
}

// division by a monic b with all arithmetic mod m (symmetric reps)
std::pair<PolyZ, PolyZ> divmod_mod(const PolyZ& a, const PolyZ& b, const mpz_class& m) {
    PolyZ rem = reduce_sym(a, m), quo;
    int db = degz(b);
    if (degz(rem) >= db) quo.assign(rem.size() - b.size() + 1, mpz_class(0));
    while (degz(rem) >= db) {
        int k = degz(rem) - db;
        mpz_class c = rem.back();
        quo[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] = smod(rem[k + i] - c * b[i], m);
        trimz(rem);
    }
    return {reduce_sym(quo, m), rem};
}

// exact division f / g over Z for monic g; returns empty optional-style flag
bool divides_z(const PolyZ& f, const PolyZ& g, PolyZ* quot) {
    PolyZ rem(f), quo;
    int dg = degz(g);
    if (degz(rem) < dg) return false;
    quo.assign(rem.size() - g.size() + 1, mpz_class(0));
    while (degz(rem) >= dg) {
        int k = degz(rem) - dg;
        mpz_class c = rem.back(); // g monic
        quo[k] = c;
        for (int i = 0; i <= dg; ++i) rem[k + i] -= c * g[i];
        trimz(rem);
    }
    if (!rem.empty()) return false;
    if (quot) *quot = quo;
    return true;
}

// ---- arithmetic mod a small odd prime -------------------------------------

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((__uint128_t)a * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

using PolyP = std::vector<u64>;

void trimp(PolyP& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
int degp(const PolyP& f) { return static_cast<int>(f.size()) - 1; }

PolyP mulp(const Fp& K, const PolyP& a, const PolyP& b) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    trimp(r);
    return r;
}

PolyP subp(const Fp& K, const PolyP& a, const PolyP& b) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
    trimp(r);
    return r;
}

std::pair<PolyP, PolyP> divmodp(const Fp& K, PolyP a, const PolyP& b) {
    PolyP q;
    int db = degp(b);
    if (degp(a) >= db) q.assign(a.size() - b.size() + 1, 0);
    u64 lcinv = K.inv(b.back());
    while (degp(a) >= db) {
        int k = degp(a) - db;
        u64 c = K.mul(a.back(), lcinv);
        q[k] = c;
        for (int i = 0; i <= db; ++i) a[k + i] = K.sub(a[k + i], K.mul(c, b[i]));
        trimp(a);
    }
    return {q, a};
}

PolyP modp(const Fp& K, const PolyP& a, const PolyP& b) { return divmodp(K, a, b).second; }

PolyP monicp(const Fp& K, PolyP f) {
    if (f.empty() || f.back() == 1) return f;
    u64 c = K.inv(f.back());
    for (auto& x : f) x = K.mul(x, c);
    return f;
}

PolyP gcdp(const Fp& K, PolyP a, PolyP b) {
    while (!b.empty()) {
        PolyP r = modp(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monicp(K, a);
}

// extended euclid: s*a + t*b = gcd (monic)
void ext_gcdp(const Fp& K, PolyP a, PolyP b, PolyP& s, PolyP& t) {
    PolyP s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        auto [q, r] = divmodp(K, a, b);
        a = std::move(b);
        b = std::move(r);
        PolyP s2 = subp(K, s0, mulp(K, q, s1));
        PolyP t2 = subp(K, t0, mulp(K, q, t1));
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!a.empty() && a.back() != 1) {
        u64 c = K.inv(a.back());
        for (auto& x : s0) x = K.mul(x, c);
        for (auto& x : t0) x = K.mul(x, c);
    }
    s = s0;
    t = t0;
}

PolyP powmodp(const Fp& K, PolyP base, mpz_class e, const PolyP& mod) {
    PolyP r{1};
    base = modp(K, base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = modp(K, mulp(K, r, base), mod);
        base = modp(K, mulp(K, base, base), mod);
        e >>= 1;
    }
    return r;
}

PolyP derivp(const Fp& K, const PolyP& f) {
    PolyP r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(K.mul(f[i], i % K.p));
    trimp(r);
    return r;
}

void equal_degree_split(const Fp& K, const PolyP& f, int d, u64& rngstate,
                        std::vector<PolyP>& out) {
    if (degp(f) == d) {
        out.push_back(f);
        return;
    }
    mpz_class q(static_cast<unsigned long>(K.p));
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
    e = (e - 1) / 2;
    for (;;) {
        PolyP r(degp(f), 0);
        for (auto& c : r) {
            rngstate = rngstate * 6364136223846793005ULL + 1442695040888963407ULL;
            c = (rngstate >> 16) % K.p;
        }
        trimp(r);
        if (degp(r) < 1) continue;
        PolyP g = gcdp(K, f, r);
        if (degp(g) <= 0 || degp(g) >= degp(f)) {
            PolyP h = powmodp(K, r, e, f);
            if (h.empty()) continue;
            h[0] = h[0] ? K.sub(h[0], 1) : K.p - 1;
            trimp(h);
            g = gcdp(K, f, h);
        }
        if (degp(g) > 0 && degp(g) < degp(f)) {
            equal_degree_split(K, g, d, rngstate, out);
            equal_degree_split(K, divmodp(K, f, g).first, d, rngstate, out);
            return;
        }
    }
}

std::vector<PolyP> factor_mod_p(const Fp& K, PolyP f) {
    std::vector<PolyP> out;
    u64 rngstate = 0x243f6a8885a308d3ULL ^ K.p;
    PolyP h{0, 1};
    int d = 0;
    while (degp(f) > 0) {
        ++d;
        if (2 * d > degp(f)) {
            out.push_back(f);
            break;
        }
        h = powmodp(K, h, mpz_class(static_cast<unsigned long>(K.p)), f);
        PolyP hx = subp(K, h, PolyP{0, 1});
        PolyP g = gcdp(K, f, hx);
        if (degp(g) > 0) {
            equal_degree_split(K, g, d, rngstate, out);
            f = divmodp(K, f, g).first;
            h = modp(K, h, f);
        }
    }
    return out;
}

// ---- Hensel lifting (quadratic, two factors, recursive tree) ---------------

// Given monic f and a split f = g*h (mod p) with Bezout s*g + t*h = 1 (mod p),
// lift both factors until the modulus reaches at least `target`.
// Classical algorithm; see von zur Gathen & Gerhard, "Modern Computer
// Algebra", Algorithm 15.10.
void hensel_lift_pair(const PolyZ& f, PolyZ& g, PolyZ& h, PolyZ& s, PolyZ& t,
                      const mpz_class& p, const mpz_class& target) {
    mpz_class m = p;
    while (m < target) {
        mpz_class m2 = m * m;
        PolyZ e = reduce_sym(subz(f, mulz(g, h)), m2);
        auto [q, r] = divmod_mod(mulz(s, e), h, m2);
        PolyZ gstar = reduce_sym(addz(g, addz(mulz(t, e), mulz(q, g))), m2);
        PolyZ hstar = reduce_sym(addz(h, r), m2);
        PolyZ b = reduce_sym(subz(addz(mulz(s, gstar), mulz(t, hstar)), PolyZ{mpz_class(1)}), m2);
        auto [c, d] = divmod_mod(mulz(s, b), hstar, m2);
        PolyZ sstar = reduce_sym(subz(s, d), m2);
        PolyZ tstar = reduce_sym(subz(t, addz(mulz(t, b), mulz(c, gstar))), m2);
        g = std::move(gstar);
        h = std::move(hstar);
        s = std::move(sstar);
        t = std::move(tstar);
        m = m2;
    }
}

PolyZ lift_of_modp(const PolyP& f) {
    PolyZ r;
    r.reserve(f.size());
    for (u64 c : f) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

PolyP reduce_to_modp(const Fp& K, const PolyZ& f) {
    PolyP r;
    r.reserve(f.size());
    for (const auto& c : f) {
        mpz_class v = c % static_cast<unsigned long>(K.p);
        if (v < 0) v += static_cast<unsigned long>(K.p);
        r.push_back(v.get_ui());
    }
    trimp(r);
    return r;
}

// Lift the full modular factorization of monic f to factors mod `target`.
void hensel_tree(const Fp& K, const PolyZ& f, const std::vector<PolyP>& fac,
                 const mpz_class& p, const mpz_class& target, std::vector<PolyZ>& out) {
    if (fac.size() == 1) {
        out.push_back(reduce_sym(f, target));
        return;
    }
    size_t half = fac.size() / 2;
    PolyP g0{1}, h0{1};
    for (size_t i = 0; i < half; ++i) g0 = mulp(K, g0, fac[i]);
    for (size_t i = half; i < fac.size(); ++i) h0 = mulp(K, h0, fac[i]);
    PolyP sp, tp;
    ext_gcdp(K, g0, h0, sp, tp);
    PolyZ g = lift_of_modp(g0), h = lift_of_modp(h0);
    PolyZ s = lift_of_modp(sp), t = lift_of_modp(tp);
    g = reduce_sym(g, p); h = reduce_sym(h, p);
    s = reduce_sym(s, p); t = reduce_sym(t, p);
    hensel_lift_pair(f, g, h, s, t, p, target);
    std::vector<PolyP> facg(fac.begin(), fac.begin() + half);
    std::vector<PolyP> fach(fac.begin() + half, fac.end());
    hensel_tree(K, g, facg, p, target, out);
    hensel_tree(K, h, fach, p, target, out);
}

// ---- Zassenhaus driver ------------------------------------------------------

const u64 kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                       47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103,
                       107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163};

mpz_class mignotte_bound(const PolyZ& f) {
    mpz_class s(0);
    for (const auto& c : f) s += c * c;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    root += 1;
    mpz_class b;
    mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(degz(f) + 1));
    return b * root;
}

// factorization of a monic squarefree integer polynomial
std::vector<PolyZ> factor_monic_z(const PolyZ& f) {
    std::vector<PolyZ> result;
    if (degz(f) <= 1) {
        result.push_back(f);
        return result;
    }

    // choose the admissible prime among the first few with fewest factors
    Fp best{0};
    std::vector<PolyP> best_fac;
    int tried = 0;
    for (u64 p : kPrimes) {
        Fp K{p};
        PolyP fp = reduce_to_modp(K, f);
        if (degp(fp) != degz(f)) continue; // monic, cannot happen
        PolyP d = derivp(K, fp);
        if (degp(gcdp(K, fp, d)) != 0) continue; // not squarefree mod p
        auto fac = factor_mod_p(K, fp);
        if (best.p == 0 || fac.size() < best_fac.size()) {
            best = K;
            best_fac = std::move(fac);
        }
        if (best_fac.size() == 1) break;
        if (++tried >= 4) break;
    }
    if (best.p == 0) throw std::runtime_error("factor: no admissible prime found");
    if (best_fac.size() == 1) {
        result.push_back(f);
        return result;
    }
    std::sort(best_fac.begin(), best_fac.end());

    mpz_class p(static_cast<unsigned long>(best.p));
    mpz_class target = 2 * mignotte_bound(f) + 1;
    mpz_class modulus = p;
    while (modulus < target) modulus *= modulus;

    std::vector<PolyZ> lifted;
    hensel_tree(best, reduce_sym(f, modulus), best_fac, p, modulus, lifted);

    // subset recombination
    std::vector<bool> used(lifted.size(), false);
    PolyZ rest(f);
    size_t remaining = lifted.size();
    for (size_t k = 1; 2 * k <= remaining && remaining > 0;) {
        std::vector<size_t> avail;
        for (size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) avail.push_back(i);
        bool found = false;
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            PolyZ cand{mpz_class(1)};
            for (size_t i = 0; i < k; ++i) cand = reduce_sym(mulz(cand, lifted[avail[idx[i]]]), modulus);
            PolyZ quot;
            if (divides_z(rest, cand, &quot)) {
                result.push_back(cand);
                for (size_t i = 0; i < k; ++i) used[avail[idx[i]]] = true;
                rest = quot;
                remaining -= k;
                found = true;
                break;
            }
            // next combination
            size_t i = k;
            while (i-- > 0) {
                if (idx[i] != i + avail.size() - k) {
                    ++idx[i];
                    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = SIZE_MAX; break; }
            }
            if (i == SIZE_MAX) break;
        }
        if (!found) ++k;
    }
    if (degz(rest) > 0) result.push_back(rest);
    return result;
}

} // namespace

std::vector<PolyQ> factor_monic_squarefree(const PolyQ& f, int degree_cap) {
    if (!is_monic(f)) throw std::invalid_argument("factor: polynomial must be monic");
    if (degree(f) > degree_cap)
        throw std::invalid_argument("factor: degree exceeds configured cap");
    if (!is_squarefree(f)) throw std::invalid_argument("factor: polynomial must be squarefree");
    int n = degree(f);
    if (n <= 1) return {f};

    // substitute x = y/c to obtain a monic integer polynomial
    mpz_class c(1);
    for (const auto& a : f) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), a.get_den().get_mpz_t());
    PolyZ g(n + 1);
    mpz_class cp(1);
    for (int k = n; k >= 0; --k) {
        mpq_class v = f[k] * mpq_class(cp);
        if (v.get_den() != 1) throw std::logic_error("factor: clearing denominators failed");
        g[k] = v.get_num();
        cp *= c;
    }

    auto zfac = factor_monic_z(g);

    std::vector<PolyQ> out;
    mpq_class cq(c);
    for (const auto& zf : zfac) {
        // map back: factor(x) = zf(c*x) / c^deg
        PolyQ q(zf.size());
        mpq_class pw(1);
        for (size_t i = 0; i < zf.size(); ++i) {
            q[i] = mpq_class(zf[i]) * pw;
            pw *= cq;
        }
        mpq_class lead = q.back();
        for (auto& a : q) a /= lead;
        out.push_back(q);
    }
    std::sort(out.begin(), out.end(), [](const PolyQ& a, const PolyQ& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

bool is_irreducible_over_q(const PolyQ& f, int degree_cap) {
    if (!is_monic(f) || !is_squarefree(f)) return false;
    if (degree(f) == 1) return true;
    return factor_monic_squarefree(f, degree_cap).size() == 1;
}

} // namespace periodlab
