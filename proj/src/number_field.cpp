#include "periodlab/number_field.hpp"

#include "periodlab/zfactor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace periodlab {

// ---- NumberField ------------------------------------------------------------

NumberFieldPtr NumberField::create(std::string label, PolyQ poly, int degree_cap) {
    normalize(poly);
    if (periodlab::degree(poly) < 1) throw std::invalid_argument("NumberField: constant polynomial");
    if (!is_monic(poly)) throw std::invalid_argument("NumberField: polynomial must be monic");
    if (!is_squarefree(poly)) throw std::invalid_argument("NumberField: polynomial must be squarefree");
    if (!is_irreducible_over_q(poly, degree_cap))
        throw std::invalid_argument("NumberField: polynomial must be irreducible over Q");
    return NumberFieldPtr(new NumberField(std::move(label), std::move(poly)));
}

NumberFieldPtr NumberField::create_unchecked(std::string label, PolyQ poly) {
    normalize(poly);
    return NumberFieldPtr(new NumberField(std::move(label), std::move(poly)));
}

NumberFieldPtr NumberField::rationals() {
    static NumberFieldPtr q = create_unchecked("Q", PolyQ{mpq_class(0), mpq_class(1)});
    return q;
}

// ---- NFElem -----------------------------------------------------------------

NFElem::NFElem(NumberFieldPtr K, PolyQ coeffs) : K_(std::move(K)), c_(std::move(coeffs)) {
    if (degree(c_) >= K_->degree()) c_ = divmod(c_, K_->poly()).second;
    normalize(c_);
}

NFElem NFElem::from_rational(NumberFieldPtr K, const mpq_class& q) {
    PolyQ c;
    if (q != 0) c.push_back(q);
    return NFElem(std::move(K), std::move(c));
}

NFElem NFElem::generator(NumberFieldPtr K) {
    return NFElem(std::move(K), PolyQ{mpq_class(0), mpq_class(1)});
}

bool NFElem::is_rational(mpq_class* value) const {
    if (degree(c_) > 0) return false;
    if (value) *value = c_.empty() ? mpq_class(0) : c_[0];
    return true;
}

NFElem NFElem::operator+(const NFElem& o) const { return NFElem(K_, add(c_, o.c_)); }
NFElem NFElem::operator-(const NFElem& o) const { return NFElem(K_, sub(c_, o.c_)); }
NFElem NFElem::operator-() const { return NFElem(K_, neg(c_)); }
NFElem NFElem::operator*(const NFElem& o) const {
    return NFElem(K_, divmod(mul(c_, o.c_), K_->poly()).second);
}

NFElem NFElem::inverse() const {
    if (is_zero()) throw std::domain_error("NFElem: division by zero");
    PolyQ a(c_), b(K_->poly());
    PolyQ s0{mpq_class(1)}, s1{};
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        PolyQ s2 = sub(s0, mul(q, s1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree(a) != 0)
        throw std::logic_error("NFElem: gcd with modulus nonconstant (reducible modulus?)");
    return NFElem(K_, scale(s0, 1 / a[0]));
}

NFElem NFElem::substitute_generator(const NFElem& image) const {
    NFElem r = from_rational(image.field(), 0);
    for (size_t i = c_.size(); i-- > 0;)
        r = r * image + from_rational(image.field(), c_[i]);
    return r;
}

std::string NFElem::str(const std::string& var) const {
    if (c_.empty()) return "0";
    return to_string(c_, var);
}

// ---- PolyNF -----------------------------------------------------------------

int degree_nf(const PolyNF& f) { return static_cast<int>(f.size()) - 1; }

void normalize_nf(PolyNF& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

PolyNF lift_poly(const PolyQ& f, const NumberFieldPtr& K) {
    PolyNF r;
    r.reserve(f.size());
    for (const auto& c : f) r.push_back(NFElem::from_rational(K, c));
    normalize_nf(r);
    return r;
}

PolyNF add_nf(const PolyNF& a, const PolyNF& b) {
    const NumberFieldPtr& K = a.empty() ? (b.empty() ? nullptr : b[0].field()) : a[0].field();
    PolyNF r(std::max(a.size(), b.size()), NFElem::from_rational(K, 0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    normalize_nf(r);
    return r;
}

PolyNF sub_nf(const PolyNF& a, const PolyNF& b) {
    PolyNF nb(b);
    for (auto& c : nb) c = -c;
    return add_nf(a, nb);
}

PolyNF mul_nf(const PolyNF& a, const PolyNF& b) {
    if (a.empty() || b.empty()) return {};
    const NumberFieldPtr& K = a[0].field();
    PolyNF r(a.size() + b.size() - 1, NFElem::from_rational(K, 0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    normalize_nf(r);
    return r;
}

std::pair<PolyNF, PolyNF> divmod_nf(const PolyNF& a, const PolyNF& b) {
    if (b.empty()) throw std::invalid_argument("PolyNF division by zero");
    PolyNF rem(a), quo;
    int db = degree_nf(b);
    const NumberFieldPtr& K = b[0].field();
    if (degree_nf(a) >= db) quo.assign(a.size() - b.size() + 1, NFElem::from_rational(K, 0));
    NFElem lcinv = b.back().inverse();
    while (degree_nf(rem) >= db) {
        int k = degree_nf(rem) - db;
        NFElem c = rem.back() * lcinv;
        quo[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] = rem[k + i] - c * b[i];
        normalize_nf(rem);
    }
    return {quo, rem};
}

PolyNF gcd_nf(const PolyNF& a, const PolyNF& b) {
    PolyNF x(a), y(b);
    normalize_nf(x);
    normalize_nf(y);
    while (!y.empty()) {
        PolyNF r = divmod_nf(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.empty()) {
        NFElem lcinv = x.back().inverse();
        for (auto& c : x) c = c * lcinv;
    }
    return x;
}

PolyNF compose_shift_nf(const PolyQ& f, const NFElem& shift) {
    const NumberFieldPtr& K = shift.field();
    PolyNF lin{shift, NFElem::from_rational(K, 1)};
    PolyNF r;
    for (size_t i = f.size(); i-- > 0;) {
        r = mul_nf(r, lin);
        if (f[i] != 0) r = add_nf(r, PolyNF{NFElem::from_rational(K, f[i])});
    }
    return r;
}

std::string to_string_nf(const PolyNF& f, const std::string& var, const std::string& gen) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << f[i].str(gen) << ")";
        if (i > 0) {
            os << "*" << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---- Trager factorization ----------------------------------------------------

namespace {

bool polynf_less(const PolyNF& a, const PolyNF& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;) {
        const PolyQ& x = a[i].coeffs();
        const PolyQ& y = b[i].coeffs();
        if (x.size() != y.size()) return x.size() < y.size();
        for (size_t k = x.size(); k-- > 0;)
            if (x[k] != y[k]) return x[k] < y[k];
    }
    return false;
}

// Res_y(g(y), f(x - s*y)) computed by evaluation and interpolation.
PolyQ trager_norm(const PolyQ& f, const PolyQ& g, long s) {
    int dtot = degree(f) * degree(g);
    std::vector<mpq_class> xs, ys;
    xs.reserve(dtot + 1);
    ys.reserve(dtot + 1);
    for (int i = 0; i <= dtot; ++i) {
        mpq_class x(i - dtot / 2);
        PolyQ p = compose_linear(f, x, mpq_class(-s));
        xs.push_back(x);
        ys.push_back(resultant(g, p));
    }
    PolyQ n = interpolate(xs, ys);
    if (degree(n) != dtot) throw std::logic_error("trager: norm degree unexpected");
    if (n.back() != 1) {
        mpq_class lc = n.back();
        for (auto& c : n) c /= lc;
    }
    return n;
}

} // namespace

std::vector<TragerFactor> factor_over_extension_with_norms(const PolyQ& f0,
                                                           const NumberFieldPtr& F,
                                                           int degree_cap) {
    PolyQ f(f0);
    normalize(f);
    if (!is_monic(f)) throw std::invalid_argument("factor_over_extension: input must be monic");
    if (!is_squarefree(f))
        throw std::invalid_argument("factor_over_extension: input must be squarefree");
    if (degree(f) * F->degree() > degree_cap)
        throw std::invalid_argument("factor_over_extension: degree exceeds configured cap");

    auto by_factor = [](const TragerFactor& a, const TragerFactor& b) {
        return polynf_less(a.factor, b.factor);
    };

    if (degree(f) == 1) return {{lift_poly(f, F), F->poly()}};

    if (F->is_rationals()) {
        std::vector<TragerFactor> out;
        for (const auto& g : factor_monic_squarefree(f, degree_cap))
            out.push_back({lift_poly(g, F), g});
        std::sort(out.begin(), out.end(), by_factor);
        return out;
    }

    // s = 0 never yields a squarefree norm here (f has rational
    // coefficients, so the resultant degenerates to a power of f)
    const PolyQ& g = F->poly();
    for (long s : {1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, 7L, 8L}) {
        PolyQ norm = trager_norm(f, g, s);
        if (!is_squarefree(norm)) continue;
        auto nf = factor_monic_squarefree(norm, degree_cap);
        NFElem shift = NFElem::generator(F) * NFElem::from_rational(F, mpq_class(s));
        PolyNF flift = lift_poly(f, F);
        std::vector<TragerFactor> out;
        for (const auto& nj : nf) {
            PolyNF h = gcd_nf(flift, compose_shift_nf(nj, shift));
            if (degree_nf(h) >= 1) out.push_back({h, nj});
        }
        // sanity: the factors must multiply back to f and the Trager
        // degree correspondence must hold
        PolyNF prod{NFElem::from_rational(F, 1)};
        bool degrees_ok = true;
        for (const auto& h : out) {
            prod = mul_nf(prod, h.factor);
            if (degree(h.norm) != degree_nf(h.factor) * F->degree()) degrees_ok = false;
        }
        if (degrees_ok && sub_nf(prod, flift).empty()) {
            std::sort(out.begin(), out.end(), by_factor);
            return out;
        }
    }
    throw std::runtime_error("factor_over_extension: no squarefree norm found");
}

std::vector<PolyNF> factor_over_extension(const PolyQ& f, const NumberFieldPtr& F,
                                          int degree_cap) {
    std::vector<PolyNF> out;
    for (auto& t : factor_over_extension_with_norms(f, F, degree_cap))
        out.push_back(std::move(t.factor));
    return out;
}

// ---- embeddings ---------------------------------------------------------------

namespace {

BallComplex numeric_eval_cyclo(const Cyclo& c, mpfr_prec_t prec) {
    const auto& field = *c.field();
    BallComplex acc = BallComplex::zero(prec);
    const PolyQ& coeffs = c.coeffs();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        BigFloat co(prec), si(prec);
        BigFloat::cos_sin_2pi(co, si, static_cast<long>(k), static_cast<long>(field.conductor()), prec);
        BallComplex zk(std::move(co), std::move(si), 0.0);
        acc = acc + zk * BallComplex::from_rational(coeffs[k], prec);
    }
    return acc;
}

// int sign of the imaginary part, escalating precision until certain
int imag_sign(const Scalar& s) {
    if (!s.exact()) {
        const BallComplex& b = s.ball();
        double m = std::abs(b.im.to_double());
        if (m <= b.rad) return 0;
        return b.im.sign();
    }
    for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
        BallComplex b = numeric_eval_cyclo(s.cyc(), prec);
        double m = std::abs(b.im.to_double());
        if (m > b.rad * 4 + 1e-300) return b.im.sign();
        if (b.im.is_zero()) break;
    }
    return 0;
}

std::vector<BallComplex> durand_kerner(const PolyQ& f, mpfr_prec_t prec) {
    int n = degree(f);
    std::vector<BallComplex> coeff;
    for (const auto& c : f) coeff.push_back(BallComplex::from_rational(c, prec));
    auto evalf = [&](const BallComplex& z) {
        BallComplex acc = coeff.back();
        for (int i = n - 1; i >= 0; --i) acc = acc * z + coeff[i];
        return acc;
    };
    // starting points on a slightly irrational spiral
    double radius = 1.0;
    for (const auto& c : f) {
        double m = std::abs(mpq_class(c).get_d());
        radius = std::max(radius, 1.0 + m);
    }
    std::vector<BallComplex> z;
    for (int k = 0; k < n; ++k) {
        double ang = 2 * 3.14159265358979 * (k + 0.25) / n + 0.4;
        BallComplex p(BigFloat::from_double(radius * std::cos(ang), prec),
                      BigFloat::from_double(radius * std::sin(ang), prec), 0.0);
        z.push_back(p);
    }
    for (int iter = 0; iter < 500; ++iter) {
        double maxstep = 0.0;
        for (int k = 0; k < n; ++k) {
            BallComplex denom = BallComplex::from_rational(1, prec);
            for (int j = 0; j < n; ++j)
                if (j != k) denom = denom * (z[k] - z[j]);
            BallComplex step = evalf(z[k]) / denom;
            z[k] = z[k] - step;
            z[k].rad = 0.0; // midpoint iteration; certification happens below
            maxstep = std::max(maxstep, step.mid_mag());
        }
        if (maxstep < std::ldexp(radius, -static_cast<int>(prec) + 8)) break;
    }
    // inclusion radii: n * |f(z_k)| / prod |z_k - z_j|
    for (int k = 0; k < n; ++k) {
        double denom = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != k) denom *= (z[k] - z[j]).mid_mag();
        BallComplex v = evalf(z[k]);
        z[k].rad = 4.0 * n * v.mag_upper() / denom + 1e-300;
    }
    return z;
}

} // namespace

EmbeddingSet EmbeddingSet::build(NumberFieldPtr field, const Backend& backend) {
    EmbeddingSet es;
    es.field_ = field;
    es.backend_ = backend;
    const PolyQ& f = field->poly();
    int n = field->degree();

    if (backend.is_exact()) {
        auto cycfield = NumberField::create_unchecked(
            "Q(zeta" + std::to_string(backend.cyclo->conductor()) + ")", backend.cyclo->modulus());
        auto factors = factor_over_extension(f, cycfield, 1 << 14);
        std::vector<Cyclo> roots;
        for (const auto& fac : factors) {
            if (degree_nf(fac) != 1) continue;
            // root of X + c is -c
            NFElem root = -fac[0];
            roots.emplace_back(backend.cyclo, root.coeffs());
        }
        if (static_cast<int>(roots.size()) != n)
            throw std::runtime_error("embeddings: field " + field->label() +
                                     " does not split in Q(zeta_" +
                                     std::to_string(backend.cyclo->conductor()) + ")");
        std::sort(roots.begin(), roots.end(), [](const Cyclo& a, const Cyclo& b) {
            const PolyQ& x = a.coeffs();
            const PolyQ& y = b.coeffs();
            if (x.size() != y.size()) return x.size() < y.size();
            for (size_t k = x.size(); k-- > 0;)
                if (x[k] != y[k]) return x[k] < y[k];
            return false;
        });
        for (auto& r : roots) es.roots_.emplace_back(Scalar(std::move(r)));
        es.conj_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            Cyclo cj = es.roots_[i].cyc().conj();
            for (int j = 0; j < n; ++j)
                if (es.roots_[j].cyc() == cj) {
                    es.conj_[i] = j;
                    break;
                }
            if (es.conj_[i] < 0) throw std::logic_error("embeddings: conjugation did not close");
        }
    } else {
        auto roots = durand_kerner(f, backend.bits);
        // certified separation
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                if ((roots[i] - roots[j]).mid_mag() <= 2 * (roots[i].rad + roots[j].rad))
                    throw std::runtime_error("embeddings: roots not separated at this precision");
        std::sort(roots.begin(), roots.end(), [](const BallComplex& a, const BallComplex& b) {
            int c = mpfr_cmp(a.re.raw(), b.re.raw());
            if (c != 0) return c < 0;
            return mpfr_cmp(a.im.raw(), b.im.raw()) < 0;
        });
        es.conj_.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            BallComplex cj = roots[i].conj();
            int best = -1;
            double bd = 0;
            for (int j = 0; j < n; ++j) {
                double d = (roots[j] - cj).mid_mag();
                if (best < 0 || d < bd) {
                    best = j;
                    bd = d;
                }
            }
            es.conj_[i] = best;
        }
        for (int i = 0; i < n; ++i)
            if (es.conj_[es.conj_[i]] != i)
                throw std::runtime_error("embeddings: conjugation pairing is not an involution");
        for (auto& r : roots) es.roots_.emplace_back(Scalar(std::move(r)));
    }
    return es;
}

bool EmbeddingSet::has_real_embedding() const {
    for (int i = 0; i < count(); ++i)
        if (conj_[i] == i) return true;
    return false;
}

Scalar EmbeddingSet::eval(const NFElem& e, int emb) const {
    const PolyQ& c = e.coeffs();
    Scalar acc = Scalar::zero(backend_);
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * roots_.at(emb);
        if (c[i] != 0) acc = acc + Scalar::from_rational(backend_, c[i]);
    }
    return acc;
}

void EmbeddingSet::choose_default_cm_type() {
    cm_type_.clear();
    std::vector<bool> seen(count(), false);
    for (int i = 0; i < count(); ++i) {
        if (seen[i]) continue;
        int j = conj_[i];
        if (j == i) throw std::runtime_error("cm_type: field has a real embedding");
        seen[i] = seen[j] = true;
        int si = imag_sign(roots_[i]);
        if (si == 0) throw std::runtime_error("cm_type: cannot certify imaginary sign");
        cm_type_.push_back(si > 0 ? i : j);
    }
    std::sort(cm_type_.begin(), cm_type_.end());
}

void EmbeddingSet::set_cm_type(std::vector<int> sigma) {
    std::vector<bool> seen(count(), false);
    for (int i : sigma) {
        if (i < 0 || i >= count() || conj_[i] == i) throw std::invalid_argument("cm_type: bad index");
        seen[i] = true;
    }
    for (int i : sigma)
        if (seen[conj_[i]]) throw std::invalid_argument("cm_type: contains a conjugate pair");
    if (2 * sigma.size() != static_cast<size_t>(count()))
        throw std::invalid_argument("cm_type: must select one embedding per pair");
    std::sort(sigma.begin(), sigma.end());
    cm_type_ = std::move(sigma);
}

std::vector<int> EmbeddingSet::galois_permutation(unsigned a) const {
    if (!backend_.is_exact())
        throw std::logic_error("galois_permutation: exact backend only");
    std::vector<int> perm(count(), -1);
    for (int i = 0; i < count(); ++i) {
        Cyclo img = roots_[i].cyc().galois(a);
        for (int j = 0; j < count(); ++j)
            if (roots_[j].cyc() == img) {
                perm[i] = j;
                break;
            }
        if (perm[i] < 0) throw std::logic_error("galois_permutation: image root missing");
    }
    return perm;
}

// ---- CM structure --------------------------------------------------------------

namespace {

// minimal polynomial of u in F via the squarefree part of Res_y(g, x - u(y))
PolyQ minpoly_of(const NFElem& u, const NumberFieldPtr& F) {
    const PolyQ& g = F->poly();
    int d = F->degree();
    std::vector<mpq_class> xs, ys;
    for (int i = 0; i <= d; ++i) {
        mpq_class x(i - d / 2);
        PolyQ p = sub(PolyQ{x}, u.coeffs());
        xs.push_back(x);
        ys.push_back(resultant(g, p));
    }
    PolyQ ch = interpolate(xs, ys);
    if (ch.back() != 1) {
        mpq_class lc = ch.back();
        for (auto& c : ch) c /= lc;
    }
    PolyQ m = div_exact(ch, gcd(ch, derivative(ch)));
    if (!m.empty() && m.back() != 1) {
        mpq_class lc = m.back();
        for (auto& c : m) c /= lc;
    }
    return m;
}

} // namespace

CMStructure cm_structure(const NumberFieldPtr& F, const EmbeddingSet& emb) {
    if (F->degree() % 2 != 0 || emb.has_real_embedding())
        throw std::runtime_error("cm_structure: field " + F->label() + " is not totally imaginary");

    // conjugation must be induced by a field automorphism theta -> theta_bar
    auto factors = factor_over_extension(F->poly(), F, 1 << 14);
    NFElem theta = NFElem::generator(F);
    std::optional<NFElem> theta_bar;
    for (const auto& fac : factors) {
        if (degree_nf(fac) != 1) continue;
        NFElem cand = -fac[0];
        // sigma(cand) must match the conjugate root, unambiguously: equal to
        // the expected root (not certainly distinct) and certainly distinct
        // from every other root. Decidable in exact mode, certified in float.
        bool ok = true;
        for (int s = 0; s < emb.count() && ok; ++s) {
            Scalar lhs = emb.eval(cand, s);
            int want = emb.conj_index(s);
            for (int j = 0; j < emb.count() && ok; ++j) {
                Tri e = lhs.equals(emb.root(j));
                if (j == want ? e == Tri::no : e != Tri::no) ok = false;
            }
        }
        if (ok) {
            theta_bar = cand;
            break;
        }
    }
    if (!theta_bar)
        throw std::runtime_error("cm_structure: complex conjugation is not an automorphism of " +
                                 F->label());

    CMStructure cm;
    cm.theta_bar = *theta_bar;
    cm.alpha = theta - *theta_bar;

    int dplus = F->degree() / 2;
    std::vector<NFElem> candidates = {
        theta + *theta_bar,
        theta * *theta_bar,
        theta + *theta_bar + theta * *theta_bar,
        (theta + *theta_bar) * (theta * *theta_bar),
    };
    for (const auto& u : candidates) {
        PolyQ m = minpoly_of(u, F);
        if (degree(m) == dplus) {
            cm.fplus = NumberField::create_unchecked(F->label() + "+", m);
            cm.fplus_gen_in_f = u;
            return cm;
        }
    }
    throw std::runtime_error("cm_structure: no generator found for the totally real subfield");
}

std::vector<NFElem> CMStructure::fplus_power_basis() const {
    std::vector<NFElem> basis;
    int d = fplus->degree();
    NFElem one = NFElem::from_rational(fplus_gen_in_f.field(), 1);
    NFElem acc = one;
    for (int k = 0; k < d; ++k) {
        basis.push_back(acc);
        acc = acc * fplus_gen_in_f;
    }
    return basis;
}

// ---- NF matrices ----------------------------------------------------------------

NFMat nf_identity(const NumberFieldPtr& K, int n) {
    NFMat m(n, std::vector<NFElem>(n, NFElem::from_rational(K, 0)));
    for (int i = 0; i < n; ++i) m[i][i] = NFElem::from_rational(K, 1);
    return m;
}

NFMat nf_mul(const NFMat& a, const NFMat& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    const NumberFieldPtr& K = a[0][0].field();
    NFMat out(n, std::vector<NFElem>(m, NFElem::from_rational(K, 0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            NFElem acc = NFElem::from_rational(K, 0);
            for (size_t l = 0; l < k; ++l) acc = acc + a[i][l] * b[l][j];
            out[i][j] = acc;
        }
    return out;
}

NFMat nf_inverse(NFMat m) {
    size_t n = m.size();
    const NumberFieldPtr& K = m[0][0].field();
    NFMat inv = nf_identity(K, static_cast<int>(n));
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { piv = i; break; }
        if (piv == n) throw std::domain_error("nf_inverse: singular matrix");
        if (piv != k) { std::swap(m[piv], m[k]); std::swap(inv[piv], inv[k]); }
        NFElem d = m[k][k].inverse();
        for (size_t j = 0; j < n; ++j) { m[k][j] = m[k][j] * d; inv[k][j] = inv[k][j] * d; }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].is_zero()) continue;
            NFElem f = m[i][k];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] = m[i][j] - f * m[k][j];
                inv[i][j] = inv[i][j] - f * inv[k][j];
            }
        }
    }
    return inv;
}

NFElem nf_det(NFMat m) {
    size_t n = m.size();
    const NumberFieldPtr& K = m[0][0].field();
    NFElem det = NFElem::from_rational(K, 1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { piv = i; break; }
        if (piv == n) return NFElem::from_rational(K, 0);
        if (piv != k) { std::swap(m[piv], m[k]); det = -det; }
        det = det * m[k][k];
        NFElem d = m[k][k].inverse();
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            NFElem f = m[i][k] * d;
            for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    return det;
}

bool nf_equal(const NFMat& a, const NFMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

Mat nf_embed(const NFMat& m, const EmbeddingSet& emb, int tau) {
    size_t n = m.size(), c = m[0].size();
    Mat out(n, c, Scalar::zero(emb.backend()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < c; ++j) out.at(i, j) = emb.eval(m[i][j], tau);
    return out;
}

NFMat nf_random_invertible(const NumberFieldPtr& K, int n, Rng& rng, long height) {
    for (int tries = 0; tries < 64; ++tries) {
        NFMat m(n, std::vector<NFElem>(n));
        for (auto& row : m)
            for (auto& e : row) {
                PolyQ c(K->degree());
                for (auto& x : c) x = mpq_class(rng.range(-height, height));
                // keep entries mostly rational so determinants stay small
                if (rng.below(3) != 0)
                    for (size_t d = 1; d < c.size(); ++d) c[d] = 0;
                e = NFElem(K, std::move(c));
            }
        if (!nf_det(m).is_zero()) return m;
    }
    throw std::runtime_error("nf_random_invertible: exhausted retries");
}

} // namespace periodlab
