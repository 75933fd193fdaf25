#include "periodlab/motive.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace periodlab {

std::shared_ptr<const MotiveContext> MotiveContext::create(NumberFieldPtr E, NumberFieldPtr F,
                                                           const Backend& backend,
                                                           std::optional<std::vector<int>> cm_type,
                                                           int degree_cap) {
    auto ctx = std::make_shared<MotiveContext>(MotiveContext{
        backend, E, F, EmbeddingSet::build(E, backend), EmbeddingSet::build(F, backend), {}, {}});
    if (cm_type)
        ctx->embF.set_cm_type(*cm_type);
    else
        ctx->embF.choose_default_cm_type();
    ctx->cm = cm_structure(F, ctx->embF);
    ctx->dec = std::make_shared<CompositumDecomposition>(
        CompositumDecomposition::build(E, F, ctx->embE, ctx->embF, degree_cap));
    return ctx;
}

bool MotiveContext::in_Sigma(int sigma) const {
    for (int s : Sigma())
        if (s == sigma) return true;
    return false;
}

const std::vector<int>& MotiveData::exps_at(int tau, int sigma) const {
    return exps.at(ctx->alpha(tau, sigma));
}

Mat MotiveData::period_matrix(int tau, int sigma) const {
    return comparison[tau][sigma] * inverse(frame[tau][sigma]);
}

Mat MotiveData::frobenius_at(int tau, int sigma) const {
    return nf_embed(frobenius[sigma], ctx->embE, tau);
}

bool MotiveData::is_regular() const {
    for (const auto& [alpha, p] : exps)
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] <= p[i + 1]) return false;
    return true;
}

bool MotiveData::has_middle_class() const {
    for (const auto& [alpha, p] : exps)
        for (int v : p)
            if (2 * v == w) return true;
    return false;
}

int MotiveData::upper_count(int tau, int sigma) const {
    int k = 0;
    for (int v : exps_at(tau, sigma))
        if (2 * v > w) ++k;
    return k;
}

std::vector<std::pair<int, int>> MotiveData::hodge_type(int tau, int sigma) const {
    std::vector<std::pair<int, int>> t;
    for (int p : exps_at(tau, sigma)) t.emplace_back(p, w - p);
    std::sort(t.begin(), t.end(), [](auto& a, auto& b) { return a.first > b.first; });
    return t;
}

// ---- validation ----------------------------------------------------------------

bool ValidationReport::all_ok(bool require_regular) const {
    for (const auto& c : checks) {
        if (c.informational) continue;
        if (!require_regular && c.code == "regularity") continue;
        if (!c.ok) return false;
    }
    return true;
}

const ValidationIssue* ValidationReport::find(const std::string& code) const {
    for (const auto& c : checks)
        if (c.code == code) return &c;
    return nullptr;
}

namespace {

void push(ValidationReport& r, std::string code, bool ok, std::string detail = "",
          bool informational = false) {
    r.checks.push_back({std::move(code), ok, std::move(detail), informational});
}

} // namespace

ValidationReport validate(const MotiveData& m) {
    ValidationReport r;
    const auto& ctx = *m.ctx;
    int n = m.n;

    // exponent typing: every component carries n exponents
    {
        bool ok = true;
        std::ostringstream os;
        for (const auto& comp : ctx.dec->components()) {
            auto it = m.exps.find(comp.alpha);
            if (it == m.exps.end() || static_cast<int>(it->second.size()) != n) {
                ok = false;
                os << "component " << comp.alpha << " lacks exponents; ";
            }
        }
        push(r, "exponent-typing", ok, os.str());
    }

    // regularity: strictly decreasing per component
    push(r, "regularity", m.is_regular());

    // pairing is an involution
    {
        bool ok = static_cast<int>(m.pairing.size()) == n;
        for (int i = 0; ok && i < n; ++i)
            ok = m.pairing[i] >= 0 && m.pairing[i] < n && m.pairing[m.pairing[i]] == i;
        push(r, "pairing-involution", ok);
    }

    // reflection p_{iota(a)}(tau, sigmabar) = w - p_a(tau, sigma)
    {
        bool ok = true;
        std::ostringstream os;
        for (int t = 0; t < ctx.ntau() && ok; ++t)
            for (int s = 0; s < ctx.nsigma() && ok; ++s) {
                const auto& p = m.exps_at(t, s);
                const auto& pb = m.exps_at(t, ctx.bar(s));
                for (int a = 0; a < n; ++a)
                    if (pb[m.pairing[a]] != m.w - p[a]) {
                        ok = false;
                        os << "(tau,sigma)=(" << t << "," << s << ") index " << a;
                        break;
                    }
            }
        push(r, "exponent-reflection", ok, os.str());
    }

    // middle classes (informational flag; no-middle is required by the
    // critical-point machinery, not by well-formedness)
    push(r, "no-middle-class", !m.has_middle_class(),
         m.has_middle_class() ? "some p equals w/2" : "", /*informational=*/true);

    // Frobenius involution over E
    {
        bool ok = static_cast<int>(m.frobenius.size()) == ctx.nsigma();
        for (int s = 0; ok && s < ctx.nsigma(); ++s) {
            NFMat comp = nf_mul(m.frobenius[ctx.bar(s)], m.frobenius[s]);
            if (!nf_equal(comp, nf_identity(ctx.E, n))) ok = false;
        }
        push(r, "frobenius-involution", ok);
    }

    // frames and comparisons invertible
    {
        bool ok = true;
        for (int t = 0; t < ctx.ntau() && ok; ++t)
            for (int s = 0; s < ctx.nsigma() && ok; ++s) {
                if (det_bareiss(m.frame[t][s]).is_zero() != Tri::no) ok = false;
                if (det_bareiss(m.comparison[t][s]).is_zero() != Tri::no) ok = false;
            }
        push(r, "frames-invertible", ok);
    }

    // Frobenius swaps Hodge lines: B_sigmabar^{-1} tau(F_sigma) B_sigma is
    // supported on entries (b,a) with p_b(sigmabar) = w - p_a(sigma)
    {
        bool ok = true;
        std::ostringstream os;
        for (int t = 0; t < ctx.ntau() && ok; ++t)
            for (int s = 0; s < ctx.nsigma() && ok; ++s) {
                Mat rel = inverse(m.frame[t][ctx.bar(s)]) * m.frobenius_at(t, s) * m.frame[t][s];
                const auto& p = m.exps_at(t, s);
                const auto& pb = m.exps_at(t, ctx.bar(s));
                for (int b = 0; b < n && ok; ++b)
                    for (int a = 0; a < n && ok; ++a) {
                        if (pb[b] == m.w - p[a]) continue;
                        if (rel.at(b, a).is_zero() == Tri::no) {
                            ok = false;
                            os << "off-block entry at (tau,sigma)=(" << t << "," << s << ")";
                        }
                    }
            }
        push(r, "frobenius-hodge-swap", ok, os.str());
    }

    // comparison realizes the filtration: support condition plus
    // invertibility of each equal-exponent diagonal block
    {
        bool ok = true;
        std::ostringstream os;
        for (int t = 0; t < ctx.ntau() && ok; ++t)
            for (int s = 0; s < ctx.nsigma() && ok; ++s) {
                const auto& p = m.exps_at(t, s);
                const Mat& c = m.comparison[t][s];
                for (int b = 0; b < n && ok; ++b)
                    for (int a = 0; a < n && ok; ++a) {
                        if (p[b] >= p[a]) continue;
                        if (c.at(b, a).is_zero() == Tri::no) {
                            ok = false;
                            os << "filtration violated at (tau,sigma)=(" << t << "," << s << ")";
                        }
                    }
                if (!ok) break;
                std::set<int> values(p.begin(), p.end());
                for (int v : values) {
                    std::vector<int> idx;
                    for (int a = 0; a < n; ++a)
                        if (p[a] == v) idx.push_back(a);
                    Mat blk(idx.size(), idx.size(), Scalar::zero(ctx.backend));
                    for (size_t i = 0; i < idx.size(); ++i)
                        for (size_t j = 0; j < idx.size(); ++j) blk.at(i, j) = c.at(idx[i], idx[j]);
                    if (det_bareiss(blk).is_zero() != Tri::no) {
                        ok = false;
                        os << "degenerate filtration step at (tau,sigma)=(" << t << "," << s << ")";
                        break;
                    }
                }
            }
        push(r, "comparison-filtration", ok, os.str());
    }

    return r;
}

// ---- generator -----------------------------------------------------------------

namespace {

// conjugate component: alpha(tau, sigmabar) for the fiber of alpha;
// consistency across the fiber is checked
int conj_component(const MotiveContext& ctx, int alpha) {
    int found = -1;
    for (int t = 0; t < ctx.ntau(); ++t)
        for (int s = 0; s < ctx.nsigma(); ++s) {
            if (ctx.alpha(t, s) != alpha) continue;
            int c = ctx.alpha(t, ctx.bar(s));
            if (found < 0) found = c;
            if (found != c)
                throw std::runtime_error(
                    "synthesize: conjugation is not well-defined on components of this field pair");
        }
    return found;
}

std::vector<int> draw_exponents(Rng& rng, int n, int w, long spread, bool no_middle,
                                bool self_conjugate, const std::vector<int>& pairing) {
    for (int tries = 0; tries < 256; ++tries) {
        std::set<int> chosen;
        std::vector<int> p;
        if (!self_conjugate) {
            while (static_cast<int>(chosen.size()) < n) {
                int v = static_cast<int>(rng.range(-spread, spread));
                if (no_middle && 2 * v == w) continue;
                chosen.insert(v);
            }
            p.assign(chosen.rbegin(), chosen.rend());
            return p;
        }
        // self-conjugate component: sorted list must satisfy p_a + p_{iota(a)} = w
        int half = n / 2;
        std::set<int> upper;
        while (static_cast<int>(upper.size()) < half) {
            int v = static_cast<int>(rng.range(1, spread));
            upper.insert(w - w / 2 + v); // strictly above w/2
        }
        p.assign(upper.rbegin(), upper.rend());
        if (n % 2 == 1) {
            if (w % 2 != 0 || no_middle)
                throw std::runtime_error(
                    "synthesize: a self-conjugate component of odd rank forces a middle class; "
                    "choose a larger coefficient field, an even rank, or allow middle classes");
            p.push_back(w / 2);
        }
        for (int i = half - 1; i >= 0; --i) p.push_back(w - p[i]);
        // sanity: pairing is the reversal here
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (p[pairing[a]] != w - p[a]) ok = false;
        if (ok) return p;
    }
    throw std::runtime_error("synthesize: exponent draw failed");
}

Mat random_invertible_mat(const Backend& b, int n, Rng& rng) {
    for (int tries = 0; tries < 64; ++tries) {
        Mat m(n, n, Scalar::zero(b));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Scalar::random(b, rng);
        if (det_bareiss(m).is_zero() == Tri::no) return m;
    }
    throw std::runtime_error("synthesize: no invertible frame found");
}

} // namespace

SyntheticMotive synthesize_motive(const SyntheticSpec& spec) {
    const auto& ctx = *spec.ctx;
    const Backend& backend = ctx.backend;
    int n = spec.n, w = spec.w;
    if (n < 1) throw std::invalid_argument("synthesize: rank must be positive");
    Rng rng(spec.seed);

    MotiveData m;
    m.ctx = spec.ctx;
    m.n = n;
    m.w = w;
    m.pairing.resize(n);
    for (int i = 0; i < n; ++i) m.pairing[i] = n - 1 - i;

    // exponents per component, respecting the reflection constraint
    for (const auto& comp : ctx.dec->components()) {
        int a = comp.alpha;
        if (m.exps.count(a)) continue;
        int abar = conj_component(ctx, a);
        if (spec.explicit_exps.count(a)) {
            m.exps[a] = spec.explicit_exps.at(a);
        } else if (spec.explicit_exps.count(abar)) {
            const auto& pb = spec.explicit_exps.at(abar);
            std::vector<int> p(n);
            for (int i = 0; i < n; ++i) p[m.pairing[i]] = w - pb[i];
            std::reverse(p.begin(), p.end()); // keep sorted decreasing
            std::sort(p.begin(), p.end(), std::greater<int>());
            m.exps[a] = p;
        } else {
            m.exps[a] = draw_exponents(rng, n, w, spec.exponent_spread, spec.require_no_middle,
                                       abar == a, m.pairing);
        }
        if (abar != a && !m.exps.count(abar)) {
            std::vector<int> pb(n);
            for (int i = 0; i < n; ++i) pb[m.pairing[i]] = w - m.exps[a][i];
            std::sort(pb.begin(), pb.end(), std::greater<int>());
            m.exps[abar] = pb;
        }
    }

    // Frobenius for sigma in the CM type, normalized to det = (-1)^[n/2];
    // the normalization makes the conjugacy lemma an exact equality in
    // the engine's canonical bases
    int sgn = (n / 2) % 2 == 0 ? 1 : -1;
    m.frobenius.assign(ctx.nsigma(), NFMat{});
    for (size_t pos = 0; pos < ctx.Sigma().size(); ++pos) {
        int s = ctx.Sigma()[pos];
        NFMat fr;
        if (pos < spec.planted_frobenius.size() && !spec.planted_frobenius[pos].empty()) {
            fr = spec.planted_frobenius[pos];
            if (nf_det(fr).is_zero()) throw std::invalid_argument("synthesize: planted Frobenius singular");
        } else {
            fr = nf_random_invertible(ctx.E, n, rng);
            NFElem d = nf_det(fr);
            NFElem target = NFElem::from_rational(ctx.E, sgn);
            NFElem fix = target / d;
            for (int i = 0; i < n; ++i) fr[i][n - 1] = fr[i][n - 1] * fix;
        }
        m.frobenius[s] = fr;
        m.frobenius[ctx.bar(s)] = nf_inverse(fr);
    }

    // planted Q values for sigma in Sigma; sigma-bar values are forced
    SynthesisRecord rec;
    rec.planted_Q.assign(ctx.ntau(), std::vector<std::vector<Scalar>>(
                                         ctx.nsigma(), std::vector<Scalar>(n, Scalar())));
    for (int s : ctx.Sigma())
        for (int i = 0; i < n; ++i) {
            std::vector<Scalar> q(ctx.ntau());
            auto it = spec.planted_Q.find({s, i});
            if (it != spec.planted_Q.end()) {
                q = it->second;
                for (const auto& v : q)
                    if (v.is_zero() != Tri::no) throw std::invalid_argument("synthesize: planted Q must be nonzero");
            } else {
                for (int t = 0; t < ctx.ntau(); ++t) q[t] = Scalar::random_nonzero(backend, rng);
            }
            for (int t = 0; t < ctx.ntau(); ++t) rec.planted_Q[t][s][i] = q[t];
        }
    for (int s : ctx.Sigma()) {
        int sb = ctx.bar(s);
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < ctx.ntau(); ++t) {
                Scalar forced = rec.planted_Q[t][s][m.pairing[i]].inverse();
                auto it = spec.planted_Q.find({sb, i});
                if (it != spec.planted_Q.end() && it->second[t].equals(forced) == Tri::no)
                    throw std::invalid_argument(
                        "synthesize: planted Q at sigma-bar violates the forced relation "
                        "Q_{i,sigmabar} = Q_{i*,sigma}^{-1}");
                rec.planted_Q[t][sb][i] = forced;
            }
    }

    // frames: generic at sigma in Sigma, derived at sigma-bar
    m.frame.assign(ctx.ntau(), std::vector<Mat>(ctx.nsigma()));
    for (int t = 0; t < ctx.ntau(); ++t)
        for (int s : ctx.Sigma()) {
            Mat b = random_invertible_mat(backend, n, rng);
            m.frame[t][s] = b;
            Mat fb = m.frobenius_at(t, s) * b;
            Mat bbar(n, n, Scalar::zero(backend));
            for (int i = 0; i < n; ++i) {
                Scalar qinv = rec.planted_Q[t][s][i].inverse();
                for (int r = 0; r < n; ++r) bbar.at(r, m.pairing[i]) = fb.at(r, i) * qinv;
            }
            m.frame[t][ctx.bar(s)] = bbar;
        }

    // comparison matrices: unipotent upper-triangular in the DR basis
    m.comparison.assign(ctx.ntau(), std::vector<Mat>(ctx.nsigma()));
    for (int t = 0; t < ctx.ntau(); ++t)
        for (int s = 0; s < ctx.nsigma(); ++s) {
            Mat c = Mat::identity(n, backend);
            if (spec.random_epsilon) {
                const auto& p = m.exps_at(t, s);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (p[b] > p[a]) c.at(b, a) = Scalar::random(backend, rng);
            }
            m.comparison[t][s] = c;
        }

    // ground truth: delta and frame determinants
    rec.delta.assign(ctx.ntau(), std::vector<Scalar>(ctx.nsigma()));
    rec.det_frame.assign(ctx.ntau(), std::vector<Scalar>(ctx.nsigma()));
    for (int t = 0; t < ctx.ntau(); ++t)
        for (int s = 0; s < ctx.nsigma(); ++s) {
            Scalar db = det_bareiss(m.frame[t][s]);
            Scalar dc = det_bareiss(m.comparison[t][s]);
            rec.det_frame[t][s] = db;
            rec.delta[t][s] = dc / db;
        }

    return {std::move(m), std::move(rec)};
}

// ---- constructors ---------------------------------------------------------------

MotiveData tensor(const MotiveData& a, const MotiveData& b) {
    if (a.ctx != b.ctx)
        throw std::invalid_argument("tensor: motives must share a context (fields and backend)");
    const auto& ctx = *a.ctx;
    MotiveData m;
    m.ctx = a.ctx;
    m.n = a.n * b.n;
    m.w = a.w + b.w;
    m.dr_basis_tag = a.dr_basis_tag + "(x)" + b.dr_basis_tag;

    m.pairing.resize(m.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < b.n; ++j)
            m.pairing[i * b.n + j] = a.pairing[i] * b.n + b.pairing[j];

    for (const auto& comp : ctx.dec->components()) {
        int al = comp.alpha;
        std::vector<int> p(m.n);
        for (int i = 0; i < a.n; ++i)
            for (int j = 0; j < b.n; ++j)
                p[i * b.n + j] = a.exps.at(al)[i] + b.exps.at(al)[j];
        m.exps[al] = std::move(p);
    }

    m.comparison.assign(ctx.ntau(), std::vector<Mat>(ctx.nsigma()));
    m.frame.assign(ctx.ntau(), std::vector<Mat>(ctx.nsigma()));
    for (int t = 0; t < ctx.ntau(); ++t)
        for (int s = 0; s < ctx.nsigma(); ++s) {
            m.comparison[t][s] = a.comparison[t][s].kron(b.comparison[t][s]);
            m.frame[t][s] = a.frame[t][s].kron(b.frame[t][s]);
        }
    m.frobenius.assign(ctx.nsigma(), NFMat{});
    for (int s = 0; s < ctx.nsigma(); ++s) {
        int an = a.n, bn = b.n;
        NFMat k(m.n, std::vector<NFElem>(m.n, NFElem::from_rational(ctx.E, 0)));
        for (int i = 0; i < an; ++i)
            for (int j = 0; j < an; ++j)
                for (int p = 0; p < bn; ++p)
                    for (int q = 0; q < bn; ++q)
                        k[i * bn + p][j * bn + q] = a.frobenius[s][i][j] * b.frobenius[s][p][q];
        m.frobenius[s] = std::move(k);
    }
    return m;
}

MotiveData conjugate(const MotiveData& m) {
    const auto& ctx = *m.ctx;
    MotiveData c;
    c.ctx = m.ctx;
    c.n = m.n;
    c.w = m.w;
    c.pairing = m.pairing;
    c.dr_basis_tag = m.dr_basis_tag + "^c";

    for (const auto& comp : ctx.dec->components()) {
        int a = comp.alpha;
        int abar = conj_component(ctx, a);
        c.exps[a] = m.exps.at(abar);
    }
    c.comparison.assign(ctx.ntau(), std::vector<Mat>(ctx.nsigma()));
    c.frame.assign(ctx.ntau(), std::vector<Mat>(ctx.nsigma()));
    c.frobenius.assign(ctx.nsigma(), NFMat{});
    for (int t = 0; t < ctx.ntau(); ++t)
        for (int s = 0; s < ctx.nsigma(); ++s) {
            c.comparison[t][s] = m.comparison[t][ctx.bar(s)];
            c.frame[t][s] = m.frame[t][ctx.bar(s)];
        }
    for (int s = 0; s < ctx.nsigma(); ++s) c.frobenius[s] = m.frobenius[ctx.bar(s)];
    return c;
}

RestrictionPackage restriction_of_scalars(const MotiveData& m) { return {m}; }

int RestrictionPackage::betti_dim_E() const { return motive.n * motive.ctx->F->degree(); }

int RestrictionPackage::plus_dim_E() const { return motive.n * motive.ctx->F->degree() / 2; }

} // namespace periodlab
