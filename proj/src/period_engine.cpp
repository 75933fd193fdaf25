#include "periodlab/period_engine.hpp"

#include <stdexcept>

namespace periodlab {

PeriodValue PeriodValue::mul(const PeriodValue& o) const {
    PeriodValue r(*this);
    for (size_t t = 0; t < comp.size(); ++t) r.comp[t] = comp[t] * o.comp[t];
    r.two_pi_i_exp += o.two_pi_i_exp;
    return r;
}

PeriodValue PeriodValue::div(const PeriodValue& o) const {
    PeriodValue r(*this);
    for (size_t t = 0; t < comp.size(); ++t) r.comp[t] = comp[t] / o.comp[t];
    r.two_pi_i_exp -= o.two_pi_i_exp;
    return r;
}

PeriodValue PeriodValue::pow(long e) const {
    PeriodValue r(*this);
    for (auto& c : r.comp) c = c.pow(e);
    r.two_pi_i_exp = static_cast<int>(two_pi_i_exp * e);
    return r;
}

Tri PeriodValue::equals(const PeriodValue& o) const {
    if (two_pi_i_exp != o.two_pi_i_exp) return Tri::no;
    bool unknown = false;
    for (size_t t = 0; t < comp.size(); ++t) {
        Tri e = comp[t].equals(o.comp[t]);
        if (e == Tri::no) return Tri::no;
        if (e == Tri::unknown) unknown = true;
    }
    return unknown ? Tri::unknown : Tri::yes;
}

bool PeriodValue::nonzero() const {
    for (const auto& c : comp)
        if (c.is_zero() != Tri::no) return false;
    return true;
}

PeriodValue sigma_determinant_period(const MotiveData& m, int sigma) {
    PeriodValue v;
    v.basis_provenance = "betti:rational;dr:" + m.dr_basis_tag;
    v.equivalence_level = {"E", "sigma(F)"};
    for (int t = 0; t < m.ctx->ntau(); ++t) {
        Scalar dc = det_bareiss(m.comparison[t][sigma]);
        Scalar db = det_bareiss(m.frame[t][sigma]);
        v.comp.push_back(dc / db);
    }
    return v;
}

PeriodValue motivic_Q(const MotiveData& m, int sigma, int i) {
    if (!m.is_regular())
        throw std::invalid_argument("motivic_Q: motive must be regular (one-dimensional Hodge lines)");
    if (i < 1 || i > m.n) throw std::out_of_range("motivic_Q: index out of range");
    const auto& ctx = *m.ctx;
    int sbar = ctx.bar(sigma);
    int target = m.pairing[i - 1];
    PeriodValue v;
    v.basis_provenance = "frames:" + m.dr_basis_tag;
    v.equivalence_level = {"E", "sigma(F)"};
    for (int t = 0; t < ctx.ntau(); ++t) {
        std::vector<Scalar> col = m.frame[t][sigma].col(i - 1);
        col = m.frobenius_at(t, sigma).apply(col);
        std::vector<Scalar> q = solve(m.frame[t][sbar], col);
        for (int r = 0; r < m.n; ++r) {
            if (r == target) continue;
            if (q[r].is_zero() == Tri::no)
                throw std::logic_error("motivic_Q: Frobenius does not carry the Hodge line to its pair");
        }
        if (q[target].is_zero() == Tri::yes)
            throw std::logic_error("motivic_Q: annihilated frame vector");
        v.comp.push_back(q[target]);
    }
    return v;
}

PeriodValue Q_cumulative(const MotiveData& m, int sigma, int j) {
    if (j < 0 || j > m.n) throw std::out_of_range("Q_cumulative: j out of range");
    PeriodValue v = sigma_determinant_period(m, sigma);
    for (int i = 1; i <= j; ++i) v = v.mul(motivic_Q(m, sigma, i));
    v.two_pi_i_exp += m.n * (m.n - 1) / 2;
    v.basis_provenance = "frames:" + m.dr_basis_tag;
    v.equivalence_level = {"E", "sigma(F)"};
    return v;
}

namespace {

// the c^{+/-} determinant at one (tau, sigma)
Scalar local_deligne_tau(const MotiveData& m, int sigma, int tau, PeriodSign sign) {
    const auto& ctx = *m.ctx;
    int n = m.n;
    int sbar = ctx.bar(sigma);
    Mat a = m.period_matrix(tau, sigma);
    Mat ab = m.period_matrix(tau, sbar) * m.frobenius_at(tau, sigma);
    const auto& p = m.exps_at(tau, sigma);
    const auto& pb = m.exps_at(tau, sbar);
    Mat out(n, n, Scalar::zero(ctx.backend));
    for (int row = 0; row < n; ++row) {
        bool lower = 2 * p[row] < m.w;
        for (int i = 0; i < n; ++i) {
            if (lower) {
                out.at(row, i) = a.at(row, i);
            } else {
                int rr = m.pairing[row];
                if (2 * pb[rr] >= m.w)
                    throw std::logic_error("local_deligne: pairing does not reflect across the middle");
                Scalar e = ab.at(rr, i);
                out.at(row, i) = sign == PeriodSign::plus ? e : -e;
            }
        }
    }
    return det_bareiss(out);
}

} // namespace

PeriodValue local_deligne_period(const MotiveData& m, int sigma, PeriodSign sign) {
    if (m.has_middle_class())
        throw std::invalid_argument(
            "local_deligne_period: middle Hodge classes present; there is no critical point and "
            "the +/- construction degenerates");
    PeriodValue v;
    v.basis_provenance = "betti:paired-eigenbasis;dr:image-of-(w_a,w_iota(a)):" + m.dr_basis_tag;
    v.equivalence_level = {"E", "sigma(F)"};
    for (int t = 0; t < m.ctx->ntau(); ++t)
        v.comp.push_back(local_deligne_tau(m, sigma, t, sign));
    return v;
}

PeriodValue e_sigma(const MotiveData& m, int sigma) {
    PeriodValue v;
    v.basis_provenance = "sign";
    v.equivalence_level = {"E", "sigma(F)"};
    for (int t = 0; t < m.ctx->ntau(); ++t) {
        int k = m.upper_count(t, sigma);
        v.comp.push_back(Scalar::from_rational(m.ctx->backend, k % 2 == 0 ? 1 : -1));
    }
    return v;
}

ConjugacyVerdict verify_conjugacy(const MotiveData& m, int sigma, int j) {
    ConjugacyVerdict out;
    MotiveData mc = conjugate(m);
    out.lhs = Q_cumulative(mc, sigma, m.n - j);
    out.rhs = Q_cumulative(m, sigma, j);
    PeriodValue ratio = out.lhs.div(out.rhs);
    if (ratio.two_pi_i_exp != 0) throw std::logic_error("verify_conjugacy: 2 pi i exponent mismatch");
    out.ratio = ratio.comp;
    out.membership = recognize_in_subring(out.ratio, m.ctx->embE, m.ctx->embF, sigma);
    out.exact_equality = true;
    Scalar one = Scalar::one(m.ctx->backend);
    for (const auto& c : out.ratio)
        if (c.equals(one) != Tri::yes) out.exact_equality = false;
    return out;
}

// ---- global periods ---------------------------------------------------------------

namespace {

// orbit representatives of the pairing: one index per {a, iota(a)}
std::vector<int> pairing_reps(const std::vector<int>& pairing) {
    std::vector<int> reps;
    for (int a = 0; a < static_cast<int>(pairing.size()); ++a)
        if (a <= pairing[a]) reps.push_back(a);
    return reps;
}

} // namespace

GlobalPeriods global_periods(const RestrictionPackage& r, std::optional<NFElem> alpha_opt) {
    const MotiveData& m = r.motive;
    const auto& ctx = *m.ctx;
    const Backend& backend = ctx.backend;
    int n = m.n;
    int d = ctx.F->degree();

    NFElem alpha = alpha_opt.value_or(ctx.cm.alpha);
    if (!ctx.cm.is_purely_imaginary(alpha))
        throw std::invalid_argument("global_periods: alpha must be purely imaginary");
    if (alpha.is_zero()) throw std::invalid_argument("global_periods: alpha must be nonzero");

    GlobalPeriods g;
    g.alpha_used = alpha;
    g.delta_global.basis_provenance = "betti:rational-sum;dr:" + m.dr_basis_tag + "*power-basis(F)";
    g.delta_global.equivalence_level = {"E", "Q"};
    g.c_plus_global.basis_provenance = "dr:(t_k(v+v'),t_k*alpha*(v-v'))";
    g.c_plus_global.equivalence_level = {"E", "Q"};
    g.c_minus_global = g.c_plus_global;

    // Q-basis of F: powers of the generator
    std::vector<NFElem> fbasis;
    {
        NFElem acc = NFElem::from_rational(ctx.F, 1);
        NFElem gen = NFElem::generator(ctx.F);
        for (int k = 0; k < d; ++k) {
            fbasis.push_back(acc);
            acc = acc * gen;
        }
    }
    std::vector<NFElem> tbasis = ctx.cm.fplus_power_basis();
    int dplus = static_cast<int>(tbasis.size());

    if (m.has_middle_class())
        throw std::invalid_argument("global_periods: middle Hodge classes present");

    for (int t = 0; t < ctx.ntau(); ++t) {
        // ---- delta(M_Q): blocks (sigma, j) vs rational DR basis (i, k)
        int big = n * d;
        Mat image(big, big, Scalar::zero(backend));
        Mat drmat(big, big, Scalar::zero(backend));
        for (int s = 0; s < d; ++s) {
            Mat x = m.period_matrix(t, s);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) image.at(s * n + j, s * n + i) = x.at(j, i);
        }
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < d; ++k)
                for (int s = 0; s < d; ++s)
                    drmat.at(s * n + i, i * d + k) = ctx.embF.eval(fbasis[k], s);
        // the Betti ordering (sigma, i) matches the image columns above
        Scalar dd = det_bareiss(drmat);
        if (dd.is_zero() != Tri::no)
            throw std::logic_error("global_periods: rational DR basis degenerated");
        g.delta_global.comp.push_back(det_bareiss(image) / dd);

        // ---- c^{+/-}(M_Q)
        // quotient coordinates: per sigma' the indices a with 2 p_a < w
        std::vector<std::pair<int, int>> rows; // (sigma', a)
        for (int s = 0; s < d; ++s)
            for (int a = 0; a < n; ++a)
                if (2 * m.exps_at(t, s)[a] < m.w) rows.emplace_back(s, a);
        int half = static_cast<int>(rows.size());
        auto row_index = [&](int s, int a) -> int {
            for (int rix = 0; rix < half; ++rix)
                if (rows[rix].first == s && rows[rix].second == a) return rix;
            return -1;
        };

        auto reps = pairing_reps(m.pairing);
        // DR-side basis: t_k (v_a + v_{iota a}) and t_k alpha (v_a - v_{iota a})
        Mat dr(half, half, Scalar::zero(backend));
        int col = 0;
        for (int k = 0; k < dplus; ++k)
            for (int a : reps) {
                for (int s = 0; s < d; ++s) {
                    Scalar tk = ctx.embF.eval(tbasis[k], s);
                    int ra = row_index(s, a), rb = row_index(s, m.pairing[a]);
                    if (ra >= 0) dr.at(ra, col) = dr.at(ra, col) + tk;
                    if (rb >= 0) dr.at(rb, col) = dr.at(rb, col) + tk;
                }
                ++col;
            }
        for (int k = 0; k < dplus; ++k)
            for (int a : reps) {
                if (m.pairing[a] == a) continue;
                for (int s = 0; s < d; ++s) {
                    Scalar tka = ctx.embF.eval(tbasis[k] * alpha, s);
                    int ra = row_index(s, a), rb = row_index(s, m.pairing[a]);
                    if (ra >= 0) dr.at(ra, col) = dr.at(ra, col) + tka;
                    if (rb >= 0) dr.at(rb, col) = dr.at(rb, col) - tka;
                }
                ++col;
            }
        if (col != half)
            throw std::logic_error("global_periods: prescribed DR family has the wrong size");
        Scalar ddr = det_bareiss(dr);
        if (ddr.is_zero() != Tri::no)
            throw std::invalid_argument(
                "global_periods: prescribed de Rham family is not a basis (basis condition violated)");

        // Betti side: for sigma in Sigma, columns (e_i, F_sigma e_i)
        for (PeriodSign sign : {PeriodSign::plus, PeriodSign::minus}) {
            Mat img(half, half, Scalar::zero(backend));
            int c2 = 0;
            for (int s : ctx.Sigma()) {
                Mat x = m.period_matrix(t, s);
                Mat xb = m.period_matrix(t, ctx.bar(s)) * m.frobenius_at(t, s);
                for (int i = 0; i < n; ++i) {
                    for (int a = 0; a < n; ++a) {
                        int ra = row_index(s, a);
                        if (ra >= 0) img.at(ra, c2) = x.at(a, i);
                        int rb = row_index(ctx.bar(s), a);
                        if (rb >= 0) {
                            Scalar e = xb.at(a, i);
                            img.at(rb, c2) = sign == PeriodSign::plus ? e : -e;
                        }
                    }
                    ++c2;
                }
            }
            if (c2 != half) throw std::logic_error("global_periods: Betti family has the wrong size");
            Scalar val = det_bareiss(img) / ddr;
            (sign == PeriodSign::plus ? g.c_plus_global : g.c_minus_global).comp.push_back(val);
        }

        // ---- det(f): domain basis (sigma in Sigma, a) -> common coordinates
        Mat pm(half, half, Scalar::zero(backend));
        int c3 = 0;
        for (int s : ctx.Sigma())
            for (int a = 0; a < n; ++a) {
                int ra = row_index(s, a);
                if (ra >= 0) pm.at(ra, c3) = Scalar::one(backend);
                int rb = row_index(ctx.bar(s), m.pairing[a]);
                if (rb >= 0) pm.at(rb, c3) = Scalar::one(backend);
                ++c3;
            }
        g.assembly_det.push_back(det_bareiss(pm) / ddr);
    }
    return g;
}

GlobalFactorizationVerdict verify_global_factorization(const MotiveData& m) {
    GlobalFactorizationVerdict out{global_periods(restriction_of_scalars(m))};
    const auto& ctx = *m.ctx;
    int n = m.n;

    Scalar sqrt_df = discriminant_sqrt(ctx.embF);
    // F+ "half discriminant": det over the CM type of the F+ power basis
    std::vector<NFElem> tb = ctx.cm.fplus_power_basis();
    int dp = static_cast<int>(tb.size());
    Mat vp(dp, dp, Scalar::zero(ctx.backend));
    for (int r = 0; r < dp; ++r)
        for (int c = 0; c < dp; ++c) vp.at(r, c) = ctx.embF.eval(tb[c], ctx.Sigma()[r]);
    Scalar sqrt_dfp = det_bareiss(vp);

    Scalar alpha_prod = Scalar::one(ctx.backend);
    for (int s : ctx.Sigma()) alpha_prod = alpha_prod * ctx.embF.eval(out.global.alpha_used, s);

    std::vector<PeriodValue> local_delta, local_plus, local_minus;
    for (int s = 0; s < ctx.nsigma(); ++s) local_delta.push_back(sigma_determinant_period(m, s));
    for (int s : ctx.Sigma()) {
        local_plus.push_back(local_deligne_period(m, s, PeriodSign::plus));
        local_minus.push_back(local_deligne_period(m, s, PeriodSign::minus));
    }

    for (int t = 0; t < ctx.ntau(); ++t) {
        Scalar prod_delta = Scalar::one(ctx.backend);
        for (auto& pv : local_delta) prod_delta = prod_delta * pv.comp[t];
        out.ratio_delta.push_back(out.global.delta_global.comp[t] /
                                  (sqrt_df.pow(n) * prod_delta));

        Scalar scale = alpha_prod.pow(n / 2) * sqrt_dfp.pow(n);
        Scalar prod_plus = Scalar::one(ctx.backend);
        for (auto& pv : local_plus) prod_plus = prod_plus * pv.comp[t];
        out.ratio_plus.push_back(out.global.c_plus_global.comp[t] / (scale * prod_plus));

        Scalar prod_minus = Scalar::one(ctx.backend);
        for (auto& pv : local_minus) prod_minus = prod_minus * pv.comp[t];
        out.ratio_minus.push_back(out.global.c_minus_global.comp[t] / (scale * prod_minus));

        out.ratio_assembly.push_back(out.global.assembly_det[t] / scale);
    }
    out.delta_in_E = recognize_in_coefficients(out.ratio_delta, ctx.embE);
    out.plus_in_E = recognize_in_coefficients(out.ratio_plus, ctx.embE);
    out.minus_in_E = recognize_in_coefficients(out.ratio_minus, ctx.embE);
    out.assembly_in_E = recognize_in_coefficients(out.ratio_assembly, ctx.embE);
    return out;
}

TensorFormulaVerdict verify_tensor_formula(const MotiveData& m, const MotiveData& mprime,
                                           int sigma) {
    const auto& ctx = *m.ctx;
    MotiveData prod = tensor(m, mprime);
    if (prod.has_middle_class())
        throw std::invalid_argument(
            "verify_tensor_formula: the tensor product has middle Hodge classes; refused");

    TensorFormulaVerdict out;
    out.lhs = local_deligne_period(prod, sigma, PeriodSign::plus);

    int n = m.n, np = mprime.n;
    long pref = -static_cast<long>(n) * np * (n + np - 2) / 2;
    std::vector<PeriodValue> qm, qp;
    for (int j = 0; j <= n; ++j) qm.push_back(Q_cumulative(m, sigma, j));
    for (int k = 0; k <= np; ++k) qp.push_back(Q_cumulative(mprime, sigma, k));

    for (int t = 0; t < ctx.ntau(); ++t) {
        auto table = split_indices(m.exps_at(t, sigma), m.w, mprime.exps_at(t, sigma), mprime.w);
        long two_pi = pref;
        Scalar val = Scalar::one(ctx.backend);
        for (int j = 0; j <= n; ++j) {
            if (table.sp_m[j] == 0) continue;
            val = val * qm[j].comp[t].pow(table.sp_m[j]);
            two_pi += static_cast<long>(qm[j].two_pi_i_exp) * table.sp_m[j];
        }
        for (int k = 0; k <= np; ++k) {
            if (table.sp_mprime[k] == 0) continue;
            val = val * qp[k].comp[t].pow(table.sp_mprime[k]);
            two_pi += static_cast<long>(qp[k].two_pi_i_exp) * table.sp_mprime[k];
        }
        if (two_pi != 0)
            throw std::logic_error("verify_tensor_formula: formal 2 pi i exponents do not cancel");
        out.rhs.push_back(val);
        out.ratio.push_back(out.lhs.comp[t] / val);
    }
    out.membership = recognize_in_subring(out.ratio, ctx.embE, ctx.embF, sigma);
    return out;
}

InvarianceReport omega_hat_invariance(const MotiveData& a, const MotiveData& b) {
    InvarianceReport rep{true, true, true};
    const auto& ctx = *a.ctx;
    for (int s = 0; s < ctx.nsigma(); ++s) {
        if (sigma_determinant_period(a, s).equals(sigma_determinant_period(b, s)) != Tri::yes)
            rep.delta_equal = false;
        for (int j = 0; j <= a.n; ++j)
            if (Q_cumulative(a, s, j).equals(Q_cumulative(b, s, j)) != Tri::yes)
                rep.q_cumulative_equal = false;
    }
    if (!a.has_middle_class() && !b.has_middle_class())
        for (int s : ctx.Sigma()) {
            if (local_deligne_period(a, s, PeriodSign::plus)
                    .equals(local_deligne_period(b, s, PeriodSign::plus)) != Tri::yes)
                rep.c_plus_equal = false;
        }
    return rep;
}

Scalar discriminant_sqrt(const EmbeddingSet& emb) {
    int d = emb.field()->degree();
    Mat v(d, d, Scalar::zero(emb.backend()));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) v.at(r, c) = emb.root(r).pow(c);
    return det_bareiss(v);
}

} // namespace periodlab
