#include "periodlab/recognize.hpp"

#include <cmath>
#include <stdexcept>

namespace periodlab {

std::optional<std::vector<mpq_class>> rational_solve(std::vector<std::vector<mpq_class>> a,
                                                     std::vector<mpq_class> b) {
    size_t m = a.size();
    if (m != b.size()) throw std::invalid_argument("rational_solve: shape mismatch");
    size_t n = m ? a[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = m;
        for (size_t i = row; i < m; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        mpq_class inv = 1 / a[row][col];
        for (size_t j = col; j < n; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (b[i] != 0) return std::nullopt; // inconsistent
    std::vector<mpq_class> x(n, mpq_class(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return x;
}

namespace {

// continued-fraction rationalization of a BigFloat, denominator capped
std::optional<mpq_class> rationalize(const BigFloat& x, unsigned long den_bound) {
    mpq_class approx;
    {
        mpf_class tmp(0, 512);
        mpfr_get_f(tmp.get_mpf_t(), x.raw(), MPFR_RNDN);
        approx = mpq_class(tmp);
    }
    // continued fraction convergents of approx
    mpz_class p0(0), q0(1), p1(1), q1(0);
    mpq_class rem = approx;
    for (int iter = 0; iter < 128; ++iter) {
        mpz_class a = rem.get_num() / rem.get_den(); // floor for positive; fix sign below
        if (rem < 0 && mpz_class(rem.get_num() % rem.get_den()) != 0) a -= 1;
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > mpz_class(den_bound)) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        mpq_class frac = rem - mpq_class(a);
        if (frac == 0) break;
        rem = 1 / frac;
    }
    if (q1 == 0) return std::nullopt;
    mpq_class cand(p1, q1);
    cand.canonicalize();
    // accept only when the candidate is extremely close relative to precision
    BigFloat diff = x - BigFloat::from_rational(cand, x.prec());
    double err = std::fabs(diff.to_double());
    double scale = std::max(1.0, std::fabs(x.to_double()));
    if (err > scale * std::ldexp(1.0, -static_cast<int>(x.prec()) / 2)) return std::nullopt;
    return cand;
}

std::vector<Scalar> spanning_vector(const EmbeddingSet& embE, const EmbeddingSet& embF,
                                    int sigma, int k, int l) {
    std::vector<Scalar> v;
    v.reserve(embE.count());
    for (int t = 0; t < embE.count(); ++t) {
        Scalar ek = embE.root(t).pow(k);
        Scalar fl = embF.root(sigma).pow(l);
        v.push_back(ek * fl);
    }
    return v;
}

Recognition recognize_impl(const std::vector<Scalar>& x, const EmbeddingSet& embE,
                           const EmbeddingSet& embF, int sigma, unsigned long height_bound,
                           int degF) {
    const Backend& backend = embE.backend();
    int degE = embE.field()->degree();
    int ntau = embE.count();
    if (static_cast<int>(x.size()) != ntau)
        throw std::invalid_argument("recognize: component count mismatch");

    Recognition rec;
    if (backend.is_exact()) {
        unsigned dim = backend.cyclo->dim();
        std::vector<std::vector<mpq_class>> a(static_cast<size_t>(ntau) * dim,
                                              std::vector<mpq_class>(degE * degF, mpq_class(0)));
        std::vector<mpq_class> b(static_cast<size_t>(ntau) * dim, mpq_class(0));
        for (int t = 0; t < ntau; ++t) {
            const PolyQ& xc = x[t].cyc().coeffs();
            for (size_t r = 0; r < xc.size(); ++r) b[t * dim + r] = xc[r];
            for (int k = 0; k < degE; ++k)
                for (int l = 0; l < degF; ++l) {
                    Scalar base = embE.root(t).pow(k) * embF.root(sigma).pow(l);
                    const PolyQ& bc = base.cyc().coeffs();
                    for (size_t r = 0; r < bc.size(); ++r)
                        a[t * dim + r][k * degF + l] = bc[r];
                }
        }
        auto sol = rational_solve(std::move(a), std::move(b));
        if (!sol) {
            rec.status = RecogStatus::absent;
            return rec;
        }
        rec.status = RecogStatus::found;
        rec.coords.assign(degE, std::vector<mpq_class>(degF));
        for (int k = 0; k < degE; ++k)
            for (int l = 0; l < degF; ++l) rec.coords[k][l] = (*sol)[k * degF + l];
        return rec;
    }

    // float mode: real linear system on midpoints, then certify
    int unknowns = degE * degF;
    int rows = 2 * ntau;
    std::vector<std::vector<BigFloat>> a(rows, std::vector<BigFloat>(unknowns, BigFloat(backend.bits)));
    std::vector<BigFloat> b(rows, BigFloat(backend.bits));
    std::vector<std::vector<Scalar>> span(unknowns);
    for (int k = 0; k < degE; ++k)
        for (int l = 0; l < degF; ++l) span[k * degF + l] = spanning_vector(embE, embF, sigma, k, l);
    for (int t = 0; t < ntau; ++t) {
        b[2 * t] = x[t].ball().re;
        b[2 * t + 1] = x[t].ball().im;
        for (int u = 0; u < unknowns; ++u) {
            a[2 * t][u] = span[u][t].ball().re;
            a[2 * t + 1][u] = span[u][t].ball().im;
        }
    }
    // Gaussian elimination with partial pivoting on midpoints
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < unknowns && r < rows; ++c) {
        int piv = -1;
        double best = 0;
        for (int i = r; i < rows; ++i) {
            double m = std::fabs(a[i][c].to_double());
            if (piv < 0 || m > best) {
                piv = i;
                best = m;
            }
        }
        double rowscale = 1e-300;
        for (int j = 0; j < unknowns; ++j) rowscale = std::max(rowscale, std::fabs(a[piv][j].to_double()));
        if (best <= rowscale * 1e-40) continue; // numerically zero column
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        BigFloat inv = BigFloat::from_rational(1, backend.bits) / a[r][c];
        for (int j = 0; j < unknowns; ++j) a[r][j] = a[r][j] * inv;
        b[r] = b[r] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            BigFloat f = a[i][c];
            for (int j = 0; j < unknowns; ++j) a[i][j] = a[i][j] - f * a[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<BigFloat> xsol(unknowns, BigFloat(backend.bits));
    for (size_t i = 0; i < pivot_col.size(); ++i) xsol[pivot_col[i]] = b[i];

    // rationalize and verify against the original balls
    rec.coords.assign(degE, std::vector<mpq_class>(degF));
    for (int u = 0; u < unknowns; ++u) {
        auto q = rationalize(xsol[u], height_bound);
        if (!q) {
            rec.status = RecogStatus::unknown;
            rec.coords.clear();
            return rec;
        }
        rec.coords[u / degF][u % degF] = *q;
    }
    bool contained = true;
    for (int t = 0; t < ntau; ++t) {
        Scalar acc = Scalar::zero(backend);
        for (int u = 0; u < unknowns; ++u)
            acc = acc + span[u][t] * Scalar::from_rational(backend, rec.coords[u / degF][u % degF]);
        Scalar diff = acc - x[t];
        if (diff.is_zero() == Tri::no) contained = false;
    }
    if (!contained) {
        // rationalized candidate certainly differs; without an exact
        // backend we cannot also rule membership out
        rec.status = RecogStatus::unknown;
        rec.coords.clear();
        return rec;
    }
    rec.status = RecogStatus::found;
    rec.heuristic = true;
    return rec;
}

} // namespace

Recognition recognize_in_subring(const std::vector<Scalar>& x, const EmbeddingSet& embE,
                                 const EmbeddingSet& embF, int sigma,
                                 unsigned long height_bound) {
    return recognize_impl(x, embE, embF, sigma, height_bound, embF.field()->degree());
}

Recognition recognize_in_coefficients(const std::vector<Scalar>& x, const EmbeddingSet& embE,
                                      unsigned long height_bound) {
    // treat F = Q: single spanning power f_0 = 1
    EmbeddingSet rational_emb = EmbeddingSet::build(NumberField::rationals(), embE.backend());
    return recognize_impl(x, embE, rational_emb, 0, height_bound, 1);
}

std::vector<Scalar> embed_subring_element(const std::vector<std::vector<mpq_class>>& coords,
                                          const EmbeddingSet& embE, const EmbeddingSet& embF,
                                          int sigma) {
    std::vector<Scalar> out;
    for (int t = 0; t < embE.count(); ++t) {
        Scalar acc = Scalar::zero(embE.backend());
        for (size_t k = 0; k < coords.size(); ++k)
            for (size_t l = 0; l < coords[k].size(); ++l) {
                if (coords[k][l] == 0) continue;
                Scalar term = embE.root(t).pow(static_cast<long>(k)) *
                              embF.root(sigma).pow(static_cast<long>(l)) *
                              Scalar::from_rational(embE.backend(), coords[k][l]);
                acc = acc + term;
            }
        out.push_back(acc);
    }
    return out;
}

} // namespace periodlab
