#include "periodlab/compositum.hpp"

#include <algorithm>
#include <stdexcept>

namespace periodlab {

namespace {

// index of the unique factor vanishing at (tau-root, sigma-embedded
// coefficients); -1 when the match is ambiguous at this precision
int match_component(const std::vector<CompositumComponent>& comps, const EmbeddingSet& embE,
                    const EmbeddingSet& embF, int tau, int sigma) {
    int hit = -1;
    for (size_t a = 0; a < comps.size(); ++a) {
        const PolyNF& fac = comps[a].factor;
        Scalar acc = Scalar::zero(embE.backend());
        for (size_t i = fac.size(); i-- > 0;) {
            acc = acc * embE.root(tau);
            acc = acc + embF.eval(fac[i], sigma);
        }
        Tri z = acc.is_zero();
        if (z == Tri::no) continue;
        if (z == Tri::yes) {
            if (hit >= 0) return -1;
            hit = static_cast<int>(a);
        } else {
            // float mode: a zero-containing value; ambiguous if two qualify
            if (hit >= 0) return -1;
            hit = static_cast<int>(a);
        }
    }
    return hit;
}

} // namespace

CompositumDecomposition CompositumDecomposition::build(NumberFieldPtr E, NumberFieldPtr F,
                                                       const EmbeddingSet& embE,
                                                       const EmbeddingSet& embF,
                                                       int degree_cap) {
    CompositumDecomposition d;
    d.e_ = E;
    d.f_ = F;
    d.ntau_ = embE.count();
    d.nsigma_ = embF.count();

    auto factors = factor_over_extension_with_norms(E->poly(), F, degree_cap);
    int relative_total = 0, absolute_total = 0;
    for (size_t a = 0; a < factors.size(); ++a) {
        CompositumComponent c;
        c.alpha = static_cast<int>(a);
        c.factor = std::move(factors[a].factor);
        c.compositum_poly = std::move(factors[a].norm);
        relative_total += degree_nf(c.factor);
        absolute_total += degree(c.compositum_poly);
        d.comps_.push_back(std::move(c));
    }
    if (relative_total != E->degree() || absolute_total != E->degree() * F->degree())
        throw std::logic_error("decomposition: degree bookkeeping failed");

    d.pair_map_.assign(static_cast<size_t>(d.ntau_) * d.nsigma_, -1);
    for (int t = 0; t < d.ntau_; ++t)
        for (int s = 0; s < d.nsigma_; ++s) {
            int a = match_component(d.comps_, embE, embF, t, s);
            if (a < 0 && !embE.backend().is_exact()) {
                // precision escalation: retry the match with freshly built
                // embeddings at doubled precision (indices are stable: the
                // canonical root order is by (re, im))
                Backend boosted = embE.backend();
                for (int tries = 0; tries < 3 && a < 0; ++tries) {
                    boosted = Backend::floating(boosted.digits * 2);
                    EmbeddingSet be = EmbeddingSet::build(E, boosted);
                    EmbeddingSet bf = EmbeddingSet::build(F, boosted);
                    a = match_component(d.comps_, be, bf, t, s);
                }
            }
            if (a < 0)
                throw std::runtime_error("decomposition: ambiguous factor match at (tau,sigma)=(" +
                                         std::to_string(t) + "," + std::to_string(s) + ")");
            d.pair_map_[static_cast<size_t>(t) * d.nsigma_ + s] = a;
        }

    // surjectivity of the pair map
    std::vector<bool> seen(d.comps_.size(), false);
    for (int v : d.pair_map_) seen[v] = true;
    for (bool b : seen)
        if (!b) throw std::logic_error("decomposition: pair map not surjective");
    return d;
}

int CompositumDecomposition::component_of(int tau, int sigma) const {
    if (tau < 0 || tau >= ntau_ || sigma < 0 || sigma >= nsigma_)
        throw std::out_of_range("component_of: embedding index out of range");
    return pair_map_[static_cast<size_t>(tau) * nsigma_ + sigma];
}

int CompositumDecomposition::total_absolute_degree() const {
    int s = 0;
    for (const auto& c : comps_) s += degree(c.compositum_poly);
    return s;
}

int TensorModule::fiber_dim(int tau, int sigma) const {
    return component_dims.at(dec->component_of(tau, sigma));
}

TensorModule::RankReport TensorModule::module_rank() const {
    RankReport r;
    r.free = true;
    r.rank = -1;
    for (int t = 0; t < dec->tau_count(); ++t)
        for (int s = 0; s < dec->sigma_count(); ++s) {
            int d = fiber_dim(t, s);
            r.fibers.push_back({t, s, d});
            if (r.rank < 0) r.rank = d;
            if (d != r.rank) r.free = false;
        }
    if (!r.free) r.rank = -1;
    return r;
}

namespace {

NFElem det_nf(std::vector<std::vector<NFElem>> m, const NumberFieldPtr& L) {
    size_t n = m.size();
    NFElem det = NFElem::from_rational(L, 1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) return NFElem::from_rational(L, 0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det = det * m[k][k];
        NFElem inv = m[k][k].inverse();
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            NFElem f = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    return det;
}

} // namespace

bool is_basis(const std::vector<ModuleElem>& family, const TensorModule& m) {
    auto rr = m.module_rank();
    if (!rr.free) throw std::invalid_argument("is_basis: module is not free");
    if (static_cast<int>(family.size()) != rr.rank)
        throw std::invalid_argument(
            "is_basis: family size must equal the rank (the independence/generation "
            "equivalences hold only at that cardinality)");
    if (rr.rank == 0) return true;
    for (const auto& comp : m.dec->components()) {
        auto L = NumberField::create_unchecked("L" + std::to_string(comp.alpha),
                                               comp.compositum_poly);
        int r = rr.rank;
        std::vector<std::vector<NFElem>> mat(r, std::vector<NFElem>(r));
        for (int i = 0; i < r; ++i) {
            auto it = family[i].coords.find(comp.alpha);
            if (it == family[i].coords.end() || static_cast<int>(it->second.size()) != r)
                throw std::invalid_argument("is_basis: element missing component coordinates");
            for (int j = 0; j < r; ++j) mat[i][j] = it->second[j];
        }
        if (det_nf(std::move(mat), L).is_zero()) return false;
    }
    return true;
}

std::vector<Scalar> per_embedding_determinant(const std::vector<Mat>& family) {
    if (family.empty()) throw std::invalid_argument("per_embedding_determinant: empty family");
    size_t n = family[0].rows();
    std::vector<Scalar> out;
    out.reserve(family.size());
    for (const auto& m : family) {
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("per_embedding_determinant: components must be square of equal size");
        out.push_back(det_bareiss(m));
    }
    return out;
}

} // namespace periodlab
