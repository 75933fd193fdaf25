#include "periodlab/hodge_comb.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace periodlab {

CmLabels CmLabels::standard(int pairs) {
    CmLabels l;
    for (int i = 0; i < pairs; ++i) {
        std::string s = "s" + std::to_string(i);
        std::string sb = s + "bar";
        l.sigmas.push_back(s);
        l.sigmas.push_back(sb);
        l.bar[s] = sb;
        l.bar[sb] = s;
        l.Sigma.push_back(s);
    }
    return l;
}

bool CmLabels::in_Sigma(const std::string& s) const {
    return std::find(Sigma.begin(), Sigma.end(), s) != Sigma.end();
}

void InfinityType::validate(const CmLabels& labels) const {
    if (n < 1) throw std::invalid_argument("InfinityType: rank must be positive");
    for (const auto& s : labels.sigmas) {
        auto it = A2.find(s);
        if (it == A2.end() || static_cast<int>(it->second.size()) != n)
            throw std::invalid_argument("InfinityType: missing entries at " + s);
        for (int v : it->second)
            if (((v - (n - 1)) % 2 + 2) % 2 != 0)
                throw std::invalid_argument("InfinityType: entries must lie in Z + (n-1)/2");
    }
    for (const auto& s : labels.Sigma) {
        const auto& A = A2.at(s);
        for (int i = 0; i + 1 < n; ++i)
            if (A[i] <= A[i + 1])
                throw std::invalid_argument("InfinityType: entries not strictly decreasing at " + s);
        const auto& Ab = A2.at(labels.bar.at(s));
        for (int i = 0; i < n; ++i)
            if (A[i] + Ab[i] != weight2)
                throw std::invalid_argument("InfinityType: purity violated at " + s);
    }
}

HodgeFromInfinity hodge_from_infinity(const InfinityType& pi, const CmLabels& labels) {
    pi.validate(labels);
    HodgeFromInfinity h;
    // w = -w(Pi) + n - 1; weight2 is doubled but w(Pi) is an integer here
    if (pi.weight2 % 2 != 0)
        throw std::invalid_argument("hodge_from_infinity: representation weight must be integral");
    h.w = -pi.weight2 / 2 + pi.n - 1;
    for (const auto& s : labels.sigmas) {
        std::vector<int> p;
        for (int a2 : pi.A2.at(s)) {
            int twice = -a2 + (pi.n - 1); // 2 * (-A + (n-1)/2)
            if (twice % 2 != 0) throw std::invalid_argument("hodge_from_infinity: non-integral exponent");
            p.push_back(twice / 2);
        }
        std::sort(p.begin(), p.end(), std::greater<int>());
        h.exps[s] = std::move(p);
    }
    return h;
}

SplitIndexTable split_indices(const std::vector<int>& p, int w, const std::vector<int>& r, int w2) {
    int n = static_cast<int>(p.size());
    int nprime = static_cast<int>(r.size());
    for (int i = 0; i + 1 < n; ++i)
        if (p[i] <= p[i + 1]) throw std::invalid_argument("split_indices: p not strictly decreasing");
    for (int j = 0; j + 1 < nprime; ++j)
        if (r[j] <= r[j + 1]) throw std::invalid_argument("split_indices: r not strictly decreasing");
    int mid2 = w + w2; // 2 * (w+w')/2
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < nprime; ++j)
            if (2 * (p[i] + r[j]) == mid2)
                throw std::invalid_argument("split_indices: middle class present, no critical point");

    SplitIndexTable t;
    t.sp_m.assign(n + 1, 0);
    t.sp_mprime.assign(nprime + 1, 0);
    // part index of -r_j among the thresholds p_i - (w+w')/2:
    // #{ i : p_i - (w+w')/2 > -r_j }  (doubled comparison)
    for (int j = 0; j < nprime; ++j) {
        int part = 0;
        for (int i = 0; i < n; ++i)
            if (2 * p[i] - mid2 > -2 * r[j]) ++part;
        t.sp_m[part] += 1;
    }
    for (int i = 0; i < n; ++i) {
        int part = 0;
        for (int j = 0; j < nprime; ++j)
            if (2 * r[j] - mid2 > -2 * p[i]) ++part;
        t.sp_mprime[part] += 1;
    }
    return t;
}

int I_sigma(const InfinityType& pi, const InfinityType& chi, const std::string& sigma,
            const CmLabels& labels) {
    if (chi.n != 1) throw std::invalid_argument("I_sigma: second argument must have rank 1");
    const std::string& sbar = labels.bar.at(sigma);
    int a = chi.A2.at(sigma)[0], abar = chi.A2.at(sbar)[0];
    int count = 0;
    for (int i = 0; i < pi.n; ++i)
        if (pi.A2.at(sigma)[i] - pi.A2.at(sbar)[i] + a - abar < 0) ++count;
    return count;
}

std::vector<int> critical_points(const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("critical_points: empty Hodge data");
    int w = pairs[0].first + pairs[0].second;
    bool have = false;
    int maxp = 0, minq = 0;
    for (auto& [p, q] : pairs) {
        if (p + q != w) throw std::invalid_argument("critical_points: mixed weights");
        if (p == q)
            throw std::invalid_argument("critical_points: middle class present, no critical point");
        if (p < q) {
            if (!have || p > maxp) maxp = p;
            if (!have || q < minq) minq = q;
            have = true;
        }
    }
    std::vector<int> out;
    if (!have) return out; // no p<q pair: dual side constrains nothing here
    for (int m = maxp + 1; m <= minq; ++m) out.push_back(m);
    return out;
}

std::vector<int> critical_points_gamma_oracle(const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("critical_points: empty Hodge data");
    int w = pairs[0].first + pairs[0].second;
    int lo = 0, hi = 0;
    for (auto& [p, q] : pairs) {
        if (p == q)
            throw std::invalid_argument("critical_points: middle class present, no critical point");
        lo = std::min({lo, p, q});
        hi = std::max({hi, p, q});
    }
    std::vector<int> out;
    for (int m = lo - 2; m <= hi + 2; ++m) {
        bool pole = false;
        for (auto& [p, q] : pairs) {
            if (p >= q) continue; // each (p,q),(q,p) pair contributes one Gamma_C(s - p), p < q
            // Gamma_C(s-p) has poles at integers s <= p
            if (m <= p) pole = true;
            // dual side: Gamma_C(w+1-s-p) has poles at s >= w+1-p = q+1
            if (m >= q + 1) pole = true;
        }
        if (!pole) out.push_back(m);
    }
    return out;
}

std::vector<int> critical_range_unitary(const UnitaryParams& par, const CmLabels& labels) {
    int n = par.n;
    // bound2 = 2 * min over sigma of both signature bounds
    bool have = false;
    int bound2 = 0;
    for (const auto& s : labels.Sigma) {
        const auto& a = par.a.at(s);
        auto [rs, ss] = par.signature.at(s);
        if (rs + ss != n) throw std::invalid_argument("critical_range_unitary: signature mismatch");
        int ms = par.m_exp.at(s), msb = par.m_exp.at(labels.bar.at(s));
        // a is indexed 1..n decreasing; a_{sigma, r_sigma} means position r_sigma
        if (rs >= 1) {
            int b2 = 2 * (a[rs - 1] + ss + ms - msb);
            if (!have || b2 < bound2) bound2 = b2, have = true;
        }
        if (ss >= 1) {
            int b2 = 2 * (a[ss - 1] + rs + msb - ms);
            if (!have || b2 < bound2) bound2 = b2, have = true;
        }
    }
    if (!have) throw std::invalid_argument("critical_range_unitary: empty signature data");
    // s' := m + (n-1)/2 is an integer; the range is n < s' <= bound
    int bound = bound2 / 2;
    std::vector<int> out; // doubled m values
    for (int sp = n + 1; sp <= bound; ++sp) out.push_back(2 * sp - (n - 1));
    return out;
}

Predicates predicates(const InfinityType& pi, const InfinityType& piprime, int gap,
                      const CmLabels& labels) {
    pi.validate(labels);
    piprime.validate(labels);
    Predicates out{};

    // polarized (necessary condition on the infinity type):
    // {A_sigma} = {-A_sigmabar} as multisets, for every sigma
    out.polarized_necessary = true;
    for (const auto& s : labels.sigmas) {
        std::multiset<int> lhs(pi.A2.at(s).begin(), pi.A2.at(s).end());
        std::multiset<int> rhs;
        for (int v : pi.A2.at(labels.bar.at(s))) rhs.insert(-v);
        if (lhs != rhs) out.polarized_necessary = false;
    }

    // sufficiently regular with explicit gap parameter (doubled)
    out.sufficiently_regular = true;
    for (const auto& s : labels.sigmas) {
        const auto& A = pi.A2.at(s);
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = i + 1; j < A.size(); ++j)
                if (std::abs(A[i] - A[j]) < 2 * gap) out.sufficiently_regular = false;
    }

    // good position: the numbers -B_j fall in pairwise distinct gaps of
    // -(w+w')/2 + A_i; landing on a cut point also fails
    if (pi.n > piprime.n) {
        bool good = true;
        // doubled cut points: 2*(-(w(Pi)+w(Pi'))/2 + A_i) = A2_i - (w2 + w2')/2
        if ((pi.weight2 + piprime.weight2) % 2 != 0)
            throw std::invalid_argument("predicates: representation weights must be integral");
        int shift = (pi.weight2 + piprime.weight2) / 2;
        for (const auto& s : labels.sigmas) {
            std::vector<int> cuts;
            for (int v : pi.A2.at(s)) cuts.push_back(v - shift);
            std::sort(cuts.begin(), cuts.end(), std::greater<int>());
            std::set<int> parts;
            for (int b : piprime.A2.at(s)) {
                int x = -b; // doubled -B_j
                int part = 0;
                bool on_cut = false;
                for (int c : cuts) {
                    if (x == c) on_cut = true;
                    if (c > x) ++part;
                }
                if (on_cut || parts.count(part)) good = false;
                parts.insert(part);
            }
        }
        out.good_position = good;
    }
    return out;
}

CohomologyDegrees cohomology_degree(int n, int cm_degree_over_q) {
    if (cm_degree_over_q % 2 != 0)
        throw std::invalid_argument("cohomology_degree: CM field degree must be even");
    long d = cm_degree_over_q / 2;
    CohomologyDegrees out{};
    out.b_n = static_cast<long>(n) * (n - 1) / 2 * d;
    out.b_nminus1 = n >= 1 ? static_cast<long>(n - 1) * (n - 2) / 2 * d : 0;
    out.sym_space_dim = static_cast<long>(n - 1) * (n - 1) * d;
    return out;
}

} // namespace periodlab
