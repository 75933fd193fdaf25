#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace periodlab {

// Pure half-integer combinatorics: infinity types, split indices,
// critical points. Half-integers are carried doubled (stored value is
// 2x) so everything stays in exact integer arithmetic.

// Labels of the archimedean places of a CM field and their pairing;
// independent of the scalar backend.
struct CmLabels {
    std::vector<std::string> sigmas;       // all embeddings
    std::map<std::string, std::string> bar;
    std::vector<std::string> Sigma;         // the CM type, one per pair

    static CmLabels standard(int pairs); // s0,s0bar,s1,s1bar,...
    bool in_Sigma(const std::string& s) const;
};

// Infinity type of a cohomological representation: per embedding sigma,
// a list A_{sigma,i} in Z + (n-1)/2 (doubled), strictly decreasing on
// the CM type; the sigma-bar list is indexed by the pairing, not
// re-sorted, so purity A_{sigma,i} + A_{sigmabar,i} = w can hold as
// stated.
struct InfinityType {
    int n = 1;
    int weight2 = 0; // 2*w(Pi)
    std::map<std::string, std::vector<int>> A2; // doubled entries
    std::string tau_tag = "tau0";

    void validate(const CmLabels& labels) const; // throws on violation
};

// Hodge data of the conjecturally attached motive: exponents per sigma
// (integers, sorted decreasing) and the motive weight w = -w(Pi)+n-1.
struct HodgeFromInfinity {
    int w;
    std::map<std::string, std::vector<int>> exps;
};
HodgeFromInfinity hodge_from_infinity(const InfinityType& pi, const CmLabels& labels);

// Split indices of a motivic pair at one embedding: how the shifted
// exponents of one factor cut the negated exponents of the other.
struct SplitIndexTable {
    std::vector<int> sp_m;      // length n+1,   sp(j, M; M')
    std::vector<int> sp_mprime; // length n'+1,  sp(k, M'; M)
};
// p sorted strictly decreasing (length n), r likewise (length n');
// throws when some p_i + r_j equals (w + w')/2 (middle class).
SplitIndexTable split_indices(const std::vector<int>& p, int w, const std::vector<int>& r, int w2);

// #{ i : A_{sigma,i} - A_{sigmabar,i} + a_sigma - a_sigmabar < 0 }
int I_sigma(const InfinityType& pi, const InfinityType& chi, const std::string& sigma,
            const CmLabels& labels);

// Critical integers of a pure Hodge multiset, by the closed-form
// interval; pairs with p = q are rejected (no critical point).
std::vector<int> critical_points(const std::vector<std::pair<int, int>>& pairs);
// Independent oracle: enumerate the poles of the archimedean factors on
// both sides of the functional equation over a window.
std::vector<int> critical_points_gamma_oracle(const std::vector<std::pair<int, int>>& pairs);

// Critical range for the standard L-function of a unitary group:
// half-integers m (doubled in the result) with
//   n < m + (n-1)/2 <= min over sigma of both signature bounds.
struct UnitaryParams {
    int n;
    std::map<std::string, std::vector<int>> a; // weight entries a_{sigma,i}, decreasing
    std::map<std::string, std::pair<int, int>> signature; // (r_sigma, s_sigma)
    std::map<std::string, int> m_exp; // Hecke character exponents m_sigma (all embeddings)
};
std::vector<int> critical_range_unitary(const UnitaryParams& par, const CmLabels& labels);

struct Predicates {
    bool polarized_necessary;
    bool sufficiently_regular;
    std::optional<bool> good_position; // empty when n <= n'
};
Predicates predicates(const InfinityType& pi, const InfinityType& piprime, int gap,
                      const CmLabels& labels);

// b_n(F) = n(n-1)/2 * d for a CM field of degree 2d, and the
// symmetric-space dimension b_n + b_{n-1} = (n-1)^2 d.
struct CohomologyDegrees {
    long b_n;
    long b_nminus1;
    long sym_space_dim;
};
CohomologyDegrees cohomology_degree(int n, int cm_degree_over_q);

} // namespace periodlab
