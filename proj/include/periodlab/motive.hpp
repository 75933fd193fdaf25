#pragma once

#include "periodlab/compositum.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace periodlab {

// Shared immutable environment of a motive computation: the coefficient
// field E, the CM base field F with a chosen CM type, embeddings under
// one backend, and the decomposition of E (x) F.
struct MotiveContext {
    Backend backend;
    NumberFieldPtr E, F;
    EmbeddingSet embE, embF;
    CMStructure cm;
    std::shared_ptr<const CompositumDecomposition> dec;

    static std::shared_ptr<const MotiveContext> create(
        NumberFieldPtr E, NumberFieldPtr F, const Backend& backend,
        std::optional<std::vector<int>> cm_type = std::nullopt, int degree_cap = 64);

    int ntau() const { return embE.count(); }
    int nsigma() const { return embF.count(); }
    const std::vector<int>& Sigma() const { return embF.cm_type(); }
    int bar(int sigma) const { return embF.conj_index(sigma); }
    bool in_Sigma(int sigma) const;
    int alpha(int tau, int sigma) const { return dec->component_of(tau, sigma); }
};

using MotiveContextPtr = std::shared_ptr<const MotiveContext>;

// Regular pure "motive data" over the CM field F with coefficients in E:
// Hodge exponents per component of E (x) F, the Hodge line frames and
// comparison matrices per (tau, sigma), and the rational infinite
// Frobenius per sigma. The de Rham basis is implicit: comparison
// matrices carry the frame coordinates in that basis, frames carry the
// frame coordinates in the rational Betti bases.
struct MotiveData {
    MotiveContextPtr ctx;
    int n = 0;
    int w = 0;
    std::map<int, std::vector<int>> exps; // alpha -> exponents, indexed by DR position
    std::vector<int> pairing;             // involution iota on 0..n-1
    std::vector<std::vector<Mat>> comparison; // [tau][sigma], frame coords in DR basis
    std::vector<std::vector<Mat>> frame;      // [tau][sigma], frame coords in Betti basis
    std::vector<NFMat> frobenius;             // [sigma], E-entries, M_sigma -> M_sigmabar
    std::string dr_basis_tag = "omega-tilde";

    const std::vector<int>& exps_at(int tau, int sigma) const;
    // full comparison in rational bases: X = C * B^{-1}
    Mat period_matrix(int tau, int sigma) const;
    Mat frobenius_at(int tau, int sigma) const;

    bool is_regular() const;
    bool has_middle_class() const;
    // dim of the upper filtration step: #{a : p_a(tau,sigma) > w/2}
    int upper_count(int tau, int sigma) const;

    std::vector<std::pair<int, int>> hodge_type(int tau, int sigma) const; // sorted by p desc
};

struct ValidationIssue {
    std::string code;
    bool ok;
    std::string detail;
    bool informational = false; // flags (middle classes) rather than defects
};

struct ValidationReport {
    std::vector<ValidationIssue> checks;
    bool all_ok(bool require_regular = true) const;
    const ValidationIssue* find(const std::string& code) const;
};

ValidationReport validate(const MotiveData& m);

// ---- synthetic generator ------------------------------------------------------

struct SyntheticSpec {
    MotiveContextPtr ctx;
    int n = 1;
    int w = 0;
    std::uint64_t seed = 0;
    bool random_epsilon = false;
    bool require_no_middle = true;
    long exponent_spread = 8;
    int max_retries = 64;
    // optional plants; omitted pieces are drawn from the seed
    std::map<int, std::vector<int>> explicit_exps;            // alpha -> exponents
    std::map<std::pair<int, int>, std::vector<Scalar>> planted_Q; // (sigma,i)->per-tau
    std::vector<NFMat> planted_frobenius;                     // per Sigma position
};

struct SynthesisRecord {
    // ground truth: [tau][sigma][i]
    std::vector<std::vector<std::vector<Scalar>>> planted_Q;
    std::vector<std::vector<Scalar>> delta;     // [tau][sigma]
    std::vector<std::vector<Scalar>> det_frame; // [tau][sigma]
};

struct SyntheticMotive {
    MotiveData data;
    SynthesisRecord record;
};

// Plants Frobenius first as a rational matrix (so it is honestly
// E-rational) and derives the sigma-bar frames from the planted Q's.
// The sigma-bar Q values are forced to Q_{i*,sigma}^{-1}; a spec that
// plants conflicting values is rejected.
SyntheticMotive synthesize_motive(const SyntheticSpec& spec);

// ---- constructors -------------------------------------------------------------

// Kronecker tensor product; the result is generally not regular and is
// flagged for middle classes by validate/has_middle_class.
MotiveData tensor(const MotiveData& a, const MotiveData& b);

// M^c: the (tau, sigma)-indexed data of M at sigma-bar.
MotiveData conjugate(const MotiveData& m);

// Restriction of scalars bookkeeping for the motive viewed over Q.
struct RestrictionPackage {
    MotiveData motive;
    int betti_dim_E() const;  // n * [F:Q]
    int plus_dim_E() const;   // n * [F:Q] / 2 when no middle classes
};
RestrictionPackage restriction_of_scalars(const MotiveData& m);

} // namespace periodlab
