#pragma once

#include "periodlab/hodge_comb.hpp"
#include "periodlab/motive.hpp"
#include "periodlab/recognize.hpp"

namespace periodlab {

// A period: tau-indexed backend scalars times a formal power of 2*pi*i.
// The formal power keeps exact mode exact; numeric instantiation only
// happens on explicit request.
struct PeriodValue {
    std::vector<Scalar> comp;
    int two_pi_i_exp = 0;
    std::string basis_provenance;
    std::pair<std::string, std::string> equivalence_level; // (coefficient ring, L)

    PeriodValue mul(const PeriodValue& o) const;
    PeriodValue div(const PeriodValue& o) const;
    PeriodValue pow(long e) const;
    Tri equals(const PeriodValue& o) const;
    bool nonzero() const;
};

enum class PeriodSign { plus, minus };

// sigma-determinant period: per-tau determinant of the comparison in the
// rational Betti basis and the fixed de Rham basis.
PeriodValue sigma_determinant_period(const MotiveData& m, int sigma);

// Motivic period Q_i(M, sigma): the scalar carrying the i-th Hodge line
// at sigma to the paired line at sigma-bar under infinite Frobenius.
PeriodValue motivic_Q(const MotiveData& m, int sigma, int i);

// Q^{(j)}(M, sigma) = Q_1 ... Q_j * delta(M, sigma) * (2 pi i)^{n(n-1)/2}.
PeriodValue Q_cumulative(const MotiveData& m, int sigma, int j);

// Local Deligne period c^{+/-}(M, sigma) via the paired eigenbasis
// {e_i +/- F e_i} against the image of {(w_a, w_{iota(a)})}. Works on
// any (possibly non-regular) validated data without middle classes.
PeriodValue local_deligne_period(const MotiveData& m, int sigma, PeriodSign sign);

// e_sigma(tau) = (-1)^{n_sigma(tau)}; the sign relating c^+ and c^-.
PeriodValue e_sigma(const MotiveData& m, int sigma);

struct ConjugacyVerdict {
    PeriodValue lhs; // Q^{(n-j)}(M^c, sigma)
    PeriodValue rhs; // Q^{(j)}(M, sigma)
    std::vector<Scalar> ratio;
    Recognition membership; // in E (x) sigma(F)
    bool exact_equality;    // ratio identically 1 (canonical bases)
};
ConjugacyVerdict verify_conjugacy(const MotiveData& m, int sigma, int j);

// Global periods of Res_{F/Q} M for the prescribed covariant bases.
struct GlobalPeriods {
    PeriodValue delta_global;
    PeriodValue c_plus_global;
    PeriodValue c_minus_global;
    std::vector<Scalar> assembly_det; // det(f) per tau, prescribed bases
    NFElem alpha_used;
};
GlobalPeriods global_periods(const RestrictionPackage& r,
                             std::optional<NFElem> alpha = std::nullopt);

struct GlobalFactorizationVerdict {
    GlobalPeriods global;
    std::vector<Scalar> ratio_delta;   // delta(M_Q) / (D_F^{n/2} prod delta)
    std::vector<Scalar> ratio_plus;    // c^+(M_Q) / ((prod sigma(alpha))^[n/2] D_{F+}^{n/2} prod c^+)
    std::vector<Scalar> ratio_minus;
    std::vector<Scalar> ratio_assembly; // det(f) / ((prod sigma(alpha))^[n/2] D_{F+}^{n/2})
    Recognition delta_in_E;
    Recognition plus_in_E;
    Recognition minus_in_E;
    Recognition assembly_in_E;
};
GlobalFactorizationVerdict verify_global_factorization(const MotiveData& m);

struct TensorFormulaVerdict {
    PeriodValue lhs;            // c^+(M (x) M', sigma) from first principles
    std::vector<Scalar> rhs;    // the split-index product, per tau
    std::vector<Scalar> ratio;
    Recognition membership;     // in E (x) sigma(F)
};
TensorFormulaVerdict verify_tensor_formula(const MotiveData& m, const MotiveData& mprime,
                                           int sigma);

// All determinant periods agree exactly across two presentations of the
// same motive (epsilon-refinements of the frame normalization).
struct InvarianceReport {
    bool delta_equal;
    bool c_plus_equal;
    bool q_cumulative_equal;
};
InvarianceReport omega_hat_invariance(const MotiveData& a, const MotiveData& b);

// square root of the field discriminant as the embedding-matrix
// determinant det(sigma_j(basis_m)); rational-square consistent
Scalar discriminant_sqrt(const EmbeddingSet& emb);

} // namespace periodlab
