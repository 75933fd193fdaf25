#pragma once

#include "periodlab/hodge_comb.hpp"
#include "periodlab/rng.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace periodlab {

// ---- character algebra ---------------------------------------------------------

// Formal product of Hecke-character generators and their conjugates.
// Generators registered as "self-check" (chi^c = chi^{-1}: central
// characters of polarized representations, tilde characters) are
// normalized so the conjugated generator never appears.
struct CharExpr {
    std::map<std::pair<std::string, bool>, int> gens; // (base id, conjugated) -> exponent

    static CharExpr one();
    static CharExpr base(const std::string& id);
    CharExpr conj() const;
    CharExpr inverse() const;
    CharExpr operator*(const CharExpr& o) const;
    CharExpr pow(int e) const;
    // chi-check = chi^{c,-1}
    CharExpr check() const { return conj().inverse(); }
    // chi-tilde = chi / chi^c
    CharExpr tilde() const { return *this * conj().inverse(); }
    bool trivial() const { return gens.empty(); }

    bool operator==(const CharExpr& o) const { return gens == o.gens; }
    bool operator<(const CharExpr& o) const { return gens < o.gens; }
    std::string str() const;
};

// ---- atoms and expressions -------------------------------------------------------

enum class AtomKind {
    q_small,     // Q_i(M, sigma)
    q_cum,       // Q^{(j)}(M, sigma)
    delta,       // delta(M, sigma)
    cm_p,        // CM period p(chi, sigma), multiplicative in chi
    P_global,    // P^{(I)}(Pi)
    P_local,     // P^{(r)}(Pi, sigma)
    guer_Q,      // Q(psi-tilde, sigma_0) of the unitary-group theorem
    P_psi,       // P(psi): opaque CM-abelian-variety package
    whittaker_p, // p(Pi): inert
    petersson_Q, // Q_V(pi): inert
    disc_sqrt,   // D_field^{1/2}
    alpha_prod,  // prod_{sigma in Sigma} sigma(alpha)
};

std::string kind_name(AtomKind k);

// Motive-valued atoms (q_small, q_cum, delta) name either a registered
// motive (motive id, chr trivial) or the rank-one motive M(chi) of a
// character expression (motive empty, chr set). cm_p atoms are keyed by
// a single character generator with a conjugation flag; p of a product
// expands multiplicatively over generators.
struct PeriodAtom {
    AtomKind kind{};
    std::string motive;          // motive / representation / field / generator id
    bool conj = false;           // M^c flag, or the bar on a cm_p generator
    CharExpr chr;                // hecke motive argument; guer_Q argument
    std::string sigma;           // embedding label ("" when global)
    int index = 0;               // i / j / r; for guer_Q: r_sigma - s_sigma
    std::vector<int> index_vec;  // I for P_global

    bool operator<(const PeriodAtom& o) const;
    bool operator==(const PeriodAtom& o) const;
    std::string str() const;
};

// Equivalence level ~_{A;L}: A as a set of coefficient-field symbols,
// L as a chain position Q < sigma(F) < F^gal.
struct EqLevel {
    std::set<std::string> coeff;
    int L = 0; // 0: Q, 1: sigma(F), 2: F^gal

    bool admits(const EqLevel& rule) const;
    std::string str() const;
    bool operator==(const EqLevel& o) const { return coeff == o.coeff && L == o.L; }
};

struct PeriodExpression {
    std::map<PeriodAtom, long> atoms;
    long two_pi_i = 0;
    std::set<std::string> units; // opaque-unit ring tags accumulated by rules
    EqLevel level;

    static PeriodExpression one(EqLevel level);
    PeriodExpression& mul_atom(const PeriodAtom& a, long e);
    PeriodExpression mul(const PeriodExpression& o) const;
    PeriodExpression inverse() const;
    PeriodExpression pow(long e) const;
    bool is_unit_free_one() const { return atoms.empty() && two_pi_i == 0; }
    std::string str() const;
};

// ---- the registry ----------------------------------------------------------------

struct MotiveInfo {
    std::string id;
    int rank = 1;
    bool is_hecke = false;
    CharExpr hecke_char;      // when is_hecke: M = M(chi)
    bool polarized = false;   // Pi ~ Pi^c; enables the index-reversal rules
    bool has_central_char = false;
    CharExpr central_char;    // xi_Pi
    std::string aux_char;     // generator id of xi with xi_Pi = xi / xi^c
    std::string coeff_sym;    // "E(Pi)" etc.
    std::string descends_to;  // over F+: the id of the CM-field motive it matches
    std::map<std::string, std::string> sigma0_lift; // sigma_0 -> sigma in Sigma
};

struct AtomUniverse {
    CmLabels labels;
    std::map<std::string, MotiveInfo> motives;
    std::set<std::string> self_check_chars;  // chi^c = chi^{-1}
    // auxiliary generators xi with xi_Pi = xi/xi^c of a polarized central
    // character; their sigma-bar CM periods reduce through the
    // P^{(0)} x P^{(n)} ~ 1 relation
    std::set<std::string> central_pair_aux;

    CharExpr normalize(CharExpr c) const;
    const MotiveInfo& info(const std::string& id) const;
};

// ---- rules ------------------------------------------------------------------------

struct RewriteRule {
    std::string name;
    std::string citation;
    EqLevel level;          // level at which the cited relation holds
    std::string assumption; // "", "tate", "hypCrelle"
    // fire on a single atom occurrence; replacement is for exponent +1
    std::function<std::optional<PeriodExpression>(const PeriodAtom&, const AtomUniverse&)> fire;
};

// Exactly the cited relations (and the character-modifier expansion
// built into the atom constructors); nothing invented.
const std::vector<RewriteRule>& rule_set();

struct RewriteTraceStep {
    std::string rule;
    std::string citation;
    std::string assumption;
    std::string atom;
};

struct CanonicalForm {
    PeriodExpression expr;
    std::vector<RewriteTraceStep> steps;
};

// Deterministic exhaustive rewriting; idempotent and (by construction
// of the terminating rule set) independent of application order.
CanonicalForm canonicalize(PeriodExpression e, const AtomUniverse& u,
                           const std::set<std::string>& assumptions = {});
// Same fixpoint reached along a randomized application schedule.
CanonicalForm canonicalize_random_schedule(PeriodExpression e, const AtomUniverse& u,
                                           const std::set<std::string>& assumptions, Rng& rng);

// Throws when the rule set fails the bounded-descent probe.
void verify_rule_set_terminates(const AtomUniverse& u);

struct EquivalenceCheck {
    bool success = false;
    std::vector<RewriteTraceStep> trace;
    PeriodExpression residual; // irreducible difference on failure
};
EquivalenceCheck check_equivalence(const PeriodExpression& a, const PeriodExpression& b,
                                   const EqLevel& level, const AtomUniverse& u,
                                   const std::set<std::string>& assumptions = {});

// ---- emitters ----------------------------------------------------------------------

// RHS of the Deligne conjecture for Res(M(Pi) (x) M(Pi')) at the
// critical half-integer m (doubled): throws with the critical set
// attached when m is not critical for the pair.
PeriodExpression emit_deligne_rhs(const InfinityType& pi, const InfinityType& piprime, int m2,
                                  const AtomUniverse& u, const std::string& pi_id,
                                  const std::string& piprime_id);

// RHS of the unitary-group critical value theorem.
struct GuerParams {
    std::string pi_id;     // unitary-group representation
    std::string psi_id;    // Hecke character generator id
    int n = 1;
    int a0 = 0;
    int m2 = 0;            // doubled half-integer m
    std::map<std::string, std::pair<int, int>> signature; // per Sigma label
};
PeriodExpression emit_guer_rhs(const GuerParams& par, const AtomUniverse& u);
// Motivic form of the same right-hand side.
PeriodExpression emit_guermotive_rhs(const GuerParams& par, const AtomUniverse& u,
                                     const std::string& sigma0);

// ---- derivations -------------------------------------------------------------------

struct DerivationStep {
    std::string description;
    std::string citation;
    bool ok = false;
    bool assumed = false;
    std::string assumption;
    std::vector<RewriteTraceStep> rewrites;
};

struct DerivationTrace {
    std::vector<DerivationStep> steps;
    bool success = false;
    std::string failed_at; // description of the first failing step
};

// Machine-checks the derivation chain identifying the local automorphic
// period with the cumulative motivic period, rank n, local index r.
// Assumed steps (hypCrelle, the Tate-conjecture identification) are
// marked; with them disabled the chain fails at the marked step.
DerivationTrace derivation_44(int n, int r, int cm_pairs,
                              const std::set<std::string>& assumptions);

// Reconciles the rank-(n,1) critical-value expression with the
// unitary-group one via s_sigma = n - I_sigma and the conjugacy lemma.
// The motivic-descent identification is the assumed step here.
DerivationTrace guerberoff_compatibility_trace(int n, std::map<std::string, int> I_sigma,
                                               int cm_pairs,
                                               const std::set<std::string>& assumptions);

} // namespace periodlab
