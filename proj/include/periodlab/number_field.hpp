#pragma once

#include "periodlab/matrix.hpp"
#include "periodlab/poly.hpp"
#include "periodlab/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace periodlab {

class NumberField;
using NumberFieldPtr = std::shared_ptr<const NumberField>;

// A number field presented by a monic irreducible polynomial over Q.
// The rationals are represented by the polynomial X (root 0).
class NumberField {
public:
    static NumberFieldPtr create(std::string label, PolyQ defining_poly, int degree_cap = 64);
    static NumberFieldPtr rationals();

    const std::string& label() const { return label_; }
    const PolyQ& poly() const { return poly_; }
    int degree() const { return deg_; }
    bool is_rationals() const { return deg_ == 1 && poly_.size() == 2 && poly_[0] == 0; }

    // trusted constructor for polynomials known irreducible (cyclotomic moduli)
    static NumberFieldPtr create_unchecked(std::string label, PolyQ defining_poly);

private:
    NumberField(std::string label, PolyQ poly)
        : label_(std::move(label)), poly_(std::move(poly)),
          deg_(static_cast<int>(poly_.size()) - 1) {}
    std::string label_;
    PolyQ poly_;
    int deg_;
};

// Element of a number field in the power basis of its generator.
class NFElem {
public:
    NFElem() = default;
    NFElem(NumberFieldPtr K, PolyQ coeffs);

    static NFElem from_rational(NumberFieldPtr K, const mpq_class& q);
    static NFElem generator(NumberFieldPtr K);

    const NumberFieldPtr& field() const { return K_; }
    const PolyQ& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational(mpq_class* value = nullptr) const;

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator-() const;
    NFElem operator*(const NFElem& o) const;
    NFElem inverse() const;
    NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }
    bool operator==(const NFElem& o) const { return c_ == o.c_; }
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    // image under the map sending the generator to `image`
    NFElem substitute_generator(const NFElem& image) const;

    std::string str(const std::string& var = "y") const;

private:
    NumberFieldPtr K_;
    PolyQ c_;
};

// Polynomials with coefficients in a number field.
using PolyNF = std::vector<NFElem>;

int degree_nf(const PolyNF& f);
void normalize_nf(PolyNF& f);
PolyNF lift_poly(const PolyQ& f, const NumberFieldPtr& K);
PolyNF add_nf(const PolyNF& a, const PolyNF& b);
PolyNF sub_nf(const PolyNF& a, const PolyNF& b);
PolyNF mul_nf(const PolyNF& a, const PolyNF& b);
std::pair<PolyNF, PolyNF> divmod_nf(const PolyNF& a, const PolyNF& b);
PolyNF gcd_nf(const PolyNF& a, const PolyNF& b); // monic
PolyNF compose_shift_nf(const PolyQ& f, const NFElem& shift); // f(x + shift)
std::string to_string_nf(const PolyNF& f, const std::string& var = "X",
                         const std::string& gen = "y");

// Trager-style factorization of a monic squarefree rational polynomial
// into monic irreducible factors over F. The degree cap bounds
// deg(f) * [F:Q].
std::vector<PolyNF> factor_over_extension(const PolyQ& f, const NumberFieldPtr& F,
                                          int degree_cap = 64);

// Same, also reporting per factor the absolute defining polynomial of
// the compositum F[X]/(factor), read off the Trager correspondence.
struct TragerFactor {
    PolyNF factor;
    PolyQ norm;
};
std::vector<TragerFactor> factor_over_extension_with_norms(const PolyQ& f,
                                                           const NumberFieldPtr& F,
                                                           int degree_cap = 64);

// Complex embeddings of a field under a fixed backend, in a canonical
// deterministic order, with the conjugation pairing.
class EmbeddingSet {
public:
    static EmbeddingSet build(NumberFieldPtr field, const Backend& backend);

    const NumberFieldPtr& field() const { return field_; }
    const Backend& backend() const { return backend_; }
    int count() const { return static_cast<int>(roots_.size()); }
    const Scalar& root(int i) const { return roots_.at(i); }
    int conj_index(int i) const { return conj_.at(i); }
    bool has_real_embedding() const;

    Scalar eval(const NFElem& e, int emb) const;

    // CM type: one index per conjugate pair; set by choose_cm_type
    const std::vector<int>& cm_type() const { return cm_type_; }
    void choose_default_cm_type();
    void set_cm_type(std::vector<int> sigma);

    // exact mode: permutation of embeddings induced by zeta -> zeta^a
    std::vector<int> galois_permutation(unsigned a) const;

private:
    NumberFieldPtr field_;
    Backend backend_;
    std::vector<Scalar> roots_;
    std::vector<int> conj_;
    std::vector<int> cm_type_;
};

// CM structure of a totally imaginary field: conjugation as a field
// automorphism, the totally real subfield and coordinates for it.
struct CMStructure {
    NFElem theta_bar;          // image of the generator under conjugation
    NumberFieldPtr fplus;      // maximal totally real subfield
    NFElem fplus_gen_in_f;     // generator of F+ as an element of F
    NFElem alpha;              // default purely imaginary element (theta - theta_bar)

    NFElem conj(const NFElem& x) const { return x.substitute_generator(theta_bar); }
    bool is_purely_imaginary(const NFElem& x) const { return conj(x) == -x; }
    // power basis of F+ inside F: 1, u, ..., u^{d/2-1}
    std::vector<NFElem> fplus_power_basis() const;
};

// Throws if F is not CM (detects real embeddings / non-central conjugation).
CMStructure cm_structure(const NumberFieldPtr& F, const EmbeddingSet& emb);

// Small dense matrices over a number field (Frobenius data lives in E).
using NFMat = std::vector<std::vector<NFElem>>;

NFMat nf_identity(const NumberFieldPtr& K, int n);
NFMat nf_mul(const NFMat& a, const NFMat& b);
NFMat nf_inverse(NFMat m);
NFElem nf_det(NFMat m);
bool nf_equal(const NFMat& a, const NFMat& b);
// entrywise embedding tau: matrix over the backend
Mat nf_embed(const NFMat& m, const EmbeddingSet& emb, int tau);
NFMat nf_random_invertible(const NumberFieldPtr& K, int n, Rng& rng, long height = 4);

} // namespace periodlab
