#pragma once

#include "periodlab/number_field.hpp"

#include <map>
#include <memory>
#include <vector>

namespace periodlab {

// One simple factor L_alpha of E (x) F, presented both relatively
// (an irreducible factor of E's defining polynomial over F) and
// absolutely (the minimal polynomial of a primitive element).
struct CompositumComponent {
    int alpha;
    PolyNF factor;          // irreducible factor of f over F
    PolyQ compositum_poly;  // absolute defining polynomial of L_alpha
};

// The decomposition E (x) F = (+)_alpha L_alpha together with the index
// map (tau, sigma) -> alpha read off from which factor vanishes.
class CompositumDecomposition {
public:
    static CompositumDecomposition build(NumberFieldPtr E, NumberFieldPtr F,
                                         const EmbeddingSet& embE, const EmbeddingSet& embF,
                                         int degree_cap = 64);

    const NumberFieldPtr& E() const { return e_; }
    const NumberFieldPtr& F() const { return f_; }
    const std::vector<CompositumComponent>& components() const { return comps_; }
    int component_count() const { return static_cast<int>(comps_.size()); }

    int component_of(int tau, int sigma) const;
    int tau_count() const { return ntau_; }
    int sigma_count() const { return nsigma_; }

    // sum over alpha of [L_alpha : Q]
    int total_absolute_degree() const;

private:
    NumberFieldPtr e_, f_;
    std::vector<CompositumComponent> comps_;
    std::vector<int> pair_map_; // row-major (tau, sigma)
    int ntau_ = 0, nsigma_ = 0;
};

// Finitely generated module over E (x) F given by per-component dimensions.
struct TensorModule {
    std::shared_ptr<const CompositumDecomposition> dec;
    std::map<int, int> component_dims;

    struct RankReport {
        bool free;
        int rank;                                 // valid when free
        std::vector<std::array<int, 3>> fibers;   // (tau, sigma, dim)
    };
    RankReport module_rank() const;
    int fiber_dim(int tau, int sigma) const;
};

// Element of a free module (E(x)F)^r: per component alpha, a vector of
// r coordinates in L_alpha (presented in the power basis of the
// primitive element of compositum_poly).
struct ModuleElem {
    std::map<int, std::vector<NFElem>> coords;
};

// Basis test for a family of rank-many elements: componentwise
// determinant over each L_alpha. Throws if the family size differs from
// the rank (the equivalences of the basis lemma need that cardinality).
bool is_basis(const std::vector<ModuleElem>& family, const TensorModule& m);

// Per-embedding determinant of a square matrix family over E (x) C:
// one matrix per tau, det taken componentwise.
std::vector<Scalar> per_embedding_determinant(const std::vector<Mat>& family);

} // namespace periodlab
