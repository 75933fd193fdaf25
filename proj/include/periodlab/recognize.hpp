#pragma once

#include "periodlab/number_field.hpp"

#include <optional>
#include <vector>

namespace periodlab {

enum class RecogStatus { found, absent, unknown };

// Result of expressing a tau-indexed vector x in E (x) C as an element
// of E (x) sigma(F): rational coordinates on the spanning set
// { e_k (x) sigma(f_l) } with e_k, f_l the power bases.
struct Recognition {
    RecogStatus status = RecogStatus::unknown;
    std::vector<std::vector<mpq_class>> coords; // [k][l]
    bool heuristic = false;                     // float-mode answers are flagged

    bool found() const { return status == RecogStatus::found; }
};

// Exact mode: decides membership by solving a rational linear system.
// Float mode: integer-relation style heuristic at the given denominator
// height bound; "found" answers are flagged heuristic, "absent" is
// certified via ball arithmetic, otherwise "unknown".
Recognition recognize_in_subring(const std::vector<Scalar>& x, const EmbeddingSet& embE,
                                 const EmbeddingSet& embF, int sigma,
                                 unsigned long height_bound = 1000000);

// Membership in E itself (coordinates on the power basis of E).
Recognition recognize_in_coefficients(const std::vector<Scalar>& x, const EmbeddingSet& embE,
                                      unsigned long height_bound = 1000000);

// Evaluate a recognized element back into E (x) C (round-trip check).
std::vector<Scalar> embed_subring_element(const std::vector<std::vector<mpq_class>>& coords,
                                          const EmbeddingSet& embE, const EmbeddingSet& embF,
                                          int sigma);

// Exact-mode rational linear solver: A x = b, any shape, returns a
// solution iff consistent.
std::optional<std::vector<mpq_class>> rational_solve(std::vector<std::vector<mpq_class>> a,
                                                     std::vector<mpq_class> b);

} // namespace periodlab
