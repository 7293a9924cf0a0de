#ifndef P3LIE_COALGEBRA_HPP
#define P3LIE_COALGEBRA_HPP

#include "p3lie/algebra.hpp"

namespace p3lie {

/*
 * Coproduct data stored by structure constants:
 *   cop2[k][i][j]     coefficient of e_i x e_j       in Delta(e_k)
 *   cop3[k][i][j][l]  coefficient of e_i x e_j x e_l in delta(e_k)
 * Symmetry of cop2 in (i,j) and antisymmetry of cop3 in (i,j,l) are
 * validated, not enforced.
 */
struct Coalgebra {
    int dim = 0;
    Tensor cop2;
    Tensor cop3;

    static Coalgebra zero(int n);
};

namespace colaw {
inline constexpr const char* kCocommutative = "cocommutative";
inline constexpr const char* kCoassociative = "coassociative";
inline constexpr const char* kCop3Antisym = "cop3_antisymmetric";
inline constexpr const char* kCoJacobi = "co_filippov_jacobi";
inline constexpr const char* kCoLeibniz = "co_leibniz";
inline constexpr const char* kCoMixedProduct = "co_mixed_product";  // (1 x delta) Delta = 0
inline constexpr const char* kCoMixedBracket = "co_mixed_bracket";  // (Delta x 1 x 1) delta = 0
}  // namespace colaw

/*
 * Checks the coproduct identities of the family directly on the coproduct
 * tensors (never by dualizing first): for F the laws are exactly the duals
 * of family_laws(F), so validate(dualize_coalgebra(co), F) must agree with
 * validate_coalgebra(co, F) law for law.
 */
LawReport validate_coalgebra(const Coalgebra& co, Family family);
LawReport validate_coalgebra(const Coalgebra& co, const std::vector<Family>& families);

// e_i* o e_j* = sum_l cop2[l][i][j] e_l*, [e_i*,e_j*,e_k*]* = sum_l cop3[l][i][j][k] e_l*.
Algebra dualize_coalgebra(const Coalgebra& co);

// Inverse reading of the same dictionary; round trips are exact identities.
Coalgebra dualize_algebra(const Algebra& alg);

}  // namespace p3lie

#endif
