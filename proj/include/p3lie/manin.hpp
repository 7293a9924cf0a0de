#ifndef P3LIE_MANIN_HPP
#define P3LIE_MANIN_HPP

#include "p3lie/coalgebra.hpp"
#include "p3lie/matched_pair.hpp"
#include "p3lie/polynomial.hpp"

namespace p3lie {

/*
 * Algebra on A + A* with the split recorded: coordinates [0, split) are A,
 * [split, dim) are A*. The form defaults to the standard pairing
 * B(x + xi, y + eta) = <x, eta> + <y, xi>.
 */
struct SplitDouble {
    Algebra algebra;
    int split = 0;
    Matrix form;
};

Matrix standard_pairing(int n);  // 2n x 2n, [[0, I], [I, 0]]

/*
 * The double on A + A*: bracket from the coadjoint actions of A and of the
 * dual algebra of co, product from the symmetric reading of the mixed term
 * (x + xi).(y + eta) = x.y - L*(x)eta - L*(y)xi + xi o eta - L*(xi)y - L*(eta)x.
 */
SplitDouble double_construct(const Algebra& alg, const Coalgebra& co);

// Symmetry, the two invariance identities, and exact nondegeneracy of a form.
LawReport check_invariance(const Matrix& form, const Algebra& alg);

// Subalgebra closure of both halves, isotropy, the two projection conditions,
// and pseudo-metric validity of the form on the whole double.
LawReport check_manin_triple(const SplitDouble& d);

/*
 * Compatibility conditions between an algebra and a coalgebra of equal dim:
 *   comm-assoc  -> commutative cocommutative infinitesimal bialgebra
 *   3-lie       -> double construction 3-Lie bialgebra
 *   poisson     -> double construction Poisson 3-Lie bialgebra
 *   admissible  -> double construction admissible transposed bialgebra
 * including the prerequisite algebra and coalgebra family laws.
 */
LawReport check_bialgebra(const Algebra& alg, const Coalgebra& co, Family family);

struct InvariantFormSolution {
    std::vector<Matrix> basis;  // of the symmetric invariant solution space
    Polynomial genericDet;      // det of the generic combination, in basis coefficients
    bool nondegenerateExists = false;
};

// Exact linear solve of symmetry plus both invariance identities; existence
// of a nondegenerate member is decided by the expanded determinant polynomial.
InvariantFormSolution solve_invariant_forms(const Algebra& alg);

// The matched pair (A, A*, ad*, -L*, ad'*, -L'*) built from coadjoint actions.
MatchedPair coadjoint_pair(const Algebra& alg, const Algebra& dual);

/*
 * Independently evaluates the three equivalent statements (bialgebra
 * conditions; coadjoint matched pair; Manin triple of the double) and
 * reports whether the verdicts agree. family must be poisson or admissible.
 */
EquivalenceReport verify_equivalence(const Algebra& alg, const Coalgebra& co, Family family);

}  // namespace p3lie

#endif
