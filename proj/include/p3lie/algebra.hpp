#ifndef P3LIE_ALGEBRA_HPP
#define P3LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <string_view>

#include "p3lie/report.hpp"
#include "p3lie/tensor.hpp"

namespace p3lie {

/*
 * The five structure families checked throughout: a commutative associative
 * product, a ternary Lie bracket, and the three ways the paper couples them.
 * The same enum selects coalgebra, representation, matched-pair, and
 * bialgebra condition sets in the other modules.
 */
enum class Family { CommAssoc, ThreeLie, Poisson, Transposed, Admissible };

constexpr Family kAllFamilies[] = {Family::CommAssoc, Family::ThreeLie, Family::Poisson,
                                   Family::Transposed, Family::Admissible};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/*
 * Finite-dimensional algebra with one binary and one ternary operation,
 * stored by structure constants:
 *   product[i][j][l]     coefficient of e_l in e_i . e_j
 *   bracket[i][j][k][l]  coefficient of e_l in [e_i, e_j, e_k]
 * Symmetry of the product and antisymmetry of the bracket are validated,
 * not enforced on construction.
 */
struct Algebra {
    int dim = 0;
    Tensor product;
    Tensor bracket;
    std::vector<std::string> basis;  // optional labels

    static Algebra zero(int n);

    std::span<const Scalar> productRow(int i, int j) const { return product.lastAxis3(i, j); }
    std::span<const Scalar> bracketRow(int i, int j, int k) const {
        return bracket.lastAxis4(i, j, k);
    }

    // bilinear/trilinear extensions; dims are small enough for the dense scans
    Vec mulVec(const Vec& x, const Vec& y) const;
    Vec bracketVec(const Vec& x, const Vec& y, const Vec& z) const;

    // mixed basis/vector forms used by the law scans
    Vec mulIV(int i, const Vec& v) const;
    Vec bracketVJK(const Vec& v, int j, int k) const;
    Vec bracketIVK(int i, const Vec& v, int k) const;
    Vec bracketIJV(int i, int j, const Vec& v) const;

    bool sameConstants(const Algebra& o) const {
        return dim == o.dim && product == o.product && bracket == o.bracket;
    }
};

// Individual law identifiers used in reports.
namespace law {
inline constexpr const char* kCommutative = "commutative";
inline constexpr const char* kAssociative = "associative";
inline constexpr const char* kAntisymmetric = "antisymmetric";
inline constexpr const char* kJacobi = "filippov_jacobi";
inline constexpr const char* kLeibniz = "leibniz";
inline constexpr const char* kTransposedLeibniz = "transposed_leibniz";
inline constexpr const char* kMixedProduct = "mixed_product";   // u.[x,y,z] = 0
inline constexpr const char* kMixedBracket = "mixed_bracket";   // [u.x,y,z] = 0
}  // namespace law

std::vector<std::string> family_laws(Family f);

// Evaluates every law of the family over all basis tuples; failed laws carry
// the lexicographically first witness.
LawReport validate(const Algebra& alg, Family family);
LawReport validate(const Algebra& alg, const std::vector<Family>& families);

Algebra direct_sum(const Algebra& a1, const Algebra& a2);

// Requires c2 commutative associative with zero bracket; throws PreconditionError.
Algebra tensor_with_commutative(const Algebra& a1, const Algebra& c2);

// [x,y,z]_h = h . [x,y,z]; requires alg to pass the transposed family.
Algebra h_twist(const Algebra& alg, const Vec& h);

struct LinearMap {
    int sourceDim = 0;
    int targetDim = 0;
    Matrix m;  // targetDim x sourceDim
};

LawReport is_homomorphism(const LinearMap& f, const Algebra& a1, const Algebra& a2);
LawReport is_derivation(const LinearMap& d, const Algebra& alg);

// ad_{x1,x2} as a matrix, columns ad(e_k) = [e_{x1}, e_{x2}, e_k].
Matrix ad_matrix(const Algebra& alg, int x1, int x2);
// Left multiplication matrix of e_i.
Matrix left_mul_matrix(const Algebra& alg, int i);

}  // namespace p3lie

#endif
