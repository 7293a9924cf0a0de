#ifndef P3LIE_REPRESENTATION_HPP
#define P3LIE_REPRESENTATION_HPP

#include "p3lie/algebra.hpp"

namespace p3lie {

/*
 * Action data (V, rho, mu) for a base algebra: mu[i] is the action of e_i on
 * the carrier, rho[i][j] the action of the pair (e_i, e_j). rho is expected
 * antisymmetric with zero diagonal; a dedicated law in the report checks it.
 */
struct Representation {
    Algebra base;
    int carrierDim = 0;
    std::vector<Matrix> mu;                // n matrices, m x m
    std::vector<std::vector<Matrix>> rho;  // n x n matrices, m x m

    static Representation zero(const Algebra& base, int carrierDim);

    Matrix muOf(const Vec& x) const;             // sum_i x_i mu[i]
    Matrix rhoFirstOf(const Vec& x, int j) const;   // sum_i x_i rho[i][j]
    Matrix rhoSecondOf(int i, const Vec& y) const;  // sum_j y_j rho[i][j]
};

// mu = left multiplication, rho = ad.
Representation adjoint_representation(const Algebra& alg);

// Family condition identifiers; base-algebra laws appear with a "base." prefix.
namespace replaw {
inline constexpr const char* kRhoAntisym = "rho_antisymmetric";
inline constexpr const char* kMuRep = "mu_rep";            // mu(x.y) = mu(x)mu(y)
inline constexpr const char* kRhoRep1 = "rho_rep_1";
inline constexpr const char* kRhoRep2 = "rho_rep_2";
inline constexpr const char* kRep1 = "rep_1";
inline constexpr const char* kRep2 = "rep_2";
inline constexpr const char* kTransRep1 = "trans_rep_1";
inline constexpr const char* kTransRep2 = "trans_rep_2";
inline constexpr const char* kMuRhoZero = "mu_rho_zero";
inline constexpr const char* kRhoMuZero = "rho_mu_zero";
inline constexpr const char* kRhoProductZero = "rho_product_zero";
inline constexpr const char* kMuBracketZero = "mu_bracket_zero";
}  // namespace replaw

// Rep-only conditions of the family (no base-algebra laws).
LawReport representation_laws(const Representation& rep, Family family);

// Base-algebra laws (prefixed "base.") plus the family's rep conditions.
LawReport validate_representation(const Representation& rep, Family family);

struct DualRepResult {
    Representation rep;
    // For the transposed family this carries the iff-condition verdicts
    // (mu/rho commute, mu of brackets vanish); for the other families the
    // dual is a representation unconditionally and the report is empty.
    LawReport report;
};

// (rho*, -mu*): rho*(x,y) = -rho(x,y)^T, (-mu*)(x) = mu(x)^T on the dual carrier.
DualRepResult dual_representation(const Representation& rep, Family family);

// Algebra on base + carrier with the semidirect product/bracket; built
// unconditionally, whether or not the rep validates.
Algebra semidirect_product(const Representation& rep);

}  // namespace p3lie

#endif
