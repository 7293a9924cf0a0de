#ifndef P3LIE_MATCHED_PAIR_HPP
#define P3LIE_MATCHED_PAIR_HPP

#include "p3lie/representation.hpp"

namespace p3lie {

/*
 * Two algebras acting on each other: muA[i]/rhoA[i][j] act on B (p x p),
 * muB[a]/rhoB[a][b] act on A (n x n). rhoA and rhoB are expected
 * antisymmetric in their two algebra indices.
 */
struct MatchedPair {
    Algebra algA, algB;
    std::vector<Matrix> muA;
    std::vector<std::vector<Matrix>> rhoA;
    std::vector<Matrix> muB;
    std::vector<std::vector<Matrix>> rhoB;

    static MatchedPair zero(const Algebra& a, const Algebra& b);
};

/*
 * Evaluates the family's full definition: both base algebras, the four
 * actions as representations, the underlying matched pairs of commutative
 * associative and 3-Lie algebras, and the family's numbered compatibility
 * conditions. Verdict-per-condition with first witnesses.
 */
LawReport check_matched_pair(const MatchedPair& mp, Family family);

// Algebra on A + B built from the two sum formulas; constructed unconditionally.
Algebra matched_pair_sum(const MatchedPair& mp);

// (condition verdicts, validate(matched_pair_sum) verdicts, agree flag); the
// two verdicts must agree on every input.
EquivalenceReport verify_matched_pair_theorem(const MatchedPair& mp, Family family);

}  // namespace p3lie

#endif
