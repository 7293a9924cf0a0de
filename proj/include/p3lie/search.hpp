#ifndef P3LIE_SEARCH_HPP
#define P3LIE_SEARCH_HPP

#include <array>
#include <functional>

#include "p3lie/algebra.hpp"

namespace p3lie {

/*
 * One structure-constant slot: a product cell (i, j, l) or a bracket cell
 * (i, j, k, l), 0-based. Writing a slot also writes its symmetry or
 * antisymmetry orbit, so orbits of distinct slots must not overlap.
 */
struct SlotRef {
    bool isBracket = false;
    std::array<int, 4> idx{0, 0, 0, 0};  // idx[3] unused for product slots
};

struct SearchTemplate {
    int dim = 0;
    std::vector<std::pair<SlotRef, Scalar>> fixed;
    std::vector<SlotRef> freeSlots;
    std::vector<Scalar> coefficients;
    std::vector<Family> families;
    unsigned long long budget = 1'000'000;
};

struct SearchHit {
    std::vector<Scalar> assignment;  // one coefficient per free slot, in slot order
    Algebra algebra;
};

/*
 * Enumerates every assignment of coefficients to the free slots in
 * lexicographic order (slot-major, coefficient order as listed), keeps the
 * ones whose completed algebra passes validate for all target families, and
 * deduplicates exact constant-tensor repeats. Throws BudgetError when the
 * assignment count exceeds the budget.
 */
void enumerate_structures(const SearchTemplate& t,
                          const std::function<void(const SearchHit&)>& emit);

std::vector<SearchHit> enumerate_structures(const SearchTemplate& t);

}  // namespace p3lie

#endif
