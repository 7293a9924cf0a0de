#include "p3lie/search.hpp"

#include <limits>
#include <set>
#include <sstream>

namespace p3lie {

namespace {

// cells touched when a slot is written together with its (anti)symmetry orbit
std::vector<std::pair<std::array<int, 4>, int>> orbit(const SlotRef& s) {
    std::vector<std::pair<std::array<int, 4>, int>> cells;
    if (!s.isBracket) {
        const int i = s.idx[0], j = s.idx[1], l = s.idx[2];
        cells.push_back({{i, j, l, 0}, 1});
        if (i != j) cells.push_back({{j, i, l, 0}, 1});
    } else {
        const int i = s.idx[0], j = s.idx[1], k = s.idx[2], l = s.idx[3];
        const int perm[6][3] = {{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}};
        const int sgn[6] = {1, 1, 1, -1, -1, -1};
        for (int p = 0; p < 6; ++p) {
            std::array<int, 4> cell{perm[p][0], perm[p][1], perm[p][2], l};
            bool seen = false;
            for (const auto& [prev, prevSgn] : cells)
                if (prev == cell) {
                    seen = true;
                    if (prevSgn != sgn[p])
                        throw InputError("degenerate bracket slot: repeated index forces zero");
                    break;
                }
            if (!seen) cells.push_back({cell, sgn[p]});
        }
    }
    return cells;
}

void writeSlot(Algebra& alg, const SlotRef& s, const Scalar& v) {
    for (const auto& [cell, sgn] : orbit(s)) {
        Scalar val = sgn > 0 ? v : -v;
        if (!s.isBracket)
            alg.product.at({cell[0], cell[1], cell[2]}) = std::move(val);
        else
            alg.bracket.at({cell[0], cell[1], cell[2], cell[3]}) = std::move(val);
    }
}

std::string constantsKey(const Algebra& alg) {
    std::ostringstream os;
    for (const Scalar& s : alg.product.data()) os << s.str() << ",";
    os << "|";
    for (const Scalar& s : alg.bracket.data()) os << s.str() << ",";
    return os.str();
}

void checkTemplate(const SearchTemplate& t) {
    if (t.dim < 0) throw InputError("template dim negative");
    if (t.coefficients.empty() && !t.freeSlots.empty())
        throw InputError("template has free slots but no coefficients");
    std::set<std::pair<bool, std::array<int, 4>>> touched;
    auto mark = [&](const SlotRef& s, const char* what) {
        for (const auto& [cell, sgn] : orbit(s)) {
            (void)sgn;
            if (!touched.insert({s.isBracket, cell}).second)
                throw InputError(std::string("template slots overlap after closure (") + what + ")");
        }
    };
    for (const auto& [slot, value] : t.fixed) mark(slot, "fixed");
    for (const SlotRef& slot : t.freeSlots) mark(slot, "free");
}

}  // namespace

void enumerate_structures(const SearchTemplate& t,
                          const std::function<void(const SearchHit&)>& emit) {
    checkTemplate(t);
    const std::size_t slots = t.freeSlots.size();
    const unsigned long long base = t.coefficients.empty() ? 1 : t.coefficients.size();
    unsigned long long count = 1;
    for (std::size_t s = 0; s < slots; ++s) {
        if (count > std::numeric_limits<unsigned long long>::max() / base) {
            count = std::numeric_limits<unsigned long long>::max();
            break;
        }
        count *= base;
    }
    if (count > t.budget)
        throw BudgetError("candidate count " + std::to_string(count) + " exceeds budget " +
                              std::to_string(t.budget),
                          count);

    Algebra seed = Algebra::zero(t.dim);
    for (const auto& [slot, value] : t.fixed) writeSlot(seed, slot, value);

    std::set<std::string> emitted;
    std::vector<std::size_t> odo(slots, 0);
    while (true) {
        SearchHit hit;
        hit.algebra = seed;
        hit.assignment.reserve(slots);
        for (std::size_t s = 0; s < slots; ++s) {
            const Scalar& v = t.coefficients[odo[s]];
            hit.assignment.push_back(v);
            writeSlot(hit.algebra, t.freeSlots[s], v);
        }

        bool pass = true;
        for (Family f : t.families)
            if (!validate(hit.algebra, f).allPass()) {
                pass = false;
                break;
            }
        if (pass) {
            // soundness re-check on emission, then exact dedup
            for (Family f : t.families)
                if (!validate(hit.algebra, f).allPass())
                    throw std::logic_error("search emission failed soundness re-check");
            if (emitted.insert(constantsKey(hit.algebra)).second) emit(hit);
        }

        if (slots == 0) break;
        std::size_t k = slots;
        while (k > 0) {
            if (++odo[k - 1] < t.coefficients.size()) break;
            odo[--k] = 0;
        }
        if (k == 0) break;
    }
}

std::vector<SearchHit> enumerate_structures(const SearchTemplate& t) {
    std::vector<SearchHit> hits;
    enumerate_structures(t, [&](const SearchHit& h) { hits.push_back(h); });
    return hits;
}

}  // namespace p3lie
