#ifndef P3LIE_REPORT_HPP
#define P3LIE_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p3lie/tensor.hpp"

namespace p3lie {

/*
 * Witness of a failed law: the first basis tuple (lexicographic scan over the
 * law's variables in their displayed order) where the two sides differ, with
 * both values flattened to coordinate vectors.
 */
struct Witness {
    std::vector<int> indices;  // 0-based
    Vec lhs, rhs;
};

struct LawResult {
    bool pass = true;
    std::optional<Witness> witness;

    static LawResult ok() { return {}; }
    static LawResult fail(Witness w) { return {false, std::move(w)}; }
};

class LawReport {
public:
    void add(std::string law, LawResult r) { entries_.emplace_back(std::move(law), std::move(r)); }
    void merge(const std::string& prefix, const LawReport& other);

    bool allPass() const;
    const LawResult* find(const std::string& law) const;
    bool pass(const std::string& law) const;  // throws InputError if the law is absent

    const std::vector<std::pair<std::string, LawResult>>& entries() const { return entries_; }
    std::vector<std::string> failing() const;

private:
    std::vector<std::pair<std::string, LawResult>> entries_;
};

// Verdicts of independently evaluated statements that a theorem asserts
// equivalent; agree() is the instance-wise realization of the theorem.
struct EquivalenceReport {
    std::vector<std::pair<std::string, LawReport>> statements;

    bool agree() const;
    bool allPass() const;
    std::string summary() const;
};

struct PreconditionError : std::runtime_error {
    PreconditionError(const std::string& what, LawReport r)
        : std::runtime_error(what), report(std::move(r)) {}
    LawReport report;
};

struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, unsigned long long needed)
        : std::runtime_error(what), required(needed) {}
    unsigned long long required;
};

}  // namespace p3lie

#endif
