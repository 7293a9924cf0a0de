#include "p3lie/report.hpp"

#include <sstream>

namespace p3lie {

void LawReport::merge(const std::string& prefix, const LawReport& other) {
    for (const auto& [law, result] : other.entries_)
        entries_.emplace_back(prefix.empty() ? law : prefix + law, result);
}

bool LawReport::allPass() const {
    for (const auto& [law, result] : entries_)
        if (!result.pass) return false;
    return true;
}

const LawResult* LawReport::find(const std::string& law) const {
    for (const auto& [name, result] : entries_)
        if (name == law) return &result;
    return nullptr;
}

bool LawReport::pass(const std::string& law) const {
    const LawResult* r = find(law);
    if (!r) throw InputError("no such law in report: " + law);
    return r->pass;
}

std::vector<std::string> LawReport::failing() const {
    std::vector<std::string> out;
    for (const auto& [law, result] : entries_)
        if (!result.pass) out.push_back(law);
    return out;
}

bool EquivalenceReport::agree() const {
    if (statements.empty()) return true;
    const bool first = statements.front().second.allPass();
    for (const auto& [name, report] : statements)
        if (report.allPass() != first) return false;
    return true;
}

bool EquivalenceReport::allPass() const {
    for (const auto& [name, report] : statements)
        if (!report.allPass()) return false;
    return true;
}

std::string EquivalenceReport::summary() const {
    std::ostringstream os;
    for (const auto& [name, report] : statements)
        os << name << "=" << (report.allPass() ? "PASS" : "FAIL") << " ";
    os << (agree() ? "(agree)" : "(DISAGREE)");
    return os.str();
}

}  // namespace p3lie
