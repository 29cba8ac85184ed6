#pragma once

#include <string>
#include <vector>

#include "hopf/basis.hpp"

namespace hopf {

enum class CheckStatus { Pass, Fail, Error };

// One axiom line in a report. A failing entry carries a concrete witness
// tuple plus both evaluated sides, re-checkable independently.
struct CheckItem {
    std::string axiom;
    CheckStatus status = CheckStatus::Pass;
    std::vector<BasisId> witness;
    std::string lhs;
    std::string rhs;
    std::string detail;  // error text, or extra failures behind the flag

    bool passed() const { return status == CheckStatus::Pass; }
};

struct VerificationReport {
    std::string subject;
    std::string window_note;
    std::vector<CheckItem> items;

    bool all_pass() const {
        for (const auto& i : items)
            if (!i.passed()) return false;
        return true;
    }
    const CheckItem* find(const std::string& axiom) const {
        for (const auto& i : items)
            if (i.axiom == axiom) return &i;
        return nullptr;
    }
    std::string to_text() const;
};

}  // namespace hopf
