#include "hopf/report.hpp"

namespace hopf {

std::string VerificationReport::to_text() const {
    std::string out;
    out += subject + " [" + window_note + "]\n";
    for (const auto& item : items) {
        const char* tag = item.status == CheckStatus::Pass   ? "PASS"
                          : item.status == CheckStatus::Fail ? "FAIL"
                                                             : "ERROR";
        out += "  " + std::string(tag) + "  " + item.axiom;
        if (item.status == CheckStatus::Fail) {
            std::string w;
            for (const auto& id : item.witness) w += (w.empty() ? "" : ", ") + id.to_string();
            if (!w.empty()) out += "  at (" + w + ")";
            if (!item.lhs.empty() || !item.rhs.empty())
                out += "  lhs = " + item.lhs + "  rhs = " + item.rhs;
        }
        if (!item.detail.empty()) out += "  [" + item.detail + "]";
        out += "\n";
    }
    return out;
}

}  // namespace hopf
