#include "hopf/lincomb.hpp"

namespace hopf {

void LinComb::add_term(const BasisId& id, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(id, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LinComb LinComb::operator+(const LinComb& o) const {
    if (field_ != o.field_) fail(Error::Kind::FieldMismatch, "adding combinations over different fields");
    LinComb r = *this;
    for (const auto& [id, c] : o.terms_) r.add_term(id, c);
    return r;
}

LinComb LinComb::operator-() const {
    LinComb r(field_);
    for (const auto& [id, c] : terms_) r.terms_.emplace(id, -c);
    return r;
}

LinComb LinComb::operator-(const LinComb& o) const { return *this + (-o); }

LinComb LinComb::scaled(const Scalar& c) const {
    LinComb r(field_);
    if (c.is_zero()) return r;
    for (const auto& [id, v] : terms_) {
        Scalar w = v * c;
        if (!w.is_zero()) r.terms_.emplace(id, std::move(w));
    }
    return r;
}

LinComb LinComb::tensor(const LinComb& o) const {
    if (field_ != o.field_) fail(Error::Kind::FieldMismatch, "tensoring combinations over different fields");
    LinComb r(field_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) r.add_term(BasisId::pair(a, b), ca * cb);
    return r;
}

std::string LinComb::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [id, c] : terms_) {
        std::string cs = c.to_string();
        if (!first) s += " + ";
        first = false;
        if (cs == "1") {
            s += id.to_string();
        } else if (cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos) {
            s += "(" + cs + ")*" + id.to_string();
        } else {
            s += cs + "*" + id.to_string();
        }
    }
    return s;
}

}  // namespace hopf
