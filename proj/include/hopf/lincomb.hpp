#pragma once

#include <map>
#include <string>

#include "hopf/basis.hpp"
#include "hopf/scalar.hpp"

namespace hopf {

// Finitely supported linear combination of basis elements. Canonical: no
// stored zero coefficients, deterministic (sorted) term order.
class LinComb {
public:
    explicit LinComb(Field field) : field_(std::move(field)) {}

    static LinComb zero(const Field& f) { return LinComb(f); }
    static LinComb basis(const Field& f, BasisId id) {
        LinComb c(f);
        c.terms_.emplace(std::move(id), Scalar::one(f));
        return c;
    }
    static LinComb monomial(const Field& f, BasisId id, Scalar coeff) {
        LinComb c(f);
        if (!coeff.is_zero()) c.terms_.emplace(std::move(id), std::move(coeff));
        return c;
    }

    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    // Ref-qualified so iterating the terms of a temporary stays valid: the
    // rvalue overload hands the map out by value.
    const std::map<BasisId, Scalar>& terms() const& { return terms_; }
    std::map<BasisId, Scalar> terms() && { return std::move(terms_); }

    Scalar coeff(const BasisId& id) const {
        auto it = terms_.find(id);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    void add_term(const BasisId& id, const Scalar& c);

    LinComb operator+(const LinComb& o) const;
    LinComb operator-(const LinComb& o) const;
    LinComb operator-() const;
    LinComb scaled(const Scalar& c) const;

    // Tensor product: pair-indexed basis ids.
    LinComb tensor(const LinComb& o) const;

    bool operator==(const LinComb& o) const { return field_ == o.field_ && terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Field field_;
    std::map<BasisId, Scalar> terms_;
};

}  // namespace hopf
