#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hopf {

// Identifier of one basis element: an atom (symbolic name plus optional
// integer multi-index, e.g. g[3], X[2]) or a tensor tuple of identifiers
// (used for pair bases of products and for identity checking in tensor
// powers). Atoms sort before tuples; atoms by (name, index), tuples
// lexicographically by parts.
class BasisId {
public:
    BasisId() = default;
    explicit BasisId(std::string name, std::vector<long> index = {})
        : name_(std::move(name)), index_(std::move(index)) {}

    static BasisId tuple(std::vector<BasisId> parts);
    static BasisId pair(BasisId left, BasisId right);

    bool is_tuple() const { return !parts_.empty(); }
    const std::string& name() const { return name_; }
    const std::vector<long>& index() const { return index_; }
    const std::vector<BasisId>& parts() const { return parts_; }

    bool operator==(const BasisId& o) const {
        return name_ == o.name_ && index_ == o.index_ && parts_ == o.parts_;
    }
    bool operator!=(const BasisId& o) const { return !(*this == o); }
    bool operator<(const BasisId& o) const;

    // "g[3]", "x", "(g[1],X[2])"; nested tuples allowed.
    std::string to_string() const;
    static BasisId parse(std::string_view text);

private:
    std::string name_;
    std::vector<long> index_;
    std::vector<BasisId> parts_;
};

}  // namespace hopf
