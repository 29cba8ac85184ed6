#pragma once

#include <functional>
#include <mutex>
#include <span>

#include "hopf/lincomb.hpp"

namespace hopf {

// Linear map on n-fold tensor inputs, given on basis tuples and extended
// multilinearly. Either table-backed (finite sparse table, absent keys are
// zero) or rule-backed (total pure function). Rule-backed maps must declare
// a finiteness certificate bounding output support per input; evaluations
// are memoized behind a mutex so shared concurrent use stays cheap. Handles
// share one immutable core, so copies are cheap and thread-safe.
class LinMap {
public:
    using Rule = std::function<LinComb(std::span<const BasisId>)>;
    using SupportBound = std::function<std::size_t(std::span<const BasisId>)>;

    static LinMap table(int arity, const Field& field,
                        std::map<std::vector<BasisId>, LinComb> entries);
    static LinMap rule(int arity, const Field& field, Rule fn, SupportBound bound);

    int arity() const { return core_->arity; }
    const Field& field() const { return core_->field; }
    bool is_table_backed() const { return core_->table_backed; }
    const std::map<std::vector<BasisId>, LinComb>& entries() const { return core_->table; }

    LinComb apply(std::span<const BasisId> args) const;
    LinComb apply(const BasisId& a) const;
    LinComb apply(const BasisId& a, const BasisId& b) const;

    // Multilinear extension.
    LinComb apply_lin(std::span<const LinComb> args) const;
    LinComb apply_lin(const LinComb& a) const;
    LinComb apply_lin(const LinComb& a, const LinComb& b) const;

private:
    struct Core {
        int arity;
        Field field;
        bool table_backed = true;
        std::map<std::vector<BasisId>, LinComb> table;
        Rule rule;
        SupportBound bound;
        mutable std::map<std::vector<BasisId>, LinComb> memo;
        mutable std::mutex memo_mutex;
        Core(int a, Field f) : arity(a), field(std::move(f)) {}
    };
    explicit LinMap(std::shared_ptr<Core> c) : core_(std::move(c)) {}
    std::shared_ptr<Core> core_;
};

// Scalar-valued (multi)linear map on basis tuples, same backing scheme.
class ScalarMap {
public:
    using Rule = std::function<Scalar(std::span<const BasisId>)>;

    static ScalarMap table(int arity, const Field& field,
                           std::map<std::vector<BasisId>, Scalar> entries);
    static ScalarMap rule(int arity, const Field& field, Rule fn);

    int arity() const { return core_->arity; }
    const Field& field() const { return core_->field; }
    bool is_table_backed() const { return core_->table_backed; }
    const std::map<std::vector<BasisId>, Scalar>& entries() const { return core_->table; }

    Scalar apply(std::span<const BasisId> args) const;
    Scalar apply(const BasisId& a) const;
    Scalar apply(const BasisId& a, const BasisId& b) const;

    Scalar apply_lin(std::span<const LinComb> args) const;
    Scalar apply_lin(const LinComb& a) const;
    Scalar apply_lin(const LinComb& a, const LinComb& b) const;

private:
    struct Core {
        int arity;
        Field field;
        bool table_backed = true;
        std::map<std::vector<BasisId>, Scalar> table;
        Rule rule;
        Core(int a, Field f) : arity(a), field(std::move(f)) {}
    };
    explicit ScalarMap(std::shared_ptr<const Core> c) : core_(std::move(c)) {}
    std::shared_ptr<const Core> core_;
};

// Convolution product of k-valued maps on a coalgebra whose comultiplication
// is `delta`: (f*g)(c) = f(c1) g(c2). Returns a rule-backed map; associative
// with unit the counit.
ScalarMap convolve(const ScalarMap& f, const ScalarMap& g, const LinMap& delta);

}  // namespace hopf
