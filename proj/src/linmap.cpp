#include "hopf/linmap.hpp"

namespace hopf {

LinMap LinMap::table(int arity, const Field& field, std::map<std::vector<BasisId>, LinComb> entries) {
    auto core = std::make_shared<Core>(arity, field);
    for (auto& [k, v] : entries) {
        if (static_cast<int>(k.size()) != arity) fail(Error::Kind::Domain, "table key arity mismatch");
        if (v.field() != field) fail(Error::Kind::FieldMismatch, "table value field mismatch");
    }
    core->table = std::move(entries);
    return LinMap(std::move(core));
}

LinMap LinMap::rule(int arity, const Field& field, Rule fn, SupportBound bound) {
    if (!bound)
        fail(Error::Kind::Domain, "rule-backed linear map requires a finiteness certificate");
    auto core = std::make_shared<Core>(arity, field);
    core->table_backed = false;
    core->rule = std::move(fn);
    core->bound = std::move(bound);
    return LinMap(std::move(core));
}

LinComb LinMap::apply(std::span<const BasisId> args) const {
    const Core& c = *core_;
    if (static_cast<int>(args.size()) != c.arity) fail(Error::Kind::Domain, "linear map arity mismatch");
    std::vector<BasisId> key(args.begin(), args.end());
    if (c.table_backed) {
        auto it = c.table.find(key);
        return it == c.table.end() ? LinComb::zero(c.field) : it->second;
    }
    {
        std::lock_guard<std::mutex> lock(c.memo_mutex);
        auto it = c.memo.find(key);
        if (it != c.memo.end()) return it->second;
    }
    LinComb out = c.rule(args);
    if (out.support_size() > c.bound(args))
        fail(Error::Kind::Domain, "rule-backed map exceeded its declared support bound");
    std::lock_guard<std::mutex> lock(c.memo_mutex);
    return c.memo.emplace(std::move(key), std::move(out)).first->second;
}

LinComb LinMap::apply(const BasisId& a) const { return apply(std::span<const BasisId>(&a, 1)); }

LinComb LinMap::apply(const BasisId& a, const BasisId& b) const {
    BasisId args[2] = {a, b};
    return apply(std::span<const BasisId>(args, 2));
}

LinComb LinMap::apply_lin(std::span<const LinComb> args) const {
    if (static_cast<int>(args.size()) != core_->arity)
        fail(Error::Kind::Domain, "linear map arity mismatch");
    LinComb acc = LinComb::zero(core_->field);
    std::vector<BasisId> ids(args.size());
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t pos, Scalar coeff) {
        if (pos == args.size()) {
            acc = acc + apply(std::span<const BasisId>(ids.data(), ids.size())).scaled(coeff);
            return;
        }
        for (const auto& [id, c] : args[pos].terms()) {
            ids[pos] = id;
            rec(pos + 1, coeff * c);
        }
    };
    rec(0, Scalar::one(core_->field));
    return acc;
}

LinComb LinMap::apply_lin(const LinComb& a) const { return apply_lin(std::span<const LinComb>(&a, 1)); }

LinComb LinMap::apply_lin(const LinComb& a, const LinComb& b) const {
    LinComb args[2] = {a, b};
    return apply_lin(std::span<const LinComb>(args, 2));
}

ScalarMap ScalarMap::table(int arity, const Field& field, std::map<std::vector<BasisId>, Scalar> entries) {
    auto core = std::make_shared<Core>(arity, field);
    for (auto& [k, v] : entries) {
        if (static_cast<int>(k.size()) != arity) fail(Error::Kind::Domain, "table key arity mismatch");
        if (v.field() != field) fail(Error::Kind::FieldMismatch, "table value field mismatch");
    }
    core->table = std::move(entries);
    return ScalarMap(std::move(core));
}

ScalarMap ScalarMap::rule(int arity, const Field& field, Rule fn) {
    auto core = std::make_shared<Core>(arity, field);
    core->table_backed = false;
    core->rule = std::move(fn);
    return ScalarMap(std::move(core));
}

Scalar ScalarMap::apply(std::span<const BasisId> args) const {
    const Core& c = *core_;
    if (static_cast<int>(args.size()) != c.arity) fail(Error::Kind::Domain, "scalar map arity mismatch");
    if (c.table_backed) {
        std::vector<BasisId> key(args.begin(), args.end());
        auto it = c.table.find(key);
        return it == c.table.end() ? Scalar::zero(c.field) : it->second;
    }
    return c.rule(args);
}

Scalar ScalarMap::apply(const BasisId& a) const { return apply(std::span<const BasisId>(&a, 1)); }

Scalar ScalarMap::apply(const BasisId& a, const BasisId& b) const {
    BasisId args[2] = {a, b};
    return apply(std::span<const BasisId>(args, 2));
}

Scalar ScalarMap::apply_lin(std::span<const LinComb> args) const {
    if (static_cast<int>(args.size()) != core_->arity)
        fail(Error::Kind::Domain, "scalar map arity mismatch");
    Scalar acc = Scalar::zero(core_->field);
    std::vector<BasisId> ids(args.size());
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t pos, Scalar coeff) {
        if (pos == args.size()) {
            acc = acc + apply(std::span<const BasisId>(ids.data(), ids.size())) * coeff;
            return;
        }
        for (const auto& [id, c] : args[pos].terms()) {
            ids[pos] = id;
            rec(pos + 1, coeff * c);
        }
    };
    rec(0, Scalar::one(core_->field));
    return acc;
}

Scalar ScalarMap::apply_lin(const LinComb& a) const { return apply_lin(std::span<const LinComb>(&a, 1)); }

Scalar ScalarMap::apply_lin(const LinComb& a, const LinComb& b) const {
    LinComb args[2] = {a, b};
    return apply_lin(std::span<const LinComb>(args, 2));
}

ScalarMap convolve(const ScalarMap& f, const ScalarMap& g, const LinMap& delta) {
    if (f.arity() != 1 || g.arity() != 1 || delta.arity() != 1)
        fail(Error::Kind::Domain, "convolution expects unary maps and a unary comultiplication");
    if (f.field() != g.field() || f.field() != delta.field())
        fail(Error::Kind::FieldMismatch, "convolution over mismatched fields");
    Field field = f.field();
    return ScalarMap::rule(1, field, [f, g, delta, field](std::span<const BasisId> args) {
        Scalar acc = Scalar::zero(field);
        for (const auto& [id, c] : delta.apply(args[0]).terms()) {
            if (!id.is_tuple() || id.parts().size() != 2)
                fail(Error::Kind::Domain, "comultiplication output is not a pair tensor");
            acc = acc + f.apply(id.parts()[0]) * g.apply(id.parts()[1]) * c;
        }
        return acc;
    });
}

}  // namespace hopf
