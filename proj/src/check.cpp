#include "hopf/check.hpp"

#include <atomic>

#include "hopf/util.hpp"

namespace hopf {

namespace {

std::vector<BasisId> decode_tuple(std::size_t index, const std::vector<std::vector<BasisId>>& windows) {
    std::vector<BasisId> tuple(windows.size());
    for (std::size_t k = windows.size(); k-- > 0;) {
        tuple[k] = windows[k][index % windows[k].size()];
        index /= windows[k].size();
    }
    return tuple;
}

}  // namespace

CheckItem check_over_tuples(std::string axiom, std::vector<std::vector<BasisId>> windows,
                            const TupleCheck& fn, const CheckOptions& opts) {
    CheckItem item;
    item.axiom = std::move(axiom);

    std::size_t total = 1;
    for (const auto& w : windows) {
        if (w.empty()) {
            item.status = CheckStatus::Error;
            item.detail = "empty window";
            return item;
        }
        total *= w.size();
    }

    std::vector<char> ok(total, 1);
    std::atomic<bool> errored{false};
    std::string error_text;
    std::mutex error_mutex;

    util::parallel_for(total, [&](std::size_t i) {
        if (errored.load(std::memory_order_relaxed)) return;
        try {
            auto tuple = decode_tuple(i, windows);
            ok[i] = fn(std::span<const BasisId>(tuple.data(), tuple.size()), nullptr, nullptr) ? 1 : 0;
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!errored.exchange(true)) error_text = e.what();
        }
    });

    if (errored) {
        item.status = CheckStatus::Error;
        item.detail = error_text;
        return item;
    }

    std::size_t failures = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (ok[i]) continue;
        ++failures;
        if (failures == 1) {
            item.status = CheckStatus::Fail;
            item.witness = decode_tuple(i, windows);
            std::string lhs, rhs;
            fn(std::span<const BasisId>(item.witness.data(), item.witness.size()), &lhs, &rhs);
            item.lhs = lhs;
            item.rhs = rhs;
            if (!opts.all_failures) break;
        } else if (opts.all_failures && failures <= 20) {
            auto t = decode_tuple(i, windows);
            std::string w;
            for (const auto& id : t) w += (w.empty() ? "" : ", ") + id.to_string();
            item.detail += (item.detail.empty() ? "" : "; ") + ("also (" + w + ")");
        }
    }
    if (opts.all_failures && failures > 1)
        item.detail += (item.detail.empty() ? "" : "; ") + std::to_string(failures) + " failing tuples total";
    return item;
}

LinComb tensor_square_mult(const HopfData& H, const LinComb& u, const LinComb& v) {
    LinComb out = LinComb::zero(H.field);
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            if (!a.is_tuple() || !b.is_tuple())
                fail(Error::Kind::Domain, "tensor-square product expects pair ids");
            LinComb left = H.mult.apply(a.parts()[0], b.parts()[0]);
            LinComb right = H.mult.apply(a.parts()[1], b.parts()[1]);
            out = out + left.tensor(right).scaled(ca * cb);
        }
    return out;
}

VerificationReport check_hopf(const HopfData& H, const CheckOptions& opts) {
    return check_hopf(H, H.basis.window_with_bound(opts.window_bound), opts);
}

VerificationReport check_hopf(const HopfData& H, const std::vector<BasisId>& window,
                              const CheckOptions& opts) {
    VerificationReport report;
    report.subject = H.name;
    report.window_note = H.basis.is_finite()
                             ? "complete basis (" + std::to_string(window.size()) + " elements)"
                             : "verified on window of " + std::to_string(window.size()) + " elements";

    const Field& k = H.field;
    auto one = Scalar::one(k);

    report.items.push_back(check_over_tuples(
        "unit-law", {window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb x = LinComb::basis(k, t[0]);
            LinComb l = H.mult.apply_lin(H.unit, x);
            LinComb r = H.mult.apply_lin(x, H.unit);
            bool good = l == x && r == x;
            if (!good && lhs) {
                *lhs = l.to_string() + " | " + r.to_string();
                *rhs = x.to_string();
            }
            return good;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "associativity", {window, window, window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb xy = H.mult.apply(t[0], t[1]);
            LinComb yz = H.mult.apply(t[1], t[2]);
            LinComb l = H.mult.apply_lin(xy, LinComb::basis(k, t[2]));
            LinComb r = H.mult.apply_lin(LinComb::basis(k, t[0]), yz);
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "counit-law", {window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb x = LinComb::basis(k, t[0]);
            LinComb left = LinComb::zero(k), right = LinComb::zero(k);
            for (const auto& term : sweedler(H, t[0], 2)) {
                left.add_term(term.factors[1], term.coeff * H.counit.apply(term.factors[0]));
                right.add_term(term.factors[0], term.coeff * H.counit.apply(term.factors[1]));
            }
            bool good = left == x && right == x;
            if (!good && lhs) {
                *lhs = left.to_string() + " | " + right.to_string();
                *rhs = x.to_string();
            }
            return good;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "coassociativity", {window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            // Expand (Delta (x) Id)Delta and (Id (x) Delta)Delta into flat
            // triples and compare.
            LinComb l3 = LinComb::zero(k), r3 = LinComb::zero(k);
            for (const auto& [id, c] : H.comult.apply(t[0]).terms()) {
                for (const auto& [id2, c2] : H.comult.apply(id.parts()[0]).terms())
                    l3.add_term(BasisId::tuple({id2.parts()[0], id2.parts()[1], id.parts()[1]}), c * c2);
                for (const auto& [id2, c2] : H.comult.apply(id.parts()[1]).terms())
                    r3.add_term(BasisId::tuple({id.parts()[0], id2.parts()[0], id2.parts()[1]}), c * c2);
            }
            if (l3 == r3) return true;
            if (lhs) {
                *lhs = l3.to_string();
                *rhs = r3.to_string();
            }
            return false;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "comult-algebra-map", {window, window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = H.comult.apply_lin(H.mult.apply(t[0], t[1]));
            LinComb r = tensor_square_mult(H, H.comult.apply(t[0]), H.comult.apply(t[1]));
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "counit-algebra-map", {window, window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            Scalar l = H.counit.apply_lin(H.mult.apply(t[0], t[1]));
            Scalar r = H.counit.apply(t[0]) * H.counit.apply(t[1]);
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    {
        CheckItem item;
        item.axiom = "unit-normalization";
        LinComb d1 = H.comult.apply_lin(H.unit);
        LinComb expect = H.unit.tensor(H.unit);
        Scalar e1 = H.counit.apply_lin(H.unit);
        if (d1 != expect || e1 != one) {
            item.status = CheckStatus::Fail;
            item.lhs = d1.to_string() + " | " + e1.to_string();
            item.rhs = expect.to_string() + " | 1";
        }
        report.items.push_back(std::move(item));
    }

    if (H.has_antipode()) {
        report.items.push_back(check_over_tuples(
            "antipode", {window},
            [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
                LinComb left = LinComb::zero(k), right = LinComb::zero(k);
                for (const auto& term : sweedler(H, t[0], 2)) {
                    LinComb s1 = H.antipode->apply(term.factors[0]);
                    LinComb s2 = H.antipode->apply(term.factors[1]);
                    left = left + H.mult.apply_lin(s1, LinComb::basis(k, term.factors[1])).scaled(term.coeff);
                    right = right + H.mult.apply_lin(LinComb::basis(k, term.factors[0]), s2).scaled(term.coeff);
                }
                LinComb expect = H.unit.scaled(H.counit.apply(t[0]));
                bool good = left == expect && right == expect;
                if (!good && lhs) {
                    *lhs = left.to_string() + " | " + right.to_string();
                    *rhs = expect.to_string();
                }
                return good;
            },
            opts));
    }

    return report;
}

VerificationReport structure_equal(const HopfData& A, const HopfData& B,
                                   const std::vector<BasisId>& window) {
    VerificationReport report;
    report.subject = A.name + " == " + B.name;
    report.window_note = "entrywise on " + std::to_string(window.size()) + " elements";

    {
        CheckItem item;
        item.axiom = "unit-equal";
        if (A.unit != B.unit) {
            item.status = CheckStatus::Fail;
            item.lhs = A.unit.to_string();
            item.rhs = B.unit.to_string();
        }
        report.items.push_back(std::move(item));
    }

    report.items.push_back(check_over_tuples(
        "mult-equal", {window, window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = A.mult.apply(t[0], t[1]);
            LinComb r = B.mult.apply(t[0], t[1]);
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        }));

    report.items.push_back(check_over_tuples(
        "comult-equal", {window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = A.comult.apply(t[0]);
            LinComb r = B.comult.apply(t[0]);
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        }));

    report.items.push_back(check_over_tuples(
        "counit-equal", {window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            Scalar l = A.counit.apply(t[0]);
            Scalar r = B.counit.apply(t[0]);
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        }));

    if (A.has_antipode() && B.has_antipode()) {
        report.items.push_back(check_over_tuples(
            "antipode-equal", {window},
            [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
                LinComb l = A.antipode->apply(t[0]);
                LinComb r = B.antipode->apply(t[0]);
                if (l == r) return true;
                if (lhs) {
                    *lhs = l.to_string();
                    *rhs = r.to_string();
                }
                return false;
            }));
    }

    return report;
}

}  // namespace hopf
