#include "hopf/pairings.hpp"

#include "hopf/dual.hpp"

namespace hopf {

BilinearForm::BilinearForm(std::string name, HopfPtr left, HopfPtr right, ScalarMap values)
    : name_(std::move(name)), left_(std::move(left)), right_(std::move(right)), values_(std::move(values)) {
    if (values_.arity() != 2) fail(Error::Kind::Domain, "bilinear form needs an arity-2 value map");
    if (left_->field != right_->field || left_->field != values_.field())
        fail(Error::Kind::FieldMismatch, "bilinear form over mismatched fields");
}

BilinearForm BilinearForm::from_table(std::string name, HopfPtr left, HopfPtr right,
                                      std::map<std::vector<BasisId>, Scalar> entries, Default def) {
    Field f = left->field;
    if (def == Default::Zero)
        return BilinearForm(std::move(name), left, right, ScalarMap::table(2, f, std::move(entries)));
    auto table = std::make_shared<const std::map<std::vector<BasisId>, Scalar>>(std::move(entries));
    HopfPtr l = left, r = right;
    ScalarMap values = ScalarMap::rule(2, f, [table, l, r](std::span<const BasisId> args) {
        auto it = table->find(std::vector<BasisId>(args.begin(), args.end()));
        if (it != table->end()) return it->second;
        return l->counit.apply(args[0]) * r->counit.apply(args[1]);
    });
    return BilinearForm(std::move(name), left, right, std::move(values));
}

BilinearForm BilinearForm::counit_product(HopfPtr left, HopfPtr right) {
    return from_table("counit-product", left, right, {}, Default::CounitProduct);
}

std::map<std::vector<BasisId>, Scalar> BilinearForm::table(const std::vector<BasisId>& wl,
                                                           const std::vector<BasisId>& wr) const {
    std::map<std::vector<BasisId>, Scalar> out;
    for (const auto& a : wl)
        for (const auto& b : wr) out.emplace(std::vector<BasisId>{a, b}, values_.apply(a, b));
    return out;
}

BilinearForm BilinearForm::renamed(std::string name) const {
    BilinearForm copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

namespace {

void append_pairing_axioms(VerificationReport& report, const BilinearForm& form,
                           const std::vector<BasisId>& wl, const std::vector<BasisId>& wr,
                           const CheckOptions& opts) {
    const HopfData& A = *form.left();
    const HopfData& H = *form.right();
    const Field& k = form.field();

    report.items.push_back(check_over_tuples(
        "pairing-mult-left", {wl, wl, wr},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            Scalar l = form(A.mult.apply(t[0], t[1]), LinComb::basis(k, t[2]));
            Scalar r = Scalar::zero(k);
            for (const auto& z : sweedler(H, t[2], 2))
                r = r + form(t[0], z.factors[0]) * form(t[1], z.factors[1]) * z.coeff;
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "pairing-unit-left", {wr},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            Scalar l = form(A.unit, LinComb::basis(k, t[0]));
            Scalar r = H.counit.apply(t[0]);
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "pairing-mult-right", {wl, wr, wr},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            // lambda(x, l z) = lambda(x1, z) lambda(x2, l)
            Scalar l = form(LinComb::basis(k, t[0]), H.mult.apply(t[1], t[2]));
            Scalar r = Scalar::zero(k);
            for (const auto& x : sweedler(A, t[0], 2))
                r = r + form(x.factors[0], t[2]) * form(x.factors[1], t[1]) * x.coeff;
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "pairing-unit-right", {wl},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            Scalar l = form(LinComb::basis(k, t[0]), H.unit);
            Scalar r = A.counit.apply(t[0]);
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));
}

// Search for a two-sided convolution inverse of p on the window by an exact
// linear solve; used when no antipode provides the inverse directly.
CheckItem invertibility_by_solve(const BilinearForm& p, const std::vector<BasisId>& window) {
    CheckItem item;
    item.axiom = "convolution-invertible";
    const HopfData& A = *p.left();
    const HopfData& H = *p.right();
    const Field& k = p.field();

    std::map<std::pair<BasisId, BasisId>, std::size_t> slot;
    for (const auto& x : window)
        for (const auto& y : window) slot.emplace(std::make_pair(x, y), slot.size());
    std::size_t n = slot.size();

    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    auto add_equation = [&](const BasisId& x, const BasisId& y, bool p_first) {
        std::vector<Scalar> row(n, Scalar::zero(k));
        for (const auto& xs : sweedler(A, x, 2))
            for (const auto& ys : sweedler(H, y, 2)) {
                const BasisId& px = p_first ? xs.factors[0] : xs.factors[1];
                const BasisId& py = p_first ? ys.factors[0] : ys.factors[1];
                const BasisId& rx = p_first ? xs.factors[1] : xs.factors[0];
                const BasisId& ry = p_first ? ys.factors[1] : ys.factors[0];
                auto it = slot.find(std::make_pair(rx, ry));
                if (it == slot.end()) fail(Error::Kind::Domain, "window is not split-closed");
                row[it->second] = row[it->second] + p(px, py) * xs.coeff * ys.coeff;
            }
        rows.push_back(std::move(row));
        rhs.push_back(A.counit.apply(x) * H.counit.apply(y));
    };

    try {
        for (const auto& x : window)
            for (const auto& y : window) {
                add_equation(x, y, true);
                add_equation(x, y, false);
            }
        ScalarMatrix M = ScalarMatrix::zero(k, rows.size(), n);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) M.at(r, c) = rows[r][c];
        if (!solve_linear(std::move(M), std::move(rhs))) {
            item.status = CheckStatus::Fail;
            item.lhs = "no convolution inverse on the window";
            item.rhs = "two-sided inverse required";
        }
    } catch (const std::exception& e) {
        item.status = CheckStatus::Error;
        item.detail = e.what();
    }
    return item;
}

}  // namespace

VerificationReport check_skew_pairing(const BilinearForm& lambda, const std::vector<BasisId>& wl,
                                      const std::vector<BasisId>& wr, const CheckOptions& opts) {
    VerificationReport report;
    report.subject = "skew pairing " + lambda.name() + " on (" + lambda.left()->name + ", " +
                     lambda.right()->name + ")";
    report.window_note = std::to_string(wl.size()) + " x " + std::to_string(wr.size()) + " window";
    append_pairing_axioms(report, lambda, wl, wr, opts);
    return report;
}

VerificationReport check_skew_pairing(const BilinearForm& lambda, const CheckOptions& opts) {
    return check_skew_pairing(lambda, lambda.left()->basis.window_with_bound(opts.window_bound),
                              lambda.right()->basis.window_with_bound(opts.window_bound), opts);
}

VerificationReport check_braiding(const BilinearForm& p, const std::vector<BasisId>& window,
                                  const CheckOptions& opts) {
    VerificationReport report;
    report.subject = "braiding " + p.name() + " on " + p.left()->name;
    report.window_note = std::to_string(window.size()) + "-element window";
    if (p.left() != p.right() && !(p.left()->name == p.right()->name))
        fail(Error::Kind::Domain, "a braiding lives on one algebra; got " + p.left()->name + " vs " +
                                      p.right()->name);

    const HopfData& A = *p.left();
    const Field& k = p.field();

    append_pairing_axioms(report, p, window, window, opts);

    report.items.push_back(check_over_tuples(
        "braiding-commutation", {window, window},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = LinComb::zero(k), r = LinComb::zero(k);
            for (const auto& xs : sweedler(A, t[0], 2))
                for (const auto& ys : sweedler(A, t[1], 2)) {
                    Scalar c = xs.coeff * ys.coeff;
                    l = l + A.mult.apply(xs.factors[1], ys.factors[1])
                                .scaled(c * p(xs.factors[0], ys.factors[0]));
                    r = r + A.mult.apply(ys.factors[0], xs.factors[0])
                                .scaled(c * p(xs.factors[1], ys.factors[1]));
                }
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    if (A.has_antipode()) {
        BilinearForm inv = convolution_inverse(p);
        report.items.push_back(check_over_tuples(
            "convolution-invertible", {window, window},
            [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
                Scalar want = A.counit.apply(t[0]) * A.counit.apply(t[1]);
                Scalar l = Scalar::zero(k), r = Scalar::zero(k);
                for (const auto& xs : sweedler(A, t[0], 2))
                    for (const auto& ys : sweedler(A, t[1], 2)) {
                        Scalar c = xs.coeff * ys.coeff;
                        l = l + p(xs.factors[0], ys.factors[0]) * inv(xs.factors[1], ys.factors[1]) * c;
                        r = r + inv(xs.factors[0], ys.factors[0]) * p(xs.factors[1], ys.factors[1]) * c;
                    }
                if (l == want && r == want) return true;
                if (lhs) {
                    *lhs = l.to_string() + " | " + r.to_string();
                    *rhs = want.to_string();
                }
                return false;
            },
            opts));
    } else {
        report.items.push_back(invertibility_by_solve(p, window));
    }

    return report;
}

VerificationReport check_braiding(const BilinearForm& p, const CheckOptions& opts) {
    return check_braiding(p, p.left()->basis.window_with_bound(opts.window_bound), opts);
}

BilinearForm convolution_inverse(const BilinearForm& lambda) {
    if (!lambda.left()->has_antipode())
        fail(Error::Kind::Domain,
             "convolution inverse needs an antipode on " + lambda.left()->name);
    HopfPtr A = lambda.left();
    Field k = lambda.field();
    ScalarMap base = lambda.values();
    LinMap S = *A->antipode;
    ScalarMap values = ScalarMap::rule(2, k, [base, S, k](std::span<const BasisId> args) {
        Scalar acc = Scalar::zero(k);
        for (const auto& [id, c] : S.apply(args[0]).terms()) acc = acc + base.apply(id, args[1]) * c;
        return acc;
    });
    return BilinearForm(lambda.name() + "^-1", A, lambda.right(), std::move(values));
}

BilinearForm flip_dual(const BilinearForm& lambda) {
    if (!lambda.left()->has_antipode())
        fail(Error::Kind::Domain, "flip dual needs an antipode on " + lambda.left()->name);
    HopfPtr A = lambda.left();
    Field k = lambda.field();
    ScalarMap base = lambda.values();
    LinMap S = *A->antipode;
    ScalarMap values = ScalarMap::rule(2, k, [base, S, k](std::span<const BasisId> args) {
        // (h, a) -> lambda(S(a), h)
        Scalar acc = Scalar::zero(k);
        for (const auto& [id, c] : S.apply(args[1]).terms()) acc = acc + base.apply(id, args[0]) * c;
        return acc;
    });
    return BilinearForm(lambda.name() + "~", lambda.right(), A, std::move(values));
}

BilinearForm convolve_forms(const BilinearForm& f, const BilinearForm& g) {
    if (f.left() != g.left() || f.right() != g.right())
        fail(Error::Kind::Domain, "convolving forms over different algebra pairs");
    HopfPtr A = f.left(), H = f.right();
    Field k = f.field();
    ScalarMap fv = f.values(), gv = g.values();
    auto dA = A->comult, dH = H->comult;
    ScalarMap values = ScalarMap::rule(2, k, [fv, gv, dA, dH, k](std::span<const BasisId> args) {
        Scalar acc = Scalar::zero(k);
        for (const auto& [pa, ca] : dA.apply(args[0]).terms())
            for (const auto& [ph, ch] : dH.apply(args[1]).terms())
                acc = acc + fv.apply(pa.parts()[0], ph.parts()[0]) *
                                gv.apply(pa.parts()[1], ph.parts()[1]) * ca * ch;
        return acc;
    });
    return BilinearForm(f.name() + "*" + g.name(), A, H, std::move(values));
}

VerificationReport check_tau_on_kX(const BilinearForm& tau, const std::vector<BasisId>& window,
                                   const CheckOptions& opts) {
    if (tau.field().kind() == FieldKind::Prime)
        fail(Error::Kind::Domain,
             "the binomial-coalgebra braiding needs characteristic zero (factorials may vanish)");
    return check_braiding(tau, window, opts);
}

BilinearForm extend_pairing_from_generators(
    std::string name, HopfPtr left, HopfPtr right,
    const std::map<std::vector<BasisId>, Scalar>& generator_values,
    const std::map<BasisId, std::vector<BasisId>>& left_letters,
    const std::map<BasisId, std::vector<BasisId>>& right_letters) {
    if (!left->basis.is_finite() || !right->basis.is_finite())
        fail(Error::Kind::Domain, "generator extension needs finite bases");

    Field k = left->field;

    // letters -> id lookup for subwords.
    auto invert = [](const std::map<BasisId, std::vector<BasisId>>& m) {
        std::map<std::vector<BasisId>, BasisId> inv;
        for (const auto& [id, letters] : m) inv.emplace(letters, id);
        return inv;
    };
    auto left_of = std::make_shared<const std::map<std::vector<BasisId>, BasisId>>(invert(left_letters));
    auto right_of = std::make_shared<const std::map<std::vector<BasisId>, BasisId>>(invert(right_letters));
    auto lw = std::make_shared<const std::map<BasisId, std::vector<BasisId>>>(left_letters);
    auto rw = std::make_shared<const std::map<BasisId, std::vector<BasisId>>>(right_letters);
    auto gen = std::make_shared<const std::map<std::vector<BasisId>, Scalar>>(generator_values);

    struct Evaluator {
        explicit Evaluator(Field field) : k(std::move(field)) {}
        Field k;
        HopfPtr A, H;
        std::shared_ptr<const std::map<BasisId, std::vector<BasisId>>> lw, rw;
        std::shared_ptr<const std::map<std::vector<BasisId>, BasisId>> left_of, right_of;
        std::shared_ptr<const std::map<std::vector<BasisId>, Scalar>> gen;
        mutable std::map<std::pair<BasisId, BasisId>, Scalar> memo;
        mutable std::mutex mutex;

        const std::vector<BasisId>& letters(const BasisId& id, bool is_left) const {
            const auto& m = is_left ? *lw : *rw;
            auto it = m.find(id);
            if (it == m.end()) fail(Error::Kind::Domain, "no letter word for " + id.to_string());
            return it->second;
        }
        BasisId word_id(const std::vector<BasisId>& letters, bool is_left) const {
            const auto& m = is_left ? *left_of : *right_of;
            auto it = m.find(letters);
            if (it == m.end()) fail(Error::Kind::Domain, "subword is not a basis word");
            return it->second;
        }

        Scalar eval(const BasisId& u, const BasisId& z) const {
            {
                std::lock_guard<std::mutex> lock(mutex);
                auto it = memo.find({u, z});
                if (it != memo.end()) return it->second;
            }
            Scalar out = compute(u, z);
            std::lock_guard<std::mutex> lock(mutex);
            return memo.emplace(std::make_pair(u, z), std::move(out)).first->second;
        }

        Scalar compute(const BasisId& u, const BasisId& z) const {
            const auto& ul = letters(u, true);
            const auto& zl = letters(z, false);
            if (ul.empty()) return H->counit.apply(z);
            if (zl.empty()) return A->counit.apply(u);
            if (ul.size() == 1 && zl.size() == 1) {
                auto it = gen->find({u, z});
                return it == gen->end() ? Scalar::zero(k) : it->second;
            }
            if (ul.size() == 1) {
                // Peel the right word: lambda(u, b z') = lambda(u1, z') lambda(u2, b).
                BasisId b = zl.front();
                BasisId ztail = word_id(std::vector<BasisId>(zl.begin() + 1, zl.end()), false);
                Scalar acc = Scalar::zero(k);
                for (const auto& t : sweedler(*A, u, 2))
                    acc = acc + eval(t.factors[0], ztail) * eval(t.factors[1], b) * t.coeff;
                return acc;
            }
            // Peel the left word: lambda(a u', z) = lambda(a, z1) lambda(u', z2).
            BasisId a = ul.front();
            BasisId utail = word_id(std::vector<BasisId>(ul.begin() + 1, ul.end()), true);
            Scalar acc = Scalar::zero(k);
            for (const auto& t : sweedler(*H, z, 2))
                acc = acc + eval(a, t.factors[0]) * eval(utail, t.factors[1]) * t.coeff;
            return acc;
        }
    };

    auto ev = std::make_shared<Evaluator>(k);
    ev->A = left;
    ev->H = right;
    ev->lw = lw;
    ev->rw = rw;
    ev->left_of = left_of;
    ev->right_of = right_of;
    ev->gen = gen;

    // Materialize the full table so later evaluation is a lookup.
    std::map<std::vector<BasisId>, Scalar> table;
    for (const auto& a : left->basis.elements())
        for (const auto& b : right->basis.elements())
            table.emplace(std::vector<BasisId>{a, b}, ev->eval(a, b));
    return BilinearForm::from_table(std::move(name), left, right, std::move(table));
}

}  // namespace hopf
