#include "hopf/products.hpp"

#include "hopf/dual.hpp"

namespace hopf {

namespace {

LinMap finite_or_rule(int arity, const Field& f, bool finite,
                      const std::vector<std::vector<BasisId>>& domain,
                      const std::function<LinComb(std::span<const BasisId>)>& fn,
                      const LinMap::SupportBound& bound) {
    if (!finite) return LinMap::rule(arity, f, fn, bound);
    std::map<std::vector<BasisId>, LinComb> table;
    std::vector<BasisId> key(arity);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == arity) {
            LinComb v = fn(std::span<const BasisId>(key.data(), key.size()));
            if (!v.is_zero()) table.emplace(key, std::move(v));
            return;
        }
        for (const auto& id : domain[pos]) {
            key[pos] = id;
            rec(pos + 1);
        }
    };
    rec(0);
    return LinMap::table(arity, f, std::move(table));
}

}  // namespace

LinMap trivial_ract(HopfPtr A, HopfPtr H) {
    Field f = A->field;
    auto fn = [A, H, f](std::span<const BasisId> args) {
        return LinComb::monomial(f, args[0], A->counit.apply(args[1]));
    };
    if (A->basis.is_finite() && H->basis.is_finite())
        return finite_or_rule(2, f, true, {H->basis.elements(), A->basis.elements()}, fn, {});
    return LinMap::rule(2, f, fn, [](std::span<const BasisId>) { return std::size_t{1}; });
}

LinMap trivial_lact(HopfPtr A, HopfPtr H) {
    Field f = A->field;
    auto fn = [H, f](std::span<const BasisId> args) {
        return LinComb::monomial(f, args[1], H->counit.apply(args[0]));
    };
    if (A->basis.is_finite() && H->basis.is_finite())
        return finite_or_rule(2, f, true, {H->basis.elements(), A->basis.elements()}, fn, {});
    return LinMap::rule(2, f, fn, [](std::span<const BasisId>) { return std::size_t{1}; });
}

LinMap trivial_cocycle(HopfPtr A, HopfPtr H) {
    Field f = A->field;
    auto fn = [A, H, f](std::span<const BasisId> args) {
        return A->unit.scaled(H->counit.apply(args[0]) * H->counit.apply(args[1]));
    };
    if (H->basis.is_finite())
        return finite_or_rule(2, f, true, {H->basis.elements(), H->basis.elements()}, fn, {});
    return LinMap::rule(2, f, fn, [A](std::span<const BasisId>) { return A->unit.support_size(); });
}

VerificationReport check_extending_structure(const ExtendingDatum& omega, const CheckOptions& opts) {
    return check_extending_structure(omega, omega.base->basis.window_with_bound(opts.window_bound),
                                     omega.hpart->basis.window_with_bound(opts.window_bound), opts);
}

VerificationReport check_extending_structure(const ExtendingDatum& omega,
                                             const std::vector<BasisId>& wa,
                                             const std::vector<BasisId>& wh,
                                             const CheckOptions& opts) {
    VerificationReport report;
    const HopfData& A = *omega.base;
    const HopfData& H = *omega.hpart;
    const Field& k = A.field;
    report.subject = "extending structure (" + A.name + "; " + H.name + ")";
    report.window_note =
        std::to_string(wa.size()) + " base x " + std::to_string(wh.size()) + " H-part window";

    const LinMap& ract = omega.ract;
    const LinMap& lact = omega.lact;
    const LinMap& coc = omega.cocycle;

    auto basisA = [&](const BasisId& id) { return LinComb::basis(k, id); };
    auto basisH = basisA;

    // h |> 1 = eps(h) 1, 1 |> a = a, 1 <| a = eps(a) 1, h <| 1 = h,
    // f(h,1) = f(1,h) = eps(h) 1, Delta(1_H) = 1_H (x) 1_H.
    report.items.push_back(check_over_tuples(
        "normalization", {wh, wa},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb h = basisH(t[0]), a = basisA(t[1]);
            bool good = lact.apply_lin(h, A.unit) == A.unit.scaled(H.counit.apply(t[0])) &&
                        lact.apply_lin(H.unit, a) == a &&
                        ract.apply_lin(H.unit, a) == H.unit.scaled(A.counit.apply(t[1])) &&
                        ract.apply_lin(h, A.unit) == h &&
                        coc.apply_lin(h, H.unit) == A.unit.scaled(H.counit.apply(t[0])) &&
                        coc.apply_lin(H.unit, h) == A.unit.scaled(H.counit.apply(t[0]));
            if (!good && lhs) {
                *lhs = "a normalization identity fails";
                *rhs = "";
            }
            return good;
        },
        opts));

    {
        CheckItem item;
        item.axiom = "hpart-unit-grouplike";
        LinComb d1 = H.comult.apply_lin(H.unit);
        if (d1 != H.unit.tensor(H.unit) || !(H.counit.apply_lin(H.unit) == Scalar::one(k))) {
            item.status = CheckStatus::Fail;
            item.lhs = d1.to_string();
            item.rhs = H.unit.tensor(H.unit).to_string();
        }
        report.items.push_back(std::move(item));
    }

    // The three structure maps are coalgebra maps.
    report.items.push_back(check_over_tuples(
        "ract-coalgebra-map", {wh, wa},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb out = ract.apply(t[0], t[1]);
            LinComb l = H.comult.apply_lin(out);
            LinComb r = LinComb::zero(k);
            for (const auto& hs : sweedler(H, t[0], 2))
                for (const auto& as : sweedler(A, t[1], 2))
                    r = r + ract.apply(hs.factors[0], as.factors[0])
                                .tensor(ract.apply(hs.factors[1], as.factors[1]))
                                .scaled(hs.coeff * as.coeff);
            bool good = l == r && H.counit.apply_lin(out) == H.counit.apply(t[0]) * A.counit.apply(t[1]);
            if (!good && lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return good;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "lact-coalgebra-map", {wh, wa},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb out = lact.apply(t[0], t[1]);
            LinComb l = A.comult.apply_lin(out);
            LinComb r = LinComb::zero(k);
            for (const auto& hs : sweedler(H, t[0], 2))
                for (const auto& as : sweedler(A, t[1], 2))
                    r = r + lact.apply(hs.factors[0], as.factors[0])
                                .tensor(lact.apply(hs.factors[1], as.factors[1]))
                                .scaled(hs.coeff * as.coeff);
            bool good = l == r && A.counit.apply_lin(out) == H.counit.apply(t[0]) * A.counit.apply(t[1]);
            if (!good && lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return good;
        },
        opts));

    report.items.push_back(check_over_tuples(
        "cocycle-coalgebra-map", {wh, wh},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb out = coc.apply(t[0], t[1]);
            LinComb l = A.comult.apply_lin(out);
            LinComb r = LinComb::zero(k);
            for (const auto& hs : sweedler(H, t[0], 2))
                for (const auto& gs : sweedler(H, t[1], 2))
                    r = r + coc.apply(hs.factors[0], gs.factors[0])
                                .tensor(coc.apply(hs.factors[1], gs.factors[1]))
                                .scaled(hs.coeff * gs.coeff);
            bool good = l == r && A.counit.apply_lin(out) == H.counit.apply(t[0]) * H.counit.apply(t[1]);
            if (!good && lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return good;
        },
        opts));

    // Delta_H and eps_H multiplicative for the H-part product.
    report.items.push_back(check_over_tuples(
        "hpart-comult-multiplicative", {wh, wh},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = H.comult.apply_lin(H.mult.apply(t[0], t[1]));
            LinComb r = tensor_square_mult(H, H.comult.apply(t[0]), H.comult.apply(t[1]));
            bool good = l == r && H.counit.apply_lin(H.mult.apply(t[0], t[1])) ==
                                      H.counit.apply(t[0]) * H.counit.apply(t[1]);
            if (!good && lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return good;
        },
        opts));

    // (H, <|) is a right A-module.
    report.items.push_back(check_over_tuples(
        "ract-module", {wh, wa, wa},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = ract.apply_lin(ract.apply(t[0], t[1]), basisA(t[2]));
            LinComb r = ract.apply_lin(basisH(t[0]), A.mult.apply(t[1], t[2]));
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    // (g . h) . l = (g <| f(h1, l1)) . (h2 . l2)
    report.items.push_back(check_over_tuples(
        "twisted-associativity", {wh, wh, wh},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = H.mult.apply_lin(H.mult.apply(t[0], t[1]), basisH(t[2]));
            LinComb r = LinComb::zero(k);
            for (const auto& hs : sweedler(H, t[1], 2))
                for (const auto& ls : sweedler(H, t[2], 2)) {
                    LinComb twisted =
                        ract.apply_lin(basisH(t[0]), coc.apply(hs.factors[0], ls.factors[0]));
                    r = r + H.mult.apply_lin(twisted, H.mult.apply(hs.factors[1], ls.factors[1]))
                                .scaled(hs.coeff * ls.coeff);
                }
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    // g |> (a b) = (g1 |> a1)[(g2 <| a2) |> b]
    report.items.push_back(check_over_tuples(
        "lact-measuring", {wh, wa, wa},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = lact.apply_lin(basisH(t[0]), A.mult.apply(t[1], t[2]));
            LinComb r = LinComb::zero(k);
            for (const auto& gs : sweedler(H, t[0], 2))
                for (const auto& as : sweedler(A, t[1], 2)) {
                    LinComb inner = lact.apply_lin(ract.apply(gs.factors[1], as.factors[1]), basisA(t[2]));
                    r = r + A.mult.apply_lin(lact.apply(gs.factors[0], as.factors[0]), inner)
                                .scaled(gs.coeff * as.coeff);
                }
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    // (g . h) <| a = [g <| (h1 |> a1)] . (h2 <| a2)
    report.items.push_back(check_over_tuples(
        "ract-twisted-module", {wh, wh, wa},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = ract.apply_lin(H.mult.apply(t[0], t[1]), basisA(t[2]));
            LinComb r = LinComb::zero(k);
            for (const auto& hs : sweedler(H, t[1], 2))
                for (const auto& as : sweedler(A, t[2], 2)) {
                    LinComb gact =
                        ract.apply_lin(basisH(t[0]), lact.apply(hs.factors[0], as.factors[0]));
                    r = r + H.mult.apply_lin(gact, ract.apply(hs.factors[1], as.factors[1]))
                                .scaled(hs.coeff * as.coeff);
                }
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    // [g1 |> (h1 |> a1)] f(g2 <| (h2 |> a2), h3 <| a3) = f(g1, h1)[(g2 . h2) |> a]
    report.items.push_back(check_over_tuples(
        "action-cocycle-exchange", {wh, wh, wa},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = LinComb::zero(k), r = LinComb::zero(k);
            for (const auto& gs : sweedler(H, t[0], 2))
                for (const auto& hs : sweedler(H, t[1], 3))
                    for (const auto& as : sweedler(A, t[2], 3)) {
                        Scalar c = gs.coeff * hs.coeff * as.coeff;
                        LinComb inner = lact.apply(hs.factors[1], as.factors[1]);
                        LinComb left1 = lact.apply_lin(
                            basisH(gs.factors[0]), lact.apply(hs.factors[0], as.factors[0]));
                        LinComb fterm = coc.apply_lin(ract.apply_lin(basisH(gs.factors[1]), inner),
                                                      ract.apply(hs.factors[2], as.factors[2]));
                        l = l + A.mult.apply_lin(left1, fterm).scaled(c);
                    }
            for (const auto& gs : sweedler(H, t[0], 2))
                for (const auto& hs : sweedler(H, t[1], 2)) {
                    Scalar c = gs.coeff * hs.coeff;
                    LinComb prod = H.mult.apply(gs.factors[1], hs.factors[1]);
                    r = r + A.mult
                                .apply_lin(coc.apply(gs.factors[0], hs.factors[0]),
                                           lact.apply_lin(prod, basisA(t[2])))
                                .scaled(c);
                }
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    // (g1 |> f(h1, l1)) f(g2 <| f(h2, l2), h3 . l3) = f(g1, h1) f(g2 . h2, l)
    report.items.push_back(check_over_tuples(
        "cocycle-twisted-condition", {wh, wh, wh},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = LinComb::zero(k), r = LinComb::zero(k);
            for (const auto& gs : sweedler(H, t[0], 2))
                for (const auto& hs : sweedler(H, t[1], 3))
                    for (const auto& ls : sweedler(H, t[2], 3)) {
                        Scalar c = gs.coeff * hs.coeff * ls.coeff;
                        LinComb f1 = coc.apply(hs.factors[0], ls.factors[0]);
                        LinComb f2 = coc.apply(hs.factors[1], ls.factors[1]);
                        LinComb lterm = lact.apply_lin(basisH(gs.factors[0]), f1);
                        LinComb fterm = coc.apply_lin(ract.apply_lin(basisH(gs.factors[1]), f2),
                                                      H.mult.apply(hs.factors[2], ls.factors[2]));
                        l = l + A.mult.apply_lin(lterm, fterm).scaled(c);
                    }
            for (const auto& gs : sweedler(H, t[0], 2))
                for (const auto& hs : sweedler(H, t[1], 2)) {
                    Scalar c = gs.coeff * hs.coeff;
                    r = r + A.mult
                                .apply_lin(coc.apply(gs.factors[0], hs.factors[0]),
                                           coc.apply_lin(H.mult.apply(gs.factors[1], hs.factors[1]),
                                                         basisH(t[2])))
                                .scaled(c);
                }
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    // g1 <| a1 (x) g2 |> a2 = g2 <| a2 (x) g1 |> a1
    report.items.push_back(check_over_tuples(
        "action-symmetry", {wh, wa},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = LinComb::zero(k), r = LinComb::zero(k);
            for (const auto& gs : sweedler(H, t[0], 2))
                for (const auto& as : sweedler(A, t[1], 2)) {
                    Scalar c = gs.coeff * as.coeff;
                    l = l + ract.apply(gs.factors[0], as.factors[0])
                                .tensor(lact.apply(gs.factors[1], as.factors[1]))
                                .scaled(c);
                    r = r + ract.apply(gs.factors[1], as.factors[1])
                                .tensor(lact.apply(gs.factors[0], as.factors[0]))
                                .scaled(c);
                }
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    // g1 . h1 (x) f(g2, h2) = g2 . h2 (x) f(g1, h1)
    report.items.push_back(check_over_tuples(
        "cocycle-symmetry", {wh, wh},
        [&](std::span<const BasisId> t, std::string* lhs, std::string* rhs) {
            LinComb l = LinComb::zero(k), r = LinComb::zero(k);
            for (const auto& gs : sweedler(H, t[0], 2))
                for (const auto& hs : sweedler(H, t[1], 2)) {
                    Scalar c = gs.coeff * hs.coeff;
                    l = l + H.mult.apply(gs.factors[0], hs.factors[0])
                                .tensor(coc.apply(gs.factors[1], hs.factors[1]))
                                .scaled(c);
                    r = r + H.mult.apply(gs.factors[1], hs.factors[1])
                                .tensor(coc.apply(gs.factors[0], hs.factors[0]))
                                .scaled(c);
                }
            if (l == r) return true;
            if (lhs) {
                *lhs = l.to_string();
                *rhs = r.to_string();
            }
            return false;
        },
        opts));

    return report;
}

namespace {

std::size_t sweedler_size(const HopfData& H, const BasisId& x, int n) {
    return sweedler(H, x, n).size();
}

}  // namespace

ProductPtr build_unified_product(DatumPtr omega, bool force) {
    const HopfData& A = *omega->base;
    const HopfData& H = *omega->hpart;
    const Field& k = A.field;
    if (A.field != H.field) fail(Error::Kind::FieldMismatch, "components over different fields");

    if (!force) {
        VerificationReport r = check_extending_structure(*omega);
        if (!r.all_pass())
            fail(Error::Kind::Validation,
                 "extending structure rejected:\n" + r.to_text());
    }

    bool finite = A.basis.is_finite() && H.basis.is_finite();
    HopfPtr Aptr = omega->base;
    HopfPtr Hptr = omega->hpart;
    LinMap ract = omega->ract, lact = omega->lact, coc = omega->cocycle;

    // (a x| h)(c x| g) = a (h1 |> c1) f(h2 <| c2, g1) x| (h3 <| c3) . g2
    auto mult_fn = [Aptr, Hptr, ract, lact, coc, k](std::span<const BasisId> args) {
        const BasisId& x = args[0];
        const BasisId& y = args[1];
        if (!x.is_tuple() || !y.is_tuple()) fail(Error::Kind::Domain, "product expects pair ids");
        const BasisId& a = x.parts()[0];
        const BasisId& h = x.parts()[1];
        const BasisId& c = y.parts()[0];
        const BasisId& g = y.parts()[1];
        LinComb out = LinComb::zero(k);
        for (const auto& hs : sweedler(*Hptr, h, 3))
            for (const auto& cs : sweedler(*Aptr, c, 3))
                for (const auto& gs : sweedler(*Hptr, g, 2)) {
                    Scalar coeff = hs.coeff * cs.coeff * gs.coeff;
                    LinComb acted = lact.apply(hs.factors[0], cs.factors[0]);
                    LinComb twisted = ract.apply(hs.factors[1], cs.factors[1]);
                    LinComb fval = coc.apply_lin(twisted, LinComb::basis(k, gs.factors[0]));
                    LinComb left = Aptr->mult.apply_lin(
                        Aptr->mult.apply_lin(LinComb::basis(k, a), acted), fval);
                    LinComb right = Hptr->mult.apply_lin(ract.apply(hs.factors[2], cs.factors[2]),
                                                         LinComb::basis(k, gs.factors[1]));
                    out = out + left.tensor(right).scaled(coeff);
                }
        return out;
    };
    auto mult_bound = [Aptr, Hptr](std::span<const BasisId> args) {
        return sweedler_size(*Hptr, args[0].parts()[1], 3) * sweedler_size(*Aptr, args[1].parts()[0], 3) *
               sweedler_size(*Hptr, args[1].parts()[1], 2) * std::size_t{16};
    };

    BasisDesc basis = BasisDesc::finite({});
    std::vector<BasisId> pair_elems;
    if (finite) {
        for (const auto& a : A.basis.elements())
            for (const auto& h : H.basis.elements()) pair_elems.push_back(BasisId::pair(a, h));
        basis = BasisDesc::finite(pair_elems);
    } else {
        basis = BasisDesc::pair_of(std::make_shared<const BasisDesc>(A.basis),
                                   std::make_shared<const BasisDesc>(H.basis));
    }

    LinMap mult = finite_or_rule(2, k, finite, {pair_elems, pair_elems}, mult_fn, mult_bound);
    LinMap comult = tensor_coalgebra_comult(Aptr, Hptr);
    ScalarMap counit = tensor_coalgebra_counit(Aptr, Hptr);
    if (finite) {
        // Materialize coalgebra tables for speed and serializability.
        std::map<std::vector<BasisId>, LinComb> ct;
        std::map<std::vector<BasisId>, Scalar> et;
        for (const auto& id : pair_elems) {
            ct.emplace(std::vector<BasisId>{id}, comult.apply(id));
            Scalar e = counit.apply(id);
            if (!e.is_zero()) et.emplace(std::vector<BasisId>{id}, e);
        }
        comult = LinMap::table(1, k, std::move(ct));
        counit = ScalarMap::table(1, k, std::move(et));
    }

    LinComb unit = Aptr->unit.tensor(Hptr->unit);

    std::optional<LinMap> antipode;
    if (A.has_antipode() && H.has_antipode()) {
        LinMap SA = *A.antipode;
        LinMap SH = *H.antipode;
        auto anti_fn = [Aptr, Hptr, SA, SH, coc, mult, k](std::span<const BasisId> args) {
            const BasisId& a = args[0].parts()[0];
            const BasisId& g = args[0].parts()[1];
            // (S_A[f(S_H(g2), g3)] x| S_H(g1)) . (S_A(a) x| 1_H)
            LinComb first = LinComb::zero(k);
            for (const auto& gs : sweedler(*Hptr, g, 3)) {
                LinComb sh2 = SH.apply(gs.factors[1]);
                LinComb fv = coc.apply_lin(sh2, LinComb::basis(k, gs.factors[2]));
                LinComb sa = SA.apply_lin(fv);
                first = first + sa.tensor(SH.apply(gs.factors[0])).scaled(gs.coeff);
            }
            LinComb second = SA.apply(a).tensor(Hptr->unit);
            return mult.apply_lin(first, second);
        };
        auto anti_bound = [Aptr, Hptr](std::span<const BasisId> args) {
            return sweedler_size(*Hptr, args[0].parts()[1], 3) * Aptr->basis.window().size() *
                       Hptr->basis.window().size() +
                   std::size_t{64};
        };
        antipode = finite_or_rule(1, k, finite, {pair_elems}, anti_fn, anti_bound);
    }

    auto data = std::make_shared<HopfData>(
        A.name + "|x|" + H.name, k, std::move(basis), std::move(mult), std::move(unit),
        std::move(comult), std::move(counit), std::move(antipode), A.meta);

    auto prod = std::make_shared<ProductAlgebra>();
    prod->hopf = std::move(data);
    prod->provenance = Provenance::Unified;
    prod->datum = std::move(omega);
    return prod;
}

ProductPtr build_double_cross(HopfPtr A, HopfPtr H, LinMap lact, LinMap ract, bool force) {
    auto omega = std::make_shared<const ExtendingDatum>(A, H, std::move(ract), std::move(lact),
                                                        trivial_cocycle(A, H));
    auto prod = build_unified_product(omega, force);
    auto out = std::make_shared<ProductAlgebra>(*prod);
    out->provenance = Provenance::DoubleCross;
    return out;
}

ProductPtr build_crossed_product(HopfPtr A, HopfPtr H, LinMap lact, LinMap cocycle, bool force) {
    auto omega = std::make_shared<const ExtendingDatum>(A, H, trivial_ract(A, H), std::move(lact),
                                                        std::move(cocycle));
    auto prod = build_unified_product(omega, force);
    auto out = std::make_shared<ProductAlgebra>(*prod);
    out->provenance = Provenance::Crossed;
    return out;
}

std::pair<LinMap, LinMap> matched_pair_from_pairing(const BilinearForm& lambda) {
    HopfPtr H = lambda.left();
    HopfPtr A = lambda.right();
    Field k = lambda.field();
    BilinearForm inv = convolution_inverse(lambda);

    auto ract_fn = [H, A, lambda, inv, k](std::span<const BasisId> args) {
        LinComb out = LinComb::zero(k);
        for (const auto& hs : sweedler(*H, args[0], 3))
            for (const auto& as : sweedler(*A, args[1], 2))
                out.add_term(hs.factors[1], hs.coeff * as.coeff * inv(hs.factors[0], as.factors[0]) *
                                                lambda(hs.factors[2], as.factors[1]));
        return out;
    };
    auto lact_fn = [H, A, lambda, inv, k](std::span<const BasisId> args) {
        LinComb out = LinComb::zero(k);
        for (const auto& hs : sweedler(*H, args[0], 2))
            for (const auto& as : sweedler(*A, args[1], 3))
                out.add_term(as.factors[1], hs.coeff * as.coeff * inv(hs.factors[0], as.factors[0]) *
                                                lambda(hs.factors[1], as.factors[2]));
        return out;
    };

    bool finite = A->basis.is_finite() && H->basis.is_finite();
    std::vector<std::vector<BasisId>> domain;
    if (finite) domain = {H->basis.elements(), A->basis.elements()};
    auto ract_bound = [H](std::span<const BasisId> args) { return sweedler_size(*H, args[0], 3); };
    auto lact_bound = [A](std::span<const BasisId> args) { return sweedler_size(*A, args[1], 3); };
    LinMap ract = finite ? finite_or_rule(2, k, true, domain, ract_fn, {})
                         : LinMap::rule(2, k, ract_fn, ract_bound);
    LinMap lact = finite ? finite_or_rule(2, k, true, domain, lact_fn, {})
                         : LinMap::rule(2, k, lact_fn, lact_bound);
    return {std::move(ract), std::move(lact)};
}

ProductPtr build_gqd(HopfPtr A, HopfPtr H, const BilinearForm& lambda, bool force) {
    if (lambda.left().get() != H.get() || lambda.right().get() != A.get())
        fail(Error::Kind::Domain, "pairing orientation must be (H, A) for the quantum double");
    if (!force) {
        VerificationReport r = check_skew_pairing(lambda);
        if (!r.all_pass())
            fail(Error::Kind::Validation, "inducing pairing is not a skew pairing:\n" + r.to_text());
    }
    auto [ract, lact] = matched_pair_from_pairing(lambda);
    auto prod = build_double_cross(A, H, std::move(lact), std::move(ract), force);
    auto out = std::make_shared<ProductAlgebra>(*prod);
    out->provenance = Provenance::Gqd;
    out->pairing = lambda;
    return out;
}

BilinearForm evaluation_pairing(HopfPtr H, HopfPtr dual_op) {
    Field k = H->field;
    ScalarMap values = ScalarMap::rule(2, k, [k](std::span<const BasisId> args) {
        // (h, alpha) with alpha a starred copy of a basis id of H.
        const BasisId& h = args[0];
        const BasisId& al = args[1];
        std::string base = al.name();
        if (base.empty() || base.back() != '*') fail(Error::Kind::Domain, "expected a dual basis id");
        base.pop_back();
        return (h.name() == base && h.index() == al.index()) ? Scalar::one(k) : Scalar::zero(k);
    });
    return BilinearForm("eval", H, dual_op, std::move(values));
}

ProductPtr coadjoint_double(HopfPtr H) {
    if (!H->basis.is_finite()) fail(Error::Kind::Domain, "coadjoint double needs a finite basis");
    if (!H->has_antipode()) fail(Error::Kind::Domain, "coadjoint double needs an antipode");
    Field k = H->field;

    HopfPtr Hd = dual(H);          // carries S* and the H* product
    HopfPtr A = op_cop(Hd, OpCop::Op);

    const auto& hbasis = H->basis.elements();
    const auto& abasis = A->basis.elements();
    std::map<BasisId, std::size_t> hpos;
    for (std::size_t i = 0; i < hbasis.size(); ++i) hpos.emplace(hbasis[i], i);

    // <alpha, u> for a dual basis id alpha = i*: the coefficient of e_i in u.
    auto eval_dual_at = [&](const BasisId& alpha, const LinComb& u) {
        std::string base = alpha.name();
        base.pop_back();
        return u.coeff(BasisId(base, alpha.index()));
    };
    // <h, beta> for beta a combination of dual ids: the h-coefficient.
    auto eval_at_h = [&](const LinComb& beta, const BasisId& h) {
        return beta.coeff(BasisId(h.name() + "*", h.index()));
    };

    // h <| alpha = h2 <alpha, S(h1) h3>
    std::map<std::vector<BasisId>, LinComb> ract_table;
    for (const auto& h : hbasis)
        for (const auto& al : abasis) {
            LinComb out = LinComb::zero(k);
            for (const auto& hs : sweedler(*H, h, 3)) {
                LinComb prod = H->mult.apply_lin(H->antipode->apply(hs.factors[0]),
                                                 LinComb::basis(k, hs.factors[2]));
                out.add_term(hs.factors[1], hs.coeff * eval_dual_at(al, prod));
            }
            if (!out.is_zero()) ract_table.emplace(std::vector<BasisId>{h, al}, std::move(out));
        }

    // h |> alpha = alpha2 <h, S*(alpha1) alpha3>   (product taken in H*)
    std::map<std::vector<BasisId>, LinComb> lact_table;
    for (const auto& h : hbasis)
        for (const auto& al : abasis) {
            LinComb out = LinComb::zero(k);
            for (const auto& as : sweedler(*Hd, al, 3)) {
                LinComb prod = Hd->mult.apply_lin(Hd->antipode->apply(as.factors[0]),
                                                  LinComb::basis(k, as.factors[2]));
                out.add_term(as.factors[1], as.coeff * eval_at_h(prod, h));
            }
            if (!out.is_zero()) lact_table.emplace(std::vector<BasisId>{h, al}, std::move(out));
        }

    LinMap ract = LinMap::table(2, k, std::move(ract_table));
    LinMap lact = LinMap::table(2, k, std::move(lact_table));
    auto prod = build_double_cross(A, H, std::move(lact), std::move(ract));
    auto out = std::make_shared<ProductAlgebra>(*prod);
    out->provenance = Provenance::CoadjointDouble;
    out->pairing = evaluation_pairing(H, A);
    return out;
}

ProductPtr tensor_product(HopfPtr A, HopfPtr H) {
    auto prod = build_double_cross(A, H, trivial_lact(A, H), trivial_ract(A, H));
    auto out = std::make_shared<ProductAlgebra>(*prod);
    out->provenance = Provenance::Tensor;
    return out;
}

}  // namespace hopf
