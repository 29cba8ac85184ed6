#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/catalog.hpp"
#include "hopf/dual.hpp"
#include "hopf/hzf.hpp"

using namespace hopf;

TEST_CASE("Sweedler algebra passes every axiom") {
    Field f = Field::rationals();
    HopfPtr h4 = make_sweedler_h4(f);
    VerificationReport r = check_hopf(*h4);
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("sign-flipped multiplication is caught with a witness") {
    Field f = Field::rationals();
    HopfPtr good = make_sweedler_h4(f);
    // Rebuild with x g = +gx instead of -gx.
    std::map<std::vector<BasisId>, LinComb> mult;
    for (const auto& a : good->basis.elements())
        for (const auto& b : good->basis.elements()) {
            LinComb v = good->mult.apply(a, b);
            if (!v.is_zero()) mult.emplace(std::vector<BasisId>{a, b}, v);
        }
    mult.insert_or_assign(std::vector<BasisId>{BasisId("x"), BasisId("g")},
                          LinComb::basis(f, BasisId("gx")));
    HopfData bad("H4-broken", f, good->basis, LinMap::table(2, f, std::move(mult)), good->unit,
                 good->comult, good->counit, good->antipode);
    VerificationReport r = check_hopf(bad);
    CHECK_FALSE(r.all_pass());

    // The report's witness must be independently re-checkable.
    bool some_fail_with_witness = false;
    for (const auto& item : r.items)
        if (item.status == CheckStatus::Fail && !item.witness.empty()) some_fail_with_witness = true;
    CHECK(some_fail_with_witness);

    // The flip breaks associativity at (g, x, g): (gx)g vs g(xg).
    LinComb left = bad.mult.apply_lin(bad.mult.apply(BasisId("g"), BasisId("x")),
                                      LinComb::basis(f, BasisId("g")));
    LinComb right = bad.mult.apply_lin(LinComb::basis(f, BasisId("g")),
                                       bad.mult.apply(BasisId("x"), BasisId("g")));
    CHECK(left != right);
}

TEST_CASE("rule-backed group algebra verifies on a window") {
    Field f = Field::rationals();
    HopfPtr kz = make_group_algebra_kZ(f, 5);
    VerificationReport r = check_hopf(*kz);
    INFO(r.to_text());
    CHECK(r.all_pass());
    CHECK(r.window_note.find("window") != std::string::npos);
}

TEST_CASE("binomial coalgebra verifies on a window") {
    Field f = Field::rationals();
    HopfPtr kx = make_binomial_kX(f, 6);
    VerificationReport r = check_hopf(*kx);
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("dual of the order-two group algebra is the character algebra") {
    Field f = Field::rationals();
    HopfPtr z2 = make_cyclic_group_algebra(f, 2);
    HopfPtr d = dual(z2);
    CHECK(check_hopf(*d).all_pass());

    // delta-basis products are idempotents; characters e = d0 + d1 and
    // chi = d0 - d1 are group-like and chi^2 = e, so the dual is again the
    // order-two group algebra.
    BasisId d0("g*", {0}), d1("g*", {1});
    CHECK(d->mult.apply(d0, d0) == LinComb::basis(f, d0));
    CHECK(d->mult.apply(d0, d1).is_zero());
    LinComb e = LinComb::basis(f, d0) + LinComb::basis(f, d1);
    LinComb chi = LinComb::basis(f, d0) - LinComb::basis(f, d1);
    CHECK(d->unit == e);
    CHECK(d->mult.apply_lin(chi, chi) == e);
    CHECK(d->comult.apply_lin(chi) == chi.tensor(chi));
}

TEST_CASE("dual of the Sweedler algebra is a Hopf algebra and double dual returns") {
    Field f = Field::rationals();
    HopfPtr h4 = make_sweedler_h4(f);
    HopfPtr d = dual(h4);
    VerificationReport r = check_hopf(*d);
    INFO(r.to_text());
    CHECK(r.all_pass());

    HopfPtr dd = dual(d);
    // Compare structure constants under the relabeling e ↦ e**.
    for (const auto& a : h4->basis.elements())
        for (const auto& b : h4->basis.elements()) {
            LinComb expect = LinComb::zero(f);
            for (const auto& [id, c] : h4->mult.apply(a, b).terms())
                expect.add_term(BasisId(id.name() + "**", id.index()), c);
            LinComb got = dd->mult.apply(BasisId(a.name() + "**", a.index()),
                                         BasisId(b.name() + "**", b.index()));
            CHECK(got == expect);
        }
}

TEST_CASE("opposite of a commutative algebra is itself") {
    Field f = Field::rationals();
    HopfPtr z3 = make_cyclic_group_algebra(f, 3);
    HopfPtr op = op_cop(z3, OpCop::Op);
    CHECK(structure_equal(*z3, *op, z3->basis.elements()).all_pass());
}

TEST_CASE("opposite Sweedler algebra is a Hopf algebra with inverted antipode") {
    Field f = Field::rationals();
    HopfPtr h4 = make_sweedler_h4(f);
    HopfPtr op = op_cop(h4, OpCop::Op);
    CHECK(op->mult.apply(BasisId("x"), BasisId("g")) == h4->mult.apply(BasisId("g"), BasisId("x")));
    VerificationReport r = check_hopf(*op);
    INFO(r.to_text());
    CHECK(r.all_pass());

    HopfPtr cop2 = op_cop(op_cop(h4, OpCop::Cop), OpCop::Cop);
    CHECK(structure_equal(*h4, *cop2, h4->basis.elements()).all_pass());
}

TEST_CASE("antipode properties on windows") {
    Field f = Field::rationals();
    for (HopfPtr H : {make_sweedler_h4(f), make_cyclic_group_algebra(f, 4)}) {
        // eps o S = eps and S(1) = 1.
        for (const auto& x : H->basis.elements()) {
            Scalar lhs = H->counit.apply_lin(H->antipode->apply(x));
            CHECK(lhs == H->counit.apply(x));
        }
        CHECK(H->antipode->apply_lin(H->unit) == H->unit);
    }
}
