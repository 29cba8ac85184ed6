#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/catalog.hpp"

using namespace hopf;

namespace {

std::vector<BasisId> kz_window(long bound) {
    std::vector<BasisId> w;
    for (long t = -bound; t <= bound; ++t) w.push_back(BasisId("g", {t}));
    return w;
}

std::vector<BasisId> kx_window(long bound) {
    std::vector<BasisId> w;
    for (long n = 0; n <= bound; ++n) w.push_back(BasisId("X", {n}));
    return w;
}

}  // namespace

TEST_CASE("power pairing between the polynomial and group algebras") {
    Field f = Field::rational_functions({"q"});
    HopfPtr kz = make_group_algebra_kZ(f);
    HopfPtr kx = make_binomial_kX(f);
    BilinearForm lambda = kx_kz_pairing(kx, kz);
    CHECK(lambda(BasisId("X", {3}), BasisId("g", {2})) == Scalar::from_long(f, 8));
    CHECK(lambda(BasisId("X", {0}), BasisId("g", {0})).is_one());  // t^0 = 1 at t = 0
    CHECK(lambda(BasisId("X", {2}), BasisId("g", {0})).is_zero());

    VerificationReport r = check_skew_pairing(lambda, kx_window(5), kz_window(4));
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("Borel pairing at rank two") {
    Fixture fx = load_fixture("Borel(2)");
    const BilinearForm& lambda = fx.form("lambda");
    CHECK(lambda(BasisId("c"), BasisId("c")) == Scalar::from_long(lambda.field(), -1));
    CHECK(lambda(BasisId("y1"), BasisId("x1")).is_one());
    CHECK(lambda(BasisId("y1"), BasisId("x2")).is_zero());
    CHECK(lambda(BasisId("y2"), BasisId("x2")).is_one());
    VerificationReport r = check_skew_pairing(lambda);
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("counit product is always a skew pairing") {
    Field f = Field::rationals();
    HopfPtr h4 = make_sweedler_h4(f);
    HopfPtr z4 = make_cyclic_group_algebra(f, 4);
    BilinearForm triv = BilinearForm::counit_product(h4, z4);
    CHECK(check_skew_pairing(triv).all_pass());
}

TEST_CASE("convolution inverses") {
    Field f = Field::rational_functions({"alpha", "q"});
    HopfPtr kz = make_group_algebra_kZ(f);
    HopfPtr kx = make_binomial_kX(f);

    SUBCASE("inverse of the trivial pairing is trivial") {
        BilinearForm triv = BilinearForm::counit_product(kx, kz);
        BilinearForm inv = convolution_inverse(triv);
        for (const auto& a : kx_window(4))
            for (const auto& b : kz_window(3)) CHECK(inv(a, b) == triv(a, b));
    }

    SUBCASE("inverse of the power pairing carries the antipode sign") {
        BilinearForm lambda = kx_kz_pairing(kx, kz);
        BilinearForm inv = convolution_inverse(lambda);
        for (long m = 0; m <= 5; ++m)
            for (long t = -3; t <= 3; ++t) {
                Scalar want = m == 0 ? Scalar::one(f) : Scalar::from_long(f, -t).pow(m);
                CHECK(inv(BasisId("X", {m}), BasisId("g", {t})) == want);
            }
    }

    SUBCASE("family pairing convolves to the counit product on every pair") {
        Field fa = Field::rational_functions({"alpha"});
        HopfPtr h4 = make_sweedler_h4(fa);
        BilinearForm p = h4_braiding(h4, "alpha");
        BilinearForm inv = convolution_inverse(p);
        BilinearForm both = convolve_forms(p, inv);
        BilinearForm other = convolve_forms(inv, p);
        for (const auto& a : h4->basis.elements())
            for (const auto& b : h4->basis.elements()) {
                Scalar want = h4->counit.apply(a) * h4->counit.apply(b);
                CHECK(both(a, b) == want);
                CHECK(other(a, b) == want);
            }
    }
}

TEST_CASE("flip duals stay skew pairings") {
    SUBCASE("trivial") {
        Field f = Field::rationals();
        HopfPtr h4 = make_sweedler_h4(f);
        BilinearForm triv = BilinearForm::counit_product(h4, h4);
        BilinearForm fd = flip_dual(triv);
        for (const auto& a : h4->basis.elements())
            for (const auto& b : h4->basis.elements()) CHECK(fd(a, b) == triv(a, b));
    }
    SUBCASE("polynomial/group pairing") {
        Field f = Field::rational_functions({"q"});
        HopfPtr kz = make_group_algebra_kZ(f);
        HopfPtr kx = make_binomial_kX(f);
        BilinearForm fd = flip_dual(kx_kz_pairing(kx, kz));
        CHECK(fd.left() == kz);
        VerificationReport r = check_skew_pairing(fd, kz_window(3), kx_window(4));
        INFO(r.to_text());
        CHECK(r.all_pass());
    }
    SUBCASE("family braiding") {
        Field f = Field::rational_functions({"alpha"});
        HopfPtr h4 = make_sweedler_h4(f);
        BilinearForm fd = flip_dual(h4_braiding(h4, "alpha"));
        CHECK(check_skew_pairing(fd).all_pass());
    }
}

TEST_CASE("group algebra power braiding") {
    Field f = Field::rational_functions({"q"});
    HopfPtr kz = make_group_algebra_kZ(f);
    BilinearForm p = kz_power_braiding(kz, "q");
    VerificationReport r = check_braiding(p, kz_window(4));
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("family braiding on the Sweedler algebra, symbolically") {
    Field f = Field::rational_functions({"alpha"});
    HopfPtr h4 = make_sweedler_h4(f);
    BilinearForm p = h4_braiding(h4, "alpha");
    VerificationReport r = check_braiding(p);
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("trivial form is not a braiding on a noncommutative algebra") {
    Field f = Field::rationals();
    HopfPtr h4 = make_sweedler_h4(f);
    BilinearForm triv = BilinearForm::counit_product(h4, h4);
    VerificationReport r = check_braiding(triv);
    const CheckItem* comm = r.find("braiding-commutation");
    REQUIRE(comm != nullptr);
    CHECK(comm->status == CheckStatus::Fail);
    REQUIRE(comm->witness.size() == 2);

    // The reported witness must be a real counterexample, and (x, g) is one.
    auto violates = [&](const BasisId& x, const BasisId& y) {
        LinComb l = LinComb::zero(f), rr = LinComb::zero(f);
        for (const auto& xs : sweedler(*h4, x, 2))
            for (const auto& ys : sweedler(*h4, y, 2)) {
                Scalar c = xs.coeff * ys.coeff;
                l = l + h4->mult.apply(xs.factors[1], ys.factors[1])
                            .scaled(c * triv(xs.factors[0], ys.factors[0]));
                rr = rr + h4->mult.apply(ys.factors[0], xs.factors[0])
                              .scaled(c * triv(xs.factors[1], ys.factors[1]));
            }
        return l != rr;
    };
    CHECK(violates(comm->witness[0], comm->witness[1]));
    CHECK(violates(BasisId("x"), BasisId("g")));
}

TEST_CASE("diagonal braiding on the binomial coalgebra") {
    Fixture fx = load_fixture("kX");
    const BilinearForm& tau = fx.form("tau");
    Field f = tau.field();
    CHECK(tau(BasisId("X", {1}), BasisId("X", {1})) == Scalar::parameter(f, "alpha"));
    CHECK(tau(BasisId("X", {2}), BasisId("X", {3})).is_zero());
    CHECK(tau(BasisId("X", {3}), BasisId("X", {3})) == Scalar::parse(f, "6*alpha^3"));

    VerificationReport r = check_tau_on_kX(tau, kx_window(8));
    INFO(r.to_text());
    CHECK(r.all_pass());
}

TEST_CASE("diagonal braiding rejects positive characteristic") {
    Field f3 = Field::prime(3);
    HopfPtr kx = make_binomial_kX(f3);
    std::map<std::vector<BasisId>, Scalar> t;
    BilinearForm tau("tau", kx, kx, ScalarMap::table(2, f3, std::move(t)));
    CHECK_THROWS_AS((void)check_tau_on_kX(tau, kx_window(4)), Error);
}

TEST_CASE("braidings restrict to skew pairings") {
    Fixture fx = load_fixture("Borel(1)");
    for (const char* key : {"p", "tau"}) {
        VerificationReport r = check_skew_pairing(fx.form(key));
        INFO(key, ": ", r.to_text());
        CHECK(r.all_pass());
    }
    CHECK(check_braiding(fx.form("p")).all_pass());
    CHECK(check_braiding(fx.form("tau")).all_pass());
}

TEST_CASE("Borel rank-two braidings pass symbolically") {
    Fixture fx = load_fixture("Borel(2)");
    VerificationReport rp = check_braiding(fx.form("p"));
    INFO(rp.to_text());
    CHECK(rp.all_pass());
    VerificationReport rt = check_braiding(fx.form("tau"));
    INFO(rt.to_text());
    CHECK(rt.all_pass());
}
