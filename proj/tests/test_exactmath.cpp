#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopf/catalog.hpp"
#include "hopf/linmap.hpp"

using namespace hopf;

TEST_CASE("rational arithmetic") {
    Field q = Field::rationals();
    Scalar half = Scalar::parse(q, "1/2");
    Scalar third = Scalar::parse(q, "1/3");
    CHECK((half + third).to_string() == "5/6");
    CHECK(Scalar::parse(q, "-3/4").to_string() == "-3/4");
    CHECK((half * Scalar::from_long(q, 2)).is_one());
}

TEST_CASE("monomial products and inverses in parameter fields") {
    Field f = Field::rational_functions({"q", "a_11"});
    Scalar qq = Scalar::parameter(f, "q");
    CHECK((qq * qq).to_string() == "q^2");
    Scalar a11 = Scalar::parameter(f, "a_11");
    CHECK(a11.inverse().to_string() == "(1)/(a_11)");
    CHECK((a11.inverse() * a11).is_one());
    Scalar e = Scalar::parse(f, "(q+1)/(q-1)");
    CHECK((e * Scalar::parse(f, "q-1")).to_string() == "q+1");
    CHECK(Scalar::parse(f, "2*q^3+q^2+1").to_string() == "2*q^3+q^2+1");
}

TEST_CASE("fraction reduction finds polynomial gcds") {
    Field f = Field::rational_functions({"q"});
    // (q^2 - 1) / (q - 1) = q + 1
    Scalar v = Scalar::parse(f, "(q^2-1)/(q-1)");
    CHECK(v.to_string() == "q+1");
    Scalar w = Scalar::parse(f, "(q^2+2*q+1)/(q+1)");
    CHECK(w.to_string() == "q+1");
}

TEST_CASE("prime field arithmetic") {
    Field f5 = Field::prime(5);
    Scalar a = Scalar::from_long(f5, 3);
    CHECK((a + a).residue() == 1);
    CHECK((a.inverse() * a).is_one());
    CHECK_THROWS_AS(Scalar::zero(f5).inverse(), Error);
    CHECK_THROWS_AS((void)Field::prime(6), Error);
}

TEST_CASE("field tags do not mix") {
    Scalar a = Scalar::one(Field::rationals());
    Scalar b = Scalar::one(Field::prime(3));
    CHECK_THROWS_AS((void)(a + b), Error);
}

TEST_CASE("field axioms hold on randomized triples") {
    std::mt19937_64 rng(20240811);
    auto rnd_rat = [&](const Field& f) {
        if (f.kind() == FieldKind::Prime)
            return Scalar::from_long(f, static_cast<long>(rng() % f.prime_modulus()));
        long num = static_cast<long>(rng() % 199) - 99;
        long den = 1 + static_cast<long>(rng() % 40);
        return Scalar::from_rational(f, Rat(num, den));
    };
    Field fq = Field::rationals();
    Field fp = Field::prime(7);
    Field ff = Field::rational_functions({"a", "b"});
    auto rnd_fn = [&](const Field& f) {
        Scalar acc = rnd_rat(f);
        Scalar a = Scalar::parameter(f, "a");
        Scalar b = Scalar::parameter(f, "b");
        acc = acc + a.pow(static_cast<long>(rng() % 3)) * Scalar::from_long(f, static_cast<long>(rng() % 5));
        acc = acc + b.pow(static_cast<long>(rng() % 2)) * Scalar::from_long(f, static_cast<long>(rng() % 3));
        return acc;
    };

    for (int i = 0; i < 1000; ++i) {
        for (int mode = 0; mode < 3; ++mode) {
            Field f = mode == 0 ? fq : mode == 1 ? fp : ff;
            Scalar x = mode == 2 ? rnd_fn(f) : rnd_rat(f);
            Scalar y = mode == 2 ? rnd_fn(f) : rnd_rat(f);
            Scalar z = mode == 2 ? rnd_fn(f) : rnd_rat(f);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + (-x) == Scalar::zero(f));
            if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
        }
    }
}

TEST_CASE("canonicalization is idempotent through parse/print") {
    Field f = Field::rational_functions({"alpha", "q"});
    for (const char* lit : {"q^2+1", "(q+1)/(q-1)", "-3/4", "2*q^3", "alpha*q-alpha",
                            "(alpha^2-1)/(alpha+1)", "0", "1/2*q"}) {
        Scalar s = Scalar::parse(f, lit);
        Scalar again = Scalar::parse(f, s.to_string());
        CHECK(s == again);
        CHECK(s.to_string() == again.to_string());
    }
}

TEST_CASE("linear combinations stay canonical") {
    Field f = Field::rationals();
    LinComb u = LinComb::monomial(f, BasisId("g"), Scalar::from_long(f, 2));
    LinComb v = LinComb::monomial(f, BasisId("g"), Scalar::from_long(f, 3));
    LinComb sum = u + v;
    CHECK(sum.coeff(BasisId("g")) == Scalar::from_long(f, 5));
    CHECK(sum.support_size() == 1);

    LinComb cancel = sum + sum.scaled(Scalar::from_long(f, -1));
    CHECK(cancel.is_zero());

    LinComb t = LinComb::basis(f, BasisId("g")).tensor(LinComb::basis(f, BasisId("x")));
    CHECK(t.support_size() == 1);
    CHECK(t.terms().begin()->first.is_tuple());

    CHECK(LinComb::basis(f, BasisId("g")).scaled(Scalar::zero(f)).is_zero());
}

TEST_CASE("convolution: counit is the unit, group-like character squares") {
    Field f = Field::rationals();
    HopfPtr z2 = make_cyclic_group_algebra(f, 2);
    BasisId e0("g", {0}), e1("g", {1});

    ScalarMap eps = z2->counit;
    ScalarMap chi = ScalarMap::rule(1, f, [f](std::span<const BasisId> args) {
        return args[0].index()[0] == 0 ? Scalar::one(f) : Scalar::from_long(f, -1);
    });

    ScalarMap left = convolve(eps, chi, z2->comult);
    CHECK(left.apply(e1) == chi.apply(e1));
    CHECK(left.apply(e0) == chi.apply(e0));

    // chi * chi on a group-like equals chi^2 pointwise.
    ScalarMap sq = convolve(chi, chi, z2->comult);
    CHECK(sq.apply(e1) == Scalar::one(f));
}

TEST_CASE("convolution is associative and unital on a window") {
    Field f = Field::rationals();
    HopfPtr h4 = make_sweedler_h4(f);
    std::mt19937_64 rng(7);
    auto random_map = [&] {
        std::map<std::vector<BasisId>, Scalar> t;
        for (const auto& id : h4->basis.elements())
            t.emplace(std::vector<BasisId>{id},
                      Scalar::from_long(f, static_cast<long>(rng() % 7) - 3));
        return ScalarMap::table(1, f, std::move(t));
    };
    for (int trial = 0; trial < 20; ++trial) {
        ScalarMap a = random_map(), b = random_map(), c = random_map();
        ScalarMap ab_c = convolve(convolve(a, b, h4->comult), c, h4->comult);
        ScalarMap a_bc = convolve(a, convolve(b, c, h4->comult), h4->comult);
        ScalarMap ea = convolve(h4->counit, a, h4->comult);
        for (const auto& id : h4->basis.elements()) {
            CHECK(ab_c.apply(id) == a_bc.apply(id));
            CHECK(ea.apply(id) == a.apply(id));
        }
    }
}

TEST_CASE("pairing convolved with its inverse gives the counit product") {
    Field f = Field::rational_functions({"alpha"});
    HopfPtr h4 = make_sweedler_h4(f);
    BilinearForm p = h4_braiding(h4, "alpha");
    BilinearForm inv = convolution_inverse(p);
    BilinearForm conv = convolve_forms(p, inv);
    for (const auto& a : h4->basis.elements())
        for (const auto& b : h4->basis.elements()) {
            Scalar want = h4->counit.apply(a) * h4->counit.apply(b);
            CHECK(conv(a, b) == want);
        }
}

TEST_CASE("rule-backed maps enforce their support certificate") {
    Field f = Field::rationals();
    LinMap bad = LinMap::rule(
        1, f,
        [f](std::span<const BasisId>) {
            LinComb out = LinComb::zero(f);
            out.add_term(BasisId("a"), Scalar::one(f));
            out.add_term(BasisId("b"), Scalar::one(f));
            return out;
        },
        [](std::span<const BasisId>) { return std::size_t{1}; });
    CHECK_THROWS_AS((void)bad.apply(BasisId("x")), Error);
}
